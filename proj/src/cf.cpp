#include "triseq/cf.hpp"

namespace triseq {

namespace {

void check_unit_interval(const BigRational& x) {
    if (x <= 0 || x > 1) throw OutOfDomain("expected 0 < x <= 1");
}

}  // namespace

std::pair<BigInt, BigRational> gauss_step(const BigRational& x) {
    check_unit_interval(x);
    BigRational inv = 1 / x;
    BigInt k = rational_floor(inv);
    return {k, inv - BigRational(k)};
}

CFExpansion cf_expand(const BigRational& x, std::size_t max_terms) {
    check_unit_interval(x);
    CFExpansion out;
    BigRational cur = x;
    while (out.digits.size() < max_terms) {
        auto [k, rem] = gauss_step(cur);
        out.digits.push_back(k);
        if (rem == 0) {
            out.terminated = true;
            break;
        }
        cur = rem;
    }
    return out;
}

CFExpansion cf_geometric(const BigRational& x, std::size_t max_terms,
                         std::vector<std::array<BigInt, 2>>* trace) {
    check_unit_interval(x);
    const BigInt p = numerator(x);
    const BigInt q = denominator(x);

    // side(V) = q*vy - p*vx, the exact sign of V against the line y = alpha x.
    // V_{-1} = (0, 1) gives q > 0; V_0 = (1, 0) gives -p < 0.
    std::array<BigInt, 2> v_prev{0, 1};  // V_{n-2}
    std::array<BigInt, 2> v_cur{1, 0};   // V_{n-1}
    BigInt s_prev = q;
    BigInt s_cur = -p;

    CFExpansion out;
    while (out.digits.size() < max_terms) {
        // Largest a with sign(s_prev + a*s_cur) matching s_prev or zero.
        BigInt a = floor_div(s_prev, -s_cur);
        BigInt s_new = s_prev + a * s_cur;
        std::array<BigInt, 2> v_new{v_prev[0] + a * v_cur[0],
                                    v_prev[1] + a * v_cur[1]};
        out.digits.push_back(a);
        if (trace) trace->push_back(v_new);
        if (s_new == 0) {
            out.terminated = true;
            break;
        }
        v_prev = v_cur;
        v_cur = v_new;
        s_prev = s_cur;
        s_cur = s_new;
    }
    return out;
}

BigRational cf_value(const std::vector<BigInt>& digits) {
    BigRational r = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        r = BigRational(1) / (BigRational(*it) + r);
    }
    return r;
}

}  // namespace triseq
