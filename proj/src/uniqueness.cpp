#include "triseq/uniqueness.hpp"

#include <sstream>
#include <utility>

#include "triseq/nest.hpp"

namespace triseq {

namespace {

BigInt pow2i(long e) { return BigInt(1) << e; }

std::string rat_str(const BigRational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

SequenceFamily SequenceFamily::linear() { return {Kind::Linear, 0, {}}; }
SequenceFamily SequenceFamily::square() { return {Kind::Square, 0, {}}; }
SequenceFamily SequenceFamily::prime() { return {Kind::Prime, 0, {}}; }
SequenceFamily SequenceFamily::pow2() { return {Kind::Pow2, 0, {}}; }

SequenceFamily SequenceFamily::constant_digits(const BigInt& c) {
    if (c < 0) throw OutOfDomain("digit must be nonnegative");
    return {Kind::Constant, c, {}};
}

SequenceFamily SequenceFamily::custom(std::vector<BigInt> digits) {
    for (const BigInt& d : digits)
        if (d < 0) throw OutOfDomain("digit must be nonnegative");
    return {Kind::Custom, 0, std::move(digits)};
}

BigInt SequenceFamily::digit(std::size_t n) const {
    switch (kind) {
        case Kind::Linear: return BigInt(n);
        case Kind::Square: return BigInt(n) * BigInt(n);
        case Kind::Prime: return nth_prime(n + 1);
        case Kind::Pow2: return n == 0 ? BigInt(0) : pow2i(static_cast<long>(n) - 1);
        case Kind::Constant: return constant;
        case Kind::Custom:
            if (n >= data.size()) throw IndexOutOfRange("custom digit index");
            return data[n];
    }
    throw Error("unreachable");
}

std::vector<BigInt> SequenceFamily::digits(std::size_t count) const {
    std::vector<BigInt> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) out.push_back(digit(n));
    return out;
}

std::string SequenceFamily::name() const {
    switch (kind) {
        case Kind::Linear: return "linear";
        case Kind::Square: return "square";
        case Kind::Prime: return "prime";
        case Kind::Pow2: return "pow2";
        case Kind::Constant: {
            std::ostringstream os;
            os << "const:" << constant;
            return os.str();
        }
        case Kind::Custom: return "custom";
    }
    throw Error("unreachable");
}

std::optional<std::size_t> SequenceFamily::length() const {
    if (kind == Kind::Custom) return data.size();
    return std::nullopt;
}

BigInt nth_prime(std::size_t n) {
    if (n == 0) throw OutOfDomain("primes are counted from 1");
    std::size_t found = 0;
    for (BigInt c = 2;; ++c) {
        bool prime = true;
        for (BigInt d = 2; d * d <= c; ++d)
            if (c % d == 0) { prime = false; break; }
        if (prime && ++found == n) return c;
    }
}

XSeq XSeq::from_family(const SequenceFamily& fam, long depth) {
    if (depth < 0) throw OutOfDomain("depth must be nonnegative");
    XSeq s;
    s.fam_ = fam;
    s.min_ = -3;
    s.xs_ = {0, 1, 1};
    for (long k = 0; k <= depth; ++k) {
        const BigInt a = fam.digit(static_cast<std::size_t>(k));
        const std::size_t i = s.xs_.size();
        s.xs_.push_back(s.xs_[i - 3] + a * s.xs_[i - 2] + s.xs_[i - 1]);
    }
    return s;
}

XSeq XSeq::pow2_seeded(long depth) {
    if (depth < 2) throw OutOfDomain("depth must be at least 2");
    XSeq s;
    s.min_ = 0;
    s.seeded_pow2_ = true;
    s.xs_ = {1, 1, 3};
    for (long k = 3; k <= depth; ++k) {
        const std::size_t i = s.xs_.size();
        s.xs_.push_back(s.xs_[i - 3] + pow2i(k - 1) * s.xs_[i - 2] + s.xs_[i - 1]);
    }
    return s;
}

const BigInt& XSeq::x(long k) const {
    if (k < min_ || k > max_index()) throw IndexOutOfRange("XSeq::x");
    return xs_[static_cast<std::size_t>(k - min_)];
}

BigInt XSeq::a(long k) const {
    if (seeded_pow2_) {
        if (k < 3) throw IndexOutOfRange("seed indices carry no digit");
        return pow2i(k - 1);
    }
    if (k < 0) throw IndexOutOfRange("digit index must be nonnegative");
    return fam_.digit(static_cast<std::size_t>(k));
}

LambdaTriple lambda_family(const XSeq& xs, long n, const BigInt& a_next) {
    if (a_next < 0) throw OutOfDomain("digit must be nonnegative");
    const BigInt& xm2 = xs.x(n - 2);
    const BigInt& xm1 = xs.x(n - 1);
    const BigInt& xn = xs.x(n);
    const BigInt top = xn + xm2;
    const BigInt next = xm2 + a_next * xm1 + xn;
    LambdaTriple t;
    t.lambda = BigRational(top, next);
    t.lambda_tilde = BigRational(top, next + xm1);
    t.lambda_prime = t.lambda - t.lambda_tilde;
    return t;
}

LambdaTriple lambda_family(const XSeq& xs, long n) {
    LambdaTriple t = lambda_family(xs, n, xs.a(n + 1));
    if (n + 1 <= xs.max_index()) {
        // The projective recursion must reproduce the stored next value.
        BigRational check(xs.x(n) + xs.x(n - 2), xs.x(n + 1));
        if (check != t.lambda)
            throw ConsistencyFailure("lambda disagrees with stored x values");
    }
    return t;
}

BigRational one_minus_lambda(const XSeq& xs, long n) {
    return BigRational(xs.a(n + 1) * xs.x(n - 1), xs.x(n + 1));
}

BigRational partial_product(const XSeq& xs, long N, long M) {
    if (N > M) throw OutOfDomain("empty product range");
    if (N - 2 < xs.min_index() || M + 1 > xs.max_index())
        throw IndexOutOfRange("product range exceeds computed values");

    BigRational termwise = 1;
    for (long n = N; n <= M; ++n) termwise *= one_minus_lambda(xs, n);

    BigRational closed(xs.x(N - 1) * xs.x(N), xs.x(M) * xs.x(M + 1));
    for (long n = N + 1; n <= M + 1; ++n) {
        const BigInt a = xs.a(n);
        if (a == 0) throw ZeroDigit("zero digit in product range");
        closed *= BigRational(a);
    }
    if (termwise != closed)
        throw ConsistencyFailure("telescoped product disagrees with termwise");
    return termwise;
}

BigRational partial_product(const SequenceFamily& fam, long N, long M) {
    return partial_product(XSeq::from_family(fam, M + 1), N, M);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Unique: return "unique";
        case Verdict::NonUnique: return "non-unique";
        case Verdict::Undetermined: return "undetermined";
    }
    throw Error("unreachable");
}

ClassificationReport classify(const SequenceFamily& fam, std::size_t depth,
                              const BigRational& unique_threshold,
                              const std::optional<BigRational>& tail_lower_bound) {
    if (auto len = fam.length()) {
        if (*len < 3) throw OutOfDomain("need at least three digits to classify");
        depth = std::min(depth, *len - 1);
    }
    if (depth < 2) throw OutOfDomain("classification depth must be at least 2");

    XSeq xs = XSeq::from_family(fam, static_cast<long>(depth));
    const long M = static_cast<long>(depth) - 1;

    ClassificationReport rep;
    rep.depth = depth;

    long last_zero = 0;
    for (long n = 1; n <= M + 1; ++n) {
        if (xs.a(n) == 0) {
            ++rep.zero_count;
            last_zero = n;
        }
    }
    const long N = last_zero + 1;
    rep.partial_product = N <= M ? partial_product(xs, N, M) : BigRational(1);
    rep.evidence.push_back(
        {"partial-product", rat_str(rep.partial_product) + " over n=" +
                                std::to_string(N) + ".." + std::to_string(M)});

    switch (fam.kind) {
        case SequenceFamily::Kind::Linear:
        case SequenceFamily::Kind::Square:
        case SequenceFamily::Kind::Prime:
            rep.verdict = Verdict::Unique;
            rep.evidence.push_back(
                {"unbounded-digit-growth",
                 "product of (1 - lambda_n) is driven to zero"});
            break;
        case SequenceFamily::Kind::Constant:
            rep.verdict = Verdict::Unique;
            rep.evidence.push_back(
                fam.constant == 0
                    ? Evidence{"infinitely-many-zeros",
                               "all-zero digits pin a single point"}
                    : Evidence{"geometric-decay",
                               "constant digits shrink the product geometrically"});
            break;
        case SequenceFamily::Kind::Pow2:
            rep.verdict = Verdict::NonUnique;
            rep.evidence.push_back(
                {"positive-tail-product",
                 "tail product >= " + rat_str(pow2_tail_product_lower_bound())});
            break;
        case SequenceFamily::Kind::Custom: {
            const bool zeros_recur =
                last_zero > 0 && last_zero > M / 2;
            if (tail_lower_bound && *tail_lower_bound > 0) {
                rep.verdict = Verdict::NonUnique;
                rep.evidence.push_back(
                    {"supplied-tail-bound", rat_str(*tail_lower_bound)});
            } else if (zeros_recur) {
                rep.verdict = Verdict::Undetermined;
                rep.evidence.push_back(
                    {"zeros-recur",
                     "zero digits persist through the window; only infinitely "
                     "many zeros would settle uniqueness"});
            } else if (rep.partial_product < unique_threshold) {
                rep.verdict = Verdict::Unique;
                rep.evidence.push_back(
                    {"product-below-threshold",
                     rat_str(rep.partial_product) + " < " +
                         rat_str(unique_threshold)});
            } else {
                rep.verdict = Verdict::Undetermined;
                rep.evidence.push_back(
                    {"product-above-threshold",
                     "no decision possible from finite data"});
            }
            break;
        }
    }
    return rep;
}

BigRational pow2_tail_product_lower_bound() {
    // Factor n of the tail product is 1 - 2^(1 - n/2); rounding the exponent
    // down to an integer only shrinks it. The block past n = 40 is bounded
    // below by 1 - sum of the remaining deficits, which telescopes to
    // 1 - 3/2^19.
    BigRational p = 1;
    for (long n = 7; n <= 40; ++n) {
        const BigInt d = pow2i(n / 2 - 1);
        p *= BigRational(d - 1, d);
    }
    p *= BigRational(pow2i(19) - 3, pow2i(19));
    return p;
}

bool pow2_growth_bounds_hold(long n, const BigInt& xn, const BigInt& xn_minus_1) {
    if (n < 1 || xn <= 0 || xn_minus_1 <= 0)
        throw OutOfDomain("growth bounds need n >= 1 and positive terms");
    bool upper, lower;
    if (n % 2 == 0) {
        upper = xn <= pow2i(n / 2) * xn_minus_1;
        const BigInt t = xn - xn_minus_1;
        lower = t > 0 && t * t >= pow2i(n - 1) * xn_minus_1 * xn_minus_1;
    } else {
        upper = xn * xn <= pow2i(n) * xn_minus_1 * xn_minus_1;
        lower = (pow2i((n - 1) / 2) + 1) * xn_minus_1 <= xn;
    }
    return upper && lower;
}

int Root2Num::sign() const {
    const int sa = a == 0 ? 0 : (a > 0 ? 1 : -1);
    const int sb = b == 0 ? 0 : (b > 0 ? 1 : -1);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Mixed signs: a + b*sqrt(2) has the sign of whichever square dominates.
    const BigRational a2 = a * a;
    const BigRational b2 = 2 * b * b;
    if (a2 == b2) return 0;  // only possible at a = b = 0, kept for safety
    return a2 > b2 ? sa : sb;
}

Root2Num Root2Num::operator*(const Root2Num& o) const {
    return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
}

Root2Num Root2Num::operator-(const Root2Num& o) const {
    return {a - o.a, b - o.b};
}

Root2Num pow2_bound_product(long N, long M) {
    if (N < 3 || N > M) throw OutOfDomain("need 3 <= N <= M");
    Root2Num p{1, 0};
    for (long n = N; n <= M; ++n) {
        if (n % 2 == 0) {
            p = p * Root2Num{1 - BigRational(1, pow2i(n / 2 - 1)), 0};
        } else {
            p = p * Root2Num{1, -BigRational(1, pow2i((n - 1) / 2))};
        }
    }
    return p;
}

int compare_rational_root2(const BigRational& lhs, const Root2Num& rhs) {
    return (Root2Num{lhs, 0} - rhs).sign();
}

namespace {

// tau_{n+1} >= tau_n - lambda (rho_n + tau_n), decided on squared lengths.
bool tau_step_holds(const BigRational& T1, const BigRational& T0,
                    const BigRational& R0, const BigRational& lam) {
    // sqrt(T1) + lam sqrt(R0) >= (1 - lam) sqrt(T0)
    const BigRational S = (1 - lam) * (1 - lam) * T0 - T1 - lam * lam * R0;
    if (S <= 0) return true;
    return 4 * lam * lam * T1 * R0 >= S * S;
}

// rho_{n+1} <= (rho_n + tau_n) / ((1/lam)(1/lam + 1))
bool rho_step_holds(const BigRational& R1, const BigRational& T0,
                    const BigRational& R0, const BigRational& lam) {
    // K sqrt(R1) <= sqrt(R0) + sqrt(T0) with K = (1/lam)(1/lam + 1)
    const BigRational K = (1 / lam) * (1 / lam + 1);
    const BigRational S = K * K * R1 - R0 - T0;
    if (S <= 0) return true;
    return S * S <= 4 * R0 * T0;
}

}  // namespace

InequalityReport inequality_suite(const SequenceFamily& fam, std::size_t depth) {
    if (depth < 1) throw OutOfDomain("depth must be at least 1");
    if (auto len = fam.length()) {
        if (*len < depth + 2)
            throw OutOfDomain("custom data too short for requested depth");
    }

    const long d = static_cast<long>(depth);
    XSeq xs = XSeq::from_family(fam, d + 1);
    XState geo = x_vectors(fam.digits(depth + 2));

    InequalityReport rep;
    auto check = [&](bool ok, const char* what, long n) {
        ++rep.checks_run;
        if (!ok) rep.violations.push_back({what, n});
    };

    SideLengths cur = side_lengths(prefix_vertices(geo, 0));
    for (long n = 0; n <= d; ++n) {
        const BigInt a = xs.a(n + 1);
        const LambdaTriple L = lambda_family(xs, n);

        // Closed forms of the three ratios, and the exact identity
        // lambda' = lambda - lambda~.
        const BigRational R(xs.x(n) + xs.x(n - 2), xs.x(n - 1));
        check(L.lambda == R / (a + R), "lambda closed form", n);
        check(L.lambda_tilde == R / (a + 1 + R), "lambda~ closed form", n);
        check(L.lambda_prime == R / ((a + R) * (a + 1 + R)),
              "lambda' product form", n);

        // First approximation bound, and the second when it is defined.
        check(L.lambda_prime <= L.lambda * L.lambda / (1 + L.lambda),
              "lambda' <= lambda^2/(1+lambda)", n);
        if (a >= 1) {
            check(L.lambda_prime <= L.lambda * L.lambda / (1 - L.lambda),
                  "lambda' <= lambda^2/(1-lambda)", n);
        }

        // 1 - lambda_n <= a/(a+1).
        check(1 - L.lambda <= BigRational(a, a + 1), "1-lambda bound", n);

        // Strict decrease of all three ratios in the next digit.
        const LambdaTriple Lp = lambda_family(xs, n, a + 1);
        check(Lp.lambda < L.lambda, "lambda decreasing in a", n);
        check(Lp.lambda_tilde < L.lambda_tilde, "lambda~ decreasing in a", n);
        check(Lp.lambda_prime < L.lambda_prime, "lambda' decreasing in a", n);

        // Side-length step bounds for the nested triangles.
        SideLengths next = side_lengths(prefix_vertices(geo, n + 1));
        check(tau_step_holds(next.tau2, cur.tau2, cur.rho2, L.lambda),
              "tau step bound", n);
        check(rho_step_holds(next.rho2, cur.tau2, cur.rho2, L.lambda),
              "rho step bound", n);
        cur = next;
    }
    return rep;
}

}  // namespace triseq
