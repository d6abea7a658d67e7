#include "triseq/nest.hpp"

#include <algorithm>
#include <cmath>

namespace triseq {

XState x_vectors(const std::vector<BigInt>& digits) {
    std::vector<IntVec3> cs = c_vectors(digits);
    const long n = static_cast<long>(digits.size()) - 1;

    std::vector<IntVec3> xs;
    xs.reserve(digits.size() + 3);
    for (long k = -3; k < n; ++k) {
        xs.push_back(cross(cs[k + 3], cs[k + 4]));
    }
    // X_n without look-ahead: the a_{n+1} C_n term of C_{n+1} cancels.
    {
        const IntVec3& cn = cs[n + 3];
        xs.push_back(cross(cn, cs[n + 1] - cs[n + 2]));
    }

    // Cross-check against the Proposition-1 recursion.
    for (long k = 0; k <= n; ++k) {
        IntVec3 rec = xs[k] + digits[k] * xs[k + 1] + xs[k + 2];
        if (!(rec == xs[k + 3]))
            throw ConsistencyFailure("X recursion disagrees with cross products");
    }
    return XState(std::move(xs));
}

std::array<RationalPoint, 3> prefix_vertices(const XState& xs, long n) {
    return {hat(xs.at(n - 1)), hat(xs.at(n)),
            farey_sum(xs.at(n), xs.at(n - 2))};
}

PartitionTriangle triangle_vertices(const std::vector<BigInt>& prefix) {
    if (prefix.empty()) throw IndexOutOfRange("empty prefix has no triangle");
    XState xs = x_vectors(prefix);
    const long n = static_cast<long>(prefix.size()) - 1;
    std::array<RationalPoint, 3> verts;
    try {
        verts = prefix_vertices(xs, n);
    } catch (const ZeroLeadComponent&) {
        throw ConsistencyFailure("vanishing lead component on a valid prefix");
    }
    if (orient(verts[0], verts[1], verts[2]) == 0)
        throw ConsistencyFailure("degenerate partition triangle");
    return {prefix, verts, std::move(xs)};
}

SideLengths side_lengths(const std::array<RationalPoint, 3>& v) {
    SideLengths s;
    s.tau2 = dist2(v[0], v[1]);
    s.rho2 = dist2(v[1], v[2]);
    s.mu2 = dist2(v[0], v[2]);
    s.s2 = std::max({s.tau2, s.rho2, s.mu2});
    return s;
}

SideLengths side_lengths(const PartitionTriangle& tri) {
    return side_lengths(tri.vertices);
}

bool triangle_contains(const std::array<RationalPoint, 3>& v,
                       const RationalPoint& p, Containment mode) {
    BigRational o = orient(v[0], v[1], v[2]);
    for (int i = 0; i < 3; ++i) {
        BigRational s = orient(v[i], v[(i + 1) % 3], p);
        if (o < 0) s = -s;
        if (mode == Containment::Open ? s <= 0 : s < 0) return false;
    }
    return true;
}

bool contains(const PartitionTriangle& tri, const RationalPoint& p,
              Containment mode) {
    return triangle_contains(tri.vertices, p, mode);
}

BigInt dual_digit(const XState& xs, const RationalPoint& p) {
    const long m = xs.max_index();  // = n - 1
    // s(k) = (1,p) . normal(P_k) is affine in k; the X_{n-1} summand of the
    // spanning vector contributes nothing to the normal.
    BigRational s0 = ray_dot(p, cross(xs.at(m), xs.at(m - 2)));
    BigRational s1 = ray_dot(p, cross(xs.at(m), xs.at(m - 1)));
    if (s1 == 0)
        throw Degenerate("ray lies in the rotation plane (terminated orbit)");
    BigInt a = rational_floor(-s0 / s1);
    if (a < 0)
        throw Degenerate("point not inside the current partition triangle");
    return a;
}

TriSequence dual_expand(const RationalPoint& p, std::size_t max_terms) {
    if (!in_triangle(p)) throw OutOfTriangle("point outside the triangle");
    TriSequence out;
    while (out.digits.size() < max_terms) {
        XState xs = x_vectors(out.digits);
        BigInt a;
        try {
            a = dual_digit(xs, p);
        } catch (const Degenerate&) {
            out.terminated_at = out.digits.size();
            break;
        }
        out.digits.push_back(a);
    }
    return out;
}

namespace {

LimitEstimate terminated_estimate(const TriSequence& seq) {
    if (seq.terminal_point) {
        RationalPoint p = pull_back(*seq.terminal_point, seq.digits);
        return PointEstimate{p, BigRational(0), true};
    }
    // Landing spot unknown: every point of the pulled-back terminal segment
    // carries these digits, so report the segment exactly.
    RationalPoint lo = pull_back(RationalPoint{0, 0}, seq.digits);
    RationalPoint hi = pull_back(RationalPoint{1, 0}, seq.digits);
    BigRational g2 = dist2(lo, hi);
    return SegmentEstimate{lo, hi, std::sqrt(to_double(g2)), g2,
                           BigRational(0), BigRational(0)};
}

}  // namespace

LimitEstimate limit_estimate(const TriSequence& seq, std::size_t depth,
                             unsigned segment_factor) {
    if (seq.terminated()) return terminated_estimate(seq);
    if (depth < 4) throw OutOfDomain("limit_estimate needs depth >= 4");
    if (seq.digits.size() < depth)
        throw OutOfDomain("sequence shorter than requested depth");

    std::vector<BigInt> prefix(seq.digits.begin(),
                               seq.digits.begin() + static_cast<long>(depth));
    XState xs = x_vectors(prefix);
    const long n = xs.max_index();

    RationalPoint h_n = hat(xs.at(n));
    RationalPoint h_n1 = hat(xs.at(n - 1));
    BigRational res_n = dist2(h_n, hat(xs.at(n - 2)));
    BigRational res_n1 = dist2(h_n1, hat(xs.at(n - 3)));

    BigRational gap2 = dist2(h_n, h_n1);
    BigRational factor2 = BigRational(segment_factor) * segment_factor;
    if (gap2 > factor2 * std::max(res_n, res_n1)) {
        const bool n_even = (n % 2 == 0);
        SegmentEstimate est;
        est.even_limit = n_even ? h_n : h_n1;
        est.odd_limit = n_even ? h_n1 : h_n;
        est.even_residual2 = n_even ? res_n : res_n1;
        est.odd_residual2 = n_even ? res_n1 : res_n;
        est.gap2 = gap2;
        // Each parity tail is a geometric series with ratio at most 1/2, so
        // the unseen remainder is bounded by the last observed step.
        double tail = std::sqrt(to_double(res_n)) + std::sqrt(to_double(res_n1));
        est.length_lower_bound =
            std::max(0.0, std::sqrt(to_double(gap2)) - 2.0 * tail);
        return est;
    }
    SideLengths s = side_lengths(prefix_vertices(xs, n));
    return PointEstimate{h_n, s.s2, false};
}

}  // namespace triseq
