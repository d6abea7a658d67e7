#include "triseq/dynamics.hpp"

#include <utility>

namespace triseq {

namespace {

bool in_closed_domain(const RationalPoint& p) {
    return p.x <= 1 && p.y <= p.x && p.y >= 0;
}

void validate(const Ball& ball) {
    if (ball.radius <= 0) throw OutOfDomain("ball radius must be positive");
    if (!in_closed_domain(ball.center))
        throw OutOfDomain("ball center outside the closed triangle");
}

bool strictly_inside(const Ball& ball, const RationalPoint& p) {
    return dist2(p, ball.center) < ball.radius2();
}

bool edge_meets_ball(const Ball& ball, const RationalPoint& a,
                     const RationalPoint& b) {
    return segment_dist2(a, b, ball.center) < ball.radius2();
}

// A rational point of (a, b] inside the open ball. The closest point of the
// segment works unless it coincides with the excluded endpoint a, in which
// case nearby segment points still qualify because the ball is open.
RationalPoint pick_on_segment(const Ball& ball, const RationalPoint& a,
                              const RationalPoint& b) {
    RationalPoint c = closest_point_on_segment(a, b, ball.center);
    if (!strictly_inside(ball, c))
        throw ConsistencyFailure("segment was expected to meet the ball");
    if (!(c == a)) return c;
    RationalPoint p{(c.x + b.x) / 2, (c.y + b.y) / 2};
    while (!strictly_inside(ball, p)) {
        p = {(c.x + p.x) / 2, (c.y + p.y) / 2};
    }
    return p;
}

// A rational point inside both the open ball and the open triangle, found by
// sliding the center toward an interior anchor.
RationalPoint seed_point(const Ball& ball) {
    if (in_open_triangle(ball.center)) return ball.center;
    const RationalPoint anchor{BigRational(2, 3), BigRational(1, 3)};
    RationalPoint p = anchor;
    while (!(in_open_triangle(p) && strictly_inside(ball, p))) {
        p = {(ball.center.x + p.x) / 2, (ball.center.y + p.y) / 2};
    }
    return p;
}

std::array<RationalPoint, 3> current_vertices(const std::vector<BigInt>& digits) {
    XState xs = x_vectors(digits);
    return prefix_vertices(xs, xs.max_index());
}

// Designated edge of a prefix: hat(X_{n-1}) to farey_sum(X_n, X_{n-2}).
std::pair<RationalPoint, RationalPoint> designated_edge(
    const std::vector<BigInt>& digits) {
    XState xs = x_vectors(digits);
    const long n = xs.max_index();
    return {hat(xs.at(n - 1)), farey_sum(xs.at(n), xs.at(n - 2))};
}

// Grows the last appended digit by doubling until the designated edge of the
// extended prefix meets the ball (and the optional extra condition holds).
template <typename Extra>
BigInt grow_digit(std::vector<BigInt>& digits, const Ball& ball,
                  const SearchBudget& budget, Extra extra) {
    for (BigInt a = 1; a <= budget.max_digit; a <<= 1) {
        digits.push_back(a);
        auto [e0, e1] = designated_edge(digits);
        if (edge_meets_ball(ball, e0, e1) && extra(digits, e0, e1)) return a;
        digits.pop_back();
    }
    throw NotFound("digit search budget exhausted");
}

constexpr std::size_t kExpandCap = 20000;

}  // namespace

TriSequence edge_through_ball(const Ball& ball, const SearchBudget& budget) {
    validate(ball);

    RationalPoint w = seed_point(ball);
    TriSequence seed = expand(w, kExpandCap);
    if (!seed.terminated())
        throw NotFound("rational seed failed to terminate");

    std::vector<BigInt> digits = seed.digits;
    if (digits.size() + 3 > budget.max_prefix)
        throw NotFound("prefix budget exhausted by the seed");

    XState xs = x_vectors(digits);
    const long n = xs.max_index();
    const RationalPoint hn1 = hat(xs.at(n - 1));
    const RationalPoint hn = hat(xs.at(n));
    const RationalPoint fa = farey_sum(xs.at(n), xs.at(n - 2));

    auto no_extra = [](const std::vector<BigInt>&, const RationalPoint&,
                       const RationalPoint&) { return true; };

    if (on_segment(hn1, fa, w)) {
        // Already on a designated edge.
    } else if (on_segment(hn1, hn, w)) {
        // The seed sits on the hat-to-hat edge; enlarging the next digit
        // swings the new designated edge onto it.
        grow_digit(digits, ball, budget, no_extra);
    } else if (on_segment(hn, fa, w)) {
        // A zero append turns this edge into the hat-to-hat edge of the
        // extended prefix, reducing to the previous case.
        digits.push_back(0);
        grow_digit(digits, ball, budget, no_extra);
    } else {
        throw ConsistencyFailure(
            "terminating point not on any edge of its own cell");
    }

    auto [e0, e1] = designated_edge(digits);
    if (!edge_meets_ball(ball, e0, e1))
        throw ConsistencyFailure("constructed edge misses the ball");
    TriSequence out;
    out.digits = std::move(digits);
    return out;
}

namespace {

// Smallest j >= 0 such that w lies on the segment from hat(S + jR) to
// hat(S + (j+1)R); these segments tile [hat(S), hat(R)) monotonically in the
// squared distance from hat(S).
BigInt locate_slot(const IntVec3& S, const IntVec3& R, const RationalPoint& w,
                   const SearchBudget& budget) {
    const RationalPoint hs = hat(S);
    const BigRational tw = dist2(hs, w);
    if (tw == 0) return 0;

    auto reach = [&](const BigInt& j) { return dist2(hs, hat(S + j * R)); };

    BigInt hi = 1;
    while (reach(hi) < tw) {
        hi <<= 1;
        if (hi > budget.max_digit) throw NotFound("slot search budget exhausted");
    }
    BigInt lo = 0;  // invariant: reach(lo) < tw <= reach(hi)
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        (reach(mid) < tw ? lo : hi) = mid;
    }
    const BigInt j = hi - 1;
    if (!on_segment(hat(S + j * R), hat(S + hi * R), w))
        throw ConsistencyFailure("slot search left the designated edge");
    return j;
}

// Digit prefix whose triangle has its first vertex, hat(X_{top}), strictly
// inside the ball. Returned digits end at index top.
std::vector<BigInt> vertex_into_ball(const Ball& ball,
                                     const SearchBudget& budget) {
    const Ball half{ball.center, ball.radius / 2};
    const BigRational half2 = half.radius2();

    std::vector<BigInt> digits = edge_through_ball(half, budget).digits;
    auto [e0, e1] = designated_edge(digits);
    RationalPoint w = pick_on_segment(half, e0, e1);

    while (true) {
        XState xs = x_vectors(digits);
        const long m = xs.max_index();
        const RationalPoint vm1 = hat(xs.at(m - 1));
        const RationalPoint fa = farey_sum(xs.at(m), xs.at(m - 2));
        if (dist2(vm1, fa) < half2) {
            digits.pop_back();
            return digits;
        }
        if (digits.size() + 3 > budget.max_prefix)
            throw NotFound("prefix budget exhausted while shrinking the edge");

        // Slot the tracked point into the child edge fan, flatten it onto a
        // hat-to-hat edge with a zero, then swing a long new edge through the
        // ball without more than doubling back (the length condition).
        const IntVec3 S = xs.at(m - 2) + xs.at(m);
        digits.push_back(locate_slot(S, xs.at(m - 1), w, budget));
        digits.push_back(0);

        auto length_ok = [&](const std::vector<BigInt>& d, const RationalPoint& a,
                             const RationalPoint& b) {
            XState ys = x_vectors(d);
            const long t = ys.max_index();
            return 4 * dist2(a, b) < 9 * dist2(a, hat(ys.at(t - 2)));
        };
        grow_digit(digits, half, budget, length_ok);

        auto [a2, b2] = designated_edge(digits);
        w = pick_on_segment(half, a2, b2);
    }
}

// Core search for a single ball.
std::vector<BigInt> triangle_into_ball(const Ball& ball,
                                       const SearchBudget& budget) {
    const Ball half{ball.center, ball.radius / 2};
    const BigRational half2 = half.radius2();
    std::vector<BigInt> digits = vertex_into_ball(half, budget);

    while (true) {
        std::array<RationalPoint, 3> v = current_vertices(digits);
        if (strictly_inside(ball, v[0]) && strictly_inside(ball, v[1]) &&
            strictly_inside(ball, v[2])) {
            return digits;
        }
        if (digits.size() + 2 > budget.max_prefix)
            throw NotFound("prefix budget exhausted while shrinking the cell");

        // A zero plus a large digit pulls the new top vertex back toward the
        // current one, which is already deep inside the ball.
        digits.push_back(0);
        bool placed = false;
        for (BigInt a = 1; a <= budget.max_digit; a <<= 1) {
            digits.push_back(a);
            XState xs = x_vectors(digits);
            if (dist2(hat(xs.at(xs.max_index())), ball.center) < half2) {
                placed = true;
                break;
            }
            digits.pop_back();
        }
        if (!placed) throw NotFound("digit search budget exhausted");
    }
}

}  // namespace

PartitionTriangle find_partition_triangle_in_ball(const Ball& ball,
                                                  const SearchBudget& budget) {
    validate(ball);

    XState whole = x_vectors({});
    std::array<RationalPoint, 3> corners = prefix_vertices(whole, -1);
    if (strictly_inside(ball, corners[0]) && strictly_inside(ball, corners[1]) &&
        strictly_inside(ball, corners[2])) {
        return {{}, corners, std::move(whole)};
    }

    // Walk a fixed dyadic radius schedule down to the requested radius. Every
    // stage is a deterministic function of the center and scale alone, and the
    // final prefix is padded with zero digits (children stay inside the ball)
    // to the longest stage result. This makes the prefix length a
    // nondecreasing function of the scale for a fixed center: a smaller ball
    // replays the same stages and can only add to the running maximum.
    std::vector<BigInt> digits;
    std::size_t longest = 0;
    BigRational rho(1, 2);
    while (true) {
        digits = triangle_into_ball({ball.center, rho}, budget);
        longest = std::max(longest, digits.size());
        if (rho <= ball.radius) break;
        rho /= 2;
    }
    while (digits.size() < longest) digits.push_back(0);
    return triangle_vertices(digits);
}

MixingWitness mixing_witness(const std::vector<BigInt>& prefix_a,
                             const std::vector<BigInt>& prefix_b,
                             std::size_t gap, std::size_t samples) {
    MixingWitness w;
    w.prefix_a.digits = prefix_a;
    w.prefix_b.digits = prefix_b;
    w.gap = gap;
    w.power = prefix_a.size() + gap;

    w.concatenated.digits = prefix_a;
    w.concatenated.digits.insert(w.concatenated.digits.end(), gap, BigInt(0));
    w.concatenated.digits.insert(w.concatenated.digits.end(), prefix_b.begin(),
                                 prefix_b.end());

    std::array<RationalPoint, 3> v;
    try {
        if (w.concatenated.digits.empty()) {
            v = prefix_vertices(x_vectors({}), -1);
        } else {
            v = triangle_vertices(w.concatenated.digits).vertices;
        }
    } catch (const ConsistencyFailure& e) {
        throw EmptyCell(e.what());
    }

    auto sample_at = [&](const BigInt& i, const BigInt& j, const BigInt& k) {
        const BigRational total = BigRational(i + j + k);
        return RationalPoint{
            (i * v[0].x + j * v[1].x + k * v[2].x) / total,
            (i * v[0].y + j * v[1].y + k * v[2].y) / total};
    };

    std::size_t passes = 0;
    BigInt i = 1, j = 1, k = 1;
    for (std::size_t s = 0; s < samples; ++s) {
        RationalPoint p = sample_at(i, j, k);
        // Walk the weights deterministically: centroid first, then skewed
        // combinations toward each vertex in turn.
        switch (s % 3) {
            case 0: i += 1; break;
            case 1: j += 2; break;
            case 2: k += 3; break;
        }

        bool ok = in_open_triangle(p);
        RationalPoint q = p;
        for (std::size_t step = 0; ok && step < w.power; ++step) {
            TriangleStep st = triangle_step(q);
            if (st.terminal && (step + 1 < w.power || !prefix_b.empty()))
                ok = false;
            q = st.image;
        }
        if (ok && !prefix_b.empty()) {
            TriSequence tail = expand(q, prefix_b.size());
            ok = tail.digits.size() >= prefix_b.size();
            for (std::size_t t = 0; ok && t < prefix_b.size(); ++t)
                ok = tail.digits[t] == prefix_b[t];
        }
        if (ok) ++passes;
        w.samples.push_back({p, ok});
    }
    w.all_passed = passes == samples;
    return w;
}

}  // namespace triseq
