#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "triseq/nest.hpp"
#include "triseq/uniqueness.hpp"

using namespace triseq;

namespace {

RationalPoint rp(long xn, long xd, long yn, long yd) {
    return {BigRational(xn, xd), BigRational(yn, yd)};
}

RationalPoint random_point(std::mt19937_64& rng, long max_den) {
    long q = std::uniform_int_distribution<long>(2, max_den)(rng);
    long a = std::uniform_int_distribution<long>(1, q)(rng);
    long b = std::uniform_int_distribution<long>(1, a)(rng);
    return {BigRational(a, q), BigRational(b, q)};
}

std::vector<BigInt> random_prefix(std::mt19937_64& rng) {
    std::size_t len =
        std::uniform_int_distribution<std::size_t>(1, 20)(rng);
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < len; ++i)
        out.push_back(std::uniform_int_distribution<int>(0, 10)(rng));
    return out;
}

RationalPoint centroid(const std::array<RationalPoint, 3>& v) {
    return {(v[0].x + v[1].x + v[2].x) / 3, (v[0].y + v[1].y + v[2].y) / 3};
}

// sqrt(a) <= sqrt(b) + sqrt(c) for nonnegative rationals, decided exactly.
bool sqrt_triangle_le(const BigRational& a, const BigRational& b,
                      const BigRational& c) {
    BigRational s = a - b - c;
    if (s <= 0) return true;
    return s * s <= 4 * b * c;
}

}  // namespace

TEST_CASE("x_vectors bases and first steps") {
    XState base = x_vectors({});
    CHECK(base.max_index() == -1);
    CHECK(base.at(-3) == IntVec3{0, 0, 1});
    CHECK(base.at(-2) == IntVec3{1, 0, 0});
    CHECK(base.at(-1) == IntVec3{1, 1, 0});

    XState z = x_vectors({0});
    CHECK(z.at(0) == IntVec3{1, 1, 1});
}

TEST_CASE("triangle_vertices golden prefixes") {
    PartitionTriangle t0 = triangle_vertices({0});
    CHECK(t0.vertices[0] == RationalPoint{1, 0});
    CHECK(t0.vertices[1] == RationalPoint{1, 1});
    CHECK(t0.vertices[2] == rp(1, 2, 1, 2));

    PartitionTriangle t1 = triangle_vertices({1});
    CHECK(t1.vertices[0] == RationalPoint{1, 0});
    CHECK(t1.vertices[1] == rp(1, 2, 1, 2));
    CHECK(t1.vertices[2] == rp(1, 3, 1, 3));

    PartitionTriangle t12 = triangle_vertices({1, 2});
    CHECK(t12.vertices[0] == rp(1, 2, 1, 2));
    CHECK(t12.vertices[1] == rp(3, 5, 1, 5));
    CHECK(t12.vertices[2] == rp(2, 3, 1, 6));

    CHECK_THROWS_AS(triangle_vertices({}), IndexOutOfRange);

    // Empty prefix through prefix_vertices: the whole triangle.
    XState base = x_vectors({});
    std::array<RationalPoint, 3> whole = prefix_vertices(base, -1);
    CHECK(whole[0] == RationalPoint{0, 0});
    CHECK(whole[1] == RationalPoint{1, 0});
    CHECK(whole[2] == RationalPoint{1, 1});
}

TEST_CASE("side_lengths") {
    SideLengths s0 = side_lengths(triangle_vertices({0}));
    CHECK(s0.tau2 == 1);
    CHECK(s0.rho2 == BigRational(1, 2));
    CHECK(s0.mu2 == BigRational(1, 2));
    CHECK(s0.s2 == 1);

    SideLengths s1 = side_lengths(triangle_vertices({1}));
    CHECK(s1.tau2 == BigRational(1, 2));

    // Triangle inequality on the exact side lengths.
    std::mt19937_64 rng(211);
    for (int i = 0; i < 200; ++i) {
        SideLengths s = side_lengths(triangle_vertices(random_prefix(rng)));
        CHECK(sqrt_triangle_le(s.tau2, s.rho2, s.mu2));
        CHECK(sqrt_triangle_le(s.rho2, s.tau2, s.mu2));
        CHECK(sqrt_triangle_le(s.mu2, s.tau2, s.rho2));
        CHECK(s.s2 == std::max({s.tau2, s.rho2, s.mu2}));
    }
}

TEST_CASE("containment") {
    PartitionTriangle t1 = triangle_vertices({1});
    CHECK(contains(t1, centroid(t1.vertices), Containment::Open));
    CHECK(contains(t1, t1.vertices[0], Containment::Closed));
    CHECK_FALSE(contains(t1, t1.vertices[0], Containment::Open));
    CHECK_FALSE(contains(t1, {1, 1}, Containment::Closed));

    PartitionTriangle t0 = triangle_vertices({0});
    CHECK(contains(t0, {1, 1}, Containment::Closed));
}

TEST_CASE("centroid expansion starts with the prefix") {
    std::mt19937_64 rng(223);
    for (int i = 0; i < 100; ++i) {
        std::vector<BigInt> prefix = random_prefix(rng);
        PartitionTriangle tri = triangle_vertices(prefix);
        RationalPoint c = centroid(tri.vertices);
        TriSequence seq = expand(c, prefix.size());
        for (std::size_t k = 0; k < prefix.size(); ++k) {
            if (seq.digits.size() <= k) break;  // early termination allowed
            REQUIRE(seq.digits[k] == prefix[k]);
        }
        REQUIRE(seq.digits.size() == prefix.size());
    }
}

TEST_CASE("children nest inside their parent") {
    std::mt19937_64 rng(227);
    for (int i = 0; i < 100; ++i) {
        std::vector<BigInt> prefix = random_prefix(rng);
        PartitionTriangle parent = triangle_vertices(prefix);
        std::vector<BigInt> child_prefix = prefix;
        child_prefix.push_back(std::uniform_int_distribution<int>(0, 6)(rng));
        PartitionTriangle child = triangle_vertices(child_prefix);
        for (const RationalPoint& v : child.vertices)
            REQUIRE(contains(parent, v, Containment::Closed));
    }
}

TEST_CASE("dual_digit examples") {
    XState base = x_vectors({});
    CHECK(dual_digit(base, rp(4, 7, 2, 7)) == 1);
    CHECK(dual_digit(x_vectors({1}), rp(4, 7, 2, 7)) == 2);
    CHECK(dual_digit(base, {1, 1}) == 0);
    CHECK_THROWS_AS(dual_digit(x_vectors({1, 2}), rp(4, 7, 2, 7)), Degenerate);
}

TEST_CASE("dual_expand agrees with the orbit expansion") {
    std::mt19937_64 rng(229);
    for (int i = 0; i < 500; ++i) {
        RationalPoint p = random_point(rng, 1000);
        TriSequence a = dual_expand(p, 10000);
        TriSequence b = expand(p, 10000);
        REQUIRE(a.digits == b.digits);
        REQUIRE(a.terminated() == b.terminated());
    }
}

TEST_CASE("vertex residual ratio identity") {
    // dist(hat X_n, X_n +f X_{n+2}) / dist(hat X_n, hat X_{n+2})
    //   = x_{n+2} / (x_n + x_{n+2}), squared on both sides.
    std::mt19937_64 rng(233);
    for (int i = 0; i < 100; ++i) {
        std::vector<BigInt> prefix = random_prefix(rng);
        XState xs = x_vectors(prefix);
        for (long n = -1; n + 2 <= xs.max_index(); ++n) {
            const IntVec3& xn = xs.at(n);
            const IntVec3& xn2 = xs.at(n + 2);
            if (xn.z == 0 || xn2.z == 0 || xn.z + xn2.z == 0) continue;
            BigRational lhs = dist2(hat(xn), farey_sum(xn, xn2));
            BigRational rhs = dist2(hat(xn), hat(xn2));
            BigRational w(xn2.z, xn.z + xn2.z);
            REQUIRE(lhs == rhs * w * w);
        }
    }
}

TEST_CASE("limit_estimate") {
    // Terminating sequence: exact recovery of the original point.
    TriSequence fin = expand(rp(4, 7, 2, 7), 100);
    LimitEstimate le = limit_estimate(fin, 40);
    REQUIRE(std::holds_alternative<PointEstimate>(le));
    const PointEstimate& pe = std::get<PointEstimate>(le);
    CHECK(pe.exact);
    CHECK(pe.point == rp(4, 7, 2, 7));
    CHECK(pe.enclosure_radius2 == 0);

    // All-ones digits converge to a point.
    TriSequence ones;
    ones.digits.assign(42, BigInt(1));
    LimitEstimate lo = limit_estimate(ones, 40);
    REQUIRE(std::holds_alternative<PointEstimate>(lo));
    CHECK_FALSE(std::get<PointEstimate>(lo).exact);
    CHECK(std::get<PointEstimate>(lo).enclosure_radius2 < BigRational(1, 1000000));

    // Doubling digits limit to a segment of positive length.
    TriSequence pow2;
    for (int k = 0; k <= 42; ++k)
        pow2.digits.push_back(SequenceFamily::pow2().digit(k));
    LimitEstimate ls = limit_estimate(pow2, 40);
    REQUIRE(std::holds_alternative<SegmentEstimate>(ls));
    const SegmentEstimate& se = std::get<SegmentEstimate>(ls);
    CHECK(se.length_lower_bound > 0);
    CHECK(se.gap2 > se.even_residual2);
    CHECK(se.gap2 > se.odd_residual2);
}
