#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "triseq/triangle_map.hpp"

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

}  // namespace

TEST_CASE("partition_index") {
    CHECK(partition_index({1, 1}) == 0);
    CHECK(partition_index(rp(2, 3, 1, 3)) == 1);
    CHECK(partition_index(rp(1, 2, 1, 10)) == 5);
    CHECK_THROWS_AS(partition_index(rp(1, 2, 0, 1)), OutOfTriangle);
    CHECK_THROWS_AS(partition_index(rp(1, 3, 1, 2)), OutOfTriangle);
    CHECK_THROWS_AS(partition_index({2, 1}), OutOfTriangle);

    // The emitted index satisfies 1 - x - ky >= 0 > 1 - x - (k+1)y.
    std::mt19937_64 rng(101);
    for (int i = 0; i < 500; ++i) {
        RationalPoint p = random_point(rng, 1000);
        BigInt k = partition_index(p);
        CHECK(1 - p.x - BigRational(k) * p.y >= 0);
        CHECK(1 - p.x - BigRational(k + 1) * p.y < 0);
    }
}

TEST_CASE("triangle_step") {
    TriangleStep s1 = triangle_step({1, 1});
    CHECK(s1.digit == 0);
    CHECK(s1.terminal);
    CHECK(s1.image == RationalPoint{1, 0});

    TriangleStep s2 = triangle_step(rp(2, 3, 1, 3));
    CHECK(s2.digit == 1);
    CHECK(s2.terminal);
    CHECK(s2.image == rp(1, 2, 0, 1));

    TriangleStep s3 = triangle_step(rp(4, 7, 2, 7));
    CHECK(s3.digit == 1);
    CHECK_FALSE(s3.terminal);
    CHECK(s3.image == rp(1, 2, 1, 4));
    TriangleStep s4 = triangle_step(s3.image);
    CHECK(s4.digit == 2);
    CHECK(s4.terminal);
    CHECK(s4.image == rp(1, 2, 0, 1));
}

TEST_CASE("expand") {
    TriSequence a = expand(rp(4, 7, 2, 7), 100);
    CHECK(a.digits == std::vector<BigInt>{1, 2});
    CHECK(a.terminated_at == 2);
    CHECK(a.terminal_point == rp(1, 2, 0, 1));

    TriSequence b = expand(rp(1, 2, 1, 10), 100);
    CHECK(b.digits == std::vector<BigInt>{5});
    CHECK(b.terminated_at == 1);

    TriSequence c = expand({1, 1}, 100);
    CHECK(c.digits == std::vector<BigInt>{0});
    CHECK(c.terminated_at == 1);
}

TEST_CASE("pull_back inverts the expansion") {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 300; ++i) {
        RationalPoint p = random_point(rng, 500);
        TriSequence seq = expand(p, 10000);
        REQUIRE(seq.terminated());
        REQUIRE(pull_back(*seq.terminal_point, seq.digits) == p);
    }
}

TEST_CASE("expand_interval") {
    // Degenerate box reduces to expand.
    IntervalPoint exact{BigRational(4, 7), BigRational(4, 7), BigRational(2, 7),
                        BigRational(2, 7)};
    auto r1 = expand_interval(exact, 100);
    REQUIRE(std::holds_alternative<TriSequence>(r1));
    CHECK(std::get<TriSequence>(r1).digits == std::vector<BigInt>{1, 2});
    CHECK(std::get<TriSequence>(r1).terminated());

    // Narrow box: first digit is pinned to 1 (checked on all corners).
    IntervalPoint narrow{BigRational(543, 1000), BigRational(545, 1000),
                         BigRational(332, 1000), BigRational(334, 1000)};
    auto r2 = expand_interval(narrow, 1);
    REQUIRE(std::holds_alternative<TriSequence>(r2));
    CHECK(std::get<TriSequence>(r2).digits == std::vector<BigInt>{1});

    // Straddling the boundary between the first two cells: x + y brackets 1.
    IntervalPoint straddle{BigRational(6, 10), BigRational(7, 10),
                           BigRational(35, 100), BigRational(45, 100)};
    auto r3 = expand_interval(straddle, 100);
    REQUIRE(std::holds_alternative<Ambiguous>(r3));
    CHECK(std::get<Ambiguous>(r3).step == 0);

    IntervalPoint outside{2, 3, BigRational(1, 2), BigRational(3, 4)};
    CHECK_THROWS_AS(expand_interval(outside, 10), OutOfTriangle);

    // Interval digits agree with the exact expansion of any inner point.
    std::mt19937_64 rng(107);
    for (int i = 0; i < 100; ++i) {
        RationalPoint p = random_point(rng, 300);
        BigRational w(1, 100000);
        IntervalPoint box{p.x - w, p.x + w, p.y - w, p.y + w};
        auto r = expand_interval(box, 3);
        if (!std::holds_alternative<TriSequence>(r)) continue;
        const TriSequence& got = std::get<TriSequence>(r);
        TriSequence want = expand(p, got.digits.size());
        for (std::size_t k = 0; k < got.digits.size(); ++k)
            REQUIRE(got.digits[k] == want.digits[k]);
    }
}

TEST_CASE("c_vectors") {
    std::vector<IntVec3> base = c_vectors({});
    REQUIRE(base.size() == 3);
    CHECK(base[0] == IntVec3{1, 0, 0});
    CHECK(base[1] == IntVec3{0, 1, 0});
    CHECK(base[2] == IntVec3{0, 0, 1});
    CHECK(c_vectors({0})[3] == IntVec3{1, -1, 0});
    CHECK(c_vectors({1})[3] == IntVec3{1, -1, -1});
}

TEST_CASE("digits_from_dots") {
    std::vector<BigRational> trace;
    TriSequence a = digits_from_dots(rp(4, 7, 2, 7), 100, &trace);
    CHECK(a.digits == std::vector<BigInt>{1, 2});
    CHECK(a.terminated());
    REQUIRE(trace.size() == 2);
    CHECK(trace[0] == BigRational(1, 7));
    CHECK(trace[1] == 0);

    CHECK(digits_from_dots({1, 1}, 100).digits == std::vector<BigInt>{0});
    CHECK(digits_from_dots(rp(1, 2, 1, 10), 100).digits ==
          std::vector<BigInt>{5});
}

TEST_CASE("dot-product digits match the orbit and the C vectors") {
    std::mt19937_64 rng(109);
    for (int i = 0; i < 1000; ++i) {
        RationalPoint p = random_point(rng, 1000);
        std::vector<BigRational> ds;
        TriSequence a = digits_from_dots(p, 10000, &ds);
        TriSequence b = expand(p, 10000);
        REQUIRE(a.digits == b.digits);
        REQUIRE(a.terminated());
        REQUIRE(b.terminated());

        // d_k = (1, x, y) . C_k, and every d_k is nonnegative.
        std::vector<IntVec3> cs = c_vectors(a.digits);
        for (std::size_t k = 0; k < ds.size(); ++k) {
            REQUIRE(ds[k] >= 0);
            REQUIRE(ds[k] == ray_dot(p, cs[k + 3]));
        }

        // Orbit membership: the k-th iterate lies in the a_k-th cell.
        RationalPoint cur = p;
        for (std::size_t k = 0; k < b.digits.size(); ++k) {
            REQUIRE(partition_index(cur) == b.digits[k]);
            cur = triangle_step(cur).image;
        }
    }
}
