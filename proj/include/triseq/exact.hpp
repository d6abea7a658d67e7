#ifndef TRISEQ_EXACT_HPP
#define TRISEQ_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "triseq/errors.hpp"

namespace triseq {

// All arithmetic in this library is exact. BigRational values are kept in
// lowest terms with a positive denominator by cpp_rational itself.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt rational_floor(const BigRational& r);

// Floor division; the divisor must be nonzero.
BigInt floor_div(const BigInt& num, const BigInt& den);

double to_double(const BigRational& r);

// Exact integer 3-vector in projective coordinates (z, x, y): the lead
// component z scales the affine point (x/z, y/z) in the plane z = 1.
struct IntVec3 {
    BigInt z;
    BigInt x;
    BigInt y;

    bool operator==(const IntVec3&) const = default;
};

IntVec3 operator+(const IntVec3& u, const IntVec3& v);
IntVec3 operator-(const IntVec3& u, const IntVec3& v);
IntVec3 operator*(const BigInt& s, const IntVec3& v);

IntVec3 cross(const IntVec3& u, const IntVec3& v);
BigInt dot(const IntVec3& u, const IntVec3& v);

// Exact rational point in the plane z = 1.
struct RationalPoint {
    BigRational x;
    BigRational y;

    bool operator==(const RationalPoint&) const = default;
};

// Dot product of the ray vector (1, p.x, p.y) with an integer vector.
BigRational ray_dot(const RationalPoint& p, const IntVec3& v);

// Membership in the reference triangle {(x, y) : 1 >= x >= y > 0}.
bool in_triangle(const RationalPoint& p);
// Strict interior: 1 > x > y > 0.
bool in_open_triangle(const RationalPoint& p);

// Central projection (z, x, y) -> (x/z, y/z). Throws ZeroLeadComponent.
RationalPoint hat(const IntVec3& v);

// Farey sum: hat of the componentwise sum. Throws ZeroLeadComponent when the
// lead components cancel.
RationalPoint farey_sum(const IntVec3& t, const IntVec3& s);

// Squared Euclidean distance, exact. (Lengths themselves may be irrational;
// comparisons are always done on squared forms.)
BigRational dist2(const RationalPoint& p, const RationalPoint& q);

double approx_dist(const RationalPoint& p, const RationalPoint& q);

// Signed doubled area of (a, b, c); zero iff collinear.
BigRational orient(const RationalPoint& a, const RationalPoint& b,
                   const RationalPoint& c);

// p lies on the closed segment [a, b].
bool on_segment(const RationalPoint& a, const RationalPoint& b,
                const RationalPoint& p);

// Closest point of the closed segment [a, b] to p (rational).
RationalPoint closest_point_on_segment(const RationalPoint& a,
                                       const RationalPoint& b,
                                       const RationalPoint& p);

// Min squared distance from p to the closed segment [a, b].
BigRational segment_dist2(const RationalPoint& a, const RationalPoint& b,
                          const RationalPoint& p);

}  // namespace triseq

#endif
