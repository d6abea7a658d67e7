#include "triseq/exact.hpp"

namespace triseq {

BigInt floor_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("floor_div: zero divisor");
    BigInt q = num / den;  // truncates toward zero
    if (q * den != num && ((num < 0) != (den < 0))) --q;
    return q;
}

BigInt rational_floor(const BigRational& r) {
    return floor_div(numerator(r), denominator(r));
}

double to_double(const BigRational& r) {
    return r.convert_to<double>();
}

IntVec3 operator+(const IntVec3& u, const IntVec3& v) {
    return {u.z + v.z, u.x + v.x, u.y + v.y};
}

IntVec3 operator-(const IntVec3& u, const IntVec3& v) {
    return {u.z - v.z, u.x - v.x, u.y - v.y};
}

IntVec3 operator*(const BigInt& s, const IntVec3& v) {
    return {s * v.z, s * v.x, s * v.y};
}

IntVec3 cross(const IntVec3& u, const IntVec3& v) {
    return {u.x * v.y - u.y * v.x,
            u.y * v.z - u.z * v.y,
            u.z * v.x - u.x * v.z};
}

BigInt dot(const IntVec3& u, const IntVec3& v) {
    return u.z * v.z + u.x * v.x + u.y * v.y;
}

BigRational ray_dot(const RationalPoint& p, const IntVec3& v) {
    return BigRational(v.z) + p.x * BigRational(v.x) + p.y * BigRational(v.y);
}

bool in_triangle(const RationalPoint& p) {
    return p.x <= 1 && p.y <= p.x && p.y > 0;
}

bool in_open_triangle(const RationalPoint& p) {
    return p.x < 1 && p.y < p.x && p.y > 0;
}

RationalPoint hat(const IntVec3& v) {
    if (v.z == 0) throw ZeroLeadComponent("hat: lead component is zero");
    return {BigRational(v.x, v.z), BigRational(v.y, v.z)};
}

RationalPoint farey_sum(const IntVec3& t, const IntVec3& s) {
    BigInt lead = t.z + s.z;
    if (lead == 0) throw ZeroLeadComponent("farey_sum: lead components cancel");
    return {BigRational(t.x + s.x, lead), BigRational(t.y + s.y, lead)};
}

BigRational dist2(const RationalPoint& p, const RationalPoint& q) {
    BigRational dx = p.x - q.x;
    BigRational dy = p.y - q.y;
    return dx * dx + dy * dy;
}

double approx_dist(const RationalPoint& p, const RationalPoint& q) {
    return std::sqrt(to_double(dist2(p, q)));
}

BigRational orient(const RationalPoint& a, const RationalPoint& b,
                   const RationalPoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool on_segment(const RationalPoint& a, const RationalPoint& b,
                const RationalPoint& p) {
    if (orient(a, b, p) != 0) return false;
    // Collinear: check the parameter range on the dominant axis.
    if (a.x != b.x) {
        return (p.x >= a.x && p.x <= b.x) || (p.x >= b.x && p.x <= a.x);
    }
    return (p.y >= a.y && p.y <= b.y) || (p.y >= b.y && p.y <= a.y);
}

RationalPoint closest_point_on_segment(const RationalPoint& a,
                                       const RationalPoint& b,
                                       const RationalPoint& p) {
    BigRational dx = b.x - a.x;
    BigRational dy = b.y - a.y;
    BigRational len2 = dx * dx + dy * dy;
    if (len2 == 0) return a;
    BigRational t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    return {a.x + t * dx, a.y + t * dy};
}

BigRational segment_dist2(const RationalPoint& a, const RationalPoint& b,
                          const RationalPoint& p) {
    return dist2(p, closest_point_on_segment(a, b, p));
}

}  // namespace triseq
