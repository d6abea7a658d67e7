#include "triseq/triangle_map.hpp"

namespace triseq {

namespace {

void check_in_triangle(const RationalPoint& p) {
    if (!in_triangle(p)) throw OutOfTriangle("point outside 1 >= x >= y > 0");
}

}  // namespace

BigInt partition_index(const RationalPoint& p) {
    check_in_triangle(p);
    return rational_floor((1 - p.x) / p.y);
}

TriangleStep triangle_step(const RationalPoint& p) {
    BigInt k = partition_index(p);
    RationalPoint image{p.y / p.x, (1 - p.x - BigRational(k) * p.y) / p.x};
    return {k, image, image.y == 0};
}

TriSequence expand(const RationalPoint& p, std::size_t max_terms) {
    check_in_triangle(p);
    TriSequence out;
    RationalPoint cur = p;
    while (out.digits.size() < max_terms) {
        TriangleStep step = triangle_step(cur);
        out.digits.push_back(step.digit);
        if (step.terminal) {
            out.terminated_at = out.digits.size();
            out.terminal_point = step.image;
            break;
        }
        cur = step.image;
    }
    return out;
}

RationalPoint triangle_unstep(const RationalPoint& image, const BigInt& digit) {
    BigRational denom = 1 + BigRational(digit) * image.x + image.y;
    BigRational alpha = 1 / denom;
    return {alpha, image.x * alpha};
}

RationalPoint pull_back(const RationalPoint& p, const std::vector<BigInt>& digits) {
    RationalPoint cur = p;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        cur = triangle_unstep(cur, *it);
    }
    return cur;
}

std::variant<TriSequence, Ambiguous> expand_interval(const IntervalPoint& box,
                                                     std::size_t max_terms) {
    if (box.xlo > box.xhi || box.ylo > box.yhi)
        throw OutOfDomain("interval bounds out of order");

    IntervalPoint cur = box;
    TriSequence out;
    for (std::size_t step = 0; out.digits.size() < max_terms; ++step) {
        // Intersection with the triangle must be nonempty.
        bool intersects =
            cur.xlo <= 1 && cur.yhi > 0 && cur.ylo <= cur.xhi;
        if (!intersects) throw OutOfTriangle("box misses the triangle");
        // Whole box inside?
        bool inside = cur.xhi <= 1 && cur.ylo > 0 && cur.xlo >= cur.yhi;
        if (!inside) return Ambiguous{step};

        // (1 - x)/y attains its min at (xhi, yhi) and max at (xlo, ylo), so a
        // single cell covers the box iff the corner indices agree.
        BigInt k_min = rational_floor((1 - cur.xhi) / cur.yhi);
        BigInt k_max = rational_floor((1 - cur.xlo) / cur.ylo);
        if (k_min != k_max) return Ambiguous{step};
        const BigInt& k = k_min;
        out.digits.push_back(k);

        // Image bounds: y/x is increasing in y, decreasing in x;
        // (1 - x - k*y)/x is decreasing in both coordinates on the cell.
        BigRational nxlo = cur.ylo / cur.xhi;
        BigRational nxhi = cur.yhi / cur.xlo;
        BigRational nylo = (1 - cur.xhi - BigRational(k) * cur.yhi) / cur.xhi;
        BigRational nyhi = (1 - cur.xlo - BigRational(k) * cur.ylo) / cur.xlo;
        if (nyhi == 0) {
            out.terminated_at = out.digits.size();
            if (nxlo == nxhi) out.terminal_point = RationalPoint{nxlo, 0};
            return out;
        }
        cur = IntervalPoint{nxlo, nxhi, nylo, nyhi};
    }
    return out;
}

std::vector<IntVec3> c_vectors(const std::vector<BigInt>& digits) {
    std::vector<IntVec3> cs;
    cs.reserve(digits.size() + 3);
    cs.push_back({1, 0, 0});
    cs.push_back({0, 1, 0});
    cs.push_back({0, 0, 1});
    for (std::size_t i = 0; i < digits.size(); ++i) {
        std::size_t n = cs.size();
        cs.push_back(cs[n - 3] - cs[n - 2] - digits[i] * cs[n - 1]);
    }
    return cs;
}

TriSequence digits_from_dots(const RationalPoint& p, std::size_t max_terms,
                             std::vector<BigRational>* d_trace) {
    check_in_triangle(p);
    BigRational d2 = 1;     // d_{k-2}
    BigRational d1 = p.x;   // d_{k-1}
    BigRational d0 = p.y;   // d_k
    TriSequence out;
    while (out.digits.size() < max_terms) {
        if (d0 == 0) {
            out.terminated_at = out.digits.size();
            break;
        }
        BigInt a = rational_floor((d2 - d1) / d0);
        BigRational d_next = d2 - d1 - BigRational(a) * d0;
        if (a < 0 || d_next < 0)
            throw ConsistencyFailure("dot-product recursion left its cone");
        out.digits.push_back(a);
        if (d_trace) d_trace->push_back(d_next);
        d2 = d1;
        d1 = d0;
        d0 = d_next;
    }
    return out;
}

}  // namespace triseq
