#ifndef TRISEQ_TRIANGLE_MAP_HPP
#define TRISEQ_TRIANGLE_MAP_HPP

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "triseq/exact.hpp"

namespace triseq {

// Digit sequence of the triangle map. When the orbit lands on the segment
// {(t, 0) : 0 <= t <= 1} at step k, terminated_at = k and, when the sequence
// was produced from an exact point, terminal_point records the landing spot
// (which lets the original point be recovered exactly).
struct TriSequence {
    std::vector<BigInt> digits;
    std::optional<std::size_t> terminated_at;
    std::optional<RationalPoint> terminal_point;

    bool terminated() const { return terminated_at.has_value(); }
};

// The unique k with 1 - x - k*y >= 0 > 1 - x - (k+1)*y. Equality on the left
// boundary belongs to index k. Throws OutOfTriangle.
BigInt partition_index(const RationalPoint& p);

struct TriangleStep {
    BigInt digit;
    RationalPoint image;
    bool terminal;  // image.y == 0 exactly
};

// T(x, y) = (y/x, (1 - x - k*y)/x) for (x, y) in the k-th partition cell.
TriangleStep triangle_step(const RationalPoint& p);

TriSequence expand(const RationalPoint& p, std::size_t max_terms);

// Inverse branch of T for a known digit: recovers the preimage of `image`.
RationalPoint triangle_unstep(const RationalPoint& image, const BigInt& digit);

// Pulls a point back through a whole digit prefix (last digit applied first).
RationalPoint pull_back(const RationalPoint& p, const std::vector<BigInt>& digits);

// Closed rational box enclosing an intended (possibly irrational) point.
struct IntervalPoint {
    BigRational xlo, xhi;
    BigRational ylo, yhi;
};

// Interval expansion refused to commit: the box straddles a cell boundary at
// the given step.
struct Ambiguous {
    std::size_t step;
};

// Exact interval-arithmetic expansion. Emits a digit only when the whole box
// lies in a single cell; never guesses on boundary straddles. Throws
// OutOfTriangle when the box misses the triangle entirely.
std::variant<TriSequence, Ambiguous> expand_interval(const IntervalPoint& box,
                                                     std::size_t max_terms);

// Lattice approximation vectors C_{-3}..C_n for a digit prefix of length n+1,
// C_k = C_{k-3} - C_{k-2} - a_k C_{k-1} from the standard basis.
std::vector<IntVec3> c_vectors(const std::vector<BigInt>& digits);

// Digit extraction through the dot products d_k = (1, x, y) . C_k alone:
// a_{k+1} = floor((d_{k-2} - d_{k-1}) / d_k), d_{k+1} = d_{k-2} - d_{k-1} -
// a_{k+1} d_k, stopping when some d_k = 0. Agrees with expand() digit for
// digit. d_trace, when non-null, receives d_0..
TriSequence digits_from_dots(const RationalPoint& p, std::size_t max_terms,
                             std::vector<BigRational>* d_trace = nullptr);

}  // namespace triseq

#endif
