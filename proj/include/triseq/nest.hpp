#ifndef TRISEQ_NEST_HPP
#define TRISEQ_NEST_HPP

#include <array>
#include <cstddef>
#include <variant>
#include <vector>

#include "triseq/exact.hpp"
#include "triseq/triangle_map.hpp"

namespace triseq {

// X_k = C_k x C_{k+1} for k = -3..n, indexed from -3. X_n only needs the
// digits a_0..a_n because the a_{n+1} term of C_{n+1} cancels in the cross
// product: X_n = C_n x (C_{n-2} - C_{n-1}).
class XState {
 public:
    XState() = default;
    explicit XState(std::vector<IntVec3> xs) : xs_(std::move(xs)) {}

    // X_k, k from -3 to max_index().
    const IntVec3& at(long k) const {
        if (k < -3 || k > max_index()) throw IndexOutOfRange("XState::at");
        return xs_[static_cast<std::size_t>(k + 3)];
    }
    long max_index() const { return static_cast<long>(xs_.size()) - 4; }
    std::size_t size() const { return xs_.size(); }

 private:
    std::vector<IntVec3> xs_;
};

// Builds X_{-3}..X_n from a digit prefix (n = digits.size() - 1; the empty
// prefix gives X_{-3}..X_{-1}). Each X_k is computed both as a cross product
// of C vectors and by the recursion X_k = X_{k-3} + a_k X_{k-2} + X_{k-1};
// disagreement throws ConsistencyFailure.
XState x_vectors(const std::vector<BigInt>& digits);

// The partition triangle of a digit prefix: all points whose expansion starts
// with that prefix. Vertices are hat(X_{n-1}), hat(X_n), X_n +f X_{n-2}.
struct PartitionTriangle {
    std::vector<BigInt> prefix;
    std::array<RationalPoint, 3> vertices;  // {hat X_{n-1}, hat X_n, farey}
    XState xstate;
};

PartitionTriangle triangle_vertices(const std::vector<BigInt>& prefix);

// Same, reusing an already-built XState covering the prefix.
std::array<RationalPoint, 3> prefix_vertices(const XState& xs, long n);

// Exact squared side lengths: tau = hat X_{n-1} to hat X_n, rho = hat X_n to
// the Farey vertex, mu = hat X_{n-1} to the Farey vertex.
struct SideLengths {
    BigRational tau2;
    BigRational rho2;
    BigRational mu2;
    BigRational s2;  // max of the three
};

SideLengths side_lengths(const PartitionTriangle& tri);
SideLengths side_lengths(const std::array<RationalPoint, 3>& v);

enum class Containment { Open, Closed };

bool contains(const PartitionTriangle& tri, const RationalPoint& p,
              Containment mode);
bool triangle_contains(const std::array<RationalPoint, 3>& v,
                       const RationalPoint& p, Containment mode);

// Dual plane-rotation digit: with xs holding X vectors through index n-1,
// returns the digit a_n for which the ray (1, p.x, p.y) lies between the
// planes spanned by {X_{n-1}, X_{n-1}+X_{n-3}+a_n X_{n-2}} and the next one.
// Must equal the digit expand() would produce at step n for the original
// point p. Throws Degenerate when the ray lies in the rotation axis plane
// (which is exactly the termination condition).
BigInt dual_digit(const XState& xs, const RationalPoint& p);

// Full dual-construction expansion of a point, for cross-validation.
TriSequence dual_expand(const RationalPoint& p, std::size_t max_terms);

// Nested-triangle limit analysis.
struct PointEstimate {
    RationalPoint point;
    BigRational enclosure_radius2;  // 0 when exact
    bool exact;
};

struct SegmentEstimate {
    RationalPoint even_limit;
    RationalPoint odd_limit;
    double length_lower_bound;
    BigRational gap2;             // squared distance between the two limits
    BigRational even_residual2;   // within-parity residual at depth, squared
    BigRational odd_residual2;
};

using LimitEstimate = std::variant<PointEstimate, SegmentEstimate>;

// Examines the vertices hat(X_k) of the nested triangles up to `depth`
// digits. Same-parity vertices always converge; the sequence describes a
// segment when the cross-parity gap stays large against the within-parity
// residuals (factor 8 by default; both residuals are reported so callers can
// re-decide). Terminated sequences are resolved exactly by pulling the
// landing point (or the whole terminal segment) back through the digits.
LimitEstimate limit_estimate(const TriSequence& seq, std::size_t depth,
                             unsigned segment_factor = 8);

}  // namespace triseq

#endif
