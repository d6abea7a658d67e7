#ifndef TRISEQ_DYNAMICS_HPP
#define TRISEQ_DYNAMICS_HPP

#include <cstddef>
#include <vector>

#include "triseq/exact.hpp"
#include "triseq/nest.hpp"
#include "triseq/triangle_map.hpp"

namespace triseq {

// Open ball, compared through squared distances.
struct Ball {
    RationalPoint center;
    BigRational radius;

    BigRational radius2() const { return radius * radius; }
};

// Caps for the digit-doubling and prefix-extension searches. Hitting a cap
// raises NotFound; with valid input that signals a bug, not a near miss.
struct SearchBudget {
    BigInt max_digit = BigInt(1) << 64;
    std::size_t max_prefix = 500;
};

// Digit prefix whose triangle's designated edge, from hat(X_{n-1}) to
// farey_sum(X_n, X_{n-2}), passes through the ball. Built from a terminating
// rational seed inside the ball, then digit enlargement or a zero append
// depending on which edge of the seed's triangle the seed lies on.
TriSequence edge_through_ball(const Ball& ball, const SearchBudget& budget = {});

// A partition triangle contained in the ball (all three vertices strictly
// within the radius; convexity covers the rest). A ball swallowing the whole
// domain triangle yields the empty prefix.
PartitionTriangle find_partition_triangle_in_ball(const Ball& ball,
                                                  const SearchBudget& budget = {});

struct MixingSample {
    RationalPoint point;
    bool passed;
};

// Witness that forward images of one cell reach another: every point whose
// expansion starts with A ++ 0^gap ++ B is mapped by |A| + gap steps of the
// triangle map to a point whose expansion starts with B.
struct MixingWitness {
    TriSequence prefix_a;
    TriSequence prefix_b;
    std::size_t gap = 0;
    TriSequence concatenated;
    std::size_t power = 0;  // |A| + gap
    std::vector<MixingSample> samples;
    bool all_passed = false;
};

// Builds the witness and checks it on `samples` interior rational points of
// the concatenated cell (centroid plus weighted vertex combinations). Throws
// EmptyCell if the concatenated prefix has a degenerate triangle.
MixingWitness mixing_witness(const std::vector<BigInt>& prefix_a,
                             const std::vector<BigInt>& prefix_b,
                             std::size_t gap, std::size_t samples = 25);

}  // namespace triseq

#endif
