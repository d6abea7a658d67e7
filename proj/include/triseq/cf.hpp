#ifndef TRISEQ_CF_HPP
#define TRISEQ_CF_HPP

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "triseq/exact.hpp"

namespace triseq {

// Classical continued fraction expansion of a rational in (0, 1].
struct CFExpansion {
    std::vector<BigInt> digits;  // all >= 1
    bool terminated = false;
};

// One step of the Gauss map G(x) = 1/x - k with k <= 1/x < k+1.
// Returns (digit, remainder). Throws OutOfDomain unless 0 < x <= 1.
std::pair<BigInt, BigRational> gauss_step(const BigRational& x);

CFExpansion cf_expand(const BigRational& x, std::size_t max_terms);

// Geometric construction: V_n = V_{n-2} + a_n V_{n-1} with V_{-1} = (0,1),
// V_0 = (1,0), a_n the largest integer keeping V_n on the closed same side of
// the line y = x * alpha as V_{n-2}. Landing exactly on the line terminates.
// Produces the same digits as cf_expand. Side tests are exact 2x2
// determinant signs; trace, when non-null, receives V_1..V_n.
CFExpansion cf_geometric(const BigRational& x, std::size_t max_terms,
                         std::vector<std::array<BigInt, 2>>* trace = nullptr);

// Folds a digit list back into the rational it expands.
BigRational cf_value(const std::vector<BigInt>& digits);

}  // namespace triseq

#endif
