#ifndef TRISEQ_UNIQUENESS_HPP
#define TRISEQ_UNIQUENESS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "triseq/exact.hpp"

namespace triseq {

// Deterministic digit generators for the worked example families.
struct SequenceFamily {
    enum class Kind { Linear, Square, Prime, Pow2, Constant, Custom };

    Kind kind = Kind::Custom;
    BigInt constant = 0;          // Constant only
    std::vector<BigInt> data;     // Custom only

    static SequenceFamily linear();    // a_n = n
    static SequenceFamily square();    // a_n = n^2
    static SequenceFamily prime();     // a_n = (n+1)-th prime: 2, 3, 5, ...
    static SequenceFamily pow2();      // a_0 = 0, a_n = 2^(n-1)
    static SequenceFamily constant_digits(const BigInt& c);
    static SequenceFamily custom(std::vector<BigInt> digits);

    BigInt digit(std::size_t n) const;
    std::vector<BigInt> digits(std::size_t count) const;
    std::string name() const;
    // Custom families can only be analyzed as far as their data reaches.
    std::optional<std::size_t> length() const;
};

// Deterministic sieve; nth is 1-based (nth_prime(1) = 2).
BigInt nth_prime(std::size_t n);

// First components x_k of the X vectors, together with the digit attached to
// each recursion index: x_k = x_{k-3} + a_k x_{k-2} + x_{k-1}.
class XSeq {
 public:
    // Standard-basis seeds x_{-3} = 0, x_{-2} = x_{-1} = 1; digit a_k at
    // index k straight from the family.
    static XSeq from_family(const SequenceFamily& fam, long depth);

    // The a_n = 2^(n-1) family under the seeded indexing convention that
    // yields the integers 1, 1, 3, 8, 33, 164, 1228, 11757, ...: seeds
    // x_0 = x_1 = 1, x_2 = 3 and multiplier 2^(k-1) applied at index k >= 3.
    // (The same recursion from the standard basis reproduces the 1, 1, 3 seed
    // run one index later but then diverges, because the basis convention
    // attaches 2^(k-1) one slot earlier.)
    static XSeq pow2_seeded(long depth);

    const BigInt& x(long k) const;
    BigInt a(long k) const;  // digit used at recursion index k
    long min_index() const { return min_; }
    long max_index() const { return min_ + static_cast<long>(xs_.size()) - 1; }

 private:
    std::vector<BigInt> xs_;
    long min_ = -3;
    SequenceFamily fam_;
    bool seeded_pow2_ = false;
};

// Edge-length ratios of Proposition 23, exact. All lie in (0, 1]; a_next = 0
// gives lambda = 1.
struct LambdaTriple {
    BigRational lambda;
    BigRational lambda_tilde;
    BigRational lambda_prime;  // = lambda - lambda_tilde exactly
};

LambdaTriple lambda_family(const XSeq& xs, long n, const BigInt& a_next);
LambdaTriple lambda_family(const XSeq& xs, long n);

// 1 - lambda_n = a_{n+1} x_{n-1} / x_{n+1}, exact.
BigRational one_minus_lambda(const XSeq& xs, long n);

// prod_{n=N}^{M} (1 - lambda_n), computed both termwise and by the telescoped
// closed form x_{N-1} x_N / (x_M x_{M+1}) * prod a_n; the two must agree
// exactly (ConsistencyFailure otherwise). Throws ZeroDigit when some a_n = 0
// for N < n <= M+1.
BigRational partial_product(const XSeq& xs, long N, long M);
BigRational partial_product(const SequenceFamily& fam, long N, long M);

enum class Verdict { Unique, NonUnique, Undetermined };

struct Evidence {
    std::string rule;
    std::string bound;
};

struct ClassificationReport {
    Verdict verdict = Verdict::Undetermined;
    BigRational partial_product;  // over the zero-free tail up to depth
    std::size_t depth = 0;
    std::size_t zero_count = 0;
    std::vector<Evidence> evidence;
};

std::string to_string(Verdict v);

// Decision procedure: the symbolic families carry their analytic verdicts
// (with the numeric evidence computed and attached); finite custom data only
// ever yields evidence, never a theorem. An optional positive analytic lower
// bound on the tail product upgrades custom data to NonUnique.
ClassificationReport classify(
    const SequenceFamily& fam, std::size_t depth,
    const BigRational& unique_threshold,
    const std::optional<BigRational>& tail_lower_bound = std::nullopt);

// Exact rational lower bound for prod_{n=7}^inf (1 - 2^(1 - n/2)), the tail
// bound used in the 2^(n-1) non-uniqueness argument. Positive.
BigRational pow2_tail_product_lower_bound();

// Exact check of 1 + 2^((n-1)/2) <= x_n / x_{n-1} <= 2^(n/2); surds are
// compared by squaring with sign analysis, no floating point.
bool pow2_growth_bounds_hold(long n, const BigInt& xn, const BigInt& xn_minus_1);

struct InequalityViolation {
    std::string check;
    long index;
};

struct InequalityReport {
    std::size_t checks_run = 0;
    std::vector<InequalityViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Runs the appendix inequality suite (Proposition 23 identity and closed
// forms, Corollary 24 monotonicity, Lemmas 25 and 26) exactly on the family's
// nested triangles up to `depth`. Length inequalities are decided on squared
// forms.
InequalityReport inequality_suite(const SequenceFamily& fam, std::size_t depth);

// Value a + b*sqrt(2) with exact sign determination.
struct Root2Num {
    BigRational a;
    BigRational b;

    int sign() const;
    Root2Num operator*(const Root2Num& o) const;
    Root2Num operator-(const Root2Num& o) const;
};

// prod_{n=N}^{M} (1 - 2^(1 - n/2)) as an element of Q[sqrt(2)].
Root2Num pow2_bound_product(long N, long M);

// Compare a rational against a Q[sqrt(2)] value: sign of (lhs - rhs).
int compare_rational_root2(const BigRational& lhs, const Root2Num& rhs);

}  // namespace triseq

#endif
