#pragma once

// Free Bernoulli walk on the integer lattice, started at k = 0: each step goes
// to k+1 with probability p and to k-1 with probability 1-p.
//
// Q0P(n, k, p) is the probability of sitting at k after n steps. Points that
// cannot be reached (n+k odd or |k| > n) have probability 0 rather than being
// an error, so the difference operators built on top stay total.

#include <cstdint>
#include <optional>
#include <vector>

#include "walklab/exact_numerics.hpp"
#include "walklab/probability.hpp"

namespace walklab {

/// Absolute tolerance on 4p(1-p) = x^2 when both p and x are supplied.
inline constexpr double kLinkageTolerance = 1e-12;

class WalkParams {
 public:
  /// Throws DomainError when |x| > 1 or when x does not satisfy 4p(1-p) = x^2.
  explicit WalkParams(StepProbability p, std::optional<double> x = std::nullopt);

  const StepProbability& p() const { return p_; }
  const std::optional<double>& x() const { return x_; }

 private:
  StepProbability p_;
  std::optional<double> x_;
};

enum class LatticeRule { free, barrier, delayed_barrier };

struct LatticeEntry {
  std::int64_t k = 0;
  SignedProbability value;
};

/// One row n of lattice values, sorted by k, holding only points whose parity
/// matches n.
class LatticeDistribution {
 public:
  LatticeDistribution(std::int64_t n, LatticeRule rule, std::vector<LatticeEntry> entries,
                      std::int64_t barrier_position = 0);

  std::int64_t n() const { return n_; }
  LatticeRule rule() const { return rule_; }
  /// The a of barrier(a); 0 for the free and delayed-barrier rules.
  std::int64_t barrier_position() const { return barrier_position_; }
  const std::vector<LatticeEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// nullptr when k is not stored in this row.
  const SignedProbability* find(std::int64_t k) const;

 private:
  std::int64_t n_;
  LatticeRule rule_;
  std::int64_t barrier_position_;
  std::vector<LatticeEntry> entries_;
};

/// True when n-k and n+k are both nonnegative and even.
constexpr bool reachable(std::int64_t n, std::int64_t k) {
  return n >= 0 && n - k >= 0 && n + k >= 0 && ((n + k) % 2 == 0);
}

namespace detail {

void require_step_index(std::int64_t n, const char* what);

template <Scalar T>
T q0p(std::int64_t n, std::int64_t k, const T& p, const T& q) {
  require_step_index(n, "q0p");
  if (!reachable(n, k)) {
    return T(0);
  }
  return binomial_weight(n, (n + k) / 2, p, q);
}

}  // namespace detail

/// C(n, (n+k)/2) p^((n+k)/2) (1-p)^((n-k)/2) on reachable points, else 0.
/// Throws DomainError for n < 0.
template <Scalar T>
T q0p(std::int64_t n, std::int64_t k, const T& p) {
  return detail::q0p(n, k, p, T(1) - p);
}

SignedProbability q0p(std::int64_t n, std::int64_t k, const StepProbability& p);

/// Symmetric walk, q0p(n, k, 1/2).
ExactRational q0(std::int64_t n, std::int64_t k);

/// Row n built forward from the start state by
///   Q0P(n+1, k) = p Q0P(n, k-1) + (1-p) Q0P(n, k+1).
/// Exact when params.p() is exact.
LatticeDistribution distribution_row(std::int64_t n, const WalkParams& params);

/// Q0P(2n, 0, p) = C(2n, n) (p(1-p))^n, the probability of being back at the
/// origin after 2n steps.
SignedProbability return_probability(std::int64_t n, const WalkParams& params);

template <Scalar T>
T return_probability(std::int64_t n, const T& p) {
  return q0p(2 * n, 0, p);
}

/// A symmetric-walk row with the common factor 2^scale_exponent pulled out, so
/// that value(k) = scaled[i] * 2^scale_exponent for entries()[i].
struct ScaledRow {
  LatticeDistribution distribution;
  std::int64_t scale_exponent = 0;
  std::vector<BigInteger> scaled;
  /// Highlighted cell: the return probability (table1) or absorption value (table2).
  std::optional<std::int64_t> marked_k;
};

/// Rescales an exact row by 2^n. Throws DomainError when a value is inexact or
/// its denominator does not divide 2^n.
ScaledRow scale_row(const LatticeDistribution& row, std::optional<std::int64_t> marked_k);

/// Rows 0..max_n of the symmetric walk, centre (return probability) marked on even rows.
std::vector<ScaledRow> table1(std::int64_t max_n);

}  // namespace walklab
