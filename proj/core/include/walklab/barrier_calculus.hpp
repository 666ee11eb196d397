#pragma once

// Absorbing barriers on the Bernoulli walk lattice.
//
//   P_a(n,k,p)  barrier at a >= 1: the free distribution minus a shifted copy
//               weighted by (p/(1-p))^a, so that P_a(n,a,p) = 0 while the
//               forward recurrence still holds. Values beyond the barrier
//               (k > a) come out negative and are returned as-is.
//   Q1P(n,k,p)  barrier at the origin that switches on after the first step.
//               |Q1P| is the probability of being at k after n steps without
//               having been absorbed.
//   Q2P(n,k,p)  second-order past difference of Q0P. |Q2P(2n,0,p)| is the
//               probability of absorption exactly at step 2n.
//
// Everything here is exact for ExactRational arguments.

#include <cstdint>
#include <functional>
#include <vector>

#include "walklab/errors.hpp"
#include "walklab/probability.hpp"
#include "walklab/walk_distributions.hpp"

namespace walklab {

class BarrierSpec {
 public:
  /// Barrier at a; throws DomainError unless a >= 1.
  static BarrierSpec at(std::int64_t a);
  /// Barrier at k = 0, active from step 2 on.
  static BarrierSpec delayed() { return BarrierSpec(0, true); }

  bool is_delayed() const { return delayed_; }
  std::int64_t position() const { return position_; }

 private:
  BarrierSpec(std::int64_t position, bool delayed) : position_(position), delayed_(delayed) {}

  std::int64_t position_;
  bool delayed_;
};

/// A function on the lattice, f(n, k, p).
template <Scalar T>
using LatticeFunction = std::function<T(std::int64_t, std::int64_t, const T&)>;

namespace detail {

void require_barrier_position(std::int64_t a);
[[noreturn]] void throw_undefined_point(const char* what, std::int64_t n);

template <Scalar T>
T p_barrier(std::int64_t n, std::int64_t k, std::int64_t a, const T& p, const T& q) {
  require_barrier_position(a);
  if (q == T(0)) {
    throw DegenerateParameterError("p_barrier: reflection weight (p/(1-p))^a is undefined for p = 1");
  }
  const T weight = integer_power(T(p / q), a);
  return q0p(n, k, p, q) - weight * q0p(n, k - 2 * a, p, q);
}

template <Scalar T>
T q1p(std::int64_t n, std::int64_t k, const T& p, const T& q) {
  require_step_index(n, "q1p");
  if (n == 0) {
    // Only |Q1P(0,0,p)| = 1 is constrained; the sign is fixed to +1 here.
    return k == 0 ? T(1) : T(0);
  }
  return q * q0p(n - 1, k + 1, p, q) - p * q0p(n - 1, k - 1, p, q);
}

template <Scalar T>
T q2p(std::int64_t n, std::int64_t k, const T& p, const T& q) {
  if (n < 2) {
    throw_undefined_point("q2p", n);
  }
  return q * q * q0p(n - 2, k + 2, p, q) + p * p * q0p(n - 2, k - 2, p, q) -
         T(2) * p * q * q0p(n - 2, k, p, q);
}

template <Scalar T>
T absorption_probability(std::int64_t n, const T& p, const T& q) {
  if (n < 1) {
    throw DomainError("absorption_probability: return index must be >= 1");
  }
  return q0p(2 * n, 0, p, q) / T(2 * n - 1);
}

}  // namespace detail

/// P_a(n,k,p) = Q0P(n,k,p) - (p/(1-p))^a Q0P(n,k-2a,p).
/// Throws DegenerateParameterError for p = 1, DomainError for a < 1.
template <Scalar T>
T p_barrier(std::int64_t n, std::int64_t k, std::int64_t a, const T& p) {
  return detail::p_barrier(n, k, a, p, T(1) - p);
}
SignedProbability p_barrier(std::int64_t n, std::int64_t k, std::int64_t a, const StepProbability& p);

/// Past difference (1-p) f(n-1, k+1, p) - p f(n-1, k-1, p).
/// Throws UndefinedPointError for n <= 0.
template <Scalar T, class Fn>
T past_difference(Fn&& f, std::int64_t n, std::int64_t k, const T& p) {
  if (n <= 0) {
    detail::throw_undefined_point("past_difference", n);
  }
  return (T(1) - p) * f(n - 1, k + 1, p) - p * f(n - 1, k - 1, p);
}

/// The past difference applied `order` times to f.
template <Scalar T>
LatticeFunction<T> iterated_past_difference(LatticeFunction<T> f, int order) {
  for (int i = 0; i < order; ++i) {
    f = [inner = std::move(f)](std::int64_t n, std::int64_t k, const T& p) {
      return past_difference<T>(inner, n, k, p);
    };
  }
  return f;
}

/// Delayed-barrier distribution (1-p) Q0P(n-1,k+1,p) - p Q0P(n-1,k-1,p) for
/// n >= 1, and Q1P(0,k,p) = [k = 0].
template <Scalar T>
T q1p(std::int64_t n, std::int64_t k, const T& p) {
  return detail::q1p(n, k, p, T(1) - p);
}
SignedProbability q1p(std::int64_t n, std::int64_t k, const StepProbability& p);

/// Second-order past difference of Q0P,
///   (1-p)^2 Q0P(n-2,k+2) + p^2 Q0P(n-2,k-2) - 2p(1-p) Q0P(n-2,k).
/// Throws UndefinedPointError for n < 2.
template <Scalar T>
T q2p(std::int64_t n, std::int64_t k, const T& p) {
  return detail::q2p(n, k, p, T(1) - p);
}
SignedProbability q2p(std::int64_t n, std::int64_t k, const StepProbability& p);

/// Probability of absorption at the delayed origin barrier exactly after step
/// 2n, Q0P(2n,0,p)/(2n-1). Throws DomainError for n < 1.
template <Scalar T>
T absorption_probability(std::int64_t n, const T& p) {
  return detail::absorption_probability(n, p, T(1) - p);
}
SignedProbability absorption_probability(std::int64_t n, const StepProbability& p);

/// Row n under a barrier rule, over all reachable k in [-n, n].
LatticeDistribution barrier_row(std::int64_t n, const BarrierSpec& barrier, const StepProbability& p);

/// Rows 1..max_n of Q1P(., ., 1/2) scaled by 2^n; the absorption cell k = -1 is
/// marked on odd rows. Throws DomainError for max_n < 1.
std::vector<ScaledRow> table2(std::int64_t max_n);

}  // namespace walklab
