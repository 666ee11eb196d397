#pragma once

// Value types shared by the distribution, barrier and series modules, plus the
// small amount of scalar plumbing that lets the lattice formulas be written
// once for both ExactRational and double.

#include <concepts>
#include <cstdint>
#include <optional>

#include "walklab/exact_numerics.hpp"

namespace walklab {

template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, ExactRational>;

/// A probability (or signed lattice value) in exact and/or real form.
/// When `exact` is present, `real` is its nearest double.
struct SignedProbability {
  std::optional<ExactRational> exact;
  double real = 0.0;

  static SignedProbability of(const ExactRational& value) { return {value, value.to_double()}; }
  static SignedProbability of(double value) { return {std::nullopt, value}; }

  bool is_exact() const { return exact.has_value(); }
};

/// Step probability p of a Bernoulli walk, together with its complement 1 - p.
///
/// The complement is stored rather than recomputed so that p values obtained
/// from (1 +- sqrt(1 - x^2)) / 2 keep full relative precision on both sides.
class StepProbability {
 public:
  /// Throws DomainError unless 0 <= p <= 1.
  static StepProbability exact(const ExactRational& p);
  /// Throws DomainError unless 0 <= p <= 1.
  static StepProbability real(double p);
  /// Real p with an independently computed complement; both must lie in [0,1]
  /// and sum to 1 within 1e-15.
  static StepProbability real(double p, double complement);

  bool is_exact() const { return exact_.has_value(); }
  const std::optional<ExactRational>& exact_value() const { return exact_; }
  /// 1 - p in exact form. Only valid when is_exact().
  ExactRational exact_complement() const { return ExactRational(1) - *exact_; }
  double value() const { return real_; }
  double complement() const { return complement_; }

 private:
  StepProbability(std::optional<ExactRational> exact, double real, double complement)
      : exact_(std::move(exact)), real_(real), complement_(complement) {}

  std::optional<ExactRational> exact_;
  double real_ = 0.5;
  double complement_ = 0.5;
};

namespace detail {

inline double integer_power(double base, std::int64_t exponent) {
  double result = 1.0;
  while (exponent > 0) {
    if (exponent & 1) {
      result *= base;
    }
    base *= base;
    exponent >>= 1;
  }
  return result;
}

inline ExactRational integer_power(const ExactRational& base, std::int64_t exponent) { return base.pow(exponent); }

/// C(n,k) p^k q^(n-k) in floating point, accurate to a few ulps for n <= 1000
/// and via log-gamma beyond that or when the power product underflows.
double binomial_weight(std::int64_t n, std::int64_t k, double p, double q);

inline ExactRational binomial_weight(std::int64_t n, std::int64_t k, const ExactRational& p, const ExactRational& q) {
  return ExactRational(binomial(n, k)) * p.pow(k) * q.pow(n - k);
}

template <Scalar T>
T from_ratio(std::int64_t numerator, std::int64_t denominator) {
  if constexpr (std::same_as<T, double>) {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  } else {
    return ExactRational(numerator, denominator);
  }
}

template <Scalar T>
T absolute(const T& value) {
  if constexpr (std::same_as<T, double>) {
    return value < 0 ? -value : value;
  } else {
    return value.abs();
  }
}

inline SignedProbability wrap(const ExactRational& value) { return SignedProbability::of(value); }
inline SignedProbability wrap(double value) { return SignedProbability::of(value); }

/// Evaluates `fn(p, q)` in exact arithmetic when `step` is exact, else in doubles.
template <class Fn>
SignedProbability dispatch(const StepProbability& step, Fn&& fn) {
  if (step.is_exact()) {
    return wrap(fn(*step.exact_value(), step.exact_complement()));
  }
  return wrap(fn(step.value(), step.complement()));
}

}  // namespace detail
}  // namespace walklab
