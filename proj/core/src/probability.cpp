#include "walklab/probability.hpp"

#include <cmath>
#include <string>

#include "walklab/errors.hpp"

namespace walklab {

namespace {

void require_unit_interval(double value, const char* what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in [0, 1], got " + std::to_string(value));
  }
}

}  // namespace

StepProbability StepProbability::exact(const ExactRational& p) {
  if (p.sign() < 0 || p > ExactRational(1)) {
    throw DomainError("step probability must lie in [0, 1], got " + p.to_string());
  }
  const double real = p.to_double();
  return StepProbability(p, real, (ExactRational(1) - p).to_double());
}

StepProbability StepProbability::real(double p) {
  require_unit_interval(p, "step probability");
  return StepProbability(std::nullopt, p, 1.0 - p);
}

StepProbability StepProbability::real(double p, double complement) {
  require_unit_interval(p, "step probability");
  require_unit_interval(complement, "complement of step probability");
  if (std::abs(p + complement - 1.0) > 1e-15) {
    throw DomainError("step probability and complement do not sum to 1");
  }
  return StepProbability(std::nullopt, p, complement);
}

namespace detail {

double binomial_weight(std::int64_t n, std::int64_t k, double p, double q) {
  if (k < 0 || k > n) {
    return 0.0;
  }
  if ((k > 0 && p == 0.0) || (n - k > 0 && q == 0.0)) {
    return 0.0;
  }
  if (n <= 1000) {
    const double powers = integer_power(p, k) * integer_power(q, n - k);
    if (powers >= 1e-290) {
      return ExactRational(binomial(n, k)).to_double() * powers;
    }
  }
  double log_weight = std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
                      std::lgamma(static_cast<double>(n - k) + 1.0);
  if (k > 0) {
    log_weight += static_cast<double>(k) * std::log(p);
  }
  if (n - k > 0) {
    log_weight += static_cast<double>(n - k) * std::log(q);
  }
  return std::exp(log_weight);
}

}  // namespace detail
}  // namespace walklab
