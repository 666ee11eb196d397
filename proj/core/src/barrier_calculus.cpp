#include "walklab/barrier_calculus.hpp"

#include <string>

namespace walklab {

BarrierSpec BarrierSpec::at(std::int64_t a) {
  detail::require_barrier_position(a);
  return BarrierSpec(a, false);
}

namespace detail {

void require_barrier_position(std::int64_t a) {
  if (a < 1) {
    throw DomainError("barrier position must be >= 1, got " + std::to_string(a));
  }
}

void throw_undefined_point(const char* what, std::int64_t n) {
  throw UndefinedPointError(std::string(what) + ": undefined at step index " + std::to_string(n));
}

}  // namespace detail

SignedProbability p_barrier(std::int64_t n, std::int64_t k, std::int64_t a, const StepProbability& p) {
  return detail::dispatch(p, [&](const auto& up, const auto& down) { return detail::p_barrier(n, k, a, up, down); });
}

SignedProbability q1p(std::int64_t n, std::int64_t k, const StepProbability& p) {
  return detail::dispatch(p, [&](const auto& up, const auto& down) { return detail::q1p(n, k, up, down); });
}

SignedProbability q2p(std::int64_t n, std::int64_t k, const StepProbability& p) {
  return detail::dispatch(p, [&](const auto& up, const auto& down) { return detail::q2p(n, k, up, down); });
}

SignedProbability absorption_probability(std::int64_t n, const StepProbability& p) {
  return detail::dispatch(p,
                          [&](const auto& up, const auto& down) { return detail::absorption_probability(n, up, down); });
}

LatticeDistribution barrier_row(std::int64_t n, const BarrierSpec& barrier, const StepProbability& p) {
  detail::require_step_index(n, "barrier_row");
  std::vector<LatticeEntry> entries;
  entries.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t k = -n; k <= n; k += 2) {
    entries.push_back({k, barrier.is_delayed() ? q1p(n, k, p) : p_barrier(n, k, barrier.position(), p)});
  }
  if (barrier.is_delayed()) {
    return LatticeDistribution(n, LatticeRule::delayed_barrier, std::move(entries));
  }
  return LatticeDistribution(n, LatticeRule::barrier, std::move(entries), barrier.position());
}

std::vector<ScaledRow> table2(std::int64_t max_n) {
  if (max_n < 1) {
    throw DomainError("table2: max_n must be >= 1");
  }
  const auto half = StepProbability::exact(ExactRational(1, 2));
  std::vector<ScaledRow> rows;
  rows.reserve(static_cast<std::size_t>(max_n));
  for (std::int64_t n = 1; n <= max_n; ++n) {
    std::optional<std::int64_t> marked;
    if (n % 2 == 1) {
      marked = -1;
    }
    rows.push_back(scale_row(barrier_row(n, BarrierSpec::delayed(), half), marked));
  }
  return rows;
}

}  // namespace walklab
