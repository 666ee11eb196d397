#include "verify.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "walklab/barrier_calculus.hpp"
#include "walklab/errors.hpp"
#include "walklab/monte_carlo.hpp"
#include "walklab/series_engine.hpp"
#include "walklab/walk_distributions.hpp"

namespace walklab::cli {

namespace {

using R = ExactRational;

// Accumulates cases for one named check and keeps the first failure.
class Recorder {
 public:
  Recorder(std::string suite, std::string name) : suite_(std::move(suite)), name_(std::move(name)) {}

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (ok) {
      return;
    }
    if (failures_++ == 0) {
      first_failure_ = describe();
    }
  }

  CheckResult result() const {
    if (failures_ == 0) {
      return {suite_, name_, true, std::to_string(cases_) + (cases_ == 1 ? " case" : " cases")};
    }
    return {suite_, name_, false,
            first_failure_ + " (" + std::to_string(failures_) + " of " + std::to_string(cases_) + " cases failed)"};
  }

 private:
  std::string suite_;
  std::string name_;
  std::uint64_t cases_ = 0;
  std::uint64_t failures_ = 0;
  std::string first_failure_;
};

std::string at(std::int64_t n, std::int64_t k, const R& p) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + p.to_string();
}

const std::vector<R>& probabilities() {
  static const std::vector<R> ps{R(1, 4), R(1, 2), R(3, 4)};
  return ps;
}

constexpr std::int64_t kBarriers[] = {1, 2, 3};

R central_binomial_ratio(std::int64_t m) {
  return R(binomial(2 * m, m)) / R(4).pow(m);
}

}  // namespace

std::vector<CheckResult> exact_suite(std::int64_t max_n) {
  if (max_n < 2) {
    throw DomainError("exact suite needs max-n >= 2");
  }
  const std::string suite = "exact";
  Recorder normalization(suite, "normalization");
  Recorder row_binomial(suite, "row_matches_binomial");
  Recorder walk_law(suite, "walk_law");
  Recorder barrier_law(suite, "barrier_law");
  Recorder barrier_boundary(suite, "barrier_boundary");
  Recorder delayed_law(suite, "delayed_barrier_law");
  Recorder delayed_boundary(suite, "delayed_barrier_boundary");
  Recorder delayed_shift(suite, "delayed_is_shifted_barrier");
  Recorder compact(suite, "delayed_compact_form");
  Recorder iterated(suite, "second_difference_iterated");
  Recorder second_closed(suite, "second_difference_closed_form");
  Recorder central(suite, "central_second_difference");
  Recorder split(suite, "absorption_split");
  Recorder time_diff(suite, "time_difference");
  Recorder conservation(suite, "mass_conservation");

  for (const R& p : probabilities()) {
    const R q = R(1) - p;
    const auto q0 = [&](std::int64_t n, std::int64_t k) { return q0p(n, k, p); };
    const auto q1 = [&](std::int64_t n, std::int64_t k) { return q1p(n, k, p); };
    const LatticeFunction<R> second = iterated_past_difference<R>(
        [](std::int64_t n, std::int64_t k, const R& pp) { return q0p(n, k, pp); }, 2);

    R absorbed(0);
    for (std::int64_t n = 0; n <= max_n; ++n) {
      const LatticeDistribution row = distribution_row(n, WalkParams(StepProbability::exact(p)));
      R total(0);
      for (const LatticeEntry& e : row.entries()) {
        total += *e.value.exact;
        const R expected = R(binomial(n, (n + e.k) / 2)) * p.pow((n + e.k) / 2) * q.pow((n - e.k) / 2);
        row_binomial.expect(*e.value.exact == expected, [&] { return at(n, e.k, p); });
      }
      normalization.expect(total == R(1), [&] { return "n=" + std::to_string(n) + " sum=" + total.to_string(); });

      if (n % 2 == 0 && n >= 2) {
        absorbed += absorption_probability(n / 2, p);
      }
      R surviving(0);
      for (std::int64_t k = -n - 1; k <= n + 1; ++k) {
        surviving += q1(n, k).abs();
        if (n >= 1) {
          walk_law.expect(q0(n, k) == p * q0(n - 1, k - 1) + q * q0(n - 1, k + 1), [&] { return at(n, k, p); });
          for (const std::int64_t a : kBarriers) {
            barrier_law.expect(
                p_barrier(n, k, a, p) == p * p_barrier(n - 1, k - 1, a, p) + q * p_barrier(n - 1, k + 1, a, p),
                [&] { return at(n, k, p) + " a=" + std::to_string(a); });
          }
          compact.expect(q1(n, k) == R(-k, n) * q0(n, k), [&] { return at(n, k, p); });
          delayed_shift.expect(q1(n, k) == q * p_barrier(n - 1, k + 1, 1, p), [&] { return at(n, k, p); });
        }
        if (n >= 2) {
          delayed_law.expect(q1(n, k) == p * q1(n - 1, k - 1) + q * q1(n - 1, k + 1), [&] { return at(n, k, p); });
          const R q2 = q2p(n, k, p);
          iterated.expect(q2 == second(n, k, p), [&] { return at(n, k, p); });
          second_closed.expect(q2 == R(k * k - n, n * (n - 1)) * q0(n, k), [&] { return at(n, k, p); });
          time_diff.expect(q2 == q0(n, k) - R(4) * p * q * q0(n - 2, k), [&] { return at(n, k, p); });
        }
      }
      for (const std::int64_t a : kBarriers) {
        barrier_boundary.expect(p_barrier(n, a, a, p) == R(0),
                                [&] { return at(n, a, p) + " a=" + std::to_string(a); });
      }
      if (n >= 1) {
        conservation.expect(surviving + absorbed == R(1), [&] {
          return "n=" + std::to_string(n) + " p=" + p.to_string() + " total=" + (surviving + absorbed).to_string();
        });
      }
      if (n == 0) {
        delayed_boundary.expect(q1(0, 0).abs() == R(1), [&] { return at(0, 0, p); });
      } else if (n % 2 == 0) {
        const std::int64_t m = n / 2;
        delayed_boundary.expect(q1(n, 0) == R(0), [&] { return at(n, 0, p); });
        const R central_value = q2p(n, 0, p);
        central.expect(central_value == -R(binomial(n, m)) * (p * q).pow(m) / R(n - 1), [&] { return at(n, 0, p); });
        const R via_neighbours = q * q1(n - 1, 1).abs() + p * q1(n - 1, -1).abs();
        split.expect(central_value.abs() == via_neighbours && via_neighbours == absorption_probability(m, p),
                     [&] { return at(n, 0, p); });
      }
    }
  }

  Recorder gamma_closed(suite, "gamma_closed_form");
  Recorder zeta_closed(suite, "zeta_closed_form");
  Recorder zeta_escape(suite, "zeta_equals_escape");
  Recorder bridge(suite, "series_walk_bridge");
  const SeriesPoint unit = SeriesPoint::exact(R(1));
  const SeriesPoint three_fifths = SeriesPoint::exact(R(3, 5));
  const R half(1, 2);
  R escape(1);
  for (std::int64_t m = 0; m <= max_n; ++m) {
    const R c = central_binomial_ratio(m);
    gamma_closed.expect(*gamma_partial_sum(m, unit).exact_value == R(2 * m + 1) * c,
                        [&] { return "n=" + std::to_string(m); });
    zeta_closed.expect(*zeta_partial_sum(m, unit).exact_value == c, [&] { return "n=" + std::to_string(m); });
    if (m >= 1) {
      escape -= absorption_probability(m, half);
    }
    zeta_escape.expect(*zeta_partial_sum(m, unit).exact_value == escape, [&] { return "n=" + std::to_string(m); });
    // 4 p (1-p) = (3/5)^2 on both branches p = 1/10 and p = 9/10.
    for (const R& p : {R(1, 10), R(9, 10)}) {
      bridge.expect(*gamma_term(m, three_fifths).exact == return_probability(m, p),
                    [&] { return "l=" + std::to_string(m) + " p=" + p.to_string(); });
      if (m >= 1) {
        bridge.expect(*zeta_term(m, three_fifths).exact == absorption_probability(m, p),
                      [&] { return "zeta l=" + std::to_string(m) + " p=" + p.to_string(); });
      }
    }
  }

  std::vector<CheckResult> out;
  for (const Recorder* r : {&normalization, &row_binomial, &walk_law, &barrier_law, &barrier_boundary, &delayed_law,
                            &delayed_boundary, &delayed_shift, &compact, &iterated, &second_closed, &central, &split,
                            &time_diff, &conservation, &gamma_closed, &zeta_closed, &zeta_escape, &bridge}) {
    out.push_back(r->result());
  }
  return out;
}

std::vector<std::int64_t> log_spaced(std::int64_t lo, std::int64_t hi, int count) {
  std::vector<std::int64_t> out;
  const double a = std::log(static_cast<double>(lo));
  const double b = std::log(static_cast<double>(hi));
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    const auto n = static_cast<std::int64_t>(std::llround(std::exp(a + t * (b - a))));
    if (out.empty() || out.back() != n) {
      out.push_back(n);
    }
  }
  return out;
}

std::vector<CheckResult> asymptotic_suite(std::int64_t max_n) {
  if (max_n < 10) {
    throw DomainError("asymptotic suite needs max-n >= 10");
  }
  const std::string suite = "asymptotic";
  Recorder gamma(suite, "gamma_stirling");
  Recorder zeta(suite, "zeta_stirling");
  Recorder centre(suite, "return_probability_stirling");
  Recorder absorption(suite, "absorption_stirling");
  for (const std::int64_t n : log_spaced(10, max_n, 50)) {
    const double nd = static_cast<double>(n);
    const StirlingEstimates est = stirling_estimates(n);
    const double g = gamma_partial_sum(n, 1.0).real_value;
    const double z = zeta_partial_sum(n, 1.0).real_value;
    const double c = return_probability(n, 0.5);
    const double a = absorption_probability(n, 0.5);
    auto describe = [&](double value, double estimate) {
      return "n=" + std::to_string(n) + " value=" + format_decimal(value) + " estimate=" + format_decimal(estimate);
    };
    gamma.expect(std::abs(g / est.gamma - 1.0) <= 1.0 / (2.0 * nd), [&] { return describe(g, est.gamma); });
    zeta.expect(std::abs(z / est.zeta - 1.0) <= 1.0 / (4.0 * nd), [&] { return describe(z, est.zeta); });
    centre.expect(std::abs(c / est.q0_center - 1.0) <= 1.0 / (4.0 * nd), [&] { return describe(c, est.q0_center); });
    absorption.expect(std::abs(a / est.absorption - 1.0) <= 1.0 / nd, [&] { return describe(a, est.absorption); });
  }
  return {gamma.result(), zeta.result(), centre.result(), absorption.result()};
}

std::vector<CheckResult> stochastic_suite(std::uint64_t walks, std::uint64_t seed) {
  const std::string suite = "stochastic";
  SimulationConfig config;
  config.p = 0.5;
  config.walks = walks;
  config.seed = seed;
  config.barrier = BarrierMode::delayed_at_origin;

  auto interval_check = [&](const std::string& name, const Estimate& e, double expected) {
    Recorder r(suite, name);
    r.expect(e.contains(expected), [&] {
      return "estimate=" + format_decimal(e.value) + " interval=[" + format_decimal(e.ci_low) + ", " +
             format_decimal(e.ci_high) + "] exact=" + format_decimal(expected);
    });
    return r.result();
  };

  std::vector<CheckResult> out;
  config.max_steps = 10;
  const SimulationReport short_run = run_absorbing_walks(config);
  out.push_back(interval_check("escape_10_steps", short_run.escape_estimate(), R(63, 256).to_double()));
  out.push_back(interval_check("absorption_step_2", short_run.first_return_estimate(2), 0.5));
  out.push_back(interval_check("absorption_step_4", short_run.first_return_estimate(4), 0.125));

  config.max_steps = 100;
  const SimulationReport long_run = run_absorbing_walks(config);
  out.push_back(interval_check("escape_100_steps", long_run.escape_estimate(), q0(100, 0).to_double()));

  SimulationConfig free = config;
  free.barrier = BarrierMode::none;
  free.max_steps = 10;
  const DeviationSummary summary = compare_report(run_free_walks(free));
  Recorder agreement(suite, "free_walk_agreement");
  agreement.expect(!summary.any_flagged(), [&] { return "max |z| = " + format_decimal(summary.max_abs_z()); });
  out.push_back(agreement.result());

  config.max_steps = 10;
  Recorder determinism(suite, "thread_count_invariance");
  determinism.expect(report_to_json(run_absorbing_walks(config, 1)) == report_to_json(run_absorbing_walks(config, 4)),
                     [] { return "reports differ between 1 and 4 threads"; });
  out.push_back(determinism.result());
  return out;
}

}  // namespace walklab::cli
