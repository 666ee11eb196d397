#include "walklab/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "walklab/barrier_calculus.hpp"
#include "walklab/errors.hpp"
#include "walklab/philox.hpp"
#include "walklab/series_engine.hpp"
#include "walklab/walk_distributions.hpp"

namespace walklab {

void SimulationConfig::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError("p must lie in [0, 1]");
  }
  if (max_steps <= 0 || max_steps % 2 != 0) {
    throw ConfigError("max_steps must be even and positive");
  }
  if (walks == 0) {
    throw ConfigError("walks must be >= 1");
  }
  if (chunk_size == 0) {
    throw ConfigError("chunk_size must be >= 1");
  }
}

Estimate wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0 || successes > trials) {
    throw DomainError("wilson_interval: need 0 <= successes <= trials, trials > 0");
  }
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  return Estimate{phat, std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

// Counts for a contiguous set of walks. Index m of first_return is step 2m;
// index j of occupancy is k = 2j - max_steps.
struct Tally {
  std::vector<std::uint64_t> first_return;
  std::vector<std::uint64_t> occupancy;
  std::uint64_t escaped = 0;

  explicit Tally(std::int64_t max_steps)
      : first_return(static_cast<std::size_t>(max_steps / 2) + 1, 0),
        occupancy(static_cast<std::size_t>(max_steps) + 1, 0) {}

  void merge(const Tally& other) {
    for (std::size_t i = 0; i < first_return.size(); ++i) {
      first_return[i] += other.first_return[i];
    }
    for (std::size_t i = 0; i < occupancy.size(); ++i) {
      occupancy[i] += other.occupancy[i];
    }
    escaped += other.escaped;
  }
};

void run_chunk(const SimulationConfig& config, std::uint64_t chunk, Tally& tally) {
  const std::uint64_t begin = chunk * config.chunk_size;
  const std::uint64_t end = std::min(config.walks, begin + config.chunk_size);
  const bool absorbing = config.barrier == BarrierMode::delayed_at_origin;
  const std::int64_t steps = config.max_steps;
  const double p = config.p;
  PhiloxStream stream(config.seed, chunk);

  for (std::uint64_t walk = begin; walk < end; ++walk) {
    std::int64_t position = 0;
    bool returned = false;
    for (std::int64_t step = 1; step <= steps; ++step) {
      position += stream.next_uniform() < p ? 1 : -1;
      if (position == 0 && !returned) {
        ++tally.first_return[static_cast<std::size_t>(step / 2)];
        returned = true;
        if (absorbing) {
          break;
        }
      }
    }
    if (!returned) {
      ++tally.escaped;
    }
    if (!absorbing) {
      ++tally.occupancy[static_cast<std::size_t>((position + steps) / 2)];
    }
  }
}

Tally run_ensemble(const SimulationConfig& config, unsigned threads) {
  const std::uint64_t chunks = (config.walks + config.chunk_size - 1) / config.chunk_size;
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));

  std::atomic<std::uint64_t> next_chunk{0};
  std::vector<Tally> partial(threads, Tally(config.max_steps));
  auto worker = [&](unsigned id) {
    for (std::uint64_t chunk = next_chunk++; chunk < chunks; chunk = next_chunk++) {
      run_chunk(config, chunk, partial[id]);
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned id = 1; id < threads; ++id) {
      pool.emplace_back(worker, id);
    }
    worker(0);
  }

  // Integer sums: the merge order cannot affect the result.
  Tally total(config.max_steps);
  for (const Tally& t : partial) {
    total.merge(t);
  }
  return total;
}

SimulationReport build_report(const SimulationConfig& config, const Tally& tally) {
  SimulationReport report;
  report.config = config;
  report.rng = std::string(kRngName);
  report.escaped_count = tally.escaped;
  for (std::size_t m = 1; m < tally.first_return.size(); ++m) {
    report.first_return_histogram[2 * static_cast<std::int64_t>(m)] = tally.first_return[m];
  }
  if (config.barrier == BarrierMode::none) {
    for (std::size_t j = 0; j < tally.occupancy.size(); ++j) {
      report.occupancy_histogram[2 * static_cast<std::int64_t>(j) - config.max_steps] = tally.occupancy[j];
    }
  }
  return report;
}

std::uint64_t lookup(const std::map<std::int64_t, std::uint64_t>& histogram, std::int64_t key) {
  const auto it = histogram.find(key);
  return it == histogram.end() ? 0 : it->second;
}

}  // namespace

SimulationReport run_free_walks(const SimulationConfig& config, unsigned threads) {
  config.validate();
  if (config.barrier != BarrierMode::none) {
    throw ConfigError("run_free_walks requires barrier = none");
  }
  return build_report(config, run_ensemble(config, threads));
}

SimulationReport run_absorbing_walks(const SimulationConfig& config, unsigned threads) {
  config.validate();
  if (config.barrier != BarrierMode::delayed_at_origin) {
    throw ConfigError("run_absorbing_walks requires barrier = delayed");
  }
  return build_report(config, run_ensemble(config, threads));
}

SimulationReport simulate(const SimulationConfig& config, unsigned threads) {
  return config.barrier == BarrierMode::none ? run_free_walks(config, threads) : run_absorbing_walks(config, threads);
}

Estimate SimulationReport::escape_estimate() const { return wilson_interval(escaped_count, config.walks); }

Estimate SimulationReport::first_return_estimate(std::int64_t step) const {
  return wilson_interval(lookup(first_return_histogram, step), config.walks);
}

Estimate SimulationReport::occupancy_estimate(std::int64_t k) const {
  return wilson_interval(lookup(occupancy_histogram, k), config.walks);
}

std::vector<NamedEstimate> SimulationReport::estimates() const {
  std::vector<NamedEstimate> out;
  for (const auto& [step, count] : first_return_histogram) {
    out.push_back({"first_return", step, count, wilson_interval(count, config.walks)});
  }
  out.push_back({"escape", config.max_steps, escaped_count, escape_estimate()});
  for (const auto& [k, count] : occupancy_histogram) {
    out.push_back({"occupancy", k, count, wilson_interval(count, config.walks)});
  }
  return out;
}

bool operator==(const SimulationReport& a, const SimulationReport& b) {
  const SimulationConfig& x = a.config;
  const SimulationConfig& y = b.config;
  return x.p == y.p && x.max_steps == y.max_steps && x.walks == y.walks && x.seed == y.seed &&
         x.barrier == y.barrier && x.chunk_size == y.chunk_size && a.rng == b.rng &&
         a.first_return_histogram == b.first_return_histogram && a.escaped_count == b.escaped_count &&
         a.occupancy_histogram == b.occupancy_histogram;
}

bool DeviationSummary::any_flagged() const {
  return std::any_of(deviations.begin(), deviations.end(), [](const Deviation& d) { return d.flagged; });
}

double DeviationSummary::max_abs_z() const {
  double worst = 0.0;
  for (const Deviation& d : deviations) {
    worst = std::max(worst, std::abs(d.z_score));
  }
  return worst;
}

namespace {

Deviation deviation(std::string statistic, std::int64_t index, std::uint64_t observed, double probability,
                    std::uint64_t walks, double threshold) {
  const double n = static_cast<double>(walks);
  const double mean = n * probability;
  const double sd = std::sqrt(n * probability * (1.0 - probability));
  double z;
  if (sd > 0.0) {
    z = (static_cast<double>(observed) - mean) / sd;
  } else {
    // Degenerate bin: any discrepancy from the certain outcome is infinitely unlikely.
    z = std::abs(static_cast<double>(observed) - mean) < 0.5 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return Deviation{std::move(statistic), index, observed, probability, z, std::abs(z) > threshold};
}

}  // namespace

DeviationSummary compare_report(const SimulationReport& report, double threshold) {
  const SimulationConfig& config = report.config;
  const StepProbability p = StepProbability::real(config.p);
  DeviationSummary summary;
  summary.threshold = threshold;

  for (const auto& [step, count] : report.first_return_histogram) {
    const double expected = absorption_probability(step / 2, p).real;
    summary.deviations.push_back(deviation("first_return", step, count, expected, config.walks, threshold));
  }

  const double x = std::sqrt(4.0 * p.value() * p.complement());
  const double escape = zeta_partial_sum(config.max_steps / 2, std::min(x, 1.0)).real_value;
  summary.deviations.push_back(
      deviation("escape", config.max_steps, report.escaped_count, std::clamp(escape, 0.0, 1.0), config.walks, threshold));

  for (const auto& [k, count] : report.occupancy_histogram) {
    const double expected = q0p(config.max_steps, k, p).real;
    summary.deviations.push_back(deviation("occupancy", k, count, expected, config.walks, threshold));
  }
  return summary;
}

}  // namespace walklab
