#pragma once

// Seeded ensemble simulation of Bernoulli walks, free or with the delayed
// absorbing barrier at the origin, and the comparison of empirical frequencies
// against the exact distributions.
//
// Walk w belongs to chunk w / chunk_size and every chunk draws from its own
// Philox stream keyed by (seed, chunk index), so a report depends only on
// (p, max_steps, walks, seed, barrier, chunk_size) and never on the number of
// worker threads.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace walklab {

enum class BarrierMode { none, delayed_at_origin };

struct SimulationConfig {
  double p = 0.5;
  /// Even and positive; every walk is cut off after this many steps.
  std::int64_t max_steps = 10;
  std::uint64_t walks = 1000;
  std::uint64_t seed = 0;
  BarrierMode barrier = BarrierMode::none;
  std::uint64_t chunk_size = 1 << 14;

  /// Throws ConfigError on any violated invariant.
  void validate() const;
};

/// Point estimate with a two-sided interval.
struct Estimate {
  double value = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;

  bool contains(double x) const { return ci_low <= x && x <= ci_high; }
};

/// Wilson score interval for `successes` out of `trials` at the given normal
/// quantile (default: 95%).
Estimate wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

struct NamedEstimate {
  std::string statistic;  ///< "first_return", "escape" or "occupancy"
  std::int64_t index = 0;  ///< step for first_return, k for occupancy, max_steps for escape
  std::uint64_t count = 0;
  Estimate estimate;
};

struct SimulationReport {
  SimulationConfig config;
  std::string rng;
  /// Step 2m -> number of walks whose first return to 0 (or absorption, in
  /// barrier mode) happened at that step. Holds every even step 2..max_steps.
  std::map<std::int64_t, std::uint64_t> first_return_histogram;
  /// Walks that never returned within max_steps.
  std::uint64_t escaped_count = 0;
  /// Final position -> count, free mode only; every k of matching parity.
  std::map<std::int64_t, std::uint64_t> occupancy_histogram;

  /// Wilson 95% estimates for every histogram bin and the escape fraction.
  std::vector<NamedEstimate> estimates() const;
  Estimate escape_estimate() const;
  Estimate first_return_estimate(std::int64_t step) const;
  Estimate occupancy_estimate(std::int64_t k) const;

  friend bool operator==(const SimulationReport&, const SimulationReport&);
};

/// Free walks; also records first returns. Requires barrier == none.
/// `threads` = 0 picks std::thread::hardware_concurrency().
SimulationReport run_free_walks(const SimulationConfig& config, unsigned threads = 0);

/// Walks stop at the first revisit of k = 0 (necessarily at step >= 2).
/// Requires barrier == delayed_at_origin.
SimulationReport run_absorbing_walks(const SimulationConfig& config, unsigned threads = 0);

/// Dispatches on config.barrier.
SimulationReport simulate(const SimulationConfig& config, unsigned threads = 0);

struct Deviation {
  std::string statistic;
  std::int64_t index = 0;
  std::uint64_t observed = 0;
  double expected_probability = 0.0;
  double z_score = 0.0;
  bool flagged = false;
};

struct DeviationSummary {
  double threshold = 4.0;
  std::vector<Deviation> deviations;

  bool any_flagged() const;
  double max_abs_z() const;
};

/// z-scores of every reported count against the exact prediction:
/// first returns against Q0P(2m,0,p)/(2m-1), escape against the truncated zeta
/// series with x^2 = 4p(1-p), occupancy against Q0P(max_steps,k,p).
DeviationSummary compare_report(const SimulationReport& report, double threshold = 4.0);

/// Structured JSON document: config block, histograms as [index, count]
/// arrays, estimates as {value, ci_low, ci_high}. Key order is fixed.
std::string report_to_json(const SimulationReport& report, int indent = 2);

}  // namespace walklab
