// Acceptance run: one line per criterion, PASS only when the check holds and
// finishes inside its time limit. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "verify.hpp"
#include "walklab/barrier_calculus.hpp"
#include "walklab/monte_carlo.hpp"
#include "walklab/series_engine.hpp"
#include "walklab/walk_distributions.hpp"

namespace {

using walklab::ExactRational;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) {
      detail = why;
    }
    passed = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> check;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string cli_output(const std::vector<std::string>& args, int& status) {
  std::ostringstream out;
  std::ostringstream err;
  status = walklab::cli::run_cli(args, out, err);
  return out.str();
}

Outcome golden(const std::string& table) {
  Outcome o;
  int status = 0;
  const std::string produced = cli_output({"dist", "--" + table, "--max-n", "6"}, status);
  const std::string expected = read_file(std::string(WALKLAB_GOLDEN_DIR) + "/" + table + ".csv");
  if (expected.empty()) {
    o.fail("golden file missing");
  } else if (status != 0 || produced != expected) {
    o.fail("output differs from golden file");
  }
  return o;
}

// C(2n, n) / 4^n built by its own ratio c_n = c_{n-1} (2n-1) / (2n).
std::vector<ExactRational> central_ratios(std::int64_t max_n) {
  std::vector<ExactRational> c{ExactRational(1)};
  for (std::int64_t n = 1; n <= max_n; ++n) {
    c.push_back(c.back() * ExactRational(2 * n - 1, 2 * n));
  }
  return c;
}

Outcome closed_form(walklab::SeriesKind kind) {
  Outcome o;
  const auto c = central_ratios(1000);
  const auto one = walklab::SeriesPoint::exact(ExactRational(1));
  for (std::int64_t n = 0; n <= 1000; ++n) {
    const ExactRational expected = kind == walklab::SeriesKind::gamma ? ExactRational(2 * n + 1) * c[n] : c[n];
    const auto sum =
        kind == walklab::SeriesKind::gamma ? walklab::gamma_partial_sum(n, one) : walklab::zeta_partial_sum(n, one);
    if (*sum.exact_value != expected) {
      o.fail("mismatch at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome stirling() {
  Outcome o;
  const auto grid = walklab::cli::log_spaced(10, 10'000, 50);
  if (grid.size() != 50) {
    o.fail("grid has " + std::to_string(grid.size()) + " points");
  }
  for (const std::int64_t n : grid) {
    const double nd = static_cast<double>(n);
    const double g = walklab::gamma_partial_sum(n, 1.0).real_value;
    const double z = walklab::zeta_partial_sum(n, 1.0).real_value;
    if (std::abs(g / std::sqrt(4.0 * nd / std::numbers::pi) - 1.0) > 1.0 / (2.0 * nd)) {
      o.fail("gamma bound fails at n=" + std::to_string(n));
    }
    if (std::abs(z * std::sqrt(std::numbers::pi * nd) - 1.0) > 1.0 / (4.0 * nd)) {
      o.fail("zeta bound fails at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome identities() {
  Outcome o;
  for (const auto& c : walklab::cli::exact_suite(40)) {
    if (!c.passed) {
      o.fail(c.name + ": " + c.detail);
    }
  }
  return o;
}

Outcome bridge() {
  Outcome o;
  for (const double x : {0.1, 0.5, 0.9, 1.0}) {
    for (const auto branch : {walklab::Branch::minus, walklab::Branch::plus}) {
      const walklab::WalkParams params(walklab::p_from_x(x, branch), x);
      for (std::int64_t l = 0; l <= 50; ++l) {
        const double series = walklab::gamma_term(l, x);
        const double walk = walklab::return_probability(l, params).real;
        if (std::abs(series - walk) > 1e-12 * std::abs(walk)) {
          o.fail("x=" + std::to_string(x) + " l=" + std::to_string(l));
        }
      }
    }
  }
  const double g = walklab::gamma_partial_sum(200, 0.6).real_value;
  if (std::abs(g - 1.25) > 1e-10) {
    o.fail("gamma_200(0.6) = " + std::to_string(g));
  }
  return o;
}

walklab::SimulationConfig absorbing(std::int64_t steps) {
  walklab::SimulationConfig c;
  c.p = 0.5;
  c.max_steps = steps;
  c.walks = 1'000'000;
  c.seed = 7;
  c.barrier = walklab::BarrierMode::delayed_at_origin;
  return c;
}

std::string interval_text(const walklab::Estimate& e) {
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "%.6f in [%.6f, %.6f]", e.value, e.ci_low, e.ci_high);
  return buffer;
}

Outcome escape() {
  Outcome o;
  const auto ten = walklab::simulate(absorbing(10)).escape_estimate();
  if (!ten.contains(63.0 / 256.0)) {
    o.fail("10 steps: " + interval_text(ten));
  }
  const auto hundred = walklab::simulate(absorbing(100)).escape_estimate();
  if (!hundred.contains(walklab::q0(100, 0).to_double())) {
    o.fail("100 steps: " + interval_text(hundred));
  }
  if (o.passed) {
    o.detail = "10 steps " + interval_text(ten) + "; 100 steps " + interval_text(hundred);
  }
  return o;
}

Outcome absorption_profile() {
  Outcome o;
  const auto report = walklab::simulate(absorbing(4));
  const auto two = report.first_return_estimate(2);
  const auto four = report.first_return_estimate(4);
  if (!two.contains(0.5)) {
    o.fail("step 2: " + interval_text(two));
  }
  if (!four.contains(0.125)) {
    o.fail("step 4: " + interval_text(four));
  }
  if (o.passed) {
    o.detail = "step 2 " + interval_text(two) + "; step 4 " + interval_text(four);
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> invocations{
      {"simulate", "--p", "0.5", "--steps", "20", "--walks", "300000", "--seed", "42", "--chunk-size", "4096"},
      {"simulate", "--p", "0.3", "--steps", "40", "--walks", "300000", "--seed", "42", "--chunk-size", "1000",
       "--barrier", "delayed"},
  };
  for (const auto& base : invocations) {
    std::string reference;
    for (const char* threads : {"1", "1", "4", "7"}) {
      std::vector<std::string> args = base;
      args.insert(args.end(), {"--threads", threads});
      int status = 0;
      const std::string out = cli_output(args, status);
      if (status != 0) {
        o.fail("simulate exited with " + std::to_string(status));
      } else if (reference.empty()) {
        reference = out;
      } else if (out != reference) {
        o.fail(std::string("output differs at --threads ") + threads);
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "table1 reproduction", 1.0, [] { return golden("table1"); }},
      {2, "table2 reproduction", 1.0, [] { return golden("table2"); }},
      {3, "gamma partial sum closed form, n <= 1000", 30.0, [] { return closed_form(walklab::SeriesKind::gamma); }},
      {4, "zeta partial sum closed form, n <= 1000", 30.0, [] { return closed_form(walklab::SeriesKind::zeta); }},
      {5, "Stirling bounds on 50 log-spaced n in [10, 1e4]", 10.0, stirling},
      {6, "exact identity suite, n <= 40", 60.0, identities},
      {7, "series/walk bridge and gamma_200(0.6)", 5.0, bridge},
      {8, "Monte Carlo escape fraction", 60.0, escape},
      {9, "Monte Carlo absorption profile", 60.0, absorption_profile},
      {10, "determinism across thread counts", 60.0, determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = c.check();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.passed && seconds >= c.limit_seconds) {
      outcome.fail("over time limit");
    }
    failures += outcome.passed ? 0 : 1;
    std::printf("%s  criterion %2d  %-50s %8.3f s (limit %4.0f s)%s%s\n", outcome.passed ? "PASS" : "FAIL", c.id,
                c.name.c_str(), seconds, c.limit_seconds, outcome.detail.empty() ? "" : "  ",
                outcome.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
