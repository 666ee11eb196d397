#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli.hpp"
#include "output.hpp"
#include "verify.hpp"
#include "walklab/barrier_calculus.hpp"
#include "walklab/errors.hpp"
#include "walklab/monte_carlo.hpp"
#include "walklab/series_engine.hpp"
#include "walklab/walk_distributions.hpp"

namespace walklab::cli {

namespace {

Format parse_format(const std::string& name) {
  if (name == "json") {
    return Format::json;
  }
  return name == "text" ? Format::text : Format::csv;
}

// "3", "-3", "3/4" select exact arithmetic; anything else is read as a decimal.
bool is_rational_syntax(const std::string& text) {
  std::size_t i = (!text.empty() && text[0] == '-') ? 1 : 0;
  const std::size_t digits_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
  }
  if (i == digits_start) {
    return false;
  }
  if (i == text.size()) {
    return true;
  }
  if (text[i] != '/') {
    return false;
  }
  const std::size_t den_start = ++i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
  }
  return i == text.size() && i > den_start;
}

double parse_decimal(const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw DomainError("not a number: '" + text + "'");
  }
  return value;
}

Branch parse_branch(const std::string& name) {
  return name == "minus" ? Branch::minus : Branch::plus;
}

struct Probability {
  StepProbability p;
  std::optional<double> x;
};

Probability resolve_probability(const std::string& p_text, const std::string& x_text, const std::string& branch) {
  if (!p_text.empty()) {
    if (is_rational_syntax(p_text)) {
      return {StepProbability::exact(ExactRational::parse(p_text)), std::nullopt};
    }
    return {StepProbability::real(parse_decimal(p_text)), std::nullopt};
  }
  if (x_text.empty()) {
    throw CLI::ValidationError("one of --p or --x is required");
  }
  if (is_rational_syntax(x_text)) {
    const ExactRational x = ExactRational::parse(x_text);
    return {p_from_x(x, parse_branch(branch)), x.to_double()};
  }
  const double x = parse_decimal(x_text);
  return {p_from_x(x, parse_branch(branch)), x};
}

Cell text_or_empty(const std::string& text) {
  return text.empty() ? Cell{} : Cell{text};
}

void append_value(std::vector<Cell>& row, const SignedProbability& value) {
  if (value.exact) {
    row.emplace_back(value.exact->numerator().to_string());
    row.emplace_back(value.exact->denominator().to_string());
  } else {
    row.emplace_back();
    row.emplace_back();
  }
  row.emplace_back(value.real);
}

void append_optional_value(std::vector<Cell>& row, const std::optional<SignedProbability>& value) {
  if (value) {
    append_value(row, *value);
  } else {
    row.insert(row.end(), 3, Cell{});
  }
}

// Triangle layout: one column per k, marked cells in brackets, scale factor last.
void render_triangle(const std::vector<ScaledRow>& rows, std::ostream& out) {
  std::int64_t span = 0;
  for (const ScaledRow& r : rows) {
    span = std::max(span, r.distribution.n());
  }
  std::map<std::pair<std::int64_t, std::int64_t>, std::string> cells;
  std::size_t width = std::to_string(-span).size();
  for (const ScaledRow& r : rows) {
    for (std::size_t i = 0; i < r.scaled.size(); ++i) {
      const std::int64_t k = r.distribution.entries()[i].k;
      std::string text = r.scaled[i].to_string();
      if (r.marked_k == k) {
        text = "[" + text + "]";
      }
      width = std::max(width, text.size());
      cells[{r.distribution.n(), k}] = std::move(text);
    }
  }
  const std::size_t n_width = std::max<std::size_t>(1, std::to_string(span).size());
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };

  std::string line = pad("n", n_width);
  for (std::int64_t k = -span; k <= span; ++k) {
    line += " " + pad(std::to_string(k), width);
  }
  out << line << "  factor\n";
  for (const ScaledRow& r : rows) {
    const std::int64_t n = r.distribution.n();
    line = pad(std::to_string(n), n_width);
    for (std::int64_t k = -span; k <= span; ++k) {
      const auto found = cells.find({n, k});
      line += " " + pad(found == cells.end() ? "" : found->second, width);
    }
    out << line << "  2^" << r.scale_exponent << '\n';
  }
}

struct DistArgs {
  std::int64_t n = -1;
  std::string p;
  std::string x;
  std::string branch = "plus";
  std::string barrier = "none";
  bool table1 = false;
  bool table2 = false;
  std::int64_t max_n = 6;
  std::string format = "csv";
};

int cmd_dist(const DistArgs& a, bool n_given, std::ostream& out) {
  Document doc;
  doc.command = "dist";
  const Format format = parse_format(a.format);
  if (a.table1 || a.table2) {
    doc.args = {{"table", std::string(a.table1 ? "table1" : "table2")}, {"max_n", a.max_n}};
    const std::vector<ScaledRow> rows = a.table1 ? table1(a.max_n) : table2(a.max_n);
    if (format == Format::text) {
      render_triangle(rows, out);
      return kExitOk;
    }
    doc.table.columns = {"n", "k", "scaled_value", "scale_exponent", "marked"};
    for (const ScaledRow& r : rows) {
      for (std::size_t i = 0; i < r.scaled.size(); ++i) {
        const std::int64_t k = r.distribution.entries()[i].k;
        doc.table.rows.push_back({r.distribution.n(), k, r.scaled[i].to_string(), r.scale_exponent, r.marked_k == k});
      }
    }
    render(doc, format, out);
    return kExitOk;
  }

  if (!n_given) {
    throw CLI::ValidationError("--n is required unless --table1 or --table2 is given");
  }
  const Probability prob = resolve_probability(a.p, a.x, a.branch);
  const WalkParams params(prob.p, prob.x);
  doc.args = {{"n", a.n},
              {"p", text_or_empty(a.p)},
              {"x", text_or_empty(a.x)},
              {"branch", a.branch},
              {"barrier", a.barrier}};

  std::optional<LatticeDistribution> row;
  if (a.barrier == "none") {
    row = distribution_row(a.n, params);
  } else if (a.barrier == "delayed") {
    row = barrier_row(a.n, BarrierSpec::delayed(), params.p());
  } else {
    if (!is_rational_syntax(a.barrier) || a.barrier.find('/') != std::string::npos) {
      throw CLI::ValidationError("--barrier must be 'none', 'delayed' or a positive integer");
    }
    row = barrier_row(a.n, BarrierSpec::at(BigInteger::parse(a.barrier).to_int64()), params.p());
  }

  doc.table.columns = {"n", "k", "numerator", "denominator", "real_value"};
  for (const LatticeEntry& e : row->entries()) {
    std::vector<Cell> cells{a.n, e.k};
    append_value(cells, e.value);
    doc.table.rows.push_back(std::move(cells));
  }
  render(doc, format, out);
  return kExitOk;
}

struct SeriesArgs {
  std::string kind;
  std::string x;
  std::int64_t max_n = 0;
  bool with_stirling = false;
  std::string format = "csv";
};

int cmd_series(const SeriesArgs& a, std::ostream& out) {
  const SeriesPoint point =
      is_rational_syntax(a.x) ? SeriesPoint::exact(ExactRational::parse(a.x)) : SeriesPoint::real(parse_decimal(a.x));
  const SeriesKind kind = a.kind == "zeta" ? SeriesKind::zeta : SeriesKind::gamma;

  Document doc;
  doc.command = "series";
  doc.args = {{"kind", a.kind}, {"x", a.x}, {"max_n", a.max_n}, {"with_stirling", a.with_stirling}};
  doc.table.columns = {"l",
                       "term_numerator",
                       "term_denominator",
                       "term",
                       "partial_sum_numerator",
                       "partial_sum_denominator",
                       "partial_sum",
                       "closed_form_numerator",
                       "closed_form_denominator",
                       "closed_form",
                       "stirling_estimate"};
  for (const SeriesRecord& r : series_dump(kind, a.max_n, point, a.with_stirling)) {
    std::vector<Cell> cells{r.l};
    append_value(cells, r.term);
    append_value(cells, r.partial_sum);
    append_optional_value(cells, r.closed_form);
    cells.push_back(r.stirling_estimate ? Cell{*r.stirling_estimate} : Cell{});
    doc.table.rows.push_back(std::move(cells));
  }
  render(doc, parse_format(a.format), out);
  return kExitOk;
}

struct SimulateArgs {
  std::string p;
  std::string x;
  std::string branch = "plus";
  std::int64_t steps = 0;
  std::uint64_t walks = 0;
  std::uint64_t seed = 0;
  std::string barrier = "none";
  std::uint64_t chunk_size = SimulationConfig{}.chunk_size;
  unsigned threads = 0;
  std::string format = "json";
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const Probability prob = resolve_probability(a.p, a.x, a.branch);
  SimulationConfig config;
  config.p = prob.p.value();
  config.max_steps = a.steps;
  config.walks = a.walks;
  config.seed = a.seed;
  config.barrier = a.barrier == "delayed" ? BarrierMode::delayed_at_origin : BarrierMode::none;
  config.chunk_size = a.chunk_size;
  const SimulationReport report = simulate(config, a.threads);
  const DeviationSummary summary = compare_report(report);

  std::map<std::pair<std::string, std::int64_t>, const Deviation*> deviations;
  for (const Deviation& d : summary.deviations) {
    deviations[{d.statistic, d.index}] = &d;
  }

  // Thread count is left out on purpose: it must not change the output.
  Document doc;
  doc.command = "simulate";
  doc.args = {{"p", text_or_empty(a.p)},
              {"x", text_or_empty(a.x)},
              {"branch", a.branch},
              {"steps", a.steps},
              {"walks", static_cast<std::int64_t>(a.walks)},
              {"seed", std::to_string(a.seed)},
              {"barrier", a.barrier},
              {"chunk_size", static_cast<std::int64_t>(a.chunk_size)}};
  doc.table.columns = {"statistic", "index", "count", "value", "ci_low", "ci_high", "exact", "z_score", "flagged"};
  for (const NamedEstimate& e : report.estimates()) {
    std::vector<Cell> cells{e.statistic, e.index, static_cast<std::int64_t>(e.count), e.estimate.value,
                            e.estimate.ci_low, e.estimate.ci_high};
    const auto found = deviations.find({e.statistic, e.index});
    if (found != deviations.end()) {
      cells.insert(cells.end(), {found->second->expected_probability, found->second->z_score, found->second->flagged});
    } else {
      cells.insert(cells.end(), 3, Cell{});
    }
    doc.table.rows.push_back(std::move(cells));
  }
  doc.report_json = report_to_json(report, -1);
  render(doc, parse_format(a.format), out);
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::int64_t max_n = 0;
  std::uint64_t walks = 1'000'000;
  std::uint64_t seed = 7;
  std::string format = "text";
};

int cmd_verify(const VerifyArgs& a, bool max_n_given, std::ostream& out) {
  std::vector<CheckResult> checks;
  auto append = [&](std::vector<CheckResult> more) { checks.insert(checks.end(), more.begin(), more.end()); };
  if (a.suite == "all" || a.suite == "exact") {
    append(exact_suite(max_n_given ? a.max_n : 40));
  }
  if (a.suite == "asymptotic") {
    append(asymptotic_suite(max_n_given ? a.max_n : 10'000));
  } else if (a.suite == "all") {
    append(asymptotic_suite(10'000));
  }
  if (a.suite == "all" || a.suite == "stochastic") {
    append(stochastic_suite(a.walks, a.seed));
  }

  Document doc;
  doc.command = "verify";
  doc.args = {{"suite", a.suite},
              {"max_n", max_n_given ? Cell{a.max_n} : Cell{}},
              {"walks", static_cast<std::int64_t>(a.walks)},
              {"seed", std::to_string(a.seed)}};
  doc.table = checks_table(checks);
  doc.checks = checks;
  render(doc, parse_format(a.format), out);
  const bool all_passed = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  return all_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bernoulli walk distributions, barrier calculus, series partial sums and Monte Carlo checks", "walklab"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"csv", "json", "text"});
  const auto branches = CLI::IsMember({"plus", "minus"});

  DistArgs dist;
  CLI::App* dist_cmd = app.add_subcommand("dist", "Exact or real lattice distribution rows");
  CLI::Option* dist_n = dist_cmd->add_option("--n", dist.n, "Step count")->check(CLI::NonNegativeNumber);
  CLI::Option* dist_p = dist_cmd->add_option("--p", dist.p, "Step probability, a/b (exact) or decimal");
  dist_cmd->add_option("--x", dist.x, "Series variable; p is derived from 4p(1-p) = x^2")->excludes(dist_p);
  dist_cmd->add_option("--branch", dist.branch, "Root used for p when --x is given")->check(branches);
  dist_cmd->add_option("--barrier", dist.barrier, "none, delayed, or barrier position a >= 1");
  CLI::Option* t1 = dist_cmd->add_flag("--table1", dist.table1, "Symmetric walk triangle, scaled by 2^n");
  dist_cmd->add_flag("--table2", dist.table2, "Delayed-barrier triangle, scaled by 2^n")->excludes(t1);
  dist_cmd->add_option("--max-n", dist.max_n, "Last row of a table preset")->check(CLI::NonNegativeNumber);
  dist_cmd->add_option("--format", dist.format)->check(formats);

  SeriesArgs series;
  CLI::App* series_cmd = app.add_subcommand("series", "Terms and partial sums of the gamma and zeta series");
  series_cmd->add_option("--kind", series.kind)->required()->check(CLI::IsMember({"gamma", "zeta"}));
  series_cmd->add_option("--x", series.x, "a/b (exact) or decimal, |x| <= 1")->required();
  series_cmd->add_option("--max-n", series.max_n, "Highest index l")->required()->check(CLI::NonNegativeNumber);
  series_cmd->add_flag("--with-stirling", series.with_stirling, "Add the large-n estimate column");
  series_cmd->add_option("--format", series.format)->check(formats);

  SimulateArgs sim;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "Monte Carlo walk ensemble");
  CLI::Option* sim_p = sim_cmd->add_option("--p", sim.p, "Step probability");
  sim_cmd->add_option("--x", sim.x, "Series variable; p is derived from 4p(1-p) = x^2")->excludes(sim_p);
  sim_cmd->add_option("--branch", sim.branch)->check(branches);
  sim_cmd->add_option("--steps", sim.steps, "Even step cap per walk")->required();
  sim_cmd->add_option("--walks", sim.walks)->required();
  sim_cmd->add_option("--seed", sim.seed)->envname("WALKLAB_SEED")->required();
  sim_cmd->add_option("--barrier", sim.barrier)->check(CLI::IsMember({"none", "delayed"}));
  sim_cmd->add_option("--chunk-size", sim.chunk_size);
  sim_cmd->add_option("--threads", sim.threads, "0 uses every hardware thread");
  sim_cmd->add_option("--format", sim.format)->check(CLI::IsMember({"csv", "json", "text"}));

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Identity, asymptotic and Monte Carlo checks");
  verify_cmd->add_option("--suite", verify.suite)->check(CLI::IsMember({"all", "exact", "asymptotic", "stochastic"}));
  CLI::Option* verify_max_n = verify_cmd->add_option(
      "--max-n", verify.max_n, "Bound for the selected suite (with 'all', the exact suite only)");
  verify_cmd->add_option("--walks", verify.walks);
  verify_cmd->add_option("--seed", verify.seed)->envname("WALKLAB_SEED");
  verify_cmd->add_option("--format", verify.format)->check(formats);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (dist_cmd->parsed()) {
      return cmd_dist(dist, dist_n->count() > 0, out);
    }
    if (series_cmd->parsed()) {
      return cmd_series(series, out);
    }
    if (sim_cmd->parsed()) {
      return cmd_simulate(sim, out);
    }
    return cmd_verify(verify, verify_max_n->count() > 0, out);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace walklab::cli
