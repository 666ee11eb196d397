#include <json.hpp>

#include "walklab/monte_carlo.hpp"

namespace walklab {

namespace {

using Json = nlohmann::ordered_json;

Json histogram(const std::map<std::int64_t, std::uint64_t>& bins) {
  Json out = Json::array();
  for (const auto& [index, count] : bins) {
    out.push_back(Json::array({index, count}));
  }
  return out;
}

Json estimate(const Estimate& e) { return Json{{"value", e.value}, {"ci_low", e.ci_low}, {"ci_high", e.ci_high}}; }

}  // namespace

std::string report_to_json(const SimulationReport& report, int indent) {
  const SimulationConfig& c = report.config;
  Json doc;
  doc["config"] = Json{
      {"p", c.p},
      {"max_steps", c.max_steps},
      {"walks", c.walks},
      {"seed", c.seed},
      {"barrier", c.barrier == BarrierMode::none ? "none" : "delayed"},
      {"chunk_size", c.chunk_size},
      {"rng", report.rng},
  };
  doc["first_return_histogram"] = histogram(report.first_return_histogram);
  doc["escaped_count"] = report.escaped_count;
  doc["occupancy_histogram"] = histogram(report.occupancy_histogram);

  Json estimates = Json::array();
  for (const NamedEstimate& e : report.estimates()) {
    Json entry{{"statistic", e.statistic}, {"index", e.index}, {"count", e.count}};
    entry.update(estimate(e.estimate));
    estimates.push_back(std::move(entry));
  }
  doc["estimates"] = std::move(estimates);
  return doc.dump(indent);
}

}  // namespace walklab
