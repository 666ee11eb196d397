#pragma once

// Uniform tabular output for every subcommand: one header row, then records.
// The same Document renders to CSV, JSON or aligned text.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace walklab::cli {

enum class Format { csv, json, text };

/// Empty, integer, decimal, verbatim text (also used for big integers), flag.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

/// 17 significant digits, '.' decimal point, no locale.
std::string format_decimal(double value);
std::string format_cell(const Cell& cell);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Document {
  std::string command;
  std::vector<std::pair<std::string, Cell>> args;
  Table table;
  std::optional<std::vector<CheckResult>> checks;
  /// Pre-serialized JSON object attached under "report" in JSON mode.
  std::optional<std::string> report_json;
};

/// Checks are rendered as the table itself in CSV and text mode.
Table checks_table(const std::vector<CheckResult>& checks);

void render(const Document& doc, Format format, std::ostream& out);

}  // namespace walklab::cli
