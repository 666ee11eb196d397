#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <system_error>

#include <json.hpp>

namespace walklab::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::monostate>) {
          return nullptr;
        } else {
          return v;
        }
      },
      cell);
}

void render_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_cell(row[i]);
    }
    out << '\n';
  }
}

void render_text(const Table& table, std::ostream& out) {
  std::vector<std::size_t> width(table.columns.size());
  std::vector<bool> numeric(table.columns.size(), true);
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < width.size(); ++i) {
    width[i] = table.columns[i].size();
  }
  for (const auto& row : table.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(format_cell(row[i]));
      width[i] = std::max(width[i], line.back().size());
      const bool is_integer_text = std::holds_alternative<std::string>(row[i]) &&
                                   line.back().find_first_not_of("-0123456789") == std::string::npos;
      if (std::holds_alternative<bool>(row[i]) || (std::holds_alternative<std::string>(row[i]) && !is_integer_text)) {
        numeric[i] = false;
      }
    }
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const std::string fill(width[i] - line[i].size(), ' ');
      text += (i ? "  " : "") + (numeric[i] ? fill + line[i] : line[i] + fill);
    }
    text.erase(text.find_last_not_of(' ') + 1);
    out << text << '\n';
  };
  emit(table.columns);
  for (const auto& line : cells) {
    emit(line);
  }
}

ordered_json rows_json(const Table& table) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json record = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      record[table.columns[i]] = to_json(row[i]);
    }
    rows.push_back(std::move(record));
  }
  return rows;
}

}  // namespace

std::string format_decimal(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

std::string format_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<V, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<V, double>) {
          return format_decimal(v);
        } else if constexpr (std::is_same_v<V, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      cell);
}

Table checks_table(const std::vector<CheckResult>& checks) {
  Table table{{"suite", "check", "passed", "detail"}, {}};
  for (const CheckResult& c : checks) {
    table.rows.push_back({c.suite, c.name, c.passed, c.detail});
  }
  return table;
}

void render(const Document& doc, Format format, std::ostream& out) {
  if (format == Format::csv) {
    render_csv(doc.table, out);
    return;
  }
  if (format == Format::text) {
    render_text(doc.table, out);
    return;
  }
  ordered_json j;
  j["command"] = doc.command;
  ordered_json args = ordered_json::object();
  for (const auto& [name, value] : doc.args) {
    args[name] = to_json(value);
  }
  j["args"] = std::move(args);
  j["rows"] = doc.checks ? ordered_json::array() : rows_json(doc.table);
  if (doc.checks) {
    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : *doc.checks) {
      checks.push_back({{"suite", c.suite}, {"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    j["checks"] = std::move(checks);
  }
  if (doc.report_json) {
    j["report"] = ordered_json::parse(*doc.report_json);
  }
  out << j.dump(2) << '\n';
}

}  // namespace walklab::cli
