#include "cli/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <system_error>

namespace rockers::cli {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string to_chars_string(double value, std::chars_format fmt, std::optional<int> precision) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = precision ? std::to_chars(buffer, buffer + sizeof buffer, value, fmt, *precision)
                                : std::to_chars(buffer, buffer + sizeof buffer, value, fmt);
  return std::string(buffer, result.ptr);
}

std::string cell_text(const Cell& cell, std::optional<int> display_digits) {
  return std::visit(overloaded{
                        [](std::monostate) { return std::string(); },
                        [](std::int64_t v) { return std::to_string(v); },
                        [&](double v) {
                          return display_digits ? format_significant(v, *display_digits)
                                                : format_round_trip(v);
                        },
                        [](bool v) { return std::string(v ? "true" : "false"); },
                        [](const std::string& v) { return v; },
                    },
                    cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  return std::visit(overloaded{
                        [](std::monostate) { return nlohmann::ordered_json(nullptr); },
                        [](std::int64_t v) { return nlohmann::ordered_json(v); },
                        [](double v) {
                          return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
                        },
                        [](bool v) { return nlohmann::ordered_json(v); },
                        [](const std::string& v) { return nlohmann::ordered_json(v); },
                    },
                    cell);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) {
    return field;
  }
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void render_table(const Report& report, std::ostream& out) {
  const std::size_t ncols = report.columns.size();
  std::vector<std::vector<std::string>> text(report.rows.size(), std::vector<std::string>(ncols));
  std::vector<std::size_t> width(ncols);
  for (std::size_t c = 0; c < ncols; ++c) {
    width[c] = report.columns[c].name.size();
  }
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    for (std::size_t c = 0; c < ncols; ++c) {
      text[r][c] = cell_text(report.rows[r][c], report.columns[c].display_digits);
      if (text[r][c].empty()) text[r][c] = "-";
      width[c] = std::max(width[c], text[r][c].size());
    }
  }
  auto emit = [&](std::size_t c, const std::string& s) {
    if (c > 0) out << "  ";
    const std::string pad(width[c] - s.size(), ' ');
    out << pad << s;
  };
  for (std::size_t c = 0; c < ncols; ++c) emit(c, report.columns[c].name);
  out << '\n';
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    for (std::size_t c = 0; c < ncols; ++c) emit(c, text[r][c]);
    out << '\n';
  }
  for (const auto& [key, value] : report.summary) {
    const std::string shown = cell_text(value, std::nullopt);
    out << key << ": " << (shown.empty() ? "none" : shown) << '\n';
  }
}

void render_csv(const Report& report, std::ostream& out) {
  std::string sep;
  for (const Column& column : report.columns) {
    out << sep << csv_escape(column.name);
    sep = ",";
  }
  for (const auto& entry : report.summary) {
    out << sep << csv_escape(entry.first);
  }
  out << '\n';
  for (const auto& row : report.rows) {
    sep.clear();
    for (const Cell& cell : row) {
      out << sep << csv_escape(cell_text(cell, std::nullopt));
      sep = ",";
    }
    for (const auto& entry : report.summary) {
      out << sep << csv_escape(cell_text(entry.second, std::nullopt));
    }
    out << '\n';
  }
}

void render_json(const Report& report, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["command"] = report.command;
  doc["params"] = report.params;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
      object[report.columns[c].name] = cell_json(row[c]);
    }
    rows.push_back(std::move(object));
  }
  doc["rows"] = std::move(rows);
  if (!report.summary.empty()) {
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.summary) {
      summary[key] = cell_json(value);
    }
    doc["summary"] = std::move(summary);
  }
  out << doc.dump(2) << '\n';
}

}  // namespace

std::optional<OutputFormat> parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string format_round_trip(double value) {
  return to_chars_string(value, std::chars_format::general, std::nullopt);
}

std::string format_significant(double value, int digits) {
  return to_chars_string(value, std::chars_format::general, digits);
}

void render(const Report& report, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::table:
      render_table(report, out);
      break;
    case OutputFormat::csv:
      render_csv(report, out);
      break;
    case OutputFormat::json:
      render_json(report, out);
      break;
  }
}

}  // namespace rockers::cli
