#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace rockers::cli {

enum class OutputFormat { table, csv, json };

std::optional<OutputFormat> parse_format(const std::string& name);

/// One cell of a report. Exact values that do not fit a double (certified
/// decimals, rationals, big integers) travel as strings.
using Cell = std::variant<std::monostate, std::int64_t, double, bool, std::string>;

struct Column {
  std::string name;
  /// Significant digits for doubles in the aligned-text view.
  int display_digits = 10;
};

struct Report {
  Report() = default;
  explicit Report(std::string name) : command(std::move(name)) {}

  std::string command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;
};

/// Shortest decimal that reads back to the same double; no locale.
std::string format_round_trip(double value);

/// `digits` significant digits, %g style; no locale.
std::string format_significant(double value, int digits);

void render(const Report& report, OutputFormat format, std::ostream& out);

}  // namespace rockers::cli
