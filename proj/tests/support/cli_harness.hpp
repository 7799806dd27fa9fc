#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/commands.hpp"

namespace rockers::testing {

struct Invocation {
  int exit_code;
  std::string out;
  std::string err;
};

inline Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "rockers");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(std::span<const std::string>(args), out, err);
  return {code, out.str(), err.str()};
}

/// Splits our CSV output (no quoted fields are ever produced for numbers).
inline std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream fields(line);
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(std::move(cells));
  }
  return rows;
}

/// True when every csv cell reads back to exactly the value in the json rows.
inline bool csv_matches_json(const std::string& csv_text, const std::string& json_text, std::string* why = nullptr) {
  const auto csv = parse_csv(csv_text);
  const auto doc = nlohmann::json::parse(json_text);
  const auto& rows = doc.at("rows");
  auto fail = [why](std::string reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  if (csv.empty() || csv.size() != rows.size() + 1) return fail("row count");
  const auto& header = csv.front();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = csv[r + 1];
    for (std::size_t c = 0; c < header.size(); ++c) {
      const nlohmann::json* value = nullptr;
      if (rows[r].contains(header[c])) {
        value = &rows[r].at(header[c]);
      } else if (doc.contains("summary") && doc["summary"].contains(header[c])) {
        value = &doc["summary"].at(header[c]);
      } else {
        return fail("column " + header[c] + " missing from json");
      }
      const std::string& cell = row.at(c);
      bool same = false;
      if (value->is_number_float()) {
        const double parsed = std::strtod(cell.c_str(), nullptr);
        same = std::bit_cast<std::uint64_t>(parsed) == std::bit_cast<std::uint64_t>(value->get<double>());
      } else if (value->is_number_integer()) {
        same = cell == std::to_string(value->get<std::int64_t>());
      } else if (value->is_boolean()) {
        same = cell == (value->get<bool>() ? "true" : "false");
      } else if (value->is_string()) {
        same = cell == value->get<std::string>();
      } else if (value->is_null()) {
        same = cell.empty();
      }
      if (!same) return fail("row " + std::to_string(r) + " column " + header[c] + ": " + cell);
    }
  }
  return true;
}

}  // namespace rockers::testing
