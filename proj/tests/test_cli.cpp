#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "cli/report.hpp"
#include "support/cli_harness.hpp"

using rockers::testing::invoke;
using nlohmann::json;

namespace {

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const auto result = invoke(args);
  REQUIRE(result.exit_code == 0);
  return json::parse(result.out);
}

}  // namespace

TEST_CASE("eval prints certified digits") {
  CHECK(run_json({"eval", "--n", "7", "--digits", "6"})["rows"][0]["lambda"] == "608.491");
  CHECK(run_json({"eval", "--n", "1", "--digits", "1"})["rows"][0]["lambda"] == "1");
  CHECK(run_json({"eval", "--n", "11", "--digits", "9"})["rows"][0]["lambda"] == "1000838.66");
  // Global flags may follow the subcommand.
  const auto trailing = invoke({"eval", "--n", "7", "--digits", "6"});
  CHECK(trailing.exit_code == 0);
  CHECK(trailing.out.find("608.491") != std::string::npos);
}

TEST_CASE("table reproduces the reference values") {
  const auto doc = run_json({"table", "--n-min", "1", "--n-max", "12"});
  const std::vector<std::string> expected = {"1",        "2",        "4.243",     "10.998",
                                             "34.983",   "134.176",  "608.491",   "3205.596",
                                             "19322.113", "131557.4713", "1000838.660", "8428867.597"};
  REQUIRE(doc["rows"].size() == 12);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(doc["rows"][i]["n"] == static_cast<int>(i + 1));
    CHECK(doc["rows"][i]["lambda"] == expected[i]);
  }
  CHECK(run_json({"table", "--n-min", "2", "--n-max", "2"})["rows"][0]["lambda"] == "2");
  CHECK(invoke({"table", "--n-min", "5", "--n-max", "4"}).exit_code == 2);
}

TEST_CASE("asym rows") {
  const auto twelve = run_json({"asym", "--n-min", "12", "--n-max", "12"});
  CHECK(twelve["rows"][0]["log_error"].get<double>() == doctest::Approx(0.137).epsilon(0.002 / 0.137));

  const auto three = run_json({"asym", "--n-min", "3", "--n-max", "3"});
  CHECK(three["rows"][0]["psi"].get<double>() == doctest::Approx(std::numbers::ln2 / 6.0).epsilon(1e-14));

  const auto series = run_json({"asym", "--n-min", "10", "--n-max", "1000", "--step", "10"});
  REQUIRE(series["rows"].size() == 100);
  for (std::size_t i = 1; i < series["rows"].size(); ++i) {
    REQUIRE(series["rows"][i]["log_error"].get<double>() < series["rows"][i - 1]["log_error"].get<double>());
  }
  CHECK(invoke({"asym", "--n-min", "2", "--n-max", "5"}).exit_code == 3);
}

TEST_CASE("indices rows") {
  const auto five = run_json({"indices", "--n", "5"})["rows"][0];
  CHECK(five["index_product"] == "1/4");
  CHECK(five["argument_recovery"] == "5");

  const auto big = run_json({"indices", "--n", "10000"})["rows"][0];
  CHECK(std::abs(big["index_sum_constant"].get<double>() - 1.5772) <= 1e-4);

  CHECK(run_json({"indices", "--n", "3"})["rows"][0]["index_sum"].get<double>() == 0.5);
  CHECK(invoke({"indices", "--n", "2"}).exit_code == 3);
}

TEST_CASE("bounds rows and threshold") {
  const auto scan = run_json({"bounds", "--n-min", "3", "--n-max", "12"});
  for (const auto& row : scan["rows"]) {
    CHECK(row["lower_holds"].get<bool>() == (row["n"].get<int>() >= 5));
  }
  CHECK(scan["summary"]["threshold"] == 5);

  const auto twelve = run_json({"bounds", "--n-min", "12", "--n-max", "12"})["rows"][0];
  CHECK(twelve["lower_bound"].get<double>() == doctest::Approx(5.598).epsilon(1e-3));
  CHECK(twelve["denominator"].get<double>() == doctest::Approx(56.83).epsilon(1e-3));
  CHECK(twelve["upper_bound"].get<double>() == doctest::Approx(480.47).epsilon(1e-4));

  const auto hundred = run_json({"bounds", "--n-min", "100", "--n-max", "100"})["rows"][0];
  for (const char* key : {"lower_holds", "upper_holds", "lambda_lower_holds", "lambda_upper_holds"}) {
    CHECK(hundred[key].get<bool>());
  }

  CHECK(run_json({"bounds", "--n-min", "3", "--n-max", "4"})["summary"]["threshold"].is_null());
}

TEST_CASE("escape rows") {
  const auto rows = run_json({"escape", "--n-min", "3", "--n-max", "5"})["rows"];
  CHECK(rows[0]["escape_count"] == "3");
  CHECK(rows[1]["escape_count"] == "4");
  CHECK(rows[2]["escape_count"] == "20");
  CHECK(rows[2]["escape_ratio"].get<double>() == doctest::Approx(20.0 / 34.983).epsilon(1e-4));
  CHECK(rows[0]["escape_ratio"].get<double>() == doctest::Approx(0.7071).epsilon(1e-4));
}

TEST_CASE("csv and json carry the same values") {
  const std::vector<std::vector<std::string>> commands = {
      {"table", "--n-min", "1", "--n-max", "15"},
      {"asym", "--n-min", "3", "--n-max", "60"},
      {"indices", "--n", "777"},
      {"bounds", "--n-min", "3", "--n-max", "20"},
      {"escape", "--n-min", "3", "--n-max", "30"},
  };
  for (auto args : commands) {
    auto csv_args = args;
    csv_args.insert(csv_args.begin(), {"--format", "csv"});
    auto json_args = args;
    json_args.insert(json_args.begin(), {"--format", "json"});
    const auto csv = invoke(csv_args);
    const auto js = invoke(json_args);
    REQUIRE(csv.exit_code == 0);
    REQUIRE(js.exit_code == 0);
    std::string why;
    CHECK_MESSAGE(rockers::testing::csv_matches_json(csv.out, js.out, &why), args[0] << ": " << why);
  }
}

TEST_CASE("output is deterministic") {
  for (const char* format : {"table", "csv", "json"}) {
    const auto a = invoke({"--format", format, "asym", "--n-min", "3", "--n-max", "200", "--step", "7"});
    const auto b = invoke({"--format", format, "asym", "--n-min", "3", "--n-max", "200", "--step", "7"});
    CHECK(a.out == b.out);
  }
}

TEST_CASE("exit codes and error lines") {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases = {
      {{}, 2},
      {{"nonsense"}, 2},
      {{"--format", "xml", "eval", "--n", "3"}, 2},
      {{"eval"}, 2},
      {{"eval", "--n", "abc"}, 2},
      {{"--digits", "0", "eval", "--n", "3"}, 2},
      {{"--precision-bits", "8", "eval", "--n", "3"}, 2},
      {{"bounds", "--n-min", "9", "--n-max", "8"}, 2},
      {{"escape", "--n-min", "9", "--n-max", "8"}, 2},
      {{"eval", "--n", "0"}, 3},
      {{"eval", "--n", "-5"}, 3},
      {{"table", "--n-min", "0", "--n-max", "3"}, 3},
      {{"bounds", "--n-min", "2", "--n-max", "8"}, 3},
      {{"escape", "--n-min", "1", "--n-max", "8"}, 3},
      {{"--digits", "3000", "eval", "--n", "12"}, 4},
      {{"--digits", "60", "--precision-bits", "128", "eval", "--n", "12"}, 4},
  };
  for (const Case& c : cases) {
    const auto result = invoke(c.args);
    CAPTURE(result.err);
    REQUIRE(result.exit_code == c.code);
    REQUIRE(result.out.empty());
    // Exactly one line, and it parses.
    REQUIRE(std::count(result.err.begin(), result.err.end(), '\n') == 1);
    const auto line = json::parse(result.err);
    CHECK(line["exit_code"] == c.code);
  }
  const auto help = invoke({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("escape") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "rockers_cli_out_test.csv";
  std::filesystem::remove(path);
  const auto result = invoke({"--format", "csv", "--out", path.string(), "eval", "--n", "6", "--digits", "6"});
  REQUIRE(result.exit_code == 0);
  CHECK(result.out.empty());
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  CHECK(contents.str().find("134.176") != std::string::npos);
  std::filesystem::remove(path);

  CHECK(invoke({"--out", "/nonexistent-dir/x.csv", "eval", "--n", "3"}).exit_code == 2);
}

TEST_CASE("report rendering") {
  using namespace rockers::cli;
  CHECK(format_round_trip(0.1) == "0.1");
  CHECK(format_round_trip(1e300) == "1e+300");
  CHECK(format_significant(2.0 / 3.0, 4) == "0.6667");
  CHECK(format_round_trip(std::nan("")) == "nan");

  Report report("demo");
  report.columns = {{"label"}, {"value", 3}, {"flag"}, {"missing"}};
  report.rows.push_back({std::string("a,\"b\""), 3.14159, true, std::monostate{}});
  report.summary.emplace_back("note", std::int64_t{7});

  std::ostringstream csv;
  render(report, OutputFormat::csv, csv);
  CHECK(csv.str() == "label,value,flag,missing,note\n\"a,\"\"b\"\"\",3.14159,true,,7\n");

  std::ostringstream table;
  render(report, OutputFormat::table, table);
  CHECK(table.str().find("3.14") != std::string::npos);
  CHECK(table.str().find("note: 7") != std::string::npos);

  std::ostringstream js;
  render(report, OutputFormat::json, js);
  const auto doc = json::parse(js.str());
  CHECK(doc["rows"][0]["missing"].is_null());
  CHECK(doc["summary"]["note"] == 7);
  CHECK(parse_format("yaml") == std::nullopt);
}
