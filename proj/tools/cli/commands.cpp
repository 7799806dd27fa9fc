#include "cli/commands.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cli/report.hpp"
#include "rockers/rockers.hpp"

namespace rockers::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string format = "table";
  std::optional<int> digits;
  unsigned precision_bits = PrecisionConfig{}.ceiling_bits;
  std::string out_path;

  [[nodiscard]] PrecisionConfig precision() const {
    PrecisionConfig config;
    config.ceiling_bits = precision_bits;
    return config;
  }
};

struct RangeOptions {
  std::int64_t n_min = 0;
  std::optional<std::int64_t> n_max;
  std::int64_t step = 1;
};

// Checks the lower end against the operation's domain, then the ordering.
std::pair<Natural, Natural> checked_range(const RangeOptions& range, std::int64_t minimum, const char* name) {
  const Natural lo(range.n_min);
  require_at_least(lo, minimum, name);
  const std::int64_t hi = range.n_max.value_or(range.n_min);
  if (hi < range.n_min) {
    throw UsageError(std::string(name) + ": --n-max " + std::to_string(hi) + " is below --n-min " +
                     std::to_string(range.n_min));
  }
  if (range.step < 1) {
    throw UsageError(std::string(name) + ": --step must be >= 1");
  }
  return {lo, Natural(hi)};
}

void range_params(Report& report, std::int64_t lo, std::int64_t hi) {
  report.params["n_min"] = lo;
  report.params["n_max"] = hi;
}

// Default display: exact integers for λ(1), λ(2), three decimals up to
// n = 9 and ten significant digits beyond.
std::string default_display(Natural n, const PrecisionConfig& config) {
  if (n.value() <= 2) return lambda_value(n, 1, config);
  if (n.value() <= 9) return lambda_fixed(n, 3, config);
  return lambda_value(n, 10, config);
}

std::vector<Cell> lambda_row(Natural n, const GlobalOptions& g) {
  const std::string shown = g.digits ? lambda_value(n, *g.digits, g.precision()) : default_display(n, g.precision());
  return {n.value(), shown, static_cast<double>(log_lambda(n).log)};
}

std::vector<Column> lambda_columns() { return {{"n"}, {"lambda"}, {"log_lambda", 12}}; }

Report cmd_eval(std::int64_t n_arg, const GlobalOptions& g) {
  const Natural n(n_arg);
  Report report{"eval"};
  report.params["n"] = n_arg;
  if (g.digits) report.params["digits"] = *g.digits;
  report.columns = lambda_columns();
  report.rows.push_back(lambda_row(n, g));
  return report;
}

Report cmd_table(const RangeOptions& range, const GlobalOptions& g) {
  const auto [lo, hi] = checked_range(range, 1, "table");
  Report report{"table"};
  range_params(report, lo.value(), hi.value());
  if (g.digits) report.params["digits"] = *g.digits;
  report.columns = lambda_columns();
  for (std::int64_t v = lo.value(); v <= hi.value(); ++v) {
    report.rows.push_back(lambda_row(Natural(v), g));
  }
  return report;
}

Report cmd_asym(const RangeOptions& range) {
  const auto [lo, hi] = checked_range(range, 3, "asym");
  Report report{"asym"};
  range_params(report, lo.value(), hi.value());
  report.params["step"] = range.step;
  report.columns = {{"n"}, {"log_lambda_exact", 10}, {"log_lambda_asym", 10}, {"psi", 10},
                    {"log_error", 6}, {"ratio_error", 6}};
  for (const AsymptoticReport& r : asymptotic_report(lo, hi, range.step)) {
    report.rows.push_back({r.n.value(), r.log_lambda_exact, r.log_lambda_asym, r.psi, r.log_error, r.ratio_error});
  }
  return report;
}

Report cmd_indices(std::int64_t n_arg) {
  const Natural n(n_arg);
  require_at_least(n, 3, "indices");
  Report report{"indices"};
  report.params["n"] = n_arg;
  report.columns = {{"n"}, {"index_product"}, {"argument_recovery"}, {"index_sum", 12},
                    {"index_sum_constant", 8}};
  const Rational product = index_product(n);
  const Rational recovered = product.reciprocal() + Rational(1);
  report.rows.push_back(
      {n.value(), product.to_string(), recovered.to_string(), index_sum(n), index_sum_constant(n)});
  report.summary.emplace_back("constant_limit", index_sum_limit);
  return report;
}

Report cmd_bounds(const RangeOptions& range) {
  const auto [lo, hi] = checked_range(range, 3, "bounds");
  Report report{"bounds"};
  range_params(report, lo.value(), hi.value());
  report.columns = {{"n"},
                    {"lower_bound", 6},
                    {"denominator", 6},
                    {"upper_bound", 6},
                    {"denom_log", 8},
                    {"lower_log", 8},
                    {"upper_log", 8},
                    {"lambda_log", 8},
                    {"lambda_lower_log", 8},
                    {"lambda_upper_log", 8},
                    {"lower_holds"},
                    {"upper_holds"},
                    {"lambda_lower_holds"},
                    {"lambda_upper_holds"}};
  for (std::int64_t v = lo.value(); v <= hi.value(); ++v) {
    const BoundsVerdict b = bounds_check(Natural(v));
    report.rows.push_back({v, std::exp(b.lower_log), std::exp(b.denom_log), std::exp(b.upper_log), b.denom_log,
                           b.lower_log, b.upper_log, b.lambda_log, b.lambda_lower_log, b.lambda_upper_log,
                           b.lower_holds, b.upper_holds, b.lambda_lower_holds, b.lambda_upper_holds});
  }
  Cell threshold;
  try {
    threshold = bounds_threshold(lo, hi).value();
  } catch (const ThresholdNotFound&) {
    // Reported as null: the inequalities fail at the top of this range.
  }
  report.summary.emplace_back("threshold", threshold);
  return report;
}

Report cmd_escape(const RangeOptions& range, const GlobalOptions& g) {
  const auto [lo, hi] = checked_range(range, 3, "escape");
  Report report{"escape"};
  range_params(report, lo.value(), hi.value());
  report.columns = {{"n"}, {"escape_count"}, {"escape_ratio", 8}};
  for (std::int64_t v = lo.value(); v <= hi.value(); ++v) {
    const Natural n(v);
    const BigCount count = escape_count(n, g.precision());
    const double ratio = std::exp(count.log() - static_cast<double>(log_lambda(n).log));
    report.rows.push_back({v, count.to_string(), ratio});
  }
  return report;
}

void report_error(std::ostream& err, ExitCode code, const char* kind, const std::string& message) {
  nlohmann::ordered_json line;
  line["error"] = kind;
  line["exit_code"] = static_cast<int>(code);
  line["message"] = message;
  err << line.dump() << '\n';
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate and validate the rockers function lambda(n)", "rockers"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--digits", g.digits, "Significant digits for lambda(n)")->check(CLI::PositiveNumber);
  app.add_option("--precision-bits", g.precision_bits, "Multiprecision ceiling in bits")
      ->check(CLI::Range(16u, 1u << 20));
  app.add_option("--out", g.out_path, "Write the report to this file instead of stdout");

  std::int64_t n = 0;
  RangeOptions range;

  auto* eval = app.add_subcommand("eval", "lambda(n) at one n");
  eval->add_option("--n", n)->required();

  auto* table = app.add_subcommand("table", "lambda(n) over a range");
  range.n_min = 1;
  range.n_max = 12;
  table->add_option("--n-min", range.n_min);
  table->add_option("--n-max", range.n_max);

  auto add_range = [&range](CLI::App* sub) {
    sub->add_option("--n-min", range.n_min)->required();
    sub->add_option("--n-max", range.n_max);
  };
  auto* asym = app.add_subcommand("asym", "Asymptotic formula against the exact value");
  add_range(asym);
  asym->add_option("--step", range.step);

  auto* indices = app.add_subcommand("indices", "Index product and sum");
  indices->add_option("--n", n)->required();

  auto* bounds = app.add_subcommand("bounds", "Sandwich inequalities");
  add_range(bounds);

  auto* escape = app.add_subcommand("escape", "Exact floored product A(n)");
  add_range(escape);

  std::vector<std::string> argv(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    report_error(err, kUsageError, "usage", e.what());
    return kUsageError;
  }

  try {
    Report report;
    if (*eval) {
      report = cmd_eval(n, g);
    } else if (*table) {
      report = cmd_table(range, g);
    } else if (*asym) {
      report = cmd_asym(range);
    } else if (*indices) {
      report = cmd_indices(n);
    } else if (*bounds) {
      report = cmd_bounds(range);
    } else {
      report = cmd_escape(range, g);
    }
    report.params["format"] = g.format;

    const OutputFormat format = *parse_format(g.format);
    if (g.out_path.empty()) {
      render(report, format, out);
      return kSuccess;
    }
    std::ostringstream buffer;
    render(report, format, buffer);
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file || !(file << buffer.str())) {
      throw UsageError("cannot write --out file '" + g.out_path + "'");
    }
    return kSuccess;
  } catch (const UsageError& e) {
    report_error(err, kUsageError, "usage", e.what());
    return kUsageError;
  } catch (const DomainError& e) {
    report_error(err, kDomainError, "domain", e.what());
    return kDomainError;
  } catch (const PrecisionError& e) {
    report_error(err, kPrecisionError, "precision", e.what());
    return kPrecisionError;
  } catch (const ToleranceError& e) {
    report_error(err, kPrecisionError, "precision", e.what());
    return kPrecisionError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv, argv + argc);
  return run(std::span<const std::string>(args), out, err);
}

}  // namespace rockers::cli
