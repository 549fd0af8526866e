#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dyadic/errors.hpp"
#include "dyadic/harness.hpp"
#include "dyadic/trace_io.hpp"

namespace {

using namespace dyadic;

struct CliOptions {
  std::string objective = "abs";
  double xstar = 0.5;
  double scale = 1.0;
  double domain_lo = 0.0;
  double domain_hi = 1.0;

  std::string oracle = "centered";
  double c = 1.0;
  double alpha = 1.0;
  std::uint64_t seed = 0;
  std::int64_t lie_round = 10;

  std::string schedule = "constant";
  std::string budget = "1";
  double budget_lo = 0.5;
  double budget_hi = 1.5;

  std::int64_t horizon = 10000;
  std::string horizons = "1000,10000,100000";

  std::string out_path;
  std::string summary_path;
  bool no_trace = false;
};

ObjectiveShape parse_shape(const std::string& name) {
  if (name == "abs") return ObjectiveShape::AbsoluteValue;
  if (name == "quadratic") return ObjectiveShape::Quadratic;
  if (name == "pwl-max") return ObjectiveShape::PiecewiseLinearMax;
  if (name == "softplus") return ObjectiveShape::SoftplusLike;
  throw std::invalid_argument("unknown objective: " + name);
}

OracleKind parse_oracle(const std::string& name) {
  if (name == "centered") return OracleKind::Centered;
  if (name == "full-centered") return OracleKind::FullWidthCentered;
  if (name == "lower-anchored") return OracleKind::LowerAnchored;
  if (name == "upper-anchored") return OracleKind::UpperAnchored;
  if (name == "shrink-only") return OracleKind::ShrinkOnly;
  if (name == "lying") return OracleKind::Lying;
  throw std::invalid_argument("unknown oracle: " + name);
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad number in list: " + item);
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("empty list");
  return values;
}

std::vector<std::int64_t> parse_horizons(const std::string& text) {
  std::vector<std::int64_t> horizons;
  for (double v : parse_double_list(text)) {
    const auto t = static_cast<std::int64_t>(v);
    if (t < 1 || static_cast<double>(t) != v) {
      throw std::invalid_argument("horizons must be positive integers");
    }
    horizons.push_back(t);
  }
  return horizons;
}

RunConfig build_config(const CliOptions& opt) {
  RunConfig config;
  config.objective = {parse_shape(opt.objective), opt.xstar, opt.scale, opt.domain_lo,
                      opt.domain_hi};
  config.oracle = {parse_oracle(opt.oracle), opt.c, opt.alpha, opt.seed, opt.lie_round};

  if (opt.schedule == "constant") {
    const auto values = parse_double_list(opt.budget);
    if (values.size() != 1) throw std::invalid_argument("constant schedule takes one budget");
    config.schedule = BudgetSchedule::constant(values.front());
  } else if (opt.schedule == "cyclic") {
    config.schedule = BudgetSchedule::cyclic(parse_double_list(opt.budget));
  } else if (opt.schedule == "random") {
    config.schedule = BudgetSchedule::seeded_random(opt.budget_lo, opt.budget_hi, opt.seed);
  } else {
    throw std::invalid_argument("unknown schedule: " + opt.schedule);
  }

  config.horizon = opt.horizon;
  validate(config);
  return config;
}

// Summary target: a file when requested, stdout otherwise.
class SummarySink {
public:
  explicit SummarySink(const std::string& path) {
    if (!path.empty()) {
      file_.emplace(path);
      if (!*file_) throw IoError("cannot open for writing: " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
  std::optional<std::ofstream> file_;
};

int command_run(const CliOptions& opt, bool diagnose_only) {
  const RunConfig config = build_config(opt);
  SummarySink sink(opt.summary_path);
  try {
    const Trace trace = run(config);
    if (!diagnose_only && !opt.no_trace && !opt.out_path.empty()) {
      write_csv(trace, config.objective, opt.out_path);
    }
    write_summary(trace, config, sink.stream());
    return exit_code::ok;
  } catch (const InconsistencyError& e) {
    sink.stream() << "environment inconsistency at round " << e.round() << ": " << e.what()
                  << '\n';
    throw;
  }
}

int command_scaling(const CliOptions& opt) {
  RunConfig base = build_config(opt);
  const auto horizons = parse_horizons(opt.horizons);
  const ScalingResult result = scaling_experiment(base, horizons);

  SummarySink sink(opt.summary_path);
  std::ostream& out = sink.stream();
  out << "T,R_T,bound,within_bound\n";
  for (const ScalingRow& row : result.rows) {
    out << row.horizon << ',' << g17(row.measured_regret) << ',' << g17(row.bound) << ','
        << (row.measured_regret <= row.bound ? "yes" : "no") << '\n';
  }
  out << "loglog_slope: " << g17(result.loglog_slope) << '\n';

  if (!opt.out_path.empty()) {
    std::ofstream file(opt.out_path);
    if (!file) throw IoError("cannot open for writing: " + opt.out_path);
    write_scaling_csv(result, file);
  }
  return exit_code::ok;
}

void add_common_options(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--objective", opt.objective, "abs|quadratic|pwl-max|softplus")
      ->capture_default_str();
  cmd->add_option("--xstar", opt.xstar, "minimizer location")->capture_default_str();
  cmd->add_option("--scale", opt.scale, "objective scale")->capture_default_str();
  cmd->add_option("--domain-lo", opt.domain_lo, "domain lower end")->capture_default_str();
  cmd->add_option("--domain-hi", opt.domain_hi, "domain upper end")->capture_default_str();
  cmd->add_option("--oracle", opt.oracle,
                  "centered|full-centered|lower-anchored|upper-anchored|shrink-only|lying")
      ->capture_default_str();
  cmd->add_option("--c", opt.c, "width constant c")->capture_default_str();
  cmd->add_option("--alpha", opt.alpha, "width exponent alpha")->capture_default_str();
  cmd->add_option("--seed", opt.seed, "seed for randomized pieces")->capture_default_str();
  cmd->add_option("--lie-round", opt.lie_round, "lying oracle: first round that may lie")
      ->capture_default_str();
  cmd->add_option("--schedule", opt.schedule, "constant|cyclic|random")->capture_default_str();
  cmd->add_option("--budget", opt.budget, "budget value, or comma list for cyclic")
      ->capture_default_str();
  cmd->add_option("--budget-lo", opt.budget_lo, "random schedule lower bound")
      ->capture_default_str();
  cmd->add_option("--budget-hi", opt.budget_hi, "random schedule upper bound")
      ->capture_default_str();
  cmd->add_option("--summary", opt.summary_path, "write the summary here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dyadic search simulator: budgeted convex optimization with interval-valued "
               "evaluations"};
  app.require_subcommand(1);

  CliOptions opt;

  CLI::App* cmd_run = app.add_subcommand("run", "run one experiment and emit trace + summary");
  add_common_options(cmd_run, opt);
  cmd_run->add_option("--T", opt.horizon, "number of rounds")->capture_default_str();
  cmd_run->add_option("--out", opt.out_path, "trace CSV path");
  cmd_run->add_flag("--no-trace", opt.no_trace, "skip the trace CSV");

  CLI::App* cmd_scaling =
      app.add_subcommand("scaling", "run one configuration across several horizons");
  add_common_options(cmd_scaling, opt);
  cmd_scaling->add_option("--horizons", opt.horizons, "comma-separated horizons, ascending")
      ->capture_default_str();
  cmd_scaling->add_option("--out", opt.out_path, "scaling table CSV path");

  CLI::App* cmd_diagnose =
      app.add_subcommand("diagnose", "run one experiment and report diagnostics only");
  add_common_options(cmd_diagnose, opt);
  cmd_diagnose->add_option("--T", opt.horizon, "number of rounds")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? dyadic::exit_code::ok : dyadic::exit_code::usage;
  }

  try {
    if (cmd_run->parsed()) return command_run(opt, false);
    if (cmd_diagnose->parsed()) return command_run(opt, true);
    return command_scaling(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dyadic::exit_code_for(e);
  }
}
