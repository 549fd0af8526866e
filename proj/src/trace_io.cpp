#include "dyadic/trace_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "dyadic/errors.hpp"

namespace dyadic {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const Trace& trace, const Objective& obj, std::ostream& out) {
  out << kTraceCsvHeader << '\n';
  for (const TraceRow& row : trace.rows) {
    out << row.t << ',' << g17(row.budget) << ',' << g17(row.query_x) << ','
        << g17(row.response.lo) << ',' << g17(row.response.hi) << ',' << row.epoch << ','
        << g17(denormalize(row.active_lo, obj.domain_lo, obj.domain_hi)) << ','
        << g17(denormalize(row.active_hi, obj.domain_lo, obj.domain_hi)) << ','
        << g17(row.inst_regret) << ',' << g17(row.cum_regret) << ',' << row.query_coord.fraction()
        << ',' << row.active_lo.fraction() << ',' << row.active_hi.fraction() << '\n';
  }
  if (!out) throw IoError("failed while writing trace CSV");
}

void write_csv(const Trace& trace, const Objective& obj, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  write_csv(trace, obj, out);
  out.flush();
  if (!out) throw IoError("failed while writing: " + path);
}

namespace {

const char* passfail(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

void write_summary(const Trace& trace, const RunConfig& config, std::ostream& out) {
  const ObjectiveExtrema extrema = analytic_extrema(config.objective);
  out << "T: " << trace.horizon << '\n';
  out << "total_budget: " << g17(trace.total_budget) << '\n';
  out << "R_T: " << g17(trace.final_cum_regret) << '\n';

  const bool premises = config.schedule.is_unit() && config.oracle.kind != OracleKind::Lying;
  if (premises) {
    const double bound =
        regret_bound(trace.horizon, config.oracle.alpha, config.oracle.c, extrema.range);
    out << "bound: " << g17(bound) << '\n';
    out << "R_T <= bound: " << passfail(trace.final_cum_regret <= bound) << '\n';
  } else {
    out << "bound: n/a: premises not met\n";
  }

  out << "final_active: [" << trace.open.active.lo.fraction() << ", "
      << trace.open.active.hi.fraction() << "]\n";
  out << "final_partition: " << to_string(trace.open.kind) << '\n';
  out << "epochs: " << trace.open.epoch << '\n';

  if (!trace.rows.empty()) {
    const DiagnosticsReport d = diagnostics(trace, config);
    out << "diagnostics:\n";
    out << "  queries_on_dyadic_mesh: " << passfail(d.queries_on_dyadic_mesh) << '\n';
    out << "  intervals_nested: " << passfail(d.intervals_nested) << '\n';
    out << "  transitions_match_table: " << passfail(d.transitions_match_table) << '\n';
    out << "  nonuniform_lengths_valid: " << passfail(d.nonuniform_lengths_valid) << '\n';
    out << "  minimizer_retained: "
        << (d.minimizer_check_applicable ? passfail(d.minimizer_retained) : "n/a") << '\n';
    out << "  selection_balanced: " << passfail(d.selection_balanced) << '\n';
    out << "  widths_nonincreasing: " << passfail(d.widths_nonincreasing) << '\n';
    out << "  regret_nondecreasing: " << passfail(d.regret_nondecreasing) << '\n';
    out << "  epoch_balance: "
        << (d.epoch_balance_applicable ? passfail(d.epoch_balance_satisfied) : "n/a") << '\n';
  }
  if (!out) throw IoError("failed while writing summary");
}

void write_scaling_csv(const ScalingResult& result, std::ostream& out) {
  out << "T,R_T,bound\n";
  for (const ScalingRow& row : result.rows) {
    out << row.horizon << ',' << g17(row.measured_regret) << ',' << g17(row.bound) << '\n';
  }
  if (!out) throw IoError("failed while writing scaling CSV");
}

}  // namespace dyadic
