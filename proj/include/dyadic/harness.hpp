#pragma once

#include <cstdint>
#include <vector>

#include "dyadic/coord.hpp"
#include "dyadic/environment.hpp"
#include "dyadic/search.hpp"

namespace dyadic {

struct RunConfig {
  Objective objective;
  OracleSpec oracle;
  BudgetSchedule schedule;
  std::int64_t horizon = 10000;
  bool record_full_trace = true;
};

void validate(const RunConfig& config);

struct TraceRow {
  std::int64_t t = 0;
  double budget = 0.0;
  Coord query_coord;       // normalized query point
  double query_x = 0.0;    // same point in the user's domain
  FuzzyInterval response;  // raw round response, pre-intersection
  int epoch = 0;           // epoch the round belonged to
  Coord active_lo;
  Coord active_hi;
  double inst_regret = 0.0;
  double cum_regret = 0.0;
};

struct Trace {
  std::vector<TraceRow> rows;        // empty when record_full_trace is off
  std::vector<ClosedEpoch> epochs;   // completed epochs, in order
  ClosedEpoch open;                  // state of the epoch still running at T
  std::int64_t horizon = 0;
  double total_budget = 0.0;
  double final_cum_regret = 0.0;
};

// Executes the round loop for `horizon` rounds: budget from the schedule,
// query from the optimizer, truth from the objective, response from the
// oracle, then one observation. InconsistencyError carries the failing round.
Trace run(const RunConfig& config);

// Budget-weighted excess value over the analytic minimum, recomputed from
// the recorded rows.
double regret(const Trace& trace, const Objective& obj);

// Explicit regret ceiling for unit budgets:
//   (floor(4 + 2*log_{4/3}(M*T^alpha)) * 8*c*6^alpha + 2) * T^(1-alpha) + 60*M
// with the floored term clamped at 4 when M*T^alpha <= 1.
double regret_bound(std::int64_t horizon, double alpha, double c, double range);

struct DiagnosticsReport {
  bool queries_on_dyadic_mesh = true;
  bool intervals_nested = true;            // containment + shrink ratio in {1/3,1/2,2/3,3/4}
  bool transitions_match_table = true;     // update table + triple re-derivation
  bool nonuniform_lengths_valid = true;    // length 3*2^-h, h >= 2
  bool minimizer_retained = true;
  bool minimizer_check_applicable = true;  // truthful oracle only
  bool selection_balanced = true;          // queried point had minimal invested budget
  bool widths_nonincreasing = true;
  bool regret_nondecreasing = true;
  bool epoch_balance_satisfied = true;     // per-epoch query balance
  bool epoch_balance_applicable = true;    // unit budgets only

  bool all_ok() const {
    return queries_on_dyadic_mesh && intervals_nested && transitions_match_table &&
           nonuniform_lengths_valid && (minimizer_retained || !minimizer_check_applicable) &&
           selection_balanced && widths_nonincreasing && regret_nondecreasing &&
           (epoch_balance_satisfied || !epoch_balance_applicable);
  }
};

// Validates a recorded trace against the structural guarantees of the
// search: mesh membership, nesting, the update table, balance, and regret
// monotonicity. Requires a full trace.
DiagnosticsReport diagnostics(const Trace& trace, const RunConfig& config);

struct ScalingRow {
  std::int64_t horizon = 0;
  double measured_regret = 0.0;
  double bound = 0.0;
};

struct ScalingResult {
  std::vector<ScalingRow> rows;
  double loglog_slope = 0.0;  // least-squares slope of log R over log T
};

// Runs the same configuration at each horizon with a fresh optimizer.
ScalingResult scaling_experiment(const RunConfig& base, const std::vector<std::int64_t>& horizons);

}  // namespace dyadic
