#include "dyadic/harness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "dyadic/errors.hpp"

namespace dyadic {

void validate(const RunConfig& config) {
  validate(config.objective);
  validate(config.oracle);
  if (config.horizon < 1) throw std::invalid_argument("horizon must be at least 1");
}

Trace run(const RunConfig& config) {
  validate(config);
  const ObjectiveExtrema extrema = analytic_extrema(config.objective);

  DyadicSearch search;
  Trace trace;
  trace.horizon = config.horizon;
  if (config.record_full_trace) trace.rows.reserve(static_cast<std::size_t>(config.horizon));

  double cum_regret = 0.0;
  for (std::int64_t t = 1; t <= config.horizon; ++t) {
    const double budget = budget_at(config.schedule, t);
    const Coord query = search.select_query();
    const double x = std::clamp(denormalize(query, config.objective.domain_lo,
                                            config.objective.domain_hi),
                                config.objective.domain_lo, config.objective.domain_hi);
    const double fx = objective_eval(config.objective, x);

    const PointLedgerEntry before = search.ledger_entry(query);
    const FuzzyInterval response =
        oracle_respond(config.oracle, fx, before.invested + budget, t, before.queries);

    const EpochEvent event = search.observe(query, budget, response);
    if (event.transitioned()) trace.epochs.push_back(*event.closed);

    const double inst = budget * (fx - extrema.fmin);
    cum_regret += inst;
    trace.total_budget += budget;

    if (config.record_full_trace) {
      const ClosedEpoch* during = event.transitioned() ? &*event.closed : nullptr;
      TraceRow row;
      row.t = t;
      row.budget = budget;
      row.query_coord = query;
      row.query_x = x;
      row.response = response;
      row.epoch = during ? during->epoch : event.epoch_after;
      row.active_lo = during ? during->active.lo : search.active().lo;
      row.active_hi = during ? during->active.hi : search.active().hi;
      row.inst_regret = inst;
      row.cum_regret = cum_regret;
      trace.rows.push_back(std::move(row));
    }
  }

  trace.final_cum_regret = cum_regret;
  trace.open = ClosedEpoch{search.epoch(),        search.round(), search.epoch_budget(),
                           search.active(),       search.kind(),  search.triple(),
                           DeletionPattern::None};
  return trace;
}

double regret(const Trace& trace, const Objective& obj) {
  if (trace.rows.empty()) throw std::invalid_argument("regret needs a recorded trace");
  const double fmin = analytic_extrema(obj).fmin;
  double total = 0.0;
  for (const TraceRow& row : trace.rows) {
    total += row.budget * (objective_eval(obj, row.query_x) - fmin);
  }
  return total;
}

double regret_bound(std::int64_t horizon, double alpha, double c, double range) {
  const double t = static_cast<double>(horizon);
  const double grown = range * std::pow(t, alpha);
  const double floored =
      grown > 1.0 ? std::floor(4.0 + 2.0 * std::log(grown) / std::log(4.0 / 3.0)) : 4.0;
  return (floored * 8.0 * c * std::pow(6.0, alpha) + 2.0) * std::pow(t, 1.0 - alpha) +
         60.0 * range;
}

namespace {

bool ratio_is_allowed(const BigRational& ratio) {
  static const BigRational allowed[] = {BigRational(1, 3), BigRational(1, 2), BigRational(2, 3),
                                        BigRational(3, 4)};
  return std::find(std::begin(allowed), std::end(allowed), ratio) != std::end(allowed);
}

bool length_is_three_halvings(const ActiveInterval& active) {
  const BigRational len = active.length();
  if (boost::multiprecision::numerator(len) != 3) return false;
  const BigInt den = boost::multiprecision::denominator(len);
  if (den < 4) return false;
  return boost::multiprecision::lsb(den) == boost::multiprecision::msb(den);
}

}  // namespace

DiagnosticsReport diagnostics(const Trace& trace, const RunConfig& config) {
  if (static_cast<std::int64_t>(trace.rows.size()) != trace.horizon) {
    throw std::invalid_argument("diagnostics needs the full per-round trace");
  }

  DiagnosticsReport report;
  report.minimizer_check_applicable = config.oracle.kind != OracleKind::Lying;
  report.epoch_balance_applicable = config.schedule.is_unit();

  // Epoch sequence: completed epochs then the one still open at T.
  std::vector<const ClosedEpoch*> epochs;
  epochs.reserve(trace.epochs.size() + 1);
  for (const ClosedEpoch& e : trace.epochs) epochs.push_back(&e);
  epochs.push_back(&trace.open);

  const ActiveInterval full;
  if (epochs.front()->active != full || epochs.front()->kind != PartitionKind::Uniform) {
    report.transitions_match_table = false;
  }
  for (std::size_t i = 0; i < epochs.size(); ++i) {
    const ClosedEpoch& cur = *epochs[i];
    if (cur.epoch != static_cast<int>(i) + 1) report.transitions_match_table = false;
    if (cur.triple != partition(cur.active, cur.kind)) report.transitions_match_table = false;
    if (cur.kind == PartitionKind::NonUniform && !length_is_three_halvings(cur.active)) {
      report.nonuniform_lengths_valid = false;
    }
    if (i + 1 == epochs.size()) break;
    const ClosedEpoch& next = *epochs[i + 1];

    if (!(next.active.lo >= cur.active.lo && next.active.hi <= cur.active.hi) ||
        !ratio_is_allowed(next.active.length() / cur.active.length())) {
      report.intervals_nested = false;
    }
    const auto [expected_active, expected_kind] = update_interval(cur.active, cur.kind, cur.ended_by);
    if (expected_active != next.active || expected_kind != next.kind) {
      report.transitions_match_table = false;
    }
  }

  if (report.minimizer_check_applicable) {
    const BigRational xstar_norm =
        (exact_rational(config.objective.xstar) - exact_rational(config.objective.domain_lo)) /
        (exact_rational(config.objective.domain_hi) - exact_rational(config.objective.domain_lo));
    for (const ClosedEpoch* e : epochs) {
      if (xstar_norm < e->active.lo.value() || xstar_norm > e->active.hi.value()) {
        report.minimizer_retained = false;
      }
    }
  }

  std::map<Coord, double> invested;
  std::map<Coord, std::int64_t> counts;
  std::map<Coord, FuzzyInterval> merged;
  std::size_t completed = 0;  // epochs whose balance has been evaluated
  double prev_cum = 0.0;
  for (const TraceRow& row : trace.rows) {
    if (!row.query_coord.is_dyadic()) report.queries_on_dyadic_mesh = false;

    // Balance of completed epochs is judged on counts just before their last round.
    while (completed < trace.epochs.size() && row.t == trace.epochs[completed].end_round) {
      const ClosedEpoch& e = trace.epochs[completed];
      if (report.epoch_balance_applicable) {
        const double needed = (e.budget - 3.0) / 3.0;
        const std::int64_t fewest = std::min({counts[e.triple.l], counts[e.triple.c],
                                              counts[e.triple.r]});
        if (static_cast<double>(fewest) < needed - 1e-9) report.epoch_balance_satisfied = false;
      }
      ++completed;
    }

    const std::size_t idx = static_cast<std::size_t>(row.epoch) - 1;
    const Triple& triple = idx < trace.epochs.size() ? trace.epochs[idx].triple : trace.open.triple;
    if (!triple.holds(row.query_coord)) {
      report.selection_balanced = false;
    } else {
      const double mine = invested[row.query_coord];
      if (mine > invested[triple.l] || mine > invested[triple.c] || mine > invested[triple.r]) {
        report.selection_balanced = false;
      }
    }
    invested[row.query_coord] += row.budget;
    counts[row.query_coord] += 1;

    auto [it, inserted] = merged.try_emplace(row.query_coord, FuzzyInterval::everything());
    const double width_before = it->second.width();
    if (auto next = try_intersect(it->second, row.response)) {
      it->second = *next;
      if (it->second.width() > width_before) report.widths_nonincreasing = false;
    } else {
      report.widths_nonincreasing = false;
    }

    if (row.cum_regret < prev_cum || row.inst_regret < -1e-12) report.regret_nondecreasing = false;
    prev_cum = row.cum_regret;
  }

  return report;
}

ScalingResult scaling_experiment(const RunConfig& base, const std::vector<std::int64_t>& horizons) {
  if (horizons.empty()) throw std::invalid_argument("scaling needs at least one horizon");
  if (!std::is_sorted(horizons.begin(), horizons.end())) {
    throw std::invalid_argument("horizons must be ascending");
  }
  const ObjectiveExtrema extrema = analytic_extrema(base.objective);

  ScalingResult result;
  for (std::int64_t horizon : horizons) {
    RunConfig config = base;
    config.horizon = horizon;
    const Trace trace = run(config);
    result.rows.push_back({horizon, trace.final_cum_regret,
                           regret_bound(horizon, base.oracle.alpha, base.oracle.c, extrema.range)});
  }

  // Least-squares slope of log R over log T.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (const ScalingRow& row : result.rows) {
    if (!(row.measured_regret > 0)) continue;
    const double lx = std::log(static_cast<double>(row.horizon));
    const double ly = std::log(row.measured_regret);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  result.loglog_slope =
      n >= 2 ? (static_cast<double>(n) * sxy - sx * sy) / (static_cast<double>(n) * sxx - sx * sx)
             : std::numeric_limits<double>::quiet_NaN();
  return result;
}

}  // namespace dyadic
