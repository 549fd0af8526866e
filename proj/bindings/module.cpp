#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dyadic/errors.hpp"
#include "dyadic/harness.hpp"
#include "dyadic/trace_io.hpp"

namespace py = pybind11;
using namespace dyadic;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Budgeted convex optimization with interval-valued evaluations";

  py::register_exception<InconsistencyError>(m, "InconsistencyError");
  py::register_exception<CapacityError>(m, "CapacityError");
  py::register_exception<ContractError>(m, "ContractError");

  py::class_<Coord>(m, "Coord")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den"))
      .def_property_readonly("fraction", &Coord::fraction)
      .def("is_dyadic", &Coord::is_dyadic)
      .def("__float__", &Coord::to_double)
      .def("__repr__", [](const Coord& c) { return "Coord(" + c.fraction() + ")"; })
      .def("__eq__", [](const Coord& a, const Coord& b) { return a == b; })
      .def("__lt__", [](const Coord& a, const Coord& b) { return a < b; })
      .def("__hash__", [](const Coord& c) { return py::hash(py::str(c.fraction())); });

  m.def("convex_combination", &convex_combination, py::arg("a"), py::arg("b"), py::arg("w_num"),
        py::arg("w_den"));
  m.def("denormalize", &denormalize, py::arg("coord"), py::arg("domain_lo"), py::arg("domain_hi"));

  py::class_<FuzzyInterval>(m, "FuzzyInterval")
      .def(py::init([](double lo, double hi) { return make_fuzzy(lo, hi); }), py::arg("lo"),
           py::arg("hi"))
      .def_static("everything", &FuzzyInterval::everything)
      .def_static("point", &FuzzyInterval::point)
      .def_readonly("lo", &FuzzyInterval::lo)
      .def_readonly("hi", &FuzzyInterval::hi)
      .def("width", &FuzzyInterval::width)
      .def("contains", &FuzzyInterval::contains)
      .def("__eq__", [](const FuzzyInterval& a, const FuzzyInterval& b) { return a == b; })
      .def("__repr__", [](const FuzzyInterval& j) {
        return "FuzzyInterval(" + g17(j.lo) + ", " + g17(j.hi) + ")";
      });

  m.def("intersect", &intersect, py::arg("a"), py::arg("b"));

  py::enum_<DeletionPattern>(m, "DeletionPattern")
      .value("LeftHalf", DeletionPattern::LeftHalf)
      .value("RightHalf", DeletionPattern::RightHalf)
      .value("Outer", DeletionPattern::Outer)
      .value("LeftEnd", DeletionPattern::LeftEnd)
      .value("RightEnd", DeletionPattern::RightEnd)
      .value("NoDeletion", DeletionPattern::None);

  m.def("decide_deletion", &decide_deletion, py::arg("j_l"), py::arg("j_c"), py::arg("j_r"));

  py::enum_<PartitionKind>(m, "PartitionKind")
      .value("Uniform", PartitionKind::Uniform)
      .value("NonUniform", PartitionKind::NonUniform);

  py::class_<ActiveInterval>(m, "ActiveInterval")
      .def(py::init<Coord, Coord>(), py::arg("lo"), py::arg("hi"))
      .def_readonly("lo", &ActiveInterval::lo)
      .def_readonly("hi", &ActiveInterval::hi)
      .def("__repr__", [](const ActiveInterval& a) {
        return "ActiveInterval(" + a.lo.fraction() + ", " + a.hi.fraction() + ")";
      });

  py::class_<Triple>(m, "Triple")
      .def_readonly("l", &Triple::l)
      .def_readonly("c", &Triple::c)
      .def_readonly("r", &Triple::r);

  m.def("partition_uniform", &partition_uniform);
  m.def("partition_nonuniform", &partition_nonuniform);
  m.def("partition", &partition, py::arg("active"), py::arg("kind"));
  m.def("update_interval", &update_interval, py::arg("active"), py::arg("kind"),
        py::arg("pattern"));

  py::class_<PointLedgerEntry>(m, "PointLedgerEntry")
      .def_readonly("point", &PointLedgerEntry::point)
      .def_readonly("invested", &PointLedgerEntry::invested)
      .def_readonly("queries", &PointLedgerEntry::queries)
      .def_readonly("fuzzy", &PointLedgerEntry::fuzzy);

  py::class_<ClosedEpoch>(m, "ClosedEpoch")
      .def_readonly("epoch", &ClosedEpoch::epoch)
      .def_readonly("end_round", &ClosedEpoch::end_round)
      .def_readonly("budget", &ClosedEpoch::budget)
      .def_readonly("active", &ClosedEpoch::active)
      .def_readonly("kind", &ClosedEpoch::kind)
      .def_readonly("triple", &ClosedEpoch::triple)
      .def_readonly("ended_by", &ClosedEpoch::ended_by);

  py::class_<EpochEvent>(m, "EpochEvent")
      .def_readonly("pattern", &EpochEvent::pattern)
      .def_readonly("epoch_after", &EpochEvent::epoch_after)
      .def_readonly("closed", &EpochEvent::closed)
      .def("transitioned", &EpochEvent::transitioned);

  py::class_<DyadicSearch>(m, "DyadicSearch")
      .def(py::init<>())
      .def("select_query", &DyadicSearch::select_query)
      .def("observe", &DyadicSearch::observe, py::arg("queried"), py::arg("budget"),
           py::arg("response"))
      .def_property_readonly("epoch", &DyadicSearch::epoch)
      .def_property_readonly("active", &DyadicSearch::active)
      .def_property_readonly("kind", &DyadicSearch::kind)
      .def_property_readonly("triple", &DyadicSearch::triple)
      .def_property_readonly("round", &DyadicSearch::round)
      .def_property_readonly("epoch_budget", &DyadicSearch::epoch_budget)
      .def("ledger_entry", &DyadicSearch::ledger_entry, py::arg("point"))
      .def("incumbent", &DyadicSearch::incumbent);

  py::enum_<ObjectiveShape>(m, "ObjectiveShape")
      .value("AbsoluteValue", ObjectiveShape::AbsoluteValue)
      .value("Quadratic", ObjectiveShape::Quadratic)
      .value("PiecewiseLinearMax", ObjectiveShape::PiecewiseLinearMax)
      .value("SoftplusLike", ObjectiveShape::SoftplusLike);

  py::class_<Objective>(m, "Objective")
      .def(py::init([](ObjectiveShape shape, double xstar, double scale, double domain_lo,
                       double domain_hi) {
             Objective obj{shape, xstar, scale, domain_lo, domain_hi};
             validate(obj);
             return obj;
           }),
           py::arg("shape") = ObjectiveShape::AbsoluteValue, py::arg("xstar") = 0.5,
           py::arg("scale") = 1.0, py::arg("domain_lo") = 0.0, py::arg("domain_hi") = 1.0)
      .def_readwrite("shape", &Objective::shape)
      .def_readwrite("xstar", &Objective::xstar)
      .def_readwrite("scale", &Objective::scale)
      .def_readwrite("domain_lo", &Objective::domain_lo)
      .def_readwrite("domain_hi", &Objective::domain_hi);

  m.def("objective_eval", &objective_eval, py::arg("objective"), py::arg("x"));

  py::class_<ObjectiveExtrema>(m, "ObjectiveExtrema")
      .def_readonly("xstar", &ObjectiveExtrema::xstar)
      .def_readonly("fmin", &ObjectiveExtrema::fmin)
      .def_readonly("range", &ObjectiveExtrema::range);

  m.def("analytic_extrema", &analytic_extrema, py::arg("objective"));

  py::enum_<OracleKind>(m, "OracleKind")
      .value("Centered", OracleKind::Centered)
      .value("FullWidthCentered", OracleKind::FullWidthCentered)
      .value("LowerAnchored", OracleKind::LowerAnchored)
      .value("UpperAnchored", OracleKind::UpperAnchored)
      .value("ShrinkOnly", OracleKind::ShrinkOnly)
      .value("Lying", OracleKind::Lying);

  py::class_<OracleSpec>(m, "OracleSpec")
      .def(py::init([](OracleKind kind, double c, double alpha, std::uint64_t rng_seed,
                       std::int64_t lie_round) {
             OracleSpec spec{kind, c, alpha, rng_seed, lie_round};
             validate(spec);
             return spec;
           }),
           py::arg("kind") = OracleKind::Centered, py::arg("c") = 1.0, py::arg("alpha") = 1.0,
           py::arg("rng_seed") = 0, py::arg("lie_round") = 10)
      .def_readwrite("kind", &OracleSpec::kind)
      .def_readwrite("c", &OracleSpec::c)
      .def_readwrite("alpha", &OracleSpec::alpha)
      .def_readwrite("rng_seed", &OracleSpec::rng_seed)
      .def_readwrite("lie_round", &OracleSpec::lie_round);

  m.def("oracle_respond", &oracle_respond, py::arg("spec"), py::arg("true_value"),
        py::arg("cumulative_budget"), py::arg("t"), py::arg("prior_queries") = 0);
  m.def("response_complies", &response_complies, py::arg("response"),
        py::arg("cumulative_budget"), py::arg("c"), py::arg("alpha"), py::arg("true_value"));

  py::class_<BudgetSchedule>(m, "BudgetSchedule")
      .def_static("constant", &BudgetSchedule::constant, py::arg("value"))
      .def_static("cyclic", &BudgetSchedule::cyclic, py::arg("values"))
      .def_static("seeded_random", &BudgetSchedule::seeded_random, py::arg("lo"), py::arg("hi"),
                  py::arg("seed"))
      .def("is_unit", &BudgetSchedule::is_unit);

  m.def("budget_at", &budget_at, py::arg("schedule"), py::arg("t"));

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init([](Objective objective, OracleSpec oracle, BudgetSchedule schedule,
                       std::int64_t horizon, bool record_full_trace) {
             RunConfig config{std::move(objective), std::move(oracle), std::move(schedule),
                              horizon, record_full_trace};
             validate(config);
             return config;
           }),
           py::arg("objective") = Objective{}, py::arg("oracle") = OracleSpec{},
           py::arg("schedule") = BudgetSchedule::constant(1.0), py::arg("horizon") = 10000,
           py::arg("record_full_trace") = true)
      .def_readwrite("objective", &RunConfig::objective)
      .def_readwrite("oracle", &RunConfig::oracle)
      .def_readwrite("schedule", &RunConfig::schedule)
      .def_readwrite("horizon", &RunConfig::horizon)
      .def_readwrite("record_full_trace", &RunConfig::record_full_trace);

  py::class_<TraceRow>(m, "TraceRow")
      .def_readonly("t", &TraceRow::t)
      .def_readonly("budget", &TraceRow::budget)
      .def_readonly("query_coord", &TraceRow::query_coord)
      .def_readonly("query_x", &TraceRow::query_x)
      .def_readonly("response", &TraceRow::response)
      .def_readonly("epoch", &TraceRow::epoch)
      .def_readonly("active_lo", &TraceRow::active_lo)
      .def_readonly("active_hi", &TraceRow::active_hi)
      .def_readonly("inst_regret", &TraceRow::inst_regret)
      .def_readonly("cum_regret", &TraceRow::cum_regret);

  py::class_<Trace>(m, "Trace")
      .def_readonly("rows", &Trace::rows)
      .def_readonly("epochs", &Trace::epochs)
      .def_readonly("open", &Trace::open)
      .def_readonly("horizon", &Trace::horizon)
      .def_readonly("total_budget", &Trace::total_budget)
      .def_readonly("final_cum_regret", &Trace::final_cum_regret);

  m.def("run", &run, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("regret", &regret, py::arg("trace"), py::arg("objective"));
  m.def("regret_bound", &regret_bound, py::arg("horizon"), py::arg("alpha"), py::arg("c"),
        py::arg("range"));

  py::class_<DiagnosticsReport>(m, "DiagnosticsReport")
      .def_readonly("queries_on_dyadic_mesh", &DiagnosticsReport::queries_on_dyadic_mesh)
      .def_readonly("intervals_nested", &DiagnosticsReport::intervals_nested)
      .def_readonly("transitions_match_table", &DiagnosticsReport::transitions_match_table)
      .def_readonly("nonuniform_lengths_valid", &DiagnosticsReport::nonuniform_lengths_valid)
      .def_readonly("minimizer_retained", &DiagnosticsReport::minimizer_retained)
      .def_readonly("minimizer_check_applicable", &DiagnosticsReport::minimizer_check_applicable)
      .def_readonly("selection_balanced", &DiagnosticsReport::selection_balanced)
      .def_readonly("widths_nonincreasing", &DiagnosticsReport::widths_nonincreasing)
      .def_readonly("regret_nondecreasing", &DiagnosticsReport::regret_nondecreasing)
      .def_readonly("epoch_balance_satisfied", &DiagnosticsReport::epoch_balance_satisfied)
      .def_readonly("epoch_balance_applicable", &DiagnosticsReport::epoch_balance_applicable)
      .def("all_ok", &DiagnosticsReport::all_ok);

  m.def("diagnostics", &diagnostics, py::arg("trace"), py::arg("config"));

  py::class_<ScalingRow>(m, "ScalingRow")
      .def_readonly("horizon", &ScalingRow::horizon)
      .def_readonly("measured_regret", &ScalingRow::measured_regret)
      .def_readonly("bound", &ScalingRow::bound);

  py::class_<ScalingResult>(m, "ScalingResult")
      .def_readonly("rows", &ScalingResult::rows)
      .def_readonly("loglog_slope", &ScalingResult::loglog_slope);

  m.def("scaling_experiment", &scaling_experiment, py::arg("base"), py::arg("horizons"),
        py::call_guard<py::gil_scoped_release>());

  m.def(
      "write_csv",
      [](const Trace& trace, const Objective& obj, const std::string& path) {
        write_csv(trace, obj, path);
      },
      py::arg("trace"), py::arg("objective"), py::arg("path"));
  m.def(
      "summary_text",
      [](const Trace& trace, const RunConfig& config) {
        std::ostringstream out;
        write_summary(trace, config, out);
        return out.str();
      },
      py::arg("trace"), py::arg("config"));

#ifdef DYADIC_VERSION
  m.attr("__version__") = DYADIC_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
