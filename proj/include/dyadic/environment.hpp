#pragma once

#include <cstdint>
#include <vector>

#include "dyadic/fuzzy.hpp"

namespace dyadic {

// Convex test objectives with analytically known minimizers.
enum class ObjectiveShape { AbsoluteValue, Quadratic, PiecewiseLinearMax, SoftplusLike };

struct Objective {
  ObjectiveShape shape = ObjectiveShape::AbsoluteValue;
  double xstar = 0.5;
  double scale = 1.0;
  double domain_lo = 0.0;
  double domain_hi = 1.0;
};

// Throws std::invalid_argument unless domain_lo < xstar < domain_hi and scale >= 0.
void validate(const Objective& obj);

// f(x); throws std::domain_error outside [domain_lo, domain_hi].
double objective_eval(const Objective& obj, double x);

struct ObjectiveExtrema {
  double xstar = 0.0;
  double fmin = 0.0;
  double range = 0.0;  // max(f) - min(f); the max sits at a domain endpoint
};

ObjectiveExtrema analytic_extrema(const Objective& obj);

// Fuzzy-evaluation oracles. All kinds except Lying return an interval that
// contains the true value and has width at most c / budget^alpha, where the
// budget includes the current round.
enum class OracleKind {
  Centered,           // full allowed width, centered at the true value
  FullWidthCentered,  // alias of Centered, kept for config clarity
  LowerAnchored,      // [v, v + w]
  UpperAnchored,      // [v - w, v]
  ShrinkOnly,         // centered, width w / 2^k after k prior queries at the point
  Lying               // truthful until lie_round, then excludes the true value
};

struct OracleSpec {
  OracleKind kind = OracleKind::Centered;
  double c = 1.0;
  double alpha = 1.0;
  std::uint64_t rng_seed = 0;
  std::int64_t lie_round = 10;  // Lying only: first round at which it may lie
};

void validate(const OracleSpec& spec);

// Response for a query whose cumulative invested budget (current round
// included) is `cumulative_budget` and which was queried `prior_queries`
// times before. Pure function of its arguments.
FuzzyInterval oracle_respond(const OracleSpec& spec, double true_value, double cumulative_budget,
                             std::int64_t t, std::int64_t prior_queries);

// True iff the response contains the true value and its width is within
// c / budget^alpha up to a 4-ulp relative slack.
bool response_complies(const FuzzyInterval& response, double cumulative_budget, double c,
                       double alpha, double true_value);

// Strictly positive per-round budgets, deterministic given (schedule, t).
struct BudgetSchedule {
  enum class Kind { Constant, Cyclic, SeededRandom };

  Kind kind = Kind::Constant;
  double value = 1.0;          // Constant
  std::vector<double> values;  // Cyclic
  double lo = 1.0;             // SeededRandom
  double hi = 1.0;
  std::uint64_t seed = 0;

  static BudgetSchedule constant(double value);
  static BudgetSchedule cyclic(std::vector<double> values);
  static BudgetSchedule seeded_random(double lo, double hi, std::uint64_t seed);

  bool is_unit() const { return kind == Kind::Constant && value == 1.0; }
};

double budget_at(const BudgetSchedule& schedule, std::int64_t t);

const char* to_string(ObjectiveShape s);
const char* to_string(OracleKind k);

}  // namespace dyadic
