#include "dyadic/environment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dyadic/rng.hpp"

namespace dyadic {

namespace {

constexpr double kSoftplusSlope = 4.0;

double softplus(double z) { return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z))); }

// Symmetric, smooth, strictly convex, zero at d = 0.
double softplus_well(double d) {
  const double z = kSoftplusSlope * d;
  return softplus(z) + softplus(-z) - 2.0 * std::log(2.0);
}

}  // namespace

void validate(const Objective& obj) {
  if (!(obj.domain_lo < obj.domain_hi)) {
    throw std::invalid_argument("objective domain requires lo < hi");
  }
  if (!(obj.xstar > obj.domain_lo && obj.xstar < obj.domain_hi)) {
    throw std::invalid_argument("xstar must lie strictly inside the domain");
  }
  if (!(obj.scale >= 0)) throw std::invalid_argument("scale must be nonnegative");
}

double objective_eval(const Objective& obj, double x) {
  if (x < obj.domain_lo || x > obj.domain_hi) {
    throw std::domain_error("evaluation point outside the objective domain");
  }
  const double d = x - obj.xstar;
  switch (obj.shape) {
    case ObjectiveShape::AbsoluteValue:
      return obj.scale * std::abs(d);
    case ObjectiveShape::Quadratic:
      return obj.scale * d * d;
    case ObjectiveShape::PiecewiseLinearMax:
      return obj.scale * std::max(-d, 2.0 * d);
    case ObjectiveShape::SoftplusLike:
      return obj.scale * softplus_well(d);
  }
  throw std::invalid_argument("unknown objective shape");
}

ObjectiveExtrema analytic_extrema(const Objective& obj) {
  validate(obj);
  ObjectiveExtrema e;
  e.xstar = obj.xstar;
  e.fmin = 0.0;  // every shape vanishes at its minimizer
  e.range = std::max(objective_eval(obj, obj.domain_lo), objective_eval(obj, obj.domain_hi));
  return e;
}

void validate(const OracleSpec& spec) {
  if (!(spec.c >= 0)) throw std::invalid_argument("oracle constant c must be nonnegative");
  if (!(spec.alpha > 0)) throw std::invalid_argument("oracle exponent alpha must be positive");
}

FuzzyInterval oracle_respond(const OracleSpec& spec, double true_value, double cumulative_budget,
                             std::int64_t t, std::int64_t prior_queries) {
  const double w = spec.c / std::pow(cumulative_budget, spec.alpha);
  switch (spec.kind) {
    case OracleKind::Centered:
    case OracleKind::FullWidthCentered:
      return {true_value - w / 2, true_value + w / 2};
    case OracleKind::LowerAnchored:
      return {true_value, true_value + w};
    case OracleKind::UpperAnchored:
      return {true_value - w, true_value};
    case OracleKind::ShrinkOnly: {
      const double tight = w * std::exp2(-static_cast<double>(prior_queries));
      return {true_value - tight / 2, true_value + tight / 2};
    }
    case OracleKind::Lying: {
      if (t >= spec.lie_round && prior_queries >= 1) {
        const double offset = 10.0 * (spec.c + 1.0);
        return {true_value + offset, true_value + offset + 1.0};
      }
      return {true_value - w / 2, true_value + w / 2};
    }
  }
  throw std::invalid_argument("unknown oracle kind");
}

bool response_complies(const FuzzyInterval& response, double cumulative_budget, double c,
                       double alpha, double true_value) {
  const double bound = c / std::pow(cumulative_budget, alpha);
  const double slack = 4.0 * std::numeric_limits<double>::epsilon() * bound;
  return response.contains(true_value) && response.width() <= bound + slack;
}

BudgetSchedule BudgetSchedule::constant(double value) {
  if (!(value > 0)) throw std::invalid_argument("budgets must be strictly positive");
  BudgetSchedule s;
  s.kind = Kind::Constant;
  s.value = value;
  return s;
}

BudgetSchedule BudgetSchedule::cyclic(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("cyclic schedule needs at least one budget");
  for (double v : values) {
    if (!(v > 0)) throw std::invalid_argument("budgets must be strictly positive");
  }
  BudgetSchedule s;
  s.kind = Kind::Cyclic;
  s.values = std::move(values);
  return s;
}

BudgetSchedule BudgetSchedule::seeded_random(double lo, double hi, std::uint64_t seed) {
  if (!(lo > 0) || !(hi >= lo)) {
    throw std::invalid_argument("random schedule requires 0 < lo <= hi");
  }
  BudgetSchedule s;
  s.kind = Kind::SeededRandom;
  s.lo = lo;
  s.hi = hi;
  s.seed = seed;
  return s;
}

double budget_at(const BudgetSchedule& schedule, std::int64_t t) {
  switch (schedule.kind) {
    case BudgetSchedule::Kind::Constant:
      return schedule.value;
    case BudgetSchedule::Kind::Cyclic:
      return schedule.values[static_cast<std::size_t>((t - 1) %
                                                      static_cast<std::int64_t>(schedule.values.size()))];
    case BudgetSchedule::Kind::SeededRandom:
      return uniform_in(schedule.seed, static_cast<std::uint64_t>(t), schedule.lo, schedule.hi);
  }
  throw std::invalid_argument("unknown schedule kind");
}

const char* to_string(ObjectiveShape s) {
  switch (s) {
    case ObjectiveShape::AbsoluteValue: return "abs";
    case ObjectiveShape::Quadratic: return "quadratic";
    case ObjectiveShape::PiecewiseLinearMax: return "pwl-max";
    case ObjectiveShape::SoftplusLike: return "softplus";
  }
  return "?";
}

const char* to_string(OracleKind k) {
  switch (k) {
    case OracleKind::Centered: return "centered";
    case OracleKind::FullWidthCentered: return "full-centered";
    case OracleKind::LowerAnchored: return "lower-anchored";
    case OracleKind::UpperAnchored: return "upper-anchored";
    case OracleKind::ShrinkOnly: return "shrink-only";
    case OracleKind::Lying: return "lying";
  }
  return "?";
}

}  // namespace dyadic
