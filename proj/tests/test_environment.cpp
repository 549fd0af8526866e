#include <doctest.h>

#include <cmath>
#include <random>

#include "dyadic/environment.hpp"

using namespace dyadic;

TEST_CASE("objective shapes evaluate as specified") {
  CHECK(objective_eval({ObjectiveShape::AbsoluteValue, 0.5, 1.0, 0, 1}, 0.25) ==
        doctest::Approx(0.25).epsilon(0));
  CHECK(objective_eval({ObjectiveShape::Quadratic, 0.4, 1.0, 0, 1}, 0.4) == 0.0);
  CHECK(objective_eval({ObjectiveShape::PiecewiseLinearMax, 0.5, 1.0, 0, 1}, 0.75) ==
        doctest::Approx(0.5).epsilon(0));
  CHECK(objective_eval({ObjectiveShape::SoftplusLike, 0.5, 1.0, 0, 1}, 0.5) ==
        doctest::Approx(0.0));
  CHECK_THROWS_AS(objective_eval({ObjectiveShape::AbsoluteValue, 0.5, 1.0, 0, 1}, 1.5),
                  std::domain_error);
}

TEST_CASE("analytic extrema") {
  const ObjectiveExtrema a = analytic_extrema({ObjectiveShape::AbsoluteValue, 0.5, 1.0, 0, 1});
  CHECK(a.xstar == 0.5);
  CHECK(a.fmin == 0.0);
  CHECK(a.range == doctest::Approx(0.5).epsilon(0));

  const ObjectiveExtrema q = analytic_extrema({ObjectiveShape::Quadratic, 0.4, 1.0, 0, 1});
  CHECK(q.range == doctest::Approx(0.36));

  const ObjectiveExtrema s = analytic_extrema({ObjectiveShape::AbsoluteValue, 0.25, 2.0, 0, 1});
  CHECK(s.range == doctest::Approx(1.5).epsilon(0));
}

TEST_CASE("objective validation") {
  CHECK_THROWS_AS(validate(Objective{ObjectiveShape::AbsoluteValue, 0.0, 1.0, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(Objective{ObjectiveShape::AbsoluteValue, 0.5, 1.0, 1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(Objective{ObjectiveShape::AbsoluteValue, 0.5, -1.0, 0, 1}),
                  std::invalid_argument);
}

TEST_CASE("every shape satisfies the convexity inequality on random triples") {
  std::mt19937_64 rng(555);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const ObjectiveShape shapes[] = {ObjectiveShape::AbsoluteValue, ObjectiveShape::Quadratic,
                                   ObjectiveShape::PiecewiseLinearMax,
                                   ObjectiveShape::SoftplusLike};
  for (int i = 0; i < 4000; ++i) {
    const Objective obj{shapes[i % 4], 0.1 + 0.8 * u01(rng), 0.25 + 2 * u01(rng), 0, 1};
    double x = u01(rng), y = u01(rng), z = u01(rng);
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    if (z - x < 1e-9) continue;
    const double chord = ((z - y) * objective_eval(obj, x) + (y - x) * objective_eval(obj, z)) /
                         (z - x);
    CHECK(objective_eval(obj, y) <= chord + 1e-9 * std::max(1.0, std::abs(chord)));
  }
}

TEST_CASE("budget schedules") {
  CHECK(budget_at(BudgetSchedule::constant(1.0), 7) == 1.0);
  CHECK(budget_at(BudgetSchedule::cyclic({1, 2}), 4) == 2.0);
  CHECK(budget_at(BudgetSchedule::cyclic({1, 2}), 1) == 1.0);

  const BudgetSchedule r = BudgetSchedule::seeded_random(0.5, 1.5, 42);
  const double v1 = budget_at(r, 1);
  CHECK(v1 >= 0.5);
  CHECK(v1 <= 1.5);
  CHECK(budget_at(r, 1) == v1);  // same (seed, t) gives the same budget
  CHECK(budget_at(BudgetSchedule::seeded_random(0.5, 1.5, 43), 1) != v1);

  CHECK_THROWS_AS(BudgetSchedule::constant(0.0), std::invalid_argument);
  CHECK_THROWS_AS(BudgetSchedule::cyclic({}), std::invalid_argument);
  CHECK_THROWS_AS(BudgetSchedule::cyclic({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(BudgetSchedule::seeded_random(0, 1, 0), std::invalid_argument);
}

TEST_CASE("oracle responses match the documented forms") {
  const OracleSpec centered{OracleKind::Centered, 1.0, 1.0, 0, 10};
  CHECK(oracle_respond(centered, 0.5, 4.0, 1, 0) == FuzzyInterval{0.375, 0.625});

  const OracleSpec lower{OracleKind::LowerAnchored, 1.0, 1.0, 0, 10};
  CHECK(oracle_respond(lower, 0.5, 1.0, 1, 0) == FuzzyInterval{0.5, 1.5});

  const OracleSpec half{OracleKind::Centered, 1.0, 0.5, 0, 10};
  CHECK(oracle_respond(half, 0.0, 16.0, 1, 0) == FuzzyInterval{-0.125, 0.125});

  const OracleSpec upper{OracleKind::UpperAnchored, 1.0, 1.0, 0, 10};
  CHECK(oracle_respond(upper, 0.5, 1.0, 1, 0) == FuzzyInterval{-0.5, 0.5});

  const OracleSpec shrink{OracleKind::ShrinkOnly, 1.0, 1.0, 0, 10};
  CHECK(oracle_respond(shrink, 0.0, 1.0, 1, 2).width() == doctest::Approx(0.25).epsilon(0));
}

TEST_CASE("compliance check") {
  CHECK(response_complies({0.375, 0.625}, 4.0, 1.0, 1.0, 0.5));
  CHECK_FALSE(response_complies({0.3, 0.7}, 4.0, 1.0, 1.0, 0.5));
  CHECK_FALSE(response_complies({0.6, 0.7}, 4.0, 1.0, 1.0, 0.5));
}

TEST_CASE("every truthful oracle kind complies on random draws") {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> value(-10, 10);
  std::uniform_real_distribution<double> budget(0.01, 100);
  std::uniform_real_distribution<double> cdist(0, 5);
  std::uniform_real_distribution<double> adist(0.05, 2);
  std::uniform_int_distribution<std::int64_t> prior(0, 20);
  const OracleKind kinds[] = {OracleKind::Centered, OracleKind::FullWidthCentered,
                              OracleKind::LowerAnchored, OracleKind::UpperAnchored,
                              OracleKind::ShrinkOnly};
  for (OracleKind kind : kinds) {
    for (int i = 0; i < 2000; ++i) {
      const OracleSpec spec{kind, cdist(rng), adist(rng), 0, 10};
      const double v = value(rng);
      const double b = budget(rng);
      const std::int64_t k = prior(rng);
      const FuzzyInterval resp = oracle_respond(spec, v, b, i + 1, k);
      CHECK(response_complies(resp, b, spec.c, spec.alpha, v));
      CHECK(oracle_respond(spec, v, b, i + 1, k) == resp);  // determinism
    }
  }
}

TEST_CASE("the lying oracle is truthful early and excludes the value once triggered") {
  const OracleSpec liar{OracleKind::Lying, 1.0, 1.0, 0, 10};
  CHECK(oracle_respond(liar, 0.5, 1.0, 5, 3) == FuzzyInterval{0.0, 1.0});
  CHECK(oracle_respond(liar, 0.5, 2.0, 12, 0) == FuzzyInterval{0.25, 0.75});  // no prior query
  const FuzzyInterval lie = oracle_respond(liar, 0.5, 2.0, 12, 1);
  CHECK_FALSE(lie.contains(0.5));
}

TEST_CASE("oracle validation") {
  CHECK_THROWS_AS(validate(OracleSpec{OracleKind::Centered, -1.0, 1.0, 0, 10}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(OracleSpec{OracleKind::Centered, 1.0, 0.0, 0, 10}),
                  std::invalid_argument);
}
