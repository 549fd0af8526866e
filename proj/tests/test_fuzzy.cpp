#include <doctest.h>

#include <cmath>
#include <random>

#include "dyadic/errors.hpp"
#include "dyadic/fuzzy.hpp"
#include "support/fuzzy_reference.hpp"

using namespace dyadic;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("intersection keeps the overlap") {
  CHECK(intersect({0, 2}, {1, 3}) == FuzzyInterval{1, 2});
  CHECK(intersect(FuzzyInterval::everything(), {1, 3}) == FuzzyInterval{1, 3});
  CHECK_THROWS_AS(intersect({0, 1}, {2, 3}), InconsistencyError);
  CHECK_FALSE(try_intersect({0, 1}, {2, 3}).has_value());
  CHECK(intersect({0, 1}, {1, 3}) == FuzzyInterval{1, 1});  // touching bounds
}

TEST_CASE("width") {
  CHECK(FuzzyInterval{0.25, 0.75}.width() == doctest::Approx(0.5).epsilon(0));
  CHECK(FuzzyInterval{-kInf, 3}.width() == kInf);
  CHECK(FuzzyInterval{1, 1}.width() == 0);
  CHECK(FuzzyInterval::everything().width() == kInf);
}

TEST_CASE("fuzzy interval validation") {
  CHECK_THROWS_AS(make_fuzzy(2, 1), ContractError);
  CHECK_THROWS_AS(make_fuzzy(kInf, kInf), ContractError);
  CHECK_THROWS_AS(make_fuzzy(-kInf, -kInf), ContractError);
  CHECK_THROWS_AS(make_fuzzy(std::nan(""), 1), ContractError);
  CHECK(make_fuzzy(-kInf, kInf) == FuzzyInterval::everything());
}

TEST_CASE("deletion cascade follows the listed guard order") {
  const FuzzyInterval real = FuzzyInterval::everything();
  CHECK(decide_deletion(real, real, real) == DeletionPattern::None);
  CHECK(decide_deletion({5, 6}, {4, 5}, {1, 2}) == DeletionPattern::LeftHalf);
  CHECK(decide_deletion({1, 2}, {4, 5}, {5, 6}) == DeletionPattern::RightHalf);
  CHECK(decide_deletion({3, 4}, {1, 2}, {3, 4}) == DeletionPattern::Outer);
  CHECK(decide_deletion({3, 4}, {1, 2}, real) == DeletionPattern::LeftEnd);
  CHECK(decide_deletion(real, {1, 2}, {3, 4}) == DeletionPattern::RightEnd);
}

TEST_CASE("equal point intervals fire the first guard through the tie") {
  // All three evaluations equal to [v, v]: guard 1 reads v >= v and wins.
  const FuzzyInterval p = FuzzyInterval::point(2.5);
  CHECK(decide_deletion(p, p, p) == DeletionPattern::LeftHalf);
}

TEST_CASE("cascade matches the brute-force table on randomized triples") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20000; ++i) {
    const FuzzyInterval jl = testing::random_fuzzy(rng);
    const FuzzyInterval jc = testing::random_fuzzy(rng);
    const FuzzyInterval jr = testing::random_fuzzy(rng);
    CHECK(decide_deletion(jl, jc, jr) == testing::reference_deletion(jl, jc, jr));
  }
}

TEST_CASE("a returned pattern implies its guard and rejects earlier guards") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20000; ++i) {
    const FuzzyInterval jl = testing::random_fuzzy(rng);
    const FuzzyInterval jc = testing::random_fuzzy(rng);
    const FuzzyInterval jr = testing::random_fuzzy(rng);
    const bool g1 = jc.lo >= jr.hi;
    const bool g2 = jc.lo >= jl.hi;
    const bool g4 = jl.lo >= std::min(jc.hi, jr.hi);
    const bool g5 = jr.lo >= std::min(jl.hi, jc.hi);
    switch (decide_deletion(jl, jc, jr)) {
      case DeletionPattern::LeftHalf: CHECK(g1); break;
      case DeletionPattern::RightHalf: CHECK((!g1 && g2)); break;
      case DeletionPattern::Outer: CHECK((!g1 && !g2 && g4 && g5)); break;
      case DeletionPattern::LeftEnd: CHECK((!g1 && !g2 && g4 && !g5)); break;
      case DeletionPattern::RightEnd: CHECK((!g1 && !g2 && !g4 && g5)); break;
      case DeletionPattern::None: CHECK((!g1 && !g2 && !g4 && !g5)); break;
    }
  }
}

TEST_CASE("a left-half deletion survives favorable shrinking of Jc and Jr") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int hits = 0;
  for (int i = 0; i < 50000 && hits < 500; ++i) {
    const FuzzyInterval jl = testing::random_fuzzy(rng);
    const FuzzyInterval jc = testing::random_fuzzy(rng);
    const FuzzyInterval jr = testing::random_fuzzy(rng);
    if (decide_deletion(jl, jc, jr) != DeletionPattern::LeftHalf) continue;
    ++hits;
    // Any sub-interval raises Jc.lo and lowers Jr.hi, so guard 1 still holds.
    auto shrink = [&](const FuzzyInterval& j) {
      if (std::isinf(j.lo) || std::isinf(j.hi)) return j;
      const double a = j.lo + u(rng) * (j.hi - j.lo);
      const double b = a + u(rng) * (j.hi - a);
      return FuzzyInterval{a, b};
    };
    CHECK(decide_deletion(jl, shrink(jc), shrink(jr)) == DeletionPattern::LeftHalf);
  }
  CHECK(hits > 0);
}
