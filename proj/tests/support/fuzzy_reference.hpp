#pragma once

// Test-only helpers: a brute-force re-evaluation of the deletion case table,
// written independently of the library's cascade, and a generator of fuzzy
// intervals that stresses infinite, touching and equal bounds.

#include <algorithm>
#include <limits>
#include <random>

#include "dyadic/fuzzy.hpp"

namespace dyadic::testing {

// Direct transcription of the six-case table: evaluate every guard from the
// raw bounds, then walk the rows in listed order and return the first hit.
inline DeletionPattern reference_deletion(const FuzzyInterval& jl, const FuzzyInterval& jc,
                                          const FuzzyInterval& jr) {
  const double l_inf = jl.lo, l_sup = jl.hi;
  const double c_inf = jc.lo, c_sup = jc.hi;
  const double r_inf = jr.lo, r_sup = jr.hi;

  const bool row1 = c_inf >= r_sup;
  const bool row2 = c_inf >= l_sup;
  const bool row3 = (l_inf >= std::min(c_sup, r_sup)) && (r_inf >= std::min(l_sup, c_sup));
  const bool row4 = l_inf >= std::min(c_sup, r_sup);
  const bool row5 = r_inf >= std::min(l_sup, c_sup);

  if (row1) return DeletionPattern::LeftHalf;
  if (row2) return DeletionPattern::RightHalf;
  if (row3) return DeletionPattern::Outer;
  if (row4) return DeletionPattern::LeftEnd;
  if (row5) return DeletionPattern::RightEnd;
  return DeletionPattern::None;
}

// Bounds drawn from a small grid (to force ties), a continuous range, and
// the infinities.
inline FuzzyInterval random_fuzzy(std::mt19937_64& rng) {
  static constexpr double grid[] = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  const double inf = std::numeric_limits<double>::infinity();
  std::uniform_int_distribution<int> mode(0, 9);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(grid) - 1);
  std::uniform_real_distribution<double> cont(-3.0, 3.0);

  auto draw = [&]() {
    const int m = mode(rng);
    if (m < 6) return grid[pick(rng)];
    return cont(rng);
  };

  double lo = mode(rng) == 0 ? -inf : draw();
  double hi = mode(rng) == 0 ? inf : draw();
  if (lo > hi) std::swap(lo, hi);
  if (lo == inf) lo = -inf;    // keep intervals non-empty after the swap
  if (hi == -inf) hi = inf;
  return {lo, hi};
}

}  // namespace dyadic::testing
