#pragma once

#include <limits>
#include <optional>

namespace dyadic {

// Closed extended-real interval of objective values. [-inf, +inf] is the
// "no information" element attached to never-queried points.
struct FuzzyInterval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  static FuzzyInterval everything() { return {}; }
  static FuzzyInterval point(double v) { return {v, v}; }

  double width() const;  // hi - lo, +inf when either bound is infinite
  bool contains(double v) const { return lo <= v && v <= hi; }

  friend bool operator==(const FuzzyInterval& a, const FuzzyInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// Throws ContractError unless lo <= hi, both non-NaN, lo < +inf, hi > -inf.
FuzzyInterval make_fuzzy(double lo, double hi);

// [max(lo), min(hi)], or nullopt when the result would be empty.
std::optional<FuzzyInterval> try_intersect(const FuzzyInterval& a, const FuzzyInterval& b);

// As above but an empty result raises InconsistencyError: the environment
// contradicted itself about the value at a point.
FuzzyInterval intersect(const FuzzyInterval& a, const FuzzyInterval& b);

// Which part of the active interval the evaluations at l < c < r allow the
// optimizer to discard. LeftHalf/RightHalf cut at the center point, Outer
// keeps only [l, r], LeftEnd/RightEnd cut before l / after r, None keeps
// everything.
enum class DeletionPattern { LeftHalf, RightHalf, Outer, LeftEnd, RightEnd, None };

// First-match cascade over the guards, in this order:
//   LeftHalf   if Jc.lo >= Jr.hi
//   RightHalf  if Jc.lo >= Jl.hi
//   Outer      if Jl.lo >= min(Jc.hi, Jr.hi) and Jr.lo >= min(Jl.hi, Jc.hi)
//   LeftEnd    if Jl.lo >= min(Jc.hi, Jr.hi)
//   RightEnd   if Jr.lo >= min(Jl.hi, Jc.hi)
//   None       otherwise
// Ties (equality) satisfy >=.
DeletionPattern decide_deletion(const FuzzyInterval& j_l, const FuzzyInterval& j_c,
                                const FuzzyInterval& j_r);

const char* to_string(DeletionPattern p);

}  // namespace dyadic
