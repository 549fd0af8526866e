#include "dyadic/fuzzy.hpp"

#include <algorithm>
#include <cmath>

#include "dyadic/errors.hpp"

namespace dyadic {

double FuzzyInterval::width() const {
  if (std::isinf(lo) || std::isinf(hi)) return std::numeric_limits<double>::infinity();
  return hi - lo;
}

FuzzyInterval make_fuzzy(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi ||
      lo == std::numeric_limits<double>::infinity() ||
      hi == -std::numeric_limits<double>::infinity()) {
    throw ContractError("fuzzy interval bounds must satisfy -inf <= lo <= hi <= +inf, non-empty");
  }
  return {lo, hi};
}

std::optional<FuzzyInterval> try_intersect(const FuzzyInterval& a, const FuzzyInterval& b) {
  const double lo = std::max(a.lo, b.lo);
  const double hi = std::min(a.hi, b.hi);
  if (lo > hi) return std::nullopt;
  return FuzzyInterval{lo, hi};
}

FuzzyInterval intersect(const FuzzyInterval& a, const FuzzyInterval& b) {
  if (auto r = try_intersect(a, b)) return *r;
  throw InconsistencyError(0, "disjoint fuzzy evaluations of the same point");
}

DeletionPattern decide_deletion(const FuzzyInterval& j_l, const FuzzyInterval& j_c,
                                const FuzzyInterval& j_r) {
  if (j_c.lo >= j_r.hi) return DeletionPattern::LeftHalf;
  if (j_c.lo >= j_l.hi) return DeletionPattern::RightHalf;
  const bool left_beaten = j_l.lo >= std::min(j_c.hi, j_r.hi);
  const bool right_beaten = j_r.lo >= std::min(j_l.hi, j_c.hi);
  if (left_beaten && right_beaten) return DeletionPattern::Outer;
  if (left_beaten) return DeletionPattern::LeftEnd;
  if (right_beaten) return DeletionPattern::RightEnd;
  return DeletionPattern::None;
}

const char* to_string(DeletionPattern p) {
  switch (p) {
    case DeletionPattern::LeftHalf: return "left-half";
    case DeletionPattern::RightHalf: return "right-half";
    case DeletionPattern::Outer: return "outer";
    case DeletionPattern::LeftEnd: return "left-end";
    case DeletionPattern::RightEnd: return "right-end";
    case DeletionPattern::None: return "none";
  }
  return "?";
}

}  // namespace dyadic
