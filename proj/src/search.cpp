#include "dyadic/search.hpp"

#include "dyadic/errors.hpp"

namespace dyadic {

const char* to_string(PartitionKind k) {
  return k == PartitionKind::Uniform ? "uniform" : "nonuniform";
}

ActiveInterval::ActiveInterval(Coord lo_, Coord hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!(lo < hi)) throw ContractError("active interval requires lo < hi");
}

Triple partition_uniform(const ActiveInterval& active) {
  return {convex_combination(active.lo, active.hi, 3, 4),
          convex_combination(active.lo, active.hi, 1, 2),
          convex_combination(active.lo, active.hi, 1, 4)};
}

Triple partition_nonuniform(const ActiveInterval& active) {
  return {convex_combination(active.lo, active.hi, 2, 3),
          convex_combination(active.lo, active.hi, 1, 2),
          convex_combination(active.lo, active.hi, 1, 3)};
}

Triple partition(const ActiveInterval& active, PartitionKind kind) {
  return kind == PartitionKind::Uniform ? partition_uniform(active) : partition_nonuniform(active);
}

std::pair<ActiveInterval, PartitionKind> update_interval(const ActiveInterval& active,
                                                         PartitionKind kind,
                                                         DeletionPattern pattern) {
  const Coord& lo = active.lo;
  const Coord& hi = active.hi;
  const bool uniform = kind == PartitionKind::Uniform;
  switch (pattern) {
    case DeletionPattern::LeftHalf:
      return {ActiveInterval(convex_combination(lo, hi, 1, 2), hi), kind};
    case DeletionPattern::RightHalf:
      return {ActiveInterval(lo, convex_combination(lo, hi, 1, 2)), kind};
    case DeletionPattern::Outer:
      if (uniform) {
        return {ActiveInterval(convex_combination(lo, hi, 3, 4), convex_combination(lo, hi, 1, 4)),
                PartitionKind::Uniform};
      }
      return {ActiveInterval(convex_combination(lo, hi, 2, 3), convex_combination(lo, hi, 1, 3)),
              PartitionKind::Uniform};
    case DeletionPattern::LeftEnd:
      if (uniform) {
        return {ActiveInterval(convex_combination(lo, hi, 3, 4), hi), PartitionKind::NonUniform};
      }
      return {ActiveInterval(convex_combination(lo, hi, 2, 3), hi), PartitionKind::Uniform};
    case DeletionPattern::RightEnd:
      if (uniform) {
        return {ActiveInterval(lo, convex_combination(lo, hi, 1, 4)), PartitionKind::NonUniform};
      }
      return {ActiveInterval(lo, convex_combination(lo, hi, 1, 3)), PartitionKind::Uniform};
    case DeletionPattern::None:
      break;
  }
  throw ContractError("update_interval requires a non-empty deletion pattern");
}

DyadicSearch::DyadicSearch()
    : epoch_(1),
      active_(),
      kind_(PartitionKind::Uniform),
      triple_(partition_uniform(active_)),
      round_(0),
      epoch_budget_(0.0),
      epoch_start_round_(0) {}

Coord DyadicSearch::select_query() const {
  const double at_l = ledger_entry(triple_.l).invested;
  const double at_c = ledger_entry(triple_.c).invested;
  const double at_r = ledger_entry(triple_.r).invested;
  if (at_c <= at_l && at_c <= at_r) return triple_.c;
  if (at_l <= at_r) return triple_.l;
  return triple_.r;
}

PointLedgerEntry DyadicSearch::ledger_entry(const Coord& point) const {
  if (auto it = ledger_.find(point); it != ledger_.end()) return it->second;
  PointLedgerEntry fresh;
  fresh.point = point;
  return fresh;
}

EpochEvent DyadicSearch::observe(const Coord& queried, double budget,
                                 const FuzzyInterval& response) {
  if (!triple_.holds(queried)) {
    throw ContractError("observed point is not in the current query triple");
  }
  if (!(budget > 0)) throw ContractError("budget must be strictly positive");

  auto [it, inserted] = ledger_.try_emplace(queried);
  if (inserted) it->second.point = queried;
  const auto merged = try_intersect(it->second.fuzzy, response);
  if (!merged) {
    if (inserted) ledger_.erase(it);
    throw InconsistencyError(round_ + 1,
                             "environment response is disjoint from the point's history");
  }
  it->second.fuzzy = *merged;
  it->second.invested += budget;
  it->second.queries += 1;
  round_ += 1;
  epoch_budget_ += budget;

  const DeletionPattern pattern = decide_deletion(
      ledger_entry(triple_.l).fuzzy, ledger_entry(triple_.c).fuzzy, ledger_entry(triple_.r).fuzzy);

  EpochEvent event;
  event.pattern = pattern;
  if (pattern == DeletionPattern::None) {
    event.epoch_after = epoch_;
    return event;
  }

  ClosedEpoch closed{epoch_, round_, epoch_budget_, active_, kind_, triple_, pattern};
  history_.push_back({epoch_, round_, epoch_budget_});
  auto [next_active, next_kind] = update_interval(active_, kind_, pattern);
  active_ = next_active;
  kind_ = next_kind;
  triple_ = partition(active_, kind_);
  epoch_ += 1;
  epoch_start_round_ = round_;
  epoch_budget_ = 0.0;

  event.epoch_after = epoch_;
  event.closed = std::move(closed);
  return event;
}

}  // namespace dyadic
