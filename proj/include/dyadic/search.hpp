#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dyadic/coord.hpp"
#include "dyadic/fuzzy.hpp"

namespace dyadic {

// Placement of the query triple inside the active interval: quarters
// (1/4, 1/2, 3/4) or thirds (1/3, 1/2, 2/3).
enum class PartitionKind { Uniform, NonUniform };

const char* to_string(PartitionKind k);

struct ActiveInterval {
  Coord lo;
  Coord hi;

  ActiveInterval() : lo(0, 1), hi(1, 1) {}
  ActiveInterval(Coord lo_, Coord hi_);

  BigRational length() const { return hi.value() - lo.value(); }

  friend bool operator==(const ActiveInterval& a, const ActiveInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

struct Triple {
  Coord l, c, r;

  bool holds(const Coord& x) const { return x == l || x == c || x == r; }

  friend bool operator==(const Triple& a, const Triple& b) {
    return a.l == b.l && a.c == b.c && a.r == b.r;
  }
};

Triple partition_uniform(const ActiveInterval& active);
Triple partition_nonuniform(const ActiveInterval& active);
Triple partition(const ActiveInterval& active, PartitionKind kind);

// Prunes the active interval according to the deletion pattern and says how
// the remainder will be partitioned. Throws ContractError for pattern None.
std::pair<ActiveInterval, PartitionKind> update_interval(const ActiveInterval& active,
                                                         PartitionKind kind,
                                                         DeletionPattern pattern);

// Per-point history: cumulative invested budget and the intersection of all
// fuzzy evaluations returned for the point. Entries persist across epochs
// because the dyadic mesh reuses points.
struct PointLedgerEntry {
  Coord point;
  double invested = 0.0;
  std::int64_t queries = 0;
  FuzzyInterval fuzzy = FuzzyInterval::everything();
};

// Bookkeeping for one finished epoch.
struct ClosedEpoch {
  int epoch = 0;
  std::int64_t end_round = 0;   // last round of the epoch
  double budget = 0.0;          // budget accumulated within the epoch
  ActiveInterval active;
  PartitionKind kind = PartitionKind::Uniform;
  Triple triple;
  DeletionPattern ended_by = DeletionPattern::None;
};

struct EpochSummary {
  int epoch = 0;
  std::int64_t end_round = 0;
  double budget = 0.0;
};

struct EpochEvent {
  DeletionPattern pattern = DeletionPattern::None;
  int epoch_after = 0;
  std::optional<ClosedEpoch> closed;  // set when the observation ended an epoch

  bool transitioned() const { return closed.has_value(); }
};

// Epoch-based interval elimination over the normalized domain [0,1]: keep a
// query triple, invest each round's budget in the least-funded triple point,
// and shrink the active interval as soon as the per-point fuzzy evaluations
// justify a deletion.
class DyadicSearch {
public:
  DyadicSearch();

  // The triple point with minimal invested budget; ties prefer c, then l, then r.
  Coord select_query() const;

  // Records one round: adds the budget and the response at `queried`, then
  // evaluates the deletion cascade and, if it fires, advances the epoch.
  // Throws InconsistencyError when the response is disjoint from the point's
  // history, ContractError when `queried` is not a triple point.
  EpochEvent observe(const Coord& queried, double budget, const FuzzyInterval& response);

  int epoch() const { return epoch_; }
  const ActiveInterval& active() const { return active_; }
  PartitionKind kind() const { return kind_; }
  const Triple& triple() const { return triple_; }
  std::int64_t round() const { return round_; }
  double epoch_budget() const { return epoch_budget_; }
  std::int64_t epoch_start_round() const { return epoch_start_round_; }
  const std::vector<EpochSummary>& epoch_history() const { return history_; }
  const std::map<Coord, PointLedgerEntry>& ledger() const { return ledger_; }

  // Ledger lookup; absent points report zero budget and the full real line.
  PointLedgerEntry ledger_entry(const Coord& point) const;

  // Current center point. Plumbing only; no recommendation guarantee.
  const Coord& incumbent() const { return triple_.c; }

private:
  int epoch_;
  ActiveInterval active_;
  PartitionKind kind_;
  Triple triple_;
  std::map<Coord, PointLedgerEntry> ledger_;
  std::int64_t round_;
  double epoch_budget_;
  std::int64_t epoch_start_round_;
  std::vector<EpochSummary> history_;
};

}  // namespace dyadic
