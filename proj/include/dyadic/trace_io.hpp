#pragma once

#include <iosfwd>
#include <string>

#include "dyadic/harness.hpp"

namespace dyadic {

// "%.17g" rendering, enough digits for a bit-faithful round trip.
std::string g17(double v);

inline constexpr const char* kTraceCsvHeader =
    "t,budget,x,J_lo,J_hi,epoch,active_lo,active_hi,inst_regret,cum_regret,"
    "x_frac,active_lo_frac,active_hi_frac";

// One row per round. Decimal columns are in the user's domain; the *_frac
// columns carry the exact normalized fractions.
void write_csv(const Trace& trace, const Objective& obj, std::ostream& out);
void write_csv(const Trace& trace, const Objective& obj, const std::string& path);

// Human-readable run summary: horizon, total budget, measured regret, the
// regret ceiling when its premises (unit budgets, truthful oracle) hold,
// final active interval, epoch count, and per-check diagnostics.
void write_summary(const Trace& trace, const RunConfig& config, std::ostream& out);

void write_scaling_csv(const ScalingResult& result, std::ostream& out);

}  // namespace dyadic
