#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dyadic {

// Fixed-width arithmetic backends raise this on overflow. The default
// backend is arbitrary precision, so it is normally unreachable.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// The environment returned a fuzzy evaluation disjoint from the history at
// the same point, i.e. no fixed objective is consistent with its answers.
class InconsistencyError : public std::runtime_error {
public:
  InconsistencyError(std::int64_t round, const std::string& what)
      : std::runtime_error(what), round_(round) {}
  std::int64_t round() const noexcept { return round_; }

private:
  std::int64_t round_;
};

// A caller broke an API contract (e.g. update with the empty pattern).
class ContractError : public std::logic_error {
public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int usage = 2;
inline constexpr int inconsistency = 3;
inline constexpr int capacity = 4;
inline constexpr int io = 5;
}  // namespace exit_code

int exit_code_for(const std::exception& e) noexcept;

}  // namespace dyadic
