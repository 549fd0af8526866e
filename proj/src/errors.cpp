#include "dyadic/errors.hpp"

namespace dyadic {

int exit_code_for(const std::exception& e) noexcept {
  if (dynamic_cast<const InconsistencyError*>(&e)) return exit_code::inconsistency;
  if (dynamic_cast<const CapacityError*>(&e)) return exit_code::capacity;
  if (dynamic_cast<const IoError*>(&e)) return exit_code::io;
  if (dynamic_cast<const std::invalid_argument*>(&e)) return exit_code::usage;
  return exit_code::failure;
}

}  // namespace dyadic
