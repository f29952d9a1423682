#pragma once

#include <stdexcept>
#include <string>

namespace eqt {

// Invalid input (bad partition, foreign group element, zero grid, ...).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Point-count budget exceeded.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal consistency failure (e.g. a broken group table).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace eqt
