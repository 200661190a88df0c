#pragma once

#include <stdexcept>
#include <string>

namespace volband {

/// Malformed or inconsistent input data (CSV contents, transforms of
/// observed series). Distinct from std::invalid_argument, which signals
/// misuse of an API contract.
class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure during integration or sampling (non-finite state).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace volband
