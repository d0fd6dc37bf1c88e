#pragma once

#include <stdexcept>
#include <string>

namespace rpg {

// Geometric stopping failed to trigger within the hard safety cap. The cap is
// sized so this has probability below 1e-20 on any sane discount; truncating
// silently would bias the estimators, so it is an error instead.
struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyDataError : std::invalid_argument {
  explicit EmptyDataError(const std::string& what) : std::invalid_argument(what) {}
};

// The generalized eigenproblem behind the relative condition number has no
// finite answer: the numerator matrix carries mass outside the range of the
// denominator matrix.
struct UnboundedError : std::runtime_error {
  explicit UnboundedError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  ConfigError(const std::string& field_path, const std::string& what)
      : std::runtime_error(field_path + ": " + what), field(field_path) {}
  std::string field;
};

}  // namespace rpg
