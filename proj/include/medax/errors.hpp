#pragma once

#include <stdexcept>
#include <string>

namespace medax {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The represented set does not meet the fattened window. Callers decide
/// whether this is fatal; the set itself is nonempty by construction.
struct EmptyOnWindowError : Error {
  using Error::Error;
};

/// eta_sep <= 2*(eps + eps_d): clusters could not be told apart from noise.
struct ToleranceConflictError : Error {
  using Error::Error;
};

/// Ball inflation asked at a point whose nearest-point map is multivalued.
struct NotUnivalentError : Error {
  using Error::Error;
};

/// Query point lies on the set (distance below the on-set cutoff).
struct OnSetError : Error {
  using Error::Error;
};

struct ScheduleTooShortError : Error {
  using Error::Error;
};

struct NonSmoothError : Error {
  using Error::Error;
};

struct ZeroCurvatureError : Error {
  using Error::Error;
};

struct OriginMissingError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace medax
