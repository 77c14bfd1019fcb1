#pragma once

#include <stdexcept>
#include <string>

namespace mwvortex {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Field amplitude vanishes where a phase or sign is needed.
struct DegenerateField : Error {
  using Error::Error;
};

struct StepTooLarge : Error {
  using Error::Error;
};

struct SingularSystem : Error {
  using Error::Error;
};

// Thrown by the control-B coherences when 8g^2 - 3|W1|^2 is ~0.
// row/col are set when the failure happened inside a transverse render.
struct ResonantDenominator : Error {
  explicit ResonantDenominator(const std::string& what, int row_ = -1, int col_ = -1)
      : Error(what), row(row_), col(col_) {}
  int row;
  int col;
};

// Populations left [0, 1] during time evolution.
struct UnphysicalState : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace mwvortex
