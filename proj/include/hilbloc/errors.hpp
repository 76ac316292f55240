#pragma once

#include <stdexcept>
#include <string>

namespace hilbloc {

struct HilbError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : HilbError {
  using HilbError::HilbError;
};

// A specialization direction makes some denominator vanish identically.
struct DegenerateDirection : HilbError {
  using HilbError::HilbError;
};

// The localized sum keeps a negative power of z: no non-equivariant limit.
struct PoleAtZero : HilbError {
  using HilbError::HilbError;
};

// Two generic directions produced different limits.
struct DirectionMismatch : HilbError {
  using HilbError::HilbError;
};

struct ZeroWeight : HilbError {
  using HilbError::HilbError;
};

struct InvalidGeometry : HilbError {
  using HilbError::HilbError;
};

struct RankDeficient : HilbError {
  using HilbError::HilbError;
};

struct NonzeroResidual : HilbError {
  using HilbError::HilbError;
};

}  // namespace hilbloc
