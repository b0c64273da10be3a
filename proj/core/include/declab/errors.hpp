// Error taxonomy. Conditions callers are expected to catch get their own
// type; everything derives from Error. InvariantViolation marks internal
// consistency failures (CLI exit code 2), the rest are input/domain errors
// (exit code 1).
#pragma once

#include <stdexcept>

namespace declab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact_lp
struct ParseError : Error { using Error::Error; };
struct MalformedProgram : Error { using Error::Error; };
struct MissingVariable : Error { using Error::Error; };
struct NegativeWeight : Error { using Error::Error; };
struct WeightsNotNormalized : Error { using Error::Error; };
struct NotACertificate : Error { using Error::Error; };

// exponent_system
struct RegimeRangeError : Error { using Error::Error; };
struct KTooSmall : Error { using Error::Error; };

// exponent_formulas
struct DomainError : Error { using Error::Error; };
struct NonconvergenceError : Error { using Error::Error; };

// cantor_lab
struct OddP : Error { using Error::Error; };
struct SizeLimit : Error { using Error::Error; };
struct GridTooCoarse : Error { using Error::Error; };

struct InvariantViolation : Error { using Error::Error; };

}  // namespace declab
