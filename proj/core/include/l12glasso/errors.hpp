#pragma once

#include <stdexcept>
#include <string>

namespace l12 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Linear-algebra and model-shape violations.
struct DimensionMismatch : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct FactorizationFailed : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct InvalidRho : Error { using Error::Error; };
struct InvalidHyperparams : Error { using Error::Error; };

// Solver failures.
struct StepSizeUnderflow : Error { using Error::Error; };
struct NonFiniteObjective : Error { using Error::Error; };

// Simulation / evaluation configuration.
struct ConfigInfeasible : Error { using Error::Error; };
struct DegenerateSplit : Error { using Error::Error; };

// File I/O and CLI.
struct ParseError : Error { using Error::Error; };
struct RaggedRows : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };

}  // namespace l12
