#pragma once

#include <stdexcept>
#include <string>

namespace lrt {

// Base of all toolkit errors. Two families matter to callers: precondition
// violations (bad inputs / geometry, CLI exit code 3) and numerical failures
// detected at run time (CLI exit code 4).
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

class NumericalError : public Error {
public:
  using Error::Error;
};

// -- precondition family ------------------------------------------------

class NonzeroMeanError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class CFLViolation : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class StridedBaseError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class TooFewDirections : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class ZeroSpatialFrequency : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class TimelikeFrequency : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class DegenerateBackground : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

// -- numerical family ---------------------------------------------------

class UnstableEvolution : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class IllConditioned : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class AdjointMismatch : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class SingularMetric : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class TurningRay : public NumericalError {
public:
  using NumericalError::NumericalError;
};

}  // namespace lrt
