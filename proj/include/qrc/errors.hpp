// errors.hpp - exception types shared by all qrc modules

#pragma once

#include <stdexcept>
#include <string>

namespace qrc {

/// Invalid argument: out-of-range site, bad probability, shape mismatch.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Requested system exceeds the dense-matrix qubit cap.
class CapacityError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Floating-point drift, failed decomposition or a residue above tolerance.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A quantity needed for normalization vanished (zero trace, flat sequence, zero variance).
class DegenerateError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Malformed experiment configuration.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace qrc
