#pragma once

#include <stdexcept>
#include <string>

namespace walklab {

/// Argument outside the mathematical domain of an operation (|x| > 1, p outside [0,1], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameters that are in range but make a formula singular, e.g. p = 1 in the
/// reflection weight (p/(1-p))^a.
class DegenerateParameterError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A lattice operator was asked for a point where its inputs are undefined
/// (the past difference at n = 0).
class UndefinedPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Invalid simulation or command configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace walklab
