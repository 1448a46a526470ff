#ifndef RGMINOR_ERRORS_HPP
#define RGMINOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rgminor {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Parameters outside the regime where the construction is defined
/// (np <= e for the dense regime, c <= 1 for the sparse one).
class RegimeError : public DomainError {
public:
  using DomainError::DomainError;
};

/// A path or ladder is too short for the requested layout. Callers are
/// expected to re-plan.
class CapacityError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Input above a hard size cap (exact search).
class SizeError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Malformed graph, certificate, CSV or config text.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace rgminor

#endif
