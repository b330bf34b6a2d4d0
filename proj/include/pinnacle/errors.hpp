#pragma once

#include <stdexcept>
#include <string>

namespace pinnacle {

/// A precondition on an argument's value was violated (inadmissible set,
/// malformed word, sigma that is not a rearrangement, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive sweep was refused because it exceeds its size guard.
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A closed form was requested outside the cases it covers.
class UnsupportedSizeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two algorithms that must agree produced different values.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input could not be parsed (bad token, empty field, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pinnacle
