#pragma once

#include <stdexcept>
#include <string>

namespace procphi {

/// Arguments that do not fit together: mismatched objects, invalid subsets.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input data violating a model invariant (causality, conditional independence).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation not available for the backend or mode in use.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace procphi
