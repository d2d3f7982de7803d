#pragma once

#include <stdexcept>
#include <string>

namespace dirichlet {

// Bad input: malformed text, out-of-range parameters, rejected specs.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iterative routine ran out of iterations.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A result broke one of its documented invariants.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dirichlet
