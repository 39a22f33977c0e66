#pragma once

#include <stdexcept>
#include <string>

namespace critgraph {

// Precondition violation on an in-process call (bad vertex, missing edge, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input file (DIMACS, trace, sidecar, import list).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A generator request whose (n, ell, m) cannot be realized, or an alpha
// budget that cannot absorb the requested step.
class InfeasibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An exact answer was required but the solver budget ran out first.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace critgraph
