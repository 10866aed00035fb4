#pragma once

#include <stdexcept>
#include <string>

namespace blockmean {

// Malformed or out-of-range input (bad edge list, self-loop, bad parameters).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates an operation's precondition
// (disconnected graph, non-block graph, undefined mean).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace blockmean
