#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

// Bad parameters or malformed input. The CLI maps this to exit code 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A construction produced something the checkers reject, or a repair search
// ran dry. The CLI maps this to exit code 2.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search hit its node/time/size budget before reaching a verdict.
// The CLI maps this to exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cayley
