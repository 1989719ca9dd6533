#pragma once

#include <stdexcept>
#include <string>

namespace fsc {

// Bad user input: malformed expressions, mismatched fields, violated
// preconditions. CLI maps this to exit code 3.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Internal invariant violation (e.g. a division that the theory guarantees
// must succeed). Always a bug, never a user problem.
class consistency_error : public std::logic_error {
 public:
  explicit consistency_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace fsc
