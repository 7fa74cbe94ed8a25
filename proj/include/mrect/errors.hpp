#pragma once

#include <stdexcept>
#include <string>

namespace mrect {

// Malformed or out-of-range input. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request that exceeds a documented size bound. Maps to CLI exit code 3.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Which composition rule a rejected vector or matrix violated first.
enum class Violation {
  too_short,      // fewer than 2 entries (or rows, or columns)
  ragged,         // matrix rows of unequal length
  negative_entry,
  zero_internal,  // zero internal entry / internal row or column sum
  zero_total,     // entry sum is 0, so n >= 1 fails
  wrong_sum,      // differs from a caller-supplied n
};

const char* to_string(Violation v);

class CompositionError : public InputError {
 public:
  CompositionError(Violation rule, const std::string& what)
      : InputError(what), rule_(rule) {}

  Violation rule() const noexcept { return rule_; }

 private:
  Violation rule_;
};

}  // namespace mrect
