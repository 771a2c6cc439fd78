#pragma once

#include <stdexcept>
#include <string>

namespace medianforge {

// Input that cannot be interpreted: bad ids, non-total tables, unparsable
// words, files that fail validation on load.
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested computation is larger than the module's size guard allows.
class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Arguments are well formed but outside the operation's domain
// (empty subsets where a nonempty one is required, v = 1 for a
// configuration, and so on).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace medianforge
