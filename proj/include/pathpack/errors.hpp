#pragma once

#include <stdexcept>
#include <string>

namespace pathpack {

// Malformed input: dangling endpoints, duplicate ids, self-loops, bad blocks.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A desk-scale enumeration cap was hit. Never silently truncated.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation contradicted a statement that is supposed to always hold
// (e.g. a common solution that does not exist). Should never fire.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pathpack
