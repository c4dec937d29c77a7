#pragma once

#include <stdexcept>
#include <string>

namespace antifactor {

// Malformed input: bad file syntax, duplicate edges, out-of-range indices,
// empty degree sets.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured cap (enumeration, subset, node budget, retry count) was hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The operation was called on an input outside its domain (e.g. a
// non-regular graph handed to the regular-graph pipeline).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal cross-check failed. Raised when a structural identity that
// must hold on every instance does not.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace antifactor
