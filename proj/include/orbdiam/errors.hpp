#pragma once

#include <stdexcept>
#include <string>

namespace orbdiam {

// Malformed input: bad coordinates, non-prime modulus, dimension mismatch,
// violated construction hypotheses. Maps to CLI exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured enumeration / size cap was hit. Maps to CLI exit code 3.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterated sumsets stopped growing before covering V: the connection set
// spans a proper subspace, so the action is reducible.
class Stagnation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check disagreed (e.g. two routes to the summand count).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace orbdiam
