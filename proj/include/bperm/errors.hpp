#pragma once

#include <stdexcept>
#include <string>

namespace bperm {

/// Base class for all errors raised by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed token, duplicate underlying value or non-contiguous ground
/// set while reading the compact text / JSON notation.
class parse_error : public error {
 public:
  using error::error;
};

/// pred() or shift_down() applied to an element with underlying value 0.
class value_underflow : public error {
 public:
  using error::error;
};

/// A violated operation precondition (e.g. applying the skew-derangement
/// construction to something that is not a relative derangement).
class precondition_error : public error {
 public:
  using error::error;
};

/// A signed permutation on {0..n-1} that fails the representation
/// validity characterization: decoding it would give a fixed point.
class invalid_representation : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

/// Brute-force enumeration requested beyond the size guard without
/// the explicit override.
class size_guard_error : public error {
 public:
  using error::error;
};

}  // namespace bperm
