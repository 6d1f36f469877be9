#pragma once

#include <cstddef>
#include <vector>

#include "bperm/signed_element.hpp"

namespace bperm {

/// A set of signed elements with pairwise distinct underlying values
/// (it contains at most one of {i, ibar} for each i). Iteration order is
/// canonical: increasing underlying value.
class SignedSet {
 public:
  SignedSet() = default;

  /// Sorts by underlying value. Throws precondition_error on a duplicate
  /// underlying value.
  explicit SignedSet(std::vector<SignedElement> elements);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  /// Elements in increasing order of underlying value.
  const std::vector<SignedElement>& elements() const { return elements_; }

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(SignedElement e) const;

  /// The element with the given underlying value, or nullptr.
  const SignedElement* find_value(int value) const;

  friend bool operator==(const SignedSet&, const SignedSet&) = default;

 private:
  std::vector<SignedElement> elements_;
};

/// X - 1: subtract 1 from every element, bars preserved. Throws
/// value_underflow if any element has value 0.
SignedSet shift_down(const SignedSet& x);

/// X + 1: add 1 to every element, bars preserved. Inverse of shift_down.
SignedSet shift_up(const SignedSet& x);

}  // namespace bperm
