#pragma once

#include <cstddef>
#include <vector>

#include "bperm/signed_element.hpp"
#include "bperm/signed_set.hpp"

namespace bperm {

/// A sequence of signed elements whose underlying values are exactly the
/// contiguous ground set {ground_min, ..., ground_min + n - 1}.
///
/// ground_min = 1 is a signed permutation on [n]; ground_min = 0 is a
/// signed permutation on {0, ..., n-1} (the representation alphabet).
/// The flag is carried explicitly so the two families stay distinct even
/// at n = 0.
class SignedPermutation {
 public:
  /// The empty permutation on [0].
  SignedPermutation() = default;

  /// Throws precondition_error unless ground_min is 0 or 1 and the entry
  /// values are pairwise distinct and cover the ground set.
  SignedPermutation(std::vector<SignedElement> entries, int ground_min);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int ground_min() const { return ground_min_; }

  /// Entry at 0-based index; the paper's pi_i is (*this)[i - 1].
  const SignedElement& operator[](std::size_t i) const { return entries_[i]; }

  const std::vector<SignedElement>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// 0-based position of the entry with the given underlying value.
  /// Throws precondition_error if the value is outside the ground set.
  std::size_t position_of_value(int value) const;

  /// The underlying set of entries.
  SignedSet entry_set() const { return SignedSet(entries_); }

  bool all_unbarred() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<SignedElement> entries_;
  int ground_min_ = 1;
};

}  // namespace bperm
