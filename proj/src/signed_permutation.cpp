#include "bperm/signed_permutation.hpp"

#include <algorithm>
#include <string>

namespace bperm {

SignedPermutation::SignedPermutation(std::vector<SignedElement> entries, int ground_min)
    : entries_(std::move(entries)), ground_min_(ground_min) {
  if (ground_min_ != 0 && ground_min_ != 1)
    throw precondition_error("signed permutation: ground_min must be 0 or 1");

  const int n = static_cast<int>(entries_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const SignedElement& e : entries_) {
    const int offset = e.value - ground_min_;
    if (offset < 0 || offset >= n)
      throw precondition_error("signed permutation: value " + std::to_string(e.value) +
                               " outside ground set {" + std::to_string(ground_min_) + ".." +
                               std::to_string(ground_min_ + n - 1) + "}");
    if (seen[static_cast<std::size_t>(offset)])
      throw precondition_error("signed permutation: duplicate underlying value " +
                               std::to_string(e.value));
    seen[static_cast<std::size_t>(offset)] = true;
  }
}

std::size_t SignedPermutation::position_of_value(int value) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [value](SignedElement e) { return e.value == value; });
  if (it == entries_.end())
    throw precondition_error("signed permutation: no entry with value " + std::to_string(value));
  return static_cast<std::size_t>(it - entries_.begin());
}

bool SignedPermutation::all_unbarred() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](SignedElement e) { return e.barred; });
}

}  // namespace bperm
