#include "bperm/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bperm/errors.hpp"

namespace bperm {

SignedPermutationCursor::SignedPermutationCursor(int n, int ground_min)
    : n_(n), ground_min_(ground_min), values_(static_cast<std::size_t>(n)) {
  if (n < 0) throw precondition_error("cursor: n must be >= 0");
  if (n > 63) throw precondition_error("cursor: n must be <= 63");
  if (ground_min != 0 && ground_min != 1)
    throw precondition_error("cursor: ground_min must be 0 or 1");
  std::iota(values_.begin(), values_.end(), ground_min);
}

SignedPermutation SignedPermutationCursor::current() const {
  std::vector<SignedElement> entries;
  entries.reserve(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    const bool barred = (mask_ >> (n_ - 1 - i)) & 1u;
    entries.push_back({values_[static_cast<std::size_t>(i)], barred});
  }
  return SignedPermutation(std::move(entries), ground_min_);
}

void SignedPermutationCursor::advance() {
  if (done_) return;
  if (n_ > 0 && ++mask_ < (std::uint64_t{1} << n_)) return;
  mask_ = 0;
  if (!std::next_permutation(values_.begin(), values_.end())) done_ = true;
}

bool is_derangement_b(const SignedPermutation& p) {
  if (p.ground_min() != 1)
    throw precondition_error("is_derangement_b: permutation must be on [n] (ground_min 1)");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].value == static_cast<int>(i) + 1 && !p[i].barred) return false;
  }
  return true;
}

bool is_relative_derangement_b(const SignedPermutation& p) {
  if (p.ground_min() != 1)
    throw precondition_error(
        "is_relative_derangement_b: permutation must be on [n] (ground_min 1)");
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    if (p[j + 1] == succ(p[j])) return false;
  }
  return true;
}

Count brute_count(int n, const std::function<bool(const SignedPermutation&)>& predicate,
                  BruteOptions opts, int ground_min) {
  if (n > opts.max_n && !opts.force)
    throw size_guard_error("brute_count: n = " + std::to_string(n) + " exceeds the guard (" +
                           std::to_string(opts.max_n) + "); pass force to override");
  Count total = 0;
  for (SignedPermutationCursor cursor(n, ground_min); !cursor.done(); cursor.advance()) {
    if (predicate(cursor.current())) ++total;
  }
  return total;
}

Count classical_brute_count(int n, bool relative, BruteOptions opts) {
  if (n < 0) throw precondition_error("classical_brute_count: n must be >= 0");
  if (n > opts.max_n && !opts.force)
    throw size_guard_error("classical_brute_count: n = " + std::to_string(n) +
                           " exceeds the guard (" + std::to_string(opts.max_n) +
                           "); pass force to override");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  Count total = 0;
  do {
    bool pass = true;
    if (relative) {
      for (int j = 0; j + 1 < n && pass; ++j)
        if (perm[static_cast<std::size_t>(j + 1)] == perm[static_cast<std::size_t>(j)] + 1)
          pass = false;
    } else {
      for (int i = 0; i < n && pass; ++i)
        if (perm[static_cast<std::size_t>(i)] == i + 1) pass = false;
    }
    if (pass) ++total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace bperm
