#pragma once

// Test-only brute-force oracle. Deliberately independent of the library's
// enumeration, counting and bijection code: its own element encoding, its
// own stream, its own predicate logic taken straight from the definitions.
// Expected values frozen in the tests were produced by this layer.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "bperm/signed_permutation.hpp"

namespace testoracle {

using Elem = std::pair<int, bool>;  // (underlying value, barred)
using Perm = std::vector<Elem>;

// Every signed permutation on {ground_min .. ground_min+n-1}, in the
// documented stream order: lexicographic underlying permutations, bar
// masks counting up with position 1 as the most significant bit.
inline std::vector<Perm> all_signed_perms(int n, int ground_min = 1) {
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), ground_min);
  std::vector<Perm> out;
  do {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Perm p(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        p[static_cast<std::size_t>(i)] = {values[static_cast<std::size_t>(i)],
                                          ((mask >> (n - 1 - i)) & 1u) != 0};
      out.push_back(std::move(p));
    }
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

inline bool derangement_b(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == Elem{static_cast<int>(i) + 1, false}) return false;
  return true;
}

inline bool relative_derangement_b(const Perm& p) {
  for (std::size_t j = 0; j + 1 < p.size(); ++j)
    if (p[j + 1].first == p[j].first + 1 && p[j + 1].second == p[j].second) return false;
  return true;
}

inline bool valid_representation(const Perm& p) {
  std::vector<bool> bar_of_value(p.size());
  for (const Elem& e : p) bar_of_value[static_cast<std::size_t>(e.first)] = e.second;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i].first == static_cast<int>(i) + 1 &&
        p[i].second == bar_of_value[static_cast<std::size_t>(i)])
      return false;
  return true;
}

inline bool all_unbarred(const Perm& p) {
  return std::none_of(p.begin(), p.end(), [](const Elem& e) { return e.second; });
}

// Boundary conversion into the library's value type.
inline bperm::SignedPermutation to_lib(const Perm& p, int ground_min) {
  std::vector<bperm::SignedElement> entries;
  entries.reserve(p.size());
  for (const Elem& e : p) entries.push_back({e.first, e.second});
  return bperm::SignedPermutation(std::move(entries), ground_min);
}

}  // namespace testoracle
