#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bperm/counting.hpp"
#include "bperm/signed_permutation.hpp"
#include "bperm/skew_derangement.hpp"

namespace bperm {

/// Deterministic stream over all 2^n * n! signed permutations on the
/// ground set {ground_min .. ground_min + n - 1}.
///
/// Order: underlying permutations in lexicographic order; within each,
/// bar masks in binary counting order with position 1 as the most
/// significant bit (0 = unbarred). The order is resumable and trivially
/// partitionable by first element.
class SignedPermutationCursor {
 public:
  explicit SignedPermutationCursor(int n, int ground_min = 1);

  bool done() const { return done_; }

  /// Materializes the current item. Valid while !done().
  SignedPermutation current() const;

  void advance();

  /// The underlying values of the current item (bars live in mask()).
  const std::vector<int>& values() const { return values_; }

  /// Bit n-1-i is the bar flag of position i+1.
  std::uint64_t mask() const { return mask_; }

 private:
  int n_;
  int ground_min_;
  std::vector<int> values_;
  std::uint64_t mask_ = 0;
  bool done_ = false;
};

/// Definition 1.1: no position i holds the unbarred element i. A barred
/// element at its own position is allowed. Requires ground_min = 1.
bool is_derangement_b(const SignedPermutation& p);

/// Definition 1.2: no element is immediately followed by its bar-matching
/// successor (i by i+1, or ibar by (i+1)bar). Mixed-bar successions are
/// allowed. Requires ground_min = 1.
bool is_relative_derangement_b(const SignedPermutation& p);

struct BruteOptions {
  bool force = false;   // override the size guard
  int max_n = 9;        // 2^9 * 9! is ~186M items; beyond that, opt in explicitly
};

/// Counts stream items satisfying the predicate, generate-and-test over
/// the full cursor stream. This is the oracle layer: obviously correct,
/// speed secondary (see parallel_count.hpp for the fast kernels).
/// Throws size_guard_error when n > opts.max_n and opts.force is unset.
Count brute_count(int n, const std::function<bool(const SignedPermutation&)>& predicate,
                  BruteOptions opts = {}, int ground_min = 1);

/// Brute-force counts over the n! unsigned permutations of [n]:
/// derangements (pi_i != i) when relative is false, relative derangements
/// (pi_{i+1} != pi_i + 1) when true. Same size guard as brute_count.
Count classical_brute_count(int n, bool relative, BruteOptions opts = {});

}  // namespace bperm
