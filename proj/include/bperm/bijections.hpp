#pragma once

#include "bperm/signed_permutation.hpp"
#include "bperm/skew_derangement.hpp"

namespace bperm {

/// The signed permutation pi on {0..n-1} with pi_i = f(sigma_i), where
/// sigma_1 < ... < sigma_n are the domain elements of a skew derangement
/// f by increasing underlying value. Uniquely encodes f; validity (the
/// fixed-point-freeness characterization) is checked on construction.
class Representation {
 public:
  /// Requires ground_min = 0 (throws precondition_error) and the validity
  /// characterization (throws invalid_representation).
  explicit Representation(SignedPermutation perm);

  const SignedPermutation& perm() const { return perm_; }
  std::size_t size() const { return perm_.size(); }

  /// True when the last entry is unbarred 0, i.e. the class that encodes
  /// derangements on [n-1]. A barred 0 in last position does not count.
  bool has_trailing_zero() const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  SignedPermutation perm_;
};

enum class DerangementTag { small, large };

/// A type-B derangement tagged with which side of the disjoint union
/// D_n^B + D_{n-1}^B it belongs to: on [n] when large, on [n-1] when small.
struct TaggedDerangement {
  DerangementTag tag;
  SignedPermutation perm;

  TaggedDerangement(DerangementTag tag, SignedPermutation perm);

  friend bool operator==(const TaggedDerangement&, const TaggedDerangement&) = default;
};

/// Validity characterization of representations: wherever the entry at
/// position i has underlying value i (a signed fixed point), its bar flag
/// must differ from the bar flag of the entry holding value i-1.
/// Requires ground_min = 0.
bool is_valid_representation(const SignedPermutation& p);

/// Relative derangement on [n] -> skew derangement on [n]. Segments end at
/// the maximum of the remaining suffix; within a segment each element maps
/// to the predecessor of its right neighbour, and the segment maximum maps
/// to the predecessor of the segment head. Throws precondition_error when
/// the input is not a relative derangement.
SkewDerangement rel_to_skew(const SignedPermutation& p);

/// Inverse of rel_to_skew: repeatedly take the maximum remaining domain
/// element u, emit succ(f(u)), then chase succ(f(previous)) until u itself
/// is emitted.
SignedPermutation skew_to_rel(const SkewDerangement& f);

/// pi_i = f(sigma_i) over the sigma-ordering of the domain.
Representation representation_of(const SkewDerangement& f);

/// Rebuilds f from its representation: X is the entry set shifted up by
/// one, and sigma_i (the element of X with value i) maps to pi_i.
SkewDerangement from_representation(const Representation& r);

/// Trailing-zero representation on {0..n-1} -> derangement on [n-1]:
/// drop the trailing 0 and bar every signed fixed point.
SignedPermutation rep_small_to_derangement(const Representation& r);

/// Inverse: append an unbarred 0, then re-sign each signed fixed point
/// (in increasing position) opposite to the entry holding value i-1.
Representation derangement_to_rep_small(const SignedPermutation& t);

/// Representation whose last entry is not unbarred 0 -> derangement on
/// [n]: bar every signed fixed point, then replace 0 by n (bar preserved).
SignedPermutation rep_large_to_derangement(const Representation& r);

/// Inverse: replace n by 0 (bar preserved), then re-sign each signed
/// fixed point as in derangement_to_rep_small.
Representation derangement_to_rep_large(const SignedPermutation& t);

/// The composed bijection behind Q_n^B = D_n^B + D_{n-1}^B: encode the
/// relative derangement as a representation via the skew derangement, then
/// take the small branch on a trailing zero and the large branch otherwise.
/// Requires n >= 1 and a relative derangement input.
TaggedDerangement theorem13_forward(const SignedPermutation& p);

/// Pointwise inverse of theorem13_forward.
SignedPermutation theorem13_backward(const TaggedDerangement& d);

}  // namespace bperm
