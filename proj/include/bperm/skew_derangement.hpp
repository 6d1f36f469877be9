#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bperm/signed_element.hpp"
#include "bperm/signed_set.hpp"

namespace bperm {

/// A signed skew derangement on [n]: a fixed-point-free bijection f from
/// a signed set X with underlying values {1..n} onto X - 1.
///
/// Stored as (x, f(x)) pairs ordered by increasing underlying value of x,
/// which is also the sigma-ordering used by the representation encoding.
class SkewDerangement {
 public:
  using Pair = std::pair<SignedElement, SignedElement>;

  /// The empty map (n = 0).
  SkewDerangement() = default;

  /// Validates all three structural invariants: the x-components form a
  /// signed set on [n], the images form exactly X - 1, and no pair is a
  /// fixed point. Throws precondition_error otherwise.
  explicit SkewDerangement(std::vector<Pair> pairs);

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  /// Pairs ordered by increasing underlying value of x.
  const std::vector<Pair>& pairs() const { return pairs_; }

  /// f(x). Throws precondition_error if x is not in the domain.
  SignedElement apply(SignedElement x) const;

  SignedSet domain() const;

  bool all_unbarred() const;

  friend bool operator==(const SkewDerangement&, const SkewDerangement&) = default;

 private:
  std::vector<Pair> pairs_;
};

/// True iff no candidate pair maps an element to itself (value and bar
/// both equal). Usable on raw pairs before construction.
bool is_fixed_point_free(std::span<const SkewDerangement::Pair> pairs);

}  // namespace bperm
