#include "bperm/bijections.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bperm/enumeration.hpp"
#include "bperm/errors.hpp"
#include "bperm/notation.hpp"

namespace bperm {

Representation::Representation(SignedPermutation perm) : perm_(std::move(perm)) {
  if (perm_.ground_min() != 0)
    throw precondition_error("representation: ground set must be {0..n-1}");
  if (!is_valid_representation(perm_))
    throw invalid_representation("not a valid representation: '" + format(perm_) +
                                 "' decodes to a map with a fixed point");
}

bool Representation::has_trailing_zero() const {
  return !perm_.empty() && perm_[perm_.size() - 1] == unb(0);
}

TaggedDerangement::TaggedDerangement(DerangementTag tag, SignedPermutation perm)
    : tag(tag), perm(std::move(perm)) {
  if (!is_derangement_b(this->perm))
    throw precondition_error("tagged derangement: permutation has an unbarred fixed point");
}

bool is_valid_representation(const SignedPermutation& p) {
  if (p.ground_min() != 0)
    throw precondition_error("is_valid_representation: ground set must be {0..n-1}");
  const int n = static_cast<int>(p.size());
  std::vector<bool> bar_of_value(static_cast<std::size_t>(n));
  for (const SignedElement& e : p) bar_of_value[static_cast<std::size_t>(e.value)] = e.barred;
  for (int i = 0; i < n; ++i) {
    const SignedElement& entry = p[static_cast<std::size_t>(i)];
    if (entry.value == i + 1 && entry.barred == bar_of_value[static_cast<std::size_t>(i)])
      return false;
  }
  return true;
}

SkewDerangement rel_to_skew(const SignedPermutation& p) {
  if (!is_relative_derangement_b(p))
    throw precondition_error("rel_to_skew: input '" + format(p) +
                             "' is not a relative derangement of type B");
  const std::size_t n = p.size();
  std::vector<SkewDerangement::Pair> pairs;
  pairs.reserve(n);
  std::size_t start = 0;
  while (start < n) {
    // Segment runs from start to the maximum of the remaining suffix.
    std::size_t k = start;
    for (std::size_t j = start + 1; j < n; ++j)
      if (p[j] > p[k]) k = j;
    for (std::size_t j = start; j < k; ++j) pairs.push_back({p[j], pred(p[j + 1])});
    pairs.push_back({p[k], pred(p[start])});
    start = k + 1;
  }
  return SkewDerangement(std::move(pairs));
}

SignedPermutation skew_to_rel(const SkewDerangement& f) {
  const std::size_t n = f.size();
  // Remaining domain, keyed for max selection in the type-B order.
  std::map<SignedElement, SignedElement> remaining;
  for (const auto& [x, fx] : f.pairs()) remaining.emplace(x, fx);

  std::vector<SignedElement> out;
  out.reserve(n);
  while (!remaining.empty()) {
    const SignedElement u = remaining.rbegin()->first;
    SignedElement cur = succ(remaining.rbegin()->second);  // succ(f(u))
    while (true) {
      auto it = remaining.find(cur);
      if (it == remaining.end())
        throw precondition_error("skew_to_rel: chain left the remaining domain (corrupt map)");
      const SignedElement next = succ(it->second);
      remaining.erase(it);
      out.push_back(cur);
      if (cur == u) break;
      cur = next;
    }
  }
  SignedPermutation result(std::move(out), 1);
  if (!is_relative_derangement_b(result))
    throw precondition_error("skew_to_rel: output is not a relative derangement (corrupt map)");
  return result;
}

Representation representation_of(const SkewDerangement& f) {
  std::vector<SignedElement> entries;
  entries.reserve(f.size());
  for (const auto& [x, fx] : f.pairs()) entries.push_back(fx);  // pairs are sigma-ordered
  return Representation(SignedPermutation(std::move(entries), 0));
}

SkewDerangement from_representation(const Representation& r) {
  const std::size_t n = r.size();
  // X = entry set + 1; sigma_i is the element of X with underlying value i.
  std::vector<SignedElement> sigma(n);
  for (const SignedElement& e : r.perm()) sigma[static_cast<std::size_t>(e.value)] = succ(e);
  std::vector<SkewDerangement::Pair> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pairs.push_back({sigma[i], r.perm()[i]});
  return SkewDerangement(std::move(pairs));
}

namespace {

// Re-signs the signed fixed points of `entries` in increasing position so
// that each one's bar is the opposite of the bar of the entry holding
// value i-1. The bar at value i-1 is already final when position i is
// visited: either it is not a signed fixed point (bar fixed by input) or
// it sits at position i-1, which was just processed.
void resign_signed_fixed_points(std::vector<SignedElement>& entries) {
  const int n = static_cast<int>(entries.size());
  std::vector<int> position_of_value(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    position_of_value[static_cast<std::size_t>(entries[static_cast<std::size_t>(i)].value)] = i;
  for (int i = 0; i < n; ++i) {
    SignedElement& entry = entries[static_cast<std::size_t>(i)];
    if (entry.value == i + 1) {
      const int below = position_of_value[static_cast<std::size_t>(i)];
      entry.barred = !entries[static_cast<std::size_t>(below)].barred;
    }
  }
}

}  // namespace

SignedPermutation rep_small_to_derangement(const Representation& r) {
  if (!r.has_trailing_zero())
    throw precondition_error("rep_small_to_derangement: last entry must be unbarred 0");
  std::vector<SignedElement> entries(r.perm().begin(), r.perm().end() - 1);
  const int n = static_cast<int>(entries.size());
  for (int i = 0; i < n; ++i) {
    SignedElement& entry = entries[static_cast<std::size_t>(i)];
    if (entry.value == i + 1) entry.barred = true;
  }
  SignedPermutation result(std::move(entries), 1);
  if (!is_derangement_b(result))
    throw precondition_error("rep_small_to_derangement: output is not a derangement");
  return result;
}

Representation derangement_to_rep_small(const SignedPermutation& t) {
  if (!is_derangement_b(t))
    throw precondition_error("derangement_to_rep_small: input '" + format(t) +
                             "' is not a derangement of type B");
  std::vector<SignedElement> entries(t.begin(), t.end());
  entries.push_back(unb(0));
  resign_signed_fixed_points(entries);
  return Representation(SignedPermutation(std::move(entries), 0));
}

SignedPermutation rep_large_to_derangement(const Representation& r) {
  if (r.has_trailing_zero())
    throw precondition_error("rep_large_to_derangement: last entry must not be unbarred 0");
  const int n = static_cast<int>(r.size());
  std::vector<SignedElement> entries(r.perm().begin(), r.perm().end());
  for (int i = 0; i < n; ++i) {
    SignedElement& entry = entries[static_cast<std::size_t>(i)];
    if (entry.value == i + 1) entry.barred = true;
  }
  for (SignedElement& entry : entries)
    if (entry.value == 0) entry.value = n;  // 0 -> n, 0bar -> nbar
  SignedPermutation result(std::move(entries), 1);
  if (!is_derangement_b(result))
    throw precondition_error("rep_large_to_derangement: output is not a derangement");
  return result;
}

Representation derangement_to_rep_large(const SignedPermutation& t) {
  if (!is_derangement_b(t))
    throw precondition_error("derangement_to_rep_large: input '" + format(t) +
                             "' is not a derangement of type B");
  const int n = static_cast<int>(t.size());
  std::vector<SignedElement> entries(t.begin(), t.end());
  for (SignedElement& entry : entries)
    if (entry.value == n) entry.value = 0;  // n -> 0, nbar -> 0bar
  resign_signed_fixed_points(entries);
  return Representation(SignedPermutation(std::move(entries), 0));
}

TaggedDerangement theorem13_forward(const SignedPermutation& p) {
  if (p.empty())
    throw precondition_error("theorem13_forward: n must be >= 1");
  const Representation r = representation_of(rel_to_skew(p));
  if (r.has_trailing_zero())
    return {DerangementTag::small, rep_small_to_derangement(r)};
  return {DerangementTag::large, rep_large_to_derangement(r)};
}

SignedPermutation theorem13_backward(const TaggedDerangement& d) {
  const Representation r = d.tag == DerangementTag::small ? derangement_to_rep_small(d.perm)
                                                          : derangement_to_rep_large(d.perm);
  return skew_to_rel(from_representation(r));
}

}  // namespace bperm
