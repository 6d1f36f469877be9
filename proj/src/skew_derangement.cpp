#include "bperm/skew_derangement.hpp"

#include <algorithm>
#include <string>

namespace bperm {

SkewDerangement::SkewDerangement(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end(),
            [](const Pair& a, const Pair& b) { return a.first.value < b.first.value; });

  // x-components must be a signed set on [n]: underlying values exactly 1..n.
  const int n = static_cast<int>(pairs_.size());
  std::vector<SignedElement> xs, images;
  xs.reserve(pairs_.size());
  images.reserve(pairs_.size());
  for (int i = 0; i < n; ++i) {
    if (pairs_[static_cast<std::size_t>(i)].first.value != i + 1)
      throw precondition_error(
          "skew derangement: domain values must be exactly 1..n");
    xs.push_back(pairs_[static_cast<std::size_t>(i)].first);
    images.push_back(pairs_[static_cast<std::size_t>(i)].second);
  }

  // Images must form exactly X - 1 (bar-preserving shift), as a set.
  SignedSet image_set{std::move(images)};
  if (image_set != shift_down(SignedSet{std::move(xs)}))
    throw precondition_error("skew derangement: image set is not X - 1");

  if (!is_fixed_point_free(pairs_))
    throw precondition_error("skew derangement: f(x) = x for some x (not fixed-point-free)");
}

SignedElement SkewDerangement::apply(SignedElement x) const {
  auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), x.value,
      [](const Pair& p, int v) { return p.first.value < v; });
  if (it == pairs_.end() || it->first != x)
    throw precondition_error("skew derangement: element not in domain");
  return it->second;
}

SignedSet SkewDerangement::domain() const {
  std::vector<SignedElement> xs;
  xs.reserve(pairs_.size());
  for (const Pair& p : pairs_) xs.push_back(p.first);
  return SignedSet(std::move(xs));
}

bool SkewDerangement::all_unbarred() const {
  return std::all_of(pairs_.begin(), pairs_.end(), [](const Pair& p) {
    return !p.first.barred && !p.second.barred;
  });
}

bool is_fixed_point_free(std::span<const SkewDerangement::Pair> pairs) {
  return std::none_of(pairs.begin(), pairs.end(),
                      [](const SkewDerangement::Pair& p) { return p.second == p.first; });
}

}  // namespace bperm
