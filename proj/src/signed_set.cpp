#include "bperm/signed_set.hpp"

#include <algorithm>

namespace bperm {

SignedSet::SignedSet(std::vector<SignedElement> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(),
            [](SignedElement a, SignedElement b) { return a.value < b.value; });
  for (std::size_t i = 0; i + 1 < elements_.size(); ++i) {
    if (elements_[i].value == elements_[i + 1].value)
      throw precondition_error("signed set: duplicate underlying value " +
                               std::to_string(elements_[i].value));
  }
  for (const SignedElement& e : elements_) {
    if (e.value < 0) throw precondition_error("signed set: negative underlying value");
  }
}

bool SignedSet::contains(SignedElement e) const {
  const SignedElement* found = find_value(e.value);
  return found != nullptr && *found == e;
}

const SignedElement* SignedSet::find_value(int value) const {
  auto it = std::lower_bound(
      elements_.begin(), elements_.end(), value,
      [](SignedElement e, int v) { return e.value < v; });
  if (it == elements_.end() || it->value != value) return nullptr;
  return &*it;
}

SignedSet shift_down(const SignedSet& x) {
  std::vector<SignedElement> shifted;
  shifted.reserve(x.size());
  for (SignedElement e : x) shifted.push_back(pred(e));
  return SignedSet(std::move(shifted));
}

SignedSet shift_up(const SignedSet& x) {
  std::vector<SignedElement> shifted;
  shifted.reserve(x.size());
  for (SignedElement e : x) shifted.push_back(succ(e));
  return SignedSet(std::move(shifted));
}

}  // namespace bperm
