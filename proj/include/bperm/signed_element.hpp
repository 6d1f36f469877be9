#pragma once

#include <compare>

#include "bperm/errors.hpp"

namespace bperm {

/// One element of a signed permutation: a nonnegative underlying value
/// that may carry a bar. The barred element i and the unbarred element i
/// are distinct; comparison uses the type-B order
///
///     0bar < 1bar < 2bar < ... < 0 < 1 < 2 < ...
///
/// i.e. every barred element is below every unbarred one and values are
/// ordered within each class.
struct SignedElement {
  int value = 0;
  bool barred = false;

  friend constexpr bool operator==(SignedElement, SignedElement) = default;

  friend constexpr std::strong_ordering operator<=>(SignedElement a, SignedElement b) {
    if (a.barred != b.barred)
      return a.barred ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.value <=> b.value;
  }
};

/// Three-way comparison in the type-B order. Same as operator<=>, kept as
/// a named entry point.
constexpr std::strong_ordering compare(SignedElement a, SignedElement b) { return a <=> b; }

/// x + 1, preserving the bar.
constexpr SignedElement succ(SignedElement x) { return {x.value + 1, x.barred}; }

/// x - 1, preserving the bar. Throws value_underflow when x has value 0.
inline SignedElement pred(SignedElement x) {
  if (x.value <= 0)
    throw value_underflow("pred: cannot subtract 1 from an element with value 0");
  return {x.value - 1, x.barred};
}

constexpr SignedElement bar(int value) { return {value, true}; }
constexpr SignedElement unb(int value) { return {value, false}; }

}  // namespace bperm
