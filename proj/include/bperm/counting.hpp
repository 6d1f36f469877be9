#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bperm {

/// Exact nonnegative integer of unbounded magnitude. No floating point is
/// used anywhere in the counting layer.
using Count = boost::multiprecision::cpp_int;

/// D_n^B, the number of derangements of type B on [n], by the
/// inclusion-exclusion closed form in its integer-only arrangement
///
///     sum_{k=0}^{n} (-1)^k C(n,k) (n-k)! 2^(n-k)
///
/// with the convention D_0^B = 1. Requires n >= 0.
Count count_derangements_b(int n);

/// Q_n^B, the number of relative derangements of type B on [n]:
///
///     n! 2^n + sum_{k=1}^{n-1} (-1)^k C(n-1,k) (n-k)! 2^(n-k)
///
/// Requires n >= 1.
Count count_relative_derangements_b(int n);

/// Q_n^B via the identity Q_n^B = D_n^B + D_{n-1}^B. Equal to
/// count_relative_derangements_b(n) for every n >= 1.
Count count_relative_via_identity(int n);

/// Classical derangement number D_n = sum_{k=0}^{n} (-1)^k C(n,k) (n-k)!,
/// D_0 = 1. Requires n >= 0.
Count count_derangements_classical(int n);

/// Classical relative derangement number Q_n = D_n + D_{n-1}.
/// Requires n >= 1.
Count count_relative_classical(int n);

}  // namespace bperm
