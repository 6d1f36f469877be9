#pragma once

#include <cstdint>

namespace bperm {

/// The built-in stream filters with raw counting kernels.
enum class StreamFilter {
  All,                    // no filter: counts 2^n * n!
  DerangementB,           // Definition 1.1 (ground_min 1)
  RelativeDerangementB,   // Definition 1.2 (ground_min 1)
  ValidRepresentation,    // Lemma 2.3 validity (ground_min 0)
};

/// Counts stream items matching the filter, single-threaded, operating on
/// raw value/mask state instead of materialized SignedPermutation values.
/// Same enumeration order and semantics as the cursor in enumeration.hpp,
/// which is the reference it is tested against.
std::uint64_t serial_filtered_count(int n, StreamFilter filter, int ground_min);

/// Same count computed with OpenMP, partitioned by the first underlying
/// element; partial sums are combined by reduction.
std::uint64_t parallel_filtered_count(int n, StreamFilter filter, int ground_min);

}  // namespace bperm
