#include "bperm/parallel_count.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "bperm/errors.hpp"

namespace bperm {

namespace {

// Bar mask convention matches the cursor: bit n-1-i is position i (0-based).

std::uint64_t position_bit(int n, int i) { return std::uint64_t{1} << (n - 1 - i); }

// Positions that would be unbarred fixed points: every one must be barred.
std::uint64_t count_derangement_masks(const std::vector<int>& perm, int n) {
  std::uint64_t fixed_bits = 0;
  for (int i = 0; i < n; ++i)
    if (perm[static_cast<std::size_t>(i)] == i + 1) fixed_bits |= position_bit(n, i);
  const std::uint64_t mask_end = std::uint64_t{1} << n;
  std::uint64_t count = 0;
  for (std::uint64_t m = 0; m < mask_end; ++m)
    if ((fixed_bits & ~m) == 0) ++count;
  return count;
}

// Pairs of positions whose bar flags must differ for the item to pass.
std::uint64_t count_differing_bit_masks(const std::vector<std::uint64_t>& pair_bits, int n) {
  const std::uint64_t mask_end = std::uint64_t{1} << n;
  std::uint64_t count = 0;
  for (std::uint64_t m = 0; m < mask_end; ++m) {
    bool pass = true;
    for (std::uint64_t pb : pair_bits) {
      const std::uint64_t hit = m & pb;
      if (hit == 0 || hit == pb) {  // equal flags at the two positions
        pass = false;
        break;
      }
    }
    if (pass) ++count;
  }
  return count;
}

// Adjacent positions where the right value is the left value plus one:
// matching bars there form a (barred or unbarred) succession.
std::uint64_t count_relative_derangement_masks(const std::vector<int>& perm, int n) {
  std::vector<std::uint64_t> pair_bits;
  for (int j = 0; j + 1 < n; ++j)
    if (perm[static_cast<std::size_t>(j + 1)] == perm[static_cast<std::size_t>(j)] + 1)
      pair_bits.push_back(position_bit(n, j) | position_bit(n, j + 1));
  return count_differing_bit_masks(pair_bits, n);
}

// Signed fixed point at 1-based position i (value i): its bar must differ
// from the bar of the entry holding value i-1.
std::uint64_t count_valid_representation_masks(const std::vector<int>& perm, int n) {
  std::vector<int> position_of_value(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position_of_value[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  std::vector<std::uint64_t> pair_bits;
  for (int i = 0; i < n; ++i) {
    if (perm[static_cast<std::size_t>(i)] == i + 1) {
      const int j = position_of_value[static_cast<std::size_t>(i)];
      pair_bits.push_back(position_bit(n, i) | position_bit(n, j));
    }
  }
  return count_differing_bit_masks(pair_bits, n);
}

std::uint64_t count_masks(const std::vector<int>& perm, int n, StreamFilter filter) {
  switch (filter) {
    case StreamFilter::All:
      return std::uint64_t{1} << n;
    case StreamFilter::DerangementB:
      return count_derangement_masks(perm, n);
    case StreamFilter::RelativeDerangementB:
      return count_relative_derangement_masks(perm, n);
    case StreamFilter::ValidRepresentation:
      return count_valid_representation_masks(perm, n);
  }
  throw precondition_error("filtered count: unknown filter");
}

void check_arguments(int n, StreamFilter filter, int ground_min) {
  if (n < 0) throw precondition_error("filtered count: n must be >= 0");
  if (n > 16) throw precondition_error("filtered count: n must be <= 16 (count overflows)");
  const bool wants_zero_ground = filter == StreamFilter::ValidRepresentation;
  if (filter != StreamFilter::All && ground_min != (wants_zero_ground ? 0 : 1))
    throw precondition_error("filtered count: filter requires ground_min " +
                             std::to_string(wants_zero_ground ? 0 : 1));
  if (ground_min != 0 && ground_min != 1)
    throw precondition_error("filtered count: ground_min must be 0 or 1");
}

}  // namespace

std::uint64_t serial_filtered_count(int n, StreamFilter filter, int ground_min) {
  check_arguments(n, filter, ground_min);
  if (n == 0) return 1;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), ground_min);
  std::uint64_t total = 0;
  do {
    total += count_masks(perm, n, filter);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::uint64_t parallel_filtered_count(int n, StreamFilter filter, int ground_min) {
  check_arguments(n, filter, ground_min);
  if (n == 0) return 1;
  std::uint64_t total = 0;
  // One block per first element; each block walks its (n-1)! suffixes.
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (int first = 0; first < n; ++first) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    perm[0] = ground_min + first;
    int next = 1;
    for (int v = 0; v < n; ++v)
      if (v != first) perm[static_cast<std::size_t>(next++)] = ground_min + v;
    do {
      total += count_masks(perm, n, filter);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  }
  return total;
}

}  // namespace bperm
