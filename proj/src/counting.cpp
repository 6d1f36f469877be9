#include "bperm/counting.hpp"

#include <string>
#include <vector>

#include "bperm/errors.hpp"

namespace bperm {

namespace {

void require_nonnegative(int n, const char* op) {
  if (n < 0) throw precondition_error(std::string(op) + ": n must be >= 0");
}

void require_positive(int n, const char* op) {
  if (n < 1) throw precondition_error(std::string(op) + ": n must be >= 1");
}

// 0!..n!, built once per call so the functions stay pure.
std::vector<Count> factorial_table(int n) {
  std::vector<Count> fact(static_cast<std::size_t>(n) + 1);
  fact[0] = 1;
  for (int k = 1; k <= n; ++k) fact[static_cast<std::size_t>(k)] = fact[static_cast<std::size_t>(k - 1)] * k;
  return fact;
}

Count binomial(const std::vector<Count>& fact, int n, int k) {
  return fact[static_cast<std::size_t>(n)] /
         (fact[static_cast<std::size_t>(k)] * fact[static_cast<std::size_t>(n - k)]);
}

Count pow2(int e) { return Count(1) << e; }

}  // namespace

Count count_derangements_b(int n) {
  require_nonnegative(n, "count_derangements_b");
  const auto fact = factorial_table(n);
  Count total = 0;
  for (int k = 0; k <= n; ++k) {
    const Count term = binomial(fact, n, k) * fact[static_cast<std::size_t>(n - k)] * pow2(n - k);
    total += (k % 2 == 0) ? term : -term;
  }
  return total;
}

Count count_relative_derangements_b(int n) {
  require_positive(n, "count_relative_derangements_b");
  const auto fact = factorial_table(n);
  Count total = fact[static_cast<std::size_t>(n)] * pow2(n);
  for (int k = 1; k <= n - 1; ++k) {
    const Count term =
        binomial(fact, n - 1, k) * fact[static_cast<std::size_t>(n - k)] * pow2(n - k);
    total += (k % 2 == 0) ? term : -term;
  }
  return total;
}

Count count_relative_via_identity(int n) {
  require_positive(n, "count_relative_via_identity");
  return count_derangements_b(n) + count_derangements_b(n - 1);
}

Count count_derangements_classical(int n) {
  require_nonnegative(n, "count_derangements_classical");
  const auto fact = factorial_table(n);
  Count total = 0;
  for (int k = 0; k <= n; ++k) {
    const Count term = binomial(fact, n, k) * fact[static_cast<std::size_t>(n - k)];
    total += (k % 2 == 0) ? term : -term;
  }
  return total;
}

Count count_relative_classical(int n) {
  require_positive(n, "count_relative_classical");
  return count_derangements_classical(n) + count_derangements_classical(n - 1);
}

}  // namespace bperm
