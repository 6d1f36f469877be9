#include "bperm/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "bperm/bijections.hpp"
#include "bperm/enumeration.hpp"
#include "bperm/errors.hpp"
#include "bperm/notation.hpp"
#include "bperm/parallel_count.hpp"

namespace bperm {

namespace {

void check_range(int from, int to) {
  if (from < 1) throw precondition_error("verify: range must start at n >= 1");
  if (to < from) throw precondition_error("verify: empty range (to < from)");
}

void check_guard(int to, bool force, int max_n = 9) {
  if (to > max_n && !force)
    throw size_guard_error("verify: n = " + std::to_string(to) + " exceeds the guard (" +
                           std::to_string(max_n) + "); pass --force to override");
}

std::vector<SignedPermutation> collect(int n, int ground_min,
                                       bool (*predicate)(const SignedPermutation&)) {
  std::vector<SignedPermutation> out;
  for (SignedPermutationCursor cursor(n, ground_min); !cursor.done(); cursor.advance()) {
    SignedPermutation p = cursor.current();
    if (predicate(p)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<SignedPermutation> classical_permutations(int n) {
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    std::vector<SignedElement> entries;
    entries.reserve(values.size());
    for (int v : values) entries.push_back(unb(v));
    out.emplace_back(std::move(entries), 1);
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

std::string tagged_key(const TaggedDerangement& d) {
  return (d.tag == DerangementTag::small ? "s:" : "l:") + format(d.perm);
}

}  // namespace

VerificationReport verify_eq4(int from, int to) {
  check_range(from, to);
  VerificationReport report{"eq4", from, to, "closed-form", {}, true};
  for (int n = from; n <= to; ++n) {
    Count lhs = count_relative_derangements_b(n);
    Count rhs = count_relative_via_identity(n);
    const bool equal = lhs == rhs;
    report.per_n.push_back({n, std::move(lhs), std::move(rhs), equal, {}});
    report.overall = report.overall && equal;
  }
  return report;
}

VerificationReport verify_eq5_vs_brute(int from, int to, bool force) {
  check_range(from, to);
  check_guard(to, force);
  VerificationReport report{"eq5-vs-brute", from, to, "brute-force", {}, true};
  for (int n = from; n <= to; ++n) {
    Count lhs = count_relative_derangements_b(n);
    Count rhs = Count(parallel_filtered_count(n, StreamFilter::RelativeDerangementB, 1));
    const bool equal = lhs == rhs;
    report.per_n.push_back({n, std::move(lhs), std::move(rhs), equal, {}});
    report.overall = report.overall && equal;
  }
  return report;
}

VerificationReport verify_roundtrip(int from, int to, bool force) {
  check_range(from, to);
  check_guard(to, force);
  VerificationReport report{"roundtrip", from, to, "brute-force", {}, true};
  for (int n = from; n <= to; ++n) {
    Count checked = 0, passed = 0;

    for (const SignedPermutation& p : collect(n, 1, is_relative_derangement_b)) {
      const SkewDerangement f = rel_to_skew(p);
      ++checked;
      if (is_fixed_point_free(f.pairs()) && skew_to_rel(f) == p) ++passed;

      const Representation r = representation_of(f);
      ++checked;
      if (from_representation(r) == f) ++passed;

      ++checked;
      if (theorem13_backward(theorem13_forward(p)) == p) ++passed;
    }

    for (const SignedPermutation& rp : collect(n, 0, is_valid_representation)) {
      const Representation r{rp};
      ++checked;
      if (representation_of(from_representation(r)) == r) ++passed;
    }

    for (const SignedPermutation& t : collect(n, 1, is_derangement_b)) {
      const TaggedDerangement d{DerangementTag::large, t};
      ++checked;
      if (theorem13_forward(theorem13_backward(d)) == d) ++passed;
    }
    for (const SignedPermutation& t : collect(n - 1, 1, is_derangement_b)) {
      const TaggedDerangement d{DerangementTag::small, t};
      ++checked;
      if (theorem13_forward(theorem13_backward(d)) == d) ++passed;
    }

    const bool equal = checked == passed;
    report.per_n.push_back({n, std::move(checked), std::move(passed), equal, {}});
    report.overall = report.overall && equal;
  }
  return report;
}

VerificationReport verify_partition(int from, int to, bool force) {
  check_range(from, to);
  check_guard(to, force);
  VerificationReport report{"partition", from, to, "brute-force", {}, true};
  for (int n = from; n <= to; ++n) {
    const std::vector<SignedPermutation> inputs = collect(n, 1, is_relative_derangement_b);
    std::set<std::string> image;
    std::size_t large = 0, small = 0;
    bool inverts = true;
    for (const SignedPermutation& p : inputs) {
      const TaggedDerangement d = theorem13_forward(p);
      (d.tag == DerangementTag::large ? large : small) += 1;
      image.insert(tagged_key(d));
      if (theorem13_backward(d) != p) inverts = false;
    }
    const bool injective = image.size() == inputs.size();
    const bool sizes_match = Count(large) == count_derangements_b(n) &&
                             Count(small) == count_derangements_b(n - 1);
    // Injective + tags valid on construction + per-tag counts equal to the
    // derangement counts pins the image to exactly the disjoint union.
    const bool equal = injective && sizes_match && inverts &&
                       Count(inputs.size()) == count_relative_derangements_b(n);
    std::ostringstream note;
    note << "large=" << large << " small=" << small;
    report.per_n.push_back({n, Count(inputs.size()), Count(image.size()), equal, note.str()});
    report.overall = report.overall && equal;
  }
  return report;
}

VerificationReport verify_classical(int from, int to, bool force) {
  check_range(from, to);
  check_guard(to, force);
  VerificationReport report{"classical", from, to, "brute-force", {}, true};
  for (int n = from; n <= to; ++n) {
    std::vector<SignedPermutation> inputs;
    for (SignedPermutation& p : classical_permutations(n))
      if (is_relative_derangement_b(p)) inputs.push_back(std::move(p));

    std::set<std::string> image;
    std::size_t large = 0, small = 0;
    bool restricted = true;  // images stay unbarred and invert back
    for (const SignedPermutation& p : inputs) {
      const TaggedDerangement d = theorem13_forward(p);
      if (!d.perm.all_unbarred() || theorem13_backward(d) != p) restricted = false;
      (d.tag == DerangementTag::large ? large : small) += 1;
      image.insert(tagged_key(d));
    }
    Count lhs = count_relative_classical(n);
    Count rhs{inputs.size()};
    const bool equal = lhs == rhs && image.size() == inputs.size() && restricted &&
                       Count(large) == count_derangements_classical(n) &&
                       Count(small) == count_derangements_classical(n - 1);
    std::ostringstream note;
    note << "large=" << large << " small=" << small;
    report.per_n.push_back({n, std::move(lhs), std::move(rhs), equal, note.str()});
    report.overall = report.overall && equal;
  }
  return report;
}

VerificationReport run_verification(const std::string& identity, int from, int to, bool force) {
  if (identity == "eq4") return verify_eq4(from, to);
  if (identity == "eq5-vs-brute") return verify_eq5_vs_brute(from, to, force);
  if (identity == "roundtrip") return verify_roundtrip(from, to, force);
  if (identity == "partition") return verify_partition(from, to, force);
  if (identity == "classical") return verify_classical(from, to, force);
  throw precondition_error("verify: unknown identity '" + identity + "'");
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json per_n = nlohmann::json::array();
  for (const PerNResult& r : report.per_n) {
    nlohmann::json entry{{"n", r.n},
                         {"lhs", r.lhs.str()},
                         {"rhs", r.rhs.str()},
                         {"equal", r.equal}};
    if (!r.note.empty()) entry["note"] = r.note;
    per_n.push_back(std::move(entry));
  }
  return nlohmann::json{{"identity", report.identity},
                        {"from", report.from},
                        {"to", report.to},
                        {"method", report.method},
                        {"per_n", std::move(per_n)},
                        {"overall", report.overall}};
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  out << report.identity << " over n in [" << report.from << ", " << report.to << "] ("
      << report.method << ")\n";
  for (const PerNResult& r : report.per_n) {
    out << "  n=" << r.n << ": lhs=" << r.lhs << " rhs=" << r.rhs << " "
        << (r.equal ? "ok" : "MISMATCH");
    if (!r.note.empty()) out << " [" << r.note << "]";
    out << '\n';
  }
  out << "overall: " << (report.overall ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace bperm
