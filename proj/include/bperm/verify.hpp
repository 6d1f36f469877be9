#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bperm/counting.hpp"

namespace bperm {

struct PerNResult {
  int n = 0;
  Count lhs;
  Count rhs;
  bool equal = false;
  std::string note;  // optional detail, e.g. the per-tag image sizes
};

/// Structured result of an identity or round-trip check over an n range.
struct VerificationReport {
  std::string identity;
  int from = 0;
  int to = 0;
  std::string method;  // "closed-form" or "brute-force"
  std::vector<PerNResult> per_n;
  bool overall = true;  // true iff every per_n entry is equal
};

/// Eq. (5) against Eq. (4), both closed form, for n in [from, to].
VerificationReport verify_eq4(int from, int to);

/// Eq. (5) against the brute-force relative derangement count.
VerificationReport verify_eq5_vs_brute(int from, int to, bool force = false);

/// All round trips: rel<->skew, representation encode/decode, and the
/// composed theorem map in both directions, exhaustively per n.
VerificationReport verify_roundtrip(int from, int to, bool force = false);

/// Exhaustive bijectivity of the forward map: injective, image sizes
/// exactly (D_n^B, D_{n-1}^B), backward inverts pointwise.
VerificationReport verify_partition(int from, int to, bool force = false);

/// Restriction to ordinary permutations: the all-unbarred inputs map to
/// all-unbarred classical derangements and witness Q_n = D_n + D_{n-1}.
VerificationReport verify_classical(int from, int to, bool force = false);

/// Runs the suite selected by name: eq4 | eq5-vs-brute | roundtrip |
/// partition | classical. Throws precondition_error on an unknown name.
VerificationReport run_verification(const std::string& identity, int from, int to,
                                    bool force = false);

/// Counts serialized as decimal strings; key set and types are stable.
nlohmann::json to_json(const VerificationReport& report);

/// Human-readable rendering, one line per n plus an overall line.
std::string render_text(const VerificationReport& report);

}  // namespace bperm
