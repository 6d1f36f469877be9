#include <doctest.h>

#include "bperm/counting.hpp"
#include "bperm/errors.hpp"
#include "bperm/verify.hpp"

using namespace bperm;

TEST_CASE("eq4 report over 1..8") {
  const VerificationReport report = verify_eq4(1, 8);
  CHECK(report.overall);
  CHECK(report.method == "closed-form");
  REQUIRE(report.per_n.size() == 8);
  CHECK(report.per_n.front().n == 1);
  CHECK(report.per_n.front().lhs == 2);
  CHECK(report.per_n.front().rhs == 2);
  for (const PerNResult& r : report.per_n) CHECK(r.equal);
}

TEST_CASE("eq5 against brute force") {
  const VerificationReport report = verify_eq5_vs_brute(1, 5);
  CHECK(report.overall);
  CHECK(report.method == "brute-force");
  CHECK(report.per_n.back().lhs == 2562);
}

TEST_CASE("round trips and partition suites") {
  CHECK(verify_roundtrip(1, 4).overall);

  const VerificationReport partition = verify_partition(1, 4);
  CHECK(partition.overall);
  CHECK(partition.per_n.back().lhs == count_relative_derangements_b(4));
  CHECK(partition.per_n.back().note == "large=233 small=29");

  CHECK(verify_classical(1, 5).overall);
}

TEST_CASE("verify dispatch and input validation") {
  CHECK(run_verification("eq4", 1, 3).overall);
  CHECK_THROWS_AS(run_verification("nope", 1, 3), precondition_error);
  CHECK_THROWS_AS(verify_eq4(0, 3), precondition_error);
  CHECK_THROWS_AS(verify_eq4(3, 2), precondition_error);
  CHECK_THROWS_AS(verify_eq5_vs_brute(1, 10), size_guard_error);
  CHECK_THROWS_AS(verify_partition(1, 10), size_guard_error);
}

TEST_CASE("report serialization") {
  const VerificationReport report = verify_eq4(1, 2);
  const nlohmann::json j = to_json(report);
  CHECK(j["identity"] == "eq4");
  CHECK(j["from"] == 1);
  CHECK(j["to"] == 2);
  CHECK(j["overall"] == true);
  REQUIRE(j["per_n"].size() == 2);
  CHECK(j["per_n"][0]["lhs"] == "2");  // counts travel as decimal strings
  CHECK(j["per_n"][0]["lhs"].is_string());
  CHECK(j["per_n"][1]["rhs"] == "6");

  const std::string text = render_text(report);
  CHECK(text.find("overall: PASS") != std::string::npos);
  CHECK(text.find("n=1: lhs=2 rhs=2 ok") != std::string::npos);
}
