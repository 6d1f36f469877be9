#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "bperm/bijections.hpp"
#include "bperm/counting.hpp"
#include "bperm/enumeration.hpp"
#include "bperm/notation.hpp"

#include "oracle.hpp"

using namespace bperm;

namespace {

SkewDerangement skew_from_text(const std::vector<std::pair<const char*, const char*>>& mapping) {
  std::vector<SkewDerangement::Pair> pairs;
  for (const auto& [x, fx] : mapping) pairs.push_back({parse_element(x), parse_element(fx)});
  return SkewDerangement(std::move(pairs));
}

// The section-2 worked example used throughout the paper.
const char* kRelExample = "-7 8 6 -1 -5 -3 4 2";

SkewDerangement paper_example_skew() {
  return skew_from_text({{"-7", "7"},
                         {"8", "-6"},
                         {"6", "5"},
                         {"-1", "-4"},
                         {"-5", "-2"},
                         {"-3", "3"},
                         {"4", "-0"},
                         {"2", "1"}});
}

std::vector<SignedPermutation> members(int n, int ground_min,
                                       bool (*predicate)(const SignedPermutation&)) {
  std::vector<SignedPermutation> out;
  for (SignedPermutationCursor cursor(n, ground_min); !cursor.done(); cursor.advance()) {
    SignedPermutation p = cursor.current();
    if (predicate(p)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST_CASE("rel_to_skew reproduces the worked example") {
  const SkewDerangement f = rel_to_skew(parse_permutation(kRelExample));
  CHECK(f == paper_example_skew());
  CHECK(f.apply(bar(7)) == unb(7));
  CHECK(f.apply(unb(8)) == bar(6));
  CHECK(f.apply(unb(4)) == bar(0));
}

TEST_CASE("rel_to_skew small cases") {
  CHECK(rel_to_skew(parse_permutation("2 1")) ==
        skew_from_text({{"2", "1"}, {"1", "0"}}));
  CHECK(rel_to_skew(parse_permutation("-1", 1)) == skew_from_text({{"-1", "-0"}}));
  CHECK(rel_to_skew(parse_permutation("-1 2")) ==
        skew_from_text({{"-1", "1"}, {"2", "-0"}}));
}

TEST_CASE("rel_to_skew rejects non relative derangements") {
  CHECK_THROWS_AS(rel_to_skew(parse_permutation("1 2")), precondition_error);
  CHECK_THROWS_AS(rel_to_skew(parse_permutation("4 1 5 -2 -3")), precondition_error);
}

TEST_CASE("skew_to_rel inverts the worked example") {
  CHECK(format(skew_to_rel(paper_example_skew())) == kRelExample);
  CHECK(format(skew_to_rel(skew_from_text({{"-1", "1"}, {"2", "-0"}}))) == "-1 2");
  CHECK(format(skew_to_rel(skew_from_text({{"-1", "-0"}}))) == "-1");
}

TEST_CASE("representation encoding") {
  const Representation r = representation_of(paper_example_skew());
  CHECK(format(r.perm()) == "-4 1 3 -0 -2 5 7 -6");
  CHECK_FALSE(r.has_trailing_zero());

  CHECK(format(representation_of(skew_from_text({{"-1", "-0"}})).perm()) == "-0");
  CHECK(format(representation_of(skew_from_text({{"1", "0"}, {"2", "1"}})).perm()) == "0 1");
}

TEST_CASE("from_representation decodes") {
  const Representation r{parse_permutation("-4 1 3 -0 -2 5 7 -6")};
  CHECK(from_representation(r) == paper_example_skew());

  // X is recovered by shifting the entry set up
  const Representation small{parse_permutation("-1 2 0")};
  const SkewDerangement f = from_representation(small);
  CHECK(f.apply(unb(1)) == bar(1));
  CHECK(f.apply(bar(2)) == unb(2));
  CHECK(f.apply(unb(3)) == unb(0));
}

TEST_CASE("representation validity characterization") {
  CHECK(is_valid_representation(parse_permutation("-6 -2 1 4 -3 7 -5 0")));
  CHECK_FALSE(is_valid_representation(parse_permutation("-1 -2 0")));
  CHECK(is_valid_representation(parse_permutation("0 1")));
  CHECK_THROWS_AS(is_valid_representation(parse_permutation("2 1")), precondition_error);

  CHECK_THROWS_AS(Representation{parse_permutation("-1 -2 0")}, invalid_representation);
  CHECK_THROWS_AS(Representation{parse_permutation("2 1")}, precondition_error);

  for (int n = 1; n <= 4; ++n) {
    for (const auto& item : testoracle::all_signed_perms(n, 0)) {
      const SignedPermutation p = testoracle::to_lib(item, 0);
      CHECK(is_valid_representation(p) == testoracle::valid_representation(item));
    }
  }
}

TEST_CASE("lemma: trailing-zero representations vs derangements on [n-1]") {
  const Representation paper{parse_permutation("-6 -2 1 4 -3 7 -5 0")};
  const SignedPermutation t = rep_small_to_derangement(paper);
  CHECK(format(t) == "-6 -2 1 -4 -3 7 -5");
  CHECK(derangement_to_rep_small(t) == paper);

  CHECK(format(rep_small_to_derangement(Representation{parse_permutation("-1 2 0")})) == "-1 -2");
  CHECK(format(derangement_to_rep_small(parse_permutation("-1 -2")).perm()) == "-1 2 0");
  CHECK(rep_small_to_derangement(Representation{parse_permutation("0")}) == SignedPermutation{});
  CHECK(format(derangement_to_rep_small(parse_permutation("2 1")).perm()) == "2 1 0");

  CHECK_THROWS_AS(rep_small_to_derangement(Representation{parse_permutation("0 1")}),
                  precondition_error);
  CHECK_THROWS_AS(derangement_to_rep_small(parse_permutation("1 2")), precondition_error);
}

TEST_CASE("the five trailing-zero representations on {0,1,2}") {
  // The list in the paper prints -1 -2 0, which decodes to f(2bar) = 2bar;
  // the member consistent with the definitions is -1 2 0.
  std::set<std::string> trailing;
  for (const SignedPermutation& p : members(3, 0, is_valid_representation))
    if (Representation{p}.has_trailing_zero()) trailing.insert(format(p));
  CHECK(trailing ==
        std::set<std::string>{"-1 2 0", "2 1 0", "2 -1 0", "-2 1 0", "-2 -1 0"});

  // They map bijectively onto the five signed derangements on {1,2}.
  std::set<std::string> images;
  for (const std::string& rep : trailing)
    images.insert(format(rep_small_to_derangement(Representation{parse_permutation(rep)})));
  CHECK(images == std::set<std::string>{"-1 -2", "2 1", "2 -1", "-2 1", "-2 -1"});
}

TEST_CASE("lemma: representations with a non-zero tail vs derangements on [n]") {
  const Representation paper{parse_permutation("-4 1 3 -0 -2 5 7 -6")};
  const SignedPermutation t = rep_large_to_derangement(paper);
  CHECK(format(t) == "-4 1 -3 -8 -2 5 -7 -6");
  CHECK(derangement_to_rep_large(t) == paper);

  CHECK(format(rep_large_to_derangement(Representation{parse_permutation("1 -0")})) == "-1 -2");
  CHECK(format(rep_large_to_derangement(Representation{parse_permutation("0 1")})) == "2 1");
  CHECK(format(derangement_to_rep_large(parse_permutation("2 1")).perm()) == "0 1");
  CHECK(format(derangement_to_rep_large(parse_permutation("-1 -2")).perm()) == "1 -0");

  // The paper's five representations with pi_2 != 0 on {1,2}.
  std::set<std::string> nonzero_tail;
  for (const SignedPermutation& p : members(2, 0, is_valid_representation))
    if (!Representation{p}.has_trailing_zero()) nonzero_tail.insert(format(p));
  CHECK(nonzero_tail == std::set<std::string>{"0 1", "0 -1", "-0 1", "-0 -1", "1 -0"});
  std::set<std::string> images;
  for (const std::string& rep : nonzero_tail)
    images.insert(format(rep_large_to_derangement(Representation{parse_permutation(rep)})));
  CHECK(images == std::set<std::string>{"-1 -2", "2 1", "2 -1", "-2 1", "-2 -1"});

  CHECK_THROWS_AS(rep_large_to_derangement(Representation{parse_permutation("-1 2 0")}),
                  precondition_error);
  CHECK_THROWS_AS(derangement_to_rep_large(parse_permutation("1 2")), precondition_error);
}

TEST_CASE("theorem map on the spec's worked cases") {
  const TaggedDerangement d = theorem13_forward(parse_permutation("-1 2"));
  CHECK(d.tag == DerangementTag::large);
  CHECK(format(d.perm) == "-1 -2");
  CHECK(format(theorem13_backward(d)) == "-1 2");

  const TaggedDerangement large1 = theorem13_forward(parse_permutation("-1", 1));
  CHECK(large1.tag == DerangementTag::large);
  CHECK(format(large1.perm) == "-1");

  const TaggedDerangement small1 = theorem13_forward(parse_permutation("1", 1));
  CHECK(small1.tag == DerangementTag::small);
  CHECK(small1.perm == SignedPermutation{});
  CHECK(format(theorem13_backward(small1)) == "1");

  // Chaining the paper's two worked examples through the shared representation.
  const TaggedDerangement chained{DerangementTag::large,
                                  parse_permutation("-4 1 -3 -8 -2 5 -7 -6")};
  CHECK(format(theorem13_backward(chained)) == kRelExample);
  CHECK(theorem13_forward(parse_permutation(kRelExample)) == chained);
}

TEST_CASE("theorem map validates its inputs") {
  CHECK_THROWS_AS(theorem13_forward(parse_permutation("1 2")), precondition_error);
  CHECK_THROWS_AS(theorem13_forward(SignedPermutation{}), precondition_error);
  CHECK_THROWS_AS(TaggedDerangement(DerangementTag::large, parse_permutation("1 2")),
                  precondition_error);
}

TEST_CASE("exhaustive round trips and bijectivity up to n = 4") {
  for (int n = 1; n <= 4; ++n) {
    const std::vector<SignedPermutation> rels = members(n, 1, is_relative_derangement_b);
    CHECK(Count(rels.size()) == count_relative_derangements_b(n));

    std::set<std::string> image_small, image_large;
    for (const SignedPermutation& p : rels) {
      const SkewDerangement f = rel_to_skew(p);
      CHECK(is_fixed_point_free(f.pairs()));
      CHECK(skew_to_rel(f) == p);

      const Representation r = representation_of(f);
      CHECK(is_valid_representation(r.perm()));
      CHECK(from_representation(r) == f);

      const TaggedDerangement d = theorem13_forward(p);
      CHECK(is_derangement_b(d.perm));
      CHECK(d.perm.size() == (d.tag == DerangementTag::small ? p.size() - 1 : p.size()));
      CHECK(theorem13_backward(d) == p);
      (d.tag == DerangementTag::small ? image_small : image_large).insert(format(d.perm));
    }

    // Injectivity and the exact partition sizes of Theorem 1.3.
    CHECK(Count(image_large.size()) == count_derangements_b(n));
    CHECK(Count(image_small.size()) == count_derangements_b(n - 1));
    CHECK(image_large.size() + image_small.size() == rels.size());

    // Every valid representation decodes and re-encodes to itself.
    for (const SignedPermutation& rp : members(n, 0, is_valid_representation)) {
      const Representation r{rp};
      CHECK(representation_of(from_representation(r)) == r);
    }

    // Backward then forward is the identity on tagged derangements.
    for (const SignedPermutation& t : members(n, 1, is_derangement_b)) {
      const TaggedDerangement d{DerangementTag::large, t};
      CHECK(theorem13_forward(theorem13_backward(d)) == d);
    }
    for (const SignedPermutation& t : members(n - 1, 1, is_derangement_b)) {
      const TaggedDerangement d{DerangementTag::small, t};
      CHECK(theorem13_forward(theorem13_backward(d)) == d);
    }
  }
}

TEST_CASE("restriction to ordinary permutations witnesses Q_n = D_n + D_{n-1}") {
  for (int n = 1; n <= 5; ++n) {
    std::size_t inputs = 0;
    std::set<std::string> image_small, image_large;
    for (const SignedPermutation& p : members(n, 1, is_relative_derangement_b)) {
      if (!p.all_unbarred()) continue;
      ++inputs;
      const SkewDerangement f = rel_to_skew(p);
      CHECK(f.all_unbarred());  // unbarred maps to unbarred
      const TaggedDerangement d = theorem13_forward(p);
      CHECK(d.perm.all_unbarred());
      CHECK(theorem13_backward(d) == p);
      (d.tag == DerangementTag::small ? image_small : image_large).insert(format(d.perm));
    }
    CHECK(Count(inputs) == count_relative_classical(n));
    CHECK(Count(image_large.size()) == count_derangements_classical(n));
    CHECK(Count(image_small.size()) == count_derangements_classical(n - 1));
  }
}
