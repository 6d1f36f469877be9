#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bperm/signed_element.hpp"
#include "bperm/signed_permutation.hpp"
#include "bperm/signed_set.hpp"
#include "bperm/skew_derangement.hpp"

namespace bperm {

// Compact text notation: whitespace-separated tokens, one per element.
// A token is an optional '-' (the bar) followed by a decimal value;
// "-0" is barred zero. The '-' is handled at the string level, never as
// numeric negation.

std::string format(SignedElement e);
std::string format(const SignedPermutation& p);
std::string format(const SignedSet& s);

/// One "x -> f(x)" line per pair, ordered by x's underlying value.
std::string format(const SkewDerangement& f);

/// Throws parse_error on a malformed token.
SignedElement parse_element(std::string_view token);

/// Tokenizes and parses each token; no set/permutation invariants checked.
std::vector<SignedElement> parse_elements(std::string_view text);

/// Parses a signed permutation, inferring ground_min: 0 if a 0-valued
/// entry is present, otherwise 1. Empty text gives the empty permutation
/// on [0]. Throws parse_error on malformed tokens, duplicate underlying
/// values or a non-contiguous ground set.
SignedPermutation parse_permutation(std::string_view text);

/// Same, with the ground set pinned by the caller.
SignedPermutation parse_permutation(std::string_view text, int ground_min);

/// Throws parse_error on malformed tokens or duplicate underlying values.
SignedSet parse_signed_set(std::string_view text);

// JSON notation: an element is {"value": <int >= 0>, "barred": <bool>};
// sequences are arrays of such objects.

nlohmann::json to_json(SignedElement e);
nlohmann::json to_json(const SignedPermutation& p);
nlohmann::json to_json(const SignedSet& s);
nlohmann::json to_json(const SkewDerangement& f);

SignedElement element_from_json(const nlohmann::json& j);
SignedPermutation permutation_from_json(const nlohmann::json& j);
SignedPermutation permutation_from_json(const nlohmann::json& j, int ground_min);

}  // namespace bperm
