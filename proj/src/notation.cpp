#include "bperm/notation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace bperm {

namespace {

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

SignedPermutation make_permutation(std::vector<SignedElement> entries, int ground_min) {
  const int n = static_cast<int>(entries.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const SignedElement& e : entries) {
    const int offset = e.value - ground_min;
    if (offset < 0 || offset >= n)
      throw parse_error("non-contiguous ground set: value " + std::to_string(e.value) +
                        " does not fit {" + std::to_string(ground_min) + ".." +
                        std::to_string(ground_min + n - 1) + "}");
    if (seen[static_cast<std::size_t>(offset)])
      throw parse_error("duplicate underlying value " + std::to_string(e.value));
    seen[static_cast<std::size_t>(offset)] = true;
  }
  return SignedPermutation(std::move(entries), ground_min);
}

}  // namespace

std::string format(SignedElement e) {
  return e.barred ? "-" + std::to_string(e.value) : std::to_string(e.value);
}

std::string format(const SignedPermutation& p) {
  std::string out;
  for (const SignedElement& e : p) {
    if (!out.empty()) out += ' ';
    out += format(e);
  }
  return out;
}

std::string format(const SignedSet& s) {
  std::string out;
  for (const SignedElement& e : s) {
    if (!out.empty()) out += ' ';
    out += format(e);
  }
  return out;
}

std::string format(const SkewDerangement& f) {
  std::string out;
  for (const auto& [x, fx] : f.pairs()) {
    out += format(x);
    out += " -> ";
    out += format(fx);
    out += '\n';
  }
  return out;
}

SignedElement parse_element(std::string_view token) {
  if (token.empty()) throw parse_error("empty token");
  bool barred = false;
  std::string_view digits = token;
  if (digits.front() == '-') {
    barred = true;
    digits.remove_prefix(1);
  }
  if (digits.empty() || !std::isdigit(static_cast<unsigned char>(digits.front())))
    throw parse_error("malformed token '" + std::string(token) + "': expected digits");
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw parse_error("malformed token '" + std::string(token) + "'");
  return {value, barred};
}

std::vector<SignedElement> parse_elements(std::string_view text) {
  std::vector<SignedElement> out;
  for (std::string_view token : tokenize(text)) out.push_back(parse_element(token));
  return out;
}

SignedPermutation parse_permutation(std::string_view text) {
  std::vector<SignedElement> entries = parse_elements(text);
  const bool has_zero = std::any_of(entries.begin(), entries.end(),
                                    [](SignedElement e) { return e.value == 0; });
  return make_permutation(std::move(entries), has_zero ? 0 : 1);
}

SignedPermutation parse_permutation(std::string_view text, int ground_min) {
  return make_permutation(parse_elements(text), ground_min);
}

SignedSet parse_signed_set(std::string_view text) {
  std::vector<SignedElement> elements = parse_elements(text);
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (elements[i].value == elements[j].value)
        throw parse_error("duplicate underlying value " + std::to_string(elements[i].value));
  return SignedSet(std::move(elements));
}

nlohmann::json to_json(SignedElement e) {
  return nlohmann::json{{"value", e.value}, {"barred", e.barred}};
}

namespace {

template <typename Range>
nlohmann::json elements_to_json(const Range& range) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SignedElement& e : range) arr.push_back(to_json(e));
  return arr;
}

}  // namespace

nlohmann::json to_json(const SignedPermutation& p) { return elements_to_json(p); }

nlohmann::json to_json(const SignedSet& s) { return elements_to_json(s); }

nlohmann::json to_json(const SkewDerangement& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [x, fx] : f.pairs())
    arr.push_back(nlohmann::json{{"x", to_json(x)}, {"fx", to_json(fx)}});
  return arr;
}

SignedElement element_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("value") || !j.contains("barred") ||
      !j["value"].is_number_integer() || !j["barred"].is_boolean())
    throw parse_error("element JSON must be {\"value\": <int>, \"barred\": <bool>}");
  const int value = j["value"].get<int>();
  if (value < 0) throw parse_error("element JSON: value must be nonnegative");
  return {value, j["barred"].get<bool>()};
}

namespace {

std::vector<SignedElement> elements_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw parse_error("expected a JSON array of elements");
  std::vector<SignedElement> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(element_from_json(item));
  return out;
}

}  // namespace

SignedPermutation permutation_from_json(const nlohmann::json& j) {
  std::vector<SignedElement> entries = elements_from_json(j);
  const bool has_zero = std::any_of(entries.begin(), entries.end(),
                                    [](SignedElement e) { return e.value == 0; });
  return make_permutation(std::move(entries), has_zero ? 0 : 1);
}

SignedPermutation permutation_from_json(const nlohmann::json& j, int ground_min) {
  return make_permutation(elements_from_json(j), ground_min);
}

}  // namespace bperm
