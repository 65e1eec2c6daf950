#ifndef MSCODES_JSON_IO_HPP
#define MSCODES_JSON_IO_HPP

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bigint.hpp"
#include "bounds.hpp"
#include "channel.hpp"
#include "codes.hpp"
#include "errors.hpp"
#include "multiset.hpp"
#include "search.hpp"
#include "sidon.hpp"

namespace mscodes {

/// Key order is insertion order, so dumps are stable and read naturally.
using Json = nlohmann::ordered_json;

inline Json to_json(const MultisetWord& w) {
  Json a = Json::array();
  for (auto c : w.counts()) a.push_back(c);
  return a;
}

inline Json to_json(std::span<const count_t> counts) {
  Json a = Json::array();
  for (auto c : counts) a.push_back(c);
  return a;
}

/// Big values travel as decimal strings.
inline Json to_json(const BigInt& v) { return to_decimal(v); }

inline Json optional_json(const std::optional<BigInt>& v) { return v ? to_json(*v) : Json("n/a"); }

/// Parses a counts array. With `q` set, the array length must match.
inline MultisetWord word_from_json(const Json& j, std::optional<std::size_t> q = std::nullopt) {
  if (!j.is_array()) throw invalid_parameter("a word must be a JSON array of counts");
  std::vector<count_t> counts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw invalid_parameter("word counts must be integers");
    if (x.is_number_unsigned()) {
      counts.push_back(x.get<std::uint64_t>());
    } else {
      const auto v = x.get<std::int64_t>();
      if (v < 0) throw invalid_parameter("word counts must be non-negative");
      counts.push_back(static_cast<count_t>(v));
    }
  }
  if (counts.empty()) throw invalid_parameter("a word needs q >= 1 counts");
  if (q && counts.size() != *q) throw alphabet_mismatch(counts.size(), *q);
  return MultisetWord(std::move(counts));
}

inline MultisetWord word_from_text(const std::string& text, std::optional<std::size_t> q = std::nullopt) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw invalid_parameter(std::string("word is not valid JSON: ") + e.what());
  }
  return word_from_json(j, q);
}

inline BigInt bigint_from_text(std::string text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  text = text.substr(start);
  if (text.size() >= 2 && text.front() == '"' && text.back() == '"') text = text.substr(1, text.size() - 2);
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw invalid_parameter("expected a non-negative decimal integer, got '" + text + "'");
  return BigInt(text);
}

inline Json to_json(const BoundReport& r) {
  Json j;
  j["name"] = r.name;
  j["value"] = optional_json(r.value);
  j["applicability"] = r.applicability;
  return j;
}

inline Json to_json(const SumCheck& c) {
  Json j;
  j["injective"] = c.injective;
  if (c.collision) {
    j["collision"] = {{"first", to_json(std::span<const count_t>(c.collision->first))},
                      {"second", to_json(std::span<const count_t>(c.collision->second))},
                      {"sum", c.collision->sum}};
  } else {
    j["collision"] = nullptr;
  }
  return j;
}

inline Json to_json(const ExplicitCode& code) {
  Json words = Json::array();
  for (const auto& w : code.words()) words.push_back(to_json(w));
  return words;
}

inline Json to_json(const SearchResult& r, bool witness) {
  Json j;
  j["n"] = r.n;
  j["q"] = r.q;
  j["t"] = r.t;
  j["optimum"] = r.optimum;
  j["exact"] = r.exact;
  if (witness) j["witness"] = to_json(r.witness);
  j["nodes"] = r.nodes_explored;
  return j;
}

inline Json to_json(const VerifyReport& r) {
  Json j;
  j["size"] = r.size;
  j["t"] = r.t;
  j["min_distance"] = r.min_distance ? Json(*r.min_distance) : Json(nullptr);
  j["distance_ok"] = r.distance_ok;
  j["outputs_disjoint"] = r.outputs_disjoint;
  j["agree"] = r.agree;
  j["passed"] = r.passed;
  return j;
}

inline Json to_json(const RoundtripReport& r) {
  Json j;
  j["trials"] = r.trials;
  j["successes"] = r.successes;
  Json f = Json::array();
  for (const auto& x : r.failures)
    f.push_back({{"index", to_json(x.codeword_index)},
                 {"codeword", to_json(x.codeword)},
                 {"pattern", to_json(x.pattern)},
                 {"outcome", x.outcome}});
  j["failures"] = std::move(f);
  return j;
}

inline Json to_json(const DecodeResult& r) {
  Json j;
  j["codeword"] = to_json(r.codeword);
  j["pattern"] = to_json(r.pattern);
  return j;
}

}  // namespace mscodes

#endif  // MSCODES_JSON_IO_HPP
