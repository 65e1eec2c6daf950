#ifndef MSCODES_COMMANDS_HPP
#define MSCODES_COMMANDS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bounds.hpp"
#include "channel.hpp"
#include "codes.hpp"
#include "json_io.hpp"
#include "search.hpp"
#include "sidon.hpp"
#include "version.hpp"

// One function per CLI subcommand. The tool only parses flags and prints
// what these return, so library and CLI output cannot drift apart.

namespace mscodes::commands {

/// Which code a command talks about. Unset q/t/a mean "not given".
struct CodeSpec {
  std::string kind;  // binary | summod | cyclic | ternary | parity
  count_t n = 0;
  std::optional<std::size_t> q;
  std::optional<count_t> t;
  std::optional<std::uint64_t> a;  // empty: best residue
};

using AnyCode = std::variant<WeightedCongruenceCode, ParityCode>;

namespace detail {

template <class T>
T require(const std::optional<T>& v, const char* what, const std::string& kind) {
  if (!v) throw invalid_parameter(kind + " code needs --" + what);
  return *v;
}

template <class T>
void require_fixed(const std::optional<T>& v, T expected, const char* what, const std::string& kind) {
  if (v && *v != expected)
    throw invalid_parameter(kind + " code has " + what + "=" + std::to_string(expected) + ", got " +
                            std::to_string(*v));
}

inline WeightedCongruenceCode pick_residue(const WeightedCongruenceCode& family, std::optional<std::uint64_t> a) {
  return a ? family.with_residue(*a) : at_best_residue(family);
}

}  // namespace detail

inline AnyCode build_code(const CodeSpec& s) {
  if (s.kind == "binary") {
    detail::require_fixed<std::size_t>(s.q, 2, "q", s.kind);
    return detail::pick_residue(make_binary(s.n, detail::require(s.t, "t", s.kind), 0), s.a);
  }
  if (s.kind == "summod") {
    detail::require_fixed<count_t>(s.t, 1, "t", s.kind);
    return detail::pick_residue(make_sum_mod_q(s.n, detail::require(s.q, "q", s.kind), 0), s.a);
  }
  if (s.kind == "cyclic")
    return detail::pick_residue(
        make_cyclic(s.n, detail::require(s.q, "q", s.kind), detail::require(s.t, "t", s.kind), 0), s.a);
  if (s.kind == "ternary") {
    detail::require_fixed<std::size_t>(s.q, 3, "q", s.kind);
    return detail::pick_residue(make_ternary_variant(s.n, detail::require(s.t, "t", s.kind), 0), s.a);
  }
  if (s.kind == "parity") {
    detail::require_fixed<count_t>(s.t, 1, "t", s.kind);
    if (s.a) throw invalid_parameter("parity code takes no residue");
    return ParityCode(s.n, detail::require(s.q, "q", s.kind));
  }
  throw invalid_parameter("unknown code kind '" + s.kind + "' (binary, summod, cyclic, ternary, parity)");
}

inline Json describe(const AnyCode& code) {
  Json j;
  if (const auto* p = std::get_if<ParityCode>(&code)) {
    const BigInt size = p->size();
    j["kind"] = "parity";
    j["n"] = p->n();
    j["q"] = p->q();
    j["t"] = p->t();
    j["size"] = to_json(size);
    j["space_size"] = to_json(space_size(p->n(), p->q()));
    j["redundancy"] = redundancy(p->n(), p->q(), size);
    return j;
  }
  const auto& c = std::get<WeightedCongruenceCode>(code);
  const auto sizes = c.class_sizes();
  bool equal = true;
  Json classes = Json::array();
  for (const auto& s : sizes) {
    classes.push_back(to_json(s));
    equal = equal && s == sizes.front();
  }
  Json weights = Json::array();
  for (auto w : c.signed_weights()) weights.push_back(w);
  j["kind"] = to_string(c.kind());
  j["n"] = c.n();
  j["q"] = c.q();
  j["t"] = c.t();
  j["weights"] = std::move(weights);
  j["modulus"] = c.modulus();
  j["residue"] = c.residue();
  j["size"] = to_json(c.size());
  j["space_size"] = to_json(space_size(c.n(), c.q()));
  j["class_sizes"] = std::move(classes);
  j["equal_partition"] = equal;
  j["redundancy"] = redundancy(c.n(), c.q(), c.size());
  j["nominal_redundancy"] = std::log(static_cast<double>(c.modulus())) / std::log(static_cast<double>(c.q()));
  return j;
}

inline Json version() {
  Json j;
  j["library"] = kLibraryVersion;
  j["format"] = kFormatVersion;
  return j;
}

/// Applicable bounds by name, plus the best one. With `all`, inapplicable
/// bounds appear as "n/a" and the non-bound sphere-packing radius-t value
/// and (for q=3, t=1) the ternary lower/upper pair are included.
inline Json bounds(count_t n, std::size_t q, count_t t, bool all = false) {
  Json values;
  for (const auto& r : upper_bounds(n, q, t))
    if (all || r.applicable()) values[r.name] = optional_json(r.value);
  if (all) {
    values["sphere_packing_radius_t"] = to_json(*sphere_packing_bound(n, q, t).value);
    if (q == 3 && t == 1) {
      const auto tb = ternary_single_deletion_bounds(n);
      values["ternary_lower"] = to_json(tb.lower);
      values["ternary_upper"] = to_json(tb.upper);
    }
  }
  const auto best = best_upper_bound(n, q, t);
  Json j;
  j["n"] = n;
  j["q"] = q;
  j["t"] = t;
  j["bounds"] = std::move(values);
  j["best"] = {{"name", best.name}, {"value", optional_json(best.value)}};
  return j;
}

inline Json construct(const CodeSpec& spec) { return describe(build_code(spec)); }

inline Json encode(const CodeSpec& spec, const BigInt& index) {
  const auto code = build_code(spec);
  Json j;
  j["index"] = to_json(index);
  j["codeword"] = std::visit([&](const auto& c) { return to_json(c.encode(index)); }, code);
  return j;
}

inline Json decode(const CodeSpec& spec, const MultisetWord& received) {
  const auto code = build_code(spec);
  const auto r = std::visit([&](const auto& c) { return c.decode(received); }, code);
  Json j;
  j["received"] = to_json(received);
  j["codeword"] = to_json(r.codeword);
  j["pattern"] = to_json(r.pattern);
  j["index"] = to_json(std::visit([&](const auto& c) { return c.index_of(r.codeword); }, code));
  return j;
}

inline Json sidon(std::uint64_t g, std::vector<std::uint64_t> elements, count_t t, std::uint64_t cap) {
  const BtSetCandidate cand(g, std::move(elements));
  const auto check = check_bt_set(cand, t, cap);
  Json els = Json::array();
  for (auto e : cand.elements()) els.push_back(e);
  Json j;
  j["g"] = g;
  j["elements"] = std::move(els);
  j["t"] = t;
  j["is_bt_set"] = check.injective;
  j["collision"] = to_json(check)["collision"];
  return j;
}

inline Json search(count_t n, std::size_t q, count_t t, std::uint64_t vertex_cap, bool emit_witness) {
  SearchOptions opts;
  opts.vertex_cap = vertex_cap;
  return to_json(max_code_exact(n, q, t, opts), emit_witness);
}

struct SimulateOptions {
  ChannelMode mode = ChannelMode::exhaustive;
  std::optional<count_t> t_max;  // defaults to the code's t
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  unsigned workers = 1;
  std::uint64_t cap = kDefaultEnumerationCap;
};

inline Json simulate(const CodeSpec& spec, const SimulateOptions& o) {
  const auto code = build_code(spec);
  return std::visit(
      [&](const auto& c) {
        ChannelConfig cfg;
        cfg.t_max = o.t_max.value_or(c.t());
        cfg.mode = o.mode;
        cfg.seed = o.seed;
        cfg.trials = o.trials;
        cfg.workers = o.workers;
        const auto report = o.mode == ChannelMode::exhaustive ? roundtrip_exhaustive(c, cfg.t_max, o.cap)
                                                              : roundtrip_random(c, cfg);
        Json j = describe(code);
        j.erase("class_sizes");
        j["mode"] = o.mode == ChannelMode::exhaustive ? "exhaustive" : "random";
        j["t_max"] = cfg.t_max;
        if (o.mode == ChannelMode::random) j["seed"] = o.seed;
        const Json body = to_json(report);
        for (const auto& [k, v] : body.items()) j[k] = v;
        return j;
      },
      code);
}

/// Parses a code given either as {"t": .., "words": [...]} or as a bare list
/// of words; an explicit `t` overrides the document.
inline Json verify(const Json& doc, std::optional<count_t> t, std::uint64_t cap) {
  const Json* list = &doc;
  if (doc.is_object()) {
    if (!t && doc.contains("t")) {
      if (!doc["t"].is_number_unsigned()) throw invalid_parameter("\"t\" must be a non-negative integer");
      t = doc["t"].get<count_t>();
    }
    if (!doc.contains("words")) throw invalid_parameter("code document needs a \"words\" list");
    list = &doc["words"];
  }
  if (!list->is_array()) throw invalid_parameter("a code is a JSON list of words");
  if (!t) throw invalid_parameter("verify needs t");
  std::vector<MultisetWord> words;
  for (const auto& w : *list) words.push_back(word_from_json(w));
  const ExplicitCode code(std::move(words), *t);
  return to_json(verify_code(code.words(), *t, cap));
}

/// Flattens a JSON document to `key,value` rows. Nested keys are joined by
/// '.', arrays of scalars become one ';'-separated cell.
inline std::string to_csv(const Json& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto walk = [&](auto& self, const Json& v, const std::string& key) -> void {
    if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it) self(self, it.value(), key.empty() ? it.key() : key + "." + it.key());
    } else if (v.is_array()) {
      const bool flat = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
      if (flat) {
        std::string cell;
        for (std::size_t i = 0; i < v.size(); ++i) cell += (i ? ";" : "") + scalar(v[i]);
        rows.emplace_back(key, cell);
      } else {
        for (std::size_t i = 0; i < v.size(); ++i) self(self, v[i], key + "." + std::to_string(i));
      }
    } else {
      rows.emplace_back(key, scalar(v));
    }
  };
  walk(walk, doc, "");
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  };
  std::string out = "key,value\n";
  for (const auto& [k, v] : rows) out += quote(k) + "," + quote(v) + "\n";
  return out;
}

enum class Format { json, csv };

/// Exactly what the CLI writes to stdout.
inline std::string render(const Json& doc, Format f) {
  return f == Format::csv ? to_csv(doc) : doc.dump(2) + "\n";
}

}  // namespace mscodes::commands

#endif  // MSCODES_COMMANDS_HPP
