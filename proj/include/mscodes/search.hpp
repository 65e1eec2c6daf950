#ifndef MSCODES_SEARCH_HPP
#define MSCODES_SEARCH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "codes.hpp"
#include "errors.hpp"
#include "multiset.hpp"

namespace mscodes {

/// Two words are confusable under t deletions iff d(a,b) <= t.
inline bool confusable(const MultisetWord& a, const MultisetWord& b, count_t t) {
  return deletion_distance(a, b) <= t;
}

/// Oracle form: enumerates the channel outputs of both words (all
/// sub-multisets of size >= n-t) and looks for a common one.
inline bool confusable_by_outputs(const MultisetWord& a, const MultisetWord& b, count_t t) {
  detail::require_same_shape(a, b);
  std::set<MultisetWord> outputs;
  for_each_submultiset(a, t, [&](std::span<const count_t> e) {
    outputs.insert(subtract(a, MultisetWord(std::vector<count_t>(e.begin(), e.end()))));
    return true;
  });
  bool shared = false;
  for_each_submultiset(b, t, [&](std::span<const count_t> e) {
    shared = outputs.contains(subtract(b, MultisetWord(std::vector<count_t>(e.begin(), e.end()))));
    return !shared;
  });
  return shared;
}

namespace detail {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  std::size_t size() const noexcept { return bits_; }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  /// Lowest set index, or size() if none.
  std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return bits_;
  }
  std::size_t next(std::size_t i) const {
    ++i;
    if (i >= bits_) return bits_;
    std::size_t k = i >> 6;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
    for (;;) {
      if (w) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
      if (++k >= words_.size()) return bits_;
      w = words_[k];
    }
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace detail

/// The confusability graph on S_{n,q}: vertices are words by rank, edges join
/// words at deletion distance <= t. Codes are exactly its independent sets.
class ConflictGraph {
 public:
  ConflictGraph(count_t n, std::size_t q, count_t t, std::uint64_t vertex_cap = 5000) : n_(n), q_(q), t_(t) {
    const BigInt size = space_size(n, q);
    if (size > vertex_cap)
      throw resource_limit("|S_{n,q}| = " + to_decimal(size) + " exceeds vertex cap " + std::to_string(vertex_cap));
    vertices_ = enumerate_space(n, q, vertex_cap);
    const std::size_t v = vertices_.size();
    adjacency_.assign(v, detail::Bitset(v));
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = i + 1; j < v; ++j)
        if (confusable(vertices_[i], vertices_[j], t)) {
          adjacency_[i].set(j);
          adjacency_[j].set(i);
        }
  }

  count_t n() const noexcept { return n_; }
  std::size_t q() const noexcept { return q_; }
  count_t t() const noexcept { return t_; }
  std::size_t order() const noexcept { return vertices_.size(); }
  const MultisetWord& vertex(std::size_t i) const { return vertices_.at(i); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_.at(i).test(j); }
  std::size_t degree(std::size_t i) const { return adjacency_.at(i).count(); }
  const detail::Bitset& neighbours(std::size_t i) const { return adjacency_.at(i); }

 private:
  count_t n_;
  std::size_t q_;
  count_t t_;
  std::vector<MultisetWord> vertices_;
  std::vector<detail::Bitset> adjacency_;
};

struct SearchOptions {
  std::uint64_t vertex_cap = 5000;
  /// Branch-and-bound node budget; 0 means unlimited.
  std::uint64_t node_limit = 0;
};

struct SearchResult {
  count_t n = 0;
  std::size_t q = 0;
  count_t t = 0;
  std::uint64_t optimum = 0;
  ExplicitCode witness;
  bool exact = false;
  std::uint64_t nodes_explored = 0;
};

namespace detail {

/// Maximum clique in the compatibility graph (complement of the conflict
/// graph) with greedy-colouring bounds.
class CliqueSearch {
 public:
  CliqueSearch(std::vector<Bitset> compat, std::uint64_t node_limit)
      : compat_(std::move(compat)), node_limit_(node_limit) {}

  std::uint64_t nodes() const noexcept { return nodes_; }
  bool aborted() const noexcept { return aborted_; }

  /// Largest clique; vertices are tried in the bitset order.
  std::vector<std::size_t> maximum(std::vector<std::size_t> seed) {
    best_ = std::move(seed);
    Bitset all(compat_.size());
    for (std::size_t i = 0; i < compat_.size(); ++i) all.set(i);
    std::vector<std::size_t> current;
    expand(current, all);
    return best_;
  }

  /// Lexicographically first clique of the given size, if one exists.
  std::optional<std::vector<std::size_t>> first_of_size(std::size_t k) {
    Bitset all(compat_.size());
    for (std::size_t i = 0; i < compat_.size(); ++i) all.set(i);
    std::vector<std::size_t> chosen;
    if (first_rec(chosen, all, k)) return chosen;
    return std::nullopt;
  }

 private:
  /// Greedy colouring of p in index order; returns vertices sorted by colour
  /// and each one's colour (1-based).
  void colour_sort(const Bitset& p, std::vector<std::size_t>& order, std::vector<std::size_t>& colour) const {
    order.clear();
    colour.clear();
    Bitset uncoloured = p;
    std::size_t k = 0;
    while (!uncoloured.none()) {
      ++k;
      Bitset avail = uncoloured;
      for (std::size_t v = avail.first(); v < avail.size(); v = avail.next(v)) {
        if (!avail.test(v)) continue;
        order.push_back(v);
        colour.push_back(k);
        uncoloured.reset(v);
        avail.reset(v);
        avail.and_not(compat_[v]);  // same colour class must be pairwise incompatible
      }
    }
  }

  std::size_t colour_bound(const Bitset& p) const {
    std::vector<std::size_t> order, colour;
    colour_sort(p, order, colour);
    return colour.empty() ? 0 : colour.back();
  }

  bool budget_exhausted() {
    ++nodes_;
    if (node_limit_ && nodes_ > node_limit_) aborted_ = true;
    return aborted_;
  }

  void expand(std::vector<std::size_t>& current, Bitset p) {
    if (budget_exhausted()) return;
    std::vector<std::size_t> order, colour;
    colour_sort(p, order, colour);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current.size() + colour[idx] <= best_.size()) return;
      const std::size_t v = order[idx];
      current.push_back(v);
      Bitset np = p;
      np &= compat_[v];
      if (np.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, np);
      }
      current.pop_back();
      p.reset(v);
      if (aborted_) return;
    }
  }

  bool first_rec(std::vector<std::size_t>& chosen, Bitset p, std::size_t k) {
    if (chosen.size() == k) return true;
    if (budget_exhausted()) return false;
    const std::size_t need = k - chosen.size();
    for (std::size_t v = p.first(); v < p.size(); v = p.next(v)) {
      if (p.count() < need || colour_bound(p) < need) return false;
      chosen.push_back(v);
      Bitset np = p;
      np &= compat_[v];
      np.reset(v);
      if (first_rec(chosen, np, k)) return true;
      chosen.pop_back();
      if (aborted_) return false;
      p.reset(v);
    }
    return false;
  }

  std::vector<Bitset> compat_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::size_t> best_;
};

/// Greedy lexicode over S_{n,q}: keep each word (in rank order) that is far
/// from everything kept so far. Stops after `work` distance evaluations.
inline std::vector<MultisetWord> greedy_lexicode(count_t n, std::size_t q, count_t t, std::uint64_t work) {
  std::vector<MultisetWord> kept;
  std::uint64_t spent = 0;
  for_each_word(n, q, [&](std::span<const count_t> c) {
    MultisetWord w(std::vector<count_t>(c.begin(), c.end()));
    bool ok = true;
    for (const auto& k : kept) {
      ++spent;
      if (deletion_distance(w, k) <= t) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(std::move(w));
    return spent < work;
  });
  return kept;
}

}  // namespace detail

/// Exact S_q(n,t) by maximum independent set in the confusability graph.
///
/// The reported witness is canonical: the lexicographically first optimal
/// code when codewords are listed by rank. If the space exceeds the vertex
/// cap, or the node budget runs out, the best code found is returned with
/// exact = false.
inline SearchResult max_code_exact(count_t n, std::size_t q, count_t t, const SearchOptions& opts = {}) {
  if (q < 2) throw invalid_parameter("search needs q >= 2");
  if (n < 1) throw invalid_parameter("search needs n >= 1");

  if (space_size(n, q) > opts.vertex_cap) {
    auto words = detail::greedy_lexicode(n, q, t, 200'000'000);
    const auto size = words.size();
    return SearchResult{n, q, t, size, ExplicitCode(std::move(words), t), false, 0};
  }

  const ConflictGraph graph(n, q, t, opts.vertex_cap);
  const std::size_t v = graph.order();

  // First pass: vertices relabelled by decreasing compatibility degree.
  std::vector<std::size_t> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return graph.degree(a) < graph.degree(b); });
  std::vector<std::size_t> pos(v);
  for (std::size_t i = 0; i < v; ++i) pos[perm[i]] = i;

  auto compat_graph = [&](auto label) {
    std::vector<detail::Bitset> compat(v, detail::Bitset(v));
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = 0; j < v; ++j)
        if (i != j && !graph.adjacent(i, j)) compat[label(i)].set(label(j));
    return compat;
  };

  detail::CliqueSearch fast(compat_graph([&](std::size_t i) { return pos[i]; }), opts.node_limit);
  const auto found = fast.maximum({});
  std::uint64_t nodes = fast.nodes();

  std::vector<std::size_t> ranks;
  bool exact = !fast.aborted();
  if (exact) {
    detail::CliqueSearch canon(compat_graph([](std::size_t i) { return i; }), opts.node_limit);
    auto first = canon.first_of_size(found.size());
    nodes += canon.nodes();
    if (first) {
      ranks = std::move(*first);
    } else {
      exact = false;  // canonical pass ran out of budget
    }
  }
  if (ranks.empty()) {
    for (auto p : found) ranks.push_back(perm[p]);
    std::sort(ranks.begin(), ranks.end());
  }

  std::vector<MultisetWord> words;
  for (auto r : ranks) words.push_back(graph.vertex(r));
  if (words.empty()) words.push_back(graph.vertex(0));
  const std::uint64_t optimum = words.size();
  return SearchResult{n, q, t, optimum, ExplicitCode(std::move(words), t), exact, nodes};
}

struct VerifyReport {
  std::size_t size = 0;
  count_t t = 0;
  std::optional<count_t> min_distance;
  bool distance_ok = false;       // d(C) >= t+1
  bool outputs_disjoint = false;  // exhaustive channel outputs pairwise disjoint
  bool agree = false;
  bool passed = false;
};

/// Checks a code both by minimum distance and by exhaustive comparison of the
/// outputs reachable with at most t deletions.
inline VerifyReport verify_code(std::span<const MultisetWord> words, count_t t,
                                std::uint64_t cap = kDefaultEnumerationCap) {
  VerifyReport r;
  r.size = words.size();
  r.t = t;
  r.min_distance = minimum_distance(words);
  r.distance_ok = !r.min_distance || *r.min_distance >= t + 1;

  std::map<MultisetWord, std::size_t> owner;
  bool disjoint = true;
  std::uint64_t visited = 0;
  for (std::size_t i = 0; i < words.size() && disjoint; ++i) {
    std::set<MultisetWord> mine;
    for_each_submultiset(words[i], t, [&](std::span<const count_t> e) {
      if (++visited > cap) throw resource_limit("output enumeration exceeds cap");
      mine.insert(subtract(words[i], MultisetWord(std::vector<count_t>(e.begin(), e.end()))));
      return true;
    });
    for (const auto& out : mine) {
      auto [it, fresh] = owner.try_emplace(out, i);
      if (!fresh) {
        disjoint = false;
        break;
      }
    }
  }
  r.outputs_disjoint = disjoint;
  r.agree = r.distance_ok == r.outputs_disjoint;
  r.passed = r.agree && r.distance_ok;
  return r;
}

inline VerifyReport verify_code(const ExplicitCode& code, count_t t) { return verify_code(code.words(), t); }

}  // namespace mscodes

#endif  // MSCODES_SEARCH_HPP
