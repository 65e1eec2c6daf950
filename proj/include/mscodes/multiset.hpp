#ifndef MSCODES_MULTISET_HPP
#define MSCODES_MULTISET_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace mscodes {

using count_t = std::uint64_t;
using symbol_t = std::size_t;

/// Upper limit on the number of words any enumeration will materialize.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// A multiset over the alphabet {0, ..., q-1}, stored as its multiplicity
/// vector. counts()[i] is the number of copies of symbol i; n() is the
/// cardinality. Ordering is lexicographic on the counts vector.
class MultisetWord {
 public:
  explicit MultisetWord(std::vector<count_t> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) throw invalid_parameter("a word needs an alphabet of size q >= 1");
    n_ = std::accumulate(counts_.begin(), counts_.end(), count_t{0});
  }

  MultisetWord(std::initializer_list<count_t> counts) : MultisetWord(std::vector<count_t>(counts)) {}

  static MultisetWord empty(std::size_t q) { return MultisetWord(std::vector<count_t>(q, 0)); }

  /// Builds a word from an unordered list of symbols.
  static MultisetWord from_symbols(std::size_t q, std::span<const symbol_t> symbols) {
    std::vector<count_t> c(q, 0);
    for (symbol_t s : symbols) {
      if (s >= q) throw invalid_parameter("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(q));
      ++c[s];
    }
    return MultisetWord(std::move(c));
  }

  std::size_t q() const noexcept { return counts_.size(); }
  count_t n() const noexcept { return n_; }
  std::span<const count_t> counts() const noexcept { return counts_; }
  count_t operator[](std::size_t i) const { return counts_.at(i); }

  /// Expands the word back into a sorted symbol list.
  std::vector<symbol_t> symbols() const {
    std::vector<symbol_t> out;
    out.reserve(n_);
    for (std::size_t i = 0; i < counts_.size(); ++i) out.insert(out.end(), counts_[i], i);
    return out;
  }

  friend bool operator==(const MultisetWord&, const MultisetWord&) = default;
  friend auto operator<=>(const MultisetWord& a, const MultisetWord& b) { return a.counts_ <=> b.counts_; }

 private:
  std::vector<count_t> counts_;
  count_t n_ = 0;
};

/// A multiset of deleted symbols.
class DeletionPattern : public MultisetWord {
 public:
  using MultisetWord::MultisetWord;
  explicit DeletionPattern(MultisetWord w) : MultisetWord(std::move(w)) {}
  static DeletionPattern empty(std::size_t q) { return DeletionPattern(MultisetWord::empty(q)); }
};

namespace detail {

inline void require_same_alphabet(const MultisetWord& a, const MultisetWord& b) {
  if (a.q() != b.q()) throw alphabet_mismatch(a.q(), b.q());
}

inline void require_same_shape(const MultisetWord& a, const MultisetWord& b) {
  require_same_alphabet(a, b);
  if (a.n() != b.n())
    throw cardinality_mismatch("cardinality mismatch: n=" + std::to_string(a.n()) + " vs n=" + std::to_string(b.n()));
}

template <class Op>
MultisetWord zip_counts(const MultisetWord& a, const MultisetWord& b, Op op) {
  require_same_alphabet(a, b);
  std::vector<count_t> c(a.q());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = op(a.counts()[i], b.counts()[i]);
  return MultisetWord(std::move(c));
}

}  // namespace detail

inline MultisetWord intersect(const MultisetWord& a, const MultisetWord& b) {
  return detail::zip_counts(a, b, [](count_t x, count_t y) { return std::min(x, y); });
}

/// Multiset difference; multiplicities are clamped at zero.
inline MultisetWord subtract(const MultisetWord& a, const MultisetWord& b) {
  return detail::zip_counts(a, b, [](count_t x, count_t y) { return x > y ? x - y : count_t{0}; });
}

inline MultisetWord union_add(const MultisetWord& a, const MultisetWord& b) {
  return detail::zip_counts(a, b, [](count_t x, count_t y) { return x + y; });
}

/// True iff a is a sub-multiset of b.
inline bool is_submultiset(const MultisetWord& a, const MultisetWord& b) {
  detail::require_same_alphabet(a, b);
  for (std::size_t i = 0; i < a.q(); ++i)
    if (a.counts()[i] > b.counts()[i]) return false;
  return true;
}

/// n - |a ∩ b|.
inline count_t deletion_distance(const MultisetWord& a, const MultisetWord& b) {
  detail::require_same_shape(a, b);
  return a.n() - intersect(a, b).n();
}

/// Half the l1 distance between the multiplicity vectors.
inline count_t l1_distance(const MultisetWord& a, const MultisetWord& b) {
  detail::require_same_shape(a, b);
  count_t total = 0;
  for (std::size_t i = 0; i < a.q(); ++i) {
    const count_t x = a.counts()[i], y = b.counts()[i];
    total += x > y ? x - y : y - x;
  }
  return total / 2;  // even whenever cardinalities agree
}

/// |S_{n,q}| = C(n+q-1, q-1).
inline BigInt space_size(count_t n, std::size_t q) {
  if (q == 0) throw invalid_parameter("alphabet size must be >= 1");
  return binomial(n + q - 1, q - 1);
}

/// Visits every word of S_{n,q} in lexicographic order of counts. The visitor
/// receives a view that is only valid during the call; return false to stop.
template <class Visitor>
void for_each_word(count_t n, std::size_t q, Visitor&& visit) {
  if (q == 0) throw invalid_parameter("alphabet size must be >= 1");
  std::vector<count_t> c(q, 0);
  c[q - 1] = n;
  for (;;) {
    if (!visit(std::span<const count_t>(c))) return;
    if (q == 1) return;
    // Successor: rightmost pivot j < q-1 with mass after it gets bumped,
    // the remaining mass moves to the last coordinate.
    std::size_t j = q - 2;
    count_t tail = c[q - 1];
    while (tail == 0) {
      if (j == 0) return;
      tail += c[j];
      --j;
    }
    ++c[j];
    for (std::size_t k = j + 1; k + 1 < q; ++k) c[k] = 0;
    c[q - 1] = tail - 1;
  }
}

/// All words of S_{n,q} in lexicographic order of counts.
inline std::vector<MultisetWord> enumerate_space(count_t n, std::size_t q, std::uint64_t cap = kDefaultEnumerationCap) {
  const BigInt size = space_size(n, q);
  if (size > cap)
    throw resource_limit("|S_{n,q}| = " + to_decimal(size) + " exceeds enumeration cap " + std::to_string(cap));
  std::vector<MultisetWord> out;
  out.reserve(size.convert_to<std::size_t>());
  for_each_word(n, q, [&](std::span<const count_t> c) {
    out.emplace_back(std::vector<count_t>(c.begin(), c.end()));
    return true;
  });
  return out;
}

namespace detail {

template <class Visitor>
bool bounded_compositions(std::span<const count_t> bound, std::size_t i, count_t remaining, std::vector<count_t>& e,
                          Visitor& visit) {
  if (i + 1 == bound.size()) {
    if (remaining > bound[i]) return true;
    e[i] = remaining;
    const bool go_on = visit(std::span<const count_t>(e));
    e[i] = 0;
    return go_on;
  }
  count_t tail_capacity = 0;
  for (std::size_t k = i + 1; k < bound.size(); ++k) tail_capacity += bound[k];
  const count_t lo = remaining > tail_capacity ? remaining - tail_capacity : 0;
  const count_t hi = std::min(remaining, bound[i]);
  for (count_t v = hi + 1; v-- > lo;) {
    e[i] = v;
    if (!bounded_compositions(bound, i + 1, remaining - v, e, visit)) {
      e[i] = 0;
      return false;
    }
  }
  e[i] = 0;
  return true;
}

}  // namespace detail

/// Visits every sub-multiset e of w with |e| <= max_size, ordered by size and
/// then by the sorted symbol list of e (so (1,0) comes before (0,1)). Return
/// false from the visitor to stop.
template <class Visitor>
void for_each_submultiset(const MultisetWord& w, count_t max_size, Visitor&& visit) {
  std::vector<count_t> e(w.q(), 0);
  const count_t top = std::min(max_size, w.n());
  for (count_t s = 0; s <= top; ++s)
    if (!detail::bounded_compositions(w.counts(), 0, s, e, visit)) return;
}

namespace detail {

/// Words of S_{rem, j+1} whose first coordinate is below c:
/// C(rem+j, j) - C(rem-c+j, j).
inline BigInt prefix_block(count_t rem, count_t c, std::size_t j) {
  return binomial(rem + j, j) - binomial(rem - c + j, j);
}

}  // namespace detail

/// Position of w in enumerate_space(w.n(), w.q()).
inline BigInt rank(const MultisetWord& w) {
  BigInt r = 0;
  count_t rem = w.n();
  for (std::size_t i = 0; i + 1 < w.q(); ++i) {
    const count_t c = w.counts()[i];
    r += detail::prefix_block(rem, c, w.q() - i - 1);
    rem -= c;
  }
  return r;
}

/// Inverse of rank.
inline MultisetWord unrank(const BigInt& index, count_t n, std::size_t q) {
  if (index < 0 || index >= space_size(n, q))
    throw index_out_of_range("rank " + to_decimal(index) + " outside S_{" + std::to_string(n) + "," + std::to_string(q) + "}");
  std::vector<count_t> c(q, 0);
  BigInt idx = index;
  count_t rem = n;
  for (std::size_t i = 0; i + 1 < q; ++i) {
    const std::size_t j = q - i - 1;
    // largest c with prefix_block(rem, c, j) <= idx
    count_t lo = 0, hi = rem;
    while (lo < hi) {
      const count_t mid = lo + (hi - lo + 1) / 2;
      if (detail::prefix_block(rem, mid, j) <= idx)
        lo = mid;
      else
        hi = mid - 1;
    }
    c[i] = lo;
    idx -= detail::prefix_block(rem, lo, j);
    rem -= lo;
  }
  c[q - 1] = rem;
  return MultisetWord(std::move(c));
}

}  // namespace mscodes

#endif  // MSCODES_MULTISET_HPP
