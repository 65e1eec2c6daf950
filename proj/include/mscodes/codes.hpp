#ifndef MSCODES_CODES_HPP
#define MSCODES_CODES_HPP

#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "multiset.hpp"
#include "sidon.hpp"

namespace mscodes {

enum class CodeKind { binary_congruence, sum_mod_q, cyclic_sidon, custom };

inline std::string_view to_string(CodeKind k) {
  switch (k) {
    case CodeKind::binary_congruence: return "binary_congruence";
    case CodeKind::sum_mod_q: return "sum_mod_q";
    case CodeKind::cyclic_sidon: return "cyclic_sidon";
    case CodeKind::custom: return "custom";
  }
  return "unknown";
}

struct DecodeResult {
  MultisetWord codeword;
  DeletionPattern pattern;
};

/// Instrumentation for decoders: one unit per symbol visited or digit produced.
struct DecodeStats {
  std::uint64_t operations = 0;
};

/// Natural log of a non-negative big integer (-inf for zero).
inline double log_big(const BigInt& v) {
  if (v <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 60) return std::log(v.convert_to<double>());
  const std::size_t shift = bits - 60;
  const BigInt top = v >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

/// log_q |S_{n,q}| - log_q M.
inline double redundancy(count_t n, std::size_t q, const BigInt& code_size) {
  return (log_big(space_size(n, q)) - log_big(code_size)) / std::log(static_cast<double>(q));
}

namespace detail {

inline constexpr std::uint64_t kTableEntryCap = 50'000'000;

/// ways(i, k, r): number of count vectors over symbols i..q-1 with total k and
/// weighted sum ≡ r (mod m). Filled by ways(i,k,r) = ways(i+1,k,r) + ways(i,k-1,r-w_i).
class ClassCountTable {
 public:
  ClassCountTable(count_t n, std::span<const std::uint64_t> weights, std::uint64_t m)
      : n_(n), q_(weights.size()), m_(m) {
    const BigInt entries = BigInt(q_) * (n_ + 1) * m_;
    if (entries > kTableEntryCap)
      throw resource_limit("class-count table needs " + to_decimal(entries) + " entries");
    data_.assign(static_cast<std::size_t>(q_ * (n_ + 1) * m_), BigInt(0));
    const std::size_t last = q_ - 1;
    for (count_t k = 0; k <= n_; ++k) at(last, k, mulmod(weights[last], k % m_, m_)) = 1;
    for (std::size_t i = last; i-- > 0;) {
      const std::uint64_t w = weights[i];
      for (count_t k = 0; k <= n_; ++k) {
        for (std::uint64_t r = 0; r < m_; ++r) {
          BigInt v = at(i + 1, k, r);
          if (k > 0) v += at(i, k - 1, (r + m_ - w) % m_);
          at(i, k, r) = std::move(v);
        }
      }
    }
  }

  const BigInt& ways(std::size_t i, count_t k, std::uint64_t r) const {
    return data_[(i * (n_ + 1) + k) * m_ + r];
  }

 private:
  BigInt& at(std::size_t i, count_t k, std::uint64_t r) { return data_[(i * (n_ + 1) + k) * m_ + r]; }

  count_t n_;
  std::size_t q_;
  std::uint64_t m_;
  std::vector<BigInt> data_;
};

struct LazyTable {
  std::once_flag once;
  std::shared_ptr<const ClassCountTable> table;
};

/// Residue -> pattern, one map per pattern size 0..t.
using PatternLookup = std::vector<std::unordered_map<std::uint64_t, std::vector<count_t>>>;

inline std::uint64_t checked_cyclic_modulus(count_t t, std::size_t q) {
  BigInt m = BigInt(t) * boost::multiprecision::pow(BigInt(t + 1), static_cast<unsigned>(q - 2)) + 1;
  auto v = to_u64(m);
  if (!v || *v > (std::uint64_t{1} << 62)) throw invalid_parameter("cyclic modulus overflows 62 bits");
  return *v;
}

}  // namespace detail

/// Congruence-class code {S in S_{n,q} : Σ_i f(i) x_i ≡ a (mod m)}.
///
/// Covers the binary weight construction, sum modulo q, the cyclic
/// Sidon-type construction with f(i) = (t+1)^i (i < q-1), f(q-1) = 0,
/// m = t(t+1)^(q-2) + 1, and custom weight vectors. Immutable; copies share
/// the lazily built class-count table.
class WeightedCongruenceCode {
 public:
  WeightedCongruenceCode(count_t n, std::size_t q, count_t t, std::vector<std::int64_t> weights, std::uint64_t m,
                         std::uint64_t a, CodeKind kind)
      : n_(n), q_(q), t_(t), m_(m), a_(a), kind_(kind), signed_weights_(std::move(weights)) {
    if (q_ < 2) throw invalid_parameter("codes need q >= 2");
    if (m_ < 1) throw invalid_parameter("modulus must be >= 1");
    if (signed_weights_.size() != q_) throw invalid_parameter("need exactly q weights");
    if (a_ >= m_) throw invalid_parameter("residue a=" + std::to_string(a_) + " must be < m=" + std::to_string(m_));
    weights_ = reduce_weights(signed_weights_, m_);
    validate_kind();
    cache_ = std::make_shared<detail::LazyTable>();
  }

  count_t n() const noexcept { return n_; }
  std::size_t q() const noexcept { return q_; }
  count_t t() const noexcept { return t_; }
  std::uint64_t modulus() const noexcept { return m_; }
  std::uint64_t residue() const noexcept { return a_; }
  CodeKind kind() const noexcept { return kind_; }
  /// Weights reduced into [0, m).
  std::span<const std::uint64_t> weights() const noexcept { return weights_; }
  std::span<const std::int64_t> signed_weights() const noexcept { return signed_weights_; }

  /// Same family, different residue.
  WeightedCongruenceCode with_residue(std::uint64_t a) const {
    if (a >= m_) throw invalid_parameter("residue a=" + std::to_string(a) + " must be < m=" + std::to_string(m_));
    WeightedCongruenceCode c = *this;
    c.a_ = a;
    return c;
  }

  std::uint64_t syndrome(const MultisetWord& w) const {
    if (w.q() != q_) throw alphabet_mismatch(w.q(), q_);
    return detail::weighted_sum(weights_, w.counts(), m_);
  }

  bool contains(const MultisetWord& w) const {
    require_codeword_shape(w);
    return syndrome(w) == a_;
  }

  /// Exact number of codewords (this residue class).
  BigInt size() const { return table().ways(0, n_, a_); }

  /// Sizes of all m residue classes, indexed by residue.
  std::vector<BigInt> class_sizes() const {
    const auto& tab = table();
    std::vector<BigInt> out;
    out.reserve(m_);
    for (std::uint64_t r = 0; r < m_; ++r) out.push_back(tab.ways(0, n_, r));
    return out;
  }

  /// The index-th codeword in lexicographic order of counts.
  MultisetWord encode(const BigInt& index) const {
    const auto& tab = table();
    if (index < 0 || index >= tab.ways(0, n_, a_))
      throw index_out_of_range("message index " + to_decimal(index) + " outside code of size " + to_decimal(size()));
    BigInt idx = index;
    std::vector<count_t> c(q_, 0);
    count_t rem = n_;
    std::uint64_t target = a_;
    for (std::size_t i = 0; i + 1 < q_; ++i) {
      for (count_t v = 0;; ++v) {
        const std::uint64_t r = (target + m_ - detail::mulmod(weights_[i], v % m_, m_)) % m_;
        const BigInt& block = tab.ways(i + 1, rem - v, r);
        if (idx < block) {
          c[i] = v;
          rem -= v;
          target = r;
          break;
        }
        idx -= block;
      }
    }
    c[q_ - 1] = rem;
    return MultisetWord(std::move(c));
  }

  /// Inverse of encode.
  BigInt index_of(const MultisetWord& codeword) const {
    if (!contains(codeword)) throw invalid_parameter("word is not a codeword");
    const auto& tab = table();
    BigInt idx = 0;
    count_t rem = n_;
    std::uint64_t target = a_;
    for (std::size_t i = 0; i + 1 < q_; ++i) {
      const count_t ci = codeword.counts()[i];
      for (count_t v = 0; v < ci; ++v) {
        const std::uint64_t r = (target + m_ - detail::mulmod(weights_[i], v % m_, m_)) % m_;
        idx += tab.ways(i + 1, rem - v, r);
      }
      target = (target + m_ - detail::mulmod(weights_[i], ci % m_, m_)) % m_;
      rem -= ci;
    }
    return idx;
  }

  /// Recovers the codeword and the deleted pattern from a received word of
  /// cardinality n - t' with t' <= t.
  DecodeResult decode(const MultisetWord& received, DecodeStats* stats = nullptr) const {
    if (received.q() != q_) throw alphabet_mismatch(received.q(), q_);
    if (stats) stats->operations += q_;
    return recover(std::vector<count_t>(received.counts().begin(), received.counts().end()), syndrome(received),
                   stats);
  }

  /// Same as decode(), for a channel output given as an unordered symbol
  /// stream; the syndrome is accumulated in one pass over the symbols.
  DecodeResult decode_symbols(std::span<const symbol_t> received, DecodeStats* stats = nullptr) const {
    std::vector<count_t> counts(q_, 0);
    std::uint64_t syn = 0;
    for (symbol_t s : received) {
      if (s >= q_) throw invalid_parameter("symbol " + std::to_string(s) + " outside alphabet");
      ++counts[s];
      syn += weights_[s];
      if (syn >= m_) syn -= m_;
    }
    if (stats) stats->operations += received.size();
    return recover(std::move(counts), syn, stats);
  }

 private:
  void require_codeword_shape(const MultisetWord& w) const {
    if (w.q() != q_) throw alphabet_mismatch(w.q(), q_);
    if (w.n() != n_)
      throw cardinality_mismatch("word has n=" + std::to_string(w.n()) + ", code has n=" + std::to_string(n_));
  }

  void validate_kind() {
    switch (kind_) {
      case CodeKind::binary_congruence:
        if (q_ != 2 || signed_weights_ != std::vector<std::int64_t>{0, 1} || m_ != t_ + 1 || t_ < 1)
          throw invalid_parameter("binary congruence code needs q=2, weights (0,1), m=t+1, t>=1");
        break;
      case CodeKind::sum_mod_q: {
        std::vector<std::int64_t> expect(q_);
        for (std::size_t i = 0; i < q_; ++i) expect[i] = static_cast<std::int64_t>(i);
        if (signed_weights_ != expect || m_ != q_ || t_ != 1)
          throw invalid_parameter("sum-mod-q code needs weights (0..q-1), m=q, t=1");
        break;
      }
      case CodeKind::cyclic_sidon: {
        if (t_ < 1) throw invalid_parameter("cyclic code needs t >= 1");
        if (m_ != detail::checked_cyclic_modulus(t_, q_)) throw invalid_parameter("cyclic code needs m = t(t+1)^(q-2)+1");
        std::uint64_t p = 1;
        for (std::size_t i = 0; i + 1 < q_; ++i) {
          if (weights_[i] != p % m_) throw invalid_parameter("cyclic code needs f(i) = (t+1)^i");
          if (i + 2 < q_) p *= (t_ + 1);
        }
        if (weights_[q_ - 1] != 0) throw invalid_parameter("cyclic code needs f(q-1) = 0");
        break;
      }
      case CodeKind::custom: {
        auto lookup = std::make_shared<detail::PatternLookup>(t_ + 1);
        const BigInt patterns = detail::multisets_up_to(q_, 0, t_);
        if (patterns > kDefaultEnumerationCap) throw resource_limit("too many deletion patterns to tabulate");
        for (count_t s = 0; s <= t_; ++s) {
          auto& table = (*lookup)[s];
          for_each_word(s, q_, [&](std::span<const count_t> e) {
            const auto f = detail::weighted_sum(weights_, e, m_);
            if (!table.try_emplace(f, e.begin(), e.end()).second)
              throw invalid_parameter("weights do not separate deletion patterns of size " + std::to_string(s));
            return true;
          });
        }
        lookup_ = std::move(lookup);
        break;
      }
    }
  }

  const detail::ClassCountTable& table() const {
    std::call_once(cache_->once, [this] {
      cache_->table = std::make_shared<const detail::ClassCountTable>(n_, weights_, m_);
    });
    return *cache_->table;
  }

  DecodeResult recover(std::vector<count_t> counts, std::uint64_t syn, DecodeStats* stats) const {
    count_t received_n = 0;
    for (auto c : counts) received_n += c;
    if (received_n > n_)
      throw cardinality_mismatch("received word larger than the code length");
    const count_t deleted = n_ - received_n;
    if (deleted > t_) throw too_many_deletions(deleted, t_);
    // F(E) = a - syndrome(received) mod m
    const std::uint64_t f = (a_ + m_ - syn) % m_;
    std::vector<count_t> e(q_, 0);
    std::uint64_t steps = 0;
    switch (kind_) {
      case CodeKind::binary_congruence:
        // f is the number of deleted ones; the rest were zeros
        if (f > deleted) throw decode_failure("syndrome implies more deleted ones than deletions");
        e[1] = f;
        e[0] = deleted - f;
        steps = 1;
        break;
      case CodeKind::sum_mod_q:
        if (deleted == 1) e[f] = 1;
        steps = 1;
        break;
      case CodeKind::cyclic_sidon: {
        // greedy base-(t+1) expansion; digit i is the multiplicity of symbol i
        const std::uint64_t base = t_ + 1;
        std::uint64_t rest = f;
        count_t used = 0;
        for (std::size_t i = 0; i + 2 < q_; ++i) {
          e[i] = rest % base;
          rest /= base;
          used += e[i];
          ++steps;
        }
        e[q_ - 2] = rest;
        used += rest;
        ++steps;
        if (used > deleted) throw decode_failure("syndrome expansion exceeds the number of deletions");
        e[q_ - 1] += deleted - used;
        break;
      }
      case CodeKind::custom: {
        const auto& table = (*lookup_)[deleted];
        auto it = table.find(f);
        if (it == table.end()) throw decode_failure("no deletion pattern matches the syndrome");
        e = it->second;
        steps = 1;
        break;
      }
    }
    for (std::size_t i = 0; i < q_; ++i) counts[i] += e[i];
    if (stats) stats->operations += steps + q_;
    MultisetWord codeword(std::move(counts));
    if (detail::weighted_sum(weights_, codeword.counts(), m_) != a_)
      throw decode_failure("recovered word is not a codeword");
    return {std::move(codeword), DeletionPattern(MultisetWord(std::move(e)))};
  }

  count_t n_;
  std::size_t q_;
  count_t t_;
  std::uint64_t m_;
  std::uint64_t a_;
  CodeKind kind_;
  std::vector<std::int64_t> signed_weights_;
  std::vector<std::uint64_t> weights_;
  std::shared_ptr<detail::LazyTable> cache_;
  std::shared_ptr<const detail::PatternLookup> lookup_;
};

/// Binary code {S : w(S) ≡ a (mod t+1)}, w = number of ones.
inline WeightedCongruenceCode make_binary(count_t n, count_t t, std::uint64_t a) {
  if (t < 1) throw invalid_parameter("binary code needs t >= 1");
  return WeightedCongruenceCode(n, 2, t, {0, 1}, t + 1, a, CodeKind::binary_congruence);
}

/// Single-deletion code {S : Σ s ≡ a (mod q)}.
inline WeightedCongruenceCode make_sum_mod_q(count_t n, std::size_t q, std::uint64_t a) {
  if (q < 2) throw invalid_parameter("sum-mod-q code needs q >= 2");
  std::vector<std::int64_t> w(q);
  for (std::size_t i = 0; i < q; ++i) w[i] = static_cast<std::int64_t>(i);
  return WeightedCongruenceCode(n, q, 1, std::move(w), q, a, CodeKind::sum_mod_q);
}

inline std::uint64_t cyclic_modulus(count_t t, std::size_t q) {
  if (q < 2) throw invalid_parameter("cyclic code needs q >= 2");
  if (t < 1) throw invalid_parameter("cyclic code needs t >= 1");
  return detail::checked_cyclic_modulus(t, q);
}

inline WeightedCongruenceCode make_cyclic(count_t n, std::size_t q, count_t t, std::uint64_t a) {
  const std::uint64_t m = cyclic_modulus(t, q);
  std::vector<std::int64_t> w(q, 0);
  std::int64_t p = 1;
  for (std::size_t i = 0; i + 1 < q; ++i) {
    w[i] = p;
    if (i + 2 < q) p *= static_cast<std::int64_t>(t + 1);
  }
  return WeightedCongruenceCode(n, q, t, std::move(w), m, a, CodeKind::cyclic_sidon);
}

/// Arbitrary weights; accepted only if the deletion syndrome separates
/// patterns of every size <= t.
inline WeightedCongruenceCode make_custom(count_t n, std::size_t q, count_t t, std::vector<std::int64_t> weights,
                                          std::uint64_t m, std::uint64_t a) {
  return WeightedCongruenceCode(n, q, t, std::move(weights), m, a, CodeKind::custom);
}

/// Ternary weights (0, -1, t) modulo t^2 + t + 1.
inline WeightedCongruenceCode make_ternary_variant(count_t n, count_t t, std::uint64_t a) {
  if (t < 1) throw invalid_parameter("ternary variant needs t >= 1");
  return make_custom(n, 3, t, {0, -1, static_cast<std::int64_t>(t)}, t * t + t + 1, a);
}

struct ResidueChoice {
  std::uint64_t residue = 0;
  BigInt size;
};

/// Residue with the largest class; ties go to the smallest residue.
inline ResidueChoice best_residue(const WeightedCongruenceCode& family) {
  const auto sizes = family.class_sizes();
  ResidueChoice best{0, sizes[0]};
  for (std::uint64_t r = 1; r < sizes.size(); ++r)
    if (sizes[r] > best.size) best = {r, sizes[r]};
  return best;
}

inline WeightedCongruenceCode at_best_residue(const WeightedCongruenceCode& family) {
  return family.with_residue(best_residue(family).residue);
}

/// All-even-multiplicity code; corrects a single deletion.
class ParityCode {
 public:
  ParityCode(count_t n, std::size_t q) : n_(n), q_(q) {
    if (q_ < 2) throw invalid_parameter("parity code needs q >= 2");
    if (n_ % 2 != 0) throw invalid_parameter("parity code needs even n");
  }

  count_t n() const noexcept { return n_; }
  std::size_t q() const noexcept { return q_; }
  count_t t() const noexcept { return 1; }

  bool contains(const MultisetWord& w) const {
    if (w.q() != q_) throw alphabet_mismatch(w.q(), q_);
    if (w.n() != n_) throw cardinality_mismatch("word has wrong cardinality");
    for (auto c : w.counts())
      if (c % 2 != 0) return false;
    return true;
  }

  /// C(n/2 + q - 1, q - 1).
  BigInt size() const { return space_size(n_ / 2, q_); }

  MultisetWord encode(const BigInt& index) const {
    if (index < 0 || index >= size()) throw index_out_of_range("message index outside parity code");
    const MultisetWord half = unrank(index, n_ / 2, q_);
    std::vector<count_t> c(half.counts().begin(), half.counts().end());
    for (auto& x : c) x *= 2;
    return MultisetWord(std::move(c));
  }

  BigInt index_of(const MultisetWord& codeword) const {
    if (!contains(codeword)) throw invalid_parameter("word is not a codeword");
    std::vector<count_t> c(codeword.counts().begin(), codeword.counts().end());
    for (auto& x : c) x /= 2;
    return rank(MultisetWord(std::move(c)));
  }

  /// One deletion leaves exactly one odd coordinate: the deleted symbol.
  DecodeResult decode(const MultisetWord& received, DecodeStats* stats = nullptr) const {
    if (received.q() != q_) throw alphabet_mismatch(received.q(), q_);
    if (received.n() > n_) throw cardinality_mismatch("received word larger than the code length");
    const count_t deleted = n_ - received.n();
    if (deleted > 1) throw too_many_deletions(deleted, 1);
    std::vector<count_t> c(received.counts().begin(), received.counts().end());
    std::vector<count_t> e(q_, 0);
    std::size_t odd = 0;
    for (std::size_t i = 0; i < q_; ++i) {
      if (c[i] % 2 != 0) {
        ++odd;
        e[i] = 1;
      }
    }
    if (stats) stats->operations += 2 * q_;
    if (odd != deleted) throw decode_failure("parity pattern inconsistent with the number of deletions");
    for (std::size_t i = 0; i < q_; ++i) c[i] += e[i];
    return {MultisetWord(std::move(c)), DeletionPattern(MultisetWord(std::move(e)))};
  }

 private:
  count_t n_;
  std::size_t q_;
};

/// Minimum pairwise deletion distance; empty for fewer than two words.
inline std::optional<count_t> minimum_distance(std::span<const MultisetWord> words) {
  std::optional<count_t> best;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const count_t d = deletion_distance(words[i], words[j]);
      if (!best || d < *best) best = d;
    }
  return best;
}

/// A t-deletion-correcting code iff every pair is at distance >= t+1.
inline bool is_deletion_correcting(std::span<const MultisetWord> words, count_t t) {
  const auto d = minimum_distance(words);
  return !d || *d >= t + 1;
}

/// A finite list of distinct words sharing (n, q), with a claimed capability.
class ExplicitCode {
 public:
  ExplicitCode(std::vector<MultisetWord> words, count_t t) : words_(std::move(words)), t_(t) {
    if (words_.empty()) throw invalid_parameter("explicit code needs at least one word");
    std::set<MultisetWord> seen;
    for (const auto& w : words_) {
      detail::require_same_shape(words_.front(), w);
      if (!seen.insert(w).second) throw invalid_parameter("explicit code has a repeated word");
    }
  }

  std::span<const MultisetWord> words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  count_t n() const noexcept { return words_.front().n(); }
  std::size_t q() const noexcept { return words_.front().q(); }
  count_t t() const noexcept { return t_; }

 private:
  std::vector<MultisetWord> words_;
  count_t t_;
};

inline bool is_deletion_correcting(const ExplicitCode& code, count_t t) {
  return is_deletion_correcting(code.words(), t);
}

/// Constant-word code {a^n : a in Σ}.
inline ExplicitCode constant_word_code(count_t n, std::size_t q, count_t t) {
  std::vector<MultisetWord> words;
  for (std::size_t a = 0; a < q; ++a) {
    std::vector<count_t> c(q, 0);
    c[a] = n;
    words.emplace_back(std::move(c));
  }
  return ExplicitCode(std::move(words), t);
}

}  // namespace mscodes

#endif  // MSCODES_CODES_HPP
