#ifndef MSCODES_SIDON_HPP
#define MSCODES_SIDON_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "multiset.hpp"

namespace mscodes {

/// A candidate B_t set: distinct residues of the cyclic group Z_g.
class BtSetCandidate {
 public:
  BtSetCandidate(std::uint64_t modulus, std::vector<std::uint64_t> elements)
      : modulus_(modulus), elements_(std::move(elements)) {
    if (modulus_ < 1) throw invalid_parameter("group modulus must be >= 1");
    if (elements_.empty()) throw invalid_parameter("a B_t candidate needs at least one element");
    std::unordered_set<std::uint64_t> used;
    for (auto& e : elements_) {
      e %= modulus_;
      if (!used.insert(e).second) throw invalid_parameter("elements must be distinct modulo g");
    }
  }

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::span<const std::uint64_t> elements() const noexcept { return elements_; }

 private:
  std::uint64_t modulus_;
  std::vector<std::uint64_t> elements_;
};

/// Two different multisets (multiplicity vectors over element indices)
/// with the same sum modulo g.
struct SumCollision {
  std::vector<count_t> first;
  std::vector<count_t> second;
  std::uint64_t sum = 0;
};

struct SumCheck {
  bool injective = true;
  std::optional<SumCollision> collision;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t weighted_sum(std::span<const std::uint64_t> residues, std::span<const count_t> x,
                                  std::uint64_t m) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < residues.size(); ++i) s = (s + mulmod(residues[i], x[i] % m, m)) % m;
  return s;
}

inline BigInt multisets_up_to(std::size_t symbols, count_t min_size, count_t max_size) {
  BigInt total = 0;
  for (count_t s = min_size; s <= max_size; ++s) total += space_size(s, symbols);
  return total;
}

/// Enumerates multisets of each size in [min_size, max_size] over the given
/// residues. With joint=true all sizes share one collision table; otherwise
/// each size is checked on its own. Enumeration order is by size, then lex.
inline SumCheck find_sum_collision(std::span<const std::uint64_t> residues, std::uint64_t m, count_t min_size,
                                   count_t max_size, bool joint, std::uint64_t cap) {
  const BigInt total = multisets_up_to(residues.size(), min_size, max_size);
  if (total > cap)
    throw resource_limit("sum enumeration needs " + to_decimal(total) + " multisets, cap is " + std::to_string(cap));
  SumCheck result;
  std::unordered_map<std::uint64_t, std::vector<count_t>> seen;
  for (count_t s = min_size; s <= max_size && result.injective; ++s) {
    if (!joint) seen.clear();
    for_each_word(s, residues.size(), [&](std::span<const count_t> x) {
      const std::uint64_t v = weighted_sum(residues, x, m);
      auto [it, fresh] = seen.try_emplace(v, x.begin(), x.end());
      if (!fresh) {
        result.injective = false;
        result.collision = SumCollision{it->second, std::vector<count_t>(x.begin(), x.end()), v};
        return false;
      }
      return true;
    });
  }
  return result;
}

}  // namespace detail

/// Brute-force B_t test: all sums of nonempty multisets of at most t elements
/// must be pairwise distinct modulo g (sizes 1..t checked jointly).
inline SumCheck check_bt_set(const BtSetCandidate& cand, count_t t, std::uint64_t cap = kDefaultEnumerationCap) {
  if (t == 0) return {};
  return detail::find_sum_collision(cand.elements(), cand.modulus(), 1, t, true, cap);
}

inline bool is_bt_set(const BtSetCandidate& cand, count_t t, std::uint64_t cap = kDefaultEnumerationCap) {
  return check_bt_set(cand, t, cap).injective;
}

/// Φ(x) = Σ x_i b_i mod g.
inline std::uint64_t phi(const BtSetCandidate& cand, std::span<const count_t> x) {
  if (x.size() != cand.elements().size())
    throw invalid_parameter("phi: vector length " + std::to_string(x.size()) + " != set size " +
                            std::to_string(cand.elements().size()));
  return detail::weighted_sum(cand.elements(), x, cand.modulus());
}

/// Reduces signed symbol weights into [0, m).
inline std::vector<std::uint64_t> reduce_weights(std::span<const std::int64_t> weights, std::uint64_t m) {
  if (m < 1) throw invalid_parameter("modulus must be >= 1");
  std::vector<std::uint64_t> out;
  out.reserve(weights.size());
  const auto sm = static_cast<__int128>(m);
  for (auto w : weights) {
    __int128 r = static_cast<__int128>(w) % sm;
    if (r < 0) r += sm;
    out.push_back(static_cast<std::uint64_t>(r));
  }
  return out;
}

/// Checks that the deletion syndrome F(E) = Σ f(s) mod m, s in E, separates
/// deletion patterns. By default each pattern size 1..t is checked on its own
/// (the decoder learns |E| from the received cardinality); joint=true demands
/// injectivity across all sizes 0..t at once.
inline SumCheck check_deletion_syndrome(std::span<const std::int64_t> weights, std::uint64_t m, count_t t,
                                        std::size_t q, bool joint = false,
                                        std::uint64_t cap = kDefaultEnumerationCap) {
  if (weights.size() != q)
    throw invalid_parameter("expected " + std::to_string(q) + " weights, got " + std::to_string(weights.size()));
  const auto residues = reduce_weights(weights, m);
  return detail::find_sum_collision(residues, m, joint ? 0 : 1, t, joint, cap);
}

inline bool validate_deletion_syndrome(std::span<const std::int64_t> weights, std::uint64_t m, count_t t,
                                       std::size_t q, bool joint = false,
                                       std::uint64_t cap = kDefaultEnumerationCap) {
  return check_deletion_syndrome(weights, m, t, q, joint, cap).injective;
}

}  // namespace mscodes

#endif  // MSCODES_SIDON_HPP
