#ifndef MSCODES_CHANNEL_HPP
#define MSCODES_CHANNEL_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "codes.hpp"
#include "errors.hpp"
#include "multiset.hpp"

namespace mscodes {

/// Anything the round-trip harnesses can drive.
template <class C>
concept DeletionCode = requires(const C& c, const MultisetWord& w, const BigInt& i) {
  { c.n() } -> std::convertible_to<count_t>;
  { c.q() } -> std::convertible_to<std::size_t>;
  { c.t() } -> std::convertible_to<count_t>;
  { c.size() } -> std::convertible_to<BigInt>;
  { c.encode(i) } -> std::same_as<MultisetWord>;
  { c.decode(w) } -> std::same_as<DecodeResult>;
};

/// Removes the pattern e from w; e must be a sub-multiset of w.
inline MultisetWord apply_deletions(const MultisetWord& w, const DeletionPattern& e) {
  if (!is_submultiset(e, w)) throw pattern_not_contained();
  return subtract(w, e);
}

/// Every sub-multiset e of w with |e| <= t, in for_each_submultiset order.
inline std::vector<DeletionPattern> all_patterns(const MultisetWord& w, count_t t,
                                                 std::uint64_t cap = kDefaultEnumerationCap) {
  std::vector<DeletionPattern> out;
  for_each_submultiset(w, t, [&](std::span<const count_t> e) {
    if (out.size() >= cap) throw resource_limit("more than " + std::to_string(cap) + " deletion patterns");
    out.emplace_back(std::vector<count_t>(e.begin(), e.end()));
    return true;
  });
  return out;
}

enum class ChannelMode { exhaustive, random };

struct ChannelConfig {
  count_t t_max = 1;
  ChannelMode mode = ChannelMode::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  unsigned workers = 1;
};

struct RoundtripFailure {
  BigInt codeword_index;
  MultisetWord codeword;
  DeletionPattern pattern;
  std::string outcome;
};

struct RoundtripReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::vector<RoundtripFailure> failures;

  bool clean() const noexcept { return failures.empty(); }
};

namespace detail {

/// Decodes one (codeword, pattern) trial; empty on success, else a description.
template <DeletionCode Code>
std::optional<std::string> run_trial(const Code& code, const MultisetWord& codeword, const DeletionPattern& e) {
  try {
    const auto got = code.decode(apply_deletions(codeword, e));
    if (got.codeword != codeword) return std::string("wrong codeword");
    if (got.pattern != e) return std::string("wrong pattern");
    return std::nullopt;
  } catch (const error& ex) {
    return std::string("error: ") + ex.what();
  }
}

/// The order in which all_patterns() lists patterns: by size, then by the
/// sorted symbol list, i.e. larger counts on low symbols first.
inline bool pattern_before(const DeletionPattern& a, const DeletionPattern& b) {
  if (a.n() != b.n()) return a.n() < b.n();
  return b.counts().size() == a.counts().size() &&
         std::lexicographical_compare(b.counts().begin(), b.counts().end(), a.counts().begin(), a.counts().end());
}

inline void sort_failures(std::vector<RoundtripFailure>& f) {
  std::stable_sort(f.begin(), f.end(), [](const RoundtripFailure& x, const RoundtripFailure& y) {
    if (x.codeword_index != y.codeword_index) return x.codeword_index < y.codeword_index;
    return pattern_before(x.pattern, y.pattern);
  });
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Uniform integer in [0, bound) by rejection; identical on every platform.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

inline BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound) {
  if (auto small = to_u64(bound)) return uniform_below(rng, *small);
  const std::size_t bits = boost::multiprecision::msb(bound) + 1;
  const std::size_t words = (bits + 63) / 64;
  for (;;) {
    BigInt x = 0;
    for (std::size_t i = 0; i < words; ++i) x = (x << 64) | BigInt(rng());
    x >>= words * 64 - bits;
    if (x < bound) return x;
  }
}

/// Uniform sub-multiset of w with exactly k elements: k draws without
/// replacement from the n items of w.
inline DeletionPattern draw_pattern(std::mt19937_64& rng, const MultisetWord& w, count_t k) {
  std::vector<count_t> left(w.counts().begin(), w.counts().end());
  std::vector<count_t> e(w.q(), 0);
  count_t pool = w.n();
  for (count_t d = 0; d < k; ++d) {
    std::uint64_t pick = uniform_below(rng, pool);
    std::size_t s = 0;
    while (pick >= left[s]) pick -= left[s++];
    --left[s];
    ++e[s];
    --pool;
  }
  return DeletionPattern(MultisetWord(std::move(e)));
}

}  // namespace detail

/// Every codeword against every deletion pattern of size <= t.
template <DeletionCode Code>
RoundtripReport roundtrip_exhaustive(const Code& code, count_t t, std::uint64_t cap = kDefaultEnumerationCap) {
  const BigInt size = code.size();
  if (size > cap) throw resource_limit("code has " + to_decimal(size) + " words, cap is " + std::to_string(cap));
  RoundtripReport report;
  for (BigInt i = 0; i < size; ++i) {
    const MultisetWord cw = code.encode(i);
    for_each_submultiset(cw, t, [&](std::span<const count_t> ev) {
      DeletionPattern e(std::vector<count_t>(ev.begin(), ev.end()));
      ++report.trials;
      if (report.trials > cap) throw resource_limit("more than " + std::to_string(cap) + " trials");
      if (auto why = detail::run_trial(code, cw, e))
        report.failures.push_back({i, cw, std::move(e), std::move(*why)});
      else
        ++report.successes;
      return true;
    });
  }
  return report;
}

/// Seeded random trials. Trial i draws from its own generator seeded by
/// (seed, i), so the report does not depend on the worker count.
template <DeletionCode Code>
RoundtripReport roundtrip_random(const Code& code, const ChannelConfig& cfg) {
  if (cfg.t_max > code.n()) throw invalid_parameter("t_max exceeds the code length");
  const BigInt size = code.size();
  if (size == 0) throw invalid_parameter("code is empty");

  struct Outcome {
    BigInt index;
    std::optional<MultisetWord> codeword;
    std::optional<DeletionPattern> pattern;
    std::optional<std::string> failure;
  };
  std::vector<Outcome> outcomes(cfg.trials);

  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      std::mt19937_64 rng(detail::splitmix64(cfg.seed ^ detail::splitmix64(i)));
      Outcome& o = outcomes[i];
      o.index = detail::uniform_below(rng, size);
      const MultisetWord cw = code.encode(o.index);
      const count_t k = detail::uniform_below(rng, cfg.t_max + 1);
      DeletionPattern e = detail::draw_pattern(rng, cw, k);
      o.failure = detail::run_trial(code, cw, e);
      if (o.failure) {
        o.codeword = cw;
        o.pattern = std::move(e);
      }
    }
  };

  const unsigned workers = std::max(1u, cfg.workers);
  if (workers == 1 || cfg.trials < 2) {
    run_range(0, cfg.trials);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (cfg.trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t b = std::min<std::uint64_t>(cfg.trials, w * chunk);
      const std::uint64_t e = std::min<std::uint64_t>(cfg.trials, b + chunk);
      if (b < e) pool.emplace_back(run_range, b, e);
    }
  }

  RoundtripReport report;
  report.trials = cfg.trials;
  for (auto& o : outcomes) {
    if (o.failure)
      report.failures.push_back({o.index, std::move(*o.codeword), std::move(*o.pattern), std::move(*o.failure)});
    else
      ++report.successes;
  }
  detail::sort_failures(report.failures);
  return report;
}

template <DeletionCode Code>
RoundtripReport simulate(const Code& code, const ChannelConfig& cfg) {
  if (cfg.mode == ChannelMode::exhaustive) return roundtrip_exhaustive(code, cfg.t_max);
  return roundtrip_random(code, cfg);
}

}  // namespace mscodes

#endif  // MSCODES_CHANNEL_HPP
