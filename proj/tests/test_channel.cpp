#include <gtest/gtest.h>

#include <mscodes/channel.hpp>
#include <mscodes/json_io.hpp>

using namespace mscodes;

namespace {

MultisetWord word(std::initializer_list<count_t> c) { return MultisetWord(std::vector<count_t>(c)); }

DeletionPattern pattern(std::initializer_list<count_t> c) { return DeletionPattern(word(c)); }

}  // namespace

TEST(Channel, ApplyDeletions) {
  EXPECT_EQ(apply_deletions(word({2, 1, 1}), pattern({1, 0, 0})), word({1, 1, 1}));
  EXPECT_EQ(apply_deletions(word({2, 1, 1}), pattern({1, 0, 1})), word({1, 1, 0}));
  EXPECT_EQ(apply_deletions(word({2, 1, 1}), DeletionPattern::empty(3)), word({2, 1, 1}));
  EXPECT_THROW(apply_deletions(word({2, 1, 1}), pattern({0, 2, 0})), pattern_not_contained);
  EXPECT_THROW(apply_deletions(word({2, 1, 1}), pattern({0, 1})), alphabet_mismatch);
}

TEST(Channel, AllPatterns) {
  const auto p = all_patterns(word({1, 1}), 1);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], pattern({0, 0}));
  EXPECT_EQ(p[1], pattern({1, 0}));
  EXPECT_EQ(p[2], pattern({0, 1}));

  EXPECT_EQ(all_patterns(word({3, 2, 4}), 0), std::vector<DeletionPattern>{DeletionPattern::empty(3)});

  // full support, t <= every count: C(s+q-1, q-1) patterns of each size s
  const auto w = word({3, 4, 3, 5});
  for (count_t t = 0; t <= 3; ++t) {
    std::vector<std::size_t> per_size(t + 1, 0);
    for (const auto& e : all_patterns(w, t)) {
      ++per_size.at(e.n());
      EXPECT_EQ(union_add(apply_deletions(w, e), e), w);
      EXPECT_EQ(apply_deletions(w, e).n(), w.n() - e.n());
    }
    for (count_t s = 0; s <= t; ++s) EXPECT_EQ(per_size[s], space_size(s, 4));
  }
  EXPECT_THROW(all_patterns(w, 3, 10), resource_limit);
}

TEST(Channel, PatternOrderMatchesEnumeration) {
  const auto p = all_patterns(MultisetWord({2, 1, 2}), 3);
  for (std::size_t i = 1; i < p.size(); ++i) {
    EXPECT_TRUE(detail::pattern_before(p[i - 1], p[i]));
    EXPECT_FALSE(detail::pattern_before(p[i], p[i - 1]));
  }
}

TEST(Channel, ExhaustiveRoundTrips) {
  const auto cyc = at_best_residue(make_cyclic(6, 3, 2, 0));
  const auto r = roundtrip_exhaustive(cyc, 2);
  EXPECT_TRUE(r.clean());
  EXPECT_GT(r.trials, 0u);
  EXPECT_EQ(r.successes, r.trials);

  for (std::uint64_t a = 0; a < 4; ++a) EXPECT_TRUE(roundtrip_exhaustive(make_binary(10, 3, a), 3).clean());
  for (count_t t = 1; t <= 4; ++t) EXPECT_TRUE(roundtrip_exhaustive(at_best_residue(make_ternary_variant(7, t, 0)), t).clean());
  EXPECT_TRUE(roundtrip_exhaustive(ParityCode(6, 4), 1).clean());
  EXPECT_TRUE(roundtrip_exhaustive(make_sum_mod_q(6, 4, 1), 1).clean());
}

TEST(Channel, SumModQFailsOnTwoDeletions) {
  const auto r = roundtrip_exhaustive(make_sum_mod_q(5, 3, 0), 2);
  EXPECT_FALSE(r.clean());
  for (const auto& f : r.failures) EXPECT_EQ(f.pattern.n(), 2u);
  for (std::size_t i = 1; i < r.failures.size(); ++i) {
    const auto& a = r.failures[i - 1];
    const auto& b = r.failures[i];
    EXPECT_TRUE(a.codeword_index < b.codeword_index ||
                (a.codeword_index == b.codeword_index && detail::pattern_before(a.pattern, b.pattern)));
  }
}

TEST(Channel, RandomHarness) {
  const auto code = make_binary(20, 2, 0);
  ChannelConfig cfg;
  cfg.t_max = 2;
  cfg.mode = ChannelMode::random;
  cfg.seed = 0;
  cfg.trials = 1000;
  const auto r = roundtrip_random(code, cfg);
  EXPECT_EQ(r.trials, 1000u);
  EXPECT_EQ(r.successes, 1000u);

  cfg.trials = 0;
  const auto empty = roundtrip_random(code, cfg);
  EXPECT_EQ(empty.trials, 0u);
  EXPECT_TRUE(empty.failures.empty());

  cfg.t_max = 21;
  EXPECT_THROW(roundtrip_random(code, cfg), invalid_parameter);
}

TEST(Channel, RandomHarnessIsReproducible) {
  const auto code = make_sum_mod_q(9, 4, 2);
  ChannelConfig cfg;
  cfg.t_max = 2;
  cfg.mode = ChannelMode::random;
  cfg.seed = 0xC0FFEE;
  cfg.trials = 3000;
  const auto base = to_json(roundtrip_random(code, cfg)).dump();
  EXPECT_EQ(base, to_json(roundtrip_random(code, cfg)).dump());
  for (unsigned w : {2u, 3u, 8u}) {
    cfg.workers = w;
    EXPECT_EQ(base, to_json(roundtrip_random(code, cfg)).dump()) << w << " workers";
  }
  cfg.seed = 1;
  EXPECT_NE(base, to_json(roundtrip_random(code, cfg)).dump());
}

TEST(Channel, PatternDrawsAreUnbiased) {
  // From w = (2,1), one deletion removes symbol 0 with probability 2/3.
  std::mt19937_64 rng(42);
  const auto w = word({2, 1});
  int zeros = 0;
  const int draws = 30000;
  for (int i = 0; i < draws; ++i) zeros += detail::draw_pattern(rng, w, 1)[0];
  EXPECT_NEAR(zeros / static_cast<double>(draws), 2.0 / 3.0, 0.015);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(detail::draw_pattern(rng, w, 3), pattern({2, 1}));
}

TEST(Channel, UniformBelowBigBound) {
  std::mt19937_64 rng(3);
  const BigInt bound = (BigInt(1) << 130) + 12345;
  for (int i = 0; i < 200; ++i) {
    const auto x = detail::uniform_below(rng, bound);
    EXPECT_GE(x, 0);
    EXPECT_LT(x, bound);
  }
}
