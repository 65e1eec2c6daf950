#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include <mscodes/sidon.hpp>

using namespace mscodes;

namespace {

/// Sums of all nonempty multisets of size <= t drawn from `set`, by nested
/// index loops (non-decreasing index tuples).
bool sums_distinct(const std::vector<std::uint64_t>& set, std::uint64_t g, std::size_t t) {
  std::map<std::uint64_t, std::vector<std::size_t>> seen;
  bool distinct = true;
  std::vector<std::size_t> pick;
  auto rec = [&](auto& self, std::size_t from, std::uint64_t sum) -> void {
    if (!pick.empty()) {
      auto [it, fresh] = seen.emplace(sum % g, pick);
      if (!fresh) distinct = false;
    }
    if (pick.size() == t) return;
    for (std::size_t i = from; i < set.size(); ++i) {
      pick.push_back(i);
      self(self, i, sum + set[i]);
      pick.pop_back();
    }
  };
  rec(rec, 0, 0);
  return distinct;
}

}  // namespace

TEST(Sidon, Examples) {
  EXPECT_TRUE(is_bt_set(BtSetCandidate(3, {0, 1}), 1));
  const auto check = check_bt_set(BtSetCandidate(3, {0, 1, 2}), 2);
  EXPECT_FALSE(check.injective);
  ASSERT_TRUE(check.collision.has_value());
  const BtSetCandidate c(3, {0, 1, 2});
  EXPECT_EQ(phi(c, check.collision->first), phi(c, check.collision->second));
  EXPECT_NE(check.collision->first, check.collision->second);
}

TEST(Sidon, CandidateValidation) {
  EXPECT_THROW(BtSetCandidate(5, {1, 6}), invalid_parameter);
  EXPECT_THROW(BtSetCandidate(0, {1}), invalid_parameter);
  EXPECT_THROW(BtSetCandidate(5, {}), invalid_parameter);
  EXPECT_EQ(BtSetCandidate(5, {7}).elements()[0], 2u);
}

TEST(Sidon, Phi) {
  const BtSetCandidate c(11, {1, 3, 9});
  const std::vector<count_t> zero{0, 0, 0}, e1{0, 1, 0}, mix{2, 1, 1};
  EXPECT_EQ(phi(c, zero), 0u);
  EXPECT_EQ(phi(c, e1), 3u);
  EXPECT_EQ(phi(c, mix), (2 + 3 + 9) % 11u);
  const std::vector<count_t> short_x{1, 1};
  EXPECT_THROW(phi(c, short_x), invalid_parameter);
}

TEST(Sidon, AgreesWithNestedLoopOracle) {
  for (std::uint64_t g = 1; g <= 13; ++g)
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g); mask += 3) {
      std::vector<std::uint64_t> set;
      for (std::uint64_t i = 0; i < g; ++i)
        if (mask >> i & 1) set.push_back(i);
      if (set.size() > 5) continue;
      for (count_t t = 1; t <= 3; ++t)
        ASSERT_EQ(is_bt_set(BtSetCandidate(g, set), t), sums_distinct(set, g, t)) << g << " mask " << mask;
    }
}

TEST(Sidon, StandardSyndromeWeightsAreInjective) {
  for (std::size_t q = 2; q <= 5; ++q)
    for (count_t t = 1; t <= 4; ++t) {
      std::vector<std::int64_t> w(q, 0);
      std::int64_t p = 1;
      for (std::size_t i = 0; i + 1 < q; ++i, p *= static_cast<std::int64_t>(t + 1)) w[i] = p;
      const std::uint64_t m = t * static_cast<std::uint64_t>(std::pow(t + 1, q - 2)) + 1;
      EXPECT_TRUE(validate_deletion_syndrome(w, m, t, q)) << "q=" << q << " t=" << t;
    }
  for (count_t t = 1; t <= 6; ++t) {
    const std::vector<std::int64_t> w{0, -1, static_cast<std::int64_t>(t)};
    EXPECT_TRUE(validate_deletion_syndrome(w, t * t + t + 1, t, 3)) << "t=" << t;
  }
}

TEST(Sidon, DegenerateWeightsFail) {
  for (std::size_t q = 2; q <= 4; ++q) {
    const std::vector<std::int64_t> zero(q, 0);
    const auto check = check_deletion_syndrome(zero, 7, 1, q);
    EXPECT_FALSE(check.injective);
    ASSERT_TRUE(check.collision);
  }
  const std::vector<std::int64_t> two{1, 2};
  EXPECT_THROW(validate_deletion_syndrome(two, 7, 1, 3), invalid_parameter);
}

TEST(Sidon, PerSizeVersusJointCheck) {
  // sum mod 3 separates single deletions but sizes 0 and 1 share residue 0
  const std::vector<std::int64_t> w{0, 1, 2};
  EXPECT_TRUE(validate_deletion_syndrome(w, 3, 1, 3));
  EXPECT_FALSE(validate_deletion_syndrome(w, 3, 1, 3, true));
}

TEST(Sidon, CapIsEnforced) {
  EXPECT_THROW(check_bt_set(BtSetCandidate(1000, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}), 6, 1000), resource_limit);
}
