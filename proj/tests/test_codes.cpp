#include <gtest/gtest.h>

#include <mscodes/codes.hpp>

#include "oracles.hpp"

using namespace mscodes;

namespace {

MultisetWord word(std::initializer_list<count_t> c) { return MultisetWord(std::vector<count_t>(c)); }

MultisetWord from_oracle(const oracle::Counts& c) { return MultisetWord(std::vector<count_t>(c.begin(), c.end())); }

/// Members of the residue class, in lex order, by filtering the whole space.
std::vector<MultisetWord> class_members(const WeightedCongruenceCode& code) {
  std::vector<MultisetWord> out;
  for (const auto& c : oracle::multisets_by_sequences(code.n(), code.q())) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += code.signed_weights()[i] * static_cast<std::int64_t>(c[i]);
    const auto m = static_cast<std::int64_t>(code.modulus());
    if (static_cast<std::uint64_t>(((s % m) + m) % m) == code.residue()) out.push_back(from_oracle(c));
  }
  return out;
}

void expect_classes_match_oracle(const WeightedCongruenceCode& code) {
  const std::vector<std::int64_t> f(code.signed_weights().begin(), code.signed_weights().end());
  const auto expected = oracle::class_counts(code.n(), f, code.modulus());
  const auto sizes = code.class_sizes();
  ASSERT_EQ(sizes.size(), expected.size());
  BigInt total = 0;
  for (const auto& [r, count] : expected) {
    EXPECT_EQ(sizes[r], count) << to_string(code.kind()) << " n=" << code.n() << " r=" << r;
    total += sizes[r];
  }
  EXPECT_EQ(total, space_size(code.n(), code.q()));
}

}  // namespace

TEST(Codes, SyndromeExamples) {
  const auto cyc = make_cyclic(4, 3, 2, 0);
  EXPECT_EQ(cyc.modulus(), 7u);
  EXPECT_EQ(std::vector<std::uint64_t>(cyc.weights().begin(), cyc.weights().end()),
            (std::vector<std::uint64_t>{1, 3, 0}));
  EXPECT_EQ(cyc.syndrome(word({2, 1, 1})), 5u);
  EXPECT_EQ(make_sum_mod_q(5, 4, 0).syndrome(word({5, 0, 0, 0})), 0u);
  EXPECT_EQ(make_binary(9, 2, 0).syndrome(word({2, 7})), 1u);
}

TEST(Codes, CyclicModulus) {
  EXPECT_EQ(cyclic_modulus(2, 3), 7u);
  EXPECT_EQ(cyclic_modulus(1, 2), 2u);
  EXPECT_EQ(cyclic_modulus(3, 4), 49u);
  EXPECT_EQ(cyclic_modulus(4, 5), 501u);
  EXPECT_THROW(cyclic_modulus(0, 3), invalid_parameter);
  EXPECT_THROW(cyclic_modulus(1000, 40), invalid_parameter);
}

TEST(Codes, ClassSizesMatchEnumeration) {
  for (count_t n = 1; n <= 7; ++n) {
    for (count_t t = 1; t <= 4; ++t) expect_classes_match_oracle(make_binary(n, t, 0));
    for (std::size_t q = 2; q <= 4; ++q) expect_classes_match_oracle(make_sum_mod_q(n, q, 0));
    for (std::size_t q = 2; q <= 4; ++q)
      for (count_t t = 1; t <= 3; ++t) expect_classes_match_oracle(make_cyclic(n, q, t, 0));
    for (count_t t = 1; t <= 3; ++t) expect_classes_match_oracle(make_ternary_variant(n, t, 0));
  }
}

TEST(Codes, SizeExamples) {
  for (std::uint64_t a = 0; a < 3; ++a) EXPECT_EQ(make_sum_mod_q(4, 3, a).size(), 5);
  EXPECT_EQ(ParityCode(4, 3).size(), 6);
  EXPECT_EQ(make_binary(5, 1, 0).size(), 3);
  for (count_t n = 1; n <= 9; ++n) EXPECT_EQ(make_cyclic(n, 2, 1, 0).size(), (n + 2) / 2);
}

TEST(Codes, CyclicClassesNeedNotBeEqual) {
  const auto sizes = make_cyclic(4, 2, 1, 0).class_sizes();
  EXPECT_EQ(sizes[0], 3);
  EXPECT_EQ(sizes[1], 2);
}

TEST(Codes, EncodeWalksClassInLexOrder) {
  const auto first = make_sum_mod_q(4, 3, 0).encode(0);
  EXPECT_EQ(first, class_members(make_sum_mod_q(4, 3, 0)).front());

  std::vector<WeightedCongruenceCode> codes{make_binary(7, 2, 1), make_sum_mod_q(5, 4, 3), make_cyclic(6, 3, 2, 5),
                                            make_cyclic(5, 4, 1, 2), make_ternary_variant(6, 2, 4)};
  for (const auto& code : codes) {
    const auto members = class_members(code);
    ASSERT_EQ(code.size(), members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      EXPECT_EQ(code.encode(i), members[i]);
      EXPECT_EQ(code.index_of(members[i]), i);
      EXPECT_TRUE(code.contains(members[i]));
    }
    EXPECT_THROW(code.encode(members.size()), index_out_of_range);
    EXPECT_THROW(code.encode(-1), index_out_of_range);
  }
}

TEST(Codes, SingletonClassEncodesItsOnlyWord) {
  const auto code = make_binary(1, 3, 1);
  ASSERT_EQ(code.size(), 1);
  EXPECT_EQ(code.encode(0), word({0, 1}));
}

TEST(Codes, CyclicDecodeRecoversPattern) {
  // n=6, q=3, t=2: delete {0,2}, F(E) = f(0) + f(2) = 1
  for (std::uint64_t a = 0; a < 7; ++a) {
    const auto code = make_cyclic(6, 3, 2, a);
    for (BigInt i = 0; i < code.size(); ++i) {
      const auto s = code.encode(i);
      if (s[0] < 1 || s[2] < 1) continue;
      const auto received = subtract(s, word({1, 0, 1}));
      EXPECT_EQ((a + 7 - code.syndrome(received)) % 7, 1u);
      const auto r = code.decode(received);
      EXPECT_EQ(r.codeword, s);
      EXPECT_EQ(r.pattern, word({1, 0, 1}));
    }
  }
}

TEST(Codes, BinaryDecodeRestoresOnes) {
  const auto code = make_binary(8, 2, 0);
  const auto s = word({2, 6});
  ASSERT_TRUE(code.contains(s));
  const auto r = code.decode(word({2, 4}));
  EXPECT_EQ(r.codeword, s);
  EXPECT_EQ(r.pattern, word({0, 2}));
}

TEST(Codes, NoDeletionsReturnsReceived) {
  const auto code = make_cyclic(5, 3, 2, 3);
  const auto s = code.encode(1);
  const auto r = code.decode(s);
  EXPECT_EQ(r.codeword, s);
  EXPECT_EQ(r.pattern, MultisetWord::empty(3));
  for (const auto& w : enumerate_space(5, 3))
    if (!code.contains(w)) EXPECT_THROW(code.decode(w), decode_failure);
}

TEST(Codes, DecodeErrors) {
  const auto code = make_cyclic(6, 3, 2, 0);
  EXPECT_THROW(code.decode(word({1, 1, 0})), too_many_deletions);
  EXPECT_THROW(code.decode(word({1, 1, 1, 0})), alphabet_mismatch);
  EXPECT_THROW(code.decode(word({4, 2, 1})), cardinality_mismatch);
  EXPECT_THROW(make_sum_mod_q(4, 3, 0).decode(word({1, 1, 0})), too_many_deletions);
}

TEST(Codes, SymbolStreamDecodeAgreesWithCounts) {
  const auto code = make_cyclic(7, 4, 2, 11);
  for (BigInt i = 0; i < code.size(); ++i) {
    const auto s = code.encode(i);
    for_each_submultiset(s, 2, [&](std::span<const count_t> e) {
      const auto received = subtract(s, MultisetWord(std::vector<count_t>(e.begin(), e.end())));
      const auto syms = received.symbols();
      const auto a = code.decode(received);
      const auto b = code.decode_symbols(syms);
      EXPECT_EQ(a.codeword, b.codeword);
      EXPECT_EQ(a.pattern, b.pattern);
      return true;
    });
  }
}

TEST(Codes, WeightValidation) {
  EXPECT_NO_THROW(make_ternary_variant(5, 3, 0));
  EXPECT_THROW(make_custom(4, 3, 1, {0, 0, 0}, 5, 0), invalid_parameter);
  EXPECT_THROW(make_custom(4, 3, 2, {0, 1, 2}, 3, 0), invalid_parameter);
  EXPECT_THROW(WeightedCongruenceCode(4, 3, 2, {1, 2, 0}, 7, 0, CodeKind::cyclic_sidon), invalid_parameter);
  EXPECT_THROW(make_binary(4, 1, 2), invalid_parameter);
  EXPECT_THROW(make_binary(4, 0, 0), invalid_parameter);
}

TEST(Codes, BestResiduePrefersSmallestOnTies) {
  const auto choice = best_residue(make_sum_mod_q(4, 3, 0));
  EXPECT_EQ(choice.residue, 0u);
  EXPECT_EQ(choice.size, 5);
  const auto cyc = best_residue(make_cyclic(4, 2, 1, 0));
  EXPECT_EQ(cyc.residue, 0u);
  EXPECT_EQ(cyc.size, 3);
}

TEST(Codes, ParityCode) {
  const ParityCode code(4, 3);
  EXPECT_EQ(code.encode(0), word({0, 0, 4}));
  for (BigInt i = 0; i < code.size(); ++i) {
    const auto s = code.encode(i);
    EXPECT_TRUE(code.contains(s));
    EXPECT_EQ(code.index_of(s), i);
    for (std::size_t d = 0; d < 3; ++d) {
      if (s[d] == 0) continue;
      std::vector<count_t> e(3, 0);
      e[d] = 1;
      const auto r = code.decode(subtract(s, MultisetWord(e)));
      EXPECT_EQ(r.codeword, s);
      EXPECT_EQ(r.pattern, MultisetWord(e));
    }
  }
  EXPECT_THROW(code.decode(word({1, 1, 0})), too_many_deletions);
  EXPECT_THROW(code.decode(word({1, 1, 1})), decode_failure);
  EXPECT_THROW(ParityCode(5, 3), invalid_parameter);
}

TEST(Codes, WorkedExampleCodes) {
  const std::vector<MultisetWord> c1{word({0, 3, 1}), word({1, 0, 3}), word({3, 1, 0})};
  const std::vector<MultisetWord> c2{word({4, 0, 0}), word({0, 4, 0}), word({0, 0, 4})};
  EXPECT_EQ(minimum_distance(c1), 3u);
  EXPECT_EQ(minimum_distance(c2), 4u);

  const std::vector<MultisetWord> star{word({4, 0, 0}), word({0, 4, 0}), word({0, 0, 4}),
                                       word({2, 2, 0}), word({2, 0, 2}), word({0, 2, 2})};
  EXPECT_TRUE(is_deletion_correcting(star, 1));
  EXPECT_FALSE(is_deletion_correcting(star, 2));

  // 000, 011, 022, 033, 123 over {0,1,2,3}
  const std::vector<MultisetWord> s4{word({3, 0, 0, 0}), word({1, 2, 0, 0}), word({1, 0, 2, 0}), word({1, 0, 0, 2}),
                                     word({0, 1, 1, 1})};
  EXPECT_TRUE(is_deletion_correcting(s4, 1));
}

TEST(Codes, ExplicitCodeValidation) {
  EXPECT_THROW(ExplicitCode({}, 1), invalid_parameter);
  EXPECT_THROW(ExplicitCode({word({1, 1}), word({1, 1})}, 1), invalid_parameter);
  EXPECT_THROW(ExplicitCode({word({1, 1}), word({1, 2})}, 1), cardinality_mismatch);
  const auto k = constant_word_code(5, 4, 4);
  EXPECT_EQ(k.size(), 4u);
  EXPECT_TRUE(is_deletion_correcting(k, 4));
}

TEST(Codes, Redundancy) {
  EXPECT_DOUBLE_EQ(redundancy(6, 3, space_size(6, 3)), 0.0);
  EXPECT_NEAR(redundancy(4, 3, 5), std::log(3.0) / std::log(3.0), 1e-12);
}
