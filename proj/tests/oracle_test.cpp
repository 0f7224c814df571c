#include <random>
#include <vector>

#include "gtest/gtest.h"

#include "freegroup/word.hpp"
#include "oracle/oracle.hpp"
#include "test_support.hpp"

using namespace freegroup;
using namespace freegroup::oracle;
using freegroup::testing::W;

TEST(Oracle, CancelsInversePair) {
  EXPECT_EQ(LetterString{}, oracle_reduce({1, -1}));
  EXPECT_EQ(LetterString{}, oracle_reduce({1, 2, -2, -1}));
  EXPECT_EQ((LetterString{1, 1, -2}), oracle_reduce({1, 1, -2}));
}

TEST(Oracle, InformalProseExample) {
  // c^-4 b b^2 a a^-1 c a
  const std::vector<Syllable> raw{{3, -4}, {2, 1}, {2, 2}, {1, 1}, {1, -1}, {3, 1}, {1, 1}};
  const std::vector<Syllable> want{{3, -4}, {2, 3}, {3, 1}, {1, 1}};
  EXPECT_EQ(expand(want), oracle_reduce(expand(raw)));
}

TEST(Oracle, ExpandAndRegroup) {
  EXPECT_EQ((LetterString{1, 1}), expand(std::vector<Syllable>{{1, 2}}));
  EXPECT_EQ(W("a^2.b^-1"), regroup({1, 1, -2}));
  EXPECT_THROW(regroup({1, -1}), InvalidWordError);
  EXPECT_THROW(expand(std::vector<Syllable>{{1, 100}}, 10), ExpansionLimitError);
  EXPECT_THROW(expand(std::vector<Syllable>{{0, 1}}), InvalidSymbolError);
}

TEST(Oracle, ReferenceReduceOfMatrixExample) {
  const std::vector<Syllable> raw{{1, 2}, {2, -3}, {3, 2}, {3, 3}, {1, -2}};
  EXPECT_EQ(W("a^2.b^-3.c^5.a^-2"), reference_reduce(raw));
}

TEST(Oracle, ExpandRegroupInverseOnReducedWords) {
  freegroup::testing::WordSource src(3, 8, 3, 4);
  for (int i = 0; i < 500; ++i) {
    Word w = src.next();
    LetterString letters = expand(w.syllables());
    EXPECT_EQ(w, regroup(letters));
    EXPECT_EQ(letters, expand(regroup(letters).syllables()));
  }
}

TEST(Oracle, DeletionOrderDoesNotMatter) {
  freegroup::testing::WordSource src(17, 1, 3, 3);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    LetterString letters = expand(src.raw(10));
    const LetterString leftmost = oracle_reduce(letters);
    EXPECT_EQ(leftmost, oracle_reduce_random(letters, rng));
    EXPECT_EQ(leftmost, oracle_reduce_random(letters, rng));
  }
}

TEST(OracleEquivalence, ExhaustiveSmallCases) {
  // Every raw sequence of <= 4 syllables over 2 generators, exponents -2..2.
  std::vector<Syllable> alphabet;
  for (Symbol s = 1; s <= 2; ++s) {
    for (Exponent e = -2; e <= 2; ++e) alphabet.push_back({s, e});
  }
  std::size_t cases = 0;
  std::vector<Syllable> raw;
  for (std::size_t len = 0; len <= 4; ++len) {
    std::vector<std::size_t> digits(len, 0);
    while (true) {
      raw.clear();
      for (std::size_t d : digits) raw.push_back(alphabet[d]);
      ASSERT_EQ(reference_reduce(raw), reduce(raw)) << "case " << cases;
      ++cases;
      std::size_t k = 0;
      while (k < len && ++digits[k] == alphabet.size()) digits[k++] = 0;
      if (k == len) break;
    }
  }
  EXPECT_EQ(11111u, cases);
}

TEST(OracleEquivalence, RandomLargerCases) {
  freegroup::testing::WordSource src(2024, 1, 4, 5);
  std::mt19937_64 lengths(7);
  for (int i = 0; i < 10000; ++i) {
    const auto raw = src.raw(static_cast<std::int64_t>(5 + lengths() % 16));
    ASSERT_EQ(reference_reduce(raw), reduce(raw)) << "case " << i;
  }
}
