#include <set>

#include "gtest/gtest.h"

#include "freegroup/freegroup.hpp"

using namespace freegroup;

TEST(Rfree, ShapeOfTranscriptCall) {
  RandomSpec spec = RandomSpec::shaped(10, 4, 42);
  WordVector v = rfree(spec);
  ASSERT_EQ(10u, v.size());
  for (const Word& w : v) {
    EXPECT_LE(w.size(), 4u);
    for (const Syllable& s : w.syllables()) {
      EXPECT_GE(s.symbol, 1);
      EXPECT_LE(s.symbol, 4);
    }
  }
}

TEST(Rfree, DefaultsGiveSevenWords) {
  RandomSpec spec;
  EXPECT_EQ(7, spec.count);
  EXPECT_EQ(5, spec.syllables);
  EXPECT_EQ(3, spec.max_symbol);
  EXPECT_EQ(4, spec.max_abs_exponent);
  EXPECT_EQ(7u, rfree(spec).size());
}

TEST(Rfree, EmptyCount) {
  RandomSpec spec;
  spec.count = 0;
  EXPECT_TRUE(rfree(spec).empty());
}

TEST(Rfree, Deterministic) {
  RandomSpec spec = RandomSpec::shaped(50, 6, 7);
  EXPECT_EQ(rfree(spec), rfree(spec));
  RandomSpec other = spec;
  other.seed = 8;
  EXPECT_NE(rfree(spec), rfree(other));
}

TEST(Rfree, PinnedStream) {
  // mt19937_64's output is fixed by the standard, and bounded draws do not go
  // through the implementation-defined distributions, so this is portable.
  Engine engine;
  engine.discard(9999);
  EXPECT_EQ(9981545732273789042ULL, engine());

  WordVector v = rfree(RandomSpec::shaped(3, 4, 1));
  ASSERT_EQ(3u, v.size());
  EXPECT_EQ("a^3.c^3.a^-6", format(v[0]));
  EXPECT_EQ("a^-5.b^-1.a^-3", format(v[1]));
  EXPECT_EQ("b^-2.a^-1", format(v[2]));
}

TEST(Rfree, InvariantsOverManyGenerations) {
  RandomSpec spec{1, 8, 5, 3, 0};
  Engine engine(123);
  std::set<Exponent> exponents;
  for (int i = 0; i < 10000; ++i) {
    Word w = random_word(engine, spec);
    ASSERT_NO_THROW(Word::from_syllables({w.syllables().begin(), w.syllables().end()}));
    ASSERT_LE(w.size(), 8u);
    for (const Syllable& s : w.syllables()) {
      ASSERT_GE(s.symbol, 1);
      ASSERT_LE(s.symbol, 5);
      exponents.insert(s.exponent);
    }
  }
  // Raw exponents are in ±1..±3; merges can exceed that.
  EXPECT_TRUE(exponents.count(-3) && exponents.count(3) && exponents.count(1));
  EXPECT_FALSE(exponents.count(0));
}

TEST(Rfree, RawExponentsAreUniform) {
  RandomSpec spec{1, 1, 1, 4, 0};
  Engine engine(5);
  std::map<Exponent, int> counts;
  for (int i = 0; i < 80000; ++i) {
    Word w = random_word(engine, spec);
    ++counts[w.syllables()[0].exponent];
  }
  ASSERT_EQ(8u, counts.size());
  for (auto [e, n] : counts) {
    EXPECT_NE(0, e);
    EXPECT_NEAR(10000, n, 500) << e;
  }
}

TEST(UniformBelow, StaysInRange) {
  Engine engine(9);
  for (std::uint64_t bound : {1ull, 2ull, 3ull, 7ull, 1000ull, (1ull << 63) + 5}) {
    for (int i = 0; i < 1000; ++i) ASSERT_LT(uniform_below(engine, bound), bound);
  }
}

TEST(RandomSpec, Validation) {
  EXPECT_THROW(rfree(RandomSpec{-1, 1, 1, 1, 0}), InvalidSpecError);
  EXPECT_THROW(rfree(RandomSpec{1, 0, 1, 1, 0}), InvalidSpecError);
  EXPECT_THROW(rfree(RandomSpec{1, 1, 0, 1, 0}), InvalidSpecError);
  EXPECT_THROW(rfree(RandomSpec{1, 1, 1, 0, 0}), InvalidSpecError);
}

TEST(RandomSpec, KeyValueRoundTrip) {
  RandomSpec spec{12, 6, 4, 3, 18446744073709551615ull};
  EXPECT_EQ("count=12\nsyllables=6\nmax_symbol=4\nmax_abs_exponent=3\nseed=18446744073709551615\n",
            to_key_value(spec));
  EXPECT_EQ(spec, parse_key_value(to_key_value(spec)));
  RandomSpec partial = parse_key_value("# comment\n\nseed = 9\ncount=2\n");
  EXPECT_EQ(2, partial.count);
  EXPECT_EQ(9u, partial.seed);
  EXPECT_EQ(5, partial.syllables);
  EXPECT_THROW(parse_key_value("seed"), InvalidSpecError);
  EXPECT_THROW(parse_key_value("colour=red"), InvalidSpecError);
  EXPECT_THROW(parse_key_value("count=x"), InvalidSpecError);
  EXPECT_THROW(parse_key_value("count=-1"), InvalidSpecError);
}
