#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "posetop/corpus.hpp"
#include "posetop/poset.hpp"
#include "posetop/series.hpp"

using namespace posetop;

TEST(Poset, ZigzagHasThreeCoversAndThreeClosedPairs) {
  const Poset p = zigzag_poset();
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p.relations().size(), 3u);
  EXPECT_EQ(p.cover_relations().size(), 3u);
  EXPECT_TRUE(p.less(p.index_of("x"), p.index_of("y")));
  EXPECT_FALSE(p.comparable(p.index_of("x"), p.index_of("w")));
}

TEST(Poset, Singleton) {
  const Poset p = Poset::from_covers({"a"}, {});
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE(p.relations().empty());
}

TEST(Poset, ConstructionErrors) {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::SyntaxError;
  };
  EXPECT_EQ(kind_of([] { Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }), ErrorKind::CycleDetected);
  EXPECT_EQ(kind_of([] { Poset::from_covers({"a", "a"}, {}); }), ErrorKind::DuplicateLabel);
  EXPECT_EQ(kind_of([] { Poset::from_covers({"a"}, {{"a", "q"}}); }), ErrorKind::UnknownLabel);
  EXPECT_EQ(kind_of([] { Poset::from_covers({"a"}, {{"a", "a"}}); }), ErrorKind::CycleDetected);
  EXPECT_EQ(kind_of([] { Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }),
            ErrorKind::CycleDetected);
}

TEST(Poset, CanonicalFamilies) {
  const Poset c3 = chain(3);
  EXPECT_EQ(c3.labels(), (std::vector<std::string>{"1", "2", "3"}));
  EXPECT_EQ(c3.relations().size(), 3u);
  EXPECT_EQ(antichain(4).size(), 4u);
  EXPECT_TRUE(antichain(4).relations().empty());
  EXPECT_TRUE(chain(0).empty());
  for (std::size_t n = 0; n <= 7; ++n) EXPECT_EQ(chain(n).relations().size(), n * (n ? n - 1 : 0) / 2);
}

TEST(Poset, LexSumOverTwoChain) {
  const Poset outer = Poset::from_covers({"x", "y"}, {{"x", "y"}});
  const Poset ab = Poset::from_covers({"a", "b"}, {});
  const Poset cd = Poset::from_covers({"c", "d"}, {});
  const Poset s = lex_sum(outer, {ab, cd});
  EXPECT_EQ(s.labels(), (std::vector<std::string>{"x.a", "x.b", "y.c", "y.d"}));
  EXPECT_EQ(s.relations().size(), 4u);
  EXPECT_TRUE(s.less(s.index_of("x.a"), s.index_of("y.d")));
  EXPECT_FALSE(s.comparable(s.index_of("x.a"), s.index_of("x.b")));
}

TEST(Poset, LexSumUnitAndChains) {
  const Poset p = zigzag_poset();
  EXPECT_TRUE(lex_sum(chain(1), {p}).same_shape(p));
  for (std::size_t k = 0; k <= 3; ++k)
    for (std::size_t j = 0; j <= 3; ++j) EXPECT_TRUE(ordinal_sum(chain(k), chain(j)).same_shape(chain(k + j)));
  EXPECT_THROW(lex_sum(chain(2), {chain(1)}), Error);
}

TEST(Poset, LexSumIsAssociative) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Poset outer = oracle::random_poset(rng, 3);
    std::vector<Poset> middle, inner_flat;
    std::vector<Poset> composed_middle;
    for (std::size_t i = 0; i < outer.size(); ++i) {
      const Poset m = oracle::random_poset(rng, 1 + rng() % 2);
      std::vector<Poset> inner;
      for (std::size_t j = 0; j < m.size(); ++j) {
        inner.push_back(oracle::random_poset(rng, 1 + rng() % 2));
        inner_flat.push_back(inner.back());
      }
      middle.push_back(m);
      composed_middle.push_back(lex_sum(m, inner));
    }
    const Poset left = lex_sum(lex_sum(outer, middle), inner_flat);
    const Poset right = lex_sum(outer, composed_middle);
    EXPECT_TRUE(left.same_shape(right));
  }
}

TEST(Poset, MaxChainLength) {
  EXPECT_EQ(max_chain_length(chain(5)), 5u);
  EXPECT_EQ(max_chain_length(Poset()), 0u);
  EXPECT_EQ(max_chain_length(zigzag_poset()), 2u);
  EXPECT_EQ(max_chain_length(lex_sum(zigzag_poset(), {chain(2), chain(1), chain(1), chain(1)})), 3u);
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Poset p = oracle::random_poset(rng, 1 + rng() % 8);
    EXPECT_EQ(max_chain_length(p), oracle::brute_longest_chain(p));
  }
}

TEST(Poset, TropicalEvaluation) {
  const Poset two_chain = Poset::from_covers({"1", "2"}, {{"1", "2"}});
  const Poset two_points = Poset::from_covers({"x", "y"}, {});
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; n <= 4; ++n) {
      EXPECT_EQ(tropical_eval(two_chain, {m, n}), m + n);
      EXPECT_EQ(tropical_eval(two_points, {m, n}), std::max(m, n));
    }
  for (std::size_t m : {0, 2, 5})
    for (std::size_t n : {1, 3})
      for (std::size_t r : {0, 4})
        for (std::size_t s : {2, 6})
          EXPECT_EQ(tropical_eval(zigzag_poset(), {m, n, r, s}), std::max({m + n, n + r, r + s}));
  EXPECT_THROW(tropical_eval(two_chain, {1}), Error);
}

TEST(Poset, TropicalMatchesChainOfLexSum) {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const Poset p = oracle::random_poset(rng, 1 + rng() % 4);
    std::vector<Poset> inner;
    std::vector<std::size_t> lengths;
    for (std::size_t i = 0; i < p.size(); ++i) {
      inner.push_back(oracle::random_poset(rng, rng() % 3));
      lengths.push_back(max_chain_length(inner.back()));
    }
    EXPECT_EQ(max_chain_length(lex_sum(p, inner)), tropical_eval(p, lengths));
  }
}

TEST(Poset, ClosureIsIdempotent) {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    const Poset p = oracle::random_poset(rng, 1 + rng() % 7);
    const Poset again = Poset::from_index_pairs(p.labels(), p.relations());
    EXPECT_EQ(p, again);
    const Poset from_covers = Poset::from_index_pairs(p.labels(), p.cover_relations());
    EXPECT_EQ(p, from_covers);
  }
}

TEST(Poset, LinearExtensionCount) {
  std::mt19937 rng(9);
  for (int t = 0; t < 30; ++t) {
    const Poset p = oracle::random_poset(rng, rng() % 7);
    EXPECT_EQ(Integer(std::to_string(count_linear_extensions(p))), oracle::permutation_extensions(p));
  }
}

TEST(Corpus, CountsIsomorphismClasses) {
  const std::vector<std::size_t> expected{1, 1, 2, 5, 16, 63};
  for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(posets_of_size(n).size(), expected[n]) << n;
}
