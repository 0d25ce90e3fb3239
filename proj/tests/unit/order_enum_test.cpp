#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "posetop/corpus.hpp"
#include "posetop/dsl.hpp"
#include "posetop/order_enum.hpp"
#include "posetop/series.hpp"

using namespace posetop;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(CountMaps, Examples) {
  for (std::size_t k = 0; k <= 4; ++k)
    for (std::size_t n = 0; n <= 7; ++n) EXPECT_EQ(count_maps(chain(k), n, MapMode::strict), binomial(n, k));
  EXPECT_EQ(count_maps(antichain(3), 2, MapMode::strict), 8);
  EXPECT_EQ(count_maps(zigzag_poset(), 3, MapMode::strict), 8);
  EXPECT_EQ(count_maps(Poset(), 0, MapMode::strict), 1);
  EXPECT_EQ(count_maps(Poset(), 5, MapMode::weak), 1);
}

TEST(CountMaps, Guard) {
  try {
    count_maps(antichain(13), 2, MapMode::strict);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EnumerationGuard);
  }
  EXPECT_THROW(count_maps(chain(2), 65, MapMode::weak), Error);
  EXPECT_NO_THROW(count_maps(antichain(13), 2, MapMode::strict, {13, 64}));
}

TEST(CountMaps, MatchesNaiveEnumeration) {
  for (const Poset& p : posets_up_to(5))
    for (std::size_t n = 0; n <= 5; ++n) {
      EXPECT_EQ(count_maps(p, n, MapMode::strict), oracle::naive_count(p, n, true));
      EXPECT_EQ(count_maps(p, n, MapMode::weak), oracle::naive_count(p, n, false));
    }
}

TEST(DVector, Examples) {
  EXPECT_EQ(d_vector(zigzag_poset()).d, ints({0, 1, 5, 5}));
  EXPECT_EQ(d_vector(antichain(4)).d, ints({1, 14, 36, 24}));
  EXPECT_EQ(d_vector(lex_sum(zigzag_poset(), {chain(2), chain(1), chain(1), chain(1)})).d, ints({0, 0, 3, 11, 9}));
  EXPECT_EQ(d_vector(lex_sum(zigzag_poset(), {chain(1), chain(2), chain(1), chain(1)})).d, ints({0, 0, 2, 8, 7}));
  EXPECT_TRUE(d_vector(Poset()).d.empty());
}

TEST(DVector, TwoPathsAndSurjectionOracle) {
  for (const Poset& p : posets_up_to(5)) {
    const DVector a = d_vector(p);
    EXPECT_EQ(a, d_vector_by_surjections(p));
    const std::size_t r0 = max_chain_length(p);
    for (std::size_t i = 1; i <= p.size(); ++i) {
      EXPECT_EQ(a.at(i), oracle::naive_surjections(p, i));
      EXPECT_GE(a.at(i), 0);
      if (i < r0) EXPECT_EQ(a.at(i), 0);
      else EXPECT_GT(a.at(i), 0);
    }
    if (!p.empty()) EXPECT_EQ(a.at(p.size()), oracle::permutation_extensions(p));
  }
}

TEST(DVector, TopEntryCountsLinearExtensions) {
  std::mt19937 rng(17);
  for (int t = 0; t < 20; ++t) {
    const Poset p = oracle::random_poset(rng, 6 + t % 2);
    EXPECT_EQ(d_vector(p).at(p.size()), oracle::permutation_extensions(p));
  }
}

TEST(OrderPolynomial, Examples) {
  const BinomialPoly a3 = order_polynomial(antichain(3), MapMode::strict);
  EXPECT_EQ(to_monomial(a3), MonomialPoly::x_power(3));
  const Poset star = parse_poset("C1 * (C1 | C1 | C1)");
  const BinomialPoly s = order_polynomial(star, MapMode::strict);
  EXPECT_EQ(s, BinomialPoly::from_coefficients(std::vector<long>{1, 6, 6}, 2));
  EXPECT_EQ(to_monomial(s), MonomialPoly({0, 0, Rational(1, 4), Rational(-1, 2), Rational(1, 4)}));
  for (std::size_t k = 1; k <= 4; ++k) {
    const BinomialPoly w = order_polynomial(chain(k), MapMode::weak);
    for (long x = 0; x <= 6; ++x) EXPECT_EQ(w.eval(x), Rational(binomial(static_cast<unsigned long>(x + k - 1), k)));
  }
  EXPECT_EQ(order_polynomial(Poset(), MapMode::strict), BinomialPoly::basis(0));
}

TEST(OrderPolynomial, AgreesWithCountsOnCorpus) {
  for (const Poset& p : posets_up_to(5)) {
    const DVector dv = d_vector(p);
    const BinomialPoly strict = order_polynomial(dv, MapMode::strict);
    const BinomialPoly weak = order_polynomial(dv, MapMode::weak);
    for (std::size_t n = 0; n <= 8; ++n) {
      EXPECT_EQ(strict.eval(static_cast<long>(n)), Rational(oracle::naive_count(p, n, true)));
      EXPECT_EQ(weak.eval(static_cast<long>(n)), Rational(oracle::naive_count(p, n, false)));
    }
  }
}

TEST(OrderPolynomial, SixPointsAgainstBacktracking) {
  for (const Poset& p : posets_of_size(6)) {
    const DVector dv = d_vector(p);
    const BinomialPoly strict = order_polynomial(dv, MapMode::strict);
    const BinomialPoly weak = order_polynomial(dv, MapMode::weak);
    for (std::size_t n : {3, 8}) {
      EXPECT_EQ(strict.eval(static_cast<long>(n)), Rational(count_maps(p, n, MapMode::strict)));
      EXPECT_EQ(weak.eval(static_cast<long>(n)), Rational(count_maps(p, n, MapMode::weak)));
    }
  }
}

TEST(OrderPolynomial, PointsCannotTellStrictFromWeak) {
  for (std::size_t n = 0; n <= 6; ++n) {
    EXPECT_EQ(to_monomial(order_polynomial(antichain(n), MapMode::strict)), MonomialPoly::x_power(n));
    EXPECT_EQ(to_monomial(order_polynomial(antichain(n), MapMode::weak)), MonomialPoly::x_power(n));
  }
}

TEST(Reciprocity, Examples) {
  EXPECT_TRUE(reciprocity_check(chain(2)).pass);
  EXPECT_TRUE(reciprocity_check(zigzag_poset()).pass);
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_TRUE(reciprocity_check(antichain(n)).pass);
  for (const Poset& p : posets_up_to(5)) EXPECT_TRUE(reciprocity_check(p).pass);
}

TEST(NestedSum, Examples) {
  const NestedSumReport a = nested_sum_identity_check(4, 2, 2);
  EXPECT_EQ(a.binomial_value, 6);
  EXPECT_EQ(a.nested_value, 6);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(nested_sum_identity_check(3, 3, 3).nested_value, 1);
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 1; k <= 4; ++k) {
      EXPECT_EQ(nested_sum_identity_check(n, k, 1).weak_maps, binomial(n + k - 1, k));
      for (std::size_t q = 1; q <= n; ++q) EXPECT_TRUE(nested_sum_identity_check(n, k, q).pass);
    }
  EXPECT_THROW(nested_sum_identity_check(3, 1, 4), Error);
  EXPECT_THROW(nested_sum_identity_check(3, 0, 1), Error);
}

TEST(StirlingSymmetry, DerivedFormHoldsPrintedFormDoesNot) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(stirling_symmetry_check(n).corrected_holds) << n;
  EXPECT_FALSE(stirling_symmetry_check(2).printed_holds);
}
