#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "posetop/corpus.hpp"
#include "posetop/dsl.hpp"
#include "posetop/series.hpp"

using namespace posetop;

namespace {

SeriesVec strict(std::initializer_list<std::pair<std::size_t, long>> terms) {
  SeriesVec s;
  for (const auto& [i, c] : terms) s.add(i, Rational(c));
  return s;
}

SeriesVec weak(std::initializer_list<std::pair<std::size_t, long>> terms) {
  SeriesVec s = strict(terms);
  s.mode = SeriesMode::weak;
  return s;
}

const Poset& star() {
  static const Poset p = parse_poset("C1 * (C1 | C1 | C1)");
  return p;
}

}  // namespace

TEST(SeriesOf, Examples) {
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(series_of(chain(k), SeriesMode::strict), SeriesVec::basis(k));
  EXPECT_EQ(series_of(star(), SeriesMode::weak), weak({{2, 1}, {3, -6}, {4, 6}}));
  EXPECT_EQ(series_of(Poset(), SeriesMode::strict), SeriesVec::basis(0));
  EXPECT_TRUE(series_of(star(), SeriesMode::strict).provenance.has_value());
}

TEST(ClosedForm, Examples) {
  const ClosedForm z3 = closed_form(SeriesVec::basis(3));
  EXPECT_EQ(z3.numerator, MonomialPoly::x_power(3));
  EXPECT_EQ(z3.den_power, 4u);
  const ClosedForm a3 = closed_form(series_of(antichain(3), SeriesMode::weak));
  EXPECT_EQ(a3.numerator, MonomialPoly({0, 1, 4, 1}));
  EXPECT_EQ(a3.den_power, 4u);
  const ClosedForm unit = closed_form(SeriesVec::basis(0));
  EXPECT_EQ(unit.numerator, MonomialPoly::constant(1));
  EXPECT_EQ(unit.den_power, 1u);
}

TEST(ClosedForm, ExpansionReproducesCounts) {
  for (const Poset& p : posets_up_to(4)) {
    for (const SeriesMode mode : {SeriesMode::strict, SeriesMode::weak}) {
      const auto coeffs = expand(closed_form(series_of(p, mode)), 20);
      for (std::size_t n = 1; n < coeffs.size(); ++n)
        EXPECT_EQ(coeffs[n], Rational(count_maps(p, n, mode == SeriesMode::strict ? MapMode::strict : MapMode::weak)));
    }
  }
}

TEST(ClosedForm, EulerianNumerators) {
  // h* of the n-cube is the Eulerian polynomial.
  for (std::size_t n = 1; n <= 6; ++n) {
    const MonomialPoly h = h_star(series_of(antichain(n), SeriesMode::weak));
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(h.coeff(i), Rational(oracle::descents(n, i)));
  }
}

TEST(Hadamard, Examples) {
  const SeriesVec z1 = SeriesVec::basis(1);
  const SeriesVec z2 = SeriesVec::basis(2);
  EXPECT_EQ(hadamard(z1, z1), strict({{1, 1}, {2, 2}}));
  EXPECT_EQ(hadamard(z2, z2), strict({{2, 1}, {3, 6}, {4, 6}}));
  const SeriesVec s = strict({{1, 3}, {4, -2}});
  EXPECT_EQ(hadamard(SeriesVec::basis(0), s), s);
  EXPECT_EQ(hadamard(s, SeriesVec::basis(0)), s);
  EXPECT_THROW(hadamard(weak({{1, 1}}), z1), Error);
}

TEST(OrdinalMul, Examples) {
  for (std::size_t k = 0; k <= 3; ++k)
    for (std::size_t j = 0; j <= 3; ++j) EXPECT_EQ(ordinal_mul(SeriesVec::basis(k), SeriesVec::basis(j)), SeriesVec::basis(k + j));
  const SeriesVec two_points = series_of(antichain(2), SeriesMode::strict);
  const SeriesVec v = ordinal_mul(two_points, SeriesVec::basis(1));
  EXPECT_EQ(v, strict({{2, 1}, {3, 2}}));
  EXPECT_EQ(v, series_of(ordinal_sum(antichain(2), chain(1)), SeriesMode::strict));
  EXPECT_THROW(ordinal_mul(weak({{1, 1}}), SeriesVec::basis(1)), Error);
}

TEST(StructuralConstants, AgreeWithLexSumOnAllPairs) {
  const auto corpus = posets_up_to(6);
  std::size_t pairs = 0;
  for (const Poset& p : corpus)
    for (const Poset& q : corpus) {
      if (p.size() + q.size() > 7) continue;
      const SeriesVec sp = series_of(p, SeriesMode::strict);
      const SeriesVec sq = series_of(q, SeriesMode::strict);
      EXPECT_EQ(hadamard(sp, sq), series_of(disjoint_union(p, q), SeriesMode::strict));
      EXPECT_EQ(ordinal_mul(sp, sq), series_of(ordinal_sum(p, q), SeriesMode::strict));
      ++pairs;
    }
  EXPECT_GT(pairs, 1000u);
}

TEST(Iota, Examples) {
  const SeriesVec c3 = series_of(chain(3), SeriesMode::strict);
  EXPECT_EQ(iota(c3), SeriesVec::basis(3, SeriesMode::weak));
  EXPECT_EQ(iota(series_of(star(), SeriesMode::strict)), weak({{2, 1}, {3, -6}, {4, 6}}));
  for (const Poset& p : posets_up_to(4)) {
    const SeriesVec s = series_of(p, SeriesMode::strict);
    EXPECT_EQ(iota(iota(s)), s);
    EXPECT_EQ(iota(s), series_of(p, SeriesMode::weak));
  }
  try {
    iota(SeriesVec::basis(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingProvenance);
  }
}

TEST(OperadEval, FourPointTable) {
  const std::vector<SeriesVec> ones(4, SeriesVec::basis(1));
  EXPECT_EQ(operad_eval_series(zigzag_poset(), ones).result, strict({{2, 1}, {3, 5}, {4, 5}}));
  EXPECT_EQ(operad_eval_series(parse_poset("{x,y,z<w}"), ones).result, strict({{2, 4}, {3, 15}, {4, 12}}));
  EXPECT_EQ(operad_eval_series(zigzag_poset(), {SeriesVec::basis(1), SeriesVec::basis(2), SeriesVec::basis(1),
                                                SeriesVec::basis(1)})
                .result,
            strict({{3, 2}, {4, 8}, {5, 7}}));
  EXPECT_THROW(operad_eval_series(zigzag_poset(), {SeriesVec::basis(1)}), Error);
}

TEST(OperadEval, ChainArgumentsMatchLexSum) {
  for (const Poset& p : posets_up_to(4)) {
    std::vector<std::size_t> lengths(p.size(), 0);
    std::function<void(std::size_t)> go = [&](std::size_t slot) {
      if (slot == p.size()) {
        std::vector<SeriesVec> args;
        std::vector<Poset> inner;
        for (auto l : lengths) {
          args.push_back(SeriesVec::basis(l));
          inner.push_back(chain(l));
        }
        const OperadEvaluation ev = operad_eval_series(p, args);
        EXPECT_EQ(ev.exact_mode, p.empty());
        EXPECT_EQ(ev.result, series_of(lex_sum(p, inner), SeriesMode::strict));
        return;
      }
      for (std::size_t l = 0; l <= 3; ++l) {
        lengths[slot] = l;
        go(slot + 1);
      }
    };
    if (p.size() <= 3) go(0);
  }
}

TEST(OperadEval, ExactAndMultilinearModesAgree) {
  const auto corpus = posets_up_to(3);
  for (const Poset& outer : posets_up_to(3)) {
    if (outer.empty()) continue;
    std::vector<SeriesVec> args;
    for (std::size_t i = 0; i < outer.size(); ++i)
      args.push_back(series_of(corpus[(i * 5 + outer.size()) % corpus.size()], SeriesMode::strict));
    const OperadEvaluation ev = operad_eval_series(outer, args);
    EXPECT_TRUE(ev.exact_mode);
    EXPECT_TRUE(ev.consistent) << ev.notes.size();
  }
  const OperadEvaluation zig = operad_eval_series(
      zigzag_poset(), {series_of(antichain(2), SeriesMode::strict), series_of(chain(2), SeriesMode::strict),
                       series_of(parse_poset("{a<b,a<c}"), SeriesMode::strict), SeriesVec::basis(1)});
  EXPECT_TRUE(zig.consistent);
}

TEST(OperadEval, NoSeriesParallelPosetGivesTheZigzagRow) {
  const std::vector<std::string> series_parallel{"{x<y<z<w}", "{x<y<z,w}", "{x<y,z<w}", "{x<y,x<z,x<w}",
                                                 "{y<x,z<x,w<x}", "{x,y,z<w}", "{x,y,z,w}", "{x<y>z,w}",
                                                 "{x,y>z<w}"};
  const SeriesVec target = series_of(zigzag_poset(), SeriesMode::strict);
  for (const auto& text : series_parallel)
    EXPECT_FALSE(operad_eval_series(parse_poset(text), std::vector<SeriesVec>(4, SeriesVec::basis(1))).result == target);
}

TEST(SeriesIdentities, Distributivity) {
  IdentityParams params;
  params.values = {{"s", 1}, {"p", 1}, {"q", 1}};
  const IdentityCheck c = series_identity_check("distributivity", params);
  EXPECT_TRUE(c.pass);
  // Z_1 # Z_2 = 2 Z_2 + 3 Z_3.
  EXPECT_EQ(hadamard(SeriesVec::basis(1), ordinal_mul(SeriesVec::basis(1), SeriesVec::basis(1))), strict({{2, 2}, {3, 3}}));
  for (long s = 0; s <= 3; ++s)
    for (long p = 0; p <= 3; ++p)
      for (long q = 0; q <= 2; ++q) {
        params.values = {{"s", s}, {"p", p}, {"q", q}};
        EXPECT_TRUE(series_identity_check("distributivity", params).pass) << s << p << q;
      }
}

TEST(SeriesIdentities, ZigzagReversal) {
  IdentityParams params;
  params.values = {{"a", 1}, {"b", 2}, {"c", 1}, {"d", 1}};
  EXPECT_TRUE(series_identity_check("zigzag-reversal", params).pass);
  EXPECT_EQ(zigzag_on_chains(1, 2, 1, 1), zigzag_on_chains(1, 1, 2, 1));
  EXPECT_FALSE(zigzag_on_chains(1, 2, 1, 1) == zigzag_on_chains(2, 1, 1, 1));
  EXPECT_EQ(zigzag_on_chains(2, 1, 1, 1), zigzag_on_chains(1, 1, 1, 2));
  for (long k = 1; k <= 3; ++k) {
    IdentityParams p;
    p.values = {{"k", k}};
    EXPECT_TRUE(series_identity_check("zigzag-slot-formulas", p).pass);
  }
}

TEST(SeriesIdentities, HStarAndAntichains) {
  IdentityParams params;
  params.values = {{"n", 3}};
  EXPECT_TRUE(series_identity_check("h-star-top-vanishing", params).pass);
  EXPECT_EQ(h_star(series_of(antichain(3), SeriesMode::weak)).degree(), 2);
  for (const Poset& p : posets_up_to(5)) {
    IdentityParams q;
    q.poset = p;
    EXPECT_TRUE(series_identity_check("h-star-top-vanishing", q).pass);
  }
  for (long n = 0; n <= 6; ++n) {
    IdentityParams q;
    q.values = {{"n", n}};
    EXPECT_TRUE(series_identity_check("antichain-strict-weak", q).pass);
  }
  try {
    series_identity_check("no-such-identity", {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownIdentity);
  }
}
