#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "posetop/order_enum.hpp"
#include "posetop/series.hpp"
#include "posetop/zeta.hpp"

namespace posetop {

/// A published value compared against the value recomputed here.
struct Discrepancy {
  std::string id;
  std::string statement;
  std::string published;
  std::string derived;
  bool flagged = false;  // published and derived disagree
  std::vector<std::string> notes;
};

namespace detail {

inline SeriesVec strict_series(std::initializer_list<std::pair<std::size_t, long>> terms) {
  SeriesVec s;
  for (const auto& [i, c] : terms) s.add(i, Rational(c));
  return s;
}

// sum c_k * (zeta(k+1) - 1 - 2^{-(k+1)})
inline ZetaExpr shifted_combination(std::initializer_list<std::pair<std::size_t, long>> terms) {
  ZetaExpr z;
  for (const auto& [k, c] : terms) z.add_shifted(k, Rational(c));
  return z;
}

}  // namespace detail

/// {x<y>z<w} with one slot replaced by Z_2. The published low-order terms sit
/// at index 2, below the longest chain of the composite, and the published
/// pairing of argument tuples disagrees with the reversal symmetry.
inline Discrepancy zigzag_low_index_discrepancy() {
  Discrepancy d;
  d.id = "zigzag-low-index";
  d.statement = "{x<y>z<w} evaluated with one argument Z_2 and the rest Z_1";
  const SeriesVec pub_a = detail::strict_series({{5, 9}, {4, 11}, {2, 3}});
  const SeriesVec pub_b = detail::strict_series({{5, 7}, {4, 8}, {2, 2}});
  d.published = "(2,1,1,1) = (1,1,2,1) = " + detail::describe(pub_a) + "; (1,2,1,1) = (1,1,1,2) = " +
                detail::describe(pub_b);

  const SeriesVec s2111 = zigzag_on_chains(2, 1, 1, 1);
  const SeriesVec s1211 = zigzag_on_chains(1, 2, 1, 1);
  const SeriesVec s1121 = zigzag_on_chains(1, 1, 2, 1);
  const SeriesVec s1112 = zigzag_on_chains(1, 1, 1, 2);
  d.derived = "(2,1,1,1) = (1,1,1,2) = " + detail::describe(s2111) + "; (1,2,1,1) = (1,1,2,1) = " +
              detail::describe(s1211);
  d.flagged = !(s2111 == pub_a) || !(s1121 == pub_a) || !(s1211 == pub_b) || !(s1112 == pub_b);
  if (s2111 == s1112 && s1211 == s1121) d.notes.push_back("reversal pairs slot 1 with slot 4 and slot 2 with slot 3");
  d.notes.push_back("longest chain of each composite is 3, so no term below Z_3 can occur");
  return d;
}

/// {x<y>z<w}(zhat[1], zhat[2], zhat[1], zhat[1]) against the published combination.
inline Discrepancy zigzag_zeta_discrepancy() {
  Discrepancy d;
  d.id = "zigzag-zeta-value";
  d.statement = "{x<y>z<w}(zhat[1], zhat[2], zhat[1], zhat[1]) with zhat[k] = zeta(k+1) - 1 - 2^-(k+1)";
  const ZetaExpr published = detail::shifted_combination({{2, 2}, {3, -8}, {4, 5}});
  d.published = published.to_shifted_string();
  const ZetaNumber derived =
      operad_eval_zeta(zigzag_poset(), {zeta_hat(1), zeta_hat(2), zeta_hat(1), zeta_hat(1)});
  d.derived = derived.value.to_shifted_string();
  d.flagged = !(derived.value == published);
  d.notes.push_back("d-vector of the composite: " + [&] {
    std::string s;
    for (const auto& v : d_vector(derived.provenance).d) s += (s.empty() ? "" : ",") + v.get_str();
    return "(" + s + ")";
  }());
  return d;
}

/// Strict = weak series of n points, cleared of denominators, at n = 2.
inline Discrepancy stirling_symmetry_discrepancy(std::size_t n = 2) {
  Discrepancy d;
  d.id = "stirling-symmetry-sign";
  d.statement = "sum_k k! S(n,k) x^(k-1) (1-x)^(n-k) at n = " + std::to_string(n);
  const StirlingSymmetryReport r = stirling_symmetry_check(n);
  auto show = [](const MonomialPoly& p) {
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      const Rational& c = p.coeffs()[i];
      if (c == 0) continue;
      if (!s.empty()) s += (c < 0) ? " - " : " + ";
      else if (c < 0) s += "-";
      const Rational mag = abs(c);
      if (i == 0) s += mag.get_str();
      else s += (mag == 1 ? "" : mag.get_str() + "*") + (i == 1 ? "x" : "x^" + std::to_string(i));
    }
    return s.empty() ? std::string("0") : s;
  };
  d.published = "sum_k (n-k)! S(n,n-k) (1-x)^k = " + show(r.printed_rhs);
  d.derived = "sum_k (-1)^(n-k) k! S(n,k) (1-x)^(n-k) = " + show(r.corrected_rhs);
  d.flagged = !r.printed_holds;
  d.notes.push_back("left side: " + show(r.lhs));
  d.notes.push_back(std::string("derived form ") + (r.corrected_holds ? "holds" : "fails"));
  return d;
}

inline std::vector<Discrepancy> discrepancy_ledger() {
  return {zigzag_low_index_discrepancy(), zigzag_zeta_discrepancy(), stirling_symmetry_discrepancy()};
}

}  // namespace posetop
