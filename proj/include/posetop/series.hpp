#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetop/error.hpp"
#include "posetop/order_enum.hpp"
#include "posetop/polynomial.hpp"
#include "posetop/poset.hpp"
#include "posetop/rational.hpp"

namespace posetop {

/// Strict series live over Z_i = x^i / (1-x)^{i+1}; weak series over
/// Z+_i = x / (1-x)^{i+1}. Index 0 is the unit of each family.
enum class SeriesMode { strict, weak };

inline const char* to_string(SeriesMode m) { return m == SeriesMode::strict ? "strict" : "weak"; }

/// An order series in the inclusion-exclusion basis.
struct SeriesVec {
  SeriesMode mode = SeriesMode::strict;
  std::map<std::size_t, Rational> coeffs;
  std::optional<Poset> provenance;

  static SeriesVec basis(std::size_t k, SeriesMode mode = SeriesMode::strict) {
    SeriesVec s;
    s.mode = mode;
    s.coeffs[k] = 1;
    return s;
  }

  Rational coeff(std::size_t i) const {
    auto it = coeffs.find(i);
    return it == coeffs.end() ? Rational(0) : it->second;
  }
  void add(std::size_t i, const Rational& c) {
    Rational v = coeff(i) + c;
    if (v == 0) coeffs.erase(i);
    else coeffs[i] = v;
  }
  std::size_t top_index() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }

  SeriesVec& operator+=(const SeriesVec& o) {
    if (mode != o.mode) throw Error(ErrorKind::ModeMismatch, "adding strict and weak series");
    for (const auto& [i, c] : o.coeffs) add(i, c);
    provenance.reset();
    return *this;
  }
  friend SeriesVec operator+(SeriesVec a, const SeriesVec& b) { return a += b; }
  friend SeriesVec operator-(SeriesVec a, const SeriesVec& b) { return a += b * Rational(-1); }
  friend SeriesVec operator*(SeriesVec a, const Rational& s) {
    SeriesVec r;
    r.mode = a.mode;
    for (const auto& [i, c] : a.coeffs) r.add(i, c * s);
    return r;
  }

  /// Coefficients and mode only; provenance is bookkeeping.
  friend bool operator==(const SeriesVec& a, const SeriesVec& b) {
    return a.mode == b.mode && a.coeffs == b.coeffs;
  }
};

/// The order series of P: d_i in strict mode, (-1)^{|P|-i} d_i in weak mode.
inline SeriesVec series_of(const DVector& dv, SeriesMode mode) {
  SeriesVec s;
  s.mode = mode;
  const BinomialPoly c =
      mode == SeriesMode::strict ? strict_coefficients(dv) : weak_multiset_coefficients(dv);
  for (const auto& [i, a] : c.coeffs()) s.add(i, a);
  s.provenance = dv.poset;
  return s;
}

inline SeriesVec series_of(const Poset& p, SeriesMode mode, const EnumerationLimits& limits = {}) {
  return series_of(d_vector(p, limits), mode);
}

/// numerator(x) / (1-x)^den_power.
struct ClosedForm {
  MonomialPoly numerator;
  std::size_t den_power = 1;
};

inline ClosedForm closed_form(const SeriesVec& s) {
  ClosedForm f;
  const std::size_t top = s.top_index();
  f.den_power = top + 1;
  const MonomialPoly x({Rational(0), Rational(1)});
  const MonomialPoly one_minus_x({Rational(1), Rational(-1)});
  for (const auto& [i, c] : s.coeffs) {
    MonomialPoly lead = (s.mode == SeriesMode::strict) ? x.pow(i) : x;
    f.numerator += lead * one_minus_x.pow(top - i) * c;
  }
  return f;
}

/// First `terms` power-series coefficients of a closed form.
inline std::vector<Rational> expand(const ClosedForm& f, std::size_t terms) {
  std::vector<Rational> out(terms, 0);
  const std::size_t p = f.den_power;
  for (std::size_t n = 0; n < terms; ++n) {
    for (std::size_t j = 0; j <= n && j < f.numerator.coeffs().size(); ++j) {
      // [x^m] (1-x)^{-p} = C(m + p - 1, p - 1)
      out[n] += f.numerator.coeff(j) * Rational(binomial(n - j + p - 1, p - 1));
    }
  }
  return out;
}

/// h*(x) of a weak series: the numerator with its factor x removed.
inline MonomialPoly h_star(const SeriesVec& weak) {
  if (weak.mode != SeriesMode::weak) throw Error(ErrorKind::ModeMismatch, "h* needs a weak series");
  const MonomialPoly numerator = closed_form(weak).numerator;
  const auto& c = numerator.coeffs();
  if (c.empty()) return {};
  return MonomialPoly(std::vector<Rational>(c.begin() + 1, c.end()));
}

/// The series as a rational function evaluated at x (x != 1).
inline Rational evaluate(const SeriesVec& s, const Rational& x) {
  Rational total = 0;
  for (const auto& [i, c] : s.coeffs) {
    const Rational lead = (s.mode == SeriesMode::strict) ? pow(x, static_cast<long>(i)) : x;
    total += c * lead / pow(Rational(1) - x, static_cast<long>(i + 1));
  }
  return total;
}

/// Z_n (Hadamard) Z_s = sum_{j=0}^{min} C(max+j, min) C(min, j) Z_{max+j}.
inline std::map<std::size_t, Integer> hadamard_constants(std::size_t n, std::size_t s) {
  if (s > n) std::swap(n, s);
  std::map<std::size_t, Integer> out;
  for (std::size_t j = 0; j <= s; ++j) {
    Integer c = binomial(n + j, s) * binomial(s, j);
    if (c != 0) out[n + j] = c;
  }
  return out;
}

/// Coefficient-wise product of power series, realizing disjoint union.
inline SeriesVec hadamard(const SeriesVec& a, const SeriesVec& b) {
  if (a.mode != SeriesMode::strict || b.mode != SeriesMode::strict) {
    throw Error(ErrorKind::ModeMismatch, "Hadamard product is defined on strict series only");
  }
  SeriesVec r;
  for (const auto& [i, ca] : a.coeffs)
    for (const auto& [j, cb] : b.coeffs)
      for (const auto& [k, c] : hadamard_constants(i, j)) r.add(k, ca * cb * Rational(c));
  if (a.provenance && b.provenance) r.provenance = disjoint_union(*a.provenance, *b.provenance);
  return r;
}

/// a (1-x) b, realizing the ordinal sum: Z_a, Z_b -> Z_{a+b}.
inline SeriesVec ordinal_mul(const SeriesVec& a, const SeriesVec& b) {
  if (a.mode != SeriesMode::strict || b.mode != SeriesMode::strict) {
    throw Error(ErrorKind::ModeMismatch, "ordinal product is defined on strict series only");
  }
  SeriesVec r;
  for (const auto& [i, ca] : a.coeffs)
    for (const auto& [j, cb] : b.coeffs) r.add(i + j, ca * cb);
  if (a.provenance && b.provenance) r.provenance = ordinal_sum(*a.provenance, *b.provenance);
  return r;
}

/// Exchanges strict and weak series of the generating poset:
/// c_i -> (-1)^{|P|-i} c_i, flipping the mode.
inline SeriesVec iota(const SeriesVec& s) {
  if (!s.provenance) {
    throw Error(ErrorKind::MissingProvenance, "the involution needs the generating poset");
  }
  SeriesVec r;
  r.mode = (s.mode == SeriesMode::strict) ? SeriesMode::weak : SeriesMode::strict;
  const std::size_t n = s.provenance->size();
  for (const auto& [i, c] : s.coeffs) {
    // Indices above |P| cannot occur in a poset-generated series.
    const long parity = static_cast<long>(n) - static_cast<long>(i);
    r.add(i, c * Rational(parity % 2 == 0 ? 1 : -1));
  }
  r.provenance = s.provenance;
  return r;
}

struct OperadEvaluation {
  SeriesVec result;
  bool exact_mode = false;        // every argument carried its poset
  bool multilinear_mode = false;  // chain-slot action extended multilinearly
  bool consistent = true;         // both modes ran and agreed (or only one ran)
  std::vector<std::string> notes;
};

/// The action of P on strict order series.
///
/// With poset-generated arguments the result is the series of the
/// lexicographic sum. The chain-slot action P(Z_n1, ..., Z_nk) is also
/// extended multilinearly; when both apply they are compared.
inline OperadEvaluation operad_eval_series(const Poset& p, const std::vector<SeriesVec>& args,
                                           const EnumerationLimits& limits = {}) {
  if (args.size() != p.size()) {
    throw Error(ErrorKind::ArityMismatch, "poset of size " + std::to_string(p.size()) +
                                              " applied to " + std::to_string(args.size()) +
                                              " series");
  }
  for (const auto& a : args) {
    if (a.mode != SeriesMode::strict) throw Error(ErrorKind::ModeMismatch, "arguments must be strict");
  }
  OperadEvaluation out;

  std::optional<SeriesVec> exact;
  if (std::all_of(args.begin(), args.end(), [](const SeriesVec& a) { return a.provenance.has_value(); })) {
    std::vector<Poset> inner;
    for (const auto& a : args) inner.push_back(*a.provenance);
    exact = series_of(lex_sum(p, inner), SeriesMode::strict, limits);
    out.exact_mode = true;
  }

  SeriesVec multilinear;
  std::vector<std::size_t> lengths(args.size(), 0);
  auto recurse = [&](auto&& self, std::size_t slot, const Rational& weight) -> void {
    if (slot == args.size()) {
      std::vector<Poset> inner;
      for (std::size_t l : lengths) inner.push_back(chain(l));
      SeriesVec term = series_of(lex_sum(p, inner), SeriesMode::strict, limits);
      for (const auto& [i, c] : term.coeffs) multilinear.add(i, c * weight);
      return;
    }
    for (const auto& [i, c] : args[slot].coeffs) {
      lengths[slot] = i;
      self(self, slot + 1, weight * c);
    }
  };
  recurse(recurse, 0, Rational(1));
  out.multilinear_mode = true;

  if (exact) {
    out.result = *exact;
    if (!(multilinear == *exact)) {
      out.consistent = false;
      out.notes.push_back("multilinear extension disagrees with the lexicographic-sum series");
    }
  } else {
    out.result = multilinear;
    out.notes.push_back("conjectural extension: multilinear chain-slot action");
  }
  return out;
}

/// The zigzag {x<y>z<w}: elements x, y, z, w with x < y, z < y, z < w.
inline Poset zigzag_poset() {
  return Poset::from_covers({"x", "y", "z", "w"}, {{"x", "y"}, {"z", "y"}, {"z", "w"}});
}

/// {x<y>z<w} applied to (Z_a, Z_b, Z_c, Z_d).
inline SeriesVec zigzag_on_chains(std::size_t a, std::size_t b, std::size_t c, std::size_t d,
                                  const EnumerationLimits& limits = {}) {
  return series_of(lex_sum(zigzag_poset(), {chain(a), chain(b), chain(c), chain(d)}), SeriesMode::strict,
                   limits);
}

struct IdentityParams {
  std::map<std::string, long> values;
  std::optional<Poset> poset;

  std::size_t get(const std::string& key, long fallback) const {
    auto it = values.find(key);
    long v = it == values.end() ? fallback : it->second;
    if (v < 0) throw Error(ErrorKind::IndexOutOfRange, "parameter '" + key + "' must be >= 0");
    return static_cast<std::size_t>(v);
  }
};

struct IdentityCheck {
  std::string name;
  bool pass = true;
  std::vector<std::string> details;
};

namespace detail {

inline std::string describe(const SeriesVec& s) {
  if (s.coeffs.empty()) return "0";
  std::string out;
  const char* symbol = s.mode == SeriesMode::strict ? "Z_" : "Z+_";
  for (const auto& [i, c] : s.coeffs) {
    if (!out.empty()) out += (c < 0) ? " - " : " + ";
    else if (c < 0) out += "-";
    Rational mag = abs(c);
    if (mag != 1) out += mag.get_str() + "*";
    out += symbol + std::to_string(i);
  }
  return out;
}

inline void expect_equal(IdentityCheck& check, const std::string& label, const SeriesVec& lhs,
                         const SeriesVec& rhs) {
  const bool ok = (lhs == rhs);
  check.pass = check.pass && ok;
  check.details.push_back(label + ": " + describe(lhs) + (ok ? " == " : " != ") + describe(rhs));
}

}  // namespace detail

/// Names accepted by `series_identity_check`.
inline std::vector<std::string> series_identity_names() {
  return {"distributivity", "zigzag-reversal", "zigzag-slot-formulas", "h-star-top-vanishing",
          "antichain-strict-weak"};
}

/// Exact verification of a named identity between order series.
///
///  - distributivity (s, p, q):
///      Z_s # (Z_p Z_q) = sum_{a+c=s} (Z_a # Z_p)(Z_c # Z_q)
///                        - [sum_{a+c=s-1} (Z_a # Z_p)(Z_c # Z_q)] Z_1
///    where # is the Hadamard product and juxtaposition the ordinal product.
///  - zigzag-reversal (a, b, c, d): {x<y>z<w}(a,b,c,d) = (d,c,b,a), plus the
///    four forms obtained by putting the empty poset in one slot.
///  - zigzag-slot-formulas (k): closed forms for (Z_k,Z_1,Z_1,Z_1) and
///    (Z_1,Z_k,Z_1,Z_1).
///  - h-star-top-vanishing (poset, or n for the n-antichain): deg h* < |P|
///    and the closed form reproduces the weak counts.
///  - antichain-strict-weak (n): strict and weak series of n points agree.
inline IdentityCheck series_identity_check(const std::string& name, const IdentityParams& params,
                                           const EnumerationLimits& limits = {}) {
  IdentityCheck check;
  check.name = name;
  using Z = SeriesVec;

  if (name == "distributivity") {
    const std::size_t s = params.get("s", 1), p = params.get("p", 1), q = params.get("q", 1);
    const Z lhs = hadamard(Z::basis(s), ordinal_mul(Z::basis(p), Z::basis(q)));
    auto convolution = [&](std::size_t total) {
      Z sum;
      for (std::size_t a = 0; a <= total; ++a) {
        sum += ordinal_mul(hadamard(Z::basis(a), Z::basis(p)), hadamard(Z::basis(total - a), Z::basis(q)));
      }
      return sum;
    };
    Z rhs = convolution(s);
    if (s >= 1) rhs = rhs - ordinal_mul(convolution(s - 1), Z::basis(1));
    detail::expect_equal(check, "Z_s # (Z_p Z_q)", lhs, rhs);
    // Same identity on the series of concrete posets.
    const Z lhs_posets = series_of(disjoint_union(chain(s), ordinal_sum(chain(p), chain(q))),
                                   SeriesMode::strict, limits);
    detail::expect_equal(check, "series of chain(s) | (chain(p) * chain(q))", lhs_posets, lhs);
    return check;
  }

  if (name == "zigzag-reversal") {
    const std::size_t a = params.get("a", 1), b = params.get("b", 2), c = params.get("c", 1),
                      d = params.get("d", 1);
    detail::expect_equal(check, "(a,b,c,d) vs (d,c,b,a)", zigzag_on_chains(a, b, c, d, limits),
                         zigzag_on_chains(d, c, b, a, limits));
    const Z za = Z::basis(a), zb = Z::basis(b), zc = Z::basis(c), zd = Z::basis(d);
    detail::expect_equal(check, "empty first slot", zigzag_on_chains(0, b, c, d, limits),
                         ordinal_mul(zc, hadamard(zb, zd)));
    detail::expect_equal(check, "empty second slot", zigzag_on_chains(a, 0, c, d, limits),
                         hadamard(za, Z::basis(c + d)));
    detail::expect_equal(check, "empty third slot", zigzag_on_chains(a, b, 0, d, limits),
                         hadamard(Z::basis(a + b), zd));
    detail::expect_equal(check, "empty fourth slot", zigzag_on_chains(a, b, c, 0, limits),
                         ordinal_mul(zb, hadamard(za, zc)));
    return check;
  }

  if (name == "zigzag-slot-formulas") {
    const std::size_t k = params.get("k", 2);
    if (k < 1) throw Error(ErrorKind::IndexOutOfRange, "k must be >= 1");
    const long kk = static_cast<long>(k);
    Z first;
    first.add(k + 3, ratio((kk + 1) * (kk + 4), 2));
    first.add(k + 2, Rational(binomial(k + 2, 2)) + ratio(kk * (kk + 3), 2));
    first.add(k + 1, Rational(binomial(k + 1, 2)));
    detail::expect_equal(check, "(Z_k, Z_1, Z_1, Z_1)", zigzag_on_chains(k, 1, 1, 1, limits), first);
    Z second;
    second.add(k + 3, Rational(2 * (kk + 3) - 3));
    second.add(k + 2, Rational(2 * (kk + 2) - 3) + Rational(kk + 1));
    second.add(k + 1, Rational(kk));
    detail::expect_equal(check, "(Z_1, Z_k, Z_1, Z_1)", zigzag_on_chains(1, k, 1, 1, limits), second);
    return check;
  }

  if (name == "h-star-top-vanishing") {
    const Poset p = params.poset ? *params.poset : antichain(params.get("n", 3));
    const Z weak = series_of(p, SeriesMode::weak, limits);
    const MonomialPoly h = h_star(weak);
    const bool low_degree = h.degree() < static_cast<long>(p.size()) || p.empty();
    check.pass = low_degree;
    check.details.push_back("deg h* = " + std::to_string(h.degree()) + ", |P| = " + std::to_string(p.size()));
    const auto coeffs = expand(closed_form(weak), p.size() + 4);
    for (std::size_t n = 1; n < coeffs.size(); ++n) {
      if (coeffs[n] != Rational(count_maps(p, n, MapMode::weak, limits))) {
        check.pass = false;
        check.details.push_back("closed form disagrees with weak count at n = " + std::to_string(n));
      }
    }
    return check;
  }

  if (name == "antichain-strict-weak") {
    const std::size_t n = params.get("n", 3);
    const auto dv = d_vector(antichain(n), limits);
    const ClosedForm strict = closed_form(series_of(dv, SeriesMode::strict));
    const ClosedForm weak = closed_form(series_of(dv, SeriesMode::weak));
    const auto a = expand(strict, 12), b = expand(weak, 12);
    // The weak family has no x^0 term; the strict one has it only for n = 0.
    const bool ok = std::equal(a.begin() + 1, a.end(), b.begin() + 1);
    check.pass = ok;
    check.details.push_back(std::string("strict and weak expansions ") + (ok ? "agree" : "differ") +
                            " for " + std::to_string(n) + " points");
    return check;
  }

  throw Error(ErrorKind::UnknownIdentity, "no identity named '" + name + "'");
}

}  // namespace posetop
