#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "posetop/error.hpp"
#include "posetop/kernels.hpp"
#include "posetop/order_enum.hpp"
#include "posetop/polynomial.hpp"
#include "posetop/poset.hpp"
#include "posetop/rational.hpp"
#include "posetop/real.hpp"

namespace posetop {

struct PrecisionContext {
  unsigned working_digits = 50;
  double verify_tolerance = 1e-12;
  std::size_t series_term_cap = 4000;

  mpfr_prec_t bits() const { return bits_for_digits(working_digits); }
};

/// A high-precision value together with a bound on its absolute error.
struct Approx {
  Real value;
  Real error;
};

/// Euler-Maclaurin parameters: direct summation below `cutoff`, then
/// Bernoulli corrections until one falls under 10^-digits.
struct EulerMaclaurinParams {
  unsigned long cutoff = 0;  // 0 selects max(50, digits)
  std::size_t max_corrections = 200;
};

namespace detail {

inline Approx zeta_minus_one_em(unsigned long s, unsigned digits, const EulerMaclaurinParams& params) {
  const mpfr_prec_t bits = bits_for_digits(digits);
  const unsigned long n_cut = params.cutoff != 0 ? params.cutoff : std::max<unsigned long>(50, digits);
  Real sum(bits);
  for (unsigned long n = 2; n < n_cut; ++n) sum += inverse_power(n, s, bits);

  // Tail sum_{n >= N} n^-s = N^{1-s}/(s-1) + N^-s/2
  //   + sum_j B_{2j}/(2j)! s(s+1)...(s+2j-2) N^{-s-2j+1} + R.
  const Real n_pow = inverse_power(n_cut, s, bits);  // N^-s
  const Real big_n(Rational(static_cast<long>(n_cut)), bits);
  sum += n_pow * big_n / Real(Rational(static_cast<long>(s - 1)), bits);
  sum += n_pow / Real(2.0, bits);

  const Real threshold = Real(pow(Rational(10), -static_cast<long>(digits)), bits);
  Real rising(Rational(static_cast<long>(s)), bits);  // s (s+1) ... (s+2j-2)
  Real n_factor = n_pow / big_n;                      // N^{-s-2j+1}, j = 1
  const Real n_sq = big_n * big_n;
  Real remainder(bits);
  bool converged = false;
  for (std::size_t j = 1; j <= params.max_corrections + 1; ++j) {
    const Rational coef = bernoulli_number(2 * j) / Rational(factorial(2 * j));
    Real term = Real(coef, bits) * rising * n_factor;
    if (abs(term) < threshold) {
      // Alternating corrections with a completely monotone integrand: the
      // error is bounded by the first omitted term.
      remainder = abs(term);
      converged = true;
      break;
    }
    if (j == params.max_corrections + 1) break;
    sum += term;
    rising *= Real(Rational(static_cast<long>(s + 2 * j - 1) * static_cast<long>(s + 2 * j)), bits);
    n_factor /= n_sq;
  }
  if (!converged) {
    throw Error(ErrorKind::PrecisionUnachievable,
                "Euler-Maclaurin corrections did not reach 1e-" + std::to_string(digits) +
                    " for s = " + std::to_string(s));
  }
  // Rounding: each of the ~N + j operations contributes at most one ulp of
  // a quantity no larger than the running sum (< 1).
  Real rounding = ulp(Real(1.0, bits)) * Real(Rational(static_cast<long>(4 * (n_cut + params.max_corrections))), bits);
  return Approx{sum, remainder + rounding};
}

}  // namespace detail

/// zeta(s) or zeta(s) - 1 for an integer s >= 2, with an error bound.
///
/// The minus-one form sums from n = 2 and is what every caller in this
/// library uses, since zeta(s) - 1 ~ 2^-s would otherwise cancel.
/// Results are cached per (s, digits).
inline Approx zeta_value(long s, const PrecisionContext& ctx, bool minus_one,
                         const EulerMaclaurinParams& params = {}) {
  if (s < 2) throw Error(ErrorKind::PrecisionUnachievable, "zeta(s) needs s >= 2, got " + std::to_string(s));
  static std::mutex guard;
  static std::map<std::tuple<long, unsigned, unsigned long>, Approx> cache;
  const auto key = std::make_tuple(s, ctx.working_digits, params.cutoff);
  std::optional<Approx> hit;
  {
    std::lock_guard lock(guard);
    if (auto it = cache.find(key); it != cache.end()) hit = it->second;
  }
  if (!hit) {
    hit = detail::zeta_minus_one_em(static_cast<unsigned long>(s), ctx.working_digits, params);
    std::lock_guard lock(guard);
    cache.emplace(key, *hit);
  }
  if (minus_one) return *hit;
  return Approx{hit->value + Real(1.0, ctx.bits()), hit->error};
}

/// zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!).
inline Real zeta_even_closed_form(unsigned long n, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  Real two_pi = pi(bits) * Real(2.0, bits);
  Real power(bits);
  mpfr_pow_ui(power.get(), two_pi.get(), 2 * n, MPFR_RNDN);
  Rational coef = bernoulli_number(2 * n) / Rational(2 * factorial(2 * n));
  if (n % 2 == 0) coef = -coef;
  return Real(coef, bits) * power;
}

/// constant + sum_k coeffs[k] zeta(k+1), everything exact.
struct ZetaExpr {
  Rational constant = 0;
  std::map<std::size_t, Rational> coeffs;  // k >= 1 -> coefficient of zeta(k+1)

  /// c * zeta(s), s >= 2.
  void add_zeta(std::size_t s, const Rational& c) {
    const std::size_t k = s - 1;
    Rational v = coeff(k) + c;
    if (v == 0) coeffs.erase(k);
    else coeffs[k] = v;
  }
  /// c * (zeta(k+1) - 1 - 2^{-(k+1)}).
  void add_shifted(std::size_t k, const Rational& c) {
    add_zeta(k + 1, c);
    constant -= c * (Rational(1) + pow(Rational(2), -static_cast<long>(k + 1)));
  }
  Rational coeff(std::size_t k) const {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? Rational(0) : it->second;
  }

  ZetaExpr& operator+=(const ZetaExpr& o) {
    constant += o.constant;
    for (const auto& [k, c] : o.coeffs) add_zeta(k + 1, c);
    return *this;
  }
  friend ZetaExpr operator+(ZetaExpr a, const ZetaExpr& b) { return a += b; }
  friend ZetaExpr operator*(const ZetaExpr& a, const Rational& s) {
    ZetaExpr r;
    r.constant = a.constant * s;
    for (const auto& [k, c] : a.coeffs) r.add_zeta(k + 1, c * s);
    return r;
  }
  friend ZetaExpr operator-(const ZetaExpr& a, const ZetaExpr& b) { return a + b * Rational(-1); }
  friend bool operator==(const ZetaExpr& a, const ZetaExpr& b) {
    return a.constant == b.constant && a.coeffs == b.coeffs;
  }

  /// "6*zeta(4) - 6*zeta(3) + zeta(2) - 7/8" style, highest zeta first.
  std::string to_string() const {
    std::string out;
    auto append = [&](const Rational& c, const std::string& symbol) {
      if (c == 0) return;
      if (!out.empty()) out += (c < 0) ? " - " : " + ";
      else if (c < 0) out += "-";
      const Rational mag = abs(c);
      if (symbol.empty()) out += mag.get_str();
      else out += (mag == 1 ? "" : mag.get_str() + "*") + symbol;
    };
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      append(it->second, "zeta(" + std::to_string(it->first + 1) + ")");
    append(constant, "");
    return out.empty() ? "0" : out;
  }

  /// Same value in the basis zeta(k+1) - 1 - 2^{-(k+1)} plus a rational.
  std::string to_shifted_string() const {
    std::string out;
    Rational rest = constant;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      const auto& [k, c] = *it;
      const Rational shift = Rational(1) + pow(Rational(2), -static_cast<long>(k + 1));
      rest += c * shift;
      if (!out.empty()) out += (c < 0) ? " - " : " + ";
      else if (c < 0) out += "-";
      const Rational mag = abs(c);
      out += (mag == 1 ? "" : mag.get_str() + "*") + "(zeta(" + std::to_string(k + 1) + ") - " +
             shift.get_str() + ")";
    }
    if (rest != 0 || out.empty()) {
      if (!out.empty()) out += (rest < 0) ? " - " : " + ";
      else if (rest < 0) out += "-";
      out += Rational(abs(rest)).get_str();
    }
    return out;
  }

  /// Numeric value from zeta(k+1) - 1, with the rational parts folded first.
  Approx evaluate(const PrecisionContext& ctx) const {
    const mpfr_prec_t bits = ctx.bits();
    Rational folded = constant;
    for (const auto& [k, c] : coeffs) folded += c;
    Real value(folded, bits);
    Real error(bits);
    for (const auto& [k, c] : coeffs) {
      const Approx z = zeta_value(static_cast<long>(k + 1), ctx, true);
      const Real rc(c, bits);
      value += rc * z.value;
      error += abs(rc) * z.error;
    }
    error += ulp(value) * Real(Rational(static_cast<long>(2 * coeffs.size() + 2)), bits);
    return {value, error};
  }
};

/// C(x, k) -> zeta(k+1) for k >= 1; C(x, 0) -> 1.
inline ZetaExpr n_tilde(const BinomialPoly& p) {
  ZetaExpr z;
  for (const auto& [i, a] : p.coeffs()) {
    if (i == 0) z.constant += a;
    else z.add_zeta(i + 1, a);
  }
  return z;
}

/// C(x, k) -> (-1)^{k+1} (zeta(k+1) - 1 - 2^{-(k+1)}) for k >= 1; C(x, 0) -> 1/2.
inline ZetaExpr n_tilde2(const BinomialPoly& p) {
  ZetaExpr z;
  for (const auto& [i, a] : p.coeffs()) {
    if (i == 0) z.constant += a / 2;
    else z.add_shifted(i, a * sign_of_power(i + 1));
  }
  return z;
}

enum class ZetaVariant { tilde, tilde2 };

/// A zeta-value combination attached to the poset it came from.
struct ZetaNumber {
  ZetaExpr value;
  Poset provenance;
  ZetaVariant variant = ZetaVariant::tilde2;
};

/// tilde: n_tilde(Omega_strict(P)); tilde2: (-1)^{|P|+1} n_tilde2(Omega_strict(P)).
inline ZetaNumber zeta_number(const Poset& p, ZetaVariant variant, const EnumerationLimits& limits = {}) {
  const BinomialPoly omega = strict_coefficients(d_vector(p, limits));
  ZetaNumber out{{}, p, variant};
  if (variant == ZetaVariant::tilde) {
    out.value = n_tilde(omega);
  } else {
    out.value = n_tilde2(omega) * Rational(sign_of_power(p.size() + 1));
  }
  return out;
}

/// The action of P on zeta numbers, transported through the lexicographic sum.
inline ZetaNumber operad_eval_zeta(const Poset& p, const std::vector<ZetaNumber>& args,
                                   const EnumerationLimits& limits = {}) {
  if (args.size() != p.size()) {
    throw Error(ErrorKind::ArityMismatch, "poset of size " + std::to_string(p.size()) +
                                              " applied to " + std::to_string(args.size()) +
                                              " zeta numbers");
  }
  ZetaVariant variant = ZetaVariant::tilde2;
  std::vector<Poset> inner;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i == 0) variant = args[i].variant;
    else if (args[i].variant != variant) throw Error(ErrorKind::ModeMismatch, "mixed zeta variants");
    inner.push_back(args[i].provenance);
  }
  return zeta_number(lex_sum(p, inner), variant, limits);
}

/// zeta(k+1) - 1 - 2^{-(k+1)} attached to chain(k).
inline ZetaNumber zeta_hat(std::size_t k) { return zeta_number(chain(k), ZetaVariant::tilde2); }

/// sum_{k >= start} s_k weight(k) (zeta(k+1) - 1), where s_k = (-1)^{k+1} when
/// alternating and 1 otherwise.
struct ZetaSeries {
  BinomialPoly weight;
  bool alternating = true;
  std::size_t start = 1;
  std::string description;
};

/// A claimed equality between a rational zeta series (or another numeric
/// left side) and an exact finite form, with its numeric verification.
struct IdentityRecord {
  std::string id;
  std::optional<Poset> poset;
  std::string lhs_text;
  std::optional<ZetaSeries> lhs;  // absent when the left side is not a zeta series
  ZetaExpr rhs;
  std::optional<Real> lhs_numeric;
  std::optional<Real> rhs_numeric;
  std::optional<Real> error_bound;
  std::size_t terms_used = 0;
  bool verified = false;
  bool pass = false;
  std::vector<std::string> notes;
};

/// sum_{k >= r0} (-1)^{k+1} Omega(P, k) (zeta(k+1) - 1) against
/// sum_i (-1)^{i+1} d_i (zeta(i+1) - 1 - 2^{-(i+1)}).
///
/// The empty poset (r0 = 0, Omega = 1) keeps the constant term 1/2, the
/// image of C(x, 0). The record notes also carry the exact check of the
/// intermediate form sum_k (-1)^{k+1} Omega(k) / r^{k+1} =
/// sum_i (-1)^{i+1} d_i / (1+r)^{i+1} at r = 2 and r = 3.
inline IdentityRecord finite_form_identity(const Poset& p, const EnumerationLimits& limits = {});

/// Exact value of sum_n Omega(P, n) / r^n (strict) or sum_{n>=1} Omega_weak(P, n) / r^n.
inline Rational inverse_power_sum(const Poset& p, const Rational& r, MapMode mode,
                                  const EnumerationLimits& limits = {}) {
  if (abs(r) <= 1) {
    throw Error(ErrorKind::DivergentParameter, "inverse power sums need |r| > 1, got " + r.get_str());
  }
  const DVector dv = d_vector(p, limits);
  const BinomialPoly strict = strict_coefficients(dv);
  const Rational one_minus_r = Rational(1) - r;
  Rational total = 0;
  if (mode == MapMode::strict) {
    // sum_i (-1)^{i+1} d_i r / (1-r)^{i+1}
    for (const auto& [i, d] : strict.coeffs())
      total += d * sign_of_power(i + 1) * r / pow(one_minus_r, static_cast<long>(i + 1));
  } else {
    // (-1)^{|P|+1} sum_i d_i r^i / (1-r)^{i+1}
    for (const auto& [i, d] : strict.coeffs())
      total += d * pow(r, static_cast<long>(i)) / pow(one_minus_r, static_cast<long>(i + 1));
    total *= sign_of_power(p.size() + 1);
  }
  return total;
}

inline IdentityRecord finite_form_identity(const Poset& p, const EnumerationLimits& limits) {
  const DVector dv = d_vector(p, limits);
  const BinomialPoly omega = strict_coefficients(dv);
  IdentityRecord rec;
  rec.id = "finite-form";
  rec.poset = p;
  const std::size_t r0 = max_chain_length(p);
  rec.lhs = ZetaSeries{omega, true, std::max<std::size_t>(r0, 1),
                       "sum_{k>=r0} (-1)^(k+1) Omega(k) (zeta(k+1)-1)"};
  rec.lhs_text = rec.lhs->description;
  rec.rhs = n_tilde2(omega);
  rec.notes.push_back("r0 = " + std::to_string(r0));
  for (long r : {2L, 3L}) {
    // sum_k (-1)^{k+1} Omega(k) / r^{k+1} = -(1/r) sum_k Omega(k) / (-r)^k
    const Rational left = -inverse_power_sum(p, Rational(-r), MapMode::strict, limits) / Rational(r);
    Rational right = 0;
    for (const auto& [i, d] : omega.coeffs())
      right += d * sign_of_power(i + 1) / pow(Rational(1 + r), static_cast<long>(i + 1));
    // The i = 0 term of the empty poset is the geometric series itself.
    rec.notes.push_back("1/r^(k+1) form at r = " + std::to_string(r) + ": " + to_fraction_string(left) +
                        (left == right ? " == " : " != ") + to_fraction_string(right));
  }
  return rec;
}

/// Goldbach: sum_{n>=2} (zeta(n) - 1) = 1.
inline IdentityRecord goldbach_record() {
  IdentityRecord rec;
  rec.id = "goldbach";
  rec.lhs = ZetaSeries{BinomialPoly::basis(0), false, 1, "sum_{k>=1} (zeta(k+1)-1)"};
  rec.lhs_text = rec.lhs->description;
  rec.rhs = n_tilde(BinomialPoly::basis(0));
  return rec;
}

/// sum_{n>=1} (-1)^{n+1} (zeta(n+1) - 1) = 1/2.
inline IdentityRecord alternating_half_record() {
  IdentityRecord rec;
  rec.id = "alternating-half";
  rec.lhs = ZetaSeries{BinomialPoly::basis(0), true, 1, "sum_{k>=1} (-1)^(k+1) (zeta(k+1)-1)"};
  rec.lhs_text = rec.lhs->description;
  rec.rhs = n_tilde2(BinomialPoly::basis(0));
  return rec;
}

/// sum_{n>=k} (-1)^{n+1} C(n, k) (zeta(n+1) - 1) = (-1)^{k+1} (zeta(k+1) - 1 - 2^{-(k+1)}).
inline IdentityRecord binomial_alternating_record(std::size_t k) {
  IdentityRecord rec;
  rec.id = "binomial-alternating-" + std::to_string(k);
  rec.lhs = ZetaSeries{BinomialPoly::basis(k), true, std::max<std::size_t>(k, 1),
                       "sum_{n>=" + std::to_string(k) + "} (-1)^(n+1) C(n," + std::to_string(k) +
                           ") (zeta(n+1)-1)"};
  rec.lhs_text = rec.lhs->description;
  rec.rhs = n_tilde2(BinomialPoly::basis(k));
  return rec;
}

/// sum_{n>=k} C(n, k) (zeta(n+1) - 1) = zeta(k+1).
inline IdentityRecord binomial_record(std::size_t k) {
  IdentityRecord rec;
  rec.id = "binomial-" + std::to_string(k);
  rec.lhs = ZetaSeries{BinomialPoly::basis(k), false, std::max<std::size_t>(k, 1),
                       "sum_{n>=" + std::to_string(k) + "} C(n," + std::to_string(k) + ") (zeta(n+1)-1)"};
  rec.lhs_text = rec.lhs->description;
  rec.rhs = n_tilde(BinomialPoly::basis(k));
  return rec;
}

namespace detail {

// Upper bound for |weight(k)|: sum_i |a_i| k^i (since |C(k, i)| <= k^i).
inline double weight_bound(const BinomialPoly& w, double k) {
  double total = 0;
  for (const auto& [i, a] : w.coeffs()) total += std::fabs(a.get_d()) * std::pow(k, static_cast<double>(i));
  return total;
}

// Smallest N with sum_{k>N} |weight(k)| (zeta(k+1) - 1) < budget, using
// zeta(k+1) - 1 <= 3 * 2^{-(k+1)} and a geometric majorant of the tail.
inline std::size_t tail_cutoff(const BinomialPoly& w, std::size_t start, double budget, std::size_t cap,
                               double* bound_out) {
  const double degree = std::max<double>(0.0, static_cast<double>(w.degree()));
  for (std::size_t n = std::max<std::size_t>(start, 1); n <= cap; ++n) {
    const double next = static_cast<double>(n + 1);
    const double ratio = std::pow((next + 1) / next, degree) / 2.0;
    if (ratio > 0.75) continue;
    const double first = 3.0 * weight_bound(w, next) * std::ldexp(1.0, -static_cast<int>(n + 2));
    const double tail = 2.0 * first / (1.0 - ratio);  // factor 2 covers double rounding
    if (tail < budget) {
      *bound_out = tail;
      return n;
    }
  }
  throw Error(ErrorKind::PrecisionUnachievable, "tail bound needs more than " + std::to_string(cap) + " terms");
}

}  // namespace detail

/// Sums the left side to a certified cutoff, evaluates the right side from
/// zeta values, and sets pass when |lhs - rhs| <= error bound + tolerance.
inline IdentityRecord verify_identity(IdentityRecord rec, const PrecisionContext& ctx) {
  if (!rec.lhs) {
    throw Error(ErrorKind::PrecisionUnachievable, "record '" + rec.id + "' has no zeta-series left side");
  }
  const ZetaSeries& lhs = *rec.lhs;
  const mpfr_prec_t bits = ctx.bits();
  double tail = 0;
  const std::size_t cutoff =
      detail::tail_cutoff(lhs.weight, lhs.start, ctx.verify_tolerance / 2, ctx.series_term_cap, &tail);

  Real sum(bits);
  Real error(bits);
  for (std::size_t k = std::max<std::size_t>(lhs.start, 1); k <= cutoff; ++k) {
    Rational w = lhs.weight.eval(Rational(static_cast<long>(k)));
    if (w == 0) continue;
    if (lhs.alternating && k % 2 == 0) w = -w;
    const Approx z = zeta_value(static_cast<long>(k + 1), ctx, true);
    const Real rw(w, bits);
    sum += rw * z.value;
    error += abs(rw) * z.error + ulp(sum);
  }
  error += Real(tail, bits);
  const Approx right = rec.rhs.evaluate(ctx);
  error += right.error;

  rec.lhs_numeric = sum;
  rec.rhs_numeric = right.value;
  rec.error_bound = error;
  rec.terms_used = cutoff;
  rec.verified = true;
  rec.pass = abs(sum - right.value) <= error + Real(ctx.verify_tolerance, bits);
  return rec;
}

namespace detail {

// 1/(n^k (n+1)^k) = sum_j a_j / n^j + b_j / (n+1)^j with
// a_j = (-1)^{k-j} C(2k-j-1, k-j) and b_j = (-1)^k C(2k-j-1, k-j).
// Summing over n >= 1 telescopes the j = 1 part to a_1.
inline ZetaExpr reciprocal_product_telescoped(std::size_t k) {
  ZetaExpr z;
  for (std::size_t j = 1; j <= k; ++j) {
    const Rational mag(binomial(2 * k - j - 1, k - j));
    const Rational a = mag * sign_of_power(k - j);
    const Rational b = mag * sign_of_power(k);
    if (j == 1) {
      z.constant += a;  // sum_n (1/n - 1/(n+1)) = 1
      continue;
    }
    z.add_zeta(j, a + b);
    z.constant -= b;  // sum_{n>=1} (n+1)^-j = zeta(j) - 1
  }
  return z;
}

// sum_{m=0, m != k-1}^{k} (1 + (-1)^{k-m}) zeta(k-m) C(-k, m) with zeta(0) = -1/2.
inline ZetaExpr reciprocal_product_printed(std::size_t k) {
  ZetaExpr z;
  for (std::size_t m = 0; m <= k; ++m) {
    if (m + 1 == k) continue;
    const Rational factor = Rational(1 + sign_of_power(k - m)) * Rational(binomial(Integer(-static_cast<long>(k)), m));
    if (factor == 0) continue;
    const std::size_t s = k - m;
    if (s == 0) z.constant += factor * Rational(-1, 2);
    else z.add_zeta(s, factor);
  }
  return z;
}

}  // namespace detail

/// Checks sum_{n>=1} 1/(n^k (n+1)^k) against its printed zeta-value form.
///
/// The left side is summed directly to n = 20000 with the tail bracketed by
/// integrals of x^{-2k} and (x+1)^{-2k}. The record's rhs is the printed form;
/// the notes carry the partial-fraction value and whether the two agree.
inline IdentityRecord reciprocal_product_check(std::size_t k, const PrecisionContext& ctx, unsigned long terms = 20000) {
  if (k < 2) throw Error(ErrorKind::IndexOutOfRange, "k must be >= 2");
  const mpfr_prec_t bits = ctx.bits();
  IdentityRecord rec;
  rec.id = "reciprocal-product-" + std::to_string(k);
  rec.lhs_text = "sum_{n>=1} 1/(n^" + std::to_string(k) + " (n+1)^" + std::to_string(k) + ")";
  rec.rhs = detail::reciprocal_product_printed(k);

  Real sum(bits);
  Real rounding(bits);
  for (unsigned long n = 1; n <= terms; ++n) {
    sum += inverse_power(n * (n + 1), k, bits);
    rounding += ulp(sum);
  }
  // sum_{n>N} f(n) lies in [(N+2)^{1-2k}, N^{1-2k}] / (2k-1).
  const Rational width_den(static_cast<long>(2 * k - 1));
  const Real upper = inverse_power(terms, 2 * k - 1, bits) / Real(width_den, bits);
  const Real lower = inverse_power(terms + 2, 2 * k - 1, bits) / Real(width_den, bits);
  const Real half(0.5, bits);
  sum += (upper + lower) * half;
  const Real error = (upper - lower) * half + rounding * Real(2.0, bits);

  const Approx printed = rec.rhs.evaluate(ctx);
  const ZetaExpr telescoped = detail::reciprocal_product_telescoped(k);
  const Approx oracle = telescoped.evaluate(ctx);

  rec.lhs_numeric = sum;
  rec.rhs_numeric = printed.value;
  rec.error_bound = error + printed.error;
  rec.terms_used = terms;
  rec.verified = true;
  rec.pass = abs(sum - printed.value) <= *rec.error_bound + Real(ctx.verify_tolerance, bits);
  rec.notes.push_back("partial-fraction value: " + telescoped.to_string() + " = " + oracle.value.str(25));
  rec.notes.push_back(std::string("printed form ") + (telescoped == rec.rhs ? "equals" : "differs from") +
                      " the partial-fraction form exactly");
  if (!rec.pass) rec.notes.push_back("printed form fails numerically; use the partial-fraction value");
  return rec;
}

}  // namespace posetop
