#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "posetop/rational.hpp"

namespace posetop {

/// How a coefficient vector over C(x, i) is read: the binomial basis C(x, i)
/// or the multiset basis ((x, i)) = C(x + i - 1, i).
enum class EvalMode { binomial, multiset };

/// A polynomial in the monomial basis, dense, trailing zeros trimmed.
class MonomialPoly {
 public:
  MonomialPoly() = default;
  explicit MonomialPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static MonomialPoly constant(const Rational& c) { return MonomialPoly({c}); }
  static MonomialPoly x_power(std::size_t n) {
    std::vector<Rational> c(n + 1, 0);
    c[n] = 1;
    return MonomialPoly(std::move(c));
  }

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(-x).
  MonomialPoly reflected() const {
    std::vector<Rational> c = coeffs_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return MonomialPoly(std::move(c));
  }

  MonomialPoly& operator+=(const MonomialPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  MonomialPoly& operator-=(const MonomialPoly& o) { return *this += o * Rational(-1); }

  friend MonomialPoly operator+(MonomialPoly a, const MonomialPoly& b) { return a += b; }
  friend MonomialPoly operator-(MonomialPoly a, const MonomialPoly& b) { return a -= b; }
  friend MonomialPoly operator*(const MonomialPoly& a, const Rational& s) {
    std::vector<Rational> c = a.coeffs_;
    for (auto& v : c) v *= s;
    return MonomialPoly(std::move(c));
  }
  friend MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return MonomialPoly(std::move(c));
  }
  friend bool operator==(const MonomialPoly& a, const MonomialPoly& b) { return a.coeffs_ == b.coeffs_; }

  MonomialPoly pow(std::size_t e) const {
    MonomialPoly r = constant(1);
    for (std::size_t i = 0; i < e; ++i) r = r * *this;
    return r;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

/// sum_i a_i C(x, i) with exact rational a_i, finitely supported.
class BinomialPoly {
 public:
  BinomialPoly() = default;

  /// C(x, k).
  static BinomialPoly basis(std::size_t k, const Rational& c = 1) {
    BinomialPoly p;
    p.set(k, c);
    return p;
  }

  template <typename Number>
  static BinomialPoly from_coefficients(const std::vector<Number>& a, std::size_t first_index = 0) {
    BinomialPoly p;
    for (std::size_t i = 0; i < a.size(); ++i) p.set(first_index + i, Rational(a[i]));
    return p;
  }

  /// The unique polynomial of degree <= values.size() - 1 taking values[j]
  /// at x = j, by Newton forward differences.
  template <typename Number>
  static BinomialPoly interpolate(const std::vector<Number>& values) {
    BinomialPoly p;
    for (std::size_t i = 0; i < values.size(); ++i) {
      Rational diff = 0;
      for (std::size_t j = 0; j <= i; ++j) {
        Rational term = Rational(binomial(i, j)) * Rational(values[j]);
        if ((i - j) % 2 == 0) diff += term;
        else diff -= term;
      }
      p.set(i, diff);
    }
    return p;
  }

  const std::map<std::size_t, Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t i) const {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }
  void set(std::size_t i, const Rational& c) {
    if (c == 0) coeffs_.erase(i);
    else coeffs_[i] = c;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Highest index with a nonzero coefficient; -1 for zero.
  long degree() const noexcept {
    return coeffs_.empty() ? -1 : static_cast<long>(coeffs_.rbegin()->first);
  }

  Rational eval(const Rational& x, EvalMode mode = EvalMode::binomial) const {
    Rational total = 0;
    for (const auto& [i, a] : coeffs_) {
      if (mode == EvalMode::binomial) total += a * binomial(x, i);
      else total += a * binomial(Rational(x + static_cast<long>(i) - 1), i);
    }
    return total;
  }

  BinomialPoly& operator+=(const BinomialPoly& o) {
    for (const auto& [i, a] : o.coeffs_) set(i, coeff(i) + a);
    return *this;
  }
  friend BinomialPoly operator+(BinomialPoly a, const BinomialPoly& b) { return a += b; }
  friend BinomialPoly operator*(const BinomialPoly& a, const Rational& s) {
    BinomialPoly r;
    for (const auto& [i, c] : a.coeffs_) r.set(i, c * s);
    return r;
  }
  friend BinomialPoly operator-(const BinomialPoly& a, const BinomialPoly& b) {
    return a + b * Rational(-1);
  }
  friend bool operator==(const BinomialPoly& a, const BinomialPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::map<std::size_t, Rational> coeffs_;
};

/// C(x, k) expanded in monomials: x (x-1) ... (x-k+1) / k!.
inline MonomialPoly binomial_as_monomial(std::size_t k) {
  MonomialPoly p = MonomialPoly::constant(1);
  for (std::size_t j = 0; j < k; ++j) p = p * MonomialPoly({Rational(-static_cast<long>(j)), Rational(1)});
  Rational scale(Integer(1), factorial(k));
  scale.canonicalize();
  return p * scale;
}

inline MonomialPoly to_monomial(const BinomialPoly& p) {
  MonomialPoly out;
  for (const auto& [i, a] : p.coeffs()) out += binomial_as_monomial(i) * a;
  return out;
}

/// Coefficients over C(x, i) from the forward differences of p at 0.
inline BinomialPoly to_binomial(const MonomialPoly& p) {
  std::vector<Rational> values;
  const std::size_t n = p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()) + 1;
  for (std::size_t j = 0; j < n; ++j) values.push_back(p.eval(static_cast<long>(j)));
  return BinomialPoly::interpolate(values);
}

/// Rewrites sum_i w_i C(x + i - 1, i) in the binomial basis, using
/// C(x + i - 1, i) = sum_j C(i - 1, i - j) C(x, j).
inline BinomialPoly multiset_to_binomial(const BinomialPoly& multiset_coeffs) {
  BinomialPoly out;
  for (const auto& [i, w] : multiset_coeffs.coeffs()) {
    if (i == 0) {
      out.set(0, out.coeff(0) + w);
      continue;
    }
    for (std::size_t j = 1; j <= i; ++j) {
      out.set(j, out.coeff(j) + w * Rational(binomial(i - 1, i - j)));
    }
  }
  return out;
}

}  // namespace posetop
