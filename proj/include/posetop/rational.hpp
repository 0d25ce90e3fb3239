#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace posetop {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" with q > 0; integers keep the "/1" so the format is uniform.
inline std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Accepts "p/q", "p" and a leading sign. Throws std::invalid_argument.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

/// a / b in lowest terms.
inline Rational ratio(const Integer& a, const Integer& b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// C(n, k) for a nonnegative integer n; zero when k > n.
inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// C(n, k) for any integer n, using the falling-factorial extension.
inline Integer binomial(const Integer& n, unsigned long k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

/// C(x, k) = x (x-1) ... (x-k+1) / k! for rational x.
inline Rational binomial(const Rational& x, std::size_t k) {
  if (x.get_den() == 1) return Rational(binomial(x.get_num(), k));
  Rational r = 1;
  for (std::size_t j = 0; j < k; ++j) {
    r *= (x - static_cast<long>(j));
    r /= static_cast<long>(j + 1);
  }
  return r;
}

inline Rational pow(const Rational& base, long exponent) {
  Rational r = 1;
  Rational b = exponent >= 0 ? base : Rational(1) / base;
  unsigned long e = exponent >= 0 ? static_cast<unsigned long>(exponent)
                                  : static_cast<unsigned long>(-exponent);
  while (e != 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

inline int sign_of_power(std::size_t exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace posetop
