#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "posetop/rational.hpp"

namespace posetop {

/// Bits needed for `digits` decimal digits plus a guard margin.
inline mpfr_prec_t bits_for_digits(unsigned digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873622)) + 32;
}

/// An MPFR value with its own precision. Binary operations round to the
/// larger precision of the two operands.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 256) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
  }
  Real(double x, mpfr_prec_t bits) : Real(bits) { mpfr_set_d(value_, x, MPFR_RNDN); }
  Real(const Rational& q, mpfr_prec_t bits) : Real(bits) { mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN); }
  Real(const Real& o) : Real(mpfr_get_prec(o.value_)) { mpfr_set(value_, o.value_, MPFR_RNDN); }
  Real(Real&& o) noexcept : Real(mpfr_prec_t{MPFR_PREC_MIN}) { mpfr_swap(value_, o.value_); }
  Real& operator=(Real o) noexcept {
    mpfr_swap(value_, o.value_);
    return *this;
  }
  ~Real() { mpfr_clear(value_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific notation with `digits` significant digits.
  std::string str(int digits = 20) const {
    char* buf = nullptr;
    const std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
    mpfr_asprintf(&buf, fmt.c_str(), value_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  /// Fixed notation with `decimals` digits after the point.
  std::string fixed(int decimals) const {
    char* buf = nullptr;
    const std::string fmt = "%." + std::to_string(decimals) + "Rf";
    mpfr_asprintf(&buf, fmt.c_str(), value_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  Real& operator+=(const Real& o) { return apply(o, mpfr_add); }
  Real& operator-=(const Real& o) { return apply(o, mpfr_sub); }
  Real& operator*=(const Real& o) { return apply(o, mpfr_mul); }
  Real& operator/=(const Real& o) { return apply(o, mpfr_div); }

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator-(Real a) {
    mpfr_neg(a.value_, a.value_, MPFR_RNDN);
    return a;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }

  friend Real abs(Real a) {
    mpfr_abs(a.value_, a.value_, MPFR_RNDN);
    return a;
  }

 private:
  Real& apply(const Real& o, int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
    if (o.precision() > precision()) mpfr_prec_round(value_, o.precision(), MPFR_RNDN);
    op(value_, value_, o.value_, MPFR_RNDN);
    return *this;
  }

  mpfr_t value_;
};

/// n^{-s} at the given precision.
inline Real inverse_power(unsigned long n, unsigned long s, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_ui_pow_ui(r.get(), n, s, MPFR_RNDN);
  mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
  return r;
}

inline Real pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

/// 2^e as a Real (exact).
inline Real power_of_two(long e, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
  return r;
}

/// One unit in the last place of |x| at x's precision; an upper bound on the
/// rounding error of one operation producing x.
inline Real ulp(const Real& x) {
  Real r(x.precision());
  if (mpfr_zero_p(x.get())) {
    mpfr_set_ui_2exp(r.get(), 1, -static_cast<long>(x.precision()) * 4, MPFR_RNDN);
    return r;
  }
  mpfr_set_ui_2exp(r.get(), 1, mpfr_get_exp(x.get()) - static_cast<long>(x.precision()), MPFR_RNDU);
  return r;
}

}  // namespace posetop
