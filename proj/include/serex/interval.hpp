#pragma once

// Closed intervals with directed-rounded mpfr endpoints.  Every operation
// returns an interval guaranteed to contain the exact result.

#include <mpfr.h>

#include "serex/rational.hpp"

namespace serex {

class FloatInterval {
 public:
  explicit FloatInterval(mpfr_prec_t prec = 128);
  FloatInterval(const FloatInterval& other);
  FloatInterval(FloatInterval&& other) noexcept;
  FloatInterval& operator=(FloatInterval other);
  ~FloatInterval();

  static FloatInterval from_int(const Int& v, mpfr_prec_t prec);
  static FloatInterval from_rational(const Rational& q, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }
  bool is_finite() const;
  bool contains_zero() const;
  // -1 when hi < 0, +1 when lo > 0, 0 when the interval meets 0.
  int sign() const;
  double lo_double() const;
  double hi_double() const;
  double mid_double() const;

  friend FloatInterval operator+(const FloatInterval& a, const FloatInterval& b);
  friend FloatInterval operator-(const FloatInterval& a, const FloatInterval& b);
  friend FloatInterval operator*(const FloatInterval& a, const FloatInterval& b);
  // Requires a sign-definite divisor; throws std::domain_error otherwise.
  friend FloatInterval operator/(const FloatInterval& a, const FloatInterval& b);
  FloatInterval negated() const;

  // k-th root, k >= 1.  Even k requires lo >= 0; odd k accepts negatives.
  FloatInterval root(unsigned long k) const;
  // Integer power; negative p requires a sign-definite interval.
  FloatInterval pow_int(long p) const;

 private:
  static FloatInterval make(mpfr_prec_t prec) { return FloatInterval(prec); }
  void swap(FloatInterval& other) noexcept;

  mpfr_t lo_, hi_;
  mpfr_prec_t prec_;
};

}  // namespace serex
