#include "serex/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace serex {
namespace {

struct Mpq {
  mpq_t q;
  explicit Mpq(const Rational& r) {
    mpq_init(q);
    mpq_set_str(q, (numerator(r).str() + "/" + denominator(r).str()).c_str(), 10);
    mpq_canonicalize(q);
  }
  ~Mpq() { mpq_clear(q); }
};

}  // namespace

FloatInterval::FloatInterval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

FloatInterval::FloatInterval(const FloatInterval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

FloatInterval::FloatInterval(FloatInterval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

FloatInterval& FloatInterval::operator=(FloatInterval other) {
  swap(other);
  return *this;
}

FloatInterval::~FloatInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void FloatInterval::swap(FloatInterval& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  std::swap(prec_, other.prec_);
}

FloatInterval FloatInterval::from_int(const Int& v, mpfr_prec_t prec) {
  return from_rational(Rational(v), prec);
}

FloatInterval FloatInterval::from_rational(const Rational& q, mpfr_prec_t prec) {
  FloatInterval r(prec);
  Mpq m(q);
  mpfr_set_q(r.lo_, m.q, MPFR_RNDD);
  mpfr_set_q(r.hi_, m.q, MPFR_RNDU);
  return r;
}

bool FloatInterval::is_finite() const {
  return mpfr_number_p(lo_) != 0 && mpfr_number_p(hi_) != 0;
}

bool FloatInterval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

int FloatInterval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

double FloatInterval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double FloatInterval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double FloatInterval::mid_double() const {
  mpfr_t m;
  mpfr_init2(m, prec_);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

FloatInterval operator+(const FloatInterval& a, const FloatInterval& b) {
  FloatInterval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

FloatInterval operator-(const FloatInterval& a, const FloatInterval& b) {
  FloatInterval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

FloatInterval operator*(const FloatInterval& a, const FloatInterval& b) {
  FloatInterval r(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_t* xs[2] = {&a.lo_, &a.hi_};
  const mpfr_t* ys[2] = {&b.lo_, &b.hi_};
  bool first = true;
  for (const auto* x : xs) {
    for (const auto* y : ys) {
      mpfr_mul(t, *x, *y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, *x, *y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

FloatInterval operator/(const FloatInterval& a, const FloatInterval& b) {
  if (b.sign() == 0) throw std::domain_error("interval division by a range meeting zero");
  FloatInterval r(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_t* xs[2] = {&a.lo_, &a.hi_};
  const mpfr_t* ys[2] = {&b.lo_, &b.hi_};
  bool first = true;
  for (const auto* x : xs) {
    for (const auto* y : ys) {
      mpfr_div(t, *x, *y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, *x, *y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

FloatInterval FloatInterval::negated() const {
  FloatInterval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

FloatInterval FloatInterval::root(unsigned long k) const {
  if (k == 0) throw std::domain_error("zeroth root");
  if (k == 1) return *this;
  if (k % 2 == 0 && mpfr_sgn(lo_) < 0) {
    throw std::domain_error("even root of a range reaching below zero");
  }
  FloatInterval r(prec_);
  mpfr_rootn_ui(r.lo_, lo_, k, MPFR_RNDD);
  mpfr_rootn_ui(r.hi_, hi_, k, MPFR_RNDU);
  return r;
}

FloatInterval FloatInterval::pow_int(long p) const {
  if (p == 0) {
    FloatInterval r(prec_);
    mpfr_set_ui(r.lo_, 1, MPFR_RNDD);
    mpfr_set_ui(r.hi_, 1, MPFR_RNDU);
    return r;
  }
  if (p < 0) {
    if (sign() == 0) throw std::domain_error("negative power of a range meeting zero");
    FloatInterval one(prec_);
    mpfr_set_ui(one.lo_, 1, MPFR_RNDD);
    mpfr_set_ui(one.hi_, 1, MPFR_RNDU);
    return (one / *this).pow_int(-p);
  }
  FloatInterval r(prec_);
  if (p % 2 == 1 || mpfr_sgn(lo_) >= 0) {
    // Monotone increasing on the whole line (odd p) or on [0, inf).
    mpfr_pow_si(r.lo_, lo_, p, MPFR_RNDD);
    mpfr_pow_si(r.hi_, hi_, p, MPFR_RNDU);
    return r;
  }
  if (mpfr_sgn(hi_) <= 0) {
    // Even power of a nonpositive range: decreasing.
    mpfr_pow_si(r.lo_, hi_, p, MPFR_RNDD);
    mpfr_pow_si(r.hi_, lo_, p, MPFR_RNDU);
    return r;
  }
  // Even power of a range straddling zero: [0, max(|lo|, |hi|)^p].
  mpfr_set_zero(r.lo_, 1);
  mpfr_t m;
  mpfr_init2(m, prec_);
  mpfr_neg(m, lo_, MPFR_RNDU);
  if (mpfr_less_p(m, hi_)) mpfr_set(m, hi_, MPFR_RNDU);
  mpfr_pow_si(r.hi_, m, p, MPFR_RNDU);
  mpfr_clear(m);
  return r;
}

}  // namespace serex
