#pragma once

// Exact integer and rational arithmetic used throughout the library.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace serex {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Builds num/den in lowest terms with a positive denominator.
// Throws std::domain_error when den == 0.
inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) return Rational(-num, -den);
  return Rational(num, den);
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Largest integer <= q.
inline Int floor_int(const Rational& q) {
  Int n = numerator(q), d = denominator(q);
  Int t = n / d;
  if (n < 0 && t * d != n) --t;
  return t;
}

inline int sign_of(const Rational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }
inline int sign_of(const Int& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

// q^e for integer e; throws std::domain_error when q == 0 and e < 0.
inline Rational pow_integer(const Rational& q, const Int& e) {
  if (e == 0) return Rational(1);
  if (q == 0) {
    if (e < 0) throw std::domain_error("zero raised to a negative power");
    return Rational(0);
  }
  Int w = e < 0 ? Int(-e) : e;
  auto u = static_cast<unsigned long>(w);
  Int n = pow(numerator(q), u), d = pow(denominator(q), u);
  return e < 0 ? make_rational(d, n) : make_rational(n, d);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// "5", "-5", "13/30", "-13/30".
inline std::string to_text(const Int& v) { return v.str(); }
inline std::string to_text(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace serex
