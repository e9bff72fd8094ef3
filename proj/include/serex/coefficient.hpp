#pragma once

// Exact arithmetic over finite sums  sum_i  s_i * prod_p p^(e_ip)  where the
// s_i are rationals, the p are primes, and the exponents lie in (0,1).  This
// field is closed under +, -, *, / and under rational powers of single-term
// values, which covers every leading coefficient the analyzer can produce.
// Canonical form: terms sorted by radical part, no zero scales, exponents in
// lowest terms with integer parts folded into the scale.  On that form the
// zero test is exact: a coefficient is zero iff it has no terms.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "serex/interval.hpp"
#include "serex/rational.hpp"

namespace serex {

// prime -> exponent in (0,1), lowest terms
using RadicalKey = std::map<Int, Rational>;

struct CoeffTerm {
  Rational scale;
  RadicalKey radical;
  bool operator==(const CoeffTerm& other) const = default;
};

struct SignIndeterminate : std::runtime_error {
  explicit SignIndeterminate(const std::string& what) : std::runtime_error(what) {}
};

struct CoeffPowError : std::domain_error {
  enum class Kind { MultiTermBase, NegativeBaseEvenRoot, ZeroBase };
  Kind kind;
  CoeffPowError(Kind k, const char* msg) : std::domain_error(msg), kind(k) {}
};

class Coefficient {
 public:
  Coefficient() = default;  // zero
  explicit Coefficient(const Rational& value);
  explicit Coefficient(int value) : Coefficient(Rational(value)) {}

  // Canonicalizes arbitrary terms: composite or repeated bases and exponents
  // outside (0,1) are all accepted.  Bases must be positive integers.
  static Coefficient from_terms(const std::vector<CoeffTerm>& raw);
  // scale * base^expo, canonicalized; base >= 1.
  static Coefficient radical(const Rational& scale, const Int& base, const Rational& expo);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // Requires is_rational(); the zero coefficient yields 0.
  Rational rational_value() const;
  const std::vector<CoeffTerm>& terms() const { return terms_; }

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  // Throws std::domain_error when b is zero.
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b);
  Coefficient negated() const;
  // Exact reciprocal; multi-term values are inverted in the radical tower.
  // Throws std::domain_error on zero.
  Coefficient inverse() const;

  // Exact rational power.  Integer exponents work for every nonzero value.
  // Fractional exponents require a single-term base; a negative base is
  // accepted only when the exponent denominator is odd.  See CoeffPowError.
  Coefficient pow(const Rational& e) const;

  bool operator==(const Coefficient& other) const = default;

  // Certified sign: 0 for zero, else -1/+1 from directed-rounded interval
  // evaluation with doubling precision.  Throws SignIndeterminate if the
  // interval still meets zero at max_prec (not reachable from canonical
  // values produced by this class, but the escalation cap keeps it total).
  int sign(mpfr_prec_t max_prec = mpfr_prec_t(1) << 13) const;

  // Directed-rounded enclosure of the exact value.
  FloatInterval enclosure(mpfr_prec_t prec) const;
  double to_double() const;
  std::string to_text() const;

 private:
  std::vector<CoeffTerm> terms_;
};

}  // namespace serex
