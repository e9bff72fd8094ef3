#include "serex/coefficient.hpp"

#include <algorithm>
#include <utility>

#include "serex/factor.hpp"

namespace serex {
namespace {

// Folds integer exponent parts into the scale; keeps exponents in (0,1).
// Bases must already be prime.
CoeffTerm split_normalize(Rational scale, const std::map<Int, Rational>& exps) {
  CoeffTerm out;
  for (const auto& [p, e] : exps) {
    if (e == 0) continue;
    Int z = floor_int(e);
    Rational f = e - Rational(z);
    if (z != 0) scale *= pow_integer(Rational(p), z);
    if (f != 0) out.radical[p] = f;
  }
  out.scale = scale;
  return out;
}

// Term product assuming prime bases.
CoeffTerm mul_terms(const CoeffTerm& a, const CoeffTerm& b) {
  std::map<Int, Rational> exps = a.radical;
  for (const auto& [p, e] : b.radical) exps[p] += e;
  return split_normalize(a.scale * b.scale, exps);
}

using TermMap = std::map<RadicalKey, Rational>;

void add_term(TermMap& acc, const CoeffTerm& t) {
  if (t.scale == 0) return;
  auto it = acc.find(t.radical);
  if (it == acc.end()) {
    acc.emplace(t.radical, t.scale);
  } else {
    it->second += t.scale;
    if (it->second == 0) acc.erase(it);
  }
}

// ---- polynomial arithmetic over Coefficient, little-endian, trimmed ----

using Poly = std::vector<Coefficient>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_scale(const Poly& p, const Coefficient& c) {
  Poly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[i] * c;
  trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    Coefficient x = i < a.size() ? a[i] : Coefficient();
    Coefficient y = i < b.size() ? b[i] : Coefficient();
    r[i] = x - y;
  }
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  trim(r);
  return r;
}

// Division with remainder; the divisor's leading coefficient is inverted in
// a tower with strictly fewer primes, so the mutual recursion terminates.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  Poly q;
  trim(a);
  Coefficient lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    Coefficient c = a.back() * lead_inv;
    if (q.size() < shift + 1) q.resize(shift + 1);
    q[shift] = q[shift] + c;
    Poly sub(shift + b.size());
    for (size_t i = 0; i < b.size(); ++i) sub[shift + i] = b[i] * c;
    a = poly_sub(a, sub);  // the leading term cancels exactly, so a shrinks
  }
  trim(q);
  return {q, a};
}

struct ExtGcd {
  Poly g, u;  // u*A + v*B = g; v is not needed here
};

ExtGcd poly_ext_gcd(Poly a, Poly b) {
  Poly r0 = std::move(a), r1 = std::move(b);
  Poly s0 = {Coefficient(1)}, s1 = {};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  return {std::move(r0), std::move(s0)};
}

}  // namespace

Coefficient::Coefficient(const Rational& value) {
  if (value != 0) terms_.push_back(CoeffTerm{value, {}});
}

Coefficient Coefficient::from_terms(const std::vector<CoeffTerm>& raw) {
  TermMap acc;
  for (const auto& t : raw) {
    if (t.scale == 0) continue;
    std::map<Int, Rational> exps;
    for (const auto& [base, e] : t.radical) {
      if (base < 1) throw std::domain_error("radical base must be a positive integer");
      if (base == 1 || e == 0) continue;
      for (const auto& [p, m] : factorize(base)) exps[p] += Rational(m) * e;
    }
    add_term(acc, split_normalize(t.scale, exps));
  }
  Coefficient c;
  for (const auto& [rad, scale] : acc) c.terms_.push_back(CoeffTerm{scale, rad});
  return c;
}

Coefficient Coefficient::radical(const Rational& scale, const Int& base, const Rational& expo) {
  return from_terms({CoeffTerm{scale, {{base, expo}}}});
}

bool Coefficient::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].radical.empty());
}

Rational Coefficient::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw std::logic_error("rational_value on an irrational coefficient");
  return terms_[0].scale;
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  TermMap acc;
  for (const auto& t : a.terms_) add_term(acc, t);
  for (const auto& t : b.terms_) add_term(acc, t);
  Coefficient c;
  for (const auto& [rad, scale] : acc) c.terms_.push_back(CoeffTerm{scale, rad});
  return c;
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + b.negated(); }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  TermMap acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) add_term(acc, mul_terms(x, y));
  }
  Coefficient c;
  for (const auto& [rad, scale] : acc) c.terms_.push_back(CoeffTerm{scale, rad});
  return c;
}

Coefficient operator/(const Coefficient& a, const Coefficient& b) { return a * b.inverse(); }

Coefficient Coefficient::negated() const {
  Coefficient c = *this;
  for (auto& t : c.terms_) t.scale = -t.scale;
  return c;
}

Coefficient Coefficient::inverse() const {
  if (terms_.empty()) throw std::domain_error("division by zero coefficient");
  if (terms_.size() == 1) {
    std::map<Int, Rational> exps;
    for (const auto& [p, e] : terms_[0].radical) exps[p] = -e;
    Coefficient c;
    CoeffTerm t = split_normalize(1 / terms_[0].scale, exps);
    c.terms_.push_back(std::move(t));
    return c;
  }

  // Multi-term value: view it as a polynomial in th = p^(1/m) for the largest
  // prime p present, invert modulo x^m - p by the extended Euclid algorithm
  // over the coefficient field with the remaining primes, then substitute
  // th back in.  x^m - p stays irreducible over that field, so the gcd is a
  // nonzero constant.
  Int p = 0;
  for (const auto& t : terms_) {
    if (!t.radical.empty() && t.radical.rbegin()->first > p) p = t.radical.rbegin()->first;
  }
  Int m(1);
  for (const auto& t : terms_) {
    auto it = t.radical.find(p);
    if (it != t.radical.end()) m = lcm(m, denominator(it->second));
  }
  auto mm = static_cast<size_t>(m);
  Poly d(mm);
  for (const auto& t : terms_) {
    CoeffTerm rest = t;
    Rational e(0);
    if (auto it = rest.radical.find(p); it != rest.radical.end()) {
      e = it->second;
      rest.radical.erase(it);
    }
    auto j = static_cast<size_t>(numerator(e) * (m / denominator(e)));
    Coefficient piece;
    piece.terms_.push_back(std::move(rest));
    d[j] = d[j] + piece;
  }
  Poly modulus(mm + 1);
  modulus[0] = Coefficient(-Rational(p));
  modulus[mm] = Coefficient(1);

  ExtGcd eg = poly_ext_gcd(std::move(d), std::move(modulus));
  if (eg.g.size() != 1) throw std::logic_error("radical tower gcd is not constant");
  Poly u = poly_scale(eg.u, eg.g[0].inverse());

  Coefficient result;
  for (size_t j = 0; j < u.size(); ++j) {
    if (u[j].is_zero()) continue;
    Coefficient r = j == 0 ? Coefficient(1) : radical(Rational(1), p, make_rational(Int(j), m));
    result = result + u[j] * r;
  }
  if (!(result * *this == Coefficient(1))) {
    throw std::logic_error("radical tower inversion failed verification");
  }
  return result;
}

Coefficient Coefficient::pow(const Rational& e) const {
  if (is_integer(e)) {
    if (e == 0) {
      if (terms_.empty()) throw CoeffPowError(CoeffPowError::Kind::ZeroBase, "0^0");
      return Coefficient(1);
    }
    if (terms_.empty()) {
      if (e < 0) throw CoeffPowError(CoeffPowError::Kind::ZeroBase, "zero to a negative power");
      return Coefficient();
    }
    Int w = numerator(e) < 0 ? Int(-numerator(e)) : numerator(e);
    Coefficient acc(1), base = *this;
    for (; w > 0; w >>= 1) {
      if ((w & 1) != 0) acc = acc * base;
      if (w > 1) base = base * base;
    }
    return e < 0 ? acc.inverse() : acc;
  }

  if (terms_.empty()) {
    if (e < 0) throw CoeffPowError(CoeffPowError::Kind::ZeroBase, "zero to a negative power");
    return Coefficient();
  }
  if (terms_.size() > 1) {
    throw CoeffPowError(CoeffPowError::Kind::MultiTermBase,
                        "fractional power of a multi-term coefficient");
  }
  const CoeffTerm& t = terms_[0];
  Rational s = t.scale;
  Rational sign_factor(1);
  if (s < 0) {
    if (denominator(e) % 2 == 0) {
      throw CoeffPowError(CoeffPowError::Kind::NegativeBaseEvenRoot,
                          "even root of a negative coefficient");
    }
    if (numerator(e) % 2 != 0) sign_factor = -1;
    s = -s;
  }
  std::map<Int, Rational> exps;
  for (const auto& [p, f] : t.radical) exps[p] += f * e;
  for (const auto& [p, mult] : factorize(numerator(s))) exps[p] += Rational(mult) * e;
  for (const auto& [p, mult] : factorize(denominator(s))) exps[p] -= Rational(mult) * e;
  Coefficient c;
  c.terms_.push_back(split_normalize(sign_factor, exps));
  return c;
}

int Coefficient::sign(mpfr_prec_t max_prec) const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sign_of(terms_[0].scale);
  for (mpfr_prec_t prec = 128; prec <= max_prec; prec *= 2) {
    FloatInterval iv = enclosure(prec);
    if (iv.is_finite() && iv.sign() != 0) return iv.sign();
  }
  throw SignIndeterminate("coefficient sign not separated from zero at precision cap");
}

FloatInterval Coefficient::enclosure(mpfr_prec_t prec) const {
  FloatInterval sum(prec);
  for (const auto& t : terms_) {
    FloatInterval term = FloatInterval::from_rational(t.scale, prec);
    for (const auto& [p, e] : t.radical) {
      FloatInterval f = FloatInterval::from_int(p, prec)
                            .root(static_cast<unsigned long>(denominator(e)))
                            .pow_int(static_cast<long>(numerator(e)));
      term = term * f;
    }
    sum = sum + term;
  }
  return sum;
}

double Coefficient::to_double() const {
  if (terms_.empty()) return 0.0;
  return enclosure(192).mid_double();
}

std::string Coefficient::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational s = t.scale;
    if (first) {
      if (s < 0) {
        out += "-";
        s = -s;
      }
    } else {
      out += s < 0 ? " - " : " + ";
      if (s < 0) s = -s;
    }
    first = false;
    std::vector<std::string> factors;
    if (s != 1 || t.radical.empty()) factors.push_back(serex::to_text(s));
    for (const auto& [p, e] : t.radical) {
      factors.push_back(serex::to_text(p) + "^(" + serex::to_text(e) + ")");
    }
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out += "*";
      out += factors[i];
    }
  }
  return out;
}

}  // namespace serex
