#include "serex/pointwise.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <utility>

#include "serex/interval.hpp"

namespace serex {

DomainError::DomainError(long long n_, TreePath location_)
    : std::runtime_error("domain error at n = " + std::to_string(n_) + " (node " +
                         path_to_text(location_) + ")"),
      n(n_),
      location(std::move(location_)) {}

namespace {

// Definite domain violation at the node with this path.
struct PointFailure {
  TreePath path;
};

// Decision too close for the current tier or precision.
struct Escalate {
  bool domain_decision;
};

// ---- tier 1: double intervals with outward widening ----

struct DIv {
  double lo, hi;
};

const double kInf = std::numeric_limits<double>::infinity();

DIv widen(DIv v, bool transcendental = false) {
  if (transcendental) {
    double slack_lo = std::fabs(v.lo) * 1e-13 + 1e-300;
    double slack_hi = std::fabs(v.hi) * 1e-13 + 1e-300;
    v.lo -= slack_lo;
    v.hi += slack_hi;
  }
  v.lo = std::nextafter(std::nextafter(v.lo, -kInf), -kInf);
  v.hi = std::nextafter(std::nextafter(v.hi, kInf), kInf);
  return v;
}

void check_finite(const DIv& v) {
  if (!std::isfinite(v.lo) || !std::isfinite(v.hi)) throw Escalate{false};
}

DIv d_add(DIv a, DIv b) { return widen({a.lo + b.lo, a.hi + b.hi}); }
DIv d_sub(DIv a, DIv b) { return widen({a.lo - b.hi, a.hi - b.lo}); }

DIv d_mul(DIv a, DIv b) {
  double c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  DIv r{c[0], c[0]};
  for (double x : c) {
    r.lo = std::min(r.lo, x);
    r.hi = std::max(r.hi, x);
  }
  return widen(r);
}

DIv d_div(DIv a, DIv b) {
  if (b.lo <= 0.0 && b.hi >= 0.0) throw Escalate{true};  // cannot certify a nonzero divisor
  double c[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
  DIv r{c[0], c[0]};
  for (double x : c) {
    r.lo = std::min(r.lo, x);
    r.hi = std::max(r.hi, x);
  }
  return widen(r);
}

double odd_root(double x, double inv_k) {
  return x < 0 ? -std::pow(-x, inv_k) : std::pow(x, inv_k);
}

DIv d_int_pow(DIv a, long long p) {
  if (p == 0) return {1.0, 1.0};
  if (p < 0) {
    if (a.lo <= 0.0 && a.hi >= 0.0) throw Escalate{true};
    DIv inv = widen({std::min(1.0 / a.lo, 1.0 / a.hi), std::max(1.0 / a.lo, 1.0 / a.hi)});
    return d_int_pow(inv, -p);
  }
  auto pw = [&](double x) { return std::pow(x, static_cast<double>(p)); };
  if (p % 2 == 1 || a.lo >= 0.0) return widen({pw(a.lo), pw(a.hi)}, true);
  if (a.hi <= 0.0) return widen({pw(a.hi), pw(a.lo)}, true);
  return widen({0.0, pw(std::max(-a.lo, a.hi))}, true);
}

DIv d_eval(const Expr& e, long long n, TreePath& path) {
  switch (e.kind()) {
    case ExprKind::Constant: {
      double v = to_double(e.constant_value());
      if (!std::isfinite(v)) throw Escalate{false};
      return widen({v, v});
    }
    case ExprKind::Variable: {
      double v = static_cast<double>(n);
      if (n > (1LL << 53)) return widen({v, v});
      return {v, v};
    }
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div: {
      path.push_back(0);
      DIv a = d_eval(*e.left(), n, path);
      path.back() = 1;
      DIv b = d_eval(*e.right(), n, path);
      path.pop_back();
      DIv r{0, 0};
      switch (e.kind()) {
        case ExprKind::Add: r = d_add(a, b); break;
        case ExprKind::Sub: r = d_sub(a, b); break;
        case ExprKind::Mul: r = d_mul(a, b); break;
        default: r = d_div(a, b); break;
      }
      check_finite(r);
      return r;
    }
    case ExprKind::Pow: {
      path.push_back(0);
      DIv a = d_eval(*e.left(), n, path);
      path.pop_back();
      const Rational& expo = e.exponent();
      auto p = static_cast<long long>(numerator(expo));
      auto q = static_cast<long long>(denominator(expo));
      DIv r{0, 0};
      if (q == 1) {
        r = d_int_pow(a, p);
      } else {
        if (q % 2 == 0) {
          if (a.hi < 0.0) throw PointFailure{path};  // certainly negative under an even root
          if (a.lo < 0.0) throw Escalate{true};
        }
        double inv_k = 1.0 / static_cast<double>(q);
        DIv root = widen({odd_root(a.lo, inv_k), odd_root(a.hi, inv_k)}, true);
        r = d_int_pow(root, p);
      }
      check_finite(r);
      return r;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

// ---- tier 2: exact rationals promoted to mpfr balls on irrational roots ----

struct XVal {
  bool exact;
  Rational q;
  FloatInterval iv;

  explicit XVal(Rational v) : exact(true), q(std::move(v)), iv(2) {}
  explicit XVal(FloatInterval v) : exact(false), iv(std::move(v)) {}
};

// Largest r >= 0 with r^k <= x; requires x >= 0.
Int int_kth_root(const Int& x, unsigned long k) {
  if (x == 0 || x == 1 || k == 1) return x;
  Int lo = 0, hi = Int(1) << static_cast<unsigned>(msb(x) / k + 1);
  while (lo < hi) {
    Int mid = (lo + hi + 1) / 2;
    if (pow(mid, static_cast<unsigned>(k)) <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

// Exact q-th root of a nonnegative rational when both parts are perfect
// powers; nullopt otherwise.
std::optional<Rational> exact_root(const Rational& v, unsigned long k) {
  Int nr = int_kth_root(numerator(v), k);
  if (pow(nr, static_cast<unsigned>(k)) != numerator(v)) return std::nullopt;
  Int dr = int_kth_root(denominator(v), k);
  if (pow(dr, static_cast<unsigned>(k)) != denominator(v)) return std::nullopt;
  return make_rational(nr, dr);
}

FloatInterval to_iv(const XVal& v, mpfr_prec_t prec) {
  if (v.exact) return FloatInterval::from_rational(v.q, prec);
  return v.iv;
}

XVal x_eval(const Expr& e, long long n, mpfr_prec_t prec, TreePath& path) {
  switch (e.kind()) {
    case ExprKind::Constant:
      return XVal(e.constant_value());
    case ExprKind::Variable:
      return XVal(Rational(n));
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div: {
      path.push_back(0);
      XVal a = x_eval(*e.left(), n, prec, path);
      path.back() = 1;
      XVal b = x_eval(*e.right(), n, prec, path);
      path.pop_back();
      if (a.exact && b.exact) {
        switch (e.kind()) {
          case ExprKind::Add: return XVal(a.q + b.q);
          case ExprKind::Sub: return XVal(a.q - b.q);
          case ExprKind::Mul: return XVal(a.q * b.q);
          default:
            if (b.q == 0) throw PointFailure{path};
            return XVal(a.q / b.q);
        }
      }
      FloatInterval x = to_iv(a, prec), y = to_iv(b, prec);
      switch (e.kind()) {
        case ExprKind::Add: return XVal(x + y);
        case ExprKind::Sub: return XVal(x - y);
        case ExprKind::Mul: return XVal(x * y);
        default:
          if (b.exact && b.q == 0) throw PointFailure{path};
          if (y.sign() == 0) throw Escalate{true};
          return XVal(x / y);
      }
    }
    case ExprKind::Pow: {
      path.push_back(0);
      XVal a = x_eval(*e.left(), n, prec, path);
      path.pop_back();
      const Rational& expo = e.exponent();
      if (abs(numerator(expo)) > 1000000 || denominator(expo) > 1000000) {
        throw std::domain_error("exponent too large for pointwise evaluation");
      }
      auto p = static_cast<long>(numerator(expo));
      auto q = static_cast<unsigned long>(denominator(expo));
      if (a.exact) {
        if (a.q == 0) {
          if (expo > 0) return XVal(Rational(0));
          if (expo == 0) return XVal(Rational(1));
          throw PointFailure{path};
        }
        if (q == 1) return XVal(pow_integer(a.q, numerator(expo)));
        if (a.q < 0 && q % 2 == 0) throw PointFailure{path};
        Rational mag = a.q < 0 ? Rational(-a.q) : a.q;
        if (auto root = exact_root(mag, q)) {
          Rational signed_root = a.q < 0 ? Rational(-*root) : *root;
          return XVal(pow_integer(signed_root, numerator(expo)));
        }
        FloatInterval base = FloatInterval::from_rational(a.q, prec);
        return XVal(base.root(q).pow_int(p));
      }
      const FloatInterval& base = a.iv;
      if (q % 2 == 0) {
        int bs = base.sign();
        if (bs < 0) throw PointFailure{path};
        // An irrational ball around zero: domain cannot be certified.
        if (bs == 0) throw Escalate{true};
      }
      if (p < 0 && base.sign() == 0) throw Escalate{true};
      if (q == 1) return XVal(base.pow_int(p));
      return XVal(base.root(q).pow_int(p));
    }
  }
  throw std::logic_error("unreachable expression kind");
}

PointSign sign_to_point(int s) {
  return s < 0 ? PointSign::Negative : (s > 0 ? PointSign::Positive : PointSign::Zero);
}

}  // namespace

PointProbe probe_point(const ExprPtr& e, long long n, const PointwiseOptions& opts) {
  if (n < 1) throw std::invalid_argument("probe_point requires n >= 1");
  TreePath path;
  try {
    DIv v = d_eval(*e, n, path);
    if (v.lo > 0.0) return {true, PointSign::Positive, {}};
    if (v.hi < 0.0) return {true, PointSign::Negative, {}};
    throw Escalate{false};
  } catch (const PointFailure& f) {
    return {false, PointSign::Uncertain, f.path};
  } catch (const Escalate&) {
    // fall through to the exact tier
  }

  bool domain_uncertain = false;
  TreePath last_path;
  for (mpfr_prec_t prec = 128; prec <= opts.max_prec; prec *= 2) {
    path.clear();
    try {
      XVal v = x_eval(*e, n, prec, path);
      if (v.exact) return {true, sign_to_point(sign_of(v.q)), {}};
      if (!v.iv.is_finite()) continue;
      int s = v.iv.sign();
      if (s != 0) return {true, sign_to_point(s), {}};
      domain_uncertain = false;
    } catch (const PointFailure& f) {
      return {false, PointSign::Uncertain, f.path};
    } catch (const Escalate& esc) {
      domain_uncertain = esc.domain_decision;
      last_path = path;
    }
  }
  if (domain_uncertain) return {false, PointSign::Uncertain, last_path};
  return {true, PointSign::Uncertain, {}};
}

}  // namespace serex
