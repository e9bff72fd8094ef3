#include "serex/generator.hpp"

#include <random>

#include "serex/attributes.hpp"

namespace serex {
namespace {

void validate(const GenConfig& cfg) {
  if (cfg.max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");
  if (cfg.degree_min > cfg.degree_max) throw std::invalid_argument("empty degree bounds");
  if (cfg.constant_min > cfg.constant_max) throw std::invalid_argument("empty constant range");
  if (cfg.constant_denominator_max < 1 || cfg.exponent_denominator_max < 1) {
    throw std::invalid_argument("denominator caps must be >= 1");
  }
  if (cfg.min_degree_gap < 0) throw std::invalid_argument("negative degree gap");
}

struct Node {
  ExprPtr e;
  Rational degree;
  Coefficient coeff;
};

struct Gen {
  const GenConfig& cfg;
  std::mt19937_64 rng;

  explicit Gen(const GenConfig& c) : cfg(c), rng(c.seed) {}

  // Bounded draw via modulo: portable and deterministic across platforms,
  // which matters more here than perfect uniformity.
  std::uint64_t draw(std::uint64_t k) { return rng() % k; }

  bool in_bounds(const Rational& d) const {
    return cfg.degree_min <= d && d <= cfg.degree_max;
  }

  Int draw_int_in(const Int& lo, const Int& hi) {
    Int span = hi - lo + 1;
    if (span <= 0) throw RetryBudgetExhausted("constant range admits no numerator");
    if (span > 1'000'000'000'000LL) throw std::invalid_argument("constant range too wide");
    return lo + Int(draw(static_cast<std::uint64_t>(span)));
  }

  Rational draw_constant(int& budget) {
    for (;;) {
      if (--budget < 0) throw RetryBudgetExhausted("no nonzero constant drawn within budget");
      Int den(1 + draw(cfg.constant_denominator_max));
      Rational d(den);
      Int lo = -floor_int(-(cfg.constant_min * d));  // ceil(min * den)
      Int hi = floor_int(cfg.constant_max * d);
      Int num = draw_int_in(lo, hi);
      if (num != 0) return make_rational(num, den);
    }
  }

  Rational draw_positive_constant(int& budget) {
    for (;;) {
      Rational c = draw_constant(budget);
      if (c > 0) return c;
    }
  }

  Node leaf(int& budget) {
    bool var_ok = in_bounds(Rational(1));
    bool const_ok = in_bounds(Rational(0));
    if (!var_ok && !const_ok) {
      throw RetryBudgetExhausted("degree bounds admit neither a variable nor a constant");
    }
    bool pick_var = var_ok && (!const_ok || draw(2) == 0);
    if (pick_var) return {Expr::variable(), Rational(1), Coefficient(1)};
    Rational c = draw_constant(budget);
    return {Expr::constant(c), Rational(0), Coefficient(c)};
  }

  Rational draw_exponent() {
    Int num(static_cast<long long>(draw(7)) - 3);  // in [-3, 3]
    if (num == 0) num = 1;
    Int den(1 + draw(cfg.exponent_denominator_max));
    return make_rational(num, den);
  }

  Node gen(int depth) {
    int budget = cfg.retry_budget;
    for (;;) {
      if (--budget < 0) {
        throw RetryBudgetExhausted("node rejected " + std::to_string(cfg.retry_budget) +
                                   " times (over-constrained config)");
      }
      if (depth == 0) return leaf(budget);
      std::uint64_t op = draw(100);
      if (op < 25) return leaf(budget);

      if (op < 55) {  // Add / Sub
        bool subtract = op >= 40;
        Node a = gen(depth - 1);
        Node b = gen(depth - 1);
        if (a.degree == b.degree) {
          if (cfg.min_degree_gap > 0) continue;
          Coefficient c = subtract ? a.coeff - b.coeff : a.coeff + b.coeff;
          if (c.is_zero()) continue;
          ExprPtr e = subtract ? Expr::sub(a.e, b.e) : Expr::add(a.e, b.e);
          return {std::move(e), a.degree, std::move(c)};
        }
        Rational gap = a.degree > b.degree ? a.degree - b.degree : b.degree - a.degree;
        if (gap < cfg.min_degree_gap) continue;
        bool left_dominant = a.degree > b.degree;
        Coefficient c = left_dominant ? a.coeff : (subtract ? b.coeff.negated() : b.coeff);
        ExprPtr e = subtract ? Expr::sub(a.e, b.e) : Expr::add(a.e, b.e);
        return {std::move(e), left_dominant ? a.degree : b.degree, std::move(c)};
      }

      if (op < 70) {  // Mul
        Node a = gen(depth - 1);
        Node b = gen(depth - 1);
        Rational d = a.degree + b.degree;
        if (!in_bounds(d)) continue;
        return {Expr::mul(a.e, b.e), std::move(d), a.coeff * b.coeff};
      }

      if (op < 85) {  // Div
        Node a = gen(depth - 1);
        Node b = gen(depth - 1);
        Rational d = a.degree - b.degree;
        if (!in_bounds(d)) continue;
        return {Expr::div(a.e, b.e), std::move(d), a.coeff / b.coeff};
      }

      // Pow
      Node a = gen(depth - 1);
      Rational expo = draw_exponent();
      Rational d = a.degree * expo;
      if (!in_bounds(d)) continue;
      if (!is_integer(expo)) {
        if (a.e->has_fractional_pow()) continue;
        Rational s = a.coeff.rational_value();
        if (s < 0 && denominator(expo) % 2 == 0) continue;
      }
      return {Expr::pow(a.e, expo), std::move(d), a.coeff.pow(expo)};
    }
  }

  // Horner-nested random polynomial of exact degree q with a positive
  // leading coefficient; zero inner coefficients skip their Add.
  ExprPtr polynomial(const Int& q, int& budget) {
    ExprPtr acc = Expr::constant(draw_positive_constant(budget));
    for (Int i = q; i > 0; --i) {
      acc = Expr::mul(std::move(acc), Expr::variable());
      if (draw(4) != 0) {  // three in four inner coefficients are nonzero
        acc = Expr::add(std::move(acc), Expr::constant(draw_constant(budget)));
      }
    }
    return acc;
  }
};

}  // namespace

ExprPtr generate_member(const GenConfig& cfg) {
  validate(cfg);
  Gen g(cfg);
  return g.gen(cfg.max_depth).e;
}

ExprPtr generate_radical_quotient(const GenConfig& cfg, const Int& q, const Int& k,
                                  const Int& s, const Int& h) {
  validate(cfg);
  if (k < 1 || h < 1) throw std::invalid_argument("root indices must be positive");
  if (q < 0 || s < 0) throw std::invalid_argument("polynomial degrees must be nonnegative");
  Gen g(cfg);
  int budget = cfg.retry_budget;
  ExprPtr num = g.polynomial(q, budget);
  ExprPtr den = g.polynomial(s, budget);
  return Expr::div(desugar_root(k, std::move(num)), desugar_root(h, std::move(den)));
}

}  // namespace serex
