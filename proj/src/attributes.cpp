#include "serex/attributes.hpp"

namespace serex {
namespace {

Attributes prefixed(Attributes a, int child) {
  a.status.location.insert(a.status.location.begin(), child);
  return a;
}

Attributes member(Rational degree, Coefficient coeff) {
  return Attributes{MembershipStatus::member(), std::move(degree), std::move(coeff)};
}

Attributes zero_constant() { return Attributes{MembershipStatus::zero_constant(), Rational(0), {}}; }

Attributes failed(MembershipStatus status) { return Attributes{std::move(status), Rational(0), {}}; }

Attributes negated(Attributes a) {
  if (a.status.is_member()) a.coeff = a.coeff.negated();
  return a;
}

Attributes analyze_sum(const Expr& e, bool subtract) {
  Attributes a = analyze_attributes(e.left());
  if (a.status.is_failure()) return prefixed(std::move(a), 0);
  Attributes b = analyze_attributes(e.right());
  if (b.status.is_failure()) return prefixed(std::move(b), 1);

  if (a.status.is_zero_constant() && b.status.is_zero_constant()) return zero_constant();
  if (a.status.is_zero_constant()) return subtract ? negated(std::move(b)) : b;
  if (b.status.is_zero_constant()) return a;

  if (a.degree > b.degree) return a;
  if (b.degree > a.degree) return subtract ? negated(std::move(b)) : b;

  Coefficient c = subtract ? a.coeff - b.coeff : a.coeff + b.coeff;
  if (c.is_zero()) {
    return failed(MembershipStatus::outside(subtract ? OutsideReason::SubtractiveCancellation
                                                      : OutsideReason::AdditiveCancellation));
  }
  return member(a.degree, std::move(c));
}

Attributes analyze_pow(const Expr& e) {
  Attributes a = analyze_attributes(e.left());
  if (a.status.is_failure()) return prefixed(std::move(a), 0);
  const Rational& expo = e.exponent();

  if (expo == 0) return member(Rational(0), Coefficient(1));

  if (a.status.is_zero_constant()) {
    if (expo > 0) return zero_constant();
    return failed(MembershipStatus::outside(OutsideReason::DivisionByZeroExpression));
  }

  if (is_integer(expo)) return member(a.degree * expo, a.coeff.pow(expo));

  // Fractional exponent.  Over a base that itself contains a fractional
  // power, the base's eventual sign is not certified symbolically, so the
  // analysis refuses rather than guess.
  if (e.left()->has_fractional_pow()) {
    return failed(MembershipStatus::indeterminate());
  }
  // Radical-free members always carry a single rational coefficient term.
  Rational s = a.coeff.rational_value();
  if (s < 0 && denominator(expo) % 2 == 0) {
    return failed(MembershipStatus::outside(OutsideReason::PowerOfNonPositive));
  }
  return member(a.degree * expo, a.coeff.pow(expo));
}

}  // namespace

Attributes analyze_attributes(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::Constant: {
      const Rational& v = e->constant_value();
      if (v == 0) return zero_constant();
      return member(Rational(0), Coefficient(v));
    }
    case ExprKind::Variable:
      return member(Rational(1), Coefficient(1));
    case ExprKind::Add:
      return analyze_sum(*e, false);
    case ExprKind::Sub:
      return analyze_sum(*e, true);
    case ExprKind::Mul: {
      Attributes a = analyze_attributes(e->left());
      if (a.status.is_failure()) return prefixed(std::move(a), 0);
      Attributes b = analyze_attributes(e->right());
      if (b.status.is_failure()) return prefixed(std::move(b), 1);
      if (a.status.is_zero_constant() || b.status.is_zero_constant()) return zero_constant();
      return member(a.degree + b.degree, a.coeff * b.coeff);
    }
    case ExprKind::Div: {
      Attributes a = analyze_attributes(e->left());
      if (a.status.is_failure()) return prefixed(std::move(a), 0);
      Attributes b = analyze_attributes(e->right());
      if (b.status.is_failure()) return prefixed(std::move(b), 1);
      if (b.status.is_zero_constant()) {
        return failed(MembershipStatus::outside(OutsideReason::DivisionByZeroExpression));
      }
      if (a.status.is_zero_constant()) return zero_constant();
      return member(a.degree - b.degree, a.coeff / b.coeff);
    }
    case ExprKind::Pow:
      return analyze_pow(*e);
  }
  throw std::logic_error("unreachable expression kind");
}

const char* to_text(Membership m) {
  switch (m) {
    case Membership::Member: return "member";
    case Membership::ZeroConstant: return "zero-constant";
    case Membership::Outside: return "outside";
    case Membership::Indeterminate: return "indeterminate";
  }
  return "?";
}

const char* to_text(OutsideReason r) {
  switch (r) {
    case OutsideReason::AdditiveCancellation: return "additive-cancellation";
    case OutsideReason::SubtractiveCancellation: return "subtractive-cancellation";
    case OutsideReason::PowerOfNonPositive: return "power-of-non-positive";
    case OutsideReason::DivisionByZeroExpression: return "division-by-zero-expression";
  }
  return "?";
}

std::string path_to_text(const TreePath& path) {
  if (path.empty()) return "/";
  std::string out;
  for (int i : path) out += "/" + std::to_string(i);
  return out;
}

}  // namespace serex
