#include "serex/expr.hpp"

#include <stdexcept>

namespace serex {

Expr::Expr(ExprKind kind, Rational value, ExprPtr l, ExprPtr r, Rational expo)
    : kind_(kind),
      value_(std::move(value)),
      left_(std::move(l)),
      right_(std::move(r)),
      exponent_(std::move(expo)) {
  if (left_ && left_->has_fractional_pow_) has_fractional_pow_ = true;
  if (right_ && right_->has_fractional_pow_) has_fractional_pow_ = true;
  if (kind_ == ExprKind::Pow && !is_integer(exponent_)) has_fractional_pow_ = true;
}

const Rational& Expr::constant_value() const {
  if (kind_ != ExprKind::Constant) throw std::logic_error("constant_value on a non-constant");
  return value_;
}

const ExprPtr& Expr::left() const {
  if (!left_) throw std::logic_error("left child on a leaf");
  return left_;
}

const ExprPtr& Expr::right() const {
  if (!right_) throw std::logic_error("right child on this node kind");
  return right_;
}

const Rational& Expr::exponent() const {
  if (kind_ != ExprKind::Pow) throw std::logic_error("exponent on a non-power");
  return exponent_;
}

ExprPtr Expr::constant(const Rational& value) {
  return ExprPtr(new Expr(ExprKind::Constant, value, nullptr, nullptr, Rational(0)));
}

ExprPtr Expr::variable() {
  return ExprPtr(new Expr(ExprKind::Variable, Rational(0), nullptr, nullptr, Rational(0)));
}

ExprPtr Expr::add(ExprPtr l, ExprPtr r) {
  return ExprPtr(new Expr(ExprKind::Add, Rational(0), std::move(l), std::move(r), Rational(0)));
}

ExprPtr Expr::sub(ExprPtr l, ExprPtr r) {
  return ExprPtr(new Expr(ExprKind::Sub, Rational(0), std::move(l), std::move(r), Rational(0)));
}

ExprPtr Expr::mul(ExprPtr l, ExprPtr r) {
  return ExprPtr(new Expr(ExprKind::Mul, Rational(0), std::move(l), std::move(r), Rational(0)));
}

ExprPtr Expr::div(ExprPtr l, ExprPtr r) {
  return ExprPtr(new Expr(ExprKind::Div, Rational(0), std::move(l), std::move(r), Rational(0)));
}

ExprPtr Expr::pow(ExprPtr base, const Rational& expo) {
  return ExprPtr(new Expr(ExprKind::Pow, Rational(0), std::move(base), nullptr, expo));
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case ExprKind::Constant:
      return a->constant_value() == b->constant_value();
    case ExprKind::Variable:
      return true;
    case ExprKind::Pow:
      return a->exponent() == b->exponent() && structurally_equal(a->left(), b->left());
    default:
      return structurally_equal(a->left(), b->left()) &&
             structurally_equal(a->right(), b->right());
  }
}

std::size_t node_count(const ExprPtr& e) {
  if (!e) return 0;
  switch (e->kind()) {
    case ExprKind::Constant:
    case ExprKind::Variable:
      return 1;
    case ExprKind::Pow:
      return 1 + node_count(e->left());
    default:
      return 1 + node_count(e->left()) + node_count(e->right());
  }
}

ExprPtr desugar_root(const Int& k, ExprPtr e) {
  if (k < 1) throw std::domain_error("root index must be a positive integer");
  return Expr::pow(std::move(e), make_rational(Int(1), k));
}

}  // namespace serex
