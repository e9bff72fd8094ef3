#pragma once

// Immutable expression trees over one positive integer variable n.

#include <memory>

#include "serex/rational.hpp"

namespace serex {

enum class ExprKind { Constant, Variable, Add, Sub, Mul, Div, Pow };

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
 public:
  ExprKind kind() const { return kind_; }
  // Constant nodes only.
  const Rational& constant_value() const;
  // Binary nodes; for Pow, left() is the base.
  const ExprPtr& left() const;
  const ExprPtr& right() const;
  // Pow nodes only; exact rational exponent.
  const Rational& exponent() const;
  // True when any Pow with a non-integer exponent occurs in this subtree.
  bool has_fractional_pow() const { return has_fractional_pow_; }

  static ExprPtr constant(const Rational& value);
  static ExprPtr variable();
  static ExprPtr add(ExprPtr l, ExprPtr r);
  static ExprPtr sub(ExprPtr l, ExprPtr r);
  static ExprPtr mul(ExprPtr l, ExprPtr r);
  static ExprPtr div(ExprPtr l, ExprPtr r);
  static ExprPtr pow(ExprPtr base, const Rational& expo);

 private:
  Expr(ExprKind kind, Rational value, ExprPtr l, ExprPtr r, Rational expo);

  ExprKind kind_;
  Rational value_;
  ExprPtr left_, right_;
  Rational exponent_;
  bool has_fractional_pow_ = false;
};

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);
std::size_t node_count(const ExprPtr& e);

// root(k, E) = Pow(E, 1/k); requires k >= 1.
ExprPtr desugar_root(const Int& k, ExprPtr e);

}  // namespace serex
