#pragma once

// Membership analysis: one bottom-up pass assigns each expression either an
// exact (degree, leading coefficient) pair or a reason it falls outside the
// analyzable family.

#include <string>
#include <vector>

#include "serex/coefficient.hpp"
#include "serex/expr.hpp"

namespace serex {

enum class Membership { Member, ZeroConstant, Outside, Indeterminate };

enum class OutsideReason {
  AdditiveCancellation,
  SubtractiveCancellation,
  PowerOfNonPositive,
  DivisionByZeroExpression,
};

// Child indices from the root: 0 = left/base, 1 = right.
using TreePath = std::vector<int>;

struct MembershipStatus {
  Membership kind = Membership::Member;
  OutsideReason reason = OutsideReason::AdditiveCancellation;
  TreePath location;  // meaningful for Outside and Indeterminate

  bool is_member() const { return kind == Membership::Member; }
  bool is_zero_constant() const { return kind == Membership::ZeroConstant; }
  bool is_failure() const {
    return kind == Membership::Outside || kind == Membership::Indeterminate;
  }

  static MembershipStatus member() { return {}; }
  static MembershipStatus zero_constant() { return {Membership::ZeroConstant, {}, {}}; }
  static MembershipStatus outside(OutsideReason r, TreePath at = {}) {
    return {Membership::Outside, r, std::move(at)};
  }
  static MembershipStatus indeterminate(TreePath at = {}) {
    return {Membership::Indeterminate, {}, std::move(at)};
  }
};

struct Attributes {
  MembershipStatus status;
  // Valid only when status.is_member().
  Rational degree{0};
  Coefficient coeff;
};

// Exact degree and leading coefficient, or the leftmost innermost failure.
Attributes analyze_attributes(const ExprPtr& e);

const char* to_text(Membership m);
const char* to_text(OutsideReason r);
// "/" for the root, else "/0/1"-style child indices.
std::string path_to_text(const TreePath& path);

}  // namespace serex
