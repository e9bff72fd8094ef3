#pragma once

// Seeded random construction of guaranteed family members, for
// property-based testing of every other module.

#include <cstdint>

#include "serex/expr.hpp"

namespace serex {

struct GenConfig {
  std::uint64_t seed = 0;
  int max_depth = 5;
  // Constants are drawn from [constant_min, constant_max] with denominators
  // up to constant_denominator_max; zero is never drawn.
  Rational constant_min{-100};
  Rational constant_max{100};
  unsigned constant_denominator_max = 10;
  unsigned exponent_denominator_max = 6;
  // Minimum |degree(left) - degree(right)| admitted at Add/Sub nodes; equal
  // degrees are allowed only when the gap is zero (and never cancel).
  Rational min_degree_gap{0};
  // Every subtree's degree is kept inside [degree_min, degree_max]; the
  // bounds must admit a leaf (contain 0 or 1).
  Rational degree_min{-3};
  Rational degree_max{3};
  // Rejected draws tolerated per node before giving up.
  int retry_budget = 1000;
};

struct RetryBudgetExhausted : std::runtime_error {
  explicit RetryBudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

// A random member of the family: re-analysis always reports Member, with
// degree inside cfg degree bounds.  Deterministic for a fixed cfg.
ExprPtr generate_member(const GenConfig& cfg);

// Pow(P_q, 1/k) / Pow(R_s, 1/h) with random polynomials of exact degrees
// q, s (positive leading coefficients, Horner-nested).  Requires k, h >= 1
// and q, s >= 0.
ExprPtr generate_radical_quotient(const GenConfig& cfg, const Int& q, const Int& k,
                                  const Int& s, const Int& h);

}  // namespace serex
