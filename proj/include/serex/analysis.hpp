#pragma once

// Series classification: the exact degree decides convergence (< -1 versus
// >= -1), and a forward scan locates where the expression becomes defined
// and where its sign settles to the sign of the leading coefficient.

#include <optional>

#include "serex/attributes.hpp"
#include "serex/expr.hpp"
#include "serex/pointwise.hpp"

namespace serex {

enum class Verdict { AbsolutelyConvergent, Divergent, ZeroSeries, NotApplicable };

struct Classification {
  Verdict verdict = Verdict::NotApplicable;
  std::optional<Rational> degree;  // absent for ZeroSeries / NotApplicable
  std::optional<int> coeff_sign;
  MembershipStatus membership;     // carries the reason when NotApplicable
};

struct DomainReport {
  long long n_defined = 0;
  long long n_sign_stable = 0;
  long long window = 0;
  bool certified = false;  // the scan is a heuristic, never a proof
  int sign = 0;
};

struct WindowNotFound : std::runtime_error {
  explicit WindowNotFound(const std::string& what) : std::runtime_error(what) {}
};

// Exact decision: AbsolutelyConvergent iff degree < -1, Divergent otherwise,
// for nonzero members; ZeroSeries for the zero expression; NotApplicable
// (carrying membership) when the analysis refuses the expression.
Classification classify(const ExprPtr& e);

// Sum over n of (P_q(n))^(1/k) / (R_s(n))^(1/h): convergent iff s/h - q/k > 1.
// Exact rational comparison; degree reported as q/k - s/h.  Requires k, h >= 1
// and q, s >= 0.
Classification classify_radical_quotient(const Int& q, const Int& k, const Int& s, const Int& h);

// Sum over n of 1 / R_s(n); equals classify_radical_quotient(0, 1, s, 1).
Classification classify_reciprocal_polynomial(const Int& s);

// Forward scan from n_start: n_defined is the first n whose whole window
// [n, n+window] evaluates without domain error, n_sign_stable the first
// n >= n_defined whose whole window matches sign(c(E)).  Requires a Member
// expression; throws WindowNotFound when the scan exhausts n_max.
DomainReport find_domain(const ExprPtr& e, long long n_start, long long n_max,
                         long long window);

const char* to_text(Verdict v);

}  // namespace serex
