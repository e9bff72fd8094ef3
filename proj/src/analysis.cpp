#include "serex/analysis.hpp"

namespace serex {

Classification classify(const ExprPtr& e) {
  Attributes attrs = analyze_attributes(e);
  Classification c;
  c.membership = attrs.status;
  if (attrs.status.is_zero_constant()) {
    c.verdict = Verdict::ZeroSeries;
    return c;
  }
  if (!attrs.status.is_member()) {
    c.verdict = Verdict::NotApplicable;
    return c;
  }
  c.degree = attrs.degree;
  c.coeff_sign = attrs.coeff.sign();
  c.verdict = attrs.degree < -1 ? Verdict::AbsolutelyConvergent : Verdict::Divergent;
  return c;
}

Classification classify_radical_quotient(const Int& q, const Int& k, const Int& s,
                                         const Int& h) {
  if (k < 1 || h < 1) throw std::invalid_argument("root indices must be positive");
  if (q < 0 || s < 0) throw std::invalid_argument("polynomial degrees must be nonnegative");
  Classification c;
  c.membership = MembershipStatus::member();
  c.degree = make_rational(q, k) - make_rational(s, h);
  c.coeff_sign = 1;
  c.verdict = *c.degree < -1 ? Verdict::AbsolutelyConvergent : Verdict::Divergent;
  return c;
}

Classification classify_reciprocal_polynomial(const Int& s) {
  return classify_radical_quotient(Int(0), Int(1), s, Int(1));
}

DomainReport find_domain(const ExprPtr& e, long long n_start, long long n_max,
                         long long window) {
  if (n_start < 1 || n_start > n_max) throw std::invalid_argument("invalid scan range");
  if (window < 0) throw std::invalid_argument("negative window");
  Attributes attrs = analyze_attributes(e);
  if (!attrs.status.is_member()) {
    throw std::invalid_argument("find_domain requires a Member expression");
  }
  int target = attrs.coeff.sign();
  PointSign want = target > 0 ? PointSign::Positive : PointSign::Negative;

  long long defined_run = -1, sign_run = -1;
  long long n_defined = -1, n_sign_stable = -1;
  for (long long n = n_start; n <= n_max + window; ++n) {
    PointProbe p = probe_point(e, n);
    if (!p.defined) {
      defined_run = -1;
      sign_run = -1;
      continue;
    }
    if (defined_run < 0) defined_run = n;
    if (n_defined < 0 && defined_run <= n_max && n - defined_run >= window) {
      n_defined = defined_run;
    }
    if (p.sign == want) {
      if (sign_run < 0) sign_run = n;
      if (n_sign_stable < 0 && sign_run <= n_max && n - sign_run >= window) {
        n_sign_stable = sign_run;
      }
    } else {
      sign_run = -1;
    }
    if (n_defined >= 0 && n_sign_stable >= 0) {
      return {n_defined, n_sign_stable, window, false, target};
    }
  }
  if (n_defined < 0) {
    throw WindowNotFound("no index with a domain-error-free window of " +
                         std::to_string(window) + " within n_max = " + std::to_string(n_max));
  }
  throw WindowNotFound("expression sign did not stabilize to the coefficient sign within "
                       "n_max = " + std::to_string(n_max));
}

const char* to_text(Verdict v) {
  switch (v) {
    case Verdict::AbsolutelyConvergent: return "absolutely-convergent";
    case Verdict::Divergent: return "divergent";
    case Verdict::ZeroSeries: return "zero-series";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

}  // namespace serex
