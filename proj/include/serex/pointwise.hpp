#pragma once

// Certified pointwise evaluation of E(n): decides definedness and sign at a
// concrete index.  A fast double-interval tier handles the common case and
// escalates to exact rational arithmetic mixed with mpfr balls when a domain
// or sign decision is too close to call.  Exact zeros (perfect roots, exact
// cancellations) are recognized exactly; a division whose denominator still
// cannot be separated from zero at the precision cap counts as a domain
// error at that point.

#include <mpfr.h>

#include <stdexcept>

#include "serex/attributes.hpp"
#include "serex/expr.hpp"

namespace serex {

struct DomainError : std::runtime_error {
  long long n;
  TreePath location;
  DomainError(long long n_, TreePath location_);
};

enum class PointSign { Negative, Zero, Positive, Uncertain };

struct PointProbe {
  bool defined = false;
  PointSign sign = PointSign::Uncertain;
  TreePath failure;  // offending node when !defined
};

struct PointwiseOptions {
  mpfr_prec_t max_prec = mpfr_prec_t(1) << 12;
};

PointProbe probe_point(const ExprPtr& e, long long n, const PointwiseOptions& opts = {});

}  // namespace serex
