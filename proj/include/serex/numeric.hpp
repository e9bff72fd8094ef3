#pragma once

// Floating-point oracles: direct evaluation, compensated partial sums,
// log-log degree regression, and the limit-comparison coefficient estimate.
// These cross-validate the symbolic layer; they never decide convergence.

#include <utility>
#include <vector>

#include "serex/analysis.hpp"
#include "serex/expr.hpp"
#include "serex/pointwise.hpp"

namespace serex {

struct ZeroSample : std::runtime_error {
  long long n;
  explicit ZeroSample(long long n_)
      : std::runtime_error("expression is exactly zero at grid point n = " + std::to_string(n_)),
        n(n_) {}
};

enum class VerdictHint { ConsistentConvergent, ConsistentDivergent, Inconclusive };

struct DegreeFit {
  double slope = 0;
  double residual = 0;  // RMS of the log-log fit
};

struct ProbeReport {
  double estimated_degree = 0;
  double degree_residual = 0;
  double estimated_coeff = 0;
  std::vector<std::pair<long long, double>> cutoff_sums;  // strictly increasing cutoffs
  VerdictHint verdict_hint = VerdictHint::Inconclusive;
};

struct ProbeOptions {
  long long n_start = 1;
  long long n_max = 10'000'000;
  long long window = 64;
  long long grid_lo = 10'000;
  long long grid_hi = 10'000'000;
  int grid_points = 16;
};

// IEEE double evaluation; odd roots of negatives are real, even or
// non-integer powers of negatives and zero denominators raise DomainError.
// Rational powers of positive bases evaluate as exp(expo * ln base).
double eval_at(const ExprPtr& e, long long n);

// Compensated (Neumaier) summation of eval_at over [from, to], ascending.
double partial_sum(const ExprPtr& e, long long from, long long to);

// Least-squares slope of log|E(n)| against log n over a geometric grid.
// Throws ZeroSample when E vanishes exactly at a grid point.
DegreeFit estimate_degree(const ExprPtr& e, long long n_lo, long long n_hi, int points);

// E(n) / n^r: near the leading coefficient for large n.
double estimate_leading_coefficient(const ExprPtr& e, const Rational& r, long long n);

// Partial sums at each cutoff starting from the sign-stabilization index,
// plus a consistency hint derived from the estimated degree and the
// inter-cutoff deltas.  The hint is deliberately conservative: inconclusive
// whenever the numbers do not clearly match one tail model.
ProbeReport convergence_probe(const ExprPtr& e, const std::vector<long long>& cutoffs,
                              const ProbeOptions& opts = {});

const char* to_text(VerdictHint h);

}  // namespace serex
