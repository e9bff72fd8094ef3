#include "serex/numeric.hpp"

#include <cmath>
#include <limits>

namespace serex {
namespace {

double ev(const Expr& e, long long n, TreePath& path) {
  switch (e.kind()) {
    case ExprKind::Constant:
      return to_double(e.constant_value());
    case ExprKind::Variable:
      return static_cast<double>(n);
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div: {
      path.push_back(0);
      double a = ev(*e.left(), n, path);
      path.back() = 1;
      double b = ev(*e.right(), n, path);
      path.pop_back();
      switch (e.kind()) {
        case ExprKind::Add: return a + b;
        case ExprKind::Sub: return a - b;
        case ExprKind::Mul: return a * b;
        default:
          if (b == 0.0) throw DomainError(n, path);
          return a / b;
      }
    }
    case ExprKind::Pow: {
      path.push_back(0);
      double b = ev(*e.left(), n, path);
      path.pop_back();
      const Rational& expo = e.exponent();
      double x = to_double(expo);
      if (is_integer(expo)) {
        if (b == 0.0 && expo < 0) throw DomainError(n, path);
        return std::pow(b, x);
      }
      if (b > 0.0) return std::exp(x * std::log(b));
      if (b == 0.0) {
        if (expo > 0) return 0.0;
        throw DomainError(n, path);
      }
      if (denominator(expo) % 2 != 0) {
        double mag = std::exp(x * std::log(-b));
        return numerator(expo) % 2 == 0 ? mag : -mag;
      }
      throw DomainError(n, path);
    }
  }
  throw std::logic_error("unreachable expression kind");
}

struct NeumaierSum {
  double sum = 0.0, comp = 0.0;

  void add(double x) {
    double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace

double eval_at(const ExprPtr& e, long long n) {
  if (n < 1) throw std::invalid_argument("eval_at requires n >= 1");
  TreePath path;
  return ev(*e, n, path);
}

double partial_sum(const ExprPtr& e, long long from, long long to) {
  if (from < 1 || from > to) throw std::invalid_argument("invalid summation range");
  NeumaierSum acc;
  for (long long n = from; n <= to; ++n) acc.add(eval_at(e, n));
  return acc.value();
}

DegreeFit estimate_degree(const ExprPtr& e, long long n_lo, long long n_hi, int points) {
  if (points < 2 || n_lo < 1 || n_hi <= n_lo) {
    throw std::invalid_argument("estimate_degree needs points >= 2 and 1 <= n_lo < n_hi");
  }
  std::vector<double> xs, ys;
  double llo = std::log(static_cast<double>(n_lo));
  double lhi = std::log(static_cast<double>(n_hi));
  long long prev = 0;
  for (int i = 0; i < points; ++i) {
    double t = llo + (lhi - llo) * i / (points - 1);
    long long g = std::llround(std::exp(t));
    if (g <= prev) g = prev + 1;
    prev = g;
    double y = eval_at(e, g);
    if (y == 0.0) throw ZeroSample(g);
    xs.push_back(std::log(static_cast<double>(g)));
    ys.push_back(std::log(std::fabs(y)));
  }
  double mx = 0, my = 0;
  auto m = static_cast<double>(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  double slope = sxy / sxx;
  double intercept = my - slope * mx;
  double ss = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    double r = ys[i] - (slope * xs[i] + intercept);
    ss += r * r;
  }
  return {slope, std::sqrt(ss / m)};
}

double estimate_leading_coefficient(const ExprPtr& e, const Rational& r, long long n) {
  if (n < 1) throw std::invalid_argument("estimate_leading_coefficient requires n >= 1");
  double y = eval_at(e, n);
  return y / std::exp(to_double(r) * std::log(static_cast<double>(n)));
}

ProbeReport convergence_probe(const ExprPtr& e, const std::vector<long long>& cutoffs,
                              const ProbeOptions& opts) {
  if (cutoffs.empty()) throw std::invalid_argument("convergence_probe needs cutoffs");
  for (size_t i = 1; i < cutoffs.size(); ++i) {
    if (cutoffs[i] <= cutoffs[i - 1]) {
      throw std::invalid_argument("cutoffs must be strictly increasing");
    }
  }

  ProbeReport report;
  DegreeFit fit = estimate_degree(e, opts.grid_lo, opts.grid_hi, opts.grid_points);
  report.estimated_degree = fit.slope;
  report.degree_residual = fit.residual;
  report.estimated_coeff =
      eval_at(e, opts.grid_hi) /
      std::exp(fit.slope * std::log(static_cast<double>(opts.grid_hi)));

  DomainReport dom = find_domain(e, opts.n_start, opts.n_max, opts.window);
  long long start = dom.n_sign_stable;
  NeumaierSum acc;
  long long next = start;
  for (long long cutoff : cutoffs) {
    for (; next <= cutoff; ++next) acc.add(eval_at(e, next));
    report.cutoff_sums.emplace_back(cutoff, acc.value());
  }

  // Tail model: S(c2) - S(c1) ~ K * (c2^(r+1) - c1^(r+1)), so consecutive
  // deltas over a geometric cutoff ladder imply an exponent of their own.
  // The hint requires the regression slope and the delta-implied exponent to
  // agree on which side of -1 the degree falls.
  report.verdict_hint = VerdictHint::Inconclusive;
  if (report.cutoff_sums.size() < 3) return report;

  std::vector<double> deltas;
  for (size_t i = 1; i < report.cutoff_sums.size(); ++i) {
    deltas.push_back(report.cutoff_sums[i].second - report.cutoff_sums[i - 1].second);
  }
  bool finite = std::isfinite(report.estimated_degree);
  for (const auto& [c, s] : report.cutoff_sums) finite = finite && std::isfinite(s);
  for (double d : deltas) finite = finite && std::isfinite(d) && d != 0.0;
  if (!finite) return report;

  int delta_sign = deltas[0] > 0 ? 1 : -1;
  for (double d : deltas) {
    if ((d > 0 ? 1 : -1) != delta_sign) return report;
  }

  double tail_sum = 0;
  bool shrinking = true;
  for (size_t i = 1; i < deltas.size(); ++i) {
    double ratio = deltas[i] / deltas[i - 1];
    double g = static_cast<double>(cutoffs[i + 1]) / static_cast<double>(cutoffs[i]);
    tail_sum += std::log(ratio) / std::log(g) - 1.0;
    if (std::fabs(deltas[i]) >= std::fabs(deltas[i - 1])) shrinking = false;
  }
  double tail = tail_sum / static_cast<double>(deltas.size() - 1);
  double r = report.estimated_degree;

  if (r <= -1.1 && tail <= -1.05 && shrinking) {
    report.verdict_hint = VerdictHint::ConsistentConvergent;
  } else if (r >= -1.05 && tail >= -1.01) {
    report.verdict_hint = VerdictHint::ConsistentDivergent;
  }
  return report;
}

const char* to_text(VerdictHint h) {
  switch (h) {
    case VerdictHint::ConsistentConvergent: return "consistent-convergent";
    case VerdictHint::ConsistentDivergent: return "consistent-divergent";
    case VerdictHint::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace serex
