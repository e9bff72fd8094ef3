// Acceptance gate: nine end-to-end criteria over the symbolic analyzer, the
// numeric oracles, the generator, and the parser.  Each criterion prints one
// PASS/FAIL line; --only N runs a single criterion.  Exit 0 iff all run
// criteria pass.  All tolerances and populations are pinned here.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "serex/analysis.hpp"
#include "serex/attributes.hpp"
#include "serex/generator.hpp"
#include "serex/numeric.hpp"
#include "serex/parser.hpp"

using namespace serex;

namespace {

const char* kMixedRadical = "(sqrt(n+1)*root(3,n-7)+2)/(n^(2/5)-17)";

Rational rat(long long n, long long d = 1) { return make_rational(Int(n), Int(d)); }

int sign_of_double(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Shared population for the degree and coefficient oracle criteria: 200
// members, depth 4, constants in [-10, 10] with denominators <= 4, degree
// gap >= 1/2 at every sum node, degrees within [-3, 3].
std::vector<ExprPtr> oracle_population() {
  GenConfig cfg;
  cfg.max_depth = 4;
  cfg.constant_min = rat(-10);
  cfg.constant_max = rat(10);
  cfg.constant_denominator_max = 4;
  cfg.min_degree_gap = rat(1, 2);
  std::vector<ExprPtr> out;
  for (unsigned i = 0; i < 200; ++i) {
    cfg.seed = 1000 + i;
    out.push_back(generate_member(cfg));
  }
  return out;
}

// Criterion 1: the mixed-radical quotient analyzes to degree 13/30,
// coefficient exactly 1, verdict divergent.
bool crit1(std::string& d) {
  ExprPtr e = parse(kMixedRadical);
  Attributes a = analyze_attributes(e);
  Classification c = classify(e);
  bool ok = a.status.is_member() && a.degree == rat(13, 30) && a.coeff.is_rational() &&
            a.coeff.rational_value() == 1 && c.verdict == Verdict::Divergent;
  d = "degree " + serex::to_text(a.degree) + ", coefficient " + a.coeff.to_text() +
      ", " + std::string(to_text(c.verdict));
  return ok;
}

// Criterion 2: 1000 random radical quotients (q <= 6, k <= 5, s <= 6, h <= 5)
// classify identically through the expression tree and the closed-form rule.
bool crit2(std::string& d) {
  std::mt19937_64 rng(0xACCE5501ull);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    Int q(rng() % 7), k(1 + rng() % 5), s(rng() % 7), h(1 + rng() % 5);
    GenConfig cfg;
    cfg.seed = 40'000 + static_cast<std::uint64_t>(i);
    ExprPtr e = generate_radical_quotient(cfg, q, k, s, h);
    Classification built = classify(e);
    Classification rule = classify_radical_quotient(q, k, s, h);
    bool agree = built.membership.is_member() && built.verdict == rule.verdict &&
                 built.degree.has_value() && *built.degree == *rule.degree;
    if (!agree) ++bad;
  }
  d = std::to_string(bad) + "/1000 disagreements";
  return bad == 0;
}

// Criterion 3: log-log slope within 0.05 of the exact degree for >= 95% of
// the oracle population and within 0.2 for all, grid [10^4, 10^7], 16 points.
bool crit3(std::string& d) {
  auto pop = oracle_population();
  int within05 = 0, within20 = 0;
  double worst = 0;
  for (const ExprPtr& e : pop) {
    Attributes a = analyze_attributes(e);
    double exact = serex::to_double(a.degree);
    double err = 1e9;
    try {
      DegreeFit fit = estimate_degree(e, 10'000, 10'000'000, 16);
      err = std::fabs(fit.slope - exact);
    } catch (const std::exception&) {
    }
    if (err <= 0.05) ++within05;
    if (err <= 0.2) ++within20;
    if (err > worst) worst = err;
  }
  d = std::to_string(within05) + "/200 within 0.05, " + std::to_string(within20) +
      "/200 within 0.2, worst " + std::to_string(worst);
  return within05 >= 190 && within20 == 200;
}

// Criterion 4: the ratio E(n)/n^r at n = 10^8 lands within 1% of the exact
// coefficient for >= 95% of the same population.
bool crit4(std::string& d) {
  auto pop = oracle_population();
  int within = 0;
  double worst = 0;
  for (const ExprPtr& e : pop) {
    Attributes a = analyze_attributes(e);
    double exact = a.coeff.to_double();
    double rel = 1e9;
    try {
      double ratio = estimate_leading_coefficient(e, a.degree, 100'000'000);
      rel = std::fabs(ratio - exact) / std::fabs(exact);
    } catch (const std::exception&) {
    }
    if (rel <= 0.01) ++within;
    if (rel > worst) worst = rel;
  }
  d = std::to_string(within) + "/200 within 1%, worst " + std::to_string(worst);
  return within >= 190;
}

// Criterion 5: for 500 members, every n in [n_sign_stable, n_sign_stable +
// 10^4] evaluates with the sign of the exact leading coefficient.
bool crit5(std::string& d) {
  GenConfig cfg;
  cfg.max_depth = 3;
  cfg.constant_min = rat(-20);
  cfg.constant_max = rat(20);
  cfg.constant_denominator_max = 4;
  int violations = 0;
  for (unsigned i = 0; i < 500; ++i) {
    cfg.seed = 5000 + i;
    ExprPtr e = generate_member(cfg);
    try {
      int target = analyze_attributes(e).coeff.sign();
      DomainReport rep = find_domain(e, 1, 1'000'000, 64);
      for (long long n = rep.n_sign_stable; n <= rep.n_sign_stable + 10'000; ++n) {
        if (sign_of_double(eval_at(e, n)) != target) {
          ++violations;
          break;
        }
      }
    } catch (const std::exception&) {
      ++violations;
    }
  }
  d = std::to_string(violations) + "/500 violations";
  return violations == 0;
}

// Criterion 6: probe hints never contradict the symbolic verdict over 100
// convergent (degree <= -1.2) and 100 divergent (degree >= -0.8) members;
// convergent cutoff-sum deltas shrink by 2^(r+1) within 25% as cutoffs double.
bool crit6(std::string& d) {
  GenConfig cfg;
  cfg.max_depth = 3;
  cfg.constant_min = rat(-10);
  cfg.constant_max = rat(10);
  cfg.constant_denominator_max = 4;
  cfg.min_degree_gap = rat(1, 2);

  std::vector<ExprPtr> convergent, divergent;
  for (std::uint64_t seed = 20'000; seed < 60'000; ++seed) {
    if (convergent.size() >= 100 && divergent.size() >= 100) break;
    cfg.seed = seed;
    ExprPtr e = generate_member(cfg);
    Rational deg = analyze_attributes(e).degree;
    if (deg <= rat(-12, 10) && convergent.size() < 100) convergent.push_back(e);
    if (deg >= rat(-8, 10) && divergent.size() < 100) divergent.push_back(e);
  }
  if (convergent.size() < 100 || divergent.size() < 100) {
    d = "population shortfall";
    return false;
  }

  const std::vector<long long> cutoffs = {20'000, 40'000, 80'000, 160'000};
  int contradictions = 0, ratio_misses = 0;
  auto contradicts = [](Verdict v, VerdictHint h) {
    return (v == Verdict::AbsolutelyConvergent && h == VerdictHint::ConsistentDivergent) ||
           (v == Verdict::Divergent && h == VerdictHint::ConsistentConvergent);
  };
  for (const ExprPtr& e : divergent) {
    ProbeReport rep = convergence_probe(e, cutoffs);
    if (contradicts(classify(e).verdict, rep.verdict_hint)) ++contradictions;
  }
  for (const ExprPtr& e : convergent) {
    Classification c = classify(e);
    ProbeReport rep = convergence_probe(e, cutoffs);
    if (contradicts(c.verdict, rep.verdict_hint)) ++contradictions;
    double target = std::exp2(serex::to_double(*c.degree) + 1.0);
    for (size_t i = 2; i < rep.cutoff_sums.size(); ++i) {
      double prev = rep.cutoff_sums[i - 1].second - rep.cutoff_sums[i - 2].second;
      double next = rep.cutoff_sums[i].second - rep.cutoff_sums[i - 1].second;
      double ratio = std::fabs(next / prev);
      if (std::fabs(ratio / target - 1.0) > 0.25) {
        ++ratio_misses;
        break;
      }
    }
  }
  d = std::to_string(contradictions) + " contradictions, " +
      std::to_string(ratio_misses) + "/100 delta-ratio misses";
  return contradictions == 0 && ratio_misses == 0;
}

// Criterion 7: the harmonic series is divergent with decade deltas ln 10 +- 2%.
bool crit7(std::string& d) {
  Classification c = classify(parse("1/n"));
  bool ok = c.verdict == Verdict::Divergent;
  ProbeReport rep =
      convergence_probe(parse("1/n"), {1'000, 10'000, 100'000, 1'000'000});
  const double ln10 = std::log(10.0);
  double worst = 0;
  for (size_t i = 1; i < rep.cutoff_sums.size(); ++i) {
    double delta = rep.cutoff_sums[i].second - rep.cutoff_sums[i - 1].second;
    double rel = std::fabs(delta - ln10) / ln10;
    if (rel > worst) worst = rel;
    if (rel > 0.02) ok = false;
  }
  d = std::string(to_text(c.verdict)) + ", worst decade-delta error " +
      std::to_string(worst);
  return ok;
}

// Criterion 8: canonical non-members return the documented statuses.
bool crit8(std::string& d) {
  struct Case {
    const char* text;
    Membership kind;
    OutsideReason reason;
  };
  const Case cases[] = {
      {"n - n", Membership::Outside, OutsideReason::SubtractiveCancellation},
      {"(n+1) - n", Membership::Outside, OutsideReason::SubtractiveCancellation},
      {"sqrt(n) - root(2, n)", Membership::Outside,
       OutsideReason::SubtractiveCancellation},
  };
  int bad = 0;
  for (const Case& c : cases) {
    MembershipStatus s = analyze_attributes(parse(c.text)).status;
    if (s.kind != c.kind || s.reason != c.reason) ++bad;
  }
  MembershipStatus s = analyze_attributes(parse("(1 + n^(1/2))^(1/2)")).status;
  if (s.kind != Membership::Indeterminate || !s.location.empty()) ++bad;
  d = std::to_string(bad) + "/4 wrong statuses";
  return bad == 0;
}

// Criterion 9: 10^4 generated members round-trip through format and parse.
bool crit9(std::string& d) {
  GenConfig cfg;
  int bad = 0;
  for (unsigned seed = 0; seed < 10'000; ++seed) {
    cfg.seed = seed;
    ExprPtr e = generate_member(cfg);
    if (!structurally_equal(parse(format(e)), e)) ++bad;
  }
  d = std::to_string(bad) + "/10000 round-trip failures";
  return bad == 0;
}

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // seconds; 0 = unbounded
  std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "golden mixed-radical quotient", 1.0, crit1},
      {2, "radical-quotient rule equivalence", 30.0, crit2},
      {3, "degree oracle agreement", 60.0, crit3},
      {4, "coefficient oracle agreement", 0.0, crit4},
      {5, "sign stability past the stabilization index", 0.0, crit5},
      {6, "probe/theorem consistency and tail decay", 0.0, crit6},
      {7, "harmonic boundary", 0.0, crit7},
      {8, "membership negatives", 0.0, crit8},
      {9, "parser round trip", 0.0, crit9},
  };

  bool all_ok = true;
  int ran = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& err) {
      detail = std::string("exception: ") + err.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && c.time_limit > 0 && secs > c.time_limit) {
      ok = false;
      detail += " [over the " + std::to_string(c.time_limit) + " s limit]";
    }
    std::printf("criterion %d: %s  %s (%s; %.2f s)\n", c.id, ok ? "PASS" : "FAIL",
                c.title, detail.c_str(), secs);
    all_ok = all_ok && ok;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no such criterion: --only %d (valid: 1..9)\n", only);
    return 2;
  }
  std::printf("%s\n", all_ok ? "acceptance: all criteria passed"
                             : "acceptance: FAILURES present");
  return all_ok ? 0 : 1;
}
