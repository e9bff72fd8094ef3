// serex: decides absolute convergence of series over a recursive expression
// family by exact degree/coefficient analysis, cross-checked numerically.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "serex/analysis.hpp"
#include "serex/attributes.hpp"
#include "serex/generator.hpp"
#include "serex/numeric.hpp"
#include "serex/parser.hpp"

namespace {

constexpr const char* kToolVersion = "serex 1.0.0";

// Exit codes (stable contract): 0 analyzable (member or zero series),
// 1 parse error, 2 outside the family, 3 indeterminate, 4 numeric oracle
// disagreement or numeric evaluation failure, 5 generator budget exhausted.
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitOutside = 2;
constexpr int kExitIndeterminate = 3;
constexpr int kExitOracle = 4;
constexpr int kExitBudget = 5;

using serex::Rational;

std::string membership_text(const serex::MembershipStatus& status) {
  using serex::Membership;
  if (status.kind == Membership::Outside) {
    return std::string("outside: ") + to_text(status.reason);
  }
  return to_text(status.kind);
}

int membership_exit_code(const serex::MembershipStatus& status) {
  switch (status.kind) {
    case serex::Membership::Member:
    case serex::Membership::ZeroConstant: return kExitOk;
    case serex::Membership::Outside: return kExitOutside;
    case serex::Membership::Indeterminate: return kExitIndeterminate;
  }
  return kExitIndeterminate;
}

serex::ExprPtr parse_or_report(const std::string& text, int& rc) {
  try {
    return serex::parse(text);
  } catch (const serex::ParseError& err) {
    std::cerr << serex::render_parse_error(text, err) << "\n";
    rc = kExitParse;
    return nullptr;
  }
}

Rational parse_gap(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(serex::Int(text));
    }
    return serex::make_rational(serex::Int(text.substr(0, slash)),
                                serex::Int(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--min-gap", "expected an integer or a fraction like 1/2");
  }
}

struct AnalyzeFlags {
  std::string expr_text;
  long long n0 = 1;
  long long window = 64;
  long long n_max = 10'000'000;
  bool json = false;
};

int cmd_analyze(const AnalyzeFlags& f) {
  int rc = kExitOk;
  serex::ExprPtr e = parse_or_report(f.expr_text, rc);
  if (!e) return rc;

  serex::Attributes attrs = serex::analyze_attributes(e);
  serex::Classification cls = serex::classify(e);
  rc = membership_exit_code(attrs.status);

  bool member = attrs.status.is_member();
  serex::DomainReport domain;
  if (member) {
    try {
      domain = serex::find_domain(e, f.n0, f.n_max, f.window);
    } catch (const serex::WindowNotFound& err) {
      std::cerr << "error: " << err.what() << "\n";
      return kExitOracle;
    }
  }

  if (f.json) {
    nlohmann::ordered_json doc;
    doc["expr_text"] = f.expr_text;
    if (member) {
      doc["degree"] = {{"num", numerator(attrs.degree).convert_to<long long>()},
                       {"den", denominator(attrs.degree).convert_to<long long>()}};
      doc["leading_coefficient"] = {{"decimal", attrs.coeff.to_double()},
                                    {"exact", attrs.coeff.to_text()}};
    }
    doc["membership"] = membership_text(attrs.status);
    doc["classification"] = to_text(cls.verdict);
    if (member) {
      doc["n_defined"] = domain.n_defined;
      doc["n_sign_stable"] = domain.n_sign_stable;
      doc["coeff_sign"] = domain.sign;
    }
    doc["tool_version"] = kToolVersion;
    std::cout << doc.dump(2) << "\n";
    return rc;
  }

  std::cout << "expression:     " << f.expr_text << "\n";
  std::cout << "membership:     " << membership_text(attrs.status);
  if (attrs.status.is_failure()) {
    std::cout << " (at node " << serex::path_to_text(attrs.status.location) << ")";
  }
  std::cout << "\n";
  if (member) {
    std::cout << "degree:         " << serex::to_text(attrs.degree) << "\n";
    std::cout << "coefficient:    " << attrs.coeff.to_text() << " (about "
              << attrs.coeff.to_double() << ")\n";
  }
  std::cout << "classification: " << to_text(cls.verdict) << "\n";
  if (member) {
    std::cout << "n_defined:      " << domain.n_defined << "\n";
    std::cout << "n_sign_stable:  " << domain.n_sign_stable << "\n";
    std::cout << "coeff_sign:     " << (domain.sign > 0 ? "+1" : "-1") << "\n";
  }
  return rc;
}

struct VerifyFlags {
  std::string expr_text;
  long long grid_lo = 10'000;
  long long grid_hi = 10'000'000;
  int points = 16;
  std::vector<long long> cutoffs = {10'000, 100'000, 1'000'000};
};

int cmd_verify(const VerifyFlags& f) {
  int rc = kExitOk;
  serex::ExprPtr e = parse_or_report(f.expr_text, rc);
  if (!e) return rc;

  serex::Attributes attrs = serex::analyze_attributes(e);
  if (!attrs.status.is_member()) {
    if (attrs.status.is_zero_constant()) {
      std::cout << "zero series; every partial sum is 0, nothing to verify\n";
      return kExitOk;
    }
    std::cerr << "error: cannot verify, membership is " << membership_text(attrs.status)
              << " (at node " << serex::path_to_text(attrs.status.location) << ")\n";
    return membership_exit_code(attrs.status);
  }

  serex::Classification cls = serex::classify(e);
  serex::ProbeOptions opts;
  opts.grid_lo = f.grid_lo;
  opts.grid_hi = f.grid_hi;
  opts.grid_points = f.points;

  serex::ProbeReport rep;
  double est_coeff = 0;
  try {
    rep = serex::convergence_probe(e, f.cutoffs, opts);
    est_coeff = serex::estimate_leading_coefficient(e, attrs.degree, f.grid_hi);
  } catch (const serex::DomainError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitOracle;
  } catch (const serex::WindowNotFound& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitOracle;
  } catch (const serex::ZeroSample& err) {
    std::cerr << "error: sampled an exact zero at n = " << err.n
              << "; the log-log fit is undefined there\n";
    return kExitOracle;
  }

  double exact_degree = serex::to_double(attrs.degree);
  double exact_coeff = attrs.coeff.to_double();
  bool slope_ok = std::abs(rep.estimated_degree - exact_degree) <= 0.2;
  bool coeff_ok = std::abs(est_coeff - exact_coeff) <= 0.1 * std::abs(exact_coeff);
  bool hint_ok = true;
  if (rep.verdict_hint == serex::VerdictHint::ConsistentConvergent) {
    hint_ok = cls.verdict == serex::Verdict::AbsolutelyConvergent;
  } else if (rep.verdict_hint == serex::VerdictHint::ConsistentDivergent) {
    hint_ok = cls.verdict == serex::Verdict::Divergent;
  }

  std::printf("symbolic degree:  %s (about %.6f)\n", serex::to_text(attrs.degree).c_str(),
              exact_degree);
  std::printf("estimated slope:  %.6f (residual %.6f)  [%s, tolerance 0.2]\n",
              rep.estimated_degree, rep.degree_residual, slope_ok ? "ok" : "MISMATCH");
  std::printf("symbolic coeff:   %s (about %.6f)\n", attrs.coeff.to_text().c_str(),
              exact_coeff);
  std::printf("estimated coeff:  %.6f (ratio at n = %lld)  [%s, relative tolerance 0.1]\n",
              est_coeff, f.grid_hi, coeff_ok ? "ok" : "MISMATCH");
  std::printf("symbolic verdict: %s\n", to_text(cls.verdict));
  std::printf("probe hint:       %s  [%s]\n", to_text(rep.verdict_hint),
              hint_ok ? "ok" : "CONTRADICTION");
  for (const auto& [cutoff, sum] : rep.cutoff_sums) {
    std::printf("sum to %-9lld %.10g\n", cutoff, sum);
  }
  bool all_ok = slope_ok && coeff_ok && hint_ok;
  std::printf("verdict:          %s\n", all_ok ? "consistent" : "INCONSISTENT");
  return all_ok ? kExitOk : kExitOracle;
}

struct SumFlags {
  std::string expr_text;
  long long from = 1;
  long long to = 0;
};

int cmd_sum(const SumFlags& f) {
  int rc = kExitOk;
  serex::ExprPtr e = parse_or_report(f.expr_text, rc);
  if (!e) return rc;
  try {
    std::printf("%.17g\n", serex::partial_sum(e, f.from, f.to));
  } catch (const serex::DomainError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitOracle;
  }
  return kExitOk;
}

struct GenerateFlags {
  unsigned long long seed = 0;
  int depth = 5;
  int count = 1;
  std::string min_gap = "0";
};

int cmd_generate(const GenerateFlags& f) {
  serex::GenConfig cfg;
  cfg.max_depth = f.depth;
  cfg.min_degree_gap = parse_gap(f.min_gap);
  try {
    for (int i = 0; i < f.count; ++i) {
      cfg.seed = f.seed + static_cast<unsigned long long>(i);
      std::cout << serex::format(serex::generate_member(cfg)) << "\n";
    }
  } catch (const serex::RetryBudgetExhausted& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBudget;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serex: absolute-convergence analyzer for a recursive expression family"};
  app.require_subcommand(1);
  int rc = kExitOk;

  AnalyzeFlags af;
  auto* analyze = app.add_subcommand(
      "analyze", "parse an expression, report membership, degree, coefficient, verdict");
  analyze->add_option("expr", af.expr_text, "expression in n, e.g. \"1/n^2\"")->required();
  analyze->add_option("--n0", af.n0, "first index to scan for the domain window");
  analyze->add_option("--window", af.window, "run length that certifies stability");
  analyze->add_option("--n-max", af.n_max, "give up the domain scan past this n");
  analyze->add_flag("--json", af.json, "emit the analysis document as JSON");
  analyze->callback([&] { rc = cmd_analyze(af); });

  VerifyFlags vf;
  auto* verify = app.add_subcommand(
      "verify", "cross-check the symbolic verdict against both numerical oracles");
  verify->add_option("expr", vf.expr_text, "expression in n")->required();
  verify->add_option("--grid-lo", vf.grid_lo, "low end of the log-log fit grid");
  verify->add_option("--grid-hi", vf.grid_hi, "high end of the log-log fit grid");
  verify->add_option("--points", vf.points, "number of grid points");
  verify->add_option("--cutoffs", vf.cutoffs, "partial-sum cutoffs, strictly increasing")
      ->expected(-1);
  verify->callback([&] { rc = cmd_verify(vf); });

  SumFlags sf;
  auto* sum = app.add_subcommand("sum", "print the partial sum of E(n) over [from, to]");
  sum->add_option("expr", sf.expr_text, "expression in n")->required();
  sum->add_option("--from", sf.from, "first index (default 1)");
  sum->add_option("--to", sf.to, "last index")->required();
  sum->callback([&] { rc = cmd_sum(sf); });

  GenerateFlags gf;
  auto* generate =
      app.add_subcommand("generate", "print random family members, one per line");
  generate->add_option("--seed", gf.seed, "seed for line 0; line i uses seed + i");
  generate->add_option("--depth", gf.depth, "maximum tree depth");
  generate->add_option("--count", gf.count, "number of expressions");
  generate->add_option("--min-gap", gf.min_gap,
                       "minimum degree gap at every sum node, e.g. 1/2");
  generate->callback([&] { rc = cmd_generate(gf); });

  CLI11_PARSE(app, argc, argv);
  return rc;
}
