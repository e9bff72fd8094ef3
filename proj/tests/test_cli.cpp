#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#ifndef SEREX_CLI_PATH
#error "SEREX_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string base = "/tmp/serex_cli_" + std::to_string(::getpid()) + "_" +
                     std::to_string(counter++);
  std::string out_path = base + ".out", err_path = base + ".err";
  std::string cmd = std::string(SEREX_CLI_PATH) + " " + args + " >" + out_path +
                    " 2>" + err_path;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_CASE("analyze reports the mixed-radical quotient") {
  RunResult r = run_cli("analyze '(sqrt(n+1)*root(3,n-7)+2)/(n^(2/5)-17)'");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("member") != std::string::npos);
  CHECK(r.out.find("13/30") != std::string::npos);
  CHECK(r.out.find("divergent") != std::string::npos);
  CHECK(r.out.find("1192") != std::string::npos);
}

TEST_CASE("analyze exit codes follow membership") {
  CHECK(run_cli("analyze '1/n^2'").exit_code == 0);
  CHECK(run_cli("analyze '0'").exit_code == 0);

  RunResult outside = run_cli("analyze 'n - n'");
  CHECK(outside.exit_code == 2);
  CHECK(outside.out.find("outside: subtractive-cancellation") != std::string::npos);

  RunResult indet = run_cli("analyze '(1 + n^(1/2))^(1/2)'");
  CHECK(indet.exit_code == 3);
  CHECK(indet.out.find("indeterminate") != std::string::npos);

  RunResult bad = run_cli("analyze 'n^(1/0)'");
  CHECK(bad.exit_code == 1);
  CHECK(bad.err.find("offset 5") != std::string::npos);
  CHECK(bad.err.find("^") != std::string::npos);
}

TEST_CASE("analyze --json emits the documented schema") {
  RunResult r = run_cli("analyze '1/n^2' --json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["expr_text"] == "1/n^2");
  CHECK(doc["degree"]["num"] == -2);
  CHECK(doc["degree"]["den"] == 1);
  CHECK(doc["leading_coefficient"]["decimal"] == 1.0);
  CHECK(doc["leading_coefficient"]["exact"] == "1");
  CHECK(doc["membership"] == "member");
  CHECK(doc["classification"] == "absolutely-convergent");
  CHECK(doc["n_defined"] == 1);
  CHECK(doc["n_sign_stable"] == 1);
  CHECK(doc["coeff_sign"] == 1);
  CHECK(doc.contains("tool_version"));

  // Non-members omit the numeric fields entirely.
  RunResult outside = run_cli("analyze 'n - n' --json");
  CHECK(outside.exit_code == 2);
  nlohmann::json odoc = nlohmann::json::parse(outside.out);
  CHECK_FALSE(odoc.contains("degree"));
  CHECK_FALSE(odoc.contains("coeff_sign"));
  CHECK(odoc["membership"] == "outside: subtractive-cancellation");
  CHECK(odoc["classification"] == "not-applicable");
}

TEST_CASE("identical invocations give byte-identical JSON") {
  RunResult a = run_cli("analyze '(sqrt(n+1)*root(3,n-7)+2)/(n^(2/5)-17)' --json");
  RunResult b = run_cli("analyze '(sqrt(n+1)*root(3,n-7)+2)/(n^(2/5)-17)' --json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("analyze respects the domain-scan flags") {
  RunResult r = run_cli("analyze '1/(n-10)' --n0 11");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n_defined:      11") != std::string::npos);
}

TEST_CASE("verify agrees with itself on easy series") {
  RunResult conv = run_cli("verify '1/n^2'");
  CHECK(conv.exit_code == 0);
  CHECK(conv.out.find("consistent") != std::string::npos);
  CHECK(conv.out.find("MISMATCH") == std::string::npos);

  RunResult outside = run_cli("verify 'n - n'");
  CHECK(outside.exit_code == 2);  // refused before any numerics
  CHECK(outside.out.empty());

  RunResult mixed = run_cli("verify '(sqrt(n+1)*root(3,n-7)+2)/(n^(2/5)-17)'");
  CHECK(mixed.exit_code == 0);
  CHECK(mixed.out.find("consistent-divergent") != std::string::npos);
}

TEST_CASE("verify honors custom grids and cutoffs") {
  RunResult r = run_cli(
      "verify '1/n' --grid-lo 1000 --grid-hi 1000000 --points 8 "
      "--cutoffs 1000 10000 100000");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("sum to 1000") != std::string::npos);
  CHECK(r.out.find("consistent-divergent") != std::string::npos);
}

TEST_CASE("sum prints partial sums and reports domain errors") {
  RunResult r = run_cli("sum '1/n^2' --from 1 --to 10");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1.5497677") != std::string::npos);

  RunResult one = run_cli("sum 'n' --from 1 --to 1");
  CHECK(one.exit_code == 0);
  CHECK(lines_of(one.out)[0] == "1");

  RunResult bad = run_cli("sum '1/(n-10)' --from 1 --to 20");
  CHECK(bad.exit_code == 4);
  CHECK(bad.err.find("n = 10") != std::string::npos);
}

TEST_CASE("generate is deterministic and feeds back into analyze") {
  RunResult a = run_cli("generate --seed 42 --count 3");
  RunResult b = run_cli("generate --seed 42 --count 3");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  std::vector<std::string> exprs = lines_of(a.out);
  REQUIRE(exprs.size() == 3);
  for (const std::string& text : exprs) {
    RunResult back = run_cli("analyze '" + text + "'");
    CHECK(back.exit_code == 0);
  }

  RunResult leaf = run_cli("generate --depth 0 --count 1 --seed 5");
  CHECK(leaf.exit_code == 0);
}

TEST_CASE("generate honors the min-gap flag") {
  RunResult r = run_cli("generate --seed 3 --count 5 --min-gap 1/2");
  CHECK(r.exit_code == 0);
  CHECK(lines_of(r.out).size() == 5);
}

TEST_CASE("usage errors do not collide with the semantic exit codes") {
  CHECK(run_cli("analyze").exit_code > 5);     // missing required argument
  CHECK(run_cli("frobnicate 'n'").exit_code > 5);
  CHECK(run_cli("").exit_code > 5);            // subcommand required
}
