#include "cdeig/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "cdeig/parser.hpp"
#include "cdeig/search.hpp"
#include "cdeig/serialize.hpp"
#include "cdeig/verify.hpp"

namespace cdeig::cli {

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Options {
  int level = -1;
  uint64_t seed = 0;
  int trials = 100;
  double tol = kClusterTol;
  bool json = false;
  bool bases = false;
  int max_level = 8;

  std::string expr;       // primary element expression
  std::string expr2;      // second element where a command takes two
  std::vector<std::string> generators;
  std::string suite = "all";
  std::string question;
  int samples = 1000;
  bool dump_operator = false;
};

int require_level(const Options& opt, std::ostream& err) {
  if (opt.level < 0) {
    err << "error: this command needs -n/--level\n";
    return kExitUsage;
  }
  if (opt.level > opt.max_level) {
    err << "error: level " << opt.level << " exceeds the configured maximum " << opt.max_level
        << " (raise with --max-level; expect 4^n growth in cost)\n";
    return kExitUsage;
  }
  if (opt.level > 8)
    err << "warning: level " << opt.level << " uses " << dim_of_level(opt.level)
        << "-dimensional dense operators; expect slow eigensolves\n";
  return kExitOk;
}

CDElement parse_or_throw(const std::string& expr, int level) { return parse_element(expr, level); }

int cmd_spectrum(const Options& opt, std::ostream& out, std::ostream& err) {
  if (int rc = require_level(opt, err); rc != kExitOk) return rc;
  const CDElement a = parse_or_throw(opt.expr, opt.level);
  if (opt.dump_operator) {
    out << matrix_json(m_operator(a)).dump() << '\n';
    return kExitOk;
  }
  out << spectrum_json(spectrum(a, opt.tol), opt.bases).dump() << '\n';
  return kExitOk;
}

int cmd_decompose(const Options& opt, std::ostream& out, std::ostream& err) {
  if (int rc = require_level(opt, err); rc != kExitOk) return rc;
  const CDElement a = parse_or_throw(opt.expr, opt.level);
  const CDElement x = parse_or_throw(opt.expr2, opt.level);
  json components = json::array();
  for (const EigenComponent& c : eigendecompose(x, spectrum(a, opt.tol)))
    components.push_back(json{{"value", c.value}, {"coeffs", c.component.coeffs}});
  out << json{{"level", opt.level}, {"components", std::move(components)}}.dump() << '\n';
  return kExitOk;
}

int cmd_solve(const Options& opt, std::ostream& out, std::ostream& err) {
  if (int rc = require_level(opt, err); rc != kExitOk) return rc;
  const CDElement a = parse_or_throw(opt.expr, opt.level);
  const CDElement b = parse_or_throw(opt.expr2, opt.level);
  const CDElement x = cancel_solve(a, b);
  out << json{{"level", opt.level},
              {"coeffs", x.coeffs},
              {"residual", norm(multiply(a, x) - b)}}
             .dump()
      << '\n';
  return kExitOk;
}

int cmd_subalgebra(const Options& opt, std::ostream& out, std::ostream& err) {
  if (int rc = require_level(opt, err); rc != kExitOk) return rc;
  std::vector<CDElement> gens;
  for (const std::string& g : opt.generators) gens.push_back(parse_or_throw(g, opt.level));
  out << subalgebra_json(generated_subalgebra(gens)).dump() << '\n';
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const VerificationReport report = run_suite(opt.suite, opt.seed, opt.trials);
  if (opt.json) {
    json checks = json::array();
    for (const CheckResult& c : report.checks)
      checks.push_back(json{{"id", c.id},
                            {"instances", c.instances},
                            {"max_residual", c.max_residual},
                            {"tolerance", c.tolerance},
                            {"pass", c.pass}});
    out << json{{"suite", report.suite},
                {"seed", report.seed},
                {"trials", report.trials},
                {"pass", report.pass()},
                {"checks", std::move(checks)}}
               .dump()
        << '\n';
  } else {
    out << "suite " << report.suite << " seed " << report.seed << " trials " << report.trials
        << '\n';
    for (const CheckResult& c : report.checks)
      out << (c.pass ? "PASS " : "FAIL ") << c.id << " instances=" << c.instances
          << " max_residual=" << fmt12(c.max_residual) << " tol=" << fmt12(c.tolerance) << '\n';
    out << "RESULT " << (report.pass() ? "PASS" : "FAIL") << " (" << report.checks.size()
        << " checks)\n";
  }
  err << "wall time " << fmt12(report.wall_seconds) << " s\n";
  return report.pass() ? kExitOk : kExitVerifyFailed;
}

int cmd_search(const Options& opt, std::ostream& out, std::ostream& err) {
  if (int rc = require_level(opt, err); rc != kExitOk) return rc;
  out << run_search(opt.question, opt.level, opt.samples, opt.seed, opt.tol);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Cayley-Dickson algebra engine: spectra, zero-divisors, and theorem checks"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("-n,--level", opt.level, "algebra level n (dimension 2^n)");
  app.add_option("--seed", opt.seed, "random seed for reproducible runs");
  app.add_option("--trials", opt.trials, "instances per verification check");
  app.add_option("--tol", opt.tol, "eigenvalue clustering tolerance");
  app.add_flag("--json", opt.json, "emit JSON instead of text (verify)");
  app.add_flag("--bases", opt.bases, "include eigenspace bases in spectrum output");
  app.add_option("--max-level", opt.max_level, "largest level accepted without reconfiguring");

  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "eigenvalue clusters of an element of A_n");
  spectrum_cmd->add_option("expr", opt.expr, "element expression")->required();
  spectrum_cmd->add_flag("--dump-operator", opt.dump_operator,
                         "debug: dump the operator matrix instead of its spectrum");

  auto* decompose_cmd =
      app.add_subcommand("decompose", "eigendecomposition of x with respect to a");
  decompose_cmd->add_option("a", opt.expr, "reference element a")->required();
  decompose_cmd->add_option("x", opt.expr2, "element to decompose")->required();

  auto* solve_cmd = app.add_subcommand("solve", "solve ax = b for x");
  solve_cmd->add_option("a", opt.expr, "left factor a")->required();
  solve_cmd->add_option("b", opt.expr2, "right-hand side b")->required();

  auto* subalgebra_cmd =
      app.add_subcommand("subalgebra", "closure of the subalgebra generated by elements");
  subalgebra_cmd->add_option("generators", opt.generators, "generator expressions")
      ->required()
      ->expected(-1);

  auto* verify_cmd = app.add_subcommand("verify", "run a randomized theorem-verification suite");
  verify_cmd->add_option("suite", opt.suite, "core-identities | eigentheory | pair-predictions | a4 | spec-top | all");

  auto* search_cmd = app.add_subcommand("search", "sample data for the open questions (CSV)");
  search_cmd->add_option("question", opt.question, "eig1-dims | zd-spectra")->required();
  search_cmd->add_option("--samples", opt.samples, "number of sampled elements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (spectrum_cmd->parsed()) return cmd_spectrum(opt, out, err);
    if (decompose_cmd->parsed()) return cmd_decompose(opt, out, err);
    if (solve_cmd->parsed()) return cmd_solve(opt, out, err);
    if (subalgebra_cmd->parsed()) return cmd_subalgebra(opt, out, err);
    if (verify_cmd->parsed()) return cmd_verify(opt, out, err);
    if (search_cmd->parsed()) return cmd_search(opt, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NoSolutionError& e) {
    err << "error: " << e.what() << " (residual " << fmt12(e.residual) << ")\n";
    return kExitNoSolution;
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    if (what.find("zero element") != std::string::npos) {
      err << "error: " << what << '\n';
      return kExitZeroElement;
    }
    err << "error: " << what << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cdeig::cli
