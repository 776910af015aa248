#include "radicsum/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "radicsum/calculus.hpp"
#include "radicsum/closed_form.hpp"
#include "radicsum/errors.hpp"
#include "radicsum/experiments.hpp"
#include "radicsum/report.hpp"

namespace radicsum::cli {

namespace {

using report::Cell;
using report::OutputFormat;

struct Common {
  std::string format = "table";
  bool parallel = false;

  [[nodiscard]] OutputFormat output() const { return *report::parse_format(format); }

  [[nodiscard]] OracleOptions oracle() const {
    auto opts = OracleOptions::from_environment();
    if (parallel) opts.execution = Execution::parallel;
    return opts;
  }
};

void add_format(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
}

struct SumArgs {
  std::uint64_t n = 0;
  double r = 1.0;
  bool exact = false;
  bool approx = false;
  bool both = false;
};

int cmd_sum(const SumArgs& a, const Common& common, std::ostream& out) {
  const auto opts = common.oracle();
  const RootIndex r(a.r);
  validate_n(a.n, opts);
  const bool want_exact = a.exact || a.both || !a.approx;
  const bool want_approx = a.approx || a.both || !a.exact;

  std::optional<double> exact;
  std::optional<double> approx;
  if (want_exact) exact = exact_root_sum(a.n, r, opts);
  if (want_approx) approx = approx_root_sum(a.n, r).approx;
  auto cell = [](const std::optional<double>& x) { return x ? Cell{*x} : Cell{}; };
  const std::optional<double> phi_value = exact && approx ? std::optional<double>(*approx - *exact) : std::nullopt;

  report::Table table{"sum", {"n", "r", "exact", "approx", "phi"}, {}};
  table.rows.push_back({a.n, a.r, cell(exact), cell(approx), cell(phi_value)});
  report::write_table(out, table, common.output());
  return kSuccess;
}

struct FactorialArgs {
  std::uint64_t n = 0;
  std::string xi_source = "sqrt2pi";
};

int cmd_factorial(const FactorialArgs& a, const Common& common, std::ostream& out) {
  const auto opts = common.oracle();
  validate_n(a.n, opts);
  double xi = kLogSqrtTwoPi;
  if (a.xi_source == "identity") {
    xi = xi_via_identity(a.n, opts);
  } else if (a.xi_source == "limit") {
    xi = xi_via_limit(a.n, {}, {}, opts).xi_limit;
  }
  const auto est = factorial_log_estimate(a.n, xi, opts);

  report::Table table{"factorial",
                      {"n", "xi_source", "xi", "exact_log", "estimate_log", "stirling_log", "estimate_ratio",
                       "stirling_ratio"},
                      {}};
  table.rows.push_back({a.n, a.xi_source, est.xi_used, est.exact_log, est.log_estimate, est.stirling_log,
                        std::exp(est.log_estimate - est.exact_log), std::exp(est.stirling_log - est.exact_log)});
  report::write_table(out, table, common.output());
  return kSuccess;
}

struct VerifyArgs {
  std::string claim = "all";
  std::string grid;
  std::string out_path;
};

int cmd_verify(const VerifyArgs& a, const Common& common, std::ostream& out) {
  const auto opts = common.oracle();
  std::vector<ClaimId> claims;
  if (a.claim == "all") {
    claims.assign(std::begin(kAllClaims), std::end(kAllClaims));
  } else if (auto id = parse_claim(a.claim)) {
    claims.push_back(*id);
  } else {
    throw DomainError("unknown claim '" + a.claim + "'");
  }
  std::optional<GridSpec> grid = a.grid.empty() ? grid_from_environment() : std::optional(GridSpec::parse(a.grid));

  std::vector<ClaimReport> reports;
  for (auto id : claims) reports.push_back(run_claim(id, grid, opts));

  std::ostringstream text;
  report::write_claims(text, reports, common.output());
  out << text.str();
  if (!a.out_path.empty()) {
    std::ofstream file(a.out_path);
    if (!file) throw DomainError("cannot open output file '" + a.out_path + "'");
    file << text.str();
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return succeeded(r); });
  return ok ? kSuccess : kClaimFailure;
}

struct BenchArgs {
  std::uint64_t n_max = 1'000'000;
  double r = 2.0;
  int reps = 5;
};

std::vector<std::uint64_t> decade_scan(std::uint64_t n_max) {
  std::vector<std::uint64_t> ns;
  for (std::uint64_t n = 10; n <= n_max; n *= 10) {
    ns.push_back(n);
    if (n > n_max / 10) break;
  }
  if (ns.empty() || ns.back() != n_max) ns.push_back(n_max);
  return ns;
}

int cmd_bench(const BenchArgs& a, const Common& common, std::ostream& out) {
  if (a.reps < 3) throw DomainError("--reps must be at least 3");
  const auto opts = common.oracle();
  validate_n(a.n_max, opts);
  const auto bench = benchmark_speed_accuracy(decade_scan(a.n_max), RootIndex(a.r), a.reps, opts);
  report::write_bench(out, bench, common.output());
  return succeeded(bench.claim) ? kSuccess : kClaimFailure;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form sums of r'th roots, factorial and hyperfactorial estimates, and their numerical checks",
               "radicsum"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--parallel", common.parallel, "Use the OpenMP oracle kernel and evaluate grid points concurrently");

  SumArgs sum_args;
  auto* sum = app.add_subcommand("sum", "Exact and closed-form sum of i^(1/r) for i = 1..n");
  sum->add_option("n", sum_args.n, "Number of terms (n >= 1)")->required();
  sum->add_option("r", sum_args.r, "Root index (r >= 1)")->required();
  auto* f_exact = sum->add_flag("--exact", sum_args.exact, "Exact sum only");
  auto* f_approx = sum->add_flag("--approx", sum_args.approx, "Closed form only");
  auto* f_both = sum->add_flag("--both", sum_args.both, "Both, plus the correction term phi (default)");
  f_exact->excludes(f_approx)->excludes(f_both);
  f_approx->excludes(f_both);
  add_format(sum, common);

  FactorialArgs fact_args;
  auto* fact = app.add_subcommand("factorial", "ln n! from the (n+1)-based formula against the exact value and Stirling");
  fact->add_option("n", fact_args.n, "n >= 1")->required();
  fact->add_option("--xi", fact_args.xi_source, "Source of xi")
      ->check(CLI::IsMember({"sqrt2pi", "identity", "limit"}))
      ->capture_default_str();
  add_format(fact, common);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check the numerical claims and print a report");
  verify->add_option("--claim", verify_args.claim, "Claim id or 'all'")->capture_default_str();
  verify->add_option("--grid", verify_args.grid, "Grid override, e.g. \"n=1,10;r=1,2\"");
  verify->add_option("--out", verify_args.out_path, "Also write the report to this file");
  add_format(verify, common);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Oracle vs closed-form speed and accuracy over decades of n");
  bench->add_option("--n-max", bench_args.n_max, "Largest n (decades 10, 100, ... up to it)")->capture_default_str();
  bench->add_option("--r", bench_args.r, "Root index")->capture_default_str();
  bench->add_option("--reps", bench_args.reps, "Timing repetitions (>= 3)")->capture_default_str();
  add_format(bench, common);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (sum->parsed()) return cmd_sum(sum_args, common, out);
    if (fact->parsed()) return cmd_factorial(fact_args, common, out);
    if (verify->parsed()) return cmd_verify(verify_args, common, out);
    if (bench->parsed()) return cmd_bench(bench_args, common, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kOverflow;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  }
  return kUsage;
}

}  // namespace radicsum::cli
