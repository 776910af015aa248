#pragma once

// Grid scans, convergence studies and the speed/accuracy benchmark. Each
// returns a ClaimReport whose records are in grid order, so reports are
// deterministic apart from timing fields.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "radicsum/calculus.hpp"
#include "radicsum/oracle.hpp"
#include "radicsum/root_index.hpp"

namespace radicsum {

struct GridSpec {
  std::vector<std::uint64_t> n_values;
  std::vector<double> r_values;

  /// n in {1,2,3,5,10,25,100,10^3,10^4}, r in {1,1.1,1.5,2,e,3,5,10,32,64}.
  static GridSpec default_grid();

  /// Parses "n=1,2,10;r=1,2.5". Either axis may be omitted and is then
  /// left empty. Newlines act like ';' and '#' starts a comment, so the
  /// same syntax serves grid config files.
  static GridSpec parse(std::string_view text);

  /// Throws DomainError unless both axes are non-empty, strictly ascending,
  /// n >= 1 within the cap and r >= 1.
  void validate(const OracleOptions& opts) const;
};

/// Name of the environment variable pointing at a grid config file.
inline constexpr const char* kGridEnvVar = "RADICSUM_GRID";

/// Grid from the file named by RADICSUM_GRID, if set.
std::optional<GridSpec> grid_from_environment();

enum class ClaimId {
  phi_bounds,
  phi_monotone,
  phi_limit_half,
  derivative_identity,
  xi_sqrt_2pi,
  xi_two_routes,
  hyperfactorial_residual,
  speedup,
};

inline constexpr ClaimId kAllClaims[] = {
    ClaimId::phi_bounds,    ClaimId::phi_monotone,  ClaimId::phi_limit_half,          ClaimId::derivative_identity,
    ClaimId::xi_sqrt_2pi,   ClaimId::xi_two_routes, ClaimId::hyperfactorial_residual, ClaimId::speedup,
};

/// Wire name, e.g. "PHI_BOUNDS".
std::string_view claim_name(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view name);

enum class ClaimStatus { pass, fail, measured };

std::string_view status_name(ClaimStatus s);

/// One row of a report. `r` is empty where the claim has no r axis.
struct ClaimRecord {
  std::uint64_t n = 1;
  std::optional<double> r;
  double value = 0.0;
  double target = 0.0;
  double abs_error = 0.0;
  ClaimStatus status = ClaimStatus::pass;
};

struct WorstCase {
  std::uint64_t n = 1;
  std::optional<double> r;
  double value = 0.0;
};

struct ClaimReport {
  ClaimId claim = ClaimId::phi_bounds;
  GridSpec grid;
  ClaimStatus status = ClaimStatus::pass;
  WorstCase worst_case;
  std::vector<ClaimRecord> details;
  std::vector<std::string> notes;
};

/// True unless the report failed; measured reports count as complete.
bool succeeded(const ClaimReport& report);

/// Every phi_n(r) on the grid lies in [-tol, 1/2 + tol], tol = 1e-9 approx.
/// worst_case is the sample with the smallest margin to either bound.
ClaimReport phi_bounds_scan(const GridSpec& grid, const OracleOptions& opts = {});

/// For each n, phi is nondecreasing along the r axis (within 1e-9 approx).
ClaimReport phi_monotone_scan(const GridSpec& grid, const OracleOptions& opts = {});

/// 1/2 - phi_n(r) is positive and strictly decreasing along the ladder and at
/// most 2 (n+1) / r_max at its top. Ladder values must lie in [1, 10^6].
ClaimReport phi_limit_study(std::uint64_t n, std::span<const double> r_ladder, const OracleOptions& opts = {});

/// Relative residual of the differentiated identity at most 1e-6 on the grid.
ClaimReport derivative_identity_scan(const GridSpec& grid, const DifferenceScheme& scheme = {},
                                     const OracleOptions& opts = {});

struct ConvergenceRecord {
  std::uint64_t n = 1;
  double statistic = 0.0;  ///< e^(xi_n)
  double target = 0.0;     ///< sqrt(2 pi)
  double abs_error = 0.0;
};

std::vector<ConvergenceRecord> xi_convergence_study(std::span<const std::uint64_t> n_values,
                                                    const OracleOptions& opts = {});

/// |e^(xi_n) - sqrt(2 pi)| strictly decreasing along n and at most
/// kXiErrorScale / n (the leading error is sqrt(2 pi) / (12 n) ~ 0.209 / n).
ClaimReport xi_sqrt_2pi_claim(std::span<const std::uint64_t> n_values, const OracleOptions& opts = {});
inline constexpr double kXiErrorScale = 0.22;

/// xi from the exact log factorial and from the r -> inf limit agree to
/// within `max_discrepancy`; non-convergence of the limit fails the row.
ClaimReport xi_two_routes_scan(std::span<const std::uint64_t> n_values, const LimitSettings& settings = {},
                               double max_discrepancy = 1e-3, const DifferenceScheme& scheme = {},
                               const OracleOptions& opts = {});

/// Step used for the r = 1 cross-check in the hyperfactorial study. The
/// default 1e-4 step drowns in summation noise once n reaches 10^4.
inline constexpr double kBoundaryStudyStep = 1e-2;

/// Measures exact ln H(n) minus its closed-form main term, next to the
/// forward-difference dphi/dr at r = 1. Status is always `measured`; the
/// notes say whether the residual grows across the scan.
ClaimReport hyperfactorial_residual_study(std::span<const std::uint64_t> n_values, const OracleOptions& opts = {});

struct BenchRow {
  std::uint64_t n = 1;
  double r = 1.0;
  double exact = 0.0;
  double approx = 0.0;
  double phi = 0.0;
  double exact_ns = 0.0;   ///< median per-call wall time of the oracle
  double approx_ns = 0.0;  ///< median per-call wall time of the closed form
};

struct BenchReport {
  ClaimReport claim;
  std::vector<BenchRow> rows;
  bool timing_available = true;
};

/// Median-of-`repetitions` timing of exact_root_sum against approx_root_sum.
/// Passes if every |approx - exact| <= 1/2 + tol and the largest closed-form
/// median is within 10x of the smallest. Throws DomainError if
/// repetitions < 3.
BenchReport benchmark_speed_accuracy(std::span<const std::uint64_t> n_values, RootIndex r, int repetitions,
                                     const OracleOptions& opts = {});

/// Runs `id` with its default parameters, overriding axes present in `grid`.
/// For PHI_LIMIT_HALF and XI_TWO_ROUTES the r axis is the limit ladder; for
/// SPEEDUP only its first value is used.
ClaimReport run_claim(ClaimId id, const std::optional<GridSpec>& grid, const OracleOptions& opts = {});

}  // namespace radicsum
