#include "radicsum/calculus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "radicsum/closed_form.hpp"
#include "radicsum/errors.hpp"

namespace radicsum {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Stencil {
  std::span<const double> offsets;  // in units of h
  std::span<const double> weights;
  double denominator;               // derivative = sum(w f(x + o h)) / (denominator h)
  int error_exponent_step;          // 2 for central, 1 for one-sided
};

constexpr std::array<double, 2> kCentral2Offsets{-1.0, 1.0};
constexpr std::array<double, 2> kCentral2Weights{-1.0, 1.0};
constexpr std::array<double, 4> kCentral4Offsets{-2.0, -1.0, 1.0, 2.0};
constexpr std::array<double, 4> kCentral4Weights{1.0, -8.0, 8.0, -1.0};
constexpr std::array<double, 3> kForward2Offsets{0.0, 1.0, 2.0};
constexpr std::array<double, 3> kForward2Weights{-3.0, 4.0, -1.0};
constexpr std::array<double, 5> kForward4Offsets{0.0, 1.0, 2.0, 3.0, 4.0};
constexpr std::array<double, 5> kForward4Weights{-25.0, 48.0, -36.0, 16.0, -3.0};

Stencil central(int order) {
  if (order == 2) return {kCentral2Offsets, kCentral2Weights, 2.0, 2};
  return {kCentral4Offsets, kCentral4Weights, 12.0, 2};
}

Stencil forward(int order) {
  if (order == 2) return {kForward2Offsets, kForward2Weights, 2.0, 1};
  return {kForward4Offsets, kForward4Weights, 12.0, 1};
}

double phi_at(std::uint64_t n, double r, const OracleOptions& opts) {
  return phi(n, RootIndex(r), opts).phi;
}

// Richardson-extrapolated stencil derivative of phi_n at r.
double richardson_derivative(std::uint64_t n, double r, const Stencil& stencil, const DifferenceScheme& scheme,
                             const OracleOptions& opts) {
  const double h0 = scheme.step_at(r);
  const int levels = scheme.richardson_levels;
  const double finest = std::ldexp(h0, -levels);
  if (finest < 64.0 * kEps * r) {
    throw DomainError("finite-difference step " + std::to_string(finest) + " underflows at r = " +
                      std::to_string(r));
  }

  std::vector<double> table(static_cast<std::size_t>(levels) + 1);
  for (int k = 0; k <= levels; ++k) {
    const double h = std::ldexp(h0, -k);
    double acc = 0.0;
    for (std::size_t j = 0; j < stencil.offsets.size(); ++j) {
      acc += stencil.weights[j] * phi_at(n, r + stencil.offsets[j] * h, opts);
    }
    table[static_cast<std::size_t>(k)] = acc / (stencil.denominator * h);
  }
  // in-place Richardson: level j removes the h^(order + (j-1) * step) term
  for (int j = 1; j <= levels; ++j) {
    const int exponent = scheme.order + (j - 1) * stencil.error_exponent_step;
    const double factor = std::ldexp(1.0, exponent) - 1.0;
    for (int k = 0; k + j <= levels; ++k) {
      const auto i = static_cast<std::size_t>(k);
      table[i] = table[i + 1] + (table[i + 1] - table[i]) / factor;
    }
  }
  return table.front();
}

}  // namespace

double DifferenceScheme::step_at(double r) const {
  return base_step.value_or(std::max(1e-4, 1e-6 * r));
}

void DifferenceScheme::validate() const {
  if (order != 2 && order != 4) throw DomainError("difference order must be 2 or 4");
  if (base_step && !(*base_step > 0.0 && std::isfinite(*base_step))) {
    throw DomainError("difference base step must be positive and finite");
  }
  if (richardson_levels < 0 || richardson_levels > 8) {
    throw DomainError("Richardson levels must lie in [0, 8]");
  }
}

double dphi_dr(std::uint64_t n, RootIndex r, const DifferenceScheme& scheme, const OracleOptions& opts) {
  scheme.validate();
  validate_n(n, opts);
  const double rv = r.value();
  const double reach = 0.5 * scheme.order * scheme.step_at(rv);
  if (rv - reach < 1.0) {
    if (!scheme.one_sided_fallback) {
      throw DomainError("central stencil at r = " + std::to_string(rv) + " crosses the domain boundary r = 1");
    }
    return richardson_derivative(n, rv, forward(scheme.order), scheme, opts);
  }
  return richardson_derivative(n, rv, central(scheme.order), scheme, opts);
}

BoundaryDerivative dphi_dr_at_one(std::uint64_t n, const DifferenceScheme& scheme, const OracleOptions& opts) {
  scheme.validate();
  validate_n(n, opts);
  BoundaryDerivative out;
  out.derivative = richardson_derivative(n, 1.0, forward(scheme.order), scheme, opts);
  out.residual = hyperfactorial_residual(n, opts);
  out.gap = std::abs(out.derivative - out.residual);
  return out;
}

double IdentityResidual::relative() const {
  return std::abs(residual) / std::max(1.0, std::abs(lhs));
}

IdentityResidual derivative_identity_residual(std::uint64_t n, RootIndex r, const DifferenceScheme& scheme,
                                              const OracleOptions& opts) {
  const double derivative = dphi_dr(n, r, scheme, opts);
  const double rv = r.value();
  const double m = static_cast<double>(n) + 1.0;
  const double ln_m = std::log(m);
  const double root = std::pow(m, r.inverse());
  const double ratio = rv / (rv + 1.0);

  IdentityResidual out;
  out.lhs = exact_weighted_log_sum(n, r, opts);
  out.rhs = (ratio * m - 0.5) * root * ln_m - ratio * ratio * m * root + rv * rv * derivative;
  out.residual = out.lhs - out.rhs;
  return out;
}

double xi_via_identity(std::uint64_t n, const OracleOptions& opts) {
  return exact_log_factorial(n, opts) - factorial_log_main_term(n);
}

std::vector<double> neville_at_zero(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.empty()) throw DomainError("Neville extrapolation needs matching, non-empty nodes");
  std::vector<double> p(ys.begin(), ys.end());
  std::vector<double> diagonal{p.front()};
  // after pass m, p[i] holds the value at 0 of the interpolant through nodes i..i+m
  for (std::size_t m = 1; m < xs.size(); ++m) {
    for (std::size_t i = 0; i + m < xs.size(); ++i) {
      const double lo = xs[i];
      const double hi = xs[i + m];
      p[i] = (hi * p[i] - lo * p[i + 1]) / (hi - lo);
    }
    diagonal.push_back(p.front());
  }
  return diagonal;
}

XiEstimate xi_via_limit(std::uint64_t n, const LimitSettings& settings, const DifferenceScheme& scheme,
                        const OracleOptions& opts) {
  const auto& ladder = settings.ladder;
  if (ladder.size() < 2) throw DomainError("limit ladder needs at least two points");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (!(ladder[i] >= 2.0) || !std::isfinite(ladder[i])) throw DomainError("limit ladder values must be >= 2");
    if (i > 0 && !(ladder[i] > ladder[i - 1])) throw DomainError("limit ladder must be strictly ascending");
  }
  validate_n(n, opts);

  XiEstimate est;
  est.n = n;
  est.xi_identity = xi_via_identity(n, opts);
  est.limit_diagnostics.resize(ladder.size());

  // ladder points are independent; results land in ladder order
  std::vector<double> ts(ladder.size());
  std::vector<double> gs(ladder.size());
  OracleOptions inner = opts;
  if (opts.execution == Execution::parallel) inner.execution = Execution::serial;
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) if (opts.execution == Execution::parallel)
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    try {
      const double r = ladder[i];
      const double g = r * r * dphi_dr(n, RootIndex(r), scheme, inner);
      est.limit_diagnostics[i] = {r, g};
      ts[i] = 1.0 / r;
      gs[i] = g;
    } catch (...) {
#pragma omp critical(radicsum_limit_failure)
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  // highest r first: the extrapolant grows from the points nearest the limit
  std::reverse(ts.begin(), ts.end());
  std::reverse(gs.begin(), gs.end());
  const auto diagonal = neville_at_zero(ts, gs);
  est.xi_limit = diagonal.back();
  est.last_update = std::abs(diagonal.back() - diagonal[diagonal.size() - 2]);
  est.discrepancy = std::abs(est.xi_identity - est.xi_limit);
  if (!(est.last_update <= settings.tolerance)) {
    throw ConvergenceError("r -> inf extrapolation of r^2 dphi/dr did not settle for n = " + std::to_string(n) +
                           ": last update " + std::to_string(est.last_update) + " exceeds tolerance " +
                           std::to_string(settings.tolerance));
  }
  return est;
}

}  // namespace radicsum
