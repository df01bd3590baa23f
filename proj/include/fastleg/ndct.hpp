#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fastleg/quadrature.hpp"
#include "fastleg/trig.hpp"
#include "fastleg/types.hpp"

// Non-uniform discrete cosine transform: evaluation of sum_n c_n cos(n theta_k)
// at the Legendre angles theta_k. Each cos(n theta_k) is expanded in a Taylor
// series about the nearest equally-spaced reference angle, which turns the
// transform into a short sum of uniform DCTs and DSTs:
//
//   f_k = sum_{l<L} (-1)^{floor((l+1)/2)} (dtheta_k^l / l!) [T_l(c^(l))]_k,
//
// with c^(l)_n = n^l c_n and T_l a dct_iii (l even) or dst_iii (l odd).
// The truncation length L depends only on the grid kind and the tolerance,
// never on N.

namespace fastleg {

/// Precomputed parameters for one transform size: grid kind, truncation
/// length, and the reference grid with its perturbations.
struct TaylorPlan {
  std::size_t size = 0;
  GridKind kind = GridKind::chebstar;
  double tolerance = 0.0;
  int num_terms = 0;  // L
  ReferenceGrid reference;
};

/// The grid-specific constant C(L) bounding the truncation error of an
/// L-term plan per unit of ||c||_1: 0.83845^L / L! for cheb1 and
/// ((6 pi)^L L!)^{-1} for chebstar.
inline double taylor_term_bound(GridKind kind, int num_terms) {
  if (num_terms < 0) throw std::invalid_argument("taylor_term_bound: negative term count");
  const double q = kind == GridKind::cheb1 ? 0.83845 : 1.0 / (6.0 * detail::pi);
  double bound = 1.0;
  for (int l = 1; l <= num_terms; ++l) bound *= q / static_cast<double>(l);
  return bound;
}

inline constexpr int max_taylor_terms = 30;

/// Smallest L with C(L) <= tolerance.
inline int min_taylor_terms(GridKind kind, double tolerance) {
  if (!(tolerance > 0.0 && tolerance < 1.0))
    throw std::invalid_argument("min_taylor_terms: tolerance must lie in (0, 1)");
  const double q = kind == GridKind::cheb1 ? 0.83845 : 1.0 / (6.0 * detail::pi);
  double bound = 1.0;
  for (int l = 1; l <= max_taylor_terms; ++l) {
    bound *= q / static_cast<double>(l);
    if (bound <= tolerance) return l;
  }
  throw std::domain_error("min_taylor_terms: tolerance unattainable with <= 30 terms");
}

inline TaylorPlan plan_ndct(const LegendreGrid& grid, GridKind kind, double tolerance) {
  TaylorPlan plan;
  plan.size = grid.size;
  plan.kind = kind;
  plan.tolerance = tolerance;
  plan.num_terms = min_taylor_terms(kind, tolerance);
  plan.reference = reference_grid(grid, kind);
  return plan;
}

inline TaylorPlan plan_ndct(std::size_t n, GridKind kind, double tolerance) {
  return plan_ndct(legendre_nodes_weights(n), kind, tolerance);
}

namespace detail {

inline int taylor_sign(int l) { return ((l + 1) / 2) % 2 == 0 ? 1 : -1; }

inline void check_ndct_input(const TaylorPlan& plan, const std::vector<double>& v,
                             const char* where) {
  if (v.size() != plan.size)
    throw std::invalid_argument(std::string(where) + ": input size does not match plan");
  for (double x : v)
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(where) + ": non-finite input");
  // The stage vectors scale entries by n^l; guard the (far-off) regime where
  // that overflows a double.
  if (plan.size > 1 &&
      static_cast<double>(plan.num_terms - 1) * std::log10(static_cast<double>(plan.size - 1)) >
          300.0)
    throw std::overflow_error(std::string(where) + ": n^l exceeds double range");
}

}  // namespace detail

/// Applies the plan to Chebyshev coefficients: returns f with
/// f_k ~= sum_n c_n cos(n theta_leg_k), within taylor_term_bound * ||c||_1
/// plus rounding.
inline std::vector<double> ndct_apply(const TaylorPlan& plan, const std::vector<double>& coeffs) {
  detail::check_ndct_input(plan, coeffs, "ndct_apply");
  const std::size_t n = plan.size;
  std::vector<double> f(n, 0.0);
  std::vector<double> stage = coeffs;       // c^(l), scaled by n each stage
  std::vector<double> perturb_pow(n, 1.0);  // dtheta^l / l!
  for (int l = 0; l < plan.num_terms; ++l) {
    if (l > 0) {
      for (std::size_t j = 0; j < n; ++j) {
        stage[j] *= static_cast<double>(j);
        perturb_pow[j] *= plan.reference.delta_theta[j] / static_cast<double>(l);
      }
    }
    const std::vector<double> t =
        l % 2 == 0 ? dct_iii(stage, plan.kind) : dst_iii(stage, plan.kind);
    const double sign = detail::taylor_sign(l);
    for (std::size_t k = 0; k < n; ++k) f[k] += sign * perturb_pow[k] * t[k];
  }
  return f;
}

/// Exact matrix transpose of ndct_apply as a linear map:
/// out_n = sum_l sign_l / l! * n^l * [T_l^T(dtheta^l .* g)]_n.
inline std::vector<double> ndct_apply_transpose(const TaylorPlan& plan,
                                                const std::vector<double>& values) {
  detail::check_ndct_input(plan, values, "ndct_apply_transpose");
  const std::size_t n = plan.size;
  std::vector<double> out(n, 0.0);
  std::vector<double> degree_pow(n, 1.0);   // n^l
  std::vector<double> perturb_pow(n, 1.0);  // dtheta^l / l!
  std::vector<double> h(n);
  for (int l = 0; l < plan.num_terms; ++l) {
    if (l > 0) {
      for (std::size_t j = 0; j < n; ++j) {
        degree_pow[j] *= static_cast<double>(j);
        perturb_pow[j] *= plan.reference.delta_theta[j] / static_cast<double>(l);
      }
    }
    for (std::size_t k = 0; k < n; ++k) h[k] = perturb_pow[k] * values[k];
    const std::vector<double> t =
        l % 2 == 0 ? dct_iii_transpose(h, plan.kind) : dst_iii_transpose(h, plan.kind);
    const double sign = detail::taylor_sign(l);
    for (std::size_t j = 0; j < n; ++j) out[j] += sign * degree_pow[j] * t[j];
  }
  return out;
}

/// Certified truncation bound on max_k |f_k - ndct_apply(plan, c)_k|: the
/// smaller of (N max|dtheta|)^L / L! and the grid constant C(L), times ||c||_1.
inline double ndct_error_bound(const TaylorPlan& plan, const std::vector<double>& coeffs) {
  double max_perturb = 0.0;
  for (double d : plan.reference.delta_theta) max_perturb = std::max(max_perturb, std::fabs(d));
  const double q = static_cast<double>(plan.size) * max_perturb;
  double node_bound = 1.0;
  for (int l = 1; l <= plan.num_terms; ++l) node_bound *= q / static_cast<double>(l);
  const double grid_bound = taylor_term_bound(plan.kind, plan.num_terms);
  return std::min(node_bound, grid_bound) * detail::norm_l1(coeffs);
}

}  // namespace fastleg
