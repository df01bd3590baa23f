#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fastleg/types.hpp"

namespace fastleg {

/// Gauss-Legendre grid: the N roots of P_N, stored both as angles
/// theta (strictly increasing in (0,pi)) and abscissas x = cos(theta)
/// (strictly decreasing in (-1,1)), together with the quadrature weights.
struct LegendreGrid {
  std::size_t size = 0;
  std::vector<double> theta;
  std::vector<double> x;
  std::vector<double> weights;
};

/// An equally-spaced reference grid together with the node perturbations
/// delta_theta[k] = theta_leg[k] - theta_star[k].
struct ReferenceGrid {
  std::size_t size = 0;
  GridKind kind = GridKind::chebstar;
  std::vector<double> theta_star;
  std::vector<double> delta_theta;
};

inline double reference_angle(std::size_t n, GridKind kind, std::size_t k) {
  if (kind == GridKind::cheb1)
    return (static_cast<double>(k) + 0.5) * detail::pi / static_cast<double>(n);
  return (static_cast<double>(k) + 0.75) * detail::pi / (static_cast<double>(n) + 0.5);
}

namespace detail {

// One sweep of the P_N / P_{N-1} recurrence for a batch of abscissas.
// The batch layout keeps the three-term recurrence free of loop-carried
// dependencies across nodes, so the inner loop vectorizes.
inline void legendre_pair_batch(std::size_t n, const std::vector<double>& x,
                                std::vector<double>& p_n, std::vector<double>& p_nm1) {
  const std::size_t m = x.size();
  p_nm1.assign(m, 1.0);
  p_n = x;
  for (std::size_t j = 1; j < n; ++j) {
    const double a = (2.0 * static_cast<double>(j) + 1.0) / (static_cast<double>(j) + 1.0);
    const double b = static_cast<double>(j) / (static_cast<double>(j) + 1.0);
    for (std::size_t k = 0; k < m; ++k) {
      const double next = a * x[k] * p_n[k] - b * p_nm1[k];
      p_nm1[k] = p_n[k];
      p_n[k] = next;
    }
  }
}

// P_{N-1}(0), needed for the weight of the middle node when N is odd.
inline double legendre_prev_at_zero(std::size_t n) {
  double p_prev = 1.0, p = 0.0;  // P_0(0), P_1(0)
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const double next = -static_cast<double>(j) * p_prev / (static_cast<double>(j) + 1.0);
    p_prev = p;
    p = next;
  }
  return n >= 2 ? p : p_prev;
}

}  // namespace detail

/// Computes the N-point Gauss-Legendre grid. Nodes are found by Newton
/// iteration on P_N(cos theta) in the theta variable, started from the
/// chebstar reference angles; only the lower half is iterated, the rest
/// follows by reflection about pi/2. Weights are w = 2 / (dP_N/dtheta)^2.
inline LegendreGrid legendre_nodes_weights(std::size_t n) {
  if (n == 0) throw std::invalid_argument("legendre_nodes_weights: size must be positive");

  const std::size_t half = n / 2;  // nodes strictly below pi/2
  std::vector<double> th(half), x(half), p_n, p_nm1, dpdth(half);
  std::vector<double> prev_step(half, std::numeric_limits<double>::infinity());
  std::vector<char> active(half, 1);

  for (std::size_t k = 0; k < half; ++k) th[k] = reference_angle(n, GridKind::chebstar, k);

  // A strict |step| <= 1e-15 stop is not reachable for every node once the
  // iteration hits the rounding floor of the recurrence, so a node is also
  // accepted when its tiny step has stopped contracting quadratically: a
  // genuine Newton step shrinks by orders of magnitude per sweep, a
  // noise-floor step does not.
  constexpr double step_tol = 1e-15;
  constexpr double noise_ceiling = 1e-11;
  constexpr int max_iterations = 12;

  std::size_t remaining = half;
  for (int it = 0; it < max_iterations && remaining > 0; ++it) {
    for (std::size_t k = 0; k < half; ++k) x[k] = std::cos(th[k]);
    detail::legendre_pair_batch(n, x, p_n, p_nm1);
    for (std::size_t k = 0; k < half; ++k) {
      if (!active[k]) continue;
      const double dp = static_cast<double>(n) * (x[k] * p_n[k] - p_nm1[k]) / std::sin(th[k]);
      const double step = p_n[k] / dp;
      th[k] -= step;
      const double mag = std::fabs(step);
      if (mag <= step_tol || (mag <= noise_ceiling && mag >= 0.01 * prev_step[k])) {
        active[k] = 0;
        --remaining;
      }
      prev_step[k] = mag;
    }
  }
  if (remaining > 0)
    throw std::runtime_error("legendre_nodes_weights: Newton iteration did not converge");

  // Final derivative values at the converged angles, for the weights.
  for (std::size_t k = 0; k < half; ++k) x[k] = std::cos(th[k]);
  detail::legendre_pair_batch(n, x, p_n, p_nm1);
  for (std::size_t k = 0; k < half; ++k)
    dpdth[k] = static_cast<double>(n) * (x[k] * p_n[k] - p_nm1[k]) / std::sin(th[k]);

  LegendreGrid grid;
  grid.size = n;
  grid.theta.resize(n);
  grid.x.resize(n);
  grid.weights.resize(n);
  for (std::size_t k = 0; k < half; ++k) {
    const double w = 2.0 / (dpdth[k] * dpdth[k]);
    grid.theta[k] = th[k];
    grid.theta[n - 1 - k] = detail::pi - th[k];
    grid.x[k] = x[k];
    grid.x[n - 1 - k] = -x[k];
    grid.weights[k] = w;
    grid.weights[n - 1 - k] = w;
  }
  if (n % 2 == 1) {
    const std::size_t mid = (n - 1) / 2;
    const double dp_mid = static_cast<double>(n) * detail::legendre_prev_at_zero(n);
    grid.theta[mid] = 0.5 * detail::pi;
    grid.x[mid] = 0.0;
    grid.weights[mid] = 2.0 / (dp_mid * dp_mid);
  }
  return grid;
}

/// Builds the reference grid of the requested kind for an existing
/// Legendre grid, including the perturbations delta_theta.
inline ReferenceGrid reference_grid(const LegendreGrid& grid, GridKind kind) {
  ReferenceGrid ref;
  ref.size = grid.size;
  ref.kind = kind;
  ref.theta_star.resize(grid.size);
  ref.delta_theta.resize(grid.size);
  for (std::size_t k = 0; k < grid.size; ++k) {
    ref.theta_star[k] = reference_angle(grid.size, kind, k);
    ref.delta_theta[k] = grid.theta[k] - ref.theta_star[k];
  }
  return ref;
}

}  // namespace fastleg
