#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fastleg/quadrature.hpp"
#include "fastleg/types.hpp"

// Reference implementations used to validate the fast transforms. These run
// the classical three-term recurrences directly and deliberately share no
// code with the FFT-based path, so agreement between the two is meaningful.

namespace fastleg {

/// Evaluates sum_n c_n P_n(x_j) for each x_j by the Legendre recurrence,
/// accumulating the series alongside the recurrence (O(N) memory).
inline std::vector<double> eval_legendre_direct(const CoefficientVector& c,
                                                const std::vector<double>& xs) {
  if (c.basis != Basis::legendre)
    throw std::invalid_argument("eval_legendre_direct: expected Legendre coefficients");
  for (double x : xs)
    if (!(std::fabs(x) <= 1.0))
      throw std::domain_error("eval_legendre_direct: abscissa outside [-1, 1]");

  const std::size_t n = c.values.size();
  std::vector<double> out(xs.size(), 0.0);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const double x = xs[j];
    double p_prev = 1.0;  // P_0
    double acc = n > 0 ? c.values[0] : 0.0;
    if (n > 1) {
      double p = x;  // P_1
      acc += c.values[1] * p;
      for (std::size_t m = 1; m + 1 < n; ++m) {
        const double next =
            ((2.0 * static_cast<double>(m) + 1.0) * x * p - static_cast<double>(m) * p_prev) /
            (static_cast<double>(m) + 1.0);
        p_prev = p;
        p = next;
        acc += c.values[m + 1] * p;
      }
    }
    out[j] = acc;
  }
  return out;
}

/// Evaluates sum_n c_n T_n(x_j) by the Chebyshev recurrence
/// T_{n+1}(x) = 2 x T_n(x) - T_{n-1}(x).
inline std::vector<double> eval_chebyshev_direct(const CoefficientVector& c,
                                                 const std::vector<double>& xs) {
  if (c.basis != Basis::chebyshev)
    throw std::invalid_argument("eval_chebyshev_direct: expected Chebyshev coefficients");
  for (double x : xs)
    if (!(std::fabs(x) <= 1.0))
      throw std::domain_error("eval_chebyshev_direct: abscissa outside [-1, 1]");

  const std::size_t n = c.values.size();
  std::vector<double> out(xs.size(), 0.0);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const double x = xs[j];
    double t_prev = 1.0;  // T_0
    double acc = n > 0 ? c.values[0] : 0.0;
    if (n > 1) {
      double t = x;  // T_1
      acc += c.values[1] * t;
      for (std::size_t m = 1; m + 1 < n; ++m) {
        const double next = 2.0 * x * t - t_prev;
        t_prev = t;
        t = next;
        acc += c.values[m + 1] * next;
      }
    }
    out[j] = acc;
  }
  return out;
}

/// Direct inverse transform from values at the Legendre nodes:
/// c_n = (n + 1/2) sum_k w_k f_k P_n(x_k). The Legendre recurrence runs
/// across all nodes simultaneously, one degree at a time (O(N) memory).
inline CoefficientVector idlt_direct(const std::vector<double>& f, const LegendreGrid& grid) {
  const std::size_t n = grid.size;
  if (f.size() != n) throw std::invalid_argument("idlt_direct: value/grid size mismatch");

  std::vector<double> wf(n);
  for (std::size_t k = 0; k < n; ++k) wf[k] = grid.weights[k] * f[k];

  std::vector<double> coeffs(n, 0.0);
  std::vector<double> p_prev(n, 1.0);  // P_0 at every node
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += wf[k];
  coeffs[0] = 0.5 * acc;

  if (n > 1) {
    std::vector<double> p = grid.x;  // P_1
    acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += wf[k] * p[k];
    coeffs[1] = 1.5 * acc;
    for (std::size_t m = 1; m + 1 < n; ++m) {
      const double a = (2.0 * static_cast<double>(m) + 1.0) / (static_cast<double>(m) + 1.0);
      const double b = static_cast<double>(m) / (static_cast<double>(m) + 1.0);
      acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double next = a * grid.x[k] * p[k] - b * p_prev[k];
        p_prev[k] = p[k];
        p[k] = next;
        acc += wf[k] * next;
      }
      coeffs[m + 1] = (static_cast<double>(m + 1) + 0.5) * acc;
    }
  }
  return legendre_coefficients(std::move(coeffs));
}

/// Brute-force Chebyshev expansion of P_n: samples P_n at an m-point
/// first-kind Chebyshev grid and recovers the interpolation coefficients
/// a_k = (2 - delta_{k0})/m * sum_j f_j cos(k (j+1/2) pi / m).
/// Exact (up to rounding) for m > n; returns the first n+1 coefficients.
inline std::vector<double> cheb_coeffs_of_legendre(std::size_t n, std::size_t m) {
  if (m <= n)
    throw std::invalid_argument("cheb_coeffs_of_legendre: need more sample points than degree");

  std::vector<double> samples(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double x = std::cos((static_cast<double>(j) + 0.5) * detail::pi / static_cast<double>(m));
    double p_prev = 1.0, p = x;
    if (n == 0) {
      samples[j] = 1.0;
      continue;
    }
    for (std::size_t q = 1; q < n; ++q) {
      const double next =
          ((2.0 * static_cast<double>(q) + 1.0) * x * p - static_cast<double>(q) * p_prev) /
          (static_cast<double>(q) + 1.0);
      p_prev = p;
      p = next;
    }
    samples[j] = p;
  }

  std::vector<double> coeffs(n + 1, 0.0);
  for (std::size_t k = 0; k <= n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j)
      acc += samples[j] * std::cos(static_cast<double>(k) * (static_cast<double>(j) + 0.5) *
                                   detail::pi / static_cast<double>(m));
    coeffs[k] = (k == 0 ? 1.0 : 2.0) / static_cast<double>(m) * acc;
  }
  return coeffs;
}

}  // namespace fastleg
