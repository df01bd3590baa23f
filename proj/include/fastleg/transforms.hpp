#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fastleg/conversion.hpp"
#include "fastleg/ndct.hpp"
#include "fastleg/quadrature.hpp"
#include "fastleg/types.hpp"

namespace fastleg {

/// Everything precomputed for transforms of one size: the Gauss-Legendre
/// grid, the NDCT plan, and the Lambda table for the basis conversion.
/// Construction costs O(N^2); instances are immutable and safe to share
/// across threads.
class TransformConfig {
 public:
  explicit TransformConfig(std::size_t n, double tolerance = default_tolerance,
                           GridKind kind = GridKind::chebstar)
      : grid_(legendre_nodes_weights(n)),
        plan_(plan_ndct(grid_, kind, tolerance)),
        lambda_(n - 1) {}

  std::size_t size() const { return grid_.size; }
  GridKind kind() const { return plan_.kind; }
  double tolerance() const { return plan_.tolerance; }
  const LegendreGrid& grid() const { return grid_; }
  const TaylorPlan& plan() const { return plan_; }
  const LambdaCache& lambda() const { return lambda_; }

 private:
  LegendreGrid grid_;
  TaylorPlan plan_;
  LambdaCache lambda_;
};

/// Discrete Legendre transform: f_k = sum_n c_n P_n(x_k) at the Legendre
/// nodes, computed as the NDCT of the Chebyshev coefficients M c.
inline std::vector<double> dlt(const CoefficientVector& c, const TransformConfig& config) {
  if (c.basis != Basis::legendre)
    throw std::invalid_argument("dlt: expected Legendre coefficients");
  if (c.values.size() != config.size())
    throw std::invalid_argument("dlt: coefficient size does not match config");
  const CoefficientVector cheb = leg2cheb_apply(c, config.lambda());
  return ndct_apply(config.plan(), cheb.values);
}

/// Inverse transform: recovers Legendre coefficients from values at the
/// Legendre nodes, c = D_s M^T T^T D_w f, where D_w holds the quadrature
/// weights and D_s the normalizations s_n = n + 1/2.
inline CoefficientVector idlt(const std::vector<double>& f, const TransformConfig& config) {
  if (f.size() != config.size())
    throw std::invalid_argument("idlt: value size does not match config");
  const std::size_t n = config.size();
  std::vector<double> weighted(n);
  for (std::size_t k = 0; k < n; ++k) weighted[k] = config.grid().weights[k] * f[k];
  const std::vector<double> back = ndct_apply_transpose(config.plan(), weighted);
  std::vector<double> coeffs = leg2cheb_apply_transpose(back, config.lambda());
  for (std::size_t m = 0; m < n; ++m) coeffs[m] *= static_cast<double>(m) + 0.5;
  return legendre_coefficients(std::move(coeffs));
}

}  // namespace fastleg
