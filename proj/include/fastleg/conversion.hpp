#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fastleg/types.hpp"

// Legendre -> Chebyshev coefficient conversion. The change of basis is the
// upper-triangular matrix
//
//   M_{kn} = (2 - delta_{k0}) / pi * Lambda((n-k)/2) * Lambda((n+k)/2),
//            for k <= n, k + n even, and 0 otherwise,
//
// where Lambda(z) = Gamma(z + 1/2) / Gamma(z + 1). M and its transpose are
// applied directly in O(N^2), iterating the two parity classes separately.

namespace fastleg {

/// Table of Lambda(z) = Gamma(z+1/2)/Gamma(z+1) at integer z, built by the
/// recurrence Lambda(z+1) = Lambda(z) (z+1/2)/(z+1) from Lambda(0) = sqrt(pi).
class LambdaCache {
 public:
  explicit LambdaCache(std::size_t max_index) : table_(max_index + 1) {
    table_[0] = std::sqrt(detail::pi);
    for (std::size_t z = 0; z + 1 <= max_index; ++z)
      table_[z + 1] =
          table_[z] * (static_cast<double>(z) + 0.5) / (static_cast<double>(z) + 1.0);
  }

  double operator[](std::size_t z) const { return table_[z]; }
  std::size_t max_index() const { return table_.size() - 1; }

 private:
  std::vector<double> table_;
};

namespace detail {

// Asymptotic form of sqrt(z) * Lambda(z); below one ulp of relative error
// for z >= 30.
inline double lambda_ratio_asymptotic(double z) {
  constexpr double k1 = -1.0 / 8.0;
  constexpr double k2 = 1.0 / 128.0;
  constexpr double k3 = 5.0 / 1024.0;
  constexpr double k4 = -21.0 / 32768.0;
  constexpr double k5 = -399.0 / 262144.0;
  constexpr double k6 = 869.0 / 4194304.0;
  constexpr double k7 = 39325.0 / 33554432.0;
  constexpr double k8 = -334477.0 / 2147483648.0;
  const double r = 1.0 / z;
  const double s =
      1.0 + r * (k1 + r * (k2 + r * (k3 + r * (k4 + r * (k5 + r * (k6 + r * (k7 + r * k8)))))));
  return s / std::sqrt(z);
}

}  // namespace detail

/// Gamma(z+1/2)/Gamma(z+1) for real z >= 0. Integer arguments come from the
/// cache when covered; otherwise large arguments use the asymptotic series
/// and small ones climb the recurrence from a log-gamma base in [0, 1).
inline double lambda_ratio(double z, const LambdaCache& cache) {
  if (!(z >= 0.0)) throw std::domain_error("lambda_ratio: argument must be non-negative");
  const double zf = std::floor(z);
  if (z == zf && zf <= static_cast<double>(cache.max_index()))
    return cache[static_cast<std::size_t>(zf)];
  if (z >= 30.0) return detail::lambda_ratio_asymptotic(z);
  const double frac = z - zf;
  double value = std::exp(std::lgamma(frac + 0.5) - std::lgamma(frac + 1.0));
  for (double w = frac; w < z - 0.5; w += 1.0) value *= (w + 0.5) / (w + 1.0);
  return value;
}

/// Entry (k, n) of the conversion matrix M.
inline double leg2cheb_entry(std::size_t k, std::size_t n, const LambdaCache& cache) {
  if (k > n || (k + n) % 2 != 0) return 0.0;
  const double prefactor = (k == 0 ? 1.0 : 2.0) / detail::pi;
  return prefactor * lambda_ratio(static_cast<double>((n - k) / 2), cache) *
         lambda_ratio(static_cast<double>((n + k) / 2), cache);
}

namespace detail {

// Lambda values scaled by 1/Lambda(0) = 1/sqrt(pi). In this form the
// prefactors 1/pi and 2/pi reduce to 1 and 2, and the identity entries
// M_00 = M_11 = 1 come out exact (s[0] = 1 and s[1] = 1/2 exactly).
inline std::vector<double> scaled_lambda_table(const LambdaCache& cache, std::size_t count) {
  if (count > 0 && cache.max_index() + 1 < count)
    throw std::invalid_argument("leg2cheb: Lambda cache smaller than the coefficient vector");
  std::vector<double> s(count);
  for (std::size_t j = 0; j < count; ++j) s[j] = cache[j] / cache[0];
  return s;
}

}  // namespace detail

/// ĉ = M c: Chebyshev coefficients of the polynomial with Legendre
/// coefficients c, so that sum ĉ_n T_n = sum c_n P_n identically.
inline CoefficientVector leg2cheb_apply(const CoefficientVector& c, const LambdaCache& cache) {
  if (c.basis != Basis::legendre)
    throw std::invalid_argument("leg2cheb_apply: expected Legendre coefficients");
  const std::size_t n = c.values.size();
  const std::vector<double> s = detail::scaled_lambda_table(cache, n);
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    // M_{k,k+2j} = pref * s_j * s_{k+j}
    double acc = 0.0;
    for (std::size_t j = 0; k + 2 * j < n; ++j) acc += s[j] * s[k + j] * c.values[k + 2 * j];
    out[k] = (k == 0 ? 1.0 : 2.0) * acc;
  }
  return chebyshev_coefficients(std::move(out));
}

inline CoefficientVector leg2cheb_apply(const CoefficientVector& c) {
  const std::size_t n = c.values.size();
  return leg2cheb_apply(c, LambdaCache(n == 0 ? 0 : n - 1));
}

/// out = M^T v, the exact transpose of leg2cheb_apply as a linear map.
inline std::vector<double> leg2cheb_apply_transpose(const std::vector<double>& v,
                                                    const LambdaCache& cache) {
  const std::size_t n = v.size();
  const std::vector<double> s = detail::scaled_lambda_table(cache, n);
  std::vector<double> out(n, 0.0);
  for (std::size_t m = 0; m < n; ++m) {
    // column m of M: rows m-2j with entry pref(m-2j) * s_j * s_{m-j}
    double acc = 0.0;
    for (std::size_t j = 0; 2 * j < m; ++j) acc += s[j] * s[m - j] * v[m - 2 * j];
    acc *= 2.0;
    if (m % 2 == 0) acc += s[m / 2] * s[m - m / 2] * v[0];  // k = 0 row, pref 1
    out[m] = acc;
  }
  return out;
}

inline std::vector<double> leg2cheb_apply_transpose(const std::vector<double>& v) {
  const std::size_t n = v.size();
  return leg2cheb_apply_transpose(v, LambdaCache(n == 0 ? 0 : n - 1));
}

}  // namespace fastleg
