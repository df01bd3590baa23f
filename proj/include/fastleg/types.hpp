#pragma once

#include <limits>
#include <vector>

namespace fastleg {

inline constexpr double default_tolerance = std::numeric_limits<double>::epsilon();  // 2^-52

/// Family of equally-spaced angle grids used as reference points for the
/// Legendre angles. `cheb1` are the Chebyshev points of the first kind,
/// theta_k = (k+1/2)pi/N; `chebstar` are theta_k = (k+3/4)pi/(N+1/2), the
/// odd-indexed members of the (2N+1)-point first-kind grid.
enum class GridKind { cheb1, chebstar };

enum class Basis { legendre, chebyshev };

/// A coefficient vector tagged with the polynomial basis it expands.
struct CoefficientVector {
  Basis basis = Basis::legendre;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
};

inline CoefficientVector legendre_coefficients(std::vector<double> values) {
  return {Basis::legendre, std::move(values)};
}

inline CoefficientVector chebyshev_coefficients(std::vector<double> values) {
  return {Basis::chebyshev, std::move(values)};
}

namespace detail {

inline constexpr double pi = 3.14159265358979323846264338327950288;

inline double norm_l1(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x < 0 ? -x : x;
  return s;
}

}  // namespace detail

}  // namespace fastleg
