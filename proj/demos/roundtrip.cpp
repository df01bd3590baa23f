// Round-trip demo: sample Legendre coefficients, evaluate them at the
// Gauss-Legendre nodes, and recover them with the inverse transform.

#include <cmath>
#include <cstdio>

#include "fastleg/fastleg.hpp"

int main() {
  const std::size_t n = 256;
  const fastleg::TransformConfig config(n);

  const fastleg::CoefficientVector coeffs =
      fastleg::legendre_coefficients(fastleg::random_decaying(n, 1.0, 42));
  const std::vector<double> values = fastleg::dlt(coeffs, config);
  const fastleg::CoefficientVector recovered = fastleg::idlt(values, config);

  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    err = std::max(err, std::fabs(recovered.values[i] - coeffs.values[i]));

  std::printf("n = %zu  terms = %d  round-trip max error = %.3e\n", n,
              config.plan().num_terms, err);
  return err < 1e-10 ? 0 : 1;
}
