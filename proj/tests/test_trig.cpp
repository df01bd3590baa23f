#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "fastleg/trig.hpp"

using namespace fastleg;

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double eps = 2.220446049250313e-16;

double angle(GridKind kind, std::size_t n, std::size_t k) {
  if (kind == GridKind::cheb1) return (static_cast<double>(k) + 0.5) * pi / static_cast<double>(n);
  return (2.0 * static_cast<double>(k) + 1.5) * pi / (2.0 * static_cast<double>(n) + 1.0);
}

// Direct double-loop evaluations of the four kernels.
std::vector<double> dct_direct(const std::vector<double>& c, GridKind kind) {
  const std::size_t n = c.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      out[k] += c[m] * std::cos(static_cast<double>(m) * angle(kind, n, k));
  return out;
}

std::vector<double> dst_direct(const std::vector<double>& c, GridKind kind) {
  const std::size_t n = c.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      out[k] += c[m] * std::sin(static_cast<double>(m) * angle(kind, n, k));
  return out;
}

std::vector<double> dct_transpose_direct(const std::vector<double>& g, GridKind kind) {
  const std::size_t n = g.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k)
      out[m] += g[k] * std::cos(static_cast<double>(m) * angle(kind, n, k));
  return out;
}

std::vector<double> dst_transpose_direct(const std::vector<double>& g, GridKind kind) {
  const std::size_t n = g.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k)
      out[m] += g[k] * std::sin(static_cast<double>(m) * angle(kind, n, k));
  return out;
}

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

double norm1(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += std::fabs(x);
  return s;
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("constant coefficient vector") {
  for (GridKind kind : {GridKind::cheb1, GridKind::chebstar}) {
    std::vector<double> e0(6, 0.0);
    e0[0] = 1.0;
    for (double v : dct_iii(e0, kind)) REQUIRE(v == Catch::Approx(1.0).margin(4 * eps));
    for (double v : dst_iii(e0, kind)) REQUIRE(v == 0.0);
  }
}

TEST_CASE("single-frequency vectors at N=4") {
  std::vector<double> e1(4, 0.0);
  e1[1] = 1.0;
  const std::vector<double> c = dct_iii(e1, GridKind::cheb1);
  const std::vector<double> s = dst_iii(e1, GridKind::cheb1);
  for (std::size_t k = 0; k < 4; ++k) {
    const double a = (static_cast<double>(k) + 0.5) * pi / 4.0;
    REQUIRE(c[k] == Catch::Approx(std::cos(a)).margin(8 * eps));
    REQUIRE(s[k] == Catch::Approx(std::sin(a)).margin(8 * eps));
  }
}

TEST_CASE("transpose picks a kernel row") {
  std::vector<double> e0(3, 0.0);
  e0[0] = 1.0;
  const std::vector<double> out = dct_iii_transpose(e0, GridKind::cheb1);
  REQUIRE(out[0] == Catch::Approx(1.0).margin(4 * eps));
  REQUIRE(out[1] == Catch::Approx(std::cos(pi / 6)).margin(4 * eps));
  REQUIRE(out[2] == Catch::Approx(std::cos(2 * pi / 6)).margin(4 * eps));
}

TEST_CASE("agreement with direct summation at N=32") {
  for (GridKind kind : {GridKind::cheb1, GridKind::chebstar}) {
    const std::vector<double> c = random_vector(32, 11);
    const double tol = 1e-13 * norm1(c);
    const std::vector<double> refs[] = {dct_direct(c, kind), dst_direct(c, kind),
                                        dct_transpose_direct(c, kind),
                                        dst_transpose_direct(c, kind)};
    const std::vector<double> fast[] = {dct_iii(c, kind), dst_iii(c, kind),
                                        dct_iii_transpose(c, kind), dst_iii_transpose(c, kind)};
    for (int op = 0; op < 4; ++op)
      for (std::size_t k = 0; k < 32; ++k)
        REQUIRE(fast[op][k] == Catch::Approx(refs[op][k]).margin(tol));
  }
}

TEST_CASE("agreement with direct summation for every N up to 128") {
  for (std::size_t n = 1; n <= 128; ++n) {
    const std::vector<double> c = random_vector(n, 1000 + n);
    const double tol = 100.0 * eps * static_cast<double>(n) * norm1(c);
    for (GridKind kind : {GridKind::cheb1, GridKind::chebstar}) {
      CAPTURE(n, kind == GridKind::cheb1);
      {
        const auto a = dct_iii(c, kind), b = dct_direct(c, kind);
        for (std::size_t k = 0; k < n; ++k) REQUIRE(std::fabs(a[k] - b[k]) <= tol);
      }
      {
        const auto a = dst_iii(c, kind), b = dst_direct(c, kind);
        for (std::size_t k = 0; k < n; ++k) REQUIRE(std::fabs(a[k] - b[k]) <= tol);
      }
      {
        const auto a = dct_iii_transpose(c, kind), b = dct_transpose_direct(c, kind);
        for (std::size_t k = 0; k < n; ++k) REQUIRE(std::fabs(a[k] - b[k]) <= tol);
      }
      {
        const auto a = dst_iii_transpose(c, kind), b = dst_transpose_direct(c, kind);
        for (std::size_t k = 0; k < n; ++k) REQUIRE(std::fabs(a[k] - b[k]) <= tol);
      }
    }
  }
}

TEST_CASE("adjoint identity over a range of sizes") {
  for (std::size_t n = 1; n <= 64; ++n) {
    const std::vector<double> c = random_vector(n, 2 * n);
    const std::vector<double> g = random_vector(n, 2 * n + 1);
    const double tol = 1e-12 * norm2(c) * norm2(g);
    for (GridKind kind : {GridKind::cheb1, GridKind::chebstar}) {
      CAPTURE(n, kind == GridKind::cheb1);
      REQUIRE(std::fabs(dot(dct_iii(c, kind), g) - dot(c, dct_iii_transpose(g, kind))) <= tol);
      REQUIRE(std::fabs(dot(dst_iii(c, kind), g) - dot(c, dst_iii_transpose(g, kind))) <= tol);
    }
  }
}

TEST_CASE("linearity") {
  const std::size_t n = 24;
  const std::vector<double> c = random_vector(n, 5);
  const std::vector<double> d = random_vector(n, 6);
  const double alpha = 0.37, beta = -1.25;
  std::vector<double> mix(n);
  for (std::size_t i = 0; i < n; ++i) mix[i] = alpha * c[i] + beta * d[i];
  for (GridKind kind : {GridKind::cheb1, GridKind::chebstar}) {
    const auto lhs = dct_iii(mix, kind);
    const auto fc = dct_iii(c, kind);
    const auto fd = dct_iii(d, kind);
    for (std::size_t k = 0; k < n; ++k)
      REQUIRE(lhs[k] == Catch::Approx(alpha * fc[k] + beta * fd[k]).margin(100 * eps));
  }
}

TEST_CASE("empty input rejected") {
  const std::vector<double> empty;
  REQUIRE_THROWS_AS(dct_iii(empty, GridKind::cheb1), std::invalid_argument);
  REQUIRE_THROWS_AS(dst_iii(empty, GridKind::chebstar), std::invalid_argument);
  REQUIRE_THROWS_AS(dct_iii_transpose(empty, GridKind::cheb1), std::invalid_argument);
  REQUIRE_THROWS_AS(dst_iii_transpose(empty, GridKind::chebstar), std::invalid_argument);
}
