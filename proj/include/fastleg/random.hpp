#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fastleg/types.hpp"

namespace fastleg {

/// Standard-normal draws from a mt19937_64 stream via the Box-Muller
/// transform. std::normal_distribution is not pinned by the standard, so
/// this keeps output identical across platforms for a given seed.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform01();
    } while (u1 == 0.0);
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    have_spare_ = true;
    spare_ = r * std::sin(2.0 * detail::pi * u2);
    return r * std::cos(2.0 * detail::pi * u2);
  }

 private:
  double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Random coefficient vector with normal entries scaled to decay
/// algebraically: entry n is N(0,1) * (n+1)^(-decay).
inline std::vector<double> random_decaying(std::size_t n, double decay, GaussianSource& source) {
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i)
    values[i] = source.next() * std::pow(static_cast<double>(i + 1), -decay);
  return values;
}

inline std::vector<double> random_decaying(std::size_t n, double decay, std::uint64_t seed) {
  GaussianSource source(seed);
  return random_decaying(n, decay, source);
}

}  // namespace fastleg
