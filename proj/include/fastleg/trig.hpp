#pragma once

#include <fftw3.h>

#include <cstddef>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fastleg/types.hpp"

// Type-III discrete cosine and sine transforms (and their transposes, the
// type-II transforms), in the normalization
//
//   dct_iii(c)_k = sum_n c_n cos(n (k+1/2) pi / N)        (kind cheb1)
//   dct_iii(c)_k = sum_n c_n cos(n (2k+3/2) pi / (2N+1))  (kind chebstar)
//
// and likewise with sin. The chebstar variants are the odd-indexed outputs
// of a length-(2N+1) transform of the zero-padded input. All are computed
// through FFTW's native real-to-real kernels in O(N log N) for any N.

namespace fastleg {

namespace detail {

// Plans are cached per (r2r kind, length). FFTW_UNALIGNED lets a single
// plan execute on arbitrary caller buffers; executing a cached plan from
// several threads at once is safe, only planning needs the lock.
inline void run_r2r(std::size_t n, fftw_r2r_kind kind, double* in, double* out) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::size_t>, fftw_plan> plans;
  fftw_plan plan;
  {
    std::scoped_lock lock(mutex);
    fftw_plan& slot = plans[{static_cast<int>(kind), n}];
    if (slot == nullptr) {
      std::vector<double> a(n), b(n);
      slot = fftw_plan_r2r_1d(static_cast<int>(n), a.data(), b.data(), kind,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
      if (slot == nullptr) throw std::runtime_error("fastleg: FFTW planning failed");
    }
    plan = slot;
  }
  fftw_execute_r2r(plan, in, out);
}

inline void require_nonempty(const std::vector<double>& v, const char* where) {
  if (v.empty()) throw std::invalid_argument(std::string(where) + ": empty input");
}

}  // namespace detail

inline std::vector<double> dct_iii(const std::vector<double>& c, GridKind kind) {
  detail::require_nonempty(c, "dct_iii");
  const std::size_t n = c.size();
  // FFTW REDFT01 computes X_0 + 2 sum_{j>=1} X_j cos(...), so halve the tail.
  if (kind == GridKind::cheb1) {
    std::vector<double> in(n), out(n);
    in[0] = c[0];
    for (std::size_t j = 1; j < n; ++j) in[j] = 0.5 * c[j];
    detail::run_r2r(n, FFTW_REDFT01, in.data(), out.data());
    return out;
  }
  const std::size_t m = 2 * n + 1;
  std::vector<double> in(m, 0.0), out(m);
  in[0] = c[0];
  for (std::size_t j = 1; j < n; ++j) in[j] = 0.5 * c[j];
  detail::run_r2r(m, FFTW_REDFT01, in.data(), out.data());
  std::vector<double> result(n);
  for (std::size_t k = 0; k < n; ++k) result[k] = out[2 * k + 1];
  return result;
}

inline std::vector<double> dst_iii(const std::vector<double>& c, GridKind kind) {
  detail::require_nonempty(c, "dst_iii");
  const std::size_t n = c.size();
  // FFTW RODFT01 uses frequencies j+1, so the input shifts down one slot;
  // the n = 0 term of the kernel is identically zero.
  if (kind == GridKind::cheb1) {
    if (n == 1) return {0.0};
    std::vector<double> in(n, 0.0), out(n);
    for (std::size_t j = 0; j + 1 < n; ++j) in[j] = 0.5 * c[j + 1];
    detail::run_r2r(n, FFTW_RODFT01, in.data(), out.data());
    return out;
  }
  const std::size_t m = 2 * n + 1;
  std::vector<double> in(m, 0.0), out(m);
  for (std::size_t j = 0; j + 1 < n; ++j) in[j] = 0.5 * c[j + 1];
  detail::run_r2r(m, FFTW_RODFT01, in.data(), out.data());
  std::vector<double> result(n);
  for (std::size_t k = 0; k < n; ++k) result[k] = out[2 * k + 1];
  return result;
}

/// Transpose of dct_iii as a linear map: out_n = sum_k g_k cos(n (k+1/2) pi / N)
/// (cheb1), i.e. half of FFTW's REDFT10; analogously for chebstar through the
/// odd-slot scatter of the length-(2N+1) transform.
inline std::vector<double> dct_iii_transpose(const std::vector<double>& g, GridKind kind) {
  detail::require_nonempty(g, "dct_iii_transpose");
  const std::size_t n = g.size();
  if (kind == GridKind::cheb1) {
    std::vector<double> in(g), out(n);
    detail::run_r2r(n, FFTW_REDFT10, in.data(), out.data());
    for (double& v : out) v *= 0.5;
    return out;
  }
  const std::size_t m = 2 * n + 1;
  std::vector<double> in(m, 0.0), out(m);
  for (std::size_t k = 0; k < n; ++k) in[2 * k + 1] = g[k];
  detail::run_r2r(m, FFTW_REDFT10, in.data(), out.data());
  std::vector<double> result(n);
  for (std::size_t j = 0; j < n; ++j) result[j] = 0.5 * out[j];
  return result;
}

inline std::vector<double> dst_iii_transpose(const std::vector<double>& g, GridKind kind) {
  detail::require_nonempty(g, "dst_iii_transpose");
  const std::size_t n = g.size();
  if (kind == GridKind::cheb1) {
    std::vector<double> result(n, 0.0);
    if (n == 1) return result;
    std::vector<double> in(g), out(n);
    detail::run_r2r(n, FFTW_RODFT10, in.data(), out.data());
    for (std::size_t j = 1; j < n; ++j) result[j] = 0.5 * out[j - 1];
    return result;
  }
  const std::size_t m = 2 * n + 1;
  std::vector<double> in(m, 0.0), out(m);
  for (std::size_t k = 0; k < n; ++k) in[2 * k + 1] = g[k];
  detail::run_r2r(m, FFTW_RODFT10, in.data(), out.data());
  std::vector<double> result(n, 0.0);
  for (std::size_t j = 1; j < n; ++j) result[j] = 0.5 * out[j - 1];
  return result;
}

}  // namespace fastleg
