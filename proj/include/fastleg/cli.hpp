#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "fastleg/fastleg.hpp"

// Command-line front end. Exit codes: 0 success, 2 usage error, 3 I/O or
// file-format error, 4 numerical-domain error.

namespace fastleg::cli {

namespace detail {

using fastleg::detail::format_shortest;

inline GridKind parse_kind(const std::string& name) {
  return name == "cheb1" ? GridKind::cheb1 : GridKind::chebstar;
}

inline VectorFormat parse_format(const std::string& name) {
  return name == "bin" ? VectorFormat::raw_binary : VectorFormat::csv;
}

// Writes CSV rows to --out, or to stdout when the target is "-".
class RowWriter {
 public:
  explicit RowWriter(const std::string& target) {
    if (target != "-") {
      file_.open(target);
      if (!file_) throw IoError("cannot open for writing: " + target);
      os_ = &file_;
    }
  }

  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) *os_ << ',';
      *os_ << fields[i];
    }
    *os_ << '\n';
    if (!*os_) throw IoError("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* os_ = &std::cout;
};

template <class F>
double median_seconds(int repetitions, F&& body) {
  std::vector<double> times(repetitions);
  for (int r = 0; r < repetitions; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    times[r] = std::chrono::duration<double>(stop - start).count();
  }
  std::sort(times.begin(), times.end());
  return times[repetitions / 2];
}

struct TransformArgs {
  std::string in;
  std::string out;
  double tolerance = default_tolerance;
  std::string grid = "chebstar";
  std::string format = "csv";
};

inline void add_transform_options(CLI::App* sub, TransformArgs& args) {
  sub->add_option("--in", args.in, "input vector file")->required();
  sub->add_option("--out", args.out, "output vector file")->required();
  sub->add_option("--tol", args.tolerance, "working tolerance")->capture_default_str();
  sub->add_option("--grid", args.grid, "reference grid")
      ->check(CLI::IsMember({"cheb1", "chebstar"}))
      ->capture_default_str();
  sub->add_option("--format", args.format, "vector file format")
      ->check(CLI::IsMember({"csv", "bin"}))
      ->capture_default_str();
}

inline void run_transform(const std::string& name, const TransformArgs& args) {
  const VectorFormat format = parse_format(args.format);
  const GridKind kind = parse_kind(args.grid);
  const std::vector<double> input = read_vector(args.in, format);
  std::vector<double> output;
  if (name == "leg2cheb") {
    output = leg2cheb_apply(legendre_coefficients(input)).values;
  } else if (name == "ndct") {
    const TaylorPlan plan = plan_ndct(input.size(), kind, args.tolerance);
    output = ndct_apply(plan, input);
  } else {
    const TransformConfig config(input.size(), args.tolerance, kind);
    output = name == "dlt" ? dlt(legendre_coefficients(input), config)
                           : idlt(input, config).values;
  }
  write_vector(args.out, output, format);
}

}  // namespace detail

inline int run(int argc, const char* const* argv) {
  CLI::App app{"fast discrete Legendre transform toolkit"};
  app.require_subcommand(1);

  detail::TransformArgs dlt_args, idlt_args, ndct_args, l2c_args;
  detail::add_transform_options(
      app.add_subcommand("dlt", "Legendre coefficients -> values at Legendre nodes"), dlt_args);
  detail::add_transform_options(
      app.add_subcommand("idlt", "values at Legendre nodes -> Legendre coefficients"), idlt_args);
  detail::add_transform_options(
      app.add_subcommand("ndct", "Chebyshev coefficients -> values at Legendre nodes"), ndct_args);
  detail::add_transform_options(
      app.add_subcommand("leg2cheb", "Legendre coefficients -> Chebyshev coefficients"), l2c_args);

  std::size_t nodes_n = 0;
  std::string nodes_out = "-";
  auto* nodes = app.add_subcommand("nodes", "emit theta, x, w of the N-point Gauss-Legendre rule");
  nodes->add_option("--n", nodes_n, "number of nodes")->required();
  nodes->add_option("--out", nodes_out, "output file ('-' for stdout)");

  std::size_t compare_n = 0;
  double compare_decay = 1.0;
  std::size_t compare_trials = 5;
  std::uint64_t compare_seed = 0;
  std::string compare_out = "-";
  auto* compare = app.add_subcommand(
      "compare", "max abs error of the fast transform against the direct evaluation");
  compare->add_option("--n", compare_n, "transform size")->required();
  compare->add_option("--decay", compare_decay, "coefficient decay exponent p, entry n ~ n^-p")
      ->capture_default_str();
  compare->add_option("--trials", compare_trials, "number of random trials")
      ->capture_default_str();
  compare->add_option("--seed", compare_seed, "PRNG seed")->capture_default_str();
  compare->add_option("--out", compare_out, "output file ('-' for stdout)");

  std::size_t bench_min = 0, bench_max = 0, bench_points = 0;
  std::string bench_out = "-";
  auto* bench = app.add_subcommand("bench", "time the fast and direct transforms over a range");
  bench->add_option("--min", bench_min, "smallest size")->required();
  bench->add_option("--max", bench_max, "largest size")->required();
  bench->add_option("--points", bench_points, "number of sizes")->required();
  bench->add_option("--out", bench_out, "output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const char* name : {"dlt", "idlt", "ndct", "leg2cheb"}) {
      if (app.get_subcommand(name)->parsed()) {
        const detail::TransformArgs& args = name == std::string("dlt")    ? dlt_args
                                            : name == std::string("idlt") ? idlt_args
                                            : name == std::string("ndct") ? ndct_args
                                                                          : l2c_args;
        detail::run_transform(name, args);
        return 0;
      }
    }

    if (nodes->parsed()) {
      const LegendreGrid grid = legendre_nodes_weights(nodes_n);
      detail::RowWriter writer(nodes_out);
      for (std::size_t k = 0; k < grid.size; ++k)
        writer.row({detail::format_shortest(grid.theta[k]), detail::format_shortest(grid.x[k]),
                    detail::format_shortest(grid.weights[k])});
      return 0;
    }

    if (compare->parsed()) {
      const TransformConfig config(compare_n);
      GaussianSource source(compare_seed);
      detail::RowWriter writer(compare_out);
      for (std::size_t trial = 0; trial < compare_trials; ++trial) {
        const CoefficientVector c =
            legendre_coefficients(random_decaying(compare_n, compare_decay, source));
        const std::vector<double> fast = dlt(c, config);
        const std::vector<double> direct = eval_legendre_direct(c, config.grid().x);
        double err = 0.0;
        for (std::size_t k = 0; k < fast.size(); ++k)
          err = std::max(err, std::fabs(fast[k] - direct[k]));
        writer.row({std::to_string(compare_n), detail::format_shortest(err)});
      }
      return 0;
    }

    if (bench->parsed()) {
      if (bench_min == 0 || bench_max < bench_min || bench_points == 0)
        throw std::invalid_argument("bench: need 0 < min <= max and points >= 1");
      std::vector<std::size_t> sizes;
      for (std::size_t i = 0; i < bench_points; ++i) {
        const double t = bench_points == 1
                             ? 0.0
                             : static_cast<double>(i) / static_cast<double>(bench_points - 1);
        const double logn =
            std::log(static_cast<double>(bench_min)) +
            t * (std::log(static_cast<double>(bench_max)) - std::log(static_cast<double>(bench_min)));
        const auto n = static_cast<std::size_t>(std::llround(std::exp(logn)));
        if (sizes.empty() || sizes.back() != n) sizes.push_back(n);
      }
      detail::RowWriter writer(bench_out);
      for (const std::size_t n : sizes) {
        const TransformConfig config(n);
        const CoefficientVector c = legendre_coefficients(random_decaying(n, 1.0, 7));
        std::vector<double> sink;
        const double fast =
            detail::median_seconds(5, [&] { sink = dlt(c, config); });
        const double direct =
            detail::median_seconds(5, [&] { sink = eval_legendre_direct(c, config.grid().x); });
        writer.row({std::to_string(n), detail::format_shortest(fast),
                    detail::format_shortest(direct)});
      }
      return 0;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}

}  // namespace fastleg::cli
