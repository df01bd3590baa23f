#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "fastleg/cli.hpp"

namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "fastleg_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

int run_cli(std::vector<std::string> args) {
  std::vector<const char*> argv = {"fastleg"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return fastleg::cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("dlt of the constant basis vector") {
  const fs::path in = temp_file("e0.csv"), out = temp_file("f.csv");
  std::ofstream os(in);
  os << "1\n0\n0\n0\n0\n0\n0\n0\n";
  os.close();

  REQUIRE(run_cli({"dlt", "--in", in.string(), "--out", out.string()}) == 0);
  const std::vector<double> f = fastleg::read_vector(out, fastleg::VectorFormat::csv);
  REQUIRE(f.size() == 8);
  for (double v : f) REQUIRE(v == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("nodes of the two-point rule") {
  const fs::path out = temp_file("nodes2.csv");
  REQUIRE(run_cli({"nodes", "--n", "2", "--out", out.string()}) == 0);

  std::ifstream is(out);
  std::string line;
  std::vector<std::vector<double>> rows;
  while (std::getline(is, line)) {
    std::vector<double> fields;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const std::size_t comma = std::min(line.find(',', pos), line.size());
      fields.push_back(std::stod(line.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    rows.push_back(fields);
  }
  REQUIRE(rows.size() == 2);
  const double root3 = 0.57735026918962576451;  // 1/sqrt(3)
  REQUIRE(rows[0][1] == Catch::Approx(root3).margin(4e-16));
  REQUIRE(rows[1][1] == Catch::Approx(-root3).margin(4e-16));
  REQUIRE(rows[0][2] == Catch::Approx(1.0).margin(4e-16));
  REQUIRE(rows[1][2] == Catch::Approx(1.0).margin(4e-16));
  REQUIRE(rows[0][0] == Catch::Approx(std::acos(root3)).margin(4e-16));
}

TEST_CASE("file round trip through dlt and idlt") {
  const fs::path in = temp_file("c.csv"), mid = temp_file("fvals.csv"),
                 back = temp_file("cback.csv");
  const std::vector<double> coeffs = fastleg::random_decaying(64, 1.0, 12);
  fastleg::write_vector(in, coeffs, fastleg::VectorFormat::csv);

  REQUIRE(run_cli({"dlt", "--in", in.string(), "--out", mid.string()}) == 0);
  REQUIRE(run_cli({"idlt", "--in", mid.string(), "--out", back.string()}) == 0);

  const std::vector<double> recovered = fastleg::read_vector(back, fastleg::VectorFormat::csv);
  double cmax = 0.0;
  for (double v : coeffs) cmax = std::max(cmax, std::fabs(v));
  REQUIRE(recovered.size() == coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    REQUIRE(std::fabs(recovered[i] - coeffs[i]) <= 1e-10 * cmax);
}

TEST_CASE("binary format round trip") {
  const fs::path in = temp_file("c.bin"), out = temp_file("cheb.bin");
  fastleg::write_vector(in, fastleg::random_decaying(32, 0.5, 8),
                        fastleg::VectorFormat::raw_binary);
  REQUIRE(run_cli({"leg2cheb", "--in", in.string(), "--out", out.string(), "--format", "bin"}) ==
          0);
  const std::vector<double> cheb = fastleg::read_vector(out, fastleg::VectorFormat::raw_binary);
  REQUIRE(cheb.size() == 32);
}

TEST_CASE("ndct and grid selection flags") {
  const fs::path in = temp_file("chebc.csv"), out1 = temp_file("v1.csv"),
                 out2 = temp_file("v2.csv");
  fastleg::write_vector(in, fastleg::random_decaying(24, 1.0, 9), fastleg::VectorFormat::csv);
  REQUIRE(run_cli({"ndct", "--in", in.string(), "--out", out1.string(), "--grid", "cheb1"}) == 0);
  REQUIRE(run_cli({"ndct", "--in", in.string(), "--out", out2.string(), "--grid", "chebstar",
                   "--tol", "1e-7"}) == 0);
  const std::vector<double> v1 = fastleg::read_vector(out1, fastleg::VectorFormat::csv);
  const std::vector<double> v2 = fastleg::read_vector(out2, fastleg::VectorFormat::csv);
  REQUIRE(v1.size() == 24);
  for (std::size_t k = 0; k < 24; ++k) REQUIRE(v1[k] == Catch::Approx(v2[k]).margin(1e-6));
}

TEST_CASE("compare emits small errors and is deterministic") {
  const fs::path out1 = temp_file("cmp1.csv"), out2 = temp_file("cmp2.csv");
  const std::vector<std::string> args = {"compare", "--n",     "1024", "--decay", "1",
                                         "--trials", "5",      "--seed", "0"};
  auto with_out = [&](const fs::path& p) {
    std::vector<std::string> a = args;
    a.push_back("--out");
    a.push_back(p.string());
    return a;
  };
  REQUIRE(run_cli(with_out(out1)) == 0);
  REQUIRE(run_cli(with_out(out2)) == 0);
  REQUIRE(slurp(out1) == slurp(out2));

  std::ifstream is(out1);
  std::string line;
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    REQUIRE(line.substr(0, comma) == "1024");
    REQUIRE(std::stod(line.substr(comma + 1)) <= 1e-11);
  }
  REQUIRE(rows == 5);
}

TEST_CASE("bench emits one row per size") {
  const fs::path out = temp_file("bench.csv");
  REQUIRE(run_cli({"bench", "--min", "16", "--max", "64", "--points", "3", "--out",
                   out.string()}) == 0);
  std::ifstream is(out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(is, line)) rows.push_back(line);
  REQUIRE(rows.size() == 3);
  REQUIRE(rows[0].substr(0, 3) == "16,");
  REQUIRE(rows[2].substr(0, 3) == "64,");
}

TEST_CASE("exit codes") {
  // usage errors
  REQUIRE(run_cli({"frobnicate"}) == 2);
  REQUIRE(run_cli({"dlt", "--in", "x.csv"}) == 2);          // --out missing
  REQUIRE(run_cli({"nodes"}) == 2);                         // --n missing
  REQUIRE(run_cli({"dlt", "--in", "a", "--out", "b", "--grid", "weird"}) == 2);

  // i/o errors
  const fs::path missing = temp_file("missing.csv");
  fs::remove(missing);
  REQUIRE(run_cli({"dlt", "--in", missing.string(), "--out", temp_file("o.csv").string()}) == 3);

  // numerical-domain errors: an empty vector has no transform
  const fs::path empty = temp_file("empty.csv");
  std::ofstream(empty).close();
  REQUIRE(run_cli({"dlt", "--in", empty.string(), "--out", temp_file("o2.csv").string()}) == 4);

  // help succeeds
  REQUIRE(run_cli({"--help"}) == 0);
}
