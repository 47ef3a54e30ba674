#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "siegel/matrix_io.hpp"
#include "siegel/sampling.hpp"
#include "siegel/siegel_poincare.hpp"
#include "siegel/siegel_upper.hpp"

using namespace siegel;
using CMat = ComplexMatrix<double>;

#ifndef SIEGEL_CLI_PATH
#define SIEGEL_CLI_PATH ""
#endif

namespace {

std::string temp_path(const std::string& name) {
  return std::string("/tmp/siegel_io_test_") + name;
}

/// Runs the CLI binary, captures stdout, returns the exit code.
int run_cli(const std::string& args, std::string* stdout_text = nullptr) {
  const std::string out_file = temp_path("stdout.txt");
  const std::string cmd =
      std::string(SIEGEL_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (stdout_text) {
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    *stdout_text = ss.str();
  }
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("matrix file round trip") {
  std::mt19937_64 gen(71);
  MatrixFile mf;
  mf.dim = 3;
  mf.model = "disk";
  for (int i = 0; i < 4; ++i) {
    mf.matrices.push_back(sample_disk_point<double>(gen, 3, 0.9));
  }
  const std::string path = temp_path("roundtrip.json");
  save_matrix_file(path, mf);
  const MatrixFile back = load_matrix_file(path);
  REQUIRE(back.dim == 3);
  REQUIRE(back.matrices.size() == 4);
  CHECK(back.model.value() == "disk");
  for (std::size_t i = 0; i < 4; ++i) {
    // Shortest-representation printing makes the decimal round trip exact.
    CHECK((back.matrices[i] - mf.matrices[i]).norm() == 0.0);
  }
}

TEST_CASE("parser rejects malformed input") {
  const std::string path = temp_path("bad.json");
  {
    std::ofstream out(path);
    out << "{\"dim\": 2, \"matrices\": [{\"re\": [[1, 2]], \"im\": [[0, 0]]}]}";
  }
  CHECK_THROWS_AS((void)load_matrix_file(path), ParseError);

  {
    std::ofstream out(path);
    out << "not json at all";
  }
  CHECK_THROWS_AS((void)load_matrix_file(path), ParseError);

  {
    std::ofstream out(path);
    out << "{\"dim\": 0, \"matrices\": []}";
  }
  CHECK_THROWS_AS((void)load_matrix_file(path), ParseError);

  CHECK_THROWS_AS((void)load_matrix_file(temp_path("missing.json")), ParseError);
}

TEST_CASE("samplers produce members of their domains") {
  std::mt19937_64 gen(72);
  for (int i = 0; i < 5; ++i) {
    const CMat disk = sample_disk_point<double>(gen, 3, 0.95);
    CHECK(membership_disk(disk).member);
    CHECK(operator_norm(disk) < 0.95 + 1e-12);

    const CMat upper = sample_upper_point<double>(gen, 3);
    const auto check = membership_upper(upper);
    CHECK(check.member);
    CHECK(check.min_imaginary_eigenvalue >= 0.1 - 1e-9);

    const RealMatrix<double> spd = sample_spd<double>(gen, 3);
    const auto eig = hermitian_eigen<double>(spd.cast<std::complex<double>>());
    CHECK(eig.eigenvalues.minCoeff() >= 0.1 - 1e-9);
  }
}

TEST_CASE("sampler determinism") {
  std::mt19937_64 a(99), b(99);
  const CMat ma = sample_disk_point<double>(a, 2, 0.9);
  const CMat mb = sample_disk_point<double>(b, 2, 0.9);
  CHECK((ma - mb).norm() == 0.0);
}

TEST_CASE("cli end to end") {
  if (std::string(SIEGEL_CLI_PATH).empty()) return;

  const std::string cloud = temp_path("cloud.json");
  std::string text;

  SUBCASE("gen is deterministic and emits valid domain points") {
    CHECK(run_cli("gen --count 4 --dim 2 --seed 3 --domain disk -o " + cloud) == 0);
    const MatrixFile f1 = load_matrix_file(cloud);
    CHECK(f1.matrices.size() == 4);
    for (const auto& m : f1.matrices) CHECK(membership_disk(m).member);

    const std::string cloud2 = temp_path("cloud2.json");
    CHECK(run_cli("gen --count 4 --dim 2 --seed 3 --domain disk -o " + cloud2) == 0);
    std::ifstream ia(cloud), ib(cloud2);
    std::stringstream sa, sb;
    sa << ia.rdbuf();
    sb << ib.rdbuf();
    CHECK(sa.str() == sb.str());
  }

  SUBCASE("dist on the origin method reports the closed-form value") {
    const std::string half = temp_path("half.json");
    {
      std::ofstream out(half);
      out << R"({"dim": 2, "matrices": [{"re": [[0.5,0],[0,0.5]], "im": [[0,0],[0,0]]}]})";
    }
    CHECK(run_cli("dist --model klein --method origin -a " + half, &text) == 0);
    const auto report = nlohmann::json::parse(text);
    CHECK(std::abs(report["outputs"]["value"].get<double>() -
                   0.5 * std::log(3.0)) < 1e-9);
    CHECK(report["command"] == "dist");
    CHECK(report["counters"].contains("operator_norm"));
  }

  SUBCASE("bisection bounds are ordered and bracketed") {
    CHECK(run_cli("gen --count 2 --dim 2 --seed 8 --domain disk -o " + cloud) == 0);
    const std::string single = temp_path("single.json");
    const MatrixFile f = load_matrix_file(cloud);
    MatrixFile fa{f.dim, {f.matrices[0]}, std::nullopt};
    MatrixFile fb{f.dim, {f.matrices[1]}, std::nullopt};
    save_matrix_file(temp_path("a.json"), fa);
    save_matrix_file(temp_path("b.json"), fb);
    CHECK(run_cli("dist --model klein --method bisection --eps 1e-10 -a " +
                      temp_path("a.json") + " -b " + temp_path("b.json"),
                  &text) == 0);
    const auto report = nlohmann::json::parse(text);
    const double lower = report["outputs"]["lower"].get<double>();
    const double upper = report["outputs"]["upper"].get<double>();
    CHECK(lower <= upper);
    CHECK(upper - lower < 1e-8);
  }

  SUBCASE("convert round trip flag") {
    CHECK(run_cli("gen --count 3 --dim 2 --seed 4 --domain upper -o " + cloud) == 0);
    CHECK(run_cli("convert --from upper --to klein --check-roundtrip -i " + cloud,
                  &text) == 0);
    const auto report = nlohmann::json::parse(text);
    CHECK(report["outputs"]["roundtrip_ok"].get<bool>());
  }

  SUBCASE("seb emits a valid ball with counters") {
    CHECK(run_cli("gen --count 5 --dim 2 --seed 6 --domain disk -o " + cloud) == 0);
    CHECK(run_cli("seb --model klein -i " + cloud + " --iters 50 --trace", &text) == 0);
    const auto report = nlohmann::json::parse(text);
    CHECK(report["outputs"]["loop_counters"]["matrix_sqrt"].get<long long>() == 0);
    CHECK(report["outputs"]["radius"].get<double>() > 0.0);
    CHECK(report["outputs"]["trace"].is_array());

    CHECK(run_cli("seb --model poincare -i " + cloud + " --iters 20", &text) == 0);
    const auto preport = nlohmann::json::parse(text);
    CHECK(preport["outputs"]["loop_counters"]["matrix_sqrt"].get<long long>() ==
          2LL * 5 * 20);
  }

  SUBCASE("bench rows: identical counters across repeats, d=1 sanity flag") {
    CHECK(run_cli("gen --count 4 --dim 1 --seed 9 --domain disk -o " + cloud) == 0);
    CHECK(run_cli("bench -i " + cloud + " --iters 25 --repeats 2", &text) == 0);
    const auto report = nlohmann::json::parse(text);
    const auto& rows = report["outputs"]["rows"];
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["poincare_loop_counters"] == rows[1]["poincare_loop_counters"]);
    CHECK(rows[0]["klein_loop_counters"] == rows[1]["klein_loop_counters"]);
    CHECK(report["outputs"]["klein_loop_sqrt_free"].get<bool>());
    CHECK(report["outputs"]["d1_sanity_ok"].get<bool>());
  }

  SUBCASE("exit codes: parse, domain, ok") {
    const std::string bad = temp_path("bad2.json");
    {
      std::ofstream out(bad);
      out << "{";
    }
    CHECK(run_cli("dist --model klein -a " + bad + " -b " + bad) == 2);

    const std::string boundary = temp_path("boundary.json");
    {
      std::ofstream out(boundary);
      out << R"({"dim": 1, "matrices": [{"re": [[1.0]], "im": [[0.0]]}]})";
    }
    CHECK(run_cli("dist --model klein --method origin -a " + boundary) == 3);

    CHECK(run_cli("bogus-subcommand") == 2);
  }
}
