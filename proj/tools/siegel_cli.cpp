// Command-line front end: distances, model conversions, smallest enclosing
// balls, random domain sampling, and a recentering-cost benchmark, all over
// JSON matrix files. Prints one JSON run report per invocation.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "siegel/siegel.hpp"

namespace {

using nlohmann::json;
using namespace siegel;
using CMat = ComplexMatrix<double>;

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string digest_files(const std::vector<std::string>& paths) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
    h = fnv1a(bytes, h);
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json counters_json(const CallCounters::Snapshot& snap) {
  return {{"matrix_sqrt", snap.matrix_sqrt}, {"operator_norm", snap.operator_norm}};
}

void emit_report(const std::string& command, const json& outputs,
                 const std::string& digest, double elapsed_ms,
                 const CallCounters::Snapshot& counters, std::uint64_t seed) {
  json report;
  report["command"] = command;
  report["inputs_digest"] = digest;
  report["outputs"] = outputs;
  report["timing_ms"] = elapsed_ms;
  report["counters"] = counters_json(counters);
  report["seed"] = seed;
  std::cout << report.dump(2) << std::endl;
}

Model parse_model(const std::string& name) {
  if (name == "spd") return Model::Spd;
  if (name == "poincare") return Model::PoincareDisk;
  if (name == "klein") return Model::KleinDisk;
  throw ParseError("unknown model tag: " + name);
}

void require_disk_member(const CMat& m, const std::string& what) {
  const auto check = membership_disk(m);
  if (!check.member) {
    throw DomainViolation(what + ": matrix is not in the disk domain (margin " +
                          std::to_string(check.margin) + ", symmetry defect " +
                          std::to_string(check.symmetry_defect) + ")");
  }
}

void require_upper_member(const CMat& m, const std::string& what) {
  const auto check = membership_upper(m);
  if (!check.member) {
    throw DomainViolation(what + ": matrix is not in the upper space (min imag eigenvalue " +
                          std::to_string(check.min_imaginary_eigenvalue) + ")");
  }
}

void require_spd_member(const CMat& m, const std::string& what) {
  if (m.imag().norm() > 1e-12) {
    throw DomainViolation(what + ": spd matrix must be real");
  }
  const auto eig = hermitian_eigen<double>(m.real().cast<std::complex<double>>());
  if (eig.eigenvalues.minCoeff() <= 0.0) {
    throw DomainViolation(what + ": matrix is not positive-definite");
  }
}

void validate_for_model(const CMat& m, Model model, const std::string& what) {
  switch (model) {
    case Model::Spd: require_spd_member(m, what); break;
    case Model::PoincareDisk:
    case Model::KleinDisk: require_disk_member(m, what); break;
  }
}

// ---------------------------------------------------------------------------
// dist

int cmd_dist(const std::string& model, std::string method, const std::string& file_a,
             const std::string& file_b, double eps, int terms, double radius) {
  Stopwatch watch;
  CallCounters counters;
  const MatrixFile fa = load_matrix_file(file_a);
  const CMat a = fa.matrices.front();
  std::vector<std::string> digest_paths = {file_a};

  json outputs;
  if (model == "upper") {
    if (method.empty()) method = "eig";
    const MatrixFile fb = load_matrix_file(file_b);
    digest_paths.push_back(file_b);
    const CMat b = fb.matrices.front();
    require_upper_member(a, "A");
    require_upper_member(b, "B");
    if (method == "eig") {
      outputs["value"] = dist_upper(a, b);
    } else if (method == "series") {
      if (terms >= 0) {
        outputs["value"] = dist_upper_truncated(a, b, terms);
        outputs["terms"] = terms;
      } else {
        const auto [value, used] = dist_upper_truncated_adaptive(a, b);
        outputs["value"] = value;
        outputs["terms"] = used;
      }
    } else {
      throw ParseError("unknown method for model=upper: " + method);
    }
  } else if (model == "poincare") {
    if (method.empty()) method = "phi";
    require_disk_member(a, "A");
    if (method == "origin") {
      outputs["value"] = dist_disk_origin(a, &counters);
    } else if (method == "phi") {
      const MatrixFile fb = load_matrix_file(file_b);
      digest_paths.push_back(file_b);
      const CMat b = fb.matrices.front();
      require_disk_member(b, "B");
      outputs["value"] = dist_kobayashi(a, b, &counters);
    } else {
      throw ParseError("unknown method for model=poincare: " + method);
    }
  } else if (model == "klein") {
    if (method.empty()) method = "exact";
    require_disk_member(a, "A");
    if (method == "origin") {
      outputs["value"] = dist_klein_origin(a, &counters);
    } else {
      const MatrixFile fb = load_matrix_file(file_b);
      digest_paths.push_back(file_b);
      const CMat b = fb.matrices.front();
      require_disk_member(b, "B");
      if (method == "exact") {
        outputs["value"] = dist_klein_exact(a, b, &counters);
      } else if (method == "bisection") {
        const auto bounds = dist_klein_bounds(a, b, eps, &counters);
        outputs["lower"] = bounds.lower;
        outputs["upper"] = bounds.upper;
        outputs["value"] = bounds.midpoint();
        if (bounds.bracket) {
          outputs["alpha_minus"] = {bounds.bracket->alpha_minus.lo,
                                    bounds.bracket->alpha_minus.hi};
          outputs["alpha_plus"] = {bounds.bracket->alpha_plus.lo,
                                   bounds.bracket->alpha_plus.hi};
        }
      } else if (method == "diagonal") {
        outputs["value"] = dist_klein_diagonal(a, b);
      } else if (method == "line") {
        outputs["value"] = dist_klein_line_origin(a, b, &counters);
      } else if (method == "frobenius") {
        const double r = radius > 0 ? radius : std::sqrt(static_cast<double>(a.rows()));
        outputs["value"] = frobenius_klein_distance(a, b, r);
        outputs["radius"] = r;
      } else {
        throw ParseError("unknown method for model=klein: " + method);
      }
    }
  } else {
    throw ParseError("unknown model tag: " + model);
  }
  outputs["method"] = method;

  emit_report("dist", outputs, digest_files(digest_paths), watch.elapsed_ms(),
              counters.snapshot(), 0);
  return 0;
}

// ---------------------------------------------------------------------------
// convert

CMat convert_point(const CMat& m, const std::string& from, const std::string& to,
                   CallCounters* counters) {
  if (from == to) return m;
  // Route through the Poincare disk reading.
  CMat w;
  if (from == "upper") {
    require_upper_member(m, "input");
    w = cayley_upper_to_disk(m);
  } else if (from == "poincare") {
    require_disk_member(m, "input");
    w = m;
  } else if (from == "klein") {
    require_disk_member(m, "input");
    w = klein_to_poincare(m, counters);
  } else {
    throw ParseError("unknown model tag: " + from);
  }
  if (to == "upper") return cayley_disk_to_upper(w);
  if (to == "poincare") return w;
  if (to == "klein") return poincare_to_klein(w, counters);
  throw ParseError("unknown model tag: " + to);
}

int cmd_convert(const std::string& from, const std::string& to,
                const std::string& input, const std::string& output,
                bool check_roundtrip) {
  Stopwatch watch;
  CallCounters counters;
  const MatrixFile in = load_matrix_file(input);

  MatrixFile out;
  out.dim = in.dim;
  out.model = to;
  double roundtrip_error = 0.0;
  for (const auto& m : in.matrices) {
    const CMat converted = convert_point(m, from, to, &counters);
    if (check_roundtrip) {
      const CMat back = convert_point(converted, to, from, &counters);
      roundtrip_error = std::max(roundtrip_error, (back - m).norm());
    }
    out.matrices.push_back(converted);
  }

  json outputs;
  outputs["from"] = from;
  outputs["to"] = to;
  outputs["count"] = out.matrices.size();
  if (check_roundtrip) {
    outputs["roundtrip_error"] = roundtrip_error;
    outputs["roundtrip_ok"] = roundtrip_error <= 1e-9;
  }
  if (!output.empty()) {
    save_matrix_file(output, out);
    outputs["output"] = output;
  } else {
    outputs["matrices"] = matrix_file_to_json(out);
  }

  emit_report("convert", outputs, digest_files({input}), watch.elapsed_ms(),
              counters.snapshot(), 0);
  return 0;
}

// ---------------------------------------------------------------------------
// seb

json ball_json(const EnclosingBall<double>& ball, bool with_trace) {
  json j;
  j["model"] = model_name(ball.model);
  j["center"] = matrix_to_json(ball.center);
  j["radius"] = ball.radius;
  j["iterations"] = ball.iterations_run;
  j["loop_counters"] = counters_json(ball.loop_counters);
  j["total_counters"] = counters_json(ball.total_counters);
  if (with_trace) {
    json trace = json::array();
    for (const auto& rec : ball.trace) {
      trace.push_back({{"iteration", rec.iteration},
                       {"farthest_index", rec.farthest_index},
                       {"radius_estimate", rec.radius_estimate},
                       {"counters", counters_json(rec.counters)}});
    }
    j["trace"] = std::move(trace);
  }
  return j;
}

int cmd_seb(const std::string& model_tag, const std::string& input, int iters,
            std::uint64_t seed, bool trace, double eps) {
  Stopwatch watch;
  const Model model = parse_model(model_tag);
  const MatrixFile in = load_matrix_file(input);
  for (std::size_t i = 0; i < in.matrices.size(); ++i) {
    validate_for_model(in.matrices[i], model, "point " + std::to_string(i));
  }

  SebConfig<double> cfg;
  cfg.iterations = iters;
  cfg.klein_eps = eps;
  cfg.record_trace = trace;

  EnclosingBall<double> ball;
  switch (model) {
    case Model::Spd: {
      std::vector<RealMatrix<double>> cloud;
      for (const auto& m : in.matrices) cloud.push_back(m.real());
      ball = seb_spd<double>(cloud, cfg);
      break;
    }
    case Model::PoincareDisk:
      ball = seb_siegel_poincare<double>(in.matrices, cfg);
      break;
    case Model::KleinDisk:
      ball = seb_siegel_klein<double>(in.matrices, cfg);
      break;
  }

  emit_report("seb", ball_json(ball, trace), digest_files({input}),
              watch.elapsed_ms(), ball.total_counters, seed);
  return 0;
}

// ---------------------------------------------------------------------------
// gen

int cmd_gen(int count, Index dim, std::uint64_t seed, const std::string& domain,
            double norm_cap, const std::string& output) {
  Stopwatch watch;
  if (count < 1 || dim < 1) {
    throw ParseError("gen: count and dim must be positive");
  }
  std::mt19937_64 gen(seed);
  MatrixFile out;
  out.dim = dim;

  for (int i = 0; i < count; ++i) {
    if (domain == "disk") {
      out.model = "disk";
      out.matrices.push_back(sample_disk_point<double>(gen, dim, norm_cap));
    } else if (domain == "upper") {
      out.model = "upper";
      out.matrices.push_back(sample_upper_point<double>(gen, dim));
    } else if (domain == "spd") {
      out.model = "spd";
      out.matrices.push_back(
          sample_spd<double>(gen, dim).cast<std::complex<double>>());
    } else {
      throw ParseError("unknown domain tag: " + domain);
    }
  }

  json outputs;
  outputs["domain"] = domain;
  outputs["count"] = count;
  outputs["dim"] = dim;
  if (!output.empty()) {
    save_matrix_file(output, out);
    outputs["output"] = output;
  } else {
    outputs["matrices"] = matrix_file_to_json(out);
  }

  emit_report("gen", outputs, "-", watch.elapsed_ms(), {}, seed);
  return 0;
}

// ---------------------------------------------------------------------------
// bench

int cmd_bench(const std::string& input, int iters, int repeats, double eps) {
  Stopwatch watch;
  const MatrixFile in = load_matrix_file(input);
  for (std::size_t i = 0; i < in.matrices.size(); ++i) {
    require_disk_member(in.matrices[i], "point " + std::to_string(i));
  }

  CallCounters convert_counters;
  std::vector<CMat> klein_cloud;
  for (const auto& w : in.matrices) {
    klein_cloud.push_back(poincare_to_klein(w, &convert_counters));
  }

  SebConfig<double> cfg;
  cfg.iterations = iters;
  cfg.klein_eps = eps;

  json rows = json::array();
  bool klein_loop_sqrt_free = true;
  for (int rep = 0; rep < repeats; ++rep) {
    Stopwatch tp;
    const auto poincare = seb_siegel_poincare<double>(in.matrices, cfg);
    const double poincare_ms = tp.elapsed_ms();

    Stopwatch tk;
    const auto klein = seb_siegel_klein<double>(klein_cloud, cfg);
    const double klein_ms = tk.elapsed_ms();

    klein_loop_sqrt_free =
        klein_loop_sqrt_free && klein.loop_counters.matrix_sqrt == 0;
    rows.push_back({{"repeat", rep},
                    {"poincare_ms", poincare_ms},
                    {"klein_ms", klein_ms},
                    {"poincare_loop_counters", counters_json(poincare.loop_counters)},
                    {"klein_loop_counters", counters_json(klein.loop_counters)},
                    {"poincare_radius", poincare.radius},
                    {"klein_radius", klein.radius}});
  }

  json outputs;
  outputs["n"] = in.matrices.size();
  outputs["dim"] = in.dim;
  outputs["iterations"] = iters;
  outputs["rows"] = rows;
  outputs["klein_loop_sqrt_free"] = klein_loop_sqrt_free;
  if (in.dim == 1) {
    // At d=1 the three hyperbolic readings agree; flag the sanity check.
    double max_gap = 0.0;
    for (std::size_t i = 0; i < in.matrices.size(); ++i) {
      for (std::size_t j = i + 1; j < in.matrices.size(); ++j) {
        const double dp = dist_kobayashi(in.matrices[i], in.matrices[j]);
        const double dk = dist_klein_exact(klein_cloud[i], klein_cloud[j]);
        max_gap = std::max(max_gap, std::abs(dp - dk));
      }
    }
    outputs["d1_sanity_max_gap"] = max_gap;
    outputs["d1_sanity_ok"] = max_gap <= 1e-9;
  }
  emit_report("bench", outputs, digest_files({input}), watch.elapsed_ms(),
              convert_counters.snapshot(), 0);
  if (!klein_loop_sqrt_free) {
    throw NumericalDomain("bench: the straight-segment loop performed a matrix sqrt");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometry toolkit for bounded symmetric-matrix domains"};
  app.require_subcommand(1);

  std::string model, method, file_a, file_b, from, to, input, output, domain = "disk";
  double eps = 1e-10;
  int terms = -1;
  double radius = -1.0;
  bool roundtrip = false, trace = false;
  int iters = 100, count = 1, repeats = 1;
  Index dim = 2;
  std::uint64_t seed = 1;
  double norm_cap = 0.95;

  auto* dist = app.add_subcommand("dist", "Distance between two matrices");
  dist->add_option("--model", model, "upper | poincare | klein")->required();
  dist->add_option("--method", method,
                   "upper: eig, series; poincare: phi, origin; "
                   "klein: exact, bisection, diagonal, line, origin, frobenius");
  dist->add_option("-a", file_a, "first matrix file")->required();
  dist->add_option("-b", file_b, "second matrix file");
  dist->add_option("--eps", eps, "bracket width for bisection");
  dist->add_option("--terms", terms, "series truncation order (series method)");
  dist->add_option("--radius", radius, "ball radius (frobenius method)");

  auto* convert = app.add_subcommand("convert", "Convert matrices between models");
  convert->add_option("--from", from, "upper | poincare | klein")->required();
  convert->add_option("--to", to, "upper | poincare | klein")->required();
  convert->add_option("-i", input, "input matrix file")->required();
  convert->add_option("-o", output, "output matrix file");
  convert->add_flag("--check-roundtrip", roundtrip, "verify the inverse conversion");

  auto* seb = app.add_subcommand("seb", "Approximate the smallest enclosing ball");
  seb->add_option("--model", model, "spd | poincare | klein")->required();
  seb->add_option("-i", input, "input cloud file")->required();
  seb->add_option("--iters", iters, "number of iterations");
  seb->add_option("--seed", seed, "seed echoed into the report");
  seb->add_option("--eps", eps, "distance tolerance in the straight-segment loop");
  seb->add_flag("--trace", trace, "emit per-iteration records");

  auto* gen = app.add_subcommand("gen", "Sample random domain points");
  gen->add_option("--count", count, "number of matrices");
  gen->add_option("--dim", dim, "matrix dimension");
  gen->add_option("--seed", seed, "sampler seed");
  gen->add_option("--domain", domain, "disk | upper | spd");
  gen->add_option("--norm-cap", norm_cap, "operator-norm cap for disk samples");
  gen->add_option("-o", output, "output matrix file");

  auto* bench = app.add_subcommand("bench", "Compare the two disk ball solvers");
  bench->add_option("-i", input, "input cloud file (poincare reading)")->required();
  bench->add_option("--iters", iters, "iterations per run");
  bench->add_option("--repeats", repeats, "number of timed repetitions");
  bench->add_option("--eps", eps, "distance tolerance in the straight-segment loop");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (dist->parsed()) return cmd_dist(model, method, file_a, file_b, eps, terms, radius);
    if (convert->parsed()) return cmd_convert(from, to, input, output, roundtrip);
    if (seb->parsed()) {
      if (!seb->count("--eps")) eps = 1e-8;
      return cmd_seb(model, input, iters, seed, trace, eps);
    }
    if (gen->parsed()) return cmd_gen(count, dim, seed, domain, norm_cap, output);
    if (bench->parsed()) {
      if (!bench->count("--eps")) eps = 1e-8;
      return cmd_bench(input, iters, repeats, eps);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    // Numerical failures: convergence, singularity, out-of-range spectra.
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
