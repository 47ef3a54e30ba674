#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>

#include "siegel/core.hpp"

namespace siegel {

inline constexpr double kDefaultPowerTolerance = 1e-12;
inline constexpr int kPowerIterationCap = 10000;
inline constexpr int kPowerMaxRestarts = 3;
inline constexpr std::uint64_t kPowerSeed = 0x9e3779b97f4a7c15ull;
inline constexpr double kDefaultPivotTolerance = 1e-13;
inline constexpr double kDefaultRealnessTolerance = 1e-8;
inline constexpr double kHermitianEntryTolerance = 1e-10;

template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real frobenius_norm(
    const Eigen::MatrixBase<Derived>& m) {
  return m.norm();
}

/// Checked matrix product.
template <typename Scalar>
ComplexMatrix<Scalar> multiply(const ComplexMatrix<Scalar>& a,
                               const ComplexMatrix<Scalar>& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream oss;
    oss << "multiply: inner dimensions disagree (" << a.rows() << "x" << a.cols()
        << " times " << b.rows() << "x" << b.cols() << ")";
    throw ContractViolation(oss.str());
  }
  return a * b;
}

/// Inverse by LU with partial pivoting. Throws SingularMatrix when the
/// smallest pivot magnitude falls below `pivot_tol`.
template <typename Scalar>
ComplexMatrix<Scalar> inverse(const ComplexMatrix<Scalar>& m,
                              Scalar pivot_tol = Scalar(kDefaultPivotTolerance)) {
  if (m.rows() != m.cols()) {
    throw ContractViolation("inverse: matrix must be square");
  }
  Eigen::PartialPivLU<ComplexMatrix<Scalar>> lu(m);
  const Scalar min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(min_pivot > pivot_tol)) {
    std::ostringstream oss;
    oss << "inverse: matrix is singular or nearly singular (pivot magnitude "
        << static_cast<double>(min_pivot) << ")";
    throw SingularMatrix(oss.str(), static_cast<double>(min_pivot));
  }
  return lu.inverse();
}

/// Solve m * x = rhs with the same pivot guard as inverse().
template <typename Scalar>
ComplexMatrix<Scalar> solve(const ComplexMatrix<Scalar>& m,
                            const ComplexMatrix<Scalar>& rhs,
                            Scalar pivot_tol = Scalar(kDefaultPivotTolerance)) {
  if (m.rows() != m.cols() || m.cols() != rhs.rows()) {
    throw ContractViolation("solve: dimension mismatch");
  }
  Eigen::PartialPivLU<ComplexMatrix<Scalar>> lu(m);
  const Scalar min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(min_pivot > pivot_tol)) {
    throw SingularMatrix("solve: matrix is singular or nearly singular",
                         static_cast<double>(min_pivot));
  }
  return lu.solve(rhs);
}

/// True iff ||M - M^T||_F <= tol. Transpose, not conjugate transpose.
template <typename Derived>
bool is_symmetric_complex(
    const Eigen::MatrixBase<Derived>& m,
    typename Eigen::NumTraits<typename Derived::Scalar>::Real tol =
        kHermitianEntryTolerance) {
  if (m.rows() != m.cols()) return false;
  return (m - m.transpose()).norm() <= tol;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m,
                  typename Eigen::NumTraits<typename Derived::Scalar>::Real
                      entry_tol = kHermitianEntryTolerance) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= entry_tol;
}

struct PowerOptions {
  double tolerance = kDefaultPowerTolerance;  // iterate-difference / residual target
  int iteration_cap = kPowerIterationCap;
  int max_restarts = kPowerMaxRestarts;
  std::uint64_t seed = kPowerSeed;
  // Return the best pair found instead of throwing on non-convergence;
  // used by callers that refine the result afterwards.
  bool best_effort = false;
};

template <typename Scalar>
struct DominantEigenPair {
  Scalar value = Scalar(0);
  ComplexVector<Scalar> vector;
  Scalar residual = Scalar(0);  // ||M v - value * v||_2
  int iterations = 0;
};

namespace detail {

template <typename Scalar>
ComplexVector<Scalar> random_unit_vector(Index d, std::mt19937_64& gen) {
  std::normal_distribution<Scalar> normal(Scalar(0), Scalar(1));
  ComplexVector<Scalar> v(d);
  for (Index i = 0; i < d; ++i) {
    const Scalar re = normal(gen);
    const Scalar im = normal(gen);
    v(i) = std::complex<Scalar>(re, im);
  }
  const Scalar n = v.norm();
  if (n > Scalar(0)) v /= n;
  else v(0) = std::complex<Scalar>(1, 0);
  return v;
}

/// Rayleigh-Ritz refinement of a candidate pair on span{x, Mx - lambda x}.
/// Resolves sign-alternating and clustered top pairs that stall the plain
/// power iteration.
template <typename Scalar>
DominantEigenPair<Scalar> ritz_refine(const ComplexMatrix<Scalar>& m,
                                      const ComplexVector<Scalar>& x) {
  using Complex = std::complex<Scalar>;
  DominantEigenPair<Scalar> out;
  ComplexVector<Scalar> y = m * x;
  out.value = std::real(x.dot(y));
  out.vector = x;
  out.residual = (y - Complex(out.value) * x).norm();

  ComplexVector<Scalar> r = y - Complex(out.value) * x;
  const Scalar rn = r.norm();
  if (rn <= std::numeric_limits<Scalar>::min()) return out;
  const ComplexVector<Scalar> q = r / rn;
  const ComplexVector<Scalar> z = m * q;

  const Scalar b11 = out.value;
  const Complex b12 = x.dot(z);
  const Scalar b22 = std::real(q.dot(z));
  const Scalar mid = (b11 + b22) / Scalar(2);
  const Scalar half = (b11 - b22) / Scalar(2);
  const Scalar disc = std::sqrt(half * half + std::norm(b12));
  const Scalar mu_hi = mid + disc;
  const Scalar mu_lo = mid - disc;
  const Scalar mu = std::abs(mu_hi) >= std::abs(mu_lo) ? mu_hi : mu_lo;

  // Eigenvector of [[b11, b12], [conj(b12), b22]] for eigenvalue mu.
  Complex c1, c2;
  if (std::abs(mu - b11) >= std::abs(mu - b22)) {
    c1 = b12;
    c2 = Complex(mu - b11);
  } else {
    c1 = Complex(mu - b22);
    c2 = std::conj(b12);
  }
  const Scalar cn = std::sqrt(std::norm(c1) + std::norm(c2));
  if (cn <= std::numeric_limits<Scalar>::min()) return out;
  c1 /= cn;
  c2 /= cn;

  ComplexVector<Scalar> v = c1 * x + c2 * q;
  const Scalar vn = v.norm();
  if (vn <= std::numeric_limits<Scalar>::min()) return out;
  v /= vn;
  const ComplexVector<Scalar> w = m * v;
  const Scalar lam = std::real(v.dot(w));
  const Scalar res = (w - Complex(lam) * v).norm();
  if (res < out.residual) {
    out.value = lam;
    out.vector = v;
    out.residual = res;
  }
  return out;
}

}  // namespace detail

/// Dominant eigenpair of a Hermitian matrix by the normalized power method.
/// Stops when successive normalized iterates (phase-aligned) differ by less
/// than the tolerance or the eigenpair residual drops below tolerance*||M||_F.
/// Stalled runs are Ritz-refined; a fresh random start vector is tried at
/// most `max_restarts` times before giving up.
template <typename Scalar>
DominantEigenPair<Scalar> dominant_hermitian_eigenpair(
    const ComplexMatrix<Scalar>& m, const PowerOptions& opts = {},
    const ComplexVector<Scalar>* warm_start = nullptr) {
  using Complex = std::complex<Scalar>;
  const Index d = m.rows();
  if (d != m.cols()) {
    throw ContractViolation("dominant_hermitian_eigenpair: matrix must be square");
  }
  if (!(opts.tolerance > 0)) {
    throw ContractViolation("dominant_hermitian_eigenpair: tolerance must be positive");
  }

  DominantEigenPair<Scalar> out;
  if (d == 1) {
    out.value = std::real(m(0, 0));
    out.vector = ComplexVector<Scalar>::Ones(1);
    out.residual = std::abs(m(0, 0) - Complex(out.value));
    return out;
  }

  const Scalar scale = m.norm();
  if (scale == Scalar(0)) {
    out.vector = ComplexVector<Scalar>::Zero(d);
    out.vector(0) = Complex(1, 0);
    return out;
  }
  const Scalar residual_target = Scalar(opts.tolerance) * scale;
  // For Hermitian M the dominant eigenvalue obeys |lambda| >= ||M||_F/sqrt(d);
  // a converged pair far below that is an unlucky start locked in a minor
  // eigenspace, never the answer.
  const Scalar dominance_floor = scale / (Scalar(4) * std::sqrt(Scalar(d)));

  std::mt19937_64 gen(opts.seed);
  ComplexVector<Scalar> x;
  if (warm_start && warm_start->size() == d && warm_start->norm() > Scalar(0.5)) {
    // Blend in a seeded perturbation: a warm start that is exactly an
    // eigenvector of a minor eigenvalue (common for diagonal matrices when
    // the dominant branch switches along a parameter line) would otherwise
    // lock the iteration out of the dominant eigenspace.
    x = *warm_start / warm_start->norm() +
        Scalar(0.125) * detail::random_unit_vector<Scalar>(d, gen);
    x /= x.norm();
  } else {
    x = detail::random_unit_vector<Scalar>(d, gen);
  }

  DominantEigenPair<Scalar> best;
  best.residual = std::numeric_limits<Scalar>::infinity();
  DominantEigenPair<Scalar> best_any;  // fallback ignoring the dominance floor
  best_any.residual = std::numeric_limits<Scalar>::infinity();
  int total_iterations = 0;
  ComplexVector<Scalar> y(d), xn(d);

  for (int attempt = 0; attempt <= opts.max_restarts; ++attempt) {
    Scalar window_residual = std::numeric_limits<Scalar>::infinity();
    bool locked_minor = false;
    for (int iter = 0; iter < opts.iteration_cap; ++iter) {
      ++total_iterations;
      y.noalias() = m * x;
      const Scalar lambda = std::real(x.dot(y));
      const Scalar residual = (y - Complex(lambda) * x).norm();
      const bool dominant = std::abs(lambda) >= dominance_floor;
      if (dominant && residual < best.residual) {
        best.value = lambda;
        best.vector = x;
        best.residual = residual;
      }
      if (residual < best_any.residual) {
        best_any.value = lambda;
        best_any.vector = x;
        best_any.residual = residual;
      }
      if (residual <= residual_target) {
        if (dominant) {
          best.iterations = total_iterations;
          return best;
        }
        locked_minor = true;  // converged inside a minor eigenspace
        break;
      }
      const Scalar yn = y.norm();
      if (yn <= scale * std::numeric_limits<Scalar>::epsilon()) {
        locked_minor = true;  // start vector fell into the kernel
        break;
      }
      xn = y / yn;
      const Complex phase = x.dot(xn);
      if (std::abs(phase) > Scalar(0)) xn *= std::conj(phase) / std::abs(phase);
      const Scalar delta = (xn - x).norm();
      x.swap(xn);
      if (delta < Scalar(opts.tolerance)) break;
      if ((iter & 0x3f) == 0x3f) {
        if (residual > Scalar(0.25) * window_residual) {
          // Slow geometric progress means the top of the spectrum is
          // clustered. One Rayleigh-Ritz step on span{x, Mx - lambda x}
          // separates the current pair; repeating it every window strips the
          // cluster one member at a time.
          const DominantEigenPair<Scalar> refined = detail::ritz_refine(m, x);
          if (refined.residual < residual) {
            x = refined.vector;
            if (std::abs(refined.value) >= dominance_floor &&
                refined.residual < best.residual) {
              best = refined;
            }
            if (refined.residual <= residual_target &&
                std::abs(refined.value) >= dominance_floor) {
              best.iterations = total_iterations;
              return best;
            }
          }
        }
        window_residual = residual;
      }
    }

    if (!locked_minor) {
      DominantEigenPair<Scalar> refined = detail::ritz_refine(m, x);
      if (std::abs(refined.value) >= dominance_floor &&
          refined.residual < best.residual) {
        best = refined;
      }
      best.iterations = total_iterations;
      if (best.residual <= residual_target) return best;
      // A residual this small only survives on a tightly clustered top, where
      // any vector of the cluster subspace serves.
      if (best.residual <= Scalar(1e-7) * scale) return best;
    }
    if (attempt < opts.max_restarts) x = detail::random_unit_vector<Scalar>(d, gen);
  }

  if (opts.best_effort) {
    if (best.residual <= best_any.residual) return best;
    best_any.iterations = total_iterations;
    return best_any;
  }
  if (best.residual <= Scalar(1e-4) * scale) return best;
  std::ostringstream oss;
  oss << "power iteration did not converge after " << total_iterations
      << " iterations (best residual " << static_cast<double>(best.residual)
      << ", scale " << static_cast<double>(scale) << ")";
  throw NumericalConvergence(oss.str());
}

template <typename Scalar>
struct HermitianEigenDecomposition {
  RealVector<Scalar> eigenvalues;      // sorted by decreasing magnitude
  ComplexMatrix<Scalar> eigenvectors;  // unit-norm columns
  Scalar residual = Scalar(0);         // ||M - sum_i lambda_i v_i v_i^H||_F
};

/// Full spectrum of a Hermitian matrix by repeated power iteration with
/// rank-one deflation M <- M - lambda v v^H.
template <typename Scalar>
HermitianEigenDecomposition<Scalar> hermitian_eigen(
    const ComplexMatrix<Scalar>& m, Scalar tol = Scalar(kDefaultPowerTolerance),
    const PowerOptions& base_opts = {}) {
  const Index d = m.rows();
  if (d != m.cols()) {
    throw ContractViolation("hermitian_eigen: matrix must be square");
  }
  if (!is_hermitian(m)) {
    throw DomainViolation("hermitian_eigen: matrix is not Hermitian within tolerance");
  }

  PowerOptions opts = base_opts;
  opts.tolerance = static_cast<double>(tol);

  HermitianEigenDecomposition<Scalar> out;
  out.eigenvalues.resize(d);
  out.eigenvectors.resize(d, d);

  ComplexMatrix<Scalar> deflated = m;
  for (Index l = 0; l < d; ++l) {
    PowerOptions stage_opts = opts;
    // Decorrelate the stage start vectors; a shared seed would hand stage
    // l+1 exactly the vector deflated at stage l whenever a stage converges
    // on its start.
    stage_opts.seed = opts.seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(l + 1);
    // The rotation sweeps below finish the pairs from any complete basis, so
    // a stage may hand over its best iterate instead of grinding a clustered
    // top to full precision.
    stage_opts.iteration_cap = std::min(stage_opts.iteration_cap, 256);
    stage_opts.max_restarts = std::min(stage_opts.max_restarts, 1);
    stage_opts.best_effort = true;
    const DominantEigenPair<Scalar> pair = dominant_hermitian_eigenpair(deflated, stage_opts);
    out.eigenvalues(l) = pair.value;
    out.eigenvectors.col(l) = pair.vector;
    deflated -= std::complex<Scalar>(pair.value) * pair.vector * pair.vector.adjoint();
    deflated = ((deflated + deflated.adjoint()) / Scalar(2)).eval();
  }

  // Deflation stages accepted on a clustered top leave the basis slightly
  // oblique and the couplings at the stage-acceptance level. Orthonormalize
  // and run plane rotations on the projected matrix; it is near-diagonal, so
  // the sweeps converge quadratically and restore machine-level pairs.
  {
    Eigen::HouseholderQR<ComplexMatrix<Scalar>> qr(out.eigenvectors);
    ComplexMatrix<Scalar> q = qr.householderQ();
    ComplexMatrix<Scalar> b = q.adjoint() * m * q;
    b = ((b + b.adjoint()) / Scalar(2)).eval();
    const Scalar off_target =
        Scalar(32) * std::numeric_limits<Scalar>::epsilon() * (m.norm() + Scalar(1));
    for (int sweep = 0; sweep < 12; ++sweep) {
      Scalar off = Scalar(0);
      for (Index p = 0; p < d; ++p) {
        for (Index qd = p + 1; qd < d; ++qd) off += std::norm(b(p, qd));
      }
      if (std::sqrt(Scalar(2) * off) <= off_target) break;
      for (Index p = 0; p < d; ++p) {
        for (Index qq = p + 1; qq < d; ++qq) {
          if (std::abs(b(p, qq)) == Scalar(0)) continue;
          Eigen::JacobiRotation<std::complex<Scalar>> rot;
          rot.makeJacobi(std::real(b(p, p)), b(p, qq), std::real(b(qq, qq)));
          b.applyOnTheLeft(p, qq, rot.adjoint());
          b.applyOnTheRight(p, qq, rot);
          q.applyOnTheRight(p, qq, rot);
        }
      }
    }
    for (Index i = 0; i < d; ++i) {
      out.eigenvalues(i) = std::real(b(i, i));
      out.eigenvectors.col(i) = q.col(i);
    }
  }

  std::vector<Index> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), Index(0));
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return std::abs(out.eigenvalues(a)) > std::abs(out.eigenvalues(b));
  });
  RealVector<Scalar> values(d);
  ComplexMatrix<Scalar> vectors(d, d);
  for (Index i = 0; i < d; ++i) {
    values(i) = out.eigenvalues(order[static_cast<std::size_t>(i)]);
    vectors.col(i) = out.eigenvectors.col(order[static_cast<std::size_t>(i)]);
  }
  out.eigenvalues = std::move(values);
  out.eigenvectors = std::move(vectors);

  ComplexMatrix<Scalar> reconstruction = ComplexMatrix<Scalar>::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    reconstruction += std::complex<Scalar>(out.eigenvalues(i)) *
                      out.eigenvectors.col(i) * out.eigenvectors.col(i).adjoint();
  }
  out.residual = (m - reconstruction).norm();
  return out;
}

/// Largest singular value, as the square-rooted dominant eigenvalue of M^H M.
template <typename Scalar>
Scalar operator_norm(const ComplexMatrix<Scalar>& m,
                     Scalar tol = Scalar(kDefaultPowerTolerance),
                     CallCounters* counters = nullptr,
                     ComplexVector<Scalar>* warm_start = nullptr) {
  if (!(tol > Scalar(0))) {
    throw ContractViolation("operator_norm: tolerance must be positive");
  }
  count_operator_norm(counters);
  if (m.size() == 0) return Scalar(0);
  const Scalar fro = m.norm();
  if (fro == Scalar(0)) return Scalar(0);

  PowerOptions opts;
  opts.tolerance = static_cast<double>(tol);
  const ComplexMatrix<Scalar> gram = m.adjoint() * m;
  const DominantEigenPair<Scalar> top =
      dominant_hermitian_eigenpair(gram, opts, warm_start);
  if (warm_start) *warm_start = top.vector;
  const Scalar sigma = std::sqrt(std::max(top.value, Scalar(0)));
  return std::min(sigma, fro);
}

template <typename Scalar>
struct Spectrum {
  ComplexVector<Scalar> values;  // sorted by decreasing modulus
  Scalar realness_tolerance = Scalar(kDefaultRealnessTolerance);
};

/// All eigenvalues of a general complex matrix (Hessenberg reduction followed
/// by shifted QR, via Eigen's complex Schur decomposition). Eigenvalues whose
/// imaginary part is below realness_tol*(1+|Re|) are rounded to the real axis.
template <typename Scalar>
Spectrum<Scalar> general_spectrum(const ComplexMatrix<Scalar>& m,
                                  Scalar realness_tol = Scalar(kDefaultRealnessTolerance)) {
  if (m.rows() != m.cols()) {
    throw ContractViolation("general_spectrum: matrix must be square");
  }
  Eigen::ComplexEigenSolver<ComplexMatrix<Scalar>> solver(m, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalConvergence("general_spectrum: QR iteration did not converge");
  }
  Spectrum<Scalar> out;
  out.realness_tolerance = realness_tol;
  out.values = solver.eigenvalues();
  for (Index i = 0; i < out.values.size(); ++i) {
    const Scalar re = std::real(out.values(i));
    const Scalar im = std::imag(out.values(i));
    if (std::abs(im) < realness_tol * (Scalar(1) + std::abs(re))) {
      out.values(i) = std::complex<Scalar>(re, 0);
    }
  }
  std::vector<Index> order(static_cast<std::size_t>(out.values.size()));
  std::iota(order.begin(), order.end(), Index(0));
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return std::abs(out.values(a)) > std::abs(out.values(b));
  });
  ComplexVector<Scalar> sorted(out.values.size());
  for (Index i = 0; i < out.values.size(); ++i) {
    sorted(i) = out.values(order[static_cast<std::size_t>(i)]);
  }
  out.values = std::move(sorted);
  return out;
}

namespace detail {

template <typename Scalar, typename F>
ComplexMatrix<Scalar> hermitian_matrix_function(const ComplexMatrix<Scalar>& m,
                                                F&& f, bool require_positive,
                                                const char* name,
                                                Scalar tol = Scalar(kDefaultPowerTolerance)) {
  const HermitianEigenDecomposition<Scalar> eig = hermitian_eigen(m, tol);
  const Index d = m.rows();
  if (require_positive) {
    for (Index i = 0; i < d; ++i) {
      if (!(eig.eigenvalues(i) > Scalar(0))) {
        std::ostringstream oss;
        oss << name << ": matrix has a nonpositive eigenvalue "
            << static_cast<double>(eig.eigenvalues(i));
        throw DomainViolation(oss.str());
      }
    }
  }
  RealVector<Scalar> mapped(d);
  for (Index i = 0; i < d; ++i) mapped(i) = f(eig.eigenvalues(i));
  ComplexMatrix<Scalar> out =
      eig.eigenvectors *
      mapped.template cast<std::complex<Scalar>>().asDiagonal() *
      eig.eigenvectors.adjoint();
  return ((out + out.adjoint()) / Scalar(2)).eval();
}

}  // namespace detail

template <typename Scalar>
ComplexMatrix<Scalar> hermitian_sqrt(const ComplexMatrix<Scalar>& m,
                                     CallCounters* counters = nullptr,
                                     Scalar tol = Scalar(kDefaultPowerTolerance)) {
  count_matrix_sqrt(counters);
  return detail::hermitian_matrix_function<Scalar>(
      m, [](Scalar x) { return std::sqrt(x); }, true, "hermitian_sqrt", tol);
}

template <typename Scalar>
ComplexMatrix<Scalar> hermitian_inv_sqrt(const ComplexMatrix<Scalar>& m,
                                         CallCounters* counters = nullptr,
                                         Scalar tol = Scalar(kDefaultPowerTolerance)) {
  count_matrix_sqrt(counters);
  return detail::hermitian_matrix_function<Scalar>(
      m, [](Scalar x) { return Scalar(1) / std::sqrt(x); }, true,
      "hermitian_inv_sqrt", tol);
}

template <typename Scalar>
ComplexMatrix<Scalar> hermitian_exp(const ComplexMatrix<Scalar>& m,
                                    Scalar tol = Scalar(kDefaultPowerTolerance)) {
  return detail::hermitian_matrix_function<Scalar>(
      m, [](Scalar x) { return std::exp(x); }, false, "hermitian_exp", tol);
}

template <typename Scalar>
ComplexMatrix<Scalar> hermitian_log(const ComplexMatrix<Scalar>& m,
                                    Scalar tol = Scalar(kDefaultPowerTolerance)) {
  return detail::hermitian_matrix_function<Scalar>(
      m, [](Scalar x) { return std::log(x); }, true, "hermitian_log", tol);
}

template <typename Scalar>
ComplexMatrix<Scalar> hermitian_pow(const ComplexMatrix<Scalar>& m, Scalar t,
                                    Scalar tol = Scalar(kDefaultPowerTolerance)) {
  return detail::hermitian_matrix_function<Scalar>(
      m, [t](Scalar x) { return std::pow(x, t); }, true, "hermitian_pow", tol);
}

}  // namespace siegel
