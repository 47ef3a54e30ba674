#pragma once

#include <cmath>
#include <utility>

#include "siegel/hyperbolic_plane.hpp"
#include "siegel/matrix_core.hpp"

namespace siegel {

/// The upper matrix space: complex symmetric Z = X + iY with Y symmetric
/// positive-definite. Distances come from the eigenvalues of the matrix
/// cross-ratio of the two arguments.

template <typename Scalar>
RealMatrix<Scalar> real_component(const ComplexMatrix<Scalar>& z) {
  return z.real();
}

template <typename Scalar>
RealMatrix<Scalar> imaginary_component(const ComplexMatrix<Scalar>& z) {
  return z.imag();
}

template <typename Scalar>
struct UpperMembership {
  bool member = false;
  Scalar symmetry_defect = Scalar(0);
  Scalar min_imaginary_eigenvalue = Scalar(0);
};

template <typename Scalar>
UpperMembership<Scalar> membership_upper(const ComplexMatrix<Scalar>& z,
                                         Scalar symmetry_tol = Scalar(kHermitianEntryTolerance)) {
  UpperMembership<Scalar> out;
  if (z.rows() != z.cols() || z.size() == 0) return out;
  out.symmetry_defect = (z - z.transpose()).norm();
  const ComplexMatrix<Scalar> y = z.imag().template cast<std::complex<Scalar>>();
  const HermitianEigenDecomposition<Scalar> eig = hermitian_eigen(y);
  out.min_imaginary_eigenvalue = eig.eigenvalues.minCoeff();
  out.member = out.symmetry_defect <= symmetry_tol &&
               out.min_imaginary_eigenvalue > Scalar(0);
  return out;
}

/// Matrix cross-ratio R(Z1, Z2) = (Z1-Z2)(Z1-cZ2)^-1 (cZ1-cZ2)(cZ1-Z2)^-1,
/// where cZ denotes the entrywise conjugate.
template <typename Scalar>
ComplexMatrix<Scalar> cross_ratio(const ComplexMatrix<Scalar>& z1,
                                  const ComplexMatrix<Scalar>& z2) {
  if (z1.rows() != z2.rows() || z1.cols() != z2.cols()) {
    throw ContractViolation("cross_ratio: dimension mismatch");
  }
  const ComplexMatrix<Scalar> z1c = z1.conjugate();
  const ComplexMatrix<Scalar> z2c = z2.conjugate();
  return (z1 - z2) * inverse<Scalar>(z1 - z2c) * (z1c - z2c) * inverse<Scalar>(z1c - z2);
}

namespace detail {

/// Clamp a cross-ratio eigenvalue into [0, 1). Slightly negative or slightly
/// above-one values are rounding artifacts of boundary-adjacent inputs.
template <typename Scalar>
Scalar clamp_cross_ratio_eigenvalue(const std::complex<Scalar>& value) {
  if (std::imag(value) != Scalar(0)) {
    throw NumericalDomain(
        "cross-ratio eigenvalue has a non-negligible imaginary part; "
        "inputs are outside the domain or too close to its boundary");
  }
  Scalar r = std::real(value);
  if (r < Scalar(0)) {
    if (r > Scalar(-1e-10)) return Scalar(0);
    throw NumericalDomain("cross-ratio eigenvalue is negative beyond tolerance");
  }
  if (r >= Scalar(1)) {
    if (r < Scalar(1) + Scalar(1e-10)) return Scalar(1) - Scalar(1e-15);
    throw NumericalDomain("cross-ratio eigenvalue is >= 1 beyond tolerance");
  }
  return r;
}

}  // namespace detail

/// Geodesic distance in the upper space, computed from the spectrum of the
/// cross-ratio: sqrt(sum_i log^2((1+sqrt(r_i))/(1-sqrt(r_i)))).
template <typename Scalar>
Scalar dist_upper(const ComplexMatrix<Scalar>& z1, const ComplexMatrix<Scalar>& z2,
                  Scalar realness_tol = Scalar(kDefaultRealnessTolerance)) {
  const ComplexMatrix<Scalar> r = cross_ratio(z1, z2);
  const Spectrum<Scalar> spectrum = general_spectrum(r, realness_tol);
  Scalar sum = Scalar(0);
  for (Index i = 0; i < spectrum.values.size(); ++i) {
    const Scalar ri = detail::clamp_cross_ratio_eigenvalue(spectrum.values(i));
    const Scalar s = std::sqrt(ri);
    const Scalar term = std::log((Scalar(1) + s) / (Scalar(1) - s));
    sum += term * term;
  }
  return std::sqrt(sum);
}

/// Truncated power-series form 2*sqrt(tr(R (sum_{i=0}^{terms} R^i/(2i+1))^2)).
template <typename Scalar>
Scalar dist_upper_truncated(const ComplexMatrix<Scalar>& z1,
                            const ComplexMatrix<Scalar>& z2, int terms) {
  if (terms < 0) {
    throw ContractViolation("dist_upper_truncated: terms must be nonnegative");
  }
  const ComplexMatrix<Scalar> r = cross_ratio(z1, z2);
  const Index d = r.rows();
  ComplexMatrix<Scalar> partial = ComplexMatrix<Scalar>::Zero(d, d);
  ComplexMatrix<Scalar> power = ComplexMatrix<Scalar>::Identity(d, d);
  for (int i = 0; i <= terms; ++i) {
    partial += power / Scalar(2 * i + 1);
    if (i < terms) power = (power * r).eval();
  }
  const std::complex<Scalar> trace = (r * partial * partial).trace();
  return Scalar(2) * std::sqrt(std::max(std::real(trace), Scalar(0)));
}

/// Adaptive variant: accumulate series terms until |tr(R^i/(2i+1))| < delta.
/// Returns the distance and the number of terms used.
template <typename Scalar>
std::pair<Scalar, int> dist_upper_truncated_adaptive(
    const ComplexMatrix<Scalar>& z1, const ComplexMatrix<Scalar>& z2,
    Scalar delta = Scalar(1e-12), int term_cap = 10000) {
  const ComplexMatrix<Scalar> r = cross_ratio(z1, z2);
  const Index d = r.rows();
  ComplexMatrix<Scalar> partial = ComplexMatrix<Scalar>::Zero(d, d);
  ComplexMatrix<Scalar> power = ComplexMatrix<Scalar>::Identity(d, d);
  int used = 0;
  for (int i = 0; i <= term_cap; ++i) {
    const ComplexMatrix<Scalar> term = power / Scalar(2 * i + 1);
    partial += term;
    used = i;
    if (std::abs(term.trace()) < delta) break;
    power = (power * r).eval();
  }
  const std::complex<Scalar> trace = (r * partial * partial).trace();
  return {Scalar(2) * std::sqrt(std::max(std::real(trace), Scalar(0))), used};
}

/// Affine-invariant distance on the positive-definite cone:
/// sqrt(sum_i log^2 lambda_i(P1^-1 P2)).
template <typename Scalar>
Scalar spd_dist(const RealMatrix<Scalar>& p1, const RealMatrix<Scalar>& p2) {
  if (p1.rows() != p2.rows() || p1.cols() != p2.cols()) {
    throw ContractViolation("spd_dist: dimension mismatch");
  }
  const ComplexMatrix<Scalar> c1 = p1.template cast<std::complex<Scalar>>();
  const ComplexMatrix<Scalar> c2 = p2.template cast<std::complex<Scalar>>();
  const ComplexMatrix<Scalar> root = hermitian_inv_sqrt(c1);
  const HermitianEigenDecomposition<Scalar> eig = hermitian_eigen<Scalar>(root * c2 * root);
  Scalar sum = Scalar(0);
  for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
    if (!(eig.eigenvalues(i) > Scalar(0))) {
      throw DomainViolation("spd_dist: inputs are not positive-definite");
    }
    const Scalar t = std::log(eig.eigenvalues(i));
    sum += t * t;
  }
  return std::sqrt(sum);
}

/// Point at fraction t of the geodesic from P1 to P2 on the SPD cone:
/// P1^{1/2} (P1^{-1/2} P2 P1^{-1/2})^t P1^{1/2}.
template <typename Scalar>
RealMatrix<Scalar> spd_geodesic_cut(const RealMatrix<Scalar>& p1,
                                    const RealMatrix<Scalar>& p2, Scalar t) {
  if (t < Scalar(0) || t > Scalar(1)) {
    throw ContractViolation("spd_geodesic_cut: t must lie in [0, 1]");
  }
  const ComplexMatrix<Scalar> c1 = p1.template cast<std::complex<Scalar>>();
  const ComplexMatrix<Scalar> c2 = p2.template cast<std::complex<Scalar>>();
  const ComplexMatrix<Scalar> half = hermitian_sqrt(c1);
  const ComplexMatrix<Scalar> inv_half = hermitian_inv_sqrt(c1);
  const ComplexMatrix<Scalar> inner = hermitian_pow<Scalar>(inv_half * c2 * inv_half, t);
  const ComplexMatrix<Scalar> cut = half * inner * half;
  RealMatrix<Scalar> out = cut.real();
  return ((out + out.transpose()) / Scalar(2)).eval();
}

/// Block map Z -> (AZ + B)(CZ + D)^-1 with real d x d blocks satisfying
/// A B^T = B A^T, C D^T = D C^T, A D^T - B C^T = I.
template <typename Scalar>
struct SymplecticMap {
  RealMatrix<Scalar> A, B, C, D;

  static SymplecticMap identity(Index d) {
    return {RealMatrix<Scalar>::Identity(d, d), RealMatrix<Scalar>::Zero(d, d),
            RealMatrix<Scalar>::Zero(d, d), RealMatrix<Scalar>::Identity(d, d)};
  }
};

template <typename Scalar>
struct SymplecticCheck {
  bool symplectic = false;
  Scalar residual_ab = Scalar(0);    // ||A B^T - B A^T||_F
  Scalar residual_cd = Scalar(0);    // ||C D^T - D C^T||_F
  Scalar residual_adbc = Scalar(0);  // ||A D^T - B C^T - I||_F
  Scalar max_residual() const {
    return std::max(residual_ab, std::max(residual_cd, residual_adbc));
  }
};

template <typename Scalar>
SymplecticCheck<Scalar> is_symplectic(const SymplecticMap<Scalar>& s,
                                      Scalar tol = Scalar(1e-9)) {
  SymplecticCheck<Scalar> out;
  const Index d = s.A.rows();
  out.residual_ab = (s.A * s.B.transpose() - s.B * s.A.transpose()).norm();
  out.residual_cd = (s.C * s.D.transpose() - s.D * s.C.transpose()).norm();
  out.residual_adbc =
      (s.A * s.D.transpose() - s.B * s.C.transpose() - RealMatrix<Scalar>::Identity(d, d))
          .norm();
  out.symplectic = out.max_residual() <= tol;
  return out;
}

/// Group inverse: (A, B, C, D) -> (D^T, -B^T, -C^T, A^T).
template <typename Scalar>
SymplecticMap<Scalar> symplectic_inverse(const SymplecticMap<Scalar>& s) {
  return {s.D.transpose(), -s.B.transpose(), -s.C.transpose(), s.A.transpose()};
}

/// Composition by 2d x 2d block multiplication; apply(compose(s1, s2), Z)
/// equals apply(s1, apply(s2, Z)). Constraint drift is reported by
/// is_symplectic, never silently repaired.
template <typename Scalar>
SymplecticMap<Scalar> symplectic_compose(const SymplecticMap<Scalar>& s1,
                                         const SymplecticMap<Scalar>& s2) {
  return {s1.A * s2.A + s1.B * s2.C, s1.A * s2.B + s1.B * s2.D,
          s1.C * s2.A + s1.D * s2.C, s1.C * s2.B + s1.D * s2.D};
}

template <typename Scalar>
ComplexMatrix<Scalar> symplectic_apply(const SymplecticMap<Scalar>& s,
                                       const ComplexMatrix<Scalar>& z) {
  const ComplexMatrix<Scalar> a = s.A.template cast<std::complex<Scalar>>();
  const ComplexMatrix<Scalar> b = s.B.template cast<std::complex<Scalar>>();
  const ComplexMatrix<Scalar> c = s.C.template cast<std::complex<Scalar>>();
  const ComplexMatrix<Scalar> d = s.D.template cast<std::complex<Scalar>>();
  return (a * z + b) * inverse<Scalar>(c * z + d);
}

/// The symplectic translation sending Z = X + iY to iI, built from the
/// symmetric square root of Y: Z' -> Y^{-1/2} (Z' - X) Y^{-1/2}.
template <typename Scalar>
SymplecticMap<Scalar> translation_to_origin_upper(const ComplexMatrix<Scalar>& z) {
  const Index d = z.rows();
  const RealMatrix<Scalar> x = z.real();
  const ComplexMatrix<Scalar> y = z.imag().template cast<std::complex<Scalar>>();
  const RealMatrix<Scalar> y_inv_half = hermitian_inv_sqrt(y).real();
  const RealMatrix<Scalar> y_half = hermitian_sqrt(y).real();
  SymplecticMap<Scalar> out;
  out.A = y_inv_half;
  out.B = -y_inv_half * x;
  out.C = RealMatrix<Scalar>::Zero(d, d);
  out.D = y_half;
  return out;
}

/// Cayley transform of the upper space onto the bounded disk domain;
/// iI maps to the zero matrix.
template <typename Scalar>
ComplexMatrix<Scalar> cayley_upper_to_disk(const ComplexMatrix<Scalar>& z) {
  const Index d = z.rows();
  const ComplexMatrix<Scalar> eye =
      ComplexMatrix<Scalar>::Identity(d, d) * std::complex<Scalar>(0, 1);
  return (z - eye) * inverse<Scalar>(z + eye);
}

template <typename Scalar>
ComplexMatrix<Scalar> cayley_disk_to_upper(const ComplexMatrix<Scalar>& w) {
  const Index d = w.rows();
  const ComplexMatrix<Scalar> id = ComplexMatrix<Scalar>::Identity(d, d);
  return std::complex<Scalar>(0, 1) * (id + w) * inverse<Scalar>(id - w);
}

}  // namespace siegel
