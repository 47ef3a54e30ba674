#pragma once

#include <cmath>

#include "siegel/matrix_core.hpp"

namespace siegel {

/// The bounded disk domain of complex symmetric matrices with operator norm
/// below one, metrized by the translation-invariant distance built from the
/// automorphism that moves a chosen base point to the origin.

template <typename Scalar>
struct DiskMembership {
  bool member = false;
  Scalar margin = Scalar(0);  // 1 - operator norm
  Scalar symmetry_defect = Scalar(0);
};

template <typename Scalar>
DiskMembership<Scalar> membership_disk(const ComplexMatrix<Scalar>& m,
                                       Scalar symmetry_tol = Scalar(kHermitianEntryTolerance),
                                       CallCounters* counters = nullptr) {
  DiskMembership<Scalar> out;
  if (m.rows() != m.cols() || m.size() == 0) return out;
  out.symmetry_defect = (m - m.transpose()).norm();
  out.margin = Scalar(1) - operator_norm(m, Scalar(kDefaultPowerTolerance), counters);
  out.member = out.symmetry_defect <= symmetry_tol && out.margin > Scalar(0);
  return out;
}

namespace detail {

/// The translated image is symmetric analytically; symmetrize away rounding
/// and reject anything larger.
template <typename Scalar>
ComplexMatrix<Scalar> symmetrize_checked(const ComplexMatrix<Scalar>& m,
                                         const char* name,
                                         Scalar defect_tol = Scalar(1e-8)) {
  const Scalar defect = (m - m.transpose()).norm();
  if (defect > defect_tol) {
    throw NumericalDomain(std::string(name) +
                          ": result lost symmetry beyond tolerance");
  }
  return ((m + m.transpose()) / Scalar(2)).eval();
}

/// Both root factors of the translation share one spectral decomposition:
/// for symmetric W, I - cW W = conj(I - W cW), so the plus and minus half
/// powers of I - W cW determine both sides. Using a single eigenbasis keeps
/// the algebraic intertwining of the factors exact up to one decomposition's
/// residual. Counts as the usual root pair.
template <typename Scalar>
std::pair<ComplexMatrix<Scalar>, ComplexMatrix<Scalar>> translation_root_pair(
    const ComplexMatrix<Scalar>& a, CallCounters* counters, const char* name) {
  count_matrix_sqrt(counters, 2);
  const HermitianEigenDecomposition<Scalar> eig = hermitian_eigen(a);
  const Index d = a.rows();
  RealVector<Scalar> sqrt_values(d), inv_sqrt_values(d);
  for (Index i = 0; i < d; ++i) {
    if (!(eig.eigenvalues(i) > Scalar(0))) {
      throw DomainViolation(std::string(name) +
                            ": factor matrix has a nonpositive eigenvalue");
    }
    sqrt_values(i) = std::sqrt(eig.eigenvalues(i));
    inv_sqrt_values(i) = Scalar(1) / sqrt_values(i);
  }
  auto assemble = [&](const RealVector<Scalar>& mapped) {
    ComplexMatrix<Scalar> out =
        eig.eigenvectors *
        mapped.template cast<std::complex<Scalar>>().asDiagonal() *
        eig.eigenvectors.adjoint();
    return ((out + out.adjoint()) / Scalar(2)).eval();
  };
  return {assemble(inv_sqrt_values), assemble(sqrt_values)};
}

}  // namespace detail

/// Disk automorphism sending w1 to the origin:
/// (I - W1 cW1)^{-1/2} (W2 - W1) (I - cW1 W2)^{-1} (I - cW1 W1)^{1/2},
/// with cW the entrywise conjugate.
template <typename Scalar>
ComplexMatrix<Scalar> translate_phi(const ComplexMatrix<Scalar>& w1,
                                    const ComplexMatrix<Scalar>& w2,
                                    CallCounters* counters = nullptr) {
  if (w1.rows() != w2.rows() || w1.cols() != w2.cols()) {
    throw ContractViolation("translate_phi: dimension mismatch");
  }
  const Index d = w1.rows();
  const ComplexMatrix<Scalar> id = ComplexMatrix<Scalar>::Identity(d, d);
  const ComplexMatrix<Scalar> w1c = w1.conjugate();
  const auto [left, plus_root] =
      detail::translation_root_pair<Scalar>(id - w1 * w1c, counters, "translate_phi");
  const ComplexMatrix<Scalar> right = plus_root.conjugate();
  const ComplexMatrix<Scalar> cross_inv = inverse<Scalar>(id - w1c * w2);
  const ComplexMatrix<Scalar> out = left * (w2 - w1) * cross_inv * right;
  // Perturbations of any factor reach the product amplified by the norms of
  // the remaining ones, so the symmetry gate scales with the factor-norm
  // product for boundary-adjacent inputs.
  const Scalar amplification =
      std::max(Scalar(1), left.norm() * (w2 - w1).norm() * cross_inv.norm() *
                              right.norm());
  return detail::symmetrize_checked(out, "translate_phi",
                                    Scalar(1e-8) * amplification);
}

/// Distance to the origin: log((1 + ||W||_O) / (1 - ||W||_O)).
template <typename Scalar>
Scalar dist_disk_origin(const ComplexMatrix<Scalar>& w,
                        CallCounters* counters = nullptr) {
  const Scalar n = operator_norm(w, Scalar(kDefaultPowerTolerance), counters);
  if (!(n < Scalar(1))) {
    throw DomainViolation("dist_disk_origin: point is not inside the disk");
  }
  return std::log((Scalar(1) + n) / (Scalar(1) - n));
}

/// Invariant distance: move w1 to the origin, then measure the image of w2.
template <typename Scalar>
Scalar dist_kobayashi(const ComplexMatrix<Scalar>& w1,
                      const ComplexMatrix<Scalar>& w2,
                      CallCounters* counters = nullptr) {
  return dist_disk_origin<Scalar>(translate_phi(w1, w2, counters), counters);
}

namespace detail {

/// Fraction along the origin geodesic: solves
/// rho(0, alpha W) = t * rho(0, W) in closed form for the radial scaling.
template <typename Scalar>
Scalar origin_geodesic_scale(Scalar norm, Scalar t) {
  const Scalar up = std::pow(Scalar(1) + norm, t);
  const Scalar down = std::pow(Scalar(1) - norm, t);
  return (up - down) / ((up + down) * norm);
}

}  // namespace detail

/// Point at fraction t of the straight geodesic from the origin to w.
template <typename Scalar>
ComplexMatrix<Scalar> geodesic_origin(const ComplexMatrix<Scalar>& w, Scalar t,
                                      CallCounters* counters = nullptr) {
  if (t < Scalar(0) || t > Scalar(1)) {
    throw ContractViolation("geodesic_origin: t must lie in [0, 1]");
  }
  const Scalar n = operator_norm(w, Scalar(kDefaultPowerTolerance), counters);
  if (n == Scalar(0)) return ComplexMatrix<Scalar>::Zero(w.rows(), w.cols());
  if (!(n < Scalar(1))) {
    throw DomainViolation("geodesic_origin: point is not inside the disk");
  }
  return detail::origin_geodesic_scale(n, t) * w;
}

/// The unique U with translate_phi(w1, U) = v, obtained by solving the linear
/// matrix equation P (U - W1) = V Q^{-1} (I - cW1 U) for U, where
/// P = (I - W1 cW1)^{-1/2} and Q = (I - cW1 W1)^{1/2}. Both sides act by left
/// multiplication, so the system collapses to one dense solve.
template <typename Scalar>
ComplexMatrix<Scalar> phi_inverse(const ComplexMatrix<Scalar>& w1,
                                  const ComplexMatrix<Scalar>& v,
                                  CallCounters* counters = nullptr) {
  if (w1.rows() != v.rows() || w1.cols() != v.cols()) {
    throw ContractViolation("phi_inverse: dimension mismatch");
  }
  const Index d = w1.rows();
  const ComplexMatrix<Scalar> id = ComplexMatrix<Scalar>::Identity(d, d);
  const ComplexMatrix<Scalar> w1c = w1.conjugate();
  const auto [p, plus_root] =
      detail::translation_root_pair<Scalar>(id - w1 * w1c, counters, "phi_inverse");
  const ComplexMatrix<Scalar> q_inv = p.conjugate();  // (I - cW1 W1)^{-1/2}
  const ComplexMatrix<Scalar> lhs = p + v * q_inv * w1c;
  const ComplexMatrix<Scalar> lhs_inv = inverse<Scalar>(lhs);
  const ComplexMatrix<Scalar> rhs = p * w1 + v * q_inv;
  const Scalar amplification =
      std::max(Scalar(1), lhs_inv.norm() * rhs.norm());
  return detail::symmetrize_checked<Scalar>(lhs_inv * rhs, "phi_inverse",
                                            Scalar(1e-8) * amplification);
}

/// Geodesic cut between two interior points, by conjugation with the
/// translation that moves w1 to the origin.
template <typename Scalar>
ComplexMatrix<Scalar> geodesic_cut_disk(const ComplexMatrix<Scalar>& w1,
                                        const ComplexMatrix<Scalar>& w2, Scalar t,
                                        CallCounters* counters = nullptr) {
  const ComplexMatrix<Scalar> shifted = translate_phi(w1, w2, counters);
  const ComplexMatrix<Scalar> cut = geodesic_origin(shifted, t, counters);
  return phi_inverse(w1, cut, counters);
}

}  // namespace siegel
