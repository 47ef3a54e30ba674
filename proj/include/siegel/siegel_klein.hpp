#pragma once

#include <cmath>
#include <limits>
#include <optional>

#include "siegel/siegel_poincare.hpp"

namespace siegel {

/// The Hilbert geometry of the bounded symmetric-matrix disk, with constant
/// one half so that the d=1 case has unit negative curvature. Distances come
/// from the two intersections of the chord through the arguments with the
/// boundary surface ||K||_O = 1; the intersections are bracketed by certified
/// bisection, which yields two-sided distance bounds.

inline constexpr double kBisectionNormTolerance = 1e-12;
inline constexpr double kDefaultBracketEps = 1e-10;

/// One-dimensional Hilbert distance from the two boundary parameters of the
/// chord through parameters 0 and 1.
template <typename Scalar>
Scalar hilbert_distance_1d(Scalar alpha_minus, Scalar alpha_plus) {
  if (!(alpha_minus < Scalar(0)) || !(alpha_plus > Scalar(1))) {
    throw ContractViolation(
        "hilbert_distance_1d: need alpha_minus < 0 and alpha_plus > 1");
  }
  return Scalar(0.5) * std::log(alpha_plus * (Scalar(1) - alpha_minus) /
                                (std::abs(alpha_minus) * (alpha_plus - Scalar(1))));
}

template <typename Scalar>
struct Interval {
  Scalar lo = Scalar(0);
  Scalar hi = Scalar(0);
  Scalar width() const { return hi - lo; }
  Scalar midpoint() const { return (lo + hi) / Scalar(2); }
};

/// Certified enclosures of the two chord/boundary parameters.
/// alpha_minus: lo is outside the domain (norm > 1), hi inside (norm < 1).
/// alpha_plus:  lo is inside, hi outside.
template <typename Scalar>
struct BoundaryBracket {
  Interval<Scalar> alpha_minus;
  Interval<Scalar> alpha_plus;
  Scalar width() const {
    return std::max(alpha_minus.width(), alpha_plus.width());
  }
};

template <typename Scalar>
struct DistanceBounds {
  Scalar lower = Scalar(0);
  Scalar upper = Scalar(0);
  std::optional<BoundaryBracket<Scalar>> bracket;
  Scalar midpoint() const {
    if (std::isinf(upper)) return lower;
    return (lower + upper) / Scalar(2);
  }
};

/// Stateful bisection along the line K1 + alpha (K2 - K1). Keeps certified
/// inside/outside brackets for both boundary crossings and reuses the last
/// converged singular vector of each side to warm-start the operator-norm
/// power iterations.
template <typename Scalar>
class BoundarySearch {
 public:
  BoundarySearch(const ComplexMatrix<Scalar>& k1, const ComplexMatrix<Scalar>& k2,
                 CallCounters* counters = nullptr)
      : base_(k1), direction_(k2 - k1), counters_(counters) {
    if (k1.rows() != k2.rows() || k1.cols() != k2.cols()) {
      throw ContractViolation("BoundarySearch: dimension mismatch");
    }
    if (direction_.norm() == Scalar(0)) {
      throw ContractViolation("BoundarySearch: the two points coincide");
    }
    dim_root_ = std::sqrt(Scalar(k1.rows()));
    // Any |alpha| below this is certainly inside: the triangle inequality
    // gives ||K1 + alpha D||_O <= ||K1||_O + |alpha| ||D||_O.
    const Scalar n1 = operator_norm(base_, Scalar(kBisectionNormTolerance), counters_);
    if (!(n1 < Scalar(1))) {
      throw DomainViolation("BoundarySearch: base point is not inside the disk");
    }
    const Scalar dir_opnorm =
        operator_norm(direction_, Scalar(kBisectionNormTolerance), counters_);
    const Scalar safe = (Scalar(1) - n1) / dir_opnorm;

    minus_.hi = -std::min(safe * Scalar(0.999), Scalar(1e8));
    if (!(minus_.hi < Scalar(0))) minus_.hi = Scalar(0);
    minus_.lo = expand_outward(minus_.hi, Scalar(-1));
    plus_.lo = std::max(Scalar(1), std::min(safe * Scalar(0.999), Scalar(1e8)));
    plus_.hi = expand_outward(plus_.lo, Scalar(1));
  }

  /// Bisect until both bracket widths are at most eps.
  void refine(Scalar eps) {
    bisect(minus_, warm_minus_, eps);
    bisect(plus_, warm_plus_, eps);
  }

  BoundaryBracket<Scalar> bracket() const {
    BoundaryBracket<Scalar> out;
    // Report intervals in (lo, hi) order with the certification convention
    // lo_minus <= alpha_minus <= hi_minus < 0 and 1 < lo_plus <= alpha_plus.
    out.alpha_minus = minus_;
    out.alpha_plus = plus_;
    return out;
  }

  /// Two-sided Hilbert distance bounds from the current brackets: widening a
  /// one-dimensional Hilbert domain shrinks its distance, so the outer ends
  /// give the lower bound and the inner ends the upper bound.
  DistanceBounds<Scalar> bounds() const {
    DistanceBounds<Scalar> out;
    out.bracket = bracket();
    out.lower = hilbert_distance_1d(minus_.lo, plus_.hi);
    const bool inner_valid = minus_.hi < Scalar(0) && plus_.lo > Scalar(1);
    out.upper = inner_valid ? hilbert_distance_1d(minus_.hi, plus_.lo)
                            : std::numeric_limits<Scalar>::infinity();
    return out;
  }

  /// Midpoint-of-bracket estimates of the two boundary parameters.
  Scalar alpha_minus() const { return minus_.midpoint(); }
  Scalar alpha_plus() const { return plus_.midpoint(); }

 private:
  // Classify the point at parameter alpha against the unit operator-norm
  // surface. Exact norm envelopes settle clear cases without a power
  // iteration: ||M||_O <= ||M||_F <= sqrt(d) ||M||_O, every column norm is a
  // lower bound, and ||M||_O^2 <= ||M||_1 ||M||_inf.
  bool outside(Scalar alpha, ComplexVector<Scalar>& warm) {
    const ComplexMatrix<Scalar> point = base_ + alpha * direction_;
    const Scalar fro = point.norm();
    if (fro < Scalar(1)) return false;
    if (fro > dim_root_) return true;
    if (point.colwise().norm().maxCoeff() >= Scalar(1)) return true;
    const Scalar one_norm = point.cwiseAbs().colwise().sum().maxCoeff();
    const Scalar inf_norm = point.cwiseAbs().rowwise().sum().maxCoeff();
    if (one_norm * inf_norm < Scalar(1)) return false;
    const Scalar n = operator_norm(point, Scalar(kBisectionNormTolerance),
                                   counters_, &warm);
    return n >= Scalar(1);
  }

  Scalar expand_outward(Scalar inner, Scalar sign) {
    // Geometric march away from the segment until the norm certifies outside.
    Scalar step = std::max(Scalar(1), std::abs(inner));
    Scalar candidate = inner + sign * step;
    ComplexVector<Scalar>& warm = sign > Scalar(0) ? warm_plus_ : warm_minus_;
    for (int i = 0; i < 200; ++i) {
      if (outside(candidate, warm)) return candidate;
      inner = candidate;
      step *= Scalar(2);
      candidate = inner + sign * step;
    }
    throw NumericalDomain("BoundarySearch: no boundary crossing found");
  }

  void bisect(Interval<Scalar>& iv, ComplexVector<Scalar>& warm, Scalar eps) {
    const bool minus_side = iv.hi <= Scalar(0);
    while (iv.width() > eps) {
      const Scalar mid = iv.midpoint();
      if (mid == iv.lo || mid == iv.hi) break;  // hit floating-point resolution
      const bool out = outside(mid, warm);
      if (minus_side) {
        (out ? iv.lo : iv.hi) = mid;
      } else {
        (out ? iv.hi : iv.lo) = mid;
      }
    }
  }

  ComplexMatrix<Scalar> base_, direction_;
  Scalar dim_root_ = Scalar(1);
  CallCounters* counters_ = nullptr;
  Interval<Scalar> minus_, plus_;  // minus: lo outside / hi inside; plus: lo inside / hi outside
  ComplexVector<Scalar> warm_minus_, warm_plus_;
};

/// Boundary brackets of width at most eps around both chord crossings.
template <typename Scalar>
BoundaryBracket<Scalar> boundary_bisection(const ComplexMatrix<Scalar>& k1,
                                           const ComplexMatrix<Scalar>& k2,
                                           Scalar eps = Scalar(kDefaultBracketEps),
                                           CallCounters* counters = nullptr) {
  if (!(eps > Scalar(0))) {
    throw ContractViolation("boundary_bisection: eps must be positive");
  }
  BoundarySearch<Scalar> search(k1, k2, counters);
  search.refine(eps);
  return search.bracket();
}

/// Certified lower and upper bounds on the Hilbert distance.
template <typename Scalar>
DistanceBounds<Scalar> dist_klein_bounds(const ComplexMatrix<Scalar>& k1,
                                         const ComplexMatrix<Scalar>& k2,
                                         Scalar eps = Scalar(kDefaultBracketEps),
                                         CallCounters* counters = nullptr) {
  if ((k2 - k1).norm() == Scalar(0)) {
    return {};  // coincident points: distance zero, no bracket
  }
  BoundarySearch<Scalar> search(k1, k2, counters);
  search.refine(eps);
  return search.bounds();
}

/// Hilbert distance, converged to near machine precision by bisection.
template <typename Scalar>
Scalar dist_klein_exact(const ComplexMatrix<Scalar>& k1,
                        const ComplexMatrix<Scalar>& k2,
                        CallCounters* counters = nullptr) {
  if ((k2 - k1).norm() == Scalar(0)) return Scalar(0);
  BoundarySearch<Scalar> search(k1, k2, counters);
  search.refine(Scalar(1e-13));
  return hilbert_distance_1d(search.alpha_minus(), search.alpha_plus());
}

/// Distance to the origin in closed form: the chord crossings sit at
/// +-1/||K||_O, so the distance is log((1+||K||_O)/(1-||K||_O)) / 2.
template <typename Scalar>
Scalar dist_klein_origin(const ComplexMatrix<Scalar>& k,
                         CallCounters* counters = nullptr) {
  const Scalar n = operator_norm(k, Scalar(kDefaultPowerTolerance), counters);
  if (!(n < Scalar(1))) {
    throw DomainViolation("dist_klein_origin: point is not inside the disk");
  }
  if (n == Scalar(0)) return Scalar(0);
  return Scalar(0.5) * std::log((Scalar(1) + n) / (Scalar(1) - n));
}

/// Closed form for two points whose chord passes through the origin, i.e.
/// K2 = lambda K1 with real lambda. The scale factor is estimated at the
/// largest-modulus entry of K1 (the trace can vanish on valid inputs) and the
/// collinearity is verified before use.
template <typename Scalar>
Scalar dist_klein_line_origin(const ComplexMatrix<Scalar>& k1,
                              const ComplexMatrix<Scalar>& k2,
                              CallCounters* counters = nullptr,
                              Scalar collinearity_tol = Scalar(1e-9)) {
  if (k1.rows() != k2.rows() || k1.cols() != k2.cols()) {
    throw ContractViolation("dist_klein_line_origin: dimension mismatch");
  }
  Index pr = 0, pc = 0;
  k1.cwiseAbs().maxCoeff(&pr, &pc);
  if (std::abs(k1(pr, pc)) == Scalar(0)) {
    throw ContractViolation("dist_klein_line_origin: K1 must be nonzero");
  }
  const std::complex<Scalar> ratio = k2(pr, pc) / k1(pr, pc);
  const Scalar lambda = std::real(ratio);
  if ((k2 - std::complex<Scalar>(lambda) * k1).norm() > collinearity_tol) {
    throw ContractViolation(
        "dist_klein_line_origin: points are not collinear with the origin");
  }
  if (lambda == Scalar(1)) return Scalar(0);
  const Scalar n = operator_norm(k1, Scalar(kDefaultPowerTolerance), counters);
  if (!(n > Scalar(0)) || !(n < Scalar(1))) {
    throw DomainViolation("dist_klein_line_origin: K1 is not inside the disk");
  }
  // |1 + alpha (lambda - 1)| = 1 / ||K1||_O has the two solutions below.
  const Scalar root_a = (Scalar(1) / n - Scalar(1)) / (lambda - Scalar(1));
  const Scalar root_b = -(Scalar(1) / n + Scalar(1)) / (lambda - Scalar(1));
  return hilbert_distance_1d(std::min(root_a, root_b), std::max(root_a, root_b));
}

/// Linear-time core of the diagonal distance: each coordinate contributes a
/// real quadratic |k1_i + alpha (k2_i - k1_i)|^2 = 1 and the binding
/// crossings are the innermost roots.
template <typename Scalar>
Scalar dist_klein_diagonal(const ComplexVector<Scalar>& k1,
                           const ComplexVector<Scalar>& k2) {
  if (k1.size() != k2.size()) {
    throw ContractViolation("dist_klein_diagonal: dimension mismatch");
  }
  Scalar alpha_minus = -std::numeric_limits<Scalar>::infinity();
  Scalar alpha_plus = std::numeric_limits<Scalar>::infinity();
  bool constrained = false;
  for (Index i = 0; i < k1.size(); ++i) {
    const std::complex<Scalar> x = k1(i);
    const std::complex<Scalar> step = k2(i) - x;
    const Scalar a = std::norm(step);
    if (a == Scalar(0)) continue;  // coordinate does not move: no constraint
    const Scalar b = Scalar(2) * std::real(std::conj(x) * step);
    const Scalar c = std::norm(x) - Scalar(1);
    const Scalar disc = b * b - Scalar(4) * a * c;
    const Scalar sq = std::sqrt(std::max(disc, Scalar(0)));
    alpha_minus = std::max(alpha_minus, (-b - sq) / (Scalar(2) * a));
    alpha_plus = std::min(alpha_plus, (-b + sq) / (Scalar(2) * a));
    constrained = true;
  }
  if (!constrained) return Scalar(0);  // identical diagonals
  return hilbert_distance_1d(alpha_minus, alpha_plus);
}

/// Matrix wrapper: verifies the inputs carry no off-diagonal mass, then runs
/// the linear-time core on their diagonals.
template <typename Scalar>
Scalar dist_klein_diagonal(const ComplexMatrix<Scalar>& k1,
                           const ComplexMatrix<Scalar>& k2,
                           Scalar offdiag_tol = Scalar(1e-12)) {
  if (k1.rows() != k2.rows() || k1.cols() != k2.cols()) {
    throw ContractViolation("dist_klein_diagonal: dimension mismatch");
  }
  const Index d = k1.rows();
  Scalar off = Scalar(0);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      if (i != j) off += std::norm(k1(i, j)) + std::norm(k2(i, j));
    }
  }
  if (std::sqrt(off) > offdiag_tol) {
    throw ContractViolation("dist_klein_diagonal: inputs are not diagonal");
  }
  const ComplexVector<Scalar> d1 = k1.diagonal();
  const ComplexVector<Scalar> d2 = k2.diagonal();
  return dist_klein_diagonal<Scalar>(d1, d2);
}

/// Radial contraction onto the Poincare reading of the disk.
template <typename Scalar>
ComplexMatrix<Scalar> klein_to_poincare(const ComplexMatrix<Scalar>& k,
                                        CallCounters* counters = nullptr) {
  const Scalar n = operator_norm(k, Scalar(kDefaultPowerTolerance), counters);
  if (!(n < Scalar(1))) {
    throw DomainViolation("klein_to_poincare: point is not inside the disk");
  }
  return k / (Scalar(1) + std::sqrt(Scalar(1) - n * n));
}

/// Radial expansion onto the Klein reading of the disk.
template <typename Scalar>
ComplexMatrix<Scalar> poincare_to_klein(const ComplexMatrix<Scalar>& w,
                                        CallCounters* counters = nullptr) {
  const Scalar n = operator_norm(w, Scalar(kDefaultPowerTolerance), counters);
  if (!(n < Scalar(1))) {
    throw DomainViolation("poincare_to_klein: point is not inside the disk");
  }
  return Scalar(2) * w / (Scalar(1) + n * n);
}

/// Hilbert distance of the Frobenius ball of the given radius, in closed form
/// from one real quadratic. With radius sqrt(d) the ball encloses the
/// operator-norm disk, so the value is a certified lower bound on the Hilbert
/// disk distance; with radius 1 (both points strictly inside) it is an upper
/// bound instead.
template <typename Scalar>
Scalar frobenius_klein_distance(const ComplexMatrix<Scalar>& k1,
                                const ComplexMatrix<Scalar>& k2, Scalar radius) {
  if (k1.rows() != k2.rows() || k1.cols() != k2.cols()) {
    throw ContractViolation("frobenius_klein_distance: dimension mismatch");
  }
  if (!(radius > Scalar(0))) {
    throw ContractViolation("frobenius_klein_distance: radius must be positive");
  }
  if (!(k1.norm() < radius) || !(k2.norm() < radius)) {
    throw ContractViolation(
        "frobenius_klein_distance: a point lies outside the Frobenius ball");
  }
  const ComplexMatrix<Scalar> step = k2 - k1;
  const Scalar a = step.squaredNorm();
  if (a == Scalar(0)) return Scalar(0);
  const Scalar b = Scalar(2) * (step.conjugate().cwiseProduct(k1)).sum().real();
  const Scalar c = k1.squaredNorm() - radius * radius;
  const Scalar disc = std::sqrt(std::max(b * b - Scalar(4) * a * c, Scalar(0)));
  const Scalar root_lo = (-b - disc) / (Scalar(2) * a);
  const Scalar root_hi = (-b + disc) / (Scalar(2) * a);
  return hilbert_distance_1d(root_lo, root_hi);
}

/// Straight geodesic from the origin; same radial scaling as the Poincare
/// reading because the two origin distances agree up to the constant half.
template <typename Scalar>
ComplexMatrix<Scalar> klein_geodesic_origin(const ComplexMatrix<Scalar>& k, Scalar t,
                                            CallCounters* counters = nullptr) {
  if (t < Scalar(0) || t > Scalar(1)) {
    throw ContractViolation("klein_geodesic_origin: t must lie in [0, 1]");
  }
  const Scalar n = operator_norm(k, Scalar(kDefaultPowerTolerance), counters);
  if (n == Scalar(0)) return ComplexMatrix<Scalar>::Zero(k.rows(), k.cols());
  if (!(n < Scalar(1))) {
    throw DomainViolation("klein_geodesic_origin: point is not inside the disk");
  }
  const Scalar up = std::pow(Scalar(1) + n, t);
  const Scalar down = std::pow(Scalar(1) - n, t);
  return ((up - down) / ((up + down) * n)) * k;
}

/// Cut evaluation on a precomputed bracket; shared with the enclosing-ball
/// iteration, which refines the farthest point's line search and reuses it.
template <typename Scalar>
ComplexMatrix<Scalar> klein_geodesic_cut_on_bracket(const ComplexMatrix<Scalar>& k1,
                                                    const ComplexMatrix<Scalar>& k2,
                                                    Scalar t, Scalar alpha_minus,
                                                    Scalar alpha_plus) {
  const Scalar rho = hilbert_distance_1d(alpha_minus, alpha_plus);
  const Scalar g = std::exp(Scalar(2) * t * rho);
  const Scalar mag_minus = std::abs(alpha_minus);
  const Scalar s =
      alpha_plus * mag_minus * (g - Scalar(1)) / (alpha_plus + g * mag_minus);
  return k1 + std::complex<Scalar>(s) * (k2 - k1);
}

/// Point on the straight segment [K1, K2] whose Hilbert distance from K1 is
/// the fraction t of the full distance. Along a fixed chord the distance is a
/// closed-form function of the segment parameter once the boundary bracket is
/// known, so a single bracketed line search serves the whole cut; the segment
/// parameter solves
///   s = a+ |a-| (g - 1) / (a+ + g |a-|),  g = exp(2 t rho(K1, K2)).
/// Endpoints come out exactly at s=0 and s=1 for any bracket estimate.
template <typename Scalar>
ComplexMatrix<Scalar> klein_geodesic_cut(const ComplexMatrix<Scalar>& k1,
                                         const ComplexMatrix<Scalar>& k2, Scalar t,
                                         Scalar eps = Scalar(kDefaultBracketEps),
                                         CallCounters* counters = nullptr) {
  if (t < Scalar(0) || t > Scalar(1)) {
    throw ContractViolation("klein_geodesic_cut: t must lie in [0, 1]");
  }
  if ((k2 - k1).norm() == Scalar(0)) return k1;
  BoundarySearch<Scalar> search(k1, k2, counters);
  search.refine(eps / Scalar(4));
  return klein_geodesic_cut_on_bracket(k1, k2, t, search.alpha_minus(),
                                       search.alpha_plus());
}

}  // namespace siegel
