#pragma once

#include <cmath>
#include <complex>

#include "siegel/core.hpp"

namespace siegel {

/// One-dimensional hyperbolic models. These double as the d=1 oracle for the
/// matrix-level distances.

enum class PlaneModel { UpperHalf, PoincareDisk, KleinDisk };

namespace detail {

template <typename Scalar>
void require_upper_half(const std::complex<Scalar>& z, const char* name) {
  if (!(std::imag(z) > Scalar(0))) {
    throw DomainViolation(std::string(name) + ": point is not in the open upper half-plane");
  }
}

template <typename Scalar>
void require_unit_disk(const std::complex<Scalar>& w, const char* name) {
  if (!(std::abs(w) < Scalar(1))) {
    throw DomainViolation(std::string(name) + ": point is not in the open unit disk");
  }
}

/// arccosh with a guard for arguments that dip below 1 by rounding.
template <typename Scalar>
Scalar acosh_clamped(Scalar x) {
  if (x < Scalar(1)) {
    if (x > Scalar(1) - Scalar(1e-12)) return Scalar(0);
    throw NumericalDomain("arccosh argument below 1 beyond rounding tolerance");
  }
  return std::acosh(x);
}

}  // namespace detail

template <typename Scalar>
Scalar dist_upper_1d(const std::complex<Scalar>& z1, const std::complex<Scalar>& z2) {
  detail::require_upper_half(z1, "dist_upper_1d");
  detail::require_upper_half(z2, "dist_upper_1d");
  const Scalar cross = std::abs(z1 - std::conj(z2));
  const Scalar diff = std::abs(z1 - z2);
  if (diff == Scalar(0)) return Scalar(0);
  return std::log((cross + diff) / (cross - diff));
}

template <typename Scalar>
Scalar dist_poincare_disk_1d(const std::complex<Scalar>& w1,
                             const std::complex<Scalar>& w2) {
  detail::require_unit_disk(w1, "dist_poincare_disk_1d");
  detail::require_unit_disk(w2, "dist_poincare_disk_1d");
  const std::complex<Scalar> moebius = (w2 - w1) / (Scalar(1) - std::conj(w1) * w2);
  return Scalar(2) * std::atanh(std::abs(moebius));
}

template <typename Scalar>
Scalar dist_klein_1d(const std::complex<Scalar>& k1, const std::complex<Scalar>& k2) {
  detail::require_unit_disk(k1, "dist_klein_1d");
  detail::require_unit_disk(k2, "dist_klein_1d");
  const Scalar dot = std::real(k1) * std::real(k2) + std::imag(k1) * std::imag(k2);
  const Scalar denom = std::sqrt((Scalar(1) - std::norm(k1)) * (Scalar(1) - std::norm(k2)));
  return detail::acosh_clamped((Scalar(1) - dot) / denom);
}

template <typename Scalar>
std::complex<Scalar> klein_to_poincare_1d(const std::complex<Scalar>& k) {
  detail::require_unit_disk(k, "klein_to_poincare_1d");
  return k / (Scalar(1) + std::sqrt(Scalar(1) - std::norm(k)));
}

template <typename Scalar>
std::complex<Scalar> poincare_to_klein_1d(const std::complex<Scalar>& w) {
  detail::require_unit_disk(w, "poincare_to_klein_1d");
  return Scalar(2) * w / (Scalar(1) + std::norm(w));
}

template <typename Scalar>
std::complex<Scalar> upper_to_poincare_1d(const std::complex<Scalar>& z) {
  detail::require_upper_half(z, "upper_to_poincare_1d");
  const std::complex<Scalar> i(0, 1);
  return (z - i) / (z + i);
}

template <typename Scalar>
std::complex<Scalar> poincare_to_upper_1d(const std::complex<Scalar>& w) {
  detail::require_unit_disk(w, "poincare_to_upper_1d");
  const std::complex<Scalar> i(0, 1);
  return i * (Scalar(1) + w) / (Scalar(1) - w);
}

/// Tag-driven conversion between the three plane models.
template <typename Scalar>
std::complex<Scalar> convert_1d(const std::complex<Scalar>& p, PlaneModel from,
                                PlaneModel to) {
  if (from == to) return p;
  // Route through the Poincare disk.
  std::complex<Scalar> w;
  switch (from) {
    case PlaneModel::UpperHalf: w = upper_to_poincare_1d(p); break;
    case PlaneModel::KleinDisk: w = klein_to_poincare_1d(p); break;
    case PlaneModel::PoincareDisk: w = p; break;
  }
  switch (to) {
    case PlaneModel::UpperHalf: return poincare_to_upper_1d(w);
    case PlaneModel::KleinDisk: return poincare_to_klein_1d(w);
    case PlaneModel::PoincareDisk: return w;
  }
  throw ContractViolation("convert_1d: unknown model tag");
}

}  // namespace siegel
