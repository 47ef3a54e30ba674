#pragma once

#include <random>

#include "siegel/matrix_core.hpp"

namespace siegel {

/// Seeded samplers for the three domains. The generator is threaded through
/// explicitly so runs are reproducible.

/// Symmetric complex Gaussian matrix rescaled to operator norm u * norm_cap
/// with u drawn uniformly from (0, 1).
template <typename Scalar>
ComplexMatrix<Scalar> sample_disk_point(std::mt19937_64& gen, Index d,
                                        Scalar norm_cap = Scalar(0.95)) {
  std::normal_distribution<Scalar> normal(Scalar(0), Scalar(1));
  std::uniform_real_distribution<Scalar> uniform(Scalar(0), Scalar(1));
  ComplexMatrix<Scalar> m(d, d);
  for (Index r = 0; r < d; ++r) {
    for (Index c = 0; c < d; ++c) {
      const Scalar re = normal(gen);
      const Scalar im = normal(gen);
      m(r, c) = std::complex<Scalar>(re, im);
    }
  }
  m = ((m + m.transpose()) / Scalar(2)).eval();
  const Scalar u = uniform(gen);
  const Scalar n = operator_norm(m);
  if (n > Scalar(0)) m *= u * norm_cap / n;
  return m;
}

/// Gram matrix with a spectral floor: A^T A + 0.1 I.
template <typename Scalar>
RealMatrix<Scalar> sample_spd(std::mt19937_64& gen, Index d) {
  std::normal_distribution<Scalar> normal(Scalar(0), Scalar(1));
  RealMatrix<Scalar> a(d, d);
  for (Index r = 0; r < d; ++r) {
    for (Index c = 0; c < d; ++c) a(r, c) = normal(gen);
  }
  RealMatrix<Scalar> p = a.transpose() * a + Scalar(0.1) * RealMatrix<Scalar>::Identity(d, d);
  return ((p + p.transpose()) / Scalar(2)).eval();
}

/// Upper-space point: symmetric Gaussian real part plus i times an SPD matrix
/// with minimum eigenvalue at least 0.1.
template <typename Scalar>
ComplexMatrix<Scalar> sample_upper_point(std::mt19937_64& gen, Index d) {
  std::normal_distribution<Scalar> normal(Scalar(0), Scalar(1));
  RealMatrix<Scalar> x(d, d);
  for (Index r = 0; r < d; ++r) {
    for (Index c = 0; c < d; ++c) x(r, c) = normal(gen);
  }
  x = ((x + x.transpose()) / Scalar(2)).eval();
  const RealMatrix<Scalar> y = sample_spd<Scalar>(gen, d);
  ComplexMatrix<Scalar> z(d, d);
  z.real() = x;
  z.imag() = y;
  return z;
}

}  // namespace siegel
