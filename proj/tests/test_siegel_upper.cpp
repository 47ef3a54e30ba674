#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "siegel/hyperbolic_plane.hpp"
#include "siegel/siegel_upper.hpp"
#include "test_support.hpp"

using namespace siegel;
using test_support::Complex;
using CMat = ComplexMatrix<double>;
using RMat = RealMatrix<double>;

namespace {

// Golden 2x2 pair used across the suite. The cross-ratio entries, its
// eigenvalues and the distance were frozen from a 50-digit computation with
// closed-form 2x2 eigenvalues (an algorithm independent of the QR path used
// by the library).
CMat golden_z1() {
  CMat z(2, 2);
  z(0, 0) = Complex(0.265, 0.235);
  z(0, 1) = Complex(0.5, 0.048);
  z(1, 0) = Complex(0.5, 0.048);
  z(1, 1) = Complex(-0.085, 0.792);
  return z;
}

CMat golden_z2() {
  CMat z(2, 2);
  z(0, 0) = Complex(-0.329, 0.464);
  z(0, 1) = Complex(-0.2, 0.289);
  z(1, 0) = Complex(-0.2, 0.289);
  z(1, 1) = Complex(-0.382, 0.431);
  return z;
}

constexpr double kGoldenDistance = 2.4859052314299322;
constexpr double kGoldenEig0 = 0.6196259720827341;
constexpr double kGoldenEig1 = 0.3211417473416909;

CMat golden_cross_ratio() {
  CMat r(2, 2);
  r(0, 0) = Complex(0.4017971403233245, 0.0664304044460566);
  r(0, 1) = Complex(0.1660089080767433, -0.1066564278995510);
  r(1, 0) = Complex(0.0687644732204721, 0.0990709491911778);
  r(1, 1) = Complex(0.5389705791011006, -0.0664304044460566);
  return r;
}

CMat imaginary_identity(Index d) {
  return CMat::Identity(d, d) * Complex(0, 1);
}

SymplecticMap<double> random_translation_product(std::mt19937_64& gen, Index d,
                                                 int factors) {
  SymplecticMap<double> s = SymplecticMap<double>::identity(d);
  for (int i = 0; i < factors; ++i) {
    const CMat z = test_support::random_upper_point(gen, d);
    SymplecticMap<double> t = translation_to_origin_upper(z);
    if (gen() & 1) t = symplectic_inverse(t);
    s = symplectic_compose(s, t);
  }
  return s;
}

}  // namespace

TEST_CASE("membership") {
  CHECK(membership_upper(imaginary_identity(2)).member);

  CMat x_only(2, 2);
  x_only << 1.0, 0.3, 0.3, -2.0;
  CHECK_FALSE(membership_upper(x_only).member);

  const auto fixture = membership_upper(golden_z1());
  CHECK(fixture.member);
  CHECK(fixture.min_imaginary_eigenvalue > 0.0);
}

TEST_CASE("cross ratio") {
  const CMat z = test_support::random_upper_point(*(new std::mt19937_64(21)), 3);
  CHECK(cross_ratio(z, z).norm() < 1e-14);

  CMat z1(1, 1), z2(1, 1);
  z1(0, 0) = Complex(0, 1);
  z2(0, 0) = Complex(0, 2);
  const CMat r = cross_ratio(z1, z2);
  CHECK(std::abs(r(0, 0) - Complex(1.0 / 9.0, 0)) < 1e-15);

  CHECK((cross_ratio(golden_z1(), golden_z2()) - golden_cross_ratio()).norm() < 1e-9);
}

TEST_CASE("cross ratio eigenvalues are real positive on the golden pair") {
  const auto spectrum = general_spectrum(cross_ratio(golden_z1(), golden_z2()));
  REQUIRE(spectrum.values.size() == 2);
  CHECK(spectrum.values(0).imag() == 0.0);
  CHECK(spectrum.values(1).imag() == 0.0);
  CHECK(spectrum.values(0).real() == doctest::Approx(kGoldenEig0).epsilon(1e-10));
  CHECK(spectrum.values(1).real() == doctest::Approx(kGoldenEig1).epsilon(1e-10));
}

TEST_CASE("distance") {
  const CMat z1 = golden_z1();
  CHECK(dist_upper(z1, z1) == doctest::Approx(0.0).epsilon(1e-12));

  CHECK(dist_upper(imaginary_identity(2), (2.0 * imaginary_identity(2)).eval()) ==
        doctest::Approx(std::sqrt(2.0) * std::log(2.0)).epsilon(1e-10));

  CHECK(dist_upper(z1, golden_z2()) == doctest::Approx(kGoldenDistance).epsilon(1e-8));
}

TEST_CASE("truncated series") {
  const CMat z1 = golden_z1(), z2 = golden_z2();
  CHECK(dist_upper_truncated(z1, z1, 7) == 0.0);

  const double exact = dist_upper(z1, z2);
  CHECK(std::abs(dist_upper_truncated(z1, z2, 50) - exact) < 1e-6);

  const Complex trace = cross_ratio(z1, z2).trace();
  CHECK(dist_upper_truncated(z1, z2, 0) ==
        doctest::Approx(2.0 * std::sqrt(trace.real())).epsilon(1e-12));

  double previous = 0.0;
  for (int l = 0; l <= 40; l += 5) {
    const double value = dist_upper_truncated(z1, z2, l);
    CHECK(value >= previous - 1e-12);
    previous = value;
  }

  const auto [adaptive, terms] = dist_upper_truncated_adaptive(z1, z2);
  CHECK(std::abs(adaptive - exact) < 1e-6);
  CHECK(terms > 0);
}

TEST_CASE("spd distance and geodesic") {
  RMat p(2, 2);
  p << 4.0, 0.0, 0.0, 1.0;
  const RMat id = RMat::Identity(2, 2);
  CHECK(spd_dist(id, p) == doctest::Approx(std::log(4.0)).epsilon(1e-10));
  CHECK(spd_dist(p, p) < 1e-10);

  std::mt19937_64 gen(22);
  for (int trial = 0; trial < 10; ++trial) {
    const RMat p1 = test_support::random_spd(gen, 3);
    const RMat p2 = test_support::random_spd(gen, 3);
    CMat z1(3, 3), z2(3, 3);
    z1.setZero();
    z2.setZero();
    z1.imag() = p1;
    z2.imag() = p2;
    CHECK(std::abs(spd_dist(p1, p2) - dist_upper(z1, z2)) < 1e-8);
  }

  const RMat mid = spd_geodesic_cut(id, p, 0.5);
  CHECK(mid(0, 0) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(mid(1, 1) == doctest::Approx(1.0).epsilon(1e-10));

  for (int trial = 0; trial < 10; ++trial) {
    const RMat p1 = test_support::random_spd(gen, 3);
    const RMat p2 = test_support::random_spd(gen, 3);
    CHECK((spd_geodesic_cut(p1, p2, 0.0) - p1).norm() < 1e-9);
    CHECK((spd_geodesic_cut(p1, p2, 1.0) - p2).norm() < 1e-9);
    const RMat cut = spd_geodesic_cut(p1, p2, 0.3);
    CHECK(std::abs(spd_dist(p1, cut) - 0.3 * spd_dist(p1, p2)) < 1e-8);
  }
}

TEST_CASE("symplectic maps") {
  const Index d = 2;
  const auto identity = SymplecticMap<double>::identity(d);
  CHECK(is_symplectic(identity).symplectic);
  const CMat z = golden_z1();
  CHECK((symplectic_apply(identity, z) - z).norm() < 1e-14);

  SymplecticMap<double> bad{RMat::Identity(d, d), RMat::Identity(d, d),
                            RMat::Identity(d, d), RMat::Identity(d, d)};
  CHECK_FALSE(is_symplectic(bad).symplectic);

  // Translation of iI is the identity map.
  const auto trivial = translation_to_origin_upper(imaginary_identity(d));
  CHECK((trivial.A - RMat::Identity(d, d)).norm() < 1e-12);
  CHECK(trivial.B.norm() < 1e-12);

  // Translations are symplectic and map their anchor to iI.
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 8; ++trial) {
    const CMat anchor = test_support::random_upper_point(gen, 3);
    const auto t = translation_to_origin_upper(anchor);
    CHECK(is_symplectic(t, 1e-9).symplectic);
    CHECK((symplectic_apply(t, anchor) - imaginary_identity(3)).norm() < 1e-8);
    // Group inverse moves iI back.
    CHECK((symplectic_apply(symplectic_inverse(t), imaginary_identity(3)) - anchor)
              .norm() < 1e-8);
    // Round trip on an unrelated point.
    const CMat other = test_support::random_upper_point(gen, 3);
    CHECK((symplectic_apply(symplectic_inverse(t), symplectic_apply(t, other)) - other)
              .norm() < 1e-8);
  }

  CMat diag_anchor = CMat::Zero(d, d);
  diag_anchor(0, 0) = Complex(0, 4);
  diag_anchor(1, 1) = Complex(0, 1);
  const auto td = translation_to_origin_upper(diag_anchor);
  CHECK((symplectic_apply(td, diag_anchor) - imaginary_identity(d)).norm() < 1e-10);

  const auto tz = translation_to_origin_upper(golden_z1());
  CHECK((symplectic_apply(tz, golden_z1()) - imaginary_identity(d)).norm() < 1e-8);
}

TEST_CASE("symplectic invariance of the distance and the spectrum") {
  std::mt19937_64 gen(24);
  for (int trial = 0; trial < 8; ++trial) {
    const CMat z1 = test_support::random_upper_point(gen, 2);
    const CMat z2 = test_support::random_upper_point(gen, 2);
    const auto s = random_translation_product(gen, 2, 3);
    CHECK(is_symplectic(s, 1e-8).symplectic);
    const CMat m1 = symplectic_apply(s, z1);
    const CMat m2 = symplectic_apply(s, z2);
    CHECK(std::abs(dist_upper(z1, z2) - dist_upper(m1, m2)) < 1e-7);

    const auto before = general_spectrum(cross_ratio(z1, z2));
    const auto after = general_spectrum(cross_ratio(m1, m2));
    for (Index i = 0; i < before.values.size(); ++i) {
      CHECK(std::abs(before.values(i) - after.values(i)) < 1e-7);
    }
  }
}

TEST_CASE("cross-ratio eigenvalues are nearly real for interior pairs") {
  std::mt19937_64 gen(25);
  for (int trial = 0; trial < 20; ++trial) {
    const CMat z1 = test_support::random_upper_point(gen, 3);
    const CMat z2 = test_support::random_upper_point(gen, 3);
    Eigen::ComplexEigenSolver<CMat> raw(cross_ratio(z1, z2), false);
    for (Index i = 0; i < 3; ++i) {
      const auto v = raw.eigenvalues()(i);
      CHECK(std::abs(v.imag()) <= 1e-8 * (1.0 + std::abs(v.real())));
    }
  }
}

TEST_CASE("cayley transforms") {
  const Index d = 2;
  CHECK(cayley_upper_to_disk(imaginary_identity(d)).norm() < 1e-14);
  CHECK((cayley_upper_to_disk((2.0 * imaginary_identity(d)).eval()) -
         CMat::Identity(d, d) / 3.0)
            .norm() < 1e-13);
  CHECK((cayley_disk_to_upper(CMat::Zero(d, d).eval()) - imaginary_identity(d)).norm() <
        1e-14);
  CHECK((cayley_disk_to_upper((CMat::Identity(d, d) / 3.0).eval()) -
         2.0 * imaginary_identity(d))
            .norm() < 1e-13);

  const CMat w1 = cayley_upper_to_disk(golden_z1());
  CHECK(operator_norm(w1) < 1.0);
  CHECK(is_symmetric_complex(w1, 1e-9));

  std::mt19937_64 gen(26);
  for (int trial = 0; trial < 10; ++trial) {
    const CMat z = test_support::random_upper_point(gen, 3);
    CHECK((cayley_disk_to_upper(cayley_upper_to_disk(z)) - z).norm() < 1e-9);
    const CMat w = test_support::random_disk_point(gen, 3, 0.7);
    CHECK((cayley_upper_to_disk(cayley_disk_to_upper(w)) - w).norm() < 1e-9);
  }
}

TEST_CASE("distance is stable under the disk round trip") {
  std::mt19937_64 gen(27);
  for (int trial = 0; trial < 8; ++trial) {
    const CMat z1 = test_support::random_upper_point(gen, 2);
    const CMat z2 = test_support::random_upper_point(gen, 2);
    const double direct = dist_upper(z1, z2);
    const double via_disk = dist_upper(cayley_disk_to_upper(cayley_upper_to_disk(z1)),
                                       cayley_disk_to_upper(cayley_upper_to_disk(z2)));
    CHECK(std::abs(direct - via_disk) < 1e-9);
  }
}

TEST_CASE("one-dimensional reduction") {
  std::mt19937_64 gen(28);
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  std::uniform_real_distribution<double> im(0.1, 3.0);
  for (int trial = 0; trial < 30; ++trial) {
    const Complex a(re(gen), im(gen));
    const Complex b(re(gen), im(gen));
    CMat z1(1, 1), z2(1, 1);
    z1(0, 0) = a;
    z2(0, 0) = b;
    CHECK(std::abs(dist_upper(z1, z2) - dist_upper_1d(a, b)) < 1e-10);
  }
}

TEST_CASE("diagonal separability") {
  std::mt19937_64 gen(29);
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  std::uniform_real_distribution<double> im(0.1, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = 3;
    CMat z1 = CMat::Zero(d, d), z2 = CMat::Zero(d, d);
    double sum = 0.0;
    for (Index i = 0; i < d; ++i) {
      const Complex a(re(gen), im(gen));
      const Complex b(re(gen), im(gen));
      z1(i, i) = a;
      z2(i, i) = b;
      const double di = dist_upper_1d(a, b);
      sum += di * di;
    }
    const double full = dist_upper(z1, z2);
    CHECK(std::abs(full * full - sum) < 1e-9);
  }
}

TEST_CASE("boundary-adjacent eigenvalue guard") {
  // A point with an imaginary part that is not positive-definite makes the
  // cross-ratio spectrum leave [0, 1).
  CMat z1(1, 1), z2(1, 1);
  z1(0, 0) = Complex(0.0, 1.0);
  z2(0, 0) = Complex(0.0, -1.0);
  CHECK_THROWS_AS((void)dist_upper(z1, z2), Error);
}
