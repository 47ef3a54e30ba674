#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "siegel/matrix_core.hpp"
#include "test_support.hpp"

using namespace siegel;
using test_support::Complex;
using CMat = ComplexMatrix<double>;

namespace {

CMat diag2(Complex a, Complex b) {
  CMat m = CMat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("multiply matches the entry-wise triple-loop oracle") {
  std::mt19937_64 gen(101);
  const CMat id = CMat::Identity(3, 3);
  const CMat m = test_support::random_complex(gen, 3);
  CHECK((multiply(id, m) - m).norm() == doctest::Approx(0.0));

  CHECK((multiply(diag2(Complex(0, 1), 2), diag2(Complex(0, 1), 3)) -
         diag2(Complex(-1, 0), 6))
            .norm() == doctest::Approx(0.0));

  const CMat a = test_support::random_complex(gen, 3);
  const CMat b = test_support::random_complex(gen, 3);
  const CMat prod = multiply(a, b);
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      Complex sum = 0.0;
      for (Index k = 0; k < 3; ++k) sum += a(i, k) * b(k, j);
      CHECK(std::abs(prod(i, j) - sum) < 1e-13);
    }
  }

  CHECK_THROWS_AS(multiply(test_support::random_complex(gen, 2),
                           test_support::random_complex(gen, 3)),
                  ContractViolation);
}

TEST_CASE("inverse") {
  std::mt19937_64 gen(102);
  const CMat id = CMat::Identity(3, 3);
  CHECK((inverse(id) - id).norm() < 1e-14);

  const CMat d = diag2(2.0, Complex(0, 1));
  const CMat dinv = inverse(d);
  CHECK(std::abs(dinv(0, 0) - Complex(0.5, 0)) < 1e-14);
  CHECK(std::abs(dinv(1, 1) - Complex(0, -1)) < 1e-14);

  for (int trial = 0; trial < 20; ++trial) {
    const CMat m = test_support::random_complex(gen, 4) + 2.0 * CMat::Identity(4, 4);
    const CMat r = inverse(m) * m - CMat::Identity(4, 4);
    CHECK(r.norm() <= 1e-9);
  }

  CMat singular = CMat::Zero(2, 2);
  singular(0, 0) = 1.0;
  CHECK_THROWS_AS((void)inverse(singular), SingularMatrix);
  try {
    (void)inverse(singular);
  } catch (const SingularMatrix& e) {
    CHECK(e.pivot_magnitude <= 1e-13);
  }
}

TEST_CASE("frobenius_norm") {
  CHECK(frobenius_norm(CMat::Zero(3, 3)) == 0.0);

  CMat m = CMat::Zero(2, 2);
  m(0, 0) = 3.0;
  m(0, 1) = Complex(0, 4);
  CHECK(frobenius_norm(m) == doctest::Approx(5.0));

  // sqrt(tr(M M^H)) computed with an explicit loop.
  std::mt19937_64 gen(103);
  const CMat r = test_support::random_complex(gen, 3);
  Complex trace = 0.0;
  for (Index i = 0; i < 3; ++i) {
    for (Index k = 0; k < 3; ++k) trace += r(i, k) * std::conj(r(i, k));
  }
  CHECK(frobenius_norm(r) == doctest::Approx(std::sqrt(trace.real())).epsilon(1e-12));
}

TEST_CASE("operator_norm on fixed matrices") {
  CHECK(operator_norm(diag2(3.0, Complex(0, -4))) == doctest::Approx(4.0));

  CMat shift = CMat::Zero(2, 2);
  shift(0, 1) = 1.0;
  CHECK(operator_norm(shift) == doctest::Approx(1.0));

  CHECK_THROWS_AS(operator_norm(shift, -1.0), ContractViolation);
}

TEST_CASE("operator_norm agrees with the full deflation spectrum of M^H M") {
  std::mt19937_64 gen(104);
  for (int trial = 0; trial < 10; ++trial) {
    const CMat m = test_support::random_complex(gen, 4);
    const auto eig = hermitian_eigen<double>(m.adjoint() * m);
    const double oracle = std::sqrt(std::max(eig.eigenvalues.maxCoeff(), 0.0));
    CHECK(operator_norm(m) == doctest::Approx(oracle).epsilon(1e-8));
  }
}

TEST_CASE("norm ordering: max entry <= operator <= frobenius <= sqrt(d) operator") {
  std::mt19937_64 gen(105);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = 1 + static_cast<Index>(gen() % 5);
    const CMat m = test_support::random_complex(gen, d);
    const double op = operator_norm(m);
    const double fro = frobenius_norm(m);
    const double max_entry = m.cwiseAbs().maxCoeff();
    const double slack = 1e-10 * (1.0 + fro);
    CHECK(max_entry <= op + slack);
    CHECK(op <= fro + slack);
    CHECK(fro <= std::sqrt(static_cast<double>(d)) * op + slack);
  }
}

TEST_CASE("hermitian_eigen on fixed matrices") {
  const auto id = hermitian_eigen<double>(CMat::Identity(3, 3));
  for (Index i = 0; i < 3; ++i) CHECK(id.eigenvalues(i) == doctest::Approx(1.0));
  CHECK(id.residual <= 1e-10);

  CMat m(2, 2);
  m << 2.0, 1.0, 1.0, 2.0;
  const auto eig = hermitian_eigen<double>(m);
  CHECK(eig.eigenvalues(0) == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(eig.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-10));

  CMat not_hermitian(2, 2);
  not_hermitian << 1.0, Complex(0, 1), Complex(0, 1), 2.0;
  CHECK_THROWS_AS((void)hermitian_eigen<double>(not_hermitian), DomainViolation);
}

TEST_CASE("deflation reconstructs random Hermitian matrices") {
  std::mt19937_64 gen(106);
  for (int trial = 0; trial < 10; ++trial) {
    const CMat m = test_support::random_hermitian(gen, 8);
    const auto eig = hermitian_eigen<double>(m);
    CHECK(eig.residual <= 1e-6);
    // Magnitude-sorted and unit-norm columns.
    for (Index i = 0; i + 1 < 8; ++i) {
      CHECK(std::abs(eig.eigenvalues(i)) >= std::abs(eig.eigenvalues(i + 1)) - 1e-12);
    }
    for (Index i = 0; i < 8; ++i) {
      CHECK(eig.eigenvectors.col(i).norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("deflation handles clustered and indefinite spectra") {
  // Exactly repeated eigenvalues.
  const auto scaled = hermitian_eigen<double>(0.75 * CMat::Identity(4, 4));
  CHECK(scaled.residual <= 1e-10);
  for (Index i = 0; i < 4; ++i) {
    CHECK(scaled.eigenvalues(i) == doctest::Approx(0.75));
  }

  // Opposite-sign pair of equal magnitude, the classic power-method stall.
  CMat flip(2, 2);
  flip << 0.0, 1.0, 1.0, 0.0;
  const auto pm = hermitian_eigen<double>(flip);
  CHECK(pm.residual <= 1e-9);
  CHECK(std::abs(pm.eigenvalues(0)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(pm.eigenvalues(1)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(pm.eigenvalues(0) * pm.eigenvalues(1) == doctest::Approx(-1.0).epsilon(1e-9));

  // Tightly clustered pair.
  std::mt19937_64 gen(107);
  const CMat q = test_support::random_hermitian(gen, 3);
  CMat close = CMat::Identity(3, 3) + 1e-5 * q;
  close = ((close + close.adjoint()) / 2.0).eval();
  const auto cl = hermitian_eigen<double>(close);
  CHECK(cl.residual <= 1e-8);
}

TEST_CASE("general_spectrum") {
  const auto d = general_spectrum(diag2(2.0, Complex(0, 3)));
  CHECK(std::abs(d.values(0) - Complex(0, 3)) < 1e-12);
  CHECK(std::abs(d.values(1) - Complex(2, 0)) < 1e-12);

  CMat rot(2, 2);
  rot << 0.0, -1.0, 1.0, 0.0;
  const auto r = general_spectrum(rot);
  CHECK(std::abs(r.values(0).real()) < 1e-12);
  CHECK(std::abs(std::abs(r.values(0).imag()) - 1.0) < 1e-12);
  CHECK(std::abs(r.values(0) + r.values(1)) < 1e-12);

  // Hermitian input: agrees with the deflation path after sorting.
  std::mt19937_64 gen(108);
  for (int trial = 0; trial < 8; ++trial) {
    const CMat m = test_support::random_hermitian(gen, 5);
    const auto qr = general_spectrum(m);
    const auto defl = hermitian_eigen<double>(m);
    for (Index i = 0; i < 5; ++i) {
      CHECK(std::abs(qr.values(i).imag()) < 1e-8);
      CHECK(qr.values(i).real() ==
            doctest::Approx(defl.eigenvalues(i)).epsilon(1e-8));
    }
  }
}

TEST_CASE("realness rounding of near-real eigenvalues") {
  CMat m(2, 2);
  m << Complex(1.0, 1e-12), Complex(0, 0), Complex(0, 0), Complex(2.0, 1e-12);
  const auto s = general_spectrum(m, 1e-8);
  CHECK(s.values(0).imag() == 0.0);
  CHECK(s.values(1).imag() == 0.0);
}

TEST_CASE("hermitian matrix functions") {
  const CMat id = CMat::Identity(3, 3);
  CHECK((hermitian_sqrt(id) - id).norm() < 1e-12);

  const CMat logd = hermitian_log(diag2(std::exp(1.0), std::exp(2.0)));
  CHECK(std::abs(logd(0, 0) - Complex(1, 0)) < 1e-10);
  CHECK(std::abs(logd(1, 1) - Complex(2, 0)) < 1e-10);

  std::mt19937_64 gen(109);
  for (int trial = 0; trial < 8; ++trial) {
    const CMat p = test_support::random_spd(gen, 4).cast<Complex>();
    CHECK((hermitian_exp(hermitian_log(p)) - p).norm() <= 1e-7 * 4);
    const CMat s = hermitian_sqrt(p);
    CHECK((s * s - p).norm() <= 1e-7 * 4);
    const CMat is = hermitian_inv_sqrt(p);
    CHECK((s * is - CMat::Identity(4, 4)).norm() <= 1e-8);
    const CMat p03 = hermitian_pow(p, 0.3);
    const CMat p07 = hermitian_pow(p, 0.7);
    CHECK((p03 * p07 - p).norm() <= 1e-7 * 4);
  }

  CMat indefinite(2, 2);
  indefinite << 1.0, 0.0, 0.0, -2.0;
  CHECK_THROWS_AS((void)hermitian_sqrt(indefinite), DomainViolation);
  CHECK_THROWS_AS((void)hermitian_log(indefinite), DomainViolation);
  CHECK_NOTHROW((void)hermitian_exp(indefinite));
}

TEST_CASE("matrix sqrt counter") {
  CallCounters counters;
  const CMat p = (2.0 * CMat::Identity(3, 3)).eval();
  (void)hermitian_sqrt(p, &counters);
  (void)hermitian_inv_sqrt(p, &counters);
  CHECK(counters.snapshot().matrix_sqrt == 2);
  (void)operator_norm(p, 1e-12, &counters);
  CHECK(counters.snapshot().operator_norm == 1);
}

TEST_CASE("is_symmetric_complex uses the plain transpose") {
  CMat sym(2, 2);
  sym << 1.0, Complex(0, 1), Complex(0, 1), 2.0;
  CHECK(is_symmetric_complex(sym));

  CMat herm(2, 2);
  herm << 1.0, Complex(0, 1), Complex(0, -1), 2.0;
  CHECK_FALSE(is_symmetric_complex(herm));

  CHECK(is_symmetric_complex(CMat::Zero(3, 3)));
}

TEST_CASE("power iteration is deterministic") {
  std::mt19937_64 gen(110);
  const CMat m = test_support::random_hermitian(gen, 6);
  const auto a = hermitian_eigen<double>(m);
  const auto b = hermitian_eigen<double>(m);
  CHECK((a.eigenvectors - b.eigenvectors).norm() == 0.0);
  CHECK((a.eigenvalues - b.eigenvalues).norm() == 0.0);
}
