#pragma once

#include <Eigen/Dense>

#include <atomic>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace siegel {

using Index = Eigen::Index;

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using RealMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (dimension mismatch, parameter
/// out of range, non-collinear inputs, ...).
struct ContractViolation : Error {
  using Error::Error;
};

/// An input lies outside the mathematical domain of the operation
/// (non-Hermitian matrix, point on or past a model boundary, nonpositive
/// eigenvalue fed to a matrix logarithm, ...).
struct DomainViolation : Error {
  using Error::Error;
};

/// Elimination hit a pivot below the singularity threshold.
struct SingularMatrix : Error {
  SingularMatrix(const std::string& message, double pivot)
      : Error(message), pivot_magnitude(pivot) {}
  double pivot_magnitude;
};

/// An iterative solver did not converge within its iteration budget.
struct NumericalConvergence : Error {
  using Error::Error;
};

/// A computed quantity landed outside its provable range by more than the
/// rounding tolerance; usually means the inputs sit too close to a boundary.
struct NumericalDomain : Error {
  using Error::Error;
};

/// Malformed input file.
struct ParseError : Error {
  using Error::Error;
};

/// Instrumentation tallies. Functions that perform a Hermitian matrix square
/// root or an operator-norm evaluation accept an optional pointer to one of
/// these and bump the matching counter.
struct CallCounters {
  std::atomic<long long> matrix_sqrt{0};
  std::atomic<long long> operator_norm{0};

  struct Snapshot {
    long long matrix_sqrt = 0;
    long long operator_norm = 0;
  };

  Snapshot snapshot() const {
    return {matrix_sqrt.load(std::memory_order_relaxed),
            operator_norm.load(std::memory_order_relaxed)};
  }

  void reset() {
    matrix_sqrt.store(0, std::memory_order_relaxed);
    operator_norm.store(0, std::memory_order_relaxed);
  }
};

inline void count_matrix_sqrt(CallCounters* counters, long long n = 1) {
  if (counters) counters->matrix_sqrt.fetch_add(n, std::memory_order_relaxed);
}

inline void count_operator_norm(CallCounters* counters, long long n = 1) {
  if (counters) counters->operator_norm.fetch_add(n, std::memory_order_relaxed);
}

}  // namespace siegel
