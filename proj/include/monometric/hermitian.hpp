#pragma once

#include <complex>
#include <cstdint>
#include <functional>

#include <Eigen/Dense>

#include "monometric/error.hpp"

namespace monometric {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Default eigenvalue floor for density matrices.
inline constexpr double kDefaultFloor = 1e-9;

/// Hermitian matrix stored in canonical form (M + M^*)/2.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  /// Checks Hermitian symmetry to `tol` (relative to max(1, max|M_jk|)) and
  /// symmetrizes.  Throws not_hermitian / dimension_mismatch.
  explicit HermitianMatrix(const ComplexMatrix& m, double tol = 1e-10);

  /// Symmetrizes without checking.
  static HermitianMatrix symmetrized(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }
  double trace() const { return m_.trace().real(); }

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator*(double s, const HermitianMatrix& a);

 private:
  ComplexMatrix m_;
};

struct SpectralDecomposition {
  RealVector eigenvalues;  // descending
  ComplexMatrix unitary;   // columns are eigenvectors

  ComplexMatrix reconstruct() const;
};

SpectralDecomposition spectral_decompose(const HermitianMatrix& h);

/// f(H) by spectral calculus.
HermitianMatrix matrix_function(const HermitianMatrix& h, const std::function<double(double)>& f);

/// Tr f(H) = sum_i f(lambda_i).
double trace_function(const HermitianMatrix& h, const std::function<double(double)>& f);

double min_eigenvalue(const HermitianMatrix& h);

/// Strictly positive, trace-one Hermitian matrix with cached spectrum.
class DensityMatrix {
 public:
  /// Validates and normalizes.  Errors (distinct kinds): not_hermitian,
  /// trace_mismatch, not_strictly_positive.
  static DensityMatrix validate(const ComplexMatrix& m, double eps_min = kDefaultFloor);

  const HermitianMatrix& hermitian() const noexcept { return h_; }
  const ComplexMatrix& matrix() const noexcept { return h_.matrix(); }
  const SpectralDecomposition& spectrum() const noexcept { return spectrum_; }
  const RealVector& eigenvalues() const noexcept { return spectrum_.eigenvalues; }
  const ComplexMatrix& unitary() const noexcept { return spectrum_.unitary; }
  Eigen::Index dim() const noexcept { return h_.dim(); }
  double floor() const noexcept { return floor_; }

 private:
  DensityMatrix(HermitianMatrix h, SpectralDecomposition s, double floor)
      : h_(std::move(h)), spectrum_(std::move(s)), floor_(floor) {}

  HermitianMatrix h_;
  SpectralDecomposition spectrum_;
  double floor_ = kDefaultFloor;
};

/// Traceless Hermitian matrix (tangent at a point of the state space).
class TangentVector {
 public:
  TangentVector() = default;

  /// Throws not_hermitian or trace_mismatch when |Tr M| > 1e-12 * max(1, |M|_F).
  explicit TangentVector(const ComplexMatrix& m);
  explicit TangentVector(const HermitianMatrix& h);

  /// Removes the trace: A - (Tr A / n) I.
  static TangentVector trace_projected(const ComplexMatrix& m);

  const HermitianMatrix& hermitian() const noexcept { return h_; }
  const ComplexMatrix& matrix() const noexcept { return h_.matrix(); }
  Eigen::Index dim() const noexcept { return h_.dim(); }

 private:
  HermitianMatrix h_;
};

DensityMatrix validate_density(const ComplexMatrix& m, double eps_min = kDefaultFloor);

/// Normalized Ginibre state, mixed with I/n when needed so that
/// lambda_min >= eps_min.  Deterministic in (n, seed, eps_min).
DensityMatrix random_density(Eigen::Index n, std::uint64_t seed, double eps_min = kDefaultFloor);

TangentVector random_tangent(Eigen::Index n, std::uint64_t seed);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
ComplexMatrix random_unitary(Eigen::Index n, std::uint64_t seed);

/// U^* A U where U diagonalizes D.
ComplexMatrix to_eigenbasis(const DensityMatrix& d, const TangentVector& a);
ComplexMatrix to_eigenbasis(const DensityMatrix& d, const ComplexMatrix& a);

bool is_unitary(const ComplexMatrix& u, double tol = 1e-10);

/// Re Tr(XY) without forming the product.
double real_trace_product(const ComplexMatrix& x, const ComplexMatrix& y);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix diagonal(std::initializer_list<double> values);

}  // namespace monometric
