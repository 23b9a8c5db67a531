#include "monometric/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "monometric/random.hpp"

namespace monometric {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain error";
    case ErrorKind::not_hermitian: return "not Hermitian";
    case ErrorKind::trace_mismatch: return "trace mismatch";
    case ErrorKind::not_strictly_positive: return "not strictly positive";
    case ErrorKind::numerical_failure: return "numerical failure";
    case ErrorKind::degenerate_spectrum: return "degenerate spectrum";
    case ErrorKind::step_too_large: return "step too large";
    case ErrorKind::dimension_mismatch: return "dimension mismatch";
    case ErrorKind::bad_partition: return "bad partition";
    case ErrorKind::not_column_stochastic: return "not column-stochastic";
    case ErrorKind::not_trace_preserving: return "not trace-preserving";
    case ErrorKind::non_unitary: return "non-unitary";
    case ErrorKind::parse: return "parse error";
  }
  return "error";
}

namespace {

void require_square(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << "expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorKind::dimension_mismatch, os.str());
  }
  if (!m.allFinite()) throw Error(ErrorKind::domain, "matrix has non-finite entries");
}

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m, double tol) {
  require_square(m);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol * scale) {
    std::ostringstream os;
    os << "max |M - M^*| = " << asym;
    throw Error(ErrorKind::not_hermitian, os.str());
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
  require_square(m);
  HermitianMatrix h;
  h.m_ = 0.5 * (m + m.adjoint());
  return h;
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix::symmetrized(a.m_ + b.m_);
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix::symmetrized(a.m_ - b.m_);
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) {
  return HermitianMatrix::symmetrized(s * a.m_);
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  return unitary * eigenvalues.cast<Complex>().asDiagonal() * unitary.adjoint();
}

SpectralDecomposition spectral_decompose(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::numerical_failure, "Hermitian eigensolver did not converge");
  // Eigen returns ascending order.
  SpectralDecomposition s;
  s.eigenvalues = solver.eigenvalues().reverse();
  s.unitary = solver.eigenvectors().rowwise().reverse();
  return s;
}

HermitianMatrix matrix_function(const HermitianMatrix& h, const std::function<double(double)>& f) {
  const auto s = spectral_decompose(h);
  RealVector fl = s.eigenvalues.unaryExpr(f);
  return HermitianMatrix::symmetrized(s.unitary * fl.cast<Complex>().asDiagonal() * s.unitary.adjoint());
}

double trace_function(const HermitianMatrix& h, const std::function<double(double)>& f) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::numerical_failure, "Hermitian eigensolver did not converge");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) sum += f(solver.eigenvalues()(i));
  return sum;
}

double min_eigenvalue(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::numerical_failure, "Hermitian eigensolver did not converge");
  return solver.eigenvalues()(0);
}

DensityMatrix DensityMatrix::validate(const ComplexMatrix& m, double eps_min) {
  HermitianMatrix h(m, 1e-10);
  const double tr = h.trace();
  if (std::abs(tr - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "trace is " << tr;
    throw Error(ErrorKind::trace_mismatch, os.str());
  }
  h = HermitianMatrix::symmetrized(h.matrix() / tr);
  auto spectrum = spectral_decompose(h);
  const double lmin = spectrum.eigenvalues(spectrum.eigenvalues.size() - 1);
  if (!(lmin >= eps_min)) {
    std::ostringstream os;
    os << "smallest eigenvalue " << lmin << " is below the floor " << eps_min;
    throw Error(ErrorKind::not_strictly_positive, os.str());
  }
  return DensityMatrix(std::move(h), std::move(spectrum), eps_min);
}

DensityMatrix validate_density(const ComplexMatrix& m, double eps_min) {
  return DensityMatrix::validate(m, eps_min);
}

TangentVector::TangentVector(const ComplexMatrix& m) : TangentVector(HermitianMatrix(m)) {}

TangentVector::TangentVector(const HermitianMatrix& h) : h_(h) {
  const double tr = h_.trace();
  if (std::abs(tr) > 1e-12 * std::max(1.0, h_.matrix().norm())) {
    std::ostringstream os;
    os << "tangent vectors must be traceless, trace is " << tr;
    throw Error(ErrorKind::trace_mismatch, os.str());
  }
}

TangentVector TangentVector::trace_projected(const ComplexMatrix& m) {
  auto h = HermitianMatrix::symmetrized(m);
  const auto n = h.dim();
  ComplexMatrix a = h.matrix();
  a.diagonal().array() -= Complex(h.trace() / static_cast<double>(n), 0.0);
  return TangentVector(HermitianMatrix::symmetrized(a));
}

DensityMatrix random_density(Eigen::Index n, std::uint64_t seed, double eps_min) {
  if (n < 2) throw Error(ErrorKind::domain, "random_density needs n >= 2");
  const double delta_fallback = eps_min * static_cast<double>(n) * 2.0;
  if (!(eps_min >= 0.0) || delta_fallback >= 1.0)
    throw Error(ErrorKind::domain, "eigenvalue floor too large for the dimension");

  Rng rng(seed);
  const ComplexMatrix g = rng.ginibre(n, n);
  ComplexMatrix w = g * g.adjoint();
  w /= w.trace().real();
  const auto wh = HermitianMatrix::symmetrized(w);
  double delta = 0.0;
  if (min_eigenvalue(wh) < eps_min) delta = delta_fallback;
  ComplexMatrix d = (1.0 - delta) * wh.matrix();
  d.diagonal().array() += Complex(delta / static_cast<double>(n), 0.0);
  return DensityMatrix::validate(d, eps_min);
}

TangentVector random_tangent(Eigen::Index n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorKind::domain, "random_tangent needs n >= 2");
  Rng rng(mix64(seed) ^ 0x7a6e67656e74ULL);
  return TangentVector::trace_projected(rng.ginibre(n, n));
}

ComplexMatrix random_unitary(Eigen::Index n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::domain, "random_unitary needs n >= 1");
  Rng rng(mix64(seed) ^ 0x756e6974617279ULL);
  const ComplexMatrix g = rng.ginibre(n, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

ComplexMatrix to_eigenbasis(const DensityMatrix& d, const ComplexMatrix& a) {
  if (a.rows() != d.dim() || a.cols() != d.dim())
    throw Error(ErrorKind::dimension_mismatch, "tangent and density dimensions differ");
  ComplexMatrix r = d.unitary().adjoint() * a * d.unitary();
  return 0.5 * (r + r.adjoint());
}

ComplexMatrix to_eigenbasis(const DensityMatrix& d, const TangentVector& a) {
  return to_eigenbasis(d, a.matrix());
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

double real_trace_product(const ComplexMatrix& x, const ComplexMatrix& y) {
  // Tr(XY) = sum_jk X_jk Y_kj
  return x.cwiseProduct(y.transpose()).sum().real();
}

ComplexMatrix pauli_x() {
  ComplexMatrix s(2, 2);
  s << 0.0, 1.0, 1.0, 0.0;
  return s;
}

ComplexMatrix pauli_y() {
  ComplexMatrix s(2, 2);
  s << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return s;
}

ComplexMatrix pauli_z() {
  ComplexMatrix s(2, 2);
  s << 1.0, 0.0, 0.0, -1.0;
  return s;
}

ComplexMatrix diagonal(std::initializer_list<double> values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  Eigen::Index i = 0;
  for (double v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

}  // namespace monometric
