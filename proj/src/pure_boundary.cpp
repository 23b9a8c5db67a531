#include "monometric/pure_boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace monometric {

BoundarySequence::BoundarySequence(std::vector<double> eps_grid, std::vector<double> weights)
    : eps_(std::move(eps_grid)), w_(std::move(weights)) {
  if (eps_.empty()) throw Error(ErrorKind::domain, "empty eps grid");
  if (w_.empty()) throw Error(ErrorKind::domain, "need at least one weight (n >= 2)");
  for (double w : w_)
    if (!(w > 0.0) || !std::isfinite(w)) throw Error(ErrorKind::domain, "weights must be positive");
  for (std::size_t i = 0; i < eps_.size(); ++i) {
    if (!(eps_[i] > 0.0)) throw Error(ErrorKind::domain, "eps values must be positive");
    if (i > 0 && !(eps_[i] < eps_[i - 1])) throw Error(ErrorKind::domain, "eps grid must be strictly decreasing");
  }
  const double wsum = std::accumulate(w_.begin(), w_.end(), 0.0);
  const double wmax = *std::max_element(w_.begin(), w_.end());
  if (!(1.0 - eps_.front() * wsum > eps_.front() * wmax + 1e-8))
    throw Error(ErrorKind::domain, "largest eps leaves no gap at the top eigenvalue");
}

BoundarySequence BoundarySequence::standard(Eigen::Index n) {
  if (n < 2) throw Error(ErrorKind::domain, "need n >= 2");
  return BoundarySequence({1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7}, std::vector<double>(static_cast<std::size_t>(n - 1), 1.0));
}

RealVector BoundarySequence::eigenvalues(double eps) const {
  const double wsum = std::accumulate(w_.begin(), w_.end(), 0.0);
  RealVector lambda(dim());
  lambda(0) = 1.0 - eps * wsum;
  for (std::size_t i = 0; i < w_.size(); ++i) lambda(static_cast<Eigen::Index>(i) + 1) = eps * w_[i];
  return lambda;
}

DensityMatrix BoundarySequence::at(double eps) const {
  const RealVector lambda = eigenvalues(eps);
  return DensityMatrix::validate(lambda.cast<Complex>().asDiagonal().toDenseMatrix(),
                                 std::numeric_limits<double>::min());
}

PureState radial_projection(const DensityMatrix& d) {
  const RealVector& p = d.eigenvalues();
  if (!(p(0) - p(1) > 1e-8)) throw Error(ErrorKind::degenerate_spectrum, "top eigenvalue is not simple");
  ComplexVector v = d.unitary().col(0);
  v.normalize();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > 1e-12) {
      v *= std::conj(v(i)) / a;
      v(i) = a;
      break;
    }
  }
  return {v, v * v.adjoint()};
}

namespace {

RealVector diagonal_eigenvalues(const DensityMatrix& d) {
  const ComplexMatrix& m = d.matrix();
  const ComplexMatrix off = m - ComplexMatrix(m.diagonal().asDiagonal());
  if (off.cwiseAbs().maxCoeff() > 1e-14)
    throw Error(ErrorKind::domain, "horizontal lifts are defined at diagonal base points");
  RealVector lambda = m.diagonal().real();
  for (Eigen::Index i = 1; i < lambda.size(); ++i)
    if (lambda(i) > lambda(0)) throw Error(ErrorKind::domain, "the first diagonal entry must be the largest");
  return lambda;
}

void require_length(const RealVector& lambda, const HorizontalVector& u) {
  if (static_cast<Eigen::Index>(u.u.size()) + 1 != lambda.size()) {
    std::ostringstream os;
    os << "horizontal vector needs " << lambda.size() - 1 << " components, got " << u.u.size();
    throw Error(ErrorKind::dimension_mismatch, os.str());
  }
}

}  // namespace

TangentVector horizontal_lift(const DensityMatrix& d, const HorizontalVector& u) {
  const RealVector lambda = diagonal_eigenvalues(d);
  require_length(lambda, u);
  ComplexMatrix a = ComplexMatrix::Zero(lambda.size(), lambda.size());
  for (Eigen::Index i = 1; i < lambda.size(); ++i) {
    const Complex ui = u.u[static_cast<std::size_t>(i - 1)];
    a(i, 0) = (lambda(0) - lambda(i)) * ui;
    a(0, i) = (lambda(0) - lambda(i)) * std::conj(ui);
  }
  return TangentVector(a);
}

double lifted_inner(const MonotoneFunctionKind& kind, const RealVector& lambda, const HorizontalVector& u,
                    const HorizontalVector& v) {
  require_length(lambda, u);
  require_length(lambda, v);
  double sum = 0.0;
  for (Eigen::Index i = 1; i < lambda.size(); ++i) {
    const double gap = lambda(0) - lambda(i);
    const auto k = static_cast<std::size_t>(i - 1);
    sum += gap * gap / (kind.f(lambda(i) / lambda(0)) * lambda(0)) * (u.u[k] * std::conj(v.u[k])).real();
  }
  return 2.0 * sum;
}

double lifted_inner(const MonotoneFunctionKind& kind, const DensityMatrix& d, const HorizontalVector& u,
                    const HorizontalVector& v) {
  return lifted_inner(kind, diagonal_eigenvalues(d), u, v);
}

double fubini_study(const HorizontalVector& u, const HorizontalVector& v) {
  if (u.u.size() != v.u.size()) throw Error(ErrorKind::dimension_mismatch, "horizontal vectors differ in length");
  double sum = 0.0;
  for (std::size_t i = 0; i < u.u.size(); ++i) sum += (u.u[i] * std::conj(v.u[i])).real();
  return 2.0 * sum;
}

LimitReport radial_extension_limit(const MonotoneFunctionKind& kind, const BoundarySequence& seq,
                                   const HorizontalVector& u, const HorizontalVector& v) {
  LimitReport report;
  report.f0 = kind.f_at_zero();
  report.h = fubini_study(u, v);
  report.divergent = report.f0 == 0.0;
  if (!report.divergent) report.limit = report.h / report.f0;

  for (double eps : seq.eps_grid()) {
    report.eps.push_back(eps);
    report.values.push_back(lifted_inner(kind, seq.eigenvalues(eps), u, v));
  }

  if (report.limit) {
    const double scale = std::abs(*report.limit) > 0.0 ? std::abs(*report.limit) : 1.0;
    for (double value : report.values) report.errors.push_back(std::abs(value - *report.limit) / scale);
    report.monotone_decay = true;
    for (std::size_t i = 1; i < report.errors.size(); ++i)
      if (report.errors[i] > report.errors[i - 1] + 1e-12) report.monotone_decay = false;
    report.final_error = report.errors.back();
    report.converged = report.final_error <= kLimitRelTol;
  } else {
    report.growth_confirmed = report.values.size() >= 2;
    for (std::size_t i = 1; i < report.values.size(); ++i)
      if (!(std::abs(report.values[i]) > std::abs(report.values[i - 1]))) report.growth_confirmed = false;
    report.exceeds_threshold = std::abs(report.values.back()) > kDivergenceFactor * std::abs(report.h);
  }
  return report;
}

}  // namespace monometric
