#include "monometric/metric.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace monometric {

namespace {

ComplexMatrix density_power(const DensityMatrix& d, double q) {
  const RealVector pq = d.eigenvalues().array().pow(q);
  return d.unitary() * pq.cast<Complex>().asDiagonal() * d.unitary().adjoint();
}

void require_same_dim(const DensityMatrix& d, const ComplexMatrix& a) {
  if (a.rows() != d.dim() || a.cols() != d.dim()) {
    std::ostringstream os;
    os << "expected " << d.dim() << "x" << d.dim() << " argument, got " << a.rows() << "x" << a.cols();
    throw Error(ErrorKind::dimension_mismatch, os.str());
  }
}

// The stencil points D + tA + sB, t, s in {+h, -h}, must stay strictly positive.
DensityMatrix shifted_density(const DensityMatrix& d, const ComplexMatrix& shift) {
  try {
    return DensityMatrix::validate(d.matrix() + shift, std::numeric_limits<double>::min());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::not_strictly_positive)
      throw Error(ErrorKind::step_too_large, "finite-difference stencil leaves the positive cone");
    throw;
  }
}

}  // namespace

double metric_value(const MonotoneFunctionKind& kind, const DensityMatrix& d, const ComplexMatrix& a,
                    const ComplexMatrix& b) {
  const ComplexMatrix ap = to_eigenbasis(d, a);
  const ComplexMatrix bp = to_eigenbasis(d, b);
  const RealVector& p = d.eigenvalues();
  const auto n = d.dim();
  double sum = 0.0;
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index j = 0; j < n; ++j)
      sum += kind.c(p(j), p(k)) * (std::conj(ap(j, k)) * bp(j, k)).real();
  return sum;
}

double metric_value(const MonotoneFunctionKind& kind, const DensityMatrix& d, const TangentVector& a,
                    const TangentVector& b) {
  return metric_value(kind, d, a.matrix(), b.matrix());
}

double metric_rld(const DensityMatrix& d, const TangentVector& a, const TangentVector& b) {
  require_same_dim(d, a.matrix());
  require_same_dim(d, b.matrix());
  const Eigen::PartialPivLU<ComplexMatrix> lu(d.matrix());
  const ComplexMatrix anticomm = a.matrix() * b.matrix() + b.matrix() * a.matrix();
  return 0.5 * lu.solve(anticomm).trace().real();
}

HermitianMatrix solve_lyapunov(const DensityMatrix& d, const HermitianMatrix& b) {
  const ComplexMatrix bp = to_eigenbasis(d, b.matrix());
  const RealVector& p = d.eigenvalues();
  ComplexMatrix gp(bp.rows(), bp.cols());
  for (Eigen::Index k = 0; k < gp.cols(); ++k)
    for (Eigen::Index j = 0; j < gp.rows(); ++j) gp(j, k) = 2.0 * bp(j, k) / (p(j) + p(k));
  return HermitianMatrix::symmetrized(d.unitary() * gp * d.unitary().adjoint());
}

double metric_sld(const DensityMatrix& d, const TangentVector& a, const TangentVector& b) {
  require_same_dim(d, a.matrix());
  const auto g = solve_lyapunov(d, b.hermitian());
  return real_trace_product(a.matrix(), g.matrix());
}

double metric_km_quadrature(const DensityMatrix& d, const TangentVector& a, const TangentVector& b,
                            double rel_tol) {
  if (!(rel_tol >= 1e-10 && rel_tol <= 1e-3))
    throw Error(ErrorKind::domain, "rel_tol must lie in [1e-10, 1e-3]");
  require_same_dim(d, a.matrix());
  require_same_dim(d, b.matrix());
  const auto n = d.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  // With t = s/(1-s): (D+t)^{-1} dt^{1/2} = ((1-s)D + sI)^{-1} ds^{1/2}, so the
  // transformed integrand stays bounded on [0, 1].
  const auto integrand = [&](double s) {
    const Eigen::PartialPivLU<ComplexMatrix> lu((1.0 - s) * d.matrix() + s * id);
    const ComplexMatrix ra = lu.solve(a.matrix());
    const ComplexMatrix rb = lu.solve(b.matrix());
    return real_trace_product(ra, rb);
  };
  double error = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, 1.0, 20, rel_tol, &error);
  if (!std::isfinite(value) || error > rel_tol * std::max(std::abs(value), 1e-300)) {
    std::ostringstream os;
    os << "quadrature did not reach rel_tol " << rel_tol << " (error estimate " << error << ")";
    throw Error(ErrorKind::numerical_failure, os.str());
  }
  return value;
}

EntropyGenerator EntropyGenerator::t_log_t() {
  return {"t log t", [](double t) { return t > 0.0 ? t * std::log(t) : 0.0; }};
}

EntropyGenerator EntropyGenerator::square() {
  return {"t^2", [](double t) { return t * t; }};
}

double hessian_metric(const EntropyGenerator& gen, const DensityMatrix& d, const TangentVector& a,
                      const TangentVector& b, double step) {
  require_same_dim(d, a.matrix());
  require_same_dim(d, b.matrix());
  if (!(step > 0.0)) throw Error(ErrorKind::domain, "step must be positive");
  const auto value = [&](double t, double s) {
    const auto point = shifted_density(d, t * a.matrix() + s * b.matrix());
    return trace_function(point.hermitian(), gen.g);
  };
  const double h = step;
  return (value(h, h) - value(h, -h) - value(-h, h) + value(-h, -h)) / (4.0 * h * h);
}

double relative_entropy(const DensityMatrix& d1, const DensityMatrix& d2) {
  if (d1.dim() != d2.dim()) throw Error(ErrorKind::dimension_mismatch, "densities differ in dimension");
  const RealVector log_p1 = d1.eigenvalues().array().log();
  const RealVector log_p2 = d2.eigenvalues().array().log();
  const ComplexMatrix log_d1 = d1.unitary() * log_p1.cast<Complex>().asDiagonal() * d1.unitary().adjoint();
  const ComplexMatrix log_d2 = d2.unitary() * log_p2.cast<Complex>().asDiagonal() * d2.unitary().adjoint();
  return real_trace_product(d1.matrix(), log_d1 - log_d2);
}

double classical_relative_entropy(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw Error(ErrorKind::dimension_mismatch, "vectors differ in length");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0 || q[i] < 0.0) throw Error(ErrorKind::domain, "probabilities must be nonnegative");
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return std::numeric_limits<double>::infinity();
    sum += p[i] * (std::log(p[i]) - std::log(q[i]));
  }
  return sum;
}

double alpha_entropy(const DensityMatrix& d1, const DensityMatrix& d2, double alpha) {
  if (!(alpha > -2.0 && alpha < 2.0)) throw Error(ErrorKind::domain, "alpha must lie in (-2, 2)");
  if (d1.dim() != d2.dim()) throw Error(ErrorKind::dimension_mismatch, "densities differ in dimension");
  if (alpha == -1.0) return relative_entropy(d1, d2);
  if (alpha == 1.0) return relative_entropy(d2, d1);
  const double q = (1.0 + alpha) / 2.0;
  // Tr (I - D2^q D1^{-q}) D1 = Tr D1 - Tr D2^q D1^{1-q}
  const double overlap = real_trace_product(density_power(d2, q), density_power(d1, 1.0 - q));
  return 4.0 / (1.0 - alpha * alpha) * (d1.hermitian().trace() - overlap);
}

double alpha_metric_hessian(const DensityMatrix& d, const TangentVector& a, const TangentVector& b,
                            double alpha, double step) {
  if (!(alpha > -2.0 && alpha < 2.0) || alpha == 1.0 || alpha == -1.0)
    throw Error(ErrorKind::domain, "alpha must lie in (-2, 2) without +-1");
  require_same_dim(d, a.matrix());
  require_same_dim(d, b.matrix());
  if (!(step > 0.0)) throw Error(ErrorKind::domain, "step must be positive");
  const double h = step;
  const auto d1p = shifted_density(d, h * a.matrix());
  const auto d1m = shifted_density(d, -h * a.matrix());
  const auto d2p = shifted_density(d, h * b.matrix());
  const auto d2m = shifted_density(d, -h * b.matrix());
  const double mixed = alpha_entropy(d1p, d2p, alpha) - alpha_entropy(d1p, d2m, alpha) -
                       alpha_entropy(d1m, d2p, alpha) + alpha_entropy(d1m, d2m, alpha);
  // Negated so that commuting tangents give sum a_i b_i / p_i.
  return -mixed / (4.0 * h * h);
}

double commutator_ratio_constant(double alpha) { return -4.0 / (1.0 - alpha * alpha); }

CommutatorForm commutator_form(const DensityMatrix& d, const HermitianMatrix& x, double alpha) {
  if (!(alpha > -1.0 && alpha < 1.0)) throw Error(ErrorKind::domain, "alpha must lie in (-1, 1)");
  require_same_dim(d, x.matrix());
  const ComplexMatrix& dm = d.matrix();
  const ComplexMatrix& xm = x.matrix();
  const ComplexMatrix comm = dm * xm - xm * dm;
  const ComplexMatrix tangent = Complex(0.0, 1.0) * comm;

  CommutatorForm out;
  out.metric = metric_value(MonotoneFunctionKind::wyd(alpha), d, tangent, tangent);
  const double beta = (1.0 - alpha) / 2.0;
  const ComplexMatrix db = density_power(d, beta);
  const ComplexMatrix dc = density_power(d, 1.0 - beta);
  out.raw_trace = real_trace_product(db * xm - xm * db, dc * xm - xm * dc);
  if (comm.norm() > 1e-12 * std::max(1.0, xm.norm())) out.ratio = out.metric / out.raw_trace;
  return out;
}

double mc_function_from_pair(double p, double lambda, double mu) {
  if (!(p > 0.0 && p < 1.0)) throw Error(ErrorKind::domain, "p must lie in (0, 1)");
  if (!(lambda > 0.0 && mu > 0.0)) throw Error(ErrorKind::domain, "arguments must be positive");
  if (lambda == mu) return 1.0 / mu;
  const double a = 1.0;
  const double b = 1.0 / (p * (1.0 - p));
  const auto g = [&](double x) { return a * std::pow(x, p); };
  const auto g_star = [&](double x) { return b * std::pow(x, 1.0 - p); };
  const double diff = lambda - mu;
  return (g(lambda) - g(mu)) * (g_star(lambda) - g_star(mu)) / (diff * diff);
}

TangentSplit decompose_tangent(const DensityMatrix& d, const TangentVector& a) {
  const RealVector& p = d.eigenvalues();
  for (Eigen::Index i = 0; i + 1 < p.size(); ++i)
    if (p(i) - p(i + 1) <= 1e-8)
      throw Error(ErrorKind::degenerate_spectrum, "eigenvalue gap below 1e-8");
  const ComplexMatrix ap = to_eigenbasis(d, a);
  const ComplexMatrix diag = ap.diagonal().asDiagonal();
  const ComplexMatrix off = ap - diag;
  const ComplexMatrix& u = d.unitary();
  return {TangentVector::trace_projected(u * diag * u.adjoint()),
          TangentVector(HermitianMatrix::symmetrized(u * off * u.adjoint()))};
}

}  // namespace monometric
