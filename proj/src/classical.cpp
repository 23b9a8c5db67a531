#include "monometric/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace monometric {

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw Error(ErrorKind::domain, "empty probability vector");
  for (double x : p_)
    if (!(x >= 0.0) || !std::isfinite(x)) throw Error(ErrorKind::domain, "probabilities must be nonnegative");
  const double sum = std::accumulate(p_.begin(), p_.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "probabilities sum to " << sum;
    throw Error(ErrorKind::trace_mismatch, os.str());
  }
}

bool ProbabilityVector::strictly_positive() const noexcept {
  return std::all_of(p_.begin(), p_.end(), [](double x) { return x > 0.0; });
}

SimplexTangent::SimplexTangent(std::vector<double> u) : u_(std::move(u)) {
  if (u_.empty()) throw Error(ErrorKind::domain, "empty tangent");
  double sum = 0.0;
  double scale = 1.0;
  for (double x : u_) {
    if (!std::isfinite(x)) throw Error(ErrorKind::domain, "non-finite tangent component");
    sum += x;
    scale = std::max(scale, std::abs(x));
  }
  if (std::abs(sum) > 1e-12 * scale) {
    std::ostringstream os;
    os << "simplex tangents must sum to zero, got " << sum;
    throw Error(ErrorKind::trace_mismatch, os.str());
  }
}

double fisher_form(const ProbabilityVector& p, const SimplexTangent& u, const SimplexTangent& v) {
  if (u.size() != p.size() || v.size() != p.size())
    throw Error(ErrorKind::dimension_mismatch, "tangent and distribution lengths differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] > 0.0)) throw Error(ErrorKind::domain, "Fisher form needs a strictly positive distribution");
    sum += u[i] * v[i] / p[i];
  }
  return sum;
}

namespace {

double bhattacharyya(const ProbabilityVector& p, const ProbabilityVector& r) {
  if (p.size() != r.size()) throw Error(ErrorKind::dimension_mismatch, "distributions differ in length");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::sqrt(p[i] * r[i]);
  return std::clamp(s, 0.0, 1.0);
}

}  // namespace

double geodesic_distance(const ProbabilityVector& p, const ProbabilityVector& r) {
  return 2.0 * std::acos(bhattacharyya(p, r));
}

double hellinger(const ProbabilityVector& p, const ProbabilityVector& r) {
  if (p.size() != r.size()) throw Error(ErrorKind::dimension_mismatch, "distributions differ in length");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = std::sqrt(p[i]) - std::sqrt(r[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

DensityMatrix embed_diagonal(const ProbabilityVector& p, double eps_min) {
  const auto n = static_cast<Eigen::Index>(p.size());
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = p[static_cast<std::size_t>(i)];
  return DensityMatrix::validate(d, eps_min);
}

TangentVector embed_tangent(const SimplexTangent& u) {
  const auto n = static_cast<Eigen::Index>(u.size());
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) a(i, i) = u[static_cast<std::size_t>(i)];
  return TangentVector(a);
}

namespace {

std::vector<double> multiply(const Eigen::MatrixXd& pi, const std::vector<double>& x) {
  if (pi.cols() != static_cast<Eigen::Index>(x.size()))
    throw Error(ErrorKind::dimension_mismatch, "stochastic matrix and vector sizes differ");
  const Eigen::VectorXd y = pi * Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
  return {y.data(), y.data() + y.size()};
}

}  // namespace

ProbabilityVector push_forward(const Eigen::MatrixXd& pi, const ProbabilityVector& p) {
  auto q = multiply(pi, p.values());
  // Renormalize away rounding so the image satisfies the 1e-12 sum invariant.
  const double s = std::accumulate(q.begin(), q.end(), 0.0);
  for (double& x : q) x /= s;
  return ProbabilityVector(std::move(q));
}

SimplexTangent push_forward(const Eigen::MatrixXd& pi, const SimplexTangent& u) {
  auto v = multiply(pi, u.values());
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  for (double& x : v) x -= mean;
  return SimplexTangent(std::move(v));
}

}  // namespace monometric
