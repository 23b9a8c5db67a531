#pragma once

#include <vector>

#include "monometric/hermitian.hpp"

namespace monometric {

/// Probability vector on n points; sums to 1 within 1e-12, entries >= 0.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> p);

  const std::vector<double>& values() const noexcept { return p_; }
  std::size_t size() const noexcept { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  bool strictly_positive() const noexcept;

 private:
  std::vector<double> p_;
};

/// Zero-sum tangent to the simplex.
class SimplexTangent {
 public:
  explicit SimplexTangent(std::vector<double> u);

  const std::vector<double>& values() const noexcept { return u_; }
  std::size_t size() const noexcept { return u_.size(); }
  double operator[](std::size_t i) const { return u_[i]; }

 private:
  std::vector<double> u_;
};

/// sum_i u_i v_i / p_i; throws domain on a zero component.
double fisher_form(const ProbabilityVector& p, const SimplexTangent& u, const SimplexTangent& v);

/// 2 arccos sum_i sqrt(p_i r_i), with the sum clamped into [0, 1].
double geodesic_distance(const ProbabilityVector& p, const ProbabilityVector& r);

/// sqrt(sum_i (sqrt p_i - sqrt r_i)^2).
double hellinger(const ProbabilityVector& p, const ProbabilityVector& r);

DensityMatrix embed_diagonal(const ProbabilityVector& p, double eps_min = kDefaultFloor);
TangentVector embed_tangent(const SimplexTangent& u);

/// Image of p under a column-stochastic matrix.
ProbabilityVector push_forward(const Eigen::MatrixXd& column_stochastic, const ProbabilityVector& p);
SimplexTangent push_forward(const Eigen::MatrixXd& column_stochastic, const SimplexTangent& u);

}  // namespace monometric
