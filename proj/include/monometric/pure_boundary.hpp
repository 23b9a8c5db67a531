#pragma once

#include <optional>
#include <vector>

#include "monometric/hermitian.hpp"
#include "monometric/mc_functions.hpp"

namespace monometric {

/// Unit vector with its first nonzero component real and positive.
struct PureState {
  ComplexVector vector;
  ComplexMatrix projector;  // v v^*
};

/// Coordinates u_2, ..., u_n of a horizontal tangent in the eigenframe of the
/// base point (the first-column entries below the diagonal).
struct HorizontalVector {
  std::vector<Complex> u;
};

/// D(eps) = Diag(1 - eps * sum(w), eps * w_1, ..., eps * w_{n-1}).
class BoundarySequence {
 public:
  /// eps grid must be positive and strictly decreasing; weights positive and
  /// small enough that the top eigenvalue stays simple on the whole grid.
  BoundarySequence(std::vector<double> eps_grid, std::vector<double> weights);

  /// Grid {1e-2, ..., 1e-7} with unit weights in dimension n.
  static BoundarySequence standard(Eigen::Index n);

  const std::vector<double>& eps_grid() const noexcept { return eps_; }
  const std::vector<double>& weights() const noexcept { return w_; }
  Eigen::Index dim() const noexcept { return static_cast<Eigen::Index>(w_.size()) + 1; }

  /// Descending eigenvalues of D(eps).
  RealVector eigenvalues(double eps) const;
  DensityMatrix at(double eps) const;

 private:
  std::vector<double> eps_;
  std::vector<double> w_;
};

/// Eigenvector of the largest eigenvalue; degenerate_spectrum unless
/// lambda_1 - lambda_2 > 1e-8.
PureState radial_projection(const DensityMatrix& d);

/// Tangent with (i, 1) entry (lambda_1 - lambda_i) u_i and (1, i) entry its
/// conjugate.  D must be diagonal with descending diagonal.
TangentVector horizontal_lift(const DensityMatrix& d, const HorizontalVector& u);

/// 2 Re sum_{i>=2} (lambda_1 - lambda_i)^2 / (f(lambda_i / lambda_1) lambda_1) u_i conj(v_i).
double lifted_inner(const MonotoneFunctionKind& kind, const DensityMatrix& d, const HorizontalVector& u,
                    const HorizontalVector& v);
double lifted_inner(const MonotoneFunctionKind& kind, const RealVector& lambda, const HorizontalVector& u,
                    const HorizontalVector& v);

/// h(u, v) = 2 Re sum_i u_i conj(v_i): Fubini-Study at the base point e_1 in
/// the normalization under which the radial limit equals h / f(0).
double fubini_study(const HorizontalVector& u, const HorizontalVector& v);

/// lifted_inner(u = (1)) at n = 2 equals this factor times the Bloch
/// tangential coefficient in the limit r -> 1 (the lift is 2r * sigma_1 / 2).
inline constexpr double kLiftToBlochTangentialScale = 4.0;

inline constexpr double kLimitRelTol = 1e-5;
inline constexpr double kDivergenceFactor = 1e3;

struct LimitReport {
  double f0 = 0.0;
  double h = 0.0;
  bool divergent = false;            // f(0) == 0
  std::optional<double> limit;       // h / f(0)
  std::vector<double> eps;
  std::vector<double> values;        // lifted_inner along the grid
  std::vector<double> errors;        // |V - limit| / |limit| (absolute when limit == 0)
  bool monotone_decay = false;       // errors non-increasing (1e-12 slack)
  double final_error = 0.0;
  bool converged = false;            // final_error <= kLimitRelTol
  bool growth_confirmed = false;     // divergent: |V| strictly increasing
  bool exceeds_threshold = false;    // divergent: |V_last| > 1e3 |h|
};

LimitReport radial_extension_limit(const MonotoneFunctionKind& kind, const BoundarySequence& seq,
                                   const HorizontalVector& u, const HorizontalVector& v);

}  // namespace monometric
