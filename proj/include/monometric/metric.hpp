#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "monometric/hermitian.hpp"
#include "monometric/mc_functions.hpp"

namespace monometric {

/// K_D(A, B) = Re sum_{j,k} c(p_j, p_k) conj(A'_jk) B'_jk with A' = U^*AU,
/// B' = U^*BU in the eigenbasis of D.  This is the canonical evaluator; the
/// closed forms below are independent cross-checks.
double metric_value(const MonotoneFunctionKind& kind, const DensityMatrix& d, const TangentVector& a,
                    const TangentVector& b);

/// Same sum on arbitrary (not necessarily traceless) Hermitian arguments.
double metric_value(const MonotoneFunctionKind& kind, const DensityMatrix& d, const ComplexMatrix& a,
                    const ComplexMatrix& b);

/// 1/2 Re Tr D^{-1}(AB + BA), with D^{-1} from an LU factorization.
double metric_rld(const DensityMatrix& d, const TangentVector& a, const TangentVector& b);

/// Solution G of DG + GD = 2B.
HermitianMatrix solve_lyapunov(const DensityMatrix& d, const HermitianMatrix& b);

/// Re Tr(A G) with G = solve_lyapunov(D, B).
double metric_sld(const DensityMatrix& d, const TangentVector& a, const TangentVector& b);

/// int_0^inf Tr (D+t)^{-1} A (D+t)^{-1} B dt by adaptive Gauss-Kronrod after
/// t = s / (1 - s).  rel_tol must lie in [1e-10, 1e-3].
double metric_km_quadrature(const DensityMatrix& d, const TangentVector& a, const TangentVector& b,
                            double rel_tol = 1e-10);

/// Pointwise G used to build Tr G(D) functionals.
struct EntropyGenerator {
  std::string name;
  std::function<double(double)> g;

  static EntropyGenerator t_log_t();
  static EntropyGenerator square();
};

inline constexpr double kDefaultStep = 1e-4;

/// Central mixed difference of Tr G(D + tA + sB) at t = s = 0:
/// [F(h,h) - F(h,-h) - F(-h,h) + F(-h,-h)] / (4h^2).
/// Throws step_too_large if any stencil point leaves the positive cone.
double hessian_metric(const EntropyGenerator& gen, const DensityMatrix& d, const TangentVector& a,
                      const TangentVector& b, double step = kDefaultStep);

/// Tr D1 (log D1 - log D2).
double relative_entropy(const DensityMatrix& d1, const DensityMatrix& d2);

/// sum_i p_i (log p_i - log q_i); terms with p_i = 0 contribute 0.
double classical_relative_entropy(const std::vector<double>& p, const std::vector<double>& q);

/// 4/(1-a^2) Tr (I - D2^{(1+a)/2} D1^{-(1+a)/2}) D1 for a in (-2, 2).
/// a = -1 is S(D1, D2) and a = +1 is S(D2, D1) (the two endpoint limits).
double alpha_entropy(const DensityMatrix& d1, const DensityMatrix& d2, double alpha);

/// Negated central mixed difference of S_a(D + tA, D + uB).
double alpha_metric_hessian(const DensityMatrix& d, const TangentVector& a, const TangentVector& b,
                            double alpha, double step = kDefaultStep);

struct CommutatorForm {
  double metric = 0.0;     // K^wyd_D(i[D,X], i[D,X]) by the eigenbasis sum
  double raw_trace = 0.0;  // Tr([D^b, X][D^{1-b}, X]), b = (1 - alpha)/2
  std::optional<double> ratio;  // metric / raw_trace; empty when [D, X] = 0
};

/// Expected value of CommutatorForm::ratio: -4 / (1 - alpha^2).
double commutator_ratio_constant(double alpha);

CommutatorForm commutator_form(const DensityMatrix& d, const HermitianMatrix& x, double alpha);

/// Morozova-Chentsov function of the pair g(x) = x^p, g*(x) = x^{1-p} / (p(1-p)):
/// (g(l) - g(m)) (g*(l) - g*(m)) / (l - m)^2, with limit 1/m at l = m.
double mc_function_from_pair(double p, double lambda, double mu);

struct TangentSplit {
  TangentVector commuting;
  TangentVector orthogonal;
};

/// Splits A into the part commuting with D and its Hilbert-Schmidt complement.
/// Requires pairwise eigenvalue gaps > 1e-8 (degenerate_spectrum otherwise).
TangentSplit decompose_tangent(const DensityMatrix& d, const TangentVector& a);

}  // namespace monometric
