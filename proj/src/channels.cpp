#include "monometric/channels.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "monometric/metric.hpp"
#include "monometric/random.hpp"

namespace monometric {

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus, double tol) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw Error(ErrorKind::dimension_mismatch, "a channel needs at least one Kraus operator");
  n_out_ = kraus_.front().rows();
  n_in_ = kraus_.front().cols();
  if (n_in_ == 0 || n_out_ == 0) throw Error(ErrorKind::dimension_mismatch, "empty Kraus operator");
  for (const auto& k : kraus_)
    if (k.rows() != n_out_ || k.cols() != n_in_)
      throw Error(ErrorKind::dimension_mismatch, "Kraus operators must share one shape");
  const double defect = trace_preservation_defect();
  if (!(defect <= tol)) {
    std::ostringstream os;
    os << "max |sum K^*K - I| = " << defect;
    throw Error(ErrorKind::not_trace_preserving, os.str());
  }
}

double KrausChannel::trace_preservation_defect() const {
  ComplexMatrix sum = ComplexMatrix::Zero(n_in_, n_in_);
  for (const auto& k : kraus_) sum += k.adjoint() * k;
  sum -= ComplexMatrix::Identity(n_in_, n_in_);
  return sum.cwiseAbs().maxCoeff();
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix& m) const {
  if (m.rows() != n_in_ || m.cols() != n_in_) {
    std::ostringstream os;
    os << "channel expects " << n_in_ << "x" << n_in_ << " input, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorKind::dimension_mismatch, os.str());
  }
  ComplexMatrix out = ComplexMatrix::Zero(n_out_, n_out_);
  for (const auto& k : kraus_) out += k * m * k.adjoint();
  return out;
}

HermitianMatrix KrausChannel::apply(const HermitianMatrix& m) const {
  return HermitianMatrix::symmetrized(apply(m.matrix()));
}

HermitianMatrix apply(const KrausChannel& ch, const HermitianMatrix& m) { return ch.apply(m); }

KrausChannel identity_channel(Eigen::Index n) { return KrausChannel({ComplexMatrix::Identity(n, n)}); }

KrausChannel unitary_channel(const ComplexMatrix& u) {
  if (!is_unitary(u)) throw Error(ErrorKind::non_unitary, "U^*U differs from I");
  return KrausChannel({u});
}

KrausChannel pinching(const std::vector<Eigen::Index>& block_sizes) {
  if (block_sizes.empty()) throw Error(ErrorKind::bad_partition, "no blocks given");
  Eigen::Index n = 0;
  for (auto b : block_sizes) {
    if (b <= 0) throw Error(ErrorKind::bad_partition, "block sizes must be positive");
    n += b;
  }
  std::vector<ComplexMatrix> projectors;
  Eigen::Index offset = 0;
  for (auto b : block_sizes) {
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    p.block(offset, offset, b, b).setIdentity();
    projectors.push_back(std::move(p));
    offset += b;
  }
  return KrausChannel(std::move(projectors));
}

KrausChannel random_channel(Eigen::Index n, Eigen::Index env_dim, std::uint64_t seed) {
  if (n < 1 || env_dim < 1) throw Error(ErrorKind::domain, "random_channel needs n >= 1 and env_dim >= 1");
  Rng rng(mix64(seed) ^ 0x6368616e6e656cULL);
  const ComplexMatrix g = rng.ginibre(n * env_dim, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix v = qr.householderQ() * ComplexMatrix::Identity(n * env_dim, n);
  const ComplexMatrix r = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) v.col(j) *= r(j, j) / a;
  }
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index e = 0; e < env_dim; ++e) kraus.push_back(v.middleRows(e * n, n));
  return KrausChannel(std::move(kraus), 1e-12);
}

KrausChannel classical_stochastic(const Eigen::MatrixXd& pi) {
  if (pi.size() == 0) throw Error(ErrorKind::not_column_stochastic, "empty matrix");
  if (!pi.allFinite() || (pi.array() < 0.0).any())
    throw Error(ErrorKind::not_column_stochastic, "entries must be nonnegative");
  for (Eigen::Index j = 0; j < pi.cols(); ++j)
    if (std::abs(pi.col(j).sum() - 1.0) > 1e-12) {
      std::ostringstream os;
      os << "column " << j << " sums to " << pi.col(j).sum();
      throw Error(ErrorKind::not_column_stochastic, os.str());
    }
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index j = 0; j < pi.cols(); ++j)
    for (Eigen::Index i = 0; i < pi.rows(); ++i) {
      if (pi(i, j) == 0.0) continue;
      ComplexMatrix k = ComplexMatrix::Zero(pi.rows(), pi.cols());
      k(i, j) = std::sqrt(pi(i, j));
      kraus.push_back(std::move(k));
    }
  // Column sums are exact to 1e-12, hence sum K^*K = I to the same accuracy.
  return KrausChannel(std::move(kraus), 1e-11);
}

ContractionReport check_contraction(const MonotoneFunctionKind& kind, const KrausChannel& ch,
                                    const DensityMatrix& d, const TangentVector& a, double rel_tol,
                                    double abs_tol) {
  const auto n = d.dim();
  if (ch.input_dim() != n || ch.output_dim() != n)
    throw Error(ErrorKind::dimension_mismatch, "contraction checks need a square channel matching D");

  ContractionReport report;
  report.value_before = metric_value(kind, d, a, a);

  const ComplexMatrix td = ch.apply(d.matrix());
  std::optional<DensityMatrix> out;
  try {
    out = DensityMatrix::validate(td, kOutputSingularThreshold);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::not_strictly_positive) throw;
    report.floor_mixed = true;
    ComplexMatrix mixed = (1.0 - kOutputFloorMix) * td;
    mixed.diagonal().array() += Complex(kOutputFloorMix / static_cast<double>(n), 0.0);
    try {
      out = DensityMatrix::validate(mixed, std::numeric_limits<double>::min());
    } catch (const Error& e2) {
      if (e2.kind() != ErrorKind::not_strictly_positive) throw;
      report.skipped = true;
      return report;
    }
  }
  const auto ta = TangentVector::trace_projected(ch.apply(a.matrix()));
  report.value_after = metric_value(kind, *out, ta, ta);
  report.margin = (report.value_before - report.value_after) /
                  std::max(report.value_before, std::numeric_limits<double>::min());
  report.passed = report.value_after <= report.value_before * (1.0 + rel_tol) + abs_tol;
  return report;
}

SchwarzReport check_schwarz(const KrausChannel& ch, const DensityMatrix& d, const ComplexMatrix& k,
                            double rel_tol, double abs_tol) {
  const auto n = d.dim();
  if (ch.input_dim() != n || k.rows() != n || k.cols() != n)
    throw Error(ErrorKind::dimension_mismatch, "Schwarz check needs K and D matching the channel input");
  SchwarzReport report;
  const auto td = ch.apply(d.hermitian());
  if (min_eigenvalue(td) < kOutputSingularThreshold) {
    report.skipped = true;
    return report;
  }
  const Eigen::PartialPivLU<ComplexMatrix> lu_d(d.matrix());
  const Eigen::PartialPivLU<ComplexMatrix> lu_td(td.matrix());
  // K D^{-1} K^* = K (D^{-1} K^*)
  const ComplexMatrix rhs = ch.apply(ComplexMatrix(k * lu_d.solve(k.adjoint())));
  const ComplexMatrix tk = ch.apply(k);
  const ComplexMatrix lhs = tk * lu_td.solve(tk.adjoint());
  report.scale = rhs.norm();
  report.min_eigenvalue = min_eigenvalue(HermitianMatrix::symmetrized(rhs - lhs));
  report.passed = report.min_eigenvalue >= -(rel_tol * report.scale + abs_tol);
  return report;
}

InvarianceReport check_unitary_invariance(const MonotoneFunctionKind& kind, const ComplexMatrix& u,
                                          const DensityMatrix& d, const TangentVector& a) {
  if (u.rows() != d.dim() || !is_unitary(u, 1e-10)) throw Error(ErrorKind::non_unitary, "U^*U differs from I");
  InvarianceReport report;
  report.value = metric_value(kind, d, a, a);
  const auto rd = DensityMatrix::validate(u * d.matrix() * u.adjoint(), std::numeric_limits<double>::min());
  const auto ra = TangentVector::trace_projected(u * a.matrix() * u.adjoint());
  report.rotated_value = metric_value(kind, rd, ra, ra);
  report.passed = std::abs(report.rotated_value - report.value) <= 1e-9 * std::abs(report.value);
  return report;
}

}  // namespace monometric
