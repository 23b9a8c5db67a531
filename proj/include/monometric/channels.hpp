#pragma once

#include <cstdint>
#include <vector>

#include "monometric/hermitian.hpp"
#include "monometric/mc_functions.hpp"

namespace monometric {

/// Trace-preserving completely positive map M -> sum_i K_i M K_i^*.
class KrausChannel {
 public:
  /// Checks shapes and sum_i K_i^* K_i = I to `tol`; throws
  /// dimension_mismatch or not_trace_preserving.
  explicit KrausChannel(std::vector<ComplexMatrix> kraus, double tol = 1e-10);

  Eigen::Index input_dim() const noexcept { return n_in_; }
  Eigen::Index output_dim() const noexcept { return n_out_; }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }

  /// Acts on arbitrary n_in x n_in matrices.
  ComplexMatrix apply(const ComplexMatrix& m) const;
  HermitianMatrix apply(const HermitianMatrix& m) const;

  /// max |sum K^*K - I|.
  double trace_preservation_defect() const;

 private:
  std::vector<ComplexMatrix> kraus_;
  Eigen::Index n_in_ = 0;
  Eigen::Index n_out_ = 0;
};

HermitianMatrix apply(const KrausChannel& ch, const HermitianMatrix& m);

KrausChannel identity_channel(Eigen::Index n);
KrausChannel unitary_channel(const ComplexMatrix& u);

/// Block-diagonal projection; throws bad_partition unless every size is
/// positive.
KrausChannel pinching(const std::vector<Eigen::Index>& block_sizes);

/// Stinespring sampling: a Ginibre (n*env) x n matrix orthonormalized by QR,
/// sliced into env Kraus blocks.
KrausChannel random_channel(Eigen::Index n, Eigen::Index env_dim, std::uint64_t seed);

/// Kraus operators sqrt(P_ij) E_ij; acts on diagonal states as p -> P p.
KrausChannel classical_stochastic(const Eigen::MatrixXd& column_stochastic);

/// Mixing weight applied to channel outputs whose smallest eigenvalue falls
/// below kOutputSingularThreshold.
inline constexpr double kOutputFloorMix = 1e-10;
inline constexpr double kOutputSingularThreshold = 1e-12;
inline constexpr double kContractionRelTol = 1e-8;
inline constexpr double kContractionAbsTol = 1e-10;

struct ContractionReport {
  double value_before = 0.0;
  double value_after = 0.0;
  double margin = 0.0;   // (before - after) / max(before, tiny), positive when contracting
  bool passed = false;
  bool skipped = false;  // output density singular even after floor mixing
  bool floor_mixed = false;
};

/// Compares g_D(A, A) with g_{T(D)}(T(A), T(A)).  Square channels only.
ContractionReport check_contraction(const MonotoneFunctionKind& kind, const KrausChannel& ch,
                                    const DensityMatrix& d, const TangentVector& a,
                                    double rel_tol = kContractionRelTol, double abs_tol = kContractionAbsTol);

struct SchwarzReport {
  double min_eigenvalue = 0.0;  // lambda_min(T(K D^{-1} K^*) - T(K) T(D)^{-1} T(K)^*)
  double scale = 0.0;           // ||T(K D^{-1} K^*)||_F
  bool passed = false;
  bool skipped = false;
};

inline constexpr double kSchwarzRelTol = 1e-8;

/// Operator Schwarz inequality T(K) T(D)^{-1} T(K)^* <= T(K D^{-1} K^*).
/// Passes when lambda_min >= -(rel_tol * scale + abs_tol).
SchwarzReport check_schwarz(const KrausChannel& ch, const DensityMatrix& d, const ComplexMatrix& k,
                            double rel_tol = kSchwarzRelTol, double abs_tol = kContractionAbsTol);

struct InvarianceReport {
  double value = 0.0;
  double rotated_value = 0.0;
  bool passed = false;
};

/// |K_{UDU*}(UAU*, UAU*) - K_D(A, A)| <= 1e-9 * value.  Throws non_unitary.
InvarianceReport check_unitary_invariance(const MonotoneFunctionKind& kind, const ComplexMatrix& u,
                                          const DensityMatrix& d, const TangentVector& a);

}  // namespace monometric
