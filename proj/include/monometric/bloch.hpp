#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "monometric/hermitian.hpp"
#include "monometric/mc_functions.hpp"

namespace monometric {

/// Point x of the Bloch ball, D_x = (I + x . sigma) / 2.
struct StokesVector {
  std::array<double, 3> x{0.0, 0.0, 0.0};

  double r() const noexcept;
};

/// Throws domain when r >= 1.
DensityMatrix density_from_stokes(const StokesVector& x, double eps_min = kDefaultFloor);

/// exp(-i angle sigma_axis / 2), axis in {0, 1, 2}.
ComplexMatrix rotation_unitary(int axis, double angle);

/// Rotation of x by `angle` about coordinate axis `axis`, matching
/// rotation_unitary under D -> U D U^*.
StokesVector rotate_stokes(const StokesVector& x, int axis, double angle);

/// 1 / (1 - r^2); independent of f.
double radial_coefficient(double r);

/// (1 / (1 + r)) g((1 - r) / (1 + r)) with g = 1 / f.
double tangential_coefficient(const MonotoneFunctionKind& kind, double r);

/// ds^2 = dr^2 / (1 - r^2) + tangential_coefficient(r) dn^2; r in (0, 1 - 1e-9).
double line_element(const MonotoneFunctionKind& kind, double r, double dr, double dn);

enum class BlochDirection { radial, tangential };

struct BlochCrosscheck {
  double general = 0.0;  // metric_value at x = (0, 0, r)
  double formula = 0.0;  // line-element coefficient
  double relative_difference() const;
};

/// Radial tangent sigma_3 / 2 and tangential tangent sigma_1 / 2 at x = (0, 0, r).
BlochCrosscheck crosscheck_bloch(const MonotoneFunctionKind& kind, double r, BlochDirection direction);

struct TangentialLimit {
  bool divergent = false;
  std::optional<double> limit;           // 1 / (2 f(0)) when f(0) != 0
  std::vector<double> radii;             // r = 1 - 10^-k, k = 3..6
  std::vector<double> coefficients;      // tangential_coefficient at those radii
};

TangentialLimit tangential_limit(const MonotoneFunctionKind& kind);

struct BlochProfileRow {
  double r = 0.0;
  std::string kind;
  double radial = 0.0;
  double tangential = 0.0;
};

std::vector<BlochProfileRow> bloch_profile(const std::vector<MonotoneFunctionKind>& kinds,
                                           const std::vector<double>& radii);

}  // namespace monometric
