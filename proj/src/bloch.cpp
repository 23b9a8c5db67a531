#include "monometric/bloch.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "monometric/metric.hpp"

namespace monometric {

double StokesVector::r() const noexcept { return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]); }

DensityMatrix density_from_stokes(const StokesVector& x, double eps_min) {
  if (!(x.r() < 1.0)) throw Error(ErrorKind::domain, "Stokes vector must lie in the open unit ball");
  ComplexMatrix d = ComplexMatrix::Identity(2, 2);
  d += x.x[0] * pauli_x() + x.x[1] * pauli_y() + x.x[2] * pauli_z();
  return DensityMatrix::validate(0.5 * d, eps_min);
}

ComplexMatrix rotation_unitary(int axis, double angle) {
  if (axis < 0 || axis > 2) throw Error(ErrorKind::domain, "axis must be 0, 1 or 2");
  const ComplexMatrix sigma = axis == 0 ? pauli_x() : axis == 1 ? pauli_y() : pauli_z();
  return std::cos(angle / 2.0) * ComplexMatrix::Identity(2, 2) - Complex(0.0, std::sin(angle / 2.0)) * sigma;
}

StokesVector rotate_stokes(const StokesVector& v, int axis, double angle) {
  if (axis < 0 || axis > 2) throw Error(ErrorKind::domain, "axis must be 0, 1 or 2");
  const int i = (axis + 1) % 3;
  const int j = (axis + 2) % 3;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  StokesVector out = v;
  out.x[static_cast<std::size_t>(i)] = c * v.x[static_cast<std::size_t>(i)] - s * v.x[static_cast<std::size_t>(j)];
  out.x[static_cast<std::size_t>(j)] = s * v.x[static_cast<std::size_t>(i)] + c * v.x[static_cast<std::size_t>(j)];
  return out;
}

namespace {

void require_radius(double r) {
  if (!(r > 0.0 && r < 1.0 - kDefaultFloor)) {
    std::ostringstream os;
    os << "radius must lie in (0, 1 - 1e-9), got " << r;
    throw Error(ErrorKind::domain, os.str());
  }
}

}  // namespace

double radial_coefficient(double r) {
  require_radius(r);
  return 1.0 / (1.0 - r * r);
}

double tangential_coefficient(const MonotoneFunctionKind& kind, double r) {
  require_radius(r);
  return 1.0 / ((1.0 + r) * kind.f((1.0 - r) / (1.0 + r)));
}

double line_element(const MonotoneFunctionKind& kind, double r, double dr, double dn) {
  return radial_coefficient(r) * dr * dr + tangential_coefficient(kind, r) * dn * dn;
}

double BlochCrosscheck::relative_difference() const {
  return std::abs(general - formula) / std::max(std::abs(formula), std::numeric_limits<double>::min());
}

BlochCrosscheck crosscheck_bloch(const MonotoneFunctionKind& kind, double r, BlochDirection direction) {
  if (!(r > 1e-3 && r < 1.0 - 1e-3)) throw Error(ErrorKind::domain, "radius must lie in (1e-3, 1 - 1e-3)");
  const auto d = density_from_stokes({{0.0, 0.0, r}});
  BlochCrosscheck out;
  if (direction == BlochDirection::radial) {
    const TangentVector a(0.5 * pauli_z());
    out.general = metric_value(kind, d, a, a);
    out.formula = radial_coefficient(r);
  } else {
    const TangentVector a(0.5 * pauli_x());
    out.general = metric_value(kind, d, a, a);
    out.formula = tangential_coefficient(kind, r);
  }
  return out;
}

TangentialLimit tangential_limit(const MonotoneFunctionKind& kind) {
  TangentialLimit out;
  const double f0 = kind.f_at_zero();
  out.divergent = f0 == 0.0;
  if (!out.divergent) out.limit = 1.0 / (2.0 * f0);
  for (int k = 3; k <= 6; ++k) {
    const double r = 1.0 - std::pow(10.0, -k);
    out.radii.push_back(r);
    out.coefficients.push_back(tangential_coefficient(kind, r));
  }
  return out;
}

std::vector<BlochProfileRow> bloch_profile(const std::vector<MonotoneFunctionKind>& kinds,
                                           const std::vector<double>& radii) {
  if (radii.empty()) throw Error(ErrorKind::domain, "empty radius grid");
  if (kinds.empty()) throw Error(ErrorKind::domain, "no kinds given");
  std::vector<BlochProfileRow> rows;
  for (double r : radii)
    for (const auto& kind : kinds) rows.push_back({r, kind.name(), radial_coefficient(r), tangential_coefficient(kind, r)});
  return rows;
}

}  // namespace monometric
