#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include <doctest.h>

#include "monometric/monometric.hpp"

namespace test_util {

using namespace monometric;

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline DensityMatrix diag_density(std::initializer_list<double> p) { return DensityMatrix::validate(diagonal(p)); }

inline TangentVector tangent(const ComplexMatrix& m) { return TangentVector(m); }

inline TangentVector sigma_x() { return TangentVector(pauli_x()); }

inline TangentVector half_z() { return TangentVector(diagonal({0.5, -0.5})); }

}  // namespace test_util
