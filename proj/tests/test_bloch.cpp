#include <numbers>

#include "test_util.hpp"

using namespace monometric;
using namespace test_util;

TEST_CASE("density_from_stokes") {
  CHECK((density_from_stokes({{0, 0, 0}}).matrix() - 0.5 * ComplexMatrix::Identity(2, 2)).norm() < 1e-15);
  CHECK((density_from_stokes({{0, 0, 0.5}}).matrix() - diagonal({0.75, 0.25})).norm() < 1e-15);
  const auto x = density_from_stokes({{0.5, 0, 0}});
  CHECK(x.eigenvalues()(0) == doctest::Approx(0.75));
  CHECK(x.eigenvalues()(1) == doctest::Approx(0.25));
  CHECK_THROWS_AS(density_from_stokes({{0, 0, 1.0}}), Error);
}

TEST_CASE("rotation convention matches the Stokes rotation") {
  const StokesVector x{{0.2, -0.3, 0.4}};
  for (int axis = 0; axis < 3; ++axis) {
    const ComplexMatrix u = rotation_unitary(axis, 0.7);
    const ComplexMatrix rotated = u * density_from_stokes(x).matrix() * u.adjoint();
    CHECK((rotated - density_from_stokes(rotate_stokes(x, axis, 0.7)).matrix()).norm() < 1e-14);
  }
}

TEST_CASE("line_element") {
  const double r = 0.6;
  const double radial = 1.0 / (1.0 - r * r);
  CHECK(line_element(MonotoneFunctionKind::sld(), r, 0.3, 0.4) == doctest::Approx(0.09 * radial + 0.16).epsilon(1e-14));
  CHECK(line_element(MonotoneFunctionKind::rld(), r, 0.3, 0.4) == doctest::Approx(0.25 * radial).epsilon(1e-14));
  for (const auto& kind : standard_catalog())
    CHECK(line_element(kind, r, 0.3, 0.0) == doctest::Approx(0.09 * radial).epsilon(1e-14));
  CHECK_THROWS_AS(line_element(MonotoneFunctionKind::sld(), 1.0, 0.1, 0.1), Error);
}

TEST_CASE("crosscheck_bloch examples") {
  const auto sr = crosscheck_bloch(MonotoneFunctionKind::sld(), 0.5, BlochDirection::radial);
  CHECK(sr.general == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(sr.formula == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  const auto st = crosscheck_bloch(MonotoneFunctionKind::sld(), 0.5, BlochDirection::tangential);
  CHECK(st.general == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(st.formula == doctest::Approx(1.0).epsilon(1e-14));
  const auto kt = crosscheck_bloch(MonotoneFunctionKind::km(), 0.5, BlochDirection::tangential);
  CHECK(kt.general == doctest::Approx(std::log(3.0)).epsilon(1e-13));
  CHECK(kt.formula == doctest::Approx(std::log(3.0)).epsilon(1e-13));
}

TEST_CASE("tangential_limit") {
  const auto sld = tangential_limit(MonotoneFunctionKind::sld());
  REQUIRE(sld.limit);
  CHECK(*sld.limit == doctest::Approx(1.0));
  const auto wyd = tangential_limit(MonotoneFunctionKind::wyd(0.0));
  REQUIRE(wyd.limit);
  CHECK(*wyd.limit == doctest::Approx(2.0));
  CHECK(wyd.coefficients.back() == doctest::Approx(2.0).epsilon(1e-2));
  const auto km = tangential_limit(MonotoneFunctionKind::km());
  CHECK(km.divergent);
  CHECK(!km.limit);
  CHECK(km.coefficients.back() > km.coefficients.front());
}

TEST_CASE("bloch_profile rows") {
  const auto rows = bloch_profile({MonotoneFunctionKind::sld(), MonotoneFunctionKind::rld()}, {0.1, 0.5});
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) {
    CHECK(row.radial == radial_coefficient(row.r));
    if (row.kind == "sld") CHECK(row.tangential == doctest::Approx(1.0).epsilon(1e-14));
    if (row.kind == "rld") CHECK(row.tangential == doctest::Approx(1.0 / (1.0 - row.r * row.r)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(bloch_profile({MonotoneFunctionKind::sld()}, {1.5}), Error);
}

TEST_CASE("metric in the Bloch ball is rotation invariant") {
  const auto kind = MonotoneFunctionKind::wyd(0.5);
  const StokesVector x{{0.1, 0.2, 0.5}};
  const auto d = density_from_stokes(x);
  const TangentVector a(0.5 * (0.3 * pauli_x() - 0.2 * pauli_y() + 0.6 * pauli_z()));
  const ComplexMatrix u = rotation_unitary(1, 1.1);
  const auto rd = DensityMatrix::validate(u * d.matrix() * u.adjoint());
  const TangentVector ra(HermitianMatrix::symmetrized(u * a.matrix() * u.adjoint()));
  CHECK(metric_value(kind, rd, ra, ra) == doctest::Approx(metric_value(kind, d, a, a)).epsilon(1e-12));
}
