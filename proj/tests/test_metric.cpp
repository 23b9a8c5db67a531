#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "test_util.hpp"

using namespace monometric;
using namespace test_util;

namespace {

// Solves DG + GD = 2B as a linear system on vec(G).
ComplexMatrix lyapunov_kron(const ComplexMatrix& d, const ComplexMatrix& b) {
  const Eigen::Index n = d.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix op = Eigen::kroneckerProduct(id, d) + Eigen::kroneckerProduct(d.transpose(), id);
  const ComplexVector rhs = 2.0 * Eigen::Map<const ComplexVector>(b.data(), n * n);
  const ComplexVector g = op.fullPivLu().solve(rhs);
  return Eigen::Map<const ComplexMatrix>(g.data(), n, n);
}

// Tr A d/dt log(D + tB) at t = 0 by central difference of the matrix logarithm.
double km_from_log_derivative(const ComplexMatrix& d, const ComplexMatrix& a, const ComplexMatrix& b) {
  const double h = 1e-6;
  const ComplexMatrix lp = (d + h * b).log();
  const ComplexMatrix lm = (d - h * b).log();
  return (a * (lp - lm)).trace().real() / (2.0 * h);
}

double diagonal_alpha_entropy(const std::vector<double>& p, const std::vector<double>& q, double alpha) {
  double overlap = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) overlap += std::pow(q[i], (1 + alpha) / 2) * std::pow(p[i], (1 - alpha) / 2);
  return 4.0 / (1.0 - alpha * alpha) * (1.0 - overlap);
}

}  // namespace

TEST_CASE("metric_value examples") {
  const auto half = diag_density({0.5, 0.5});
  for (const auto& kind : standard_catalog()) CHECK(metric_value(kind, half, half_z(), half_z()) == doctest::Approx(1.0).epsilon(1e-14));
  const auto d = diag_density({0.75, 0.25});
  CHECK(metric_value(MonotoneFunctionKind::sld(), d, sigma_x(), sigma_x()) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(metric_value(MonotoneFunctionKind::rld(), d, sigma_x(), sigma_x()) == doctest::Approx(16.0 / 3.0).epsilon(1e-14));
  CHECK(metric_value(MonotoneFunctionKind::km(), d, sigma_x(), sigma_x()) == doctest::Approx(4.0 * std::log(3.0)).epsilon(1e-14));
}

TEST_CASE("metric_value rejects mismatched dimensions") {
  CHECK_THROWS_AS(metric_value(MonotoneFunctionKind::sld(), random_density(3, 1), sigma_x(), sigma_x()), Error);
}

TEST_CASE("metric_rld examples") {
  CHECK(metric_rld(diag_density({0.5, 0.5}), half_z(), half_z()) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(metric_rld(diag_density({0.75, 0.25}), sigma_x(), sigma_x()) == doctest::Approx(16.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("solve_lyapunov examples and Kronecker oracle") {
  const auto half = diag_density({0.5, 0.5});
  const HermitianMatrix b(pauli_x() + 0.3 * pauli_z());
  CHECK((solve_lyapunov(half, b).matrix() - 2.0 * b.matrix()).norm() < 1e-14);

  const auto g = solve_lyapunov(diag_density({0.75, 0.25}), HermitianMatrix(pauli_x()));
  CHECK(g.matrix()(0, 1).real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(g.matrix()(1, 0).real() == doctest::Approx(2.0).epsilon(1e-14));

  const auto gd = solve_lyapunov(diag_density({0.6, 0.3, 0.1}), HermitianMatrix(diagonal({0.2, -0.3, 0.1})));
  CHECK(gd.matrix()(0, 0).real() == doctest::Approx(0.2 / 0.6));
  CHECK(gd.matrix()(1, 1).real() == doctest::Approx(-1.0));
  CHECK(gd.matrix()(2, 2).real() == doctest::Approx(1.0));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto d = random_density(4, seed, 1e-3);
    const auto bt = random_tangent(4, seed + 100);
    const ComplexMatrix oracle = lyapunov_kron(d.matrix(), bt.matrix());
    const ComplexMatrix got = solve_lyapunov(d, bt.hermitian()).matrix();
    CHECK((got - oracle).norm() <= 1e-9 * oracle.norm());
  }
}

TEST_CASE("metric_sld examples") {
  CHECK(metric_sld(diag_density({0.75, 0.25}), sigma_x(), sigma_x()) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(metric_sld(diag_density({0.5, 0.5}), half_z(), half_z()) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("km quadrature") {
  CHECK(metric_km_quadrature(diag_density({0.75, 0.25}), sigma_x(), sigma_x(), 1e-8) ==
        doctest::Approx(4.0 * std::log(3.0)).epsilon(1e-8));
  CHECK(metric_km_quadrature(diag_density({0.5, 0.5}), half_z(), half_z(), 1e-8) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK_THROWS_AS(metric_km_quadrature(diag_density({0.5, 0.5}), half_z(), half_z(), 1e-2), Error);
}

TEST_CASE("km agrees with the derivative of the matrix logarithm") {
  const auto d = random_density(3, 31, 0.05);
  const auto a = random_tangent(3, 32);
  const auto b = random_tangent(3, 33);
  const double oracle = km_from_log_derivative(d.matrix(), a.matrix(), b.matrix());
  CHECK(metric_value(MonotoneFunctionKind::km(), d, a, b) == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("hessian_metric examples") {
  const auto tlogt = EntropyGenerator::t_log_t();
  CHECK(std::abs(hessian_metric(tlogt, diag_density({0.5, 0.5}), half_z(), half_z(), 1e-4) - 1.0) <= 1e-4);
  CHECK(hessian_metric(tlogt, diag_density({0.75, 0.25}), sigma_x(), sigma_x(), 1e-4) ==
        doctest::Approx(4.0 * std::log(3.0)).epsilon(1e-6));
  const auto d = random_density(3, 4);
  const auto a = random_tangent(3, 5);
  const double two_tr_a2 = 2.0 * (a.matrix() * a.matrix()).trace().real();
  CHECK(hessian_metric(EntropyGenerator::square(), d, a, a, 1e-4) == doctest::Approx(two_tr_a2).epsilon(1e-8));
}

TEST_CASE("hessian_metric reports steps that leave the cone") {
  const auto d = diag_density({0.999, 0.001});
  CHECK_THROWS_AS(hessian_metric(EntropyGenerator::t_log_t(), d, sigma_x(), sigma_x(), 0.1), Error);
}

TEST_CASE("relative entropies") {
  const auto d = random_density(3, 6);
  CHECK(std::abs(relative_entropy(d, d)) < 1e-13);
  const double expect = 0.5 * std::log(2.0 / 3.0) + 0.5 * std::log(2.0);
  CHECK(classical_relative_entropy({0.5, 0.5}, {0.75, 0.25}) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(expect == doctest::Approx(0.143841).epsilon(1e-6));
  CHECK(classical_relative_entropy({1.0, 0.0}, {0.5, 0.5}) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("alpha_entropy") {
  const auto d = random_density(3, 12);
  CHECK(std::abs(alpha_entropy(d, d, 0.5)) < 1e-13);

  const double direct = diagonal_alpha_entropy({0.5, 0.5}, {0.75, 0.25}, 0.0);
  const double value = alpha_entropy(diag_density({0.5, 0.5}), diag_density({0.75, 0.25}), 0.0);
  CHECK(value == doctest::Approx(direct).epsilon(1e-14));
  CHECK(value == doctest::Approx(4.0 * (1.0 - (std::sqrt(0.375) + std::sqrt(0.125)))).epsilon(1e-14));
  CHECK(value == doctest::Approx(0.13629).epsilon(1e-4));

  for (double alpha : {-1.5, -0.3, 0.7, 1.4}) {
    const std::vector<double> p{0.2, 0.5, 0.3};
    const std::vector<double> q{0.6, 0.1, 0.3};
    CHECK(alpha_entropy(diag_density({0.2, 0.5, 0.3}), diag_density({0.6, 0.1, 0.3}), alpha) ==
          doctest::Approx(diagonal_alpha_entropy(p, q, alpha)).epsilon(1e-12));
  }
}

TEST_CASE("alpha_entropy endpoint limits") {
  const auto d1 = random_density(3, 40, 0.01);
  const auto d2 = random_density(3, 41, 0.01);
  CHECK(alpha_entropy(d1, d2, -1.0 + 1e-5) == doctest::Approx(relative_entropy(d1, d2)).epsilon(1e-3));
  CHECK(alpha_entropy(d1, d2, 1.0 - 1e-5) == doctest::Approx(relative_entropy(d2, d1)).epsilon(1e-3));
  CHECK(alpha_entropy(d1, d2, -1.0) == relative_entropy(d1, d2));
  CHECK_THROWS_AS(alpha_entropy(d1, d2, 2.0), Error);
}

TEST_CASE("alpha_metric_hessian") {
  CHECK(alpha_metric_hessian(diag_density({0.75, 0.25}), half_z(), half_z(), 0.5) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-6));
  const auto d = diag_density({0.75, 0.25});
  CHECK(alpha_metric_hessian(d, sigma_x(), sigma_x(), 0.0) ==
        doctest::Approx(metric_value(MonotoneFunctionKind::wyd(0.0), d, sigma_x(), sigma_x())).epsilon(1e-6));
  const double km = metric_value(MonotoneFunctionKind::km(), d, sigma_x(), sigma_x());
  CHECK(alpha_metric_hessian(d, sigma_x(), sigma_x(), 1.0 - 1e-4) == doctest::Approx(km).epsilon(1e-3));
  CHECK(alpha_metric_hessian(d, sigma_x(), sigma_x(), -1.0 + 1e-4) == doctest::Approx(km).epsilon(1e-3));
}

TEST_CASE("commutator form") {
  const auto d = diag_density({0.75, 0.25});
  const auto zero = commutator_form(d, HermitianMatrix(diagonal({1.0, 2.0})), 0.3);
  CHECK(std::abs(zero.metric) < 1e-15);
  CHECK(std::abs(zero.raw_trace) < 1e-15);
  CHECK(!zero.ratio);

  for (double alpha : {-0.5, 0.0, 0.5}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto dd = random_density(3, seed, 0.01);
      const auto x = HermitianMatrix::symmetrized(Rng(seed + 50).ginibre(3, 3));
      const auto form = commutator_form(dd, x, alpha);
      REQUIRE(form.ratio);
      CHECK(*form.ratio == doctest::Approx(commutator_ratio_constant(alpha)).epsilon(1e-9));
    }
  }
}

TEST_CASE("mc_function_from_pair matches wyd") {
  CHECK(mc_function_from_pair(0.5, 4.0, 1.0) == doctest::Approx(eval_c(MonotoneFunctionKind::wyd(0.0), 4.0, 1.0)).epsilon(1e-14));
  CHECK(mc_function_from_pair(0.3, 0.2, 0.7) == doctest::Approx(eval_c(MonotoneFunctionKind::wyd(0.4), 0.2, 0.7)).epsilon(1e-12));
  CHECK(mc_function_from_pair(0.5, 2.0, 2.0) == 0.5);
  CHECK(mc_function_from_pair(0.5, 2.0 + 1e-7, 2.0) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("decompose_tangent") {
  const auto d = diag_density({0.75, 0.25});
  const auto diag_split = decompose_tangent(d, half_z());
  CHECK((diag_split.commuting.matrix() - half_z().matrix()).norm() < 1e-14);
  CHECK(diag_split.orthogonal.matrix().norm() < 1e-14);
  const auto x_split = decompose_tangent(d, sigma_x());
  CHECK(x_split.commuting.matrix().norm() < 1e-14);
  CHECK((x_split.orthogonal.matrix() - pauli_x()).norm() < 1e-14);

  const auto dr = random_density(4, 21);
  const auto a = random_tangent(4, 22);
  const auto s = decompose_tangent(dr, a);
  CHECK((s.commuting.matrix() + s.orthogonal.matrix() - a.matrix()).norm() < 1e-12);
  CHECK(std::abs(real_trace_product(s.commuting.matrix(), s.orthogonal.matrix())) < 1e-12);
  const ComplexMatrix comm = dr.matrix() * s.commuting.matrix() - s.commuting.matrix() * dr.matrix();
  CHECK(comm.norm() < 1e-12);

  CHECK_THROWS_AS(decompose_tangent(diag_density({0.5, 0.5}), half_z()), Error);
}

TEST_CASE("metric symmetry, positivity and ordering on random data") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(seed % 3);
    const auto d = random_density(n, seed);
    const auto a = random_tangent(n, seed + 1000);
    const auto b = random_tangent(n, seed + 2000);
    const double lo = metric_sld(d, a, a);
    const double hi = metric_rld(d, a, a);
    for (const auto& kind : standard_catalog()) {
      CAPTURE(kind.name());
      const double ab = metric_value(kind, d, a, b);
      CHECK(ab == doctest::Approx(metric_value(kind, d, b, a)).epsilon(1e-12));
      const double aa = metric_value(kind, d, a, a);
      CHECK(aa > 0.0);
      CHECK(aa >= lo * (1 - 1e-10));
      CHECK(aa <= hi * (1 + 1e-10));
    }
  }
}
