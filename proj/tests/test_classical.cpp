#include <numbers>

#include "test_util.hpp"

using namespace monometric;
using namespace test_util;

TEST_CASE("fisher_form") {
  const SimplexTangent u({0.5, -0.5});
  CHECK(fisher_form(ProbabilityVector({0.5, 0.5}), u, u) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fisher_form(ProbabilityVector({0.75, 0.25}), u, u) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(fisher_form(ProbabilityVector({1.0, 0.0}), u, u), Error);
}

TEST_CASE("geodesic_distance") {
  const ProbabilityVector p({0.3, 0.7});
  CHECK(geodesic_distance(p, p) == 0.0);
  CHECK(geodesic_distance(ProbabilityVector({1.0, 0.0}), ProbabilityVector({0.0, 1.0})) ==
        doctest::Approx(std::numbers::pi).epsilon(1e-15));
  CHECK(geodesic_distance(ProbabilityVector({0.5, 0.5}), ProbabilityVector({1.0, 0.0})) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
}

TEST_CASE("hellinger") {
  const ProbabilityVector p({0.3, 0.7});
  CHECK(hellinger(p, p) == 0.0);
  const ProbabilityVector a({0.5, 0.5});
  const ProbabilityVector b({1.0, 0.0});
  const double sum_form = std::sqrt(std::pow(std::sqrt(0.5) - 1.0, 2) + 0.5);
  CHECK(hellinger(a, b) == doctest::Approx(sum_form).epsilon(1e-15));
  CHECK(hellinger(a, b) == doctest::Approx(2.0 * std::sin(std::numbers::pi / 8)).epsilon(1e-14));
  CHECK(hellinger(a, b) == doctest::Approx(0.765367).epsilon(1e-6));
  CHECK(hellinger(ProbabilityVector({1.0, 0.0}), ProbabilityVector({0.0, 1.0})) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("Hellinger-geodesic identity on random pairs") {
  Rng rng(123);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng.index(7);
    std::vector<double> p(n);
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = rng.uniform(0.0, 1.0);
      r[i] = rng.uniform(0.0, 1.0);
    }
    const double ps = std::accumulate(p.begin(), p.end(), 0.0);
    const double rs = std::accumulate(r.begin(), r.end(), 0.0);
    for (auto& x : p) x /= ps;
    for (auto& x : r) x /= rs;
    const ProbabilityVector pv(p);
    const ProbabilityVector rv(r);
    REQUIRE(std::abs(hellinger(pv, rv) - 2.0 * std::sin(geodesic_distance(pv, rv) / 4.0)) <= 1e-12);
  }
}

TEST_CASE("diagonal embedding reproduces the Fisher form") {
  const SimplexTangent u({0.5, -0.5});
  const ProbabilityVector uniform({0.5, 0.5});
  CHECK(metric_value(MonotoneFunctionKind::sld(), embed_diagonal(uniform), embed_tangent(u), embed_tangent(u)) ==
        doctest::Approx(1.0));
  const ProbabilityVector p({0.75, 0.25});
  CHECK(metric_value(MonotoneFunctionKind::km(), embed_diagonal(p), embed_tangent(u), embed_tangent(u)) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-14));

  const ProbabilityVector q({0.1, 0.2, 0.3, 0.4});
  const SimplexTangent v({0.3, -0.1, 0.05, -0.25});
  const SimplexTangent w({-0.2, 0.4, -0.1, -0.1});
  const double fisher = fisher_form(q, v, w);
  for (const auto& kind : standard_catalog())
    CHECK(metric_value(kind, embed_diagonal(q), embed_tangent(v), embed_tangent(w)) == doctest::Approx(fisher).epsilon(1e-10));
}

TEST_CASE("validation of simplex objects") {
  CHECK_THROWS_AS(ProbabilityVector({0.5, 0.6}), Error);
  CHECK_THROWS_AS(ProbabilityVector({1.5, -0.5}), Error);
  CHECK_THROWS_AS(SimplexTangent({0.5, 0.5}), Error);
  CHECK_THROWS_AS(geodesic_distance(ProbabilityVector({1.0}), ProbabilityVector({0.5, 0.5})), Error);
}

TEST_CASE("push_forward contracts the Fisher form") {
  Eigen::MatrixXd merge(2, 3);
  merge << 1, 0, 0, 0, 1, 1;
  const ProbabilityVector p({0.5, 0.25, 0.25});
  const auto q = push_forward(merge, p);
  CHECK(q[0] == doctest::Approx(0.5));
  CHECK(q[1] == doctest::Approx(0.5));
  const SimplexTangent u({0.1, 0.2, -0.3});
  const auto w = push_forward(merge, u);
  CHECK(fisher_form(q, w, w) <= fisher_form(p, u, u));
}
