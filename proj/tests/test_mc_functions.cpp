#include "test_util.hpp"

using namespace monometric;
using namespace test_util;

TEST_CASE("eval_f examples") {
  CHECK(eval_f(MonotoneFunctionKind::sld(), 1.0) == 1.0);
  CHECK(eval_f(MonotoneFunctionKind::km(), std::exp(1.0)) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
  CHECK(eval_f(MonotoneFunctionKind::wyd(0.0), 4.0) == doctest::Approx(2.25).epsilon(1e-14));
  CHECK_THROWS_AS(eval_f(MonotoneFunctionKind::km(), 0.0), Error);
  CHECK_THROWS_AS(eval_f(MonotoneFunctionKind::km(), -1.0), Error);
}

TEST_CASE("eval_c examples") {
  for (const auto& kind : standard_catalog()) CHECK(eval_c(kind, 0.3, 0.3) == doctest::Approx(1.0 / 0.3).epsilon(1e-14));
  CHECK(eval_c(MonotoneFunctionKind::sld(), 0.75, 0.25) == doctest::Approx(2.0).epsilon(1e-14));
  const double km_direct = (std::log(0.75) - std::log(0.25)) / (0.75 - 0.25);
  CHECK(eval_c(MonotoneFunctionKind::km(), 0.75, 0.25) == doctest::Approx(km_direct).epsilon(1e-13));
  CHECK(km_direct == doctest::Approx(2.197224577).epsilon(1e-9));
}

TEST_CASE("f_at_zero examples and numerical limit") {
  CHECK(f_at_zero(MonotoneFunctionKind::sld()) == 0.5);
  CHECK(f_at_zero(MonotoneFunctionKind::km()) == 0.0);
  CHECK(f_at_zero(MonotoneFunctionKind::wyd(0.0)) == 0.25);
  CHECK(f_at_zero(MonotoneFunctionKind::rld()) == 0.0);
  for (const auto& kind : {MonotoneFunctionKind::sld(), MonotoneFunctionKind::rld()})
    CHECK(std::abs(eval_f(kind, 1e-8) - f_at_zero(kind)) <= 1e-6);
  // Most kinds approach f(0) like t^a or 1/log t, far slower than 1e-6 at
  // t = 1e-8; check that the gap shrinks along a decreasing grid instead.
  for (const auto& kind : standard_catalog()) {
    CAPTURE(kind.name());
    double previous = std::abs(eval_f(kind, 1e-2) - f_at_zero(kind));
    for (double t : {1e-4, 1e-6, 1e-8, 1e-12}) {
      const double gap = std::abs(eval_f(kind, t) - f_at_zero(kind));
      CHECK(gap <= previous);
      previous = gap;
    }
    CHECK(previous < 0.05);
  }
}

TEST_CASE("catalog normalization and identifiers") {
  const auto catalog = standard_catalog();
  CHECK(catalog.size() >= 7);
  for (const auto& kind : catalog) {
    CAPTURE(kind.name());
    CHECK(kind.f(1.0) == 1.0);
    CHECK(MonotoneFunctionKind::parse(kind.name()) == kind);
  }
  CHECK(MonotoneFunctionKind::parse("wyd:1") == MonotoneFunctionKind::km());
  CHECK(MonotoneFunctionKind::parse("wyd:-1") == MonotoneFunctionKind::km());
  CHECK_THROWS_AS(MonotoneFunctionKind::parse("bogus"), Error);
  CHECK_THROWS_AS(MonotoneFunctionKind::parse("wyd:3"), Error);
  CHECK_THROWS_AS(MonotoneFunctionKind::parse("sqrt:0.6"), Error);
  CHECK_THROWS_AS(MonotoneFunctionKind::parse("wyd:abc"), Error);
  CHECK(parse_kind_list("sld,km").size() == 2);
}

TEST_CASE("sqrt family endpoint equals rld") {
  const auto top = MonotoneFunctionKind::sqrt_family(0.5);
  for (double t : {1e-3, 0.2, 3.0, 50.0})
    CHECK(top.f(t) == doctest::Approx(MonotoneFunctionKind::rld().f(t)).epsilon(1e-14));
}

TEST_CASE("symmetry sweeps") {
  CHECK(check_symmetry(MonotoneFunctionKind::sld(), 100, 1).violations == 0);
  CHECK(check_symmetry(MonotoneFunctionKind::wyd(0.6), 100, 1).violations == 0);
  CHECK(check_symmetry(MonotoneFunctionKind::km(), 100, 1).violations == 0);
}

TEST_CASE("bounds sweeps") {
  CHECK(check_bounds(MonotoneFunctionKind::km(), 100, 2).passed());
  CHECK(check_bounds(MonotoneFunctionKind::sld(), 100, 2).passed());
  CHECK(check_bounds(MonotoneFunctionKind::rld(), 100, 2).passed());
}

TEST_CASE("sampled operator monotonicity") {
  CHECK(check_operator_monotone_sample(MonotoneFunctionKind::sld(), 3, 200, 3).violations == 0);
  CHECK(check_operator_monotone_sample(MonotoneFunctionKind::km(), 3, 200, 3).violations == 0);
  CHECK(check_operator_monotone_sample(MonotoneFunctionKind::wyd(0.9), 4, 200, 3).violations == 0);
  CHECK_THROWS_AS(check_operator_monotone_sample(MonotoneFunctionKind::km(), 7, 1, 3), Error);
}

TEST_CASE("c is homogeneous of degree -1") {
  Rng rng(77);
  for (const auto& kind : standard_catalog()) {
    for (int i = 0; i < 50; ++i) {
      const double x = std::exp(rng.uniform(-5, 5));
      const double y = std::exp(rng.uniform(-5, 5));
      const double l = std::exp(rng.uniform(-5, 5));
      const double c = eval_c(kind, x, y);
      CHECK(std::abs(eval_c(kind, l * x, l * y) - c / l) <= 1e-10 * c / l);
      CHECK(eval_c(kind, y, x) == doctest::Approx(c).epsilon(1e-12));
    }
  }
}

TEST_CASE("wyd approaches km near alpha = +-1") {
  const auto km = MonotoneFunctionKind::km();
  for (double alpha : {1.0 - 1e-4, -(1.0 - 1e-4)}) {
    const auto w = MonotoneFunctionKind::wyd(alpha);
    double worst = 0.0;
    for (int k = -60; k <= 60; ++k) {
      const double t = std::pow(10.0, k / 10.0);
      worst = std::max(worst, std::abs(w.f(t) - km.f(t)) / km.f(t));
    }
    CHECK(worst <= 1e-3);
  }
}

TEST_CASE("series branch agrees with closed form just outside the switchover") {
  for (const auto& kind : {MonotoneFunctionKind::km(), MonotoneFunctionKind::wyd(0.0), MonotoneFunctionKind::wyd(0.5),
                           MonotoneFunctionKind::wyd(-1.7), MonotoneFunctionKind::wyd(2.5)}) {
    CAPTURE(kind.name());
    for (double d : {1e-6, 2e-6, 5e-6, 1e-5}) {
      for (double t : {1.0 + d, 1.0 - d}) {
        const double closed = kind.f_closed(t);
        CHECK(std::abs(kind.f_series(t) - closed) <= 1e-9 * closed);
      }
    }
    // Continuity across the switch.
    CHECK(kind.f(1.0 + 0.999e-6) == doctest::Approx(kind.f(1.0 + 1.001e-6)).epsilon(1e-9));
  }
}

TEST_CASE("wyd outside (-1, 1) stays positive and symmetric") {
  const auto w = MonotoneFunctionKind::wyd(1.8);
  CHECK(w.f_at_zero() == 0.0);
  for (double t : {1e-4, 0.5, 2.0, 1e4}) {
    CHECK(w.f(t) > 0.0);
    CHECK(w.f(t) == doctest::Approx(t * w.f(1.0 / t)).epsilon(1e-12));
  }
}
