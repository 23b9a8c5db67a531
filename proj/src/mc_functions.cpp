#include "monometric/mc_functions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "monometric/error.hpp"
#include "monometric/hermitian.hpp"
#include "monometric/random.hpp"

namespace monometric {

namespace {

std::string format_number(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view s) {
  double x = 0.0;
  const auto* end = s.data() + s.size();
  auto res = std::from_chars(s.data(), end, x);
  if (res.ec != std::errc() || res.ptr != end || s.empty())
    throw Error(ErrorKind::parse, "invalid number '" + std::string(s) + "'");
  return x;
}

void require_positive(double t, const char* what) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    std::ostringstream os;
    os << what << " must be positive and finite, got " << t;
    throw Error(ErrorKind::domain, os.str());
  }
}

// (t - 1) / log t with L = log t.
double km_closed(double t, double L) { return (t - 1.0) / L; }
double km_series(double L) { return 1.0 + L / 2.0 + L * L / 6.0; }

double wyd_closed(double beta, double L) {
  const double num = std::expm1(L);
  return beta * (1.0 - beta) * num * num / (std::expm1(beta * L) * std::expm1((1.0 - beta) * L));
}

double wyd_series(double beta, double L) {
  const double d2 = (beta * beta + (1.0 - beta) * (1.0 - beta)) / 6.0 + beta * (1.0 - beta) / 4.0;
  return 1.0 + L / 2.0 + (1.0 / 3.0 - d2) * L * L;
}

}  // namespace

MonotoneFunctionKind MonotoneFunctionKind::sqrt_family(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 0.5))
    throw Error(ErrorKind::domain, "sqrt family needs 0 <= alpha <= 1/2, got " + format_number(alpha));
  return {Family::sqrt, alpha};
}

MonotoneFunctionKind MonotoneFunctionKind::wyd(double alpha) {
  if (!(alpha > -3.0 && alpha < 3.0))
    throw Error(ErrorKind::domain, "wyd family needs -3 < alpha < 3, got " + format_number(alpha));
  if (alpha == 1.0 || alpha == -1.0) return km();
  return {Family::wyd, alpha};
}

MonotoneFunctionKind MonotoneFunctionKind::parse(std::string_view id) {
  const auto colon = id.find(':');
  const std::string_view head = id.substr(0, colon);
  if (colon == std::string_view::npos) {
    if (head == "sld") return sld();
    if (head == "rld") return rld();
    if (head == "km") return km();
    if (head == "km-geo") return km_geo();
    if (head == "km-sq") return km_sq();
    if (head == "sqrt" || head == "wyd")
      throw Error(ErrorKind::parse, "'" + std::string(head) + "' needs a parameter, e.g. " +
                                        std::string(head) + ":0.5");
  } else {
    const double alpha = parse_number(id.substr(colon + 1));
    if (head == "sqrt") return sqrt_family(alpha);
    if (head == "wyd") return wyd(alpha);
  }
  throw Error(ErrorKind::parse, "unknown monotone function '" + std::string(id) + "'");
}

std::string MonotoneFunctionKind::name() const {
  switch (family_) {
    case Family::sld: return "sld";
    case Family::rld: return "rld";
    case Family::km: return "km";
    case Family::km_geo: return "km-geo";
    case Family::km_sq: return "km-sq";
    case Family::sqrt: return "sqrt:" + format_number(*parameter_);
    case Family::wyd: return "wyd:" + format_number(*parameter_);
  }
  return "?";
}

double MonotoneFunctionKind::wyd_beta() const {
  if (family_ != Family::wyd) throw Error(ErrorKind::domain, "beta is defined for the wyd family only");
  return (1.0 - *parameter_) / 2.0;
}

double MonotoneFunctionKind::f_closed(double t) const {
  require_positive(t, "argument of f");
  const double L = std::log(t);
  switch (family_) {
    case Family::sld: return (1.0 + t) / 2.0;
    case Family::rld: return 2.0 * t / (1.0 + t);
    case Family::km: return km_closed(t, L);
    case Family::km_geo: return km_closed(t, L) * 2.0 * std::sqrt(t) / (1.0 + t);
    case Family::km_sq: {
      const double k = km_closed(t, L);
      return k * k * 2.0 / (1.0 + t);
    }
    case Family::sqrt: {
      const double a = *parameter_;
      // Divide through by t^{2a} for t > 1 to keep the exponentials bounded.
      if (L > 0.0) return 2.0 * std::exp((0.5 - a) * L) / (std::exp(-2.0 * a * L) + 1.0);
      return 2.0 * std::exp((a + 0.5) * L) / (1.0 + std::exp(2.0 * a * L));
    }
    case Family::wyd: return wyd_closed(wyd_beta(), L);
  }
  return 0.0;
}

double MonotoneFunctionKind::f_series(double t) const {
  require_positive(t, "argument of f");
  const double L = std::log(t);
  switch (family_) {
    case Family::km: return km_series(L);
    case Family::km_geo: return km_series(L) * 2.0 * std::sqrt(t) / (1.0 + t);
    case Family::km_sq: {
      const double k = km_series(L);
      return k * k * 2.0 / (1.0 + t);
    }
    case Family::wyd: return wyd_series(wyd_beta(), L);
    default: return f_closed(t);
  }
}

double MonotoneFunctionKind::f(double t) const {
  require_positive(t, "argument of f");
  if (t == 1.0) return 1.0;
  if (std::abs(t - 1.0) < kSeriesSwitchover) return f_series(t);
  return f_closed(t);
}

double MonotoneFunctionKind::c(double x, double y) const {
  require_positive(x, "x");
  require_positive(y, "y");
  return 1.0 / (y * f(x / y));
}

double MonotoneFunctionKind::f_at_zero() const noexcept {
  switch (family_) {
    case Family::sld: return 0.5;
    case Family::wyd: {
      const double beta = (1.0 - *parameter_) / 2.0;
      return (beta > 0.0 && beta < 1.0) ? beta * (1.0 - beta) : 0.0;
    }
    default: return 0.0;
  }
}

double eval_f(const MonotoneFunctionKind& kind, double t) { return kind.f(t); }
double eval_c(const MonotoneFunctionKind& kind, double x, double y) { return kind.c(x, y); }
double f_at_zero(const MonotoneFunctionKind& kind) noexcept { return kind.f_at_zero(); }

std::vector<MonotoneFunctionKind> standard_catalog() {
  using K = MonotoneFunctionKind;
  return {K::sld(),    K::rld(),   K::km(),     K::sqrt_family(0.0), K::sqrt_family(0.25),
          K::km_geo(), K::km_sq(), K::wyd(0.0), K::wyd(0.5)};
}

std::vector<MonotoneFunctionKind> parse_kind_list(std::string_view list) {
  std::vector<MonotoneFunctionKind> kinds;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto item = list.substr(0, comma);
    if (item.empty()) throw Error(ErrorKind::parse, "empty entry in kind list");
    kinds.push_back(MonotoneFunctionKind::parse(item));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return kinds;
}

namespace {

template <typename Check>
SweepReport sweep(std::size_t samples, std::uint64_t seed, Check check) {
  if (samples < 1) throw Error(ErrorKind::domain, "need at least one sample");
  Rng rng(seed);
  SweepReport report;
  report.samples = samples;
  const double lo = std::log(1e-6);
  const double hi = std::log(1e6);
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = std::exp(rng.uniform(lo, hi));
    const double excess = check(t);
    if (excess > 1.0) ++report.violations;
    if (excess > report.worst_excess) {
      report.worst_excess = excess;
      report.worst_t = t;
    }
  }
  return report;
}

}  // namespace

SweepReport check_symmetry(const MonotoneFunctionKind& kind, std::size_t samples, std::uint64_t seed) {
  return sweep(samples, seed, [&](double t) {
    const double ft = kind.f(t);
    const double tol = 1e-10 * std::max(1.0, ft);
    return std::abs(ft - t * kind.f(1.0 / t)) / tol;
  });
}

SweepReport check_bounds(const MonotoneFunctionKind& kind, std::size_t samples, std::uint64_t seed) {
  return sweep(samples, seed, [&](double t) {
    const double ft = kind.f(t);
    const double tol = 1e-10 * (1.0 + t);
    const double below = 2.0 * t / (1.0 + t) - ft;
    const double above = ft - (1.0 + t) / 2.0;
    return std::max({0.0, below, above}) / tol;
  });
}

OperatorMonotoneReport check_operator_monotone_sample(const MonotoneFunctionKind& kind, int dim,
                                                      std::size_t trials, std::uint64_t seed) {
  if (dim < 2 || dim > 6) throw Error(ErrorKind::domain, "dim must be in [2, 6]");
  const Eigen::Index n = dim;
  const auto f = [&](double t) { return t > 0.0 ? kind.f(t) : kind.f_at_zero(); };

  OperatorMonotoneReport report;
  report.trials = trials;
  report.worst_min_eigenvalue = std::numeric_limits<double>::infinity();
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    const ComplexMatrix g = rng.ginibre(n, n);
    ComplexMatrix h = g * g.adjoint() / static_cast<double>(n);
    h.diagonal().array() += Complex(0.1, 0.0);
    const auto hh = HermitianMatrix::symmetrized(h);

    // 0 <= R <= I by squashing the spectrum of a random Hermitian matrix.
    const auto x = HermitianMatrix::symmetrized(rng.ginibre(n, n));
    const auto r = matrix_function(x, [](double v) { return 1.0 / (1.0 + std::exp(-v)); });
    const auto h_half = matrix_function(hh, [](double v) { return std::sqrt(std::max(v, 0.0)); });
    const auto k = HermitianMatrix::symmetrized(h_half.matrix() * r.matrix() * h_half.matrix());

    const auto diff = matrix_function(hh, f) - matrix_function(k, f);
    const double lmin = min_eigenvalue(diff);
    if (lmin < -kOperatorMonotoneTol) ++report.violations;
    report.worst_min_eigenvalue = std::min(report.worst_min_eigenvalue, lmin);
  }
  return report;
}

}  // namespace monometric
