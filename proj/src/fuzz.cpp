#include "monometric/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "monometric/channels.hpp"
#include "monometric/classical.hpp"
#include "monometric/metric.hpp"
#include "monometric/random.hpp"

namespace monometric {

FuzzSuite parse_suite(std::string_view name) {
  if (name == "monotone") return FuzzSuite::monotone;
  if (name == "schwarz") return FuzzSuite::schwarz;
  if (name == "ordering") return FuzzSuite::ordering;
  if (name == "classical") return FuzzSuite::classical;
  throw Error(ErrorKind::parse, "unknown fuzz suite '" + std::string(name) + "'");
}

std::string_view suite_name(FuzzSuite suite) {
  switch (suite) {
    case FuzzSuite::monotone: return "monotone";
    case FuzzSuite::schwarz: return "schwarz";
    case FuzzSuite::ordering: return "ordering";
    case FuzzSuite::classical: return "classical";
  }
  return "?";
}

std::map<std::string, double> RunConfig::default_tolerances() {
  return {{"contraction_rel", kContractionRelTol},
          {"contraction_abs", kContractionAbsTol},
          {"schwarz_rel", kSchwarzRelTol},
          {"ordering_rel", 1e-10},
          {"classical_rel", kContractionRelTol}};
}

void RunConfig::validate() const {
  if (trials < 1) throw Error(ErrorKind::domain, "trials must be >= 1");
  if (dims.empty()) throw Error(ErrorKind::domain, "no dimensions given");
  for (int d : dims)
    if (d < 2 || d > 16) throw Error(ErrorKind::domain, "dims must lie in [2, 16], got " + std::to_string(d));
  if (kinds.empty()) throw Error(ErrorKind::domain, "no kinds given");
  const auto defaults = default_tolerances();
  for (const auto& [name, value] : tolerances) {
    if (!defaults.contains(name)) throw Error(ErrorKind::domain, "unknown tolerance '" + name + "'");
    if (!(value >= 0.0) || !std::isfinite(value))
      throw Error(ErrorKind::domain, "tolerance '" + name + "' must be a nonnegative number");
  }
}

double RunConfig::tol(const std::string& name) const {
  if (auto it = tolerances.find(name); it != tolerances.end()) return it->second;
  return default_tolerances().at(name);
}

nlohmann::json FuzzReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite_name(suite);
  j["seed"] = seed;
  j["trials"] = trials;
  j["checks"] = checks;
  j["passes"] = passes;
  j["failures"] = failures;
  j["skips"] = skips;
  j["worst_margin"] = worst_margin;
  j["tolerances"] = tolerances;
  if (!failures_by_kind.empty()) j["failures_by_kind"] = failures_by_kind;
  return j;
}

namespace {

class Tally {
 public:
  explicit Tally(FuzzReport& r) : r_(r) {}

  void skip() {
    ++r_.checks;
    ++r_.skips;
  }

  void record(bool passed, double margin, const std::string& kind = {}) {
    ++r_.checks;
    if (passed) {
      ++r_.passes;
    } else {
      ++r_.failures;
      if (!kind.empty()) ++r_.failures_by_kind[kind];
    }
    if (first_ || margin < r_.worst_margin) r_.worst_margin = margin;
    first_ = false;
  }

 private:
  FuzzReport& r_;
  bool first_ = true;
};

struct TrialSetup {
  Eigen::Index n;
  std::uint64_t seed;
  Rng rng;
};

TrialSetup setup(const RunConfig& config, std::size_t trial) {
  const std::uint64_t seed = derive_seed(config.seed, trial);
  Rng rng(seed);
  const auto n = static_cast<Eigen::Index>(config.dims[rng.index(config.dims.size())]);
  return {n, seed, rng};
}

void run_monotone(const RunConfig& config, Tally& tally) {
  const double rel = config.tol("contraction_rel");
  const double abs = config.tol("contraction_abs");
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    auto t = setup(config, trial);
    const auto env = static_cast<Eigen::Index>(1 + t.rng.index(3));
    const auto d = random_density(t.n, derive_seed(t.seed, 1));
    const auto a = random_tangent(t.n, derive_seed(t.seed, 2));
    const auto ch = random_channel(t.n, env, derive_seed(t.seed, 3));
    for (const auto& kind : config.kinds) {
      const auto report = check_contraction(kind, ch, d, a, rel, abs);
      if (report.skipped)
        tally.skip();
      else
        tally.record(report.passed, report.margin, kind.name());
    }
  }
}

void run_schwarz(const RunConfig& config, Tally& tally) {
  const double rel = config.tol("schwarz_rel");
  const double abs = config.tol("contraction_abs");
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    auto t = setup(config, trial);
    const auto env = static_cast<Eigen::Index>(1 + t.rng.index(3));
    const auto d = random_density(t.n, derive_seed(t.seed, 1));
    const auto ch = random_channel(t.n, env, derive_seed(t.seed, 3));
    const ComplexMatrix k = t.rng.ginibre(t.n, t.n);
    const auto report = check_schwarz(ch, d, k, rel, abs);
    if (report.skipped)
      tally.skip();
    else
      tally.record(report.passed, report.min_eigenvalue / std::max(report.scale, std::numeric_limits<double>::min()));
  }
}

void run_ordering(const RunConfig& config, Tally& tally) {
  const double rel = config.tol("ordering_rel");
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    auto t = setup(config, trial);
    const auto d = random_density(t.n, derive_seed(t.seed, 1));
    const auto a = random_tangent(t.n, derive_seed(t.seed, 2));
    const double lo = metric_sld(d, a, a);
    const double hi = metric_rld(d, a, a);
    for (const auto& kind : config.kinds) {
      const double v = metric_value(kind, d, a, a);
      const double margin = std::min((v - lo) / lo, (hi - v) / hi);
      tally.record(margin >= -rel, margin, kind.name());
    }
  }
}

void run_classical(const RunConfig& config, Tally& tally) {
  const double rel = config.tol("classical_rel");
  const double abs = config.tol("contraction_abs");
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    auto t = setup(config, trial);
    const auto n = t.n;
    std::vector<double> p(static_cast<std::size_t>(n));
    std::vector<double> u(static_cast<std::size_t>(n));
    double psum = 0.0;
    double umean = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      p[i] = -std::log(t.rng.uniform(1e-12, 1.0)) + 0.01;
      psum += p[i];
      u[i] = t.rng.normal();
      umean += u[i] / static_cast<double>(n);
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
      p[i] /= psum;
      u[i] -= umean;
    }
    Eigen::MatrixXd pi(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) pi(i, j) = t.rng.uniform(0.0, 1.0) < 0.3 ? 0.0 : t.rng.uniform(0.0, 1.0);
      if (pi.col(j).sum() == 0.0) pi(j, j) = 1.0;
      pi.col(j) /= pi.col(j).sum();
    }
    // Column sums after division can miss 1 by an ulp; absorb it in the largest entry.
    for (Eigen::Index j = 0; j < n; ++j) {
      Eigen::Index imax = 0;
      pi.col(j).maxCoeff(&imax);
      pi(imax, j) += 1.0 - pi.col(j).sum();
    }
    const auto ch = classical_stochastic(pi);
    ComplexMatrix dp = ComplexMatrix::Zero(n, n);
    ComplexMatrix du = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      dp(i, i) = p[static_cast<std::size_t>(i)];
      du(i, i) = u[static_cast<std::size_t>(i)];
    }
    const ComplexMatrix tp = ch.apply(dp);
    const ComplexMatrix tu = ch.apply(du);
    std::vector<double> q(static_cast<std::size_t>(n));
    std::vector<double> w(static_cast<std::size_t>(n));
    double qsum = 0.0;
    double wmean = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      q[static_cast<std::size_t>(i)] = tp(i, i).real();
      w[static_cast<std::size_t>(i)] = tu(i, i).real();
      qsum += tp(i, i).real();
      wmean += tu(i, i).real() / static_cast<double>(n);
    }
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] /= qsum;
      w[i] -= wmean;
    }
    const ProbabilityVector pv(p);
    const SimplexTangent uv(u);
    const double before = fisher_form(pv, uv, uv);
    const ProbabilityVector qv(q);
    if (!qv.strictly_positive()) {
      tally.skip();
      continue;
    }
    const SimplexTangent wv(w);
    const double after = fisher_form(qv, wv, wv);
    tally.record(after <= before * (1.0 + rel) + abs, (before - after) / before);
  }
}

}  // namespace

FuzzReport run_fuzz(FuzzSuite suite, const RunConfig& config) {
  config.validate();
  FuzzReport report;
  report.suite = suite;
  report.seed = config.seed;
  report.trials = config.trials;
  report.tolerances = RunConfig::default_tolerances();
  for (const auto& [name, value] : config.tolerances) report.tolerances[name] = value;
  Tally tally(report);
  switch (suite) {
    case FuzzSuite::monotone: run_monotone(config, tally); break;
    case FuzzSuite::schwarz: run_schwarz(config, tally); break;
    case FuzzSuite::ordering: run_ordering(config, tally); break;
    case FuzzSuite::classical: run_classical(config, tally); break;
  }
  return report;
}

}  // namespace monometric
