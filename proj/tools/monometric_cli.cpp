// Command-line front end: metric evaluation, catalog checks, property fuzzing,
// Bloch-ball profiles and pure-state limit reports.
//
// Exit codes: 0 all checks passed, 1 a property was violated, 2 usage or input
// error.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "monometric/monometric.hpp"

namespace {

using nlohmann::json;
using namespace monometric;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(ErrorKind::parse, "cannot write " + out_path);
  out << text;
}

void emit_json(const json& j, const std::string& out_path) { emit(j.dump(2) + "\n", out_path); }

std::vector<MonotoneFunctionKind> kinds_or_catalog(const std::vector<std::string>& ids) {
  if (ids.empty()) return standard_catalog();
  std::vector<MonotoneFunctionKind> kinds;
  for (const auto& id : ids) kinds.push_back(MonotoneFunctionKind::parse(id));
  return kinds;
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::parse, "--tol expects name=value, got '" + item + "'");
    const auto values = parse_real_list(std::string_view(item).substr(eq + 1));
    if (values.size() != 1) throw Error(ErrorKind::parse, "--tol expects a single value");
    out[item.substr(0, eq)] = values.front();
  }
  return out;
}

// ---------------------------------------------------------------- omf

struct CommonOptions {
  std::vector<std::string> kinds;
  std::uint64_t seed = 7;
  std::size_t trials = 100;
  std::vector<int> dims;
  std::vector<std::string> tolerances;
  std::string out;
};

int cmd_omf_list(const CommonOptions& opt) {
  json list = json::array();
  for (const auto& kind : kinds_or_catalog(opt.kinds))
    list.push_back({{"kind", kind.name()}, {"f_at_zero", kind.f_at_zero()}, {"f_at_one", kind.f(1.0)}});
  emit_json(list, opt.out);
  return kExitOk;
}

int cmd_omf_check(const CommonOptions& opt) {
  std::vector<int> dims = opt.dims.empty() ? std::vector<int>{2, 3, 4} : opt.dims;
  for (int d : dims)
    if (d < 2 || d > 6) throw Error(ErrorKind::domain, "omf check dims must lie in [2, 6]");
  if (opt.trials < 1) throw Error(ErrorKind::domain, "trials must be >= 1");

  bool ok = true;
  json kinds = json::array();
  for (const auto& kind : kinds_or_catalog(opt.kinds)) {
    const auto sym = check_symmetry(kind, opt.trials, opt.seed);
    const auto bounds = check_bounds(kind, opt.trials, opt.seed);
    json om = json::array();
    bool om_ok = true;
    for (int d : dims) {
      const auto r = check_operator_monotone_sample(kind, d, opt.trials, opt.seed);
      om_ok = om_ok && r.passed();
      om.push_back({{"dim", d}, {"violations", r.violations}, {"worst_min_eigenvalue", r.worst_min_eigenvalue}});
    }
    const bool normalized = kind.f(1.0) == 1.0;
    ok = ok && normalized && sym.passed() && bounds.passed() && om_ok;
    kinds.push_back({{"kind", kind.name()},
                     {"f_at_one", kind.f(1.0)},
                     {"f_at_zero", kind.f_at_zero()},
                     {"symmetry", {{"violations", sym.violations}, {"worst_excess", sym.worst_excess}}},
                     {"bounds", {{"violations", bounds.violations}, {"worst_excess", bounds.worst_excess}}},
                     {"operator_monotone", om}});
  }
  json report = {{"seed", opt.seed},
                 {"trials", opt.trials},
                 {"tolerances", {{"symmetry_rel", 1e-10}, {"bounds_rel", 1e-10}, {"operator_monotone", kOperatorMonotoneTol}}},
                 {"kinds", kinds},
                 {"passed", ok}};
  emit_json(report, opt.out);
  return ok ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- metric

struct MetricOptions {
  std::string kind = "sld";
  std::string density;
  std::string tangent;
  std::string tangent2;
  std::string out;
};

int cmd_metric_eval(const MetricOptions& opt) {
  const auto kind = MonotoneFunctionKind::parse(opt.kind);
  const auto d = DensityMatrix::validate(matrix_from_json(read_json_file(opt.density)));
  const TangentVector a(matrix_from_json(read_json_file(opt.tangent)));
  const TangentVector b = opt.tangent2.empty() ? a : TangentVector(matrix_from_json(read_json_file(opt.tangent2)));
  if (a.dim() != d.dim() || b.dim() != d.dim())
    throw Error(ErrorKind::dimension_mismatch, "tangent and density dimensions differ");
  json j = {{"kind", kind.name()},
            {"value", metric_value(kind, d, a, b)},
            {"sld", metric_sld(d, a, b)},
            {"rld", metric_rld(d, a, b)}};
  emit_json(j, opt.out);
  return kExitOk;
}

// ---------------------------------------------------------------- fuzz

int cmd_fuzz(const std::string& suite, const CommonOptions& opt) {
  RunConfig config;
  config.seed = opt.seed;
  config.trials = opt.trials;
  if (!opt.dims.empty()) config.dims = opt.dims;
  config.kinds = kinds_or_catalog(opt.kinds);
  for (const auto& [name, value] : parse_tolerances(opt.tolerances)) config.tolerances[name] = value;
  config.output = opt.out;
  config.validate();
  const auto report = run_fuzz(parse_suite(suite), config);
  emit_json(report.to_json(), opt.out);
  return report.failures == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- classical

struct ClassicalOptions {
  std::string p;
  std::string r;
  std::string out;
};

int cmd_classical_distance(const ClassicalOptions& opt) {
  const ProbabilityVector p(parse_real_list(opt.p));
  const ProbabilityVector r(parse_real_list(opt.r));
  const double d = geodesic_distance(p, r);
  const double dh = hellinger(p, r);
  const double kl = classical_relative_entropy(p.values(), r.values());
  json j = {{"geodesic", d}, {"hellinger", dh}, {"hellinger_from_geodesic", 2.0 * std::sin(d / 4.0)}};
  j["relative_entropy"] = std::isfinite(kl) ? json(kl) : json("infinite");
  emit_json(j, opt.out);
  return kExitOk;
}

// ---------------------------------------------------------------- bloch

struct BlochOptions {
  std::vector<std::string> kinds;
  std::string radii = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  std::string out;
};

int cmd_bloch_profile(const BlochOptions& opt) {
  const auto rows = bloch_profile(kinds_or_catalog(opt.kinds), parse_real_list(opt.radii));
  std::string csv = "r,kind,radial,tangential\n";
  for (const auto& row : rows)
    csv += format_number(row.r) + "," + row.kind + "," + format_number(row.radial) + "," +
           format_number(row.tangential) + "\n";
  emit(csv, opt.out);
  return kExitOk;
}

// ---------------------------------------------------------------- pure

struct PureOptions {
  std::vector<std::string> kinds;
  std::string eps = "1e-2,1e-3,1e-4,1e-5,1e-6,1e-7";
  std::string u = "1";
  std::string v;
  std::string weights;
  std::string out;
};

int cmd_pure_limit(const PureOptions& opt) {
  const HorizontalVector u{parse_complex_list(opt.u)};
  const HorizontalVector v{opt.v.empty() ? u.u : parse_complex_list(opt.v)};
  if (u.u.size() != v.u.size()) throw Error(ErrorKind::dimension_mismatch, "--u and --v differ in length");
  std::vector<double> weights = opt.weights.empty() ? std::vector<double>(u.u.size(), 1.0) : parse_real_list(opt.weights);
  if (weights.size() != u.u.size()) throw Error(ErrorKind::dimension_mismatch, "--w must have one weight per component");
  const BoundarySequence seq(parse_real_list(opt.eps), weights);

  bool ok = true;
  json kinds = json::array();
  for (const auto& kind : kinds_or_catalog(opt.kinds)) {
    const auto r = radial_extension_limit(kind, seq, u, v);
    json k = {{"kind", kind.name()}, {"f0", r.f0}, {"h", r.h}, {"eps", r.eps}, {"values", r.values}};
    if (r.divergent) {
      k["limit"] = "divergent";
      k["growth_confirmed"] = r.growth_confirmed;
      k["exceeds_threshold"] = r.exceeds_threshold;
      ok = ok && r.growth_confirmed;
    } else {
      k["limit"] = *r.limit;
      k["errors"] = r.errors;
      k["monotone_decay"] = r.monotone_decay;
      k["final_error"] = r.final_error;
      k["converged"] = r.converged;
      ok = ok && r.monotone_decay && r.converged;
    }
    kinds.push_back(std::move(k));
  }
  json report = {{"tolerances", {{"limit_rel", kLimitRelTol}, {"divergence_factor", kDivergenceFactor}}},
                 {"kinds", kinds},
                 {"passed", ok}};
  emit_json(report, opt.out);
  return ok ? kExitOk : kExitViolation;
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool randomized) {
  cmd->add_option("--f", opt.kinds, "Monotone function kinds (comma-separated); default: full catalog")
      ->delimiter(',');
  if (randomized) {
    cmd->add_option("--seed", opt.seed, "Random seed");
    cmd->add_option("--trials", opt.trials, "Number of trials");
    cmd->add_option("--dims", opt.dims, "Matrix dimensions (comma-separated)")->delimiter(',');
    cmd->add_option("--tol", opt.tolerances, "Tolerance override name=value (repeatable)");
  }
  cmd->add_option("--out", opt.out, "Output path (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monotone Riemannian metrics on density matrices"};
  app.require_subcommand(1);

  CommonOptions list_opt;
  CommonOptions check_opt;
  CommonOptions fuzz_opt;
  MetricOptions metric_opt;
  ClassicalOptions classical_opt;
  BlochOptions bloch_opt;
  PureOptions pure_opt;
  std::string suite;

  auto* omf = app.add_subcommand("omf", "Operator monotone function catalog");
  omf->require_subcommand(1);
  auto* omf_list = omf->add_subcommand("list", "List catalog kinds");
  add_common(omf_list, list_opt, false);
  auto* omf_check = omf->add_subcommand("check", "Check symmetry, bounds and operator monotonicity");
  add_common(omf_check, check_opt, true);

  auto* metric = app.add_subcommand("metric", "Metric evaluation");
  metric->require_subcommand(1);
  auto* metric_eval = metric->add_subcommand("eval", "Evaluate K_D(A, B) with sld/rld context");
  metric_eval->add_option("--f", metric_opt.kind, "Monotone function kind")->required();
  metric_eval->add_option("--density", metric_opt.density, "Density matrix JSON file")->required();
  metric_eval->add_option("--tangent", metric_opt.tangent, "Tangent matrix JSON file")->required();
  metric_eval->add_option("--tangent2", metric_opt.tangent2, "Second tangent (default: same as --tangent)");
  metric_eval->add_option("--out", metric_opt.out, "Output path");

  auto* fuzz = app.add_subcommand("fuzz", "Randomized property suites");
  fuzz->add_option("suite", suite, "monotone | schwarz | ordering | classical")->required();
  add_common(fuzz, fuzz_opt, true);

  auto* classical = app.add_subcommand("classical", "Probability simplex geometry");
  classical->require_subcommand(1);
  auto* distance = classical->add_subcommand("distance", "Geodesic and Hellinger distance");
  distance->add_option("--p", classical_opt.p, "First distribution")->required();
  distance->add_option("--r", classical_opt.r, "Second distribution")->required();
  distance->add_option("--out", classical_opt.out, "Output path");

  auto* bloch = app.add_subcommand("bloch", "Bloch-ball line element");
  bloch->require_subcommand(1);
  auto* profile = bloch->add_subcommand("profile", "CSV of radial/tangential coefficients");
  profile->add_option("--f", bloch_opt.kinds, "Kinds (comma-separated)")->delimiter(',');
  profile->add_option("--r", bloch_opt.radii, "Radius grid in (0, 1)");
  profile->add_option("--out", bloch_opt.out, "Output path");

  auto* pure = app.add_subcommand("pure", "Radial extension to pure states");
  pure->require_subcommand(1);
  auto* limit = pure->add_subcommand("limit", "Lifted inner products along a boundary sequence");
  limit->add_option("--f", pure_opt.kinds, "Kinds (comma-separated)")->delimiter(',');
  limit->add_option("--eps", pure_opt.eps, "Decreasing eps grid");
  limit->add_option("--u", pure_opt.u, "Horizontal vector u_2..u_n, entries re or re:im");
  limit->add_option("--v", pure_opt.v, "Second horizontal vector (default: u)");
  limit->add_option("--w", pure_opt.weights, "Positive weights of the boundary sequence");
  limit->add_option("--out", pure_opt.out, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (omf_list->parsed()) return cmd_omf_list(list_opt);
    if (omf_check->parsed()) return cmd_omf_check(check_opt);
    if (metric_eval->parsed()) return cmd_metric_eval(metric_opt);
    if (fuzz->parsed()) return cmd_fuzz(suite, fuzz_opt);
    if (distance->parsed()) return cmd_classical_distance(classical_opt);
    if (profile->parsed()) return cmd_bloch_profile(bloch_opt);
    if (limit->parsed()) return cmd_pure_limit(pure_opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
