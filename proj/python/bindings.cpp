#include <optional>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monometric/monometric.hpp"

namespace py = pybind11;
using namespace monometric;

namespace {

DensityMatrix density(const ComplexMatrix& m, double eps_min = kDefaultFloor) {
  return DensityMatrix::validate(m, eps_min);
}

py::object from_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

HorizontalVector horizontal(const std::vector<Complex>& u) { return HorizontalVector{u}; }

py::dict limit_to_dict(const LimitReport& r) {
  py::dict d;
  d["f0"] = r.f0;
  d["h"] = r.h;
  d["divergent"] = r.divergent;
  d["limit"] = r.limit ? py::object(py::float_(*r.limit)) : py::object(py::none());
  d["eps"] = r.eps;
  d["values"] = r.values;
  d["errors"] = r.errors;
  d["monotone_decay"] = r.monotone_decay;
  d["final_error"] = r.final_error;
  d["converged"] = r.converged;
  d["growth_confirmed"] = r.growth_confirmed;
  d["exceeds_threshold"] = r.exceeds_threshold;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Monotone Riemannian metrics on density matrices";

  py::register_exception<Error>(m, "MonometricError", PyExc_ValueError);

  py::class_<MonotoneFunctionKind>(m, "Kind")
      .def(py::init([](const std::string& id) { return MonotoneFunctionKind::parse(id); }), py::arg("id"))
      .def_property_readonly("name", &MonotoneFunctionKind::name)
      .def_property_readonly("f_at_zero", &MonotoneFunctionKind::f_at_zero)
      .def("f", &MonotoneFunctionKind::f, py::arg("t"))
      .def("c", &MonotoneFunctionKind::c, py::arg("x"), py::arg("y"))
      .def("__eq__", [](const MonotoneFunctionKind& a, const MonotoneFunctionKind& b) { return a == b; })
      .def("__repr__", [](const MonotoneFunctionKind& k) { return "Kind('" + k.name() + "')"; });
  py::implicitly_convertible<py::str, MonotoneFunctionKind>();

  m.def("catalog", &standard_catalog, "Standard catalog of monotone function kinds.");

  m.def("random_density", [](Eigen::Index n, std::uint64_t seed, double eps_min) {
    return random_density(n, seed, eps_min).matrix();
  }, py::arg("n"), py::arg("seed"), py::arg("eps_min") = kDefaultFloor);
  m.def("random_tangent", [](Eigen::Index n, std::uint64_t seed) { return random_tangent(n, seed).matrix(); },
        py::arg("n"), py::arg("seed"));
  m.def("random_unitary", &random_unitary, py::arg("n"), py::arg("seed"));

  m.def("metric_value", [](const MonotoneFunctionKind& kind, const ComplexMatrix& d, const ComplexMatrix& a,
                           std::optional<ComplexMatrix> b) {
    const TangentVector ta(a);
    return metric_value(kind, density(d), ta, b ? TangentVector(*b) : ta);
  }, py::arg("kind"), py::arg("density"), py::arg("a"), py::arg("b") = py::none());
  m.def("metric_sld", [](const ComplexMatrix& d, const ComplexMatrix& a, std::optional<ComplexMatrix> b) {
    const TangentVector ta(a);
    return metric_sld(density(d), ta, b ? TangentVector(*b) : ta);
  }, py::arg("density"), py::arg("a"), py::arg("b") = py::none());
  m.def("metric_rld", [](const ComplexMatrix& d, const ComplexMatrix& a, std::optional<ComplexMatrix> b) {
    const TangentVector ta(a);
    return metric_rld(density(d), ta, b ? TangentVector(*b) : ta);
  }, py::arg("density"), py::arg("a"), py::arg("b") = py::none());
  m.def("metric_km_quadrature", [](const ComplexMatrix& d, const ComplexMatrix& a, std::optional<ComplexMatrix> b,
                                   double rel_tol) {
    const TangentVector ta(a);
    return metric_km_quadrature(density(d), ta, b ? TangentVector(*b) : ta, rel_tol);
  }, py::arg("density"), py::arg("a"), py::arg("b") = py::none(), py::arg("rel_tol") = 1e-10);
  m.def("solve_lyapunov", [](const ComplexMatrix& d, const ComplexMatrix& b) {
    return solve_lyapunov(density(d), HermitianMatrix(b)).matrix();
  }, py::arg("density"), py::arg("b"));
  m.def("entropy_hessian", [](const ComplexMatrix& d, const ComplexMatrix& a, const ComplexMatrix& b,
                              const std::string& generator, double step) {
    EntropyGenerator gen;
    if (generator == "t_log_t")
      gen = EntropyGenerator::t_log_t();
    else if (generator == "square")
      gen = EntropyGenerator::square();
    else
      throw Error(ErrorKind::parse, "generator must be 't_log_t' or 'square'");
    return hessian_metric(gen, density(d), TangentVector(a), TangentVector(b), step);
  }, py::arg("density"), py::arg("a"), py::arg("b"), py::arg("generator") = "t_log_t", py::arg("step") = kDefaultStep);

  m.def("relative_entropy", [](const ComplexMatrix& d1, const ComplexMatrix& d2) {
    return relative_entropy(density(d1), density(d2));
  }, py::arg("d1"), py::arg("d2"));
  m.def("classical_relative_entropy", &classical_relative_entropy, py::arg("p"), py::arg("q"));
  m.def("alpha_entropy", [](const ComplexMatrix& d1, const ComplexMatrix& d2, double alpha) {
    return alpha_entropy(density(d1), density(d2), alpha);
  }, py::arg("d1"), py::arg("d2"), py::arg("alpha"));
  m.def("alpha_metric_hessian", [](const ComplexMatrix& d, const ComplexMatrix& a, const ComplexMatrix& b,
                                   double alpha, double step) {
    return alpha_metric_hessian(density(d), TangentVector(a), TangentVector(b), alpha, step);
  }, py::arg("density"), py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("step") = kDefaultStep);
  m.def("commutator_form", [](const ComplexMatrix& d, const ComplexMatrix& x, double alpha) {
    const auto form = commutator_form(density(d), HermitianMatrix(x), alpha);
    py::dict out;
    out["metric"] = form.metric;
    out["raw_trace"] = form.raw_trace;
    out["ratio"] = form.ratio ? py::object(py::float_(*form.ratio)) : py::object(py::none());
    return out;
  }, py::arg("density"), py::arg("x"), py::arg("alpha"));
  m.def("commutator_ratio_constant", &commutator_ratio_constant, py::arg("alpha"));
  m.def("mc_function_from_pair", &mc_function_from_pair, py::arg("p"), py::arg("lam"), py::arg("mu"));
  m.def("decompose_tangent", [](const ComplexMatrix& d, const ComplexMatrix& a) {
    const auto split = decompose_tangent(density(d), TangentVector(a));
    return py::make_tuple(split.commuting.matrix(), split.orthogonal.matrix());
  }, py::arg("density"), py::arg("a"));

  m.def("random_channel", [](Eigen::Index n, Eigen::Index env, std::uint64_t seed) {
    return random_channel(n, env, seed).kraus();
  }, py::arg("n"), py::arg("env_dim"), py::arg("seed"));
  m.def("pinching", [](const std::vector<Eigen::Index>& blocks) { return pinching(blocks).kraus(); },
        py::arg("block_sizes"));
  m.def("apply_channel", [](const std::vector<ComplexMatrix>& kraus, const ComplexMatrix& x) {
    return KrausChannel(kraus).apply(x);
  }, py::arg("kraus"), py::arg("m"));
  m.def("check_contraction", [](const MonotoneFunctionKind& kind, const std::vector<ComplexMatrix>& kraus,
                                const ComplexMatrix& d, const ComplexMatrix& a) {
    const auto r = check_contraction(kind, KrausChannel(kraus), density(d), TangentVector(a));
    py::dict out;
    out["before"] = r.value_before;
    out["after"] = r.value_after;
    out["margin"] = r.margin;
    out["passed"] = r.passed;
    out["skipped"] = r.skipped;
    return out;
  }, py::arg("kind"), py::arg("kraus"), py::arg("density"), py::arg("a"));

  m.def("fisher_form", [](const std::vector<double>& p, const std::vector<double>& u, const std::vector<double>& v) {
    return fisher_form(ProbabilityVector(p), SimplexTangent(u), SimplexTangent(v));
  }, py::arg("p"), py::arg("u"), py::arg("v"));
  m.def("geodesic_distance", [](const std::vector<double>& p, const std::vector<double>& r) {
    return geodesic_distance(ProbabilityVector(p), ProbabilityVector(r));
  }, py::arg("p"), py::arg("r"));
  m.def("hellinger", [](const std::vector<double>& p, const std::vector<double>& r) {
    return hellinger(ProbabilityVector(p), ProbabilityVector(r));
  }, py::arg("p"), py::arg("r"));

  m.def("density_from_stokes", [](double x, double y, double z) {
    return density_from_stokes(StokesVector{{x, y, z}}).matrix();
  }, py::arg("x"), py::arg("y"), py::arg("z"));
  m.def("radial_coefficient", &radial_coefficient, py::arg("r"));
  m.def("tangential_coefficient", &tangential_coefficient, py::arg("kind"), py::arg("r"));
  m.def("line_element", &line_element, py::arg("kind"), py::arg("r"), py::arg("dr"), py::arg("dn"));
  m.def("bloch_crosscheck", [](const MonotoneFunctionKind& kind, double r, const std::string& direction) {
    if (direction != "radial" && direction != "tangential")
      throw Error(ErrorKind::parse, "direction must be 'radial' or 'tangential'");
    const auto c = crosscheck_bloch(kind, r, direction == "radial" ? BlochDirection::radial : BlochDirection::tangential);
    return py::make_tuple(c.general, c.formula);
  }, py::arg("kind"), py::arg("r"), py::arg("direction"));
  m.def("tangential_limit", [](const MonotoneFunctionKind& kind) {
    const auto t = tangential_limit(kind);
    py::dict out;
    out["divergent"] = t.divergent;
    out["limit"] = t.limit ? py::object(py::float_(*t.limit)) : py::object(py::none());
    out["radii"] = t.radii;
    out["coefficients"] = t.coefficients;
    return out;
  }, py::arg("kind"));

  m.def("horizontal_lift", [](const std::vector<double>& lambdas, const std::vector<Complex>& u) {
    ComplexMatrix d = ComplexMatrix::Zero(static_cast<Eigen::Index>(lambdas.size()), static_cast<Eigen::Index>(lambdas.size()));
    for (std::size_t i = 0; i < lambdas.size(); ++i) d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = lambdas[i];
    return horizontal_lift(density(d), horizontal(u)).matrix();
  }, py::arg("lambdas"), py::arg("u"));
  m.def("lifted_inner", [](const MonotoneFunctionKind& kind, const RealVector& lambdas, const std::vector<Complex>& u,
                           std::optional<std::vector<Complex>> v) {
    return lifted_inner(kind, lambdas, horizontal(u), horizontal(v ? *v : u));
  }, py::arg("kind"), py::arg("lambdas"), py::arg("u"), py::arg("v") = py::none());
  m.def("fubini_study", [](const std::vector<Complex>& u, std::optional<std::vector<Complex>> v) {
    return fubini_study(horizontal(u), horizontal(v ? *v : u));
  }, py::arg("u"), py::arg("v") = py::none());
  m.def("radial_extension_limit", [](const MonotoneFunctionKind& kind, const std::vector<Complex>& u,
                                     std::optional<std::vector<Complex>> v, std::optional<std::vector<double>> eps,
                                     std::optional<std::vector<double>> weights) {
    const auto n = static_cast<Eigen::Index>(u.size()) + 1;
    const BoundarySequence seq = (eps || weights)
                                     ? BoundarySequence(eps ? *eps : BoundarySequence::standard(n).eps_grid(),
                                                        weights ? *weights : std::vector<double>(u.size(), 1.0))
                                     : BoundarySequence::standard(n);
    return limit_to_dict(radial_extension_limit(kind, seq, horizontal(u), horizontal(v ? *v : u)));
  }, py::arg("kind"), py::arg("u"), py::arg("v") = py::none(), py::arg("eps") = py::none(),
     py::arg("weights") = py::none());

  m.def("run_fuzz", [](const std::string& suite, std::uint64_t seed, std::size_t trials, std::vector<int> dims,
                       std::optional<std::vector<MonotoneFunctionKind>> kinds,
                       std::optional<std::map<std::string, double>> tolerances) {
    RunConfig config;
    config.seed = seed;
    config.trials = trials;
    config.dims = std::move(dims);
    if (kinds) config.kinds = *kinds;
    if (tolerances)
      for (const auto& [name, value] : *tolerances) config.tolerances[name] = value;
    FuzzReport report;
    {
      py::gil_scoped_release release;
      report = run_fuzz(parse_suite(suite), config);
    }
    return from_json(report.to_json());
  }, py::arg("suite"), py::arg("seed") = 7, py::arg("trials") = 100, py::arg("dims") = std::vector<int>{2, 3, 4},
     py::arg("kinds") = py::none(), py::arg("tolerances") = py::none());
}
