#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cesaro/calculus.hpp"
#include "cesaro/operator_engine.hpp"
#include "cesaro/symbols.hpp"
#include "cesaro/verify.hpp"

namespace py = pybind11;
using namespace cesaro;

namespace {

TestFunction from_python(const py::function& f, const std::string& label, std::vector<double> breakpoints) {
    return TestFunction(label, [f](double x) { return f(x).cast<Complex>(); }, std::move(breakpoints));
}

TestFunction to_test_function(const py::object& f) {
    if (py::isinstance<TestFunction>(f)) return f.cast<TestFunction>();
    return from_python(f.cast<py::function>(), "python", {});
}

HausdorffOperator to_operator(const Kernel& k, DomainSpace domain) { return {k, domain}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hausdorff operators, the Cesaro operator and its functional calculus";

    auto base = py::register_exception<Error>(m, "CesaroError");
    py::register_exception<PoleError>(m, "PoleError", base);
    py::register_exception<BranchError>(m, "BranchError", base);
    py::register_exception<DomainError>(m, "DomainError", base);
    py::register_exception<NonFiniteError>(m, "NonFiniteError", base);
    py::register_exception<ConfigError>(m, "ConfigError", base);
    py::register_exception<ToleranceNotMet>(m, "ToleranceNotMet", base);
    py::register_exception<DivergenceSuspected>(m, "DivergenceSuspected", base);
    py::register_exception<SlowDecay>(m, "SlowDecay", base);
    py::register_exception<SpectrumError>(m, "SpectrumError", base);
    py::register_exception<VanishingViolation>(m, "VanishingViolation", base);
    py::register_exception<TailUnbounded>(m, "TailUnbounded", base);
    py::register_exception<UnboundedAbove>(m, "UnboundedAbove", base);
    py::register_exception<OnSpectrum>(m, "OnSpectrum", base);

    py::class_<QuadratureConfig>(m, "QuadratureConfig")
        .def(py::init([](double tolerance, int max_subdivisions, double halfwidth) {
                 QuadratureConfig c{tolerance, max_subdivisions, halfwidth};
                 c.validate();
                 return c;
             }),
             py::arg("tolerance") = 1e-10, py::arg("max_subdivisions") = 400,
             py::arg("critical_line_halfwidth") = 200.0)
        .def_readwrite("tolerance", &QuadratureConfig::tolerance)
        .def_readwrite("max_subdivisions", &QuadratureConfig::max_subdivisions)
        .def_readwrite("critical_line_halfwidth", &QuadratureConfig::critical_line_halfwidth);

    py::class_<NuEvalConfig>(m, "NuEvalConfig")
        .def(py::init([](double tolerance, double threshold, double tail) {
                 NuEvalConfig c{tolerance, threshold, tail};
                 c.validate();
                 return c;
             }),
             py::arg("quadrature_tolerance") = 1e-10, py::arg("asymptotic_switch_threshold") = 30.0,
             py::arg("tail_truncation") = 50.0)
        .def_readwrite("quadrature_tolerance", &NuEvalConfig::quadrature_tolerance)
        .def_readwrite("asymptotic_switch_threshold", &NuEvalConfig::asymptotic_switch_threshold)
        .def_readwrite("tail_truncation", &NuEvalConfig::tail_truncation);

    m.def("gamma", &gamma_complex, py::arg("z"));
    m.def("cpow", &cpow, py::arg("z"), py::arg("alpha"));
    m.def("log_principal", &log_principal, py::arg("z"));
    m.def("zeta", &zeta_righthalf, py::arg("s"));
    m.def("volterra_nu", &volterra_nu, py::arg("y"), py::arg("cfg") = NuEvalConfig{});
    m.def("volterra_nu_primitive", &volterra_nu_primitive, py::arg("y"), py::arg("cfg") = NuEvalConfig{});
    m.def("volterra_nu_laplace", &volterra_nu_laplace, py::arg("p"), py::arg("cfg") = NuEvalConfig{});

    py::class_<Kernel>(m, "Kernel")
        .def_readonly("label", &Kernel::label)
        .def_readonly("support_lo", &Kernel::support_lo)
        .def_readonly("support_hi", &Kernel::support_hi)
        .def("__call__", &Kernel::evaluate, py::arg("u"))
        .def("evaluate", &Kernel::evaluate, py::arg("u"))
        .def_property_readonly("has_closed_form", [](const Kernel& k) { return k.closed_form_mellin.has_value(); })
        .def("closed_form_mellin",
             [](const Kernel& k, Complex z) {
                 if (!k.closed_form_mellin) throw ConfigError(k.label + " has no closed-form Mellin transform");
                 return (*k.closed_form_mellin)(z);
             },
             py::arg("z"))
        .def("mellin", [](const Kernel& k, Complex z, const QuadratureConfig& cfg) { return mellin_transform(k, z, cfg); },
             py::arg("z"), py::arg("cfg") = QuadratureConfig{})
        .def("__repr__", [](const Kernel& k) { return "<Kernel " + k.label + ">"; });

    m.def("cesaro_kernel", &cesaro_kernel);
    m.def("hardy_kernel", &hardy_kernel, py::arg("alpha"));
    m.def("copson_kernel", &copson_kernel, py::arg("alpha"));
    m.def("holder_kernel", &holder_kernel, py::arg("alpha"));
    m.def("generalized_cesaro_kernel", &generalized_cesaro_kernel, py::arg("alpha"));
    m.def("fractional_part_kernel", &fractional_part_kernel);
    m.def("log_resolvent_kernel", &log_resolvent_kernel, py::arg("lam"), py::arg("cfg") = NuEvalConfig{});
    m.def("log_inverse_kernel", &log_inverse_kernel, py::arg("cfg") = NuEvalConfig{});
    m.def("condition_b_integral",
          [](const Kernel& k, const QuadratureConfig& cfg) { return condition_b_integral(k, cfg).value.real(); },
          py::arg("kernel"), py::arg("cfg") = QuadratureConfig{});

    py::enum_<DomainSpace>(m, "Domain")
        .value("FULL_LINE", DomainSpace::FullLine)
        .value("HALF_LINE", DomainSpace::HalfLine)
        .value("UNIT_INTERVAL", DomainSpace::UnitInterval);

    py::class_<TestFunction>(m, "TestFunction")
        .def(py::init(&from_python), py::arg("f"), py::arg("label") = "python",
             py::arg("breakpoints") = std::vector<double>{})
        .def("__call__", &TestFunction::operator(), py::arg("x"))
        .def_property_readonly("label", &TestFunction::label)
        .def("l2_norm_squared", &TestFunction::l2_norm_squared, py::arg("cfg") = QuadratureConfig{});
    m.def("indicator_unit", &indicator_unit);
    m.def("exponential_halfline", &exponential_halfline, py::arg("p") = 1.0, py::arg("positive") = true);
    m.def("gaussian", &gaussian);

    m.def("apply",
          [](const Kernel& k, const py::object& f, double x, DomainSpace domain, const QuadratureConfig& cfg) {
              return apply(to_operator(k, domain), to_test_function(f), x, cfg);
          },
          py::arg("kernel"), py::arg("f"), py::arg("x"), py::arg("domain") = DomainSpace::FullLine,
          py::arg("cfg") = QuadratureConfig{});
    m.def("resolvent_cesaro",
          [](Complex lam, const py::object& f, double x, DomainSpace domain, const QuadratureConfig& cfg) {
              return resolvent_cesaro(lam, to_test_function(f), x, domain, cfg);
          },
          py::arg("lam"), py::arg("f"), py::arg("x"), py::arg("domain") = DomainSpace::FullLine,
          py::arg("cfg") = QuadratureConfig{});
    m.def("fractional_power_apply",
          [](Complex alpha, const py::object& f, double x, DomainSpace domain, const QuadratureConfig& cfg) {
              return fractional_power_apply(alpha, to_test_function(f), x, domain, cfg);
          },
          py::arg("alpha"), py::arg("f"), py::arg("x"), py::arg("domain") = DomainSpace::FullLine,
          py::arg("cfg") = QuadratureConfig{});
    m.def("log_resolvent_apply",
          [](Complex lam, const py::object& f, double x, const QuadratureConfig& cfg) {
              return log_resolvent_apply(lam, to_test_function(f), x, cfg);
          },
          py::arg("lam"), py::arg("f"), py::arg("x"), py::arg("cfg") = QuadratureConfig{});
    m.def("log_inverse_apply",
          [](const py::object& f, double x, const QuadratureConfig& cfg) {
              return log_inverse_apply(to_test_function(f), x, cfg);
          },
          py::arg("f"), py::arg("x"), py::arg("cfg") = QuadratureConfig{});

    py::enum_<SymbolSource>(m, "SymbolSource")
        .value("AUTO", SymbolSource::Auto)
        .value("NUMERIC", SymbolSource::Numeric)
        .value("CLOSED_FORM", SymbolSource::ClosedForm);

    m.def("symbol",
          [](const Kernel& k, double s, SymbolSource source, const QuadratureConfig& cfg) {
              return symbol_value(to_operator(k, DomainSpace::FullLine), s, source, cfg);
          },
          py::arg("kernel"), py::arg("s"), py::arg("source") = SymbolSource::Auto,
          py::arg("cfg") = QuadratureConfig{});
    m.def("symbol_grid",
          [](const Kernel& k, double s_min, double s_max, int count, SymbolSource source,
             const QuadratureConfig& cfg) {
              const auto g = symbol_grid(to_operator(k, DomainSpace::FullLine), s_min, s_max, count, cfg, source);
              return py::make_tuple(g.s_values, g.phi_values);
          },
          py::arg("kernel"), py::arg("s_min"), py::arg("s_max"), py::arg("count"),
          py::arg("source") = SymbolSource::Auto, py::arg("cfg") = QuadratureConfig{});
    m.def("operator_norm",
          [](const Kernel& k, SymbolSource source, const QuadratureConfig& cfg) {
              return operator_norm(to_operator(k, DomainSpace::FullLine), cfg, source);
          },
          py::arg("kernel"), py::arg("source") = SymbolSource::Auto, py::arg("cfg") = QuadratureConfig{});
    m.def("holder_norm", &holder_norm_closed_form, py::arg("alpha"));

    py::class_<SpectrumCurve>(m, "SpectrumCurve")
        .def("__call__", &SpectrumCurve::operator(), py::arg("t"))
        .def_readonly("t_min", &SpectrumCurve::t_min)
        .def_readonly("t_max", &SpectrumCurve::t_max)
        .def_readonly("label", &SpectrumCurve::label);
    m.def("spectrum_circle", [](std::optional<std::function<Complex(Complex)>> F) { return spectrum_circle(F); },
          py::arg("F") = py::none());
    m.def("spectrum_log_curve", &spectrum_log_curve);
    m.def("spectral_bound", &spectral_bound, py::arg("curve"));
    m.def("resolvent_norm_log", &resolvent_norm_log, py::arg("lam"));
    m.def("stability_surrogate", &stability_surrogate, py::arg("t"), py::arg("s"));

    m.def("mellin_transform", &mellin_transform, py::arg("kernel"), py::arg("z"), py::arg("cfg") = QuadratureConfig{});

    py::class_<HolomorphicFunctionSpec>(m, "FunctionSpec")
        .def(py::init([](std::function<Complex(Complex)> F, std::string description, bool vanishes,
                         bool holomorphic) {
                 return HolomorphicFunctionSpec{std::move(F), std::move(description), vanishes, holomorphic};
             }),
             py::arg("F"), py::arg("description") = "", py::arg("vanishes_at_zero") = true,
             py::arg("holomorphic_near_circle") = true)
        .def("__call__", [](const HolomorphicFunctionSpec& F, Complex z) { return F.evaluate(z); })
        .def_readonly("description", &HolomorphicFunctionSpec::domain_description);
    m.def("hardy_function", &hardy_function, py::arg("alpha"));
    m.def("copson_function", &copson_function, py::arg("alpha"));
    m.def("power_function", &power_function, py::arg("alpha"));
    m.def("fractional_part_function", &fractional_part_function);
    m.def("kernel_from_function", &kernel_from_function, py::arg("F"), py::arg("x"),
          py::arg("cfg") = reconstruction_config());

    py::class_<ConditionReport>(m, "ConditionReport")
        .def_readonly("s_values", &ConditionReport::s_values)
        .def_readonly("residuals", &ConditionReport::residuals)
        .def_readonly("condition_a", &ConditionReport::condition_a)
        .def_readonly("condition_b", &ConditionReport::condition_b)
        .def_readonly("condition_b_value", &ConditionReport::condition_b_value)
        .def_readonly("condition_c", &ConditionReport::condition_c)
        .def_readonly("passed", &ConditionReport::pass)
        .def_readonly("notes", &ConditionReport::notes);
    m.def("verify_conditions", &verify_conditions, py::arg("kernel"), py::arg("F"), py::arg("s_values"),
          py::arg("cfg") = QuadratureConfig{}, py::arg("tolerance") = 1e-6);

    m.def("verification_suites", [] {
        std::vector<std::string> names;
        for (const auto& s : verification_suites()) names.push_back(s.name);
        return names;
    });
    m.def("run_suite",
          [](const std::string& name) {
              const SuiteReport r = run_suite(name);
              py::list checks;
              for (const auto& c : r.checks) checks.append(py::make_tuple(c.name, c.passed, c.detail));
              return py::make_tuple(r.passed(), checks);
          },
          py::arg("name"));
}
