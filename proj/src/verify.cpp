#include "cesaro/verify.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

#include "cesaro/calculus.hpp"
#include "cesaro/csv.hpp"
#include "cesaro/operator_engine.hpp"
#include "cesaro/symbols.hpp"

namespace cesaro {

namespace {

constexpr double kPi = std::numbers::pi;
using Outcome = std::pair<bool, std::string>;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

std::string cstr(Complex z) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g%+gi", z.real(), z.imag());
    return buf;
}

double rel_err(Complex got, Complex want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Largest error seen so far and where it happened.
struct Worst {
    double value = 0.0;
    std::string where;

    void update(double v, const std::string& at) {
        if (!(v <= value)) {
            value = v;
            where = at;
        }
    }
    Outcome below(double bound) const {
        return {value < bound, "max error " + sci(value) + " at " + where + " (bound " +
                                   sci(bound) + ")"};
    }
};

void run_check(SuiteReport& report, const std::string& name,
               const std::function<Outcome()>& body) {
    try {
        auto [ok, detail] = body();
        report.checks.push_back({name, ok, detail});
    } catch (const std::exception& e) {
        report.checks.push_back({name, false, e.what()});
    }
}

const std::vector<double> kMellinGrid{0.0, 1.0, -1.0, 5.0, -5.0, 20.0, -20.0, 50.0, -50.0};

// ν(y,-1) references from a 30-digit evaluation.
const std::vector<std::pair<double, double>> kNuReference{
    {0.1, 1.8394404588722550002}, {0.5, 1.8286017509626361342}, {1.0, 2.8077702420285193652},
    {2.0, 7.4308466788401444821}, {5.0, 148.42715501543112788}, {10.0, 22026.471626550749376},
    {20.0, 485165195.4121675972}, {30.0, 10686474581524.463548}};

// ---------------------------------------------------------------- special_fn

void special_fn_suite(SuiteReport& r) {
    run_check(r, "gamma recurrence", [] {
        Worst w;
        for (Complex z : {Complex(0.3, 0.2), Complex(1.5, -2.0), Complex(4.0, 7.0),
                          Complex(10.0, 0.5), Complex(0.01, 15.0), Complex(18.0, -3.0)}) {
            w.update(rel_err(gamma_complex(z + 1.0), z * gamma_complex(z)), cstr(z));
        }
        return w.below(1e-10);
    });
    run_check(r, "cpow exponent law", [] {
        Worst w;
        for (Complex z : {Complex(2.0), Complex(0.5, 3.0), Complex(1e-3, -1e-3), Complex(7.0, -2.0)}) {
            for (auto [a, b] : {std::pair{Complex(0.5), Complex(0.5)},
                                std::pair{Complex(1.0, 1.0), Complex(-0.3, 2.0)},
                                std::pair{Complex(2.0), Complex(0.25, -0.5)}}) {
                w.update(rel_err(cpow(z, a) * cpow(z, b), cpow(z, a + b)), cstr(z));
            }
        }
        return w.below(1e-10);
    });
    run_check(r, "nu against reference values", [] {
        const NuEvalConfig cfg;
        Worst w;
        for (auto [y, ref] : kNuReference) {
            w.update(rel_err(volterra_nu(y, cfg), ref), "y=" + sci(y));
        }
        return w.below(cfg.quadrature_tolerance * 10.0);
    });
    run_check(r, "Laplace transform of nu", [] {
        Worst w;
        for (Complex p : {Complex(2.0), Complex(3.0), Complex(2.0, -1.0)}) {
            w.update(std::abs(volterra_nu_laplace(p) - 1.0 / log_principal(p)), "p=" + cstr(p));
        }
        return w.below(1e-6);
    });
    run_check(r, "zeta against fractional-part integral", [] {
        const Kernel frac = fractional_part_kernel();
        KernelIntegralRequest req;
        Worst w;
        for (Complex s : {Complex(2.0), Complex(3.0), Complex(0.5, 5.0)}) {
            req.weight = [s](double v) { return std::exp((s - 1.0) * v); };
            req.frequency = std::abs(s.imag());
            const Complex integral = integrate_kernel(frac, req).value;
            const Complex rhs = s / (s - 1.0) - s * integral;
            w.update(std::abs(zeta_righthalf(s) - rhs), "s=" + cstr(s));
        }
        return w.below(1e-6);
    });
}

// ---------------------------------------------------------------- quadrature

void quadrature_suite(SuiteReport& r) {
    run_check(r, "subdivision monotonicity", [] {
        struct Fixture {
            std::string name;
            std::function<IntegralResult(const QuadratureConfig&)> run;
        };
        const std::vector<Fixture> fixtures{
            {"u^-1/2 on (0,1)",
             [](const QuadratureConfig& c) {
                 return integrate_finite([](double u) { return Complex(1.0 / std::sqrt(u)); }, 0.0,
                                         1.0, {-0.5, 0.0}, c);
             }},
            {"cos(40u) on (0,3)",
             [](const QuadratureConfig& c) {
                 return integrate_finite([](double u) { return Complex(std::cos(40.0 * u)); }, 0.0,
                                         3.0, {}, c);
             }},
            {"|u - 1/3|^1/2 on (0,1)",
             [](const QuadratureConfig& c) {
                 return integrate_finite(
                     [](double u) { return Complex(std::sqrt(std::abs(u - 1.0 / 3.0))); }, 0.0,
                     1.0, {}, c);
             }},
            {"exp(-u) on (0,inf)",
             [](const QuadratureConfig& c) {
                 return integrate_semiinfinite([](double u) { return Complex(std::exp(-u)); }, 0.0,
                                               1.0, c);
             }},
        };
        std::string detail;
        bool ok = true;
        for (const auto& f : fixtures) {
            QuadratureConfig cfg;
            cfg.tolerance = 1e-4;
            double previous = f.run(cfg).error_estimate;
            const double first = previous;
            for (int k = 0; k < 20; ++k) {
                cfg = cfg.tightened(0.5);
                const double e = f.run(cfg).error_estimate;
                if (e > previous) ok = false;
                previous = e;
            }
            detail += f.name + ": " + sci(first) + " -> " + sci(previous) + "; ";
        }
        return Outcome{ok, detail};
    });
    run_check(r, "singular endpoint exactness", [] {
        QuadratureConfig cfg;
        Worst w;
        for (double a : {0.2, 0.5, 1.5}) {
            for (double sigma : {-0.5, 0.0, 1.0}) {
                GapIntegrand f = [a, sigma](double x, double, double from_right) {
                    const double l = x < 0.5 ? -std::log(x) : -std::log1p(-from_right);
                    return Complex(std::pow(x, a - 1.0) * std::pow(l, sigma));
                };
                const auto res = integrate_finite_gap(f, 0.0, 1.0, {a - 1.0, sigma}, cfg);
                const double exact = std::pow(a, -sigma - 1.0) * std::tgamma(sigma + 1.0);
                w.update(rel_err(res.value, exact), "alpha=" + sci(a) + " sigma=" + sci(sigma));
            }
        }
        return w.below(1e-9);
    });
    run_check(r, "critical-line truncation consistency", [] {
        QuadratureConfig cfg;
        cfg.tolerance = 1e-6;
        const double x = 0.5;
        const std::vector<std::pair<std::string, RealToComplex>> fixtures{
            {"1/(1/4+s^2)", [](double s) { return Complex(1.0 / (0.25 + s * s)); }},
            {"holder(2) inverse, x=0.5",
             [x](double s) {
                 const Complex z(0.5, s);
                 return std::exp(-z * std::log(x)) / (z * z);
             }},
            {"holder(3) inverse, x=0.2",
             [](double s) {
                 const Complex z(0.5, s);
                 return std::exp(-z * std::log(0.2)) / (z * z * z);
             }},
        };
        std::string detail;
        bool ok = true;
        for (const auto& [name, g] : fixtures) {
            QuadratureConfig wide = cfg;
            wide.critical_line_halfwidth *= 2.0;
            const auto a = integrate_critical_line(g, cfg);
            const auto b = integrate_critical_line(g, wide);
            const double change = std::abs(a.value - b.value);
            if (!(change <= std::max(a.error_estimate, b.error_estimate))) ok = false;
            detail += name + ": change " + sci(change) + " vs error " + sci(a.error_estimate) + "; ";
        }
        return Outcome{ok, detail};
    });
    run_check(r, "critical-line reference values", [] {
        QuadratureConfig cfg;
        cfg.tolerance = 1e-6;
        Worst w;
        const auto lorentz =
            integrate_critical_line([](double s) { return Complex(1.0 / (0.25 + s * s)); }, cfg);
        w.update(std::abs(lorentz.value - 2.0 * kPi), "1/(1/4+s^2)");
        const auto holder = integrate_critical_line(
            [](double s) {
                const Complex z(0.5, s);
                return std::exp(-z * std::log(0.5)) / (z * z);
            },
            cfg);
        w.update(std::abs(holder.value - 2.0 * kPi * std::log(2.0)), "holder(2), x=0.5");
        return w.below(1e-5);
    });
}

// ---------------------------------------------------------------- kernels

std::vector<Kernel> catalog() {
    return {cesaro_kernel(),
            hardy_kernel(0.25),
            copson_kernel(0.25),
            holder_kernel(2.0),
            holder_kernel(Complex(1.0, 1.0)),
            generalized_cesaro_kernel(2.0),
            fractional_part_kernel(),
            log_resolvent_kernel(1.0),
            log_resolvent_kernel(2.0),
            log_inverse_kernel()};
}

void kernels_suite(SuiteReport& r) {
    for (const Kernel& k : catalog()) {
        run_check(r, "Mellin closed form: " + k.label, [&k] {
            Worst w;
            for (double s : kMellinGrid) {
                const Complex z(0.5, s);
                w.update(rel_err(mellin_transform(k, z), (*k.closed_form_mellin)(z)), "s=" + sci(s));
            }
            return w.below(1e-6);
        });
    }
    for (const Kernel& k : catalog()) {
        run_check(r, "condition (b): " + k.label, [&k] {
            QuadratureConfig cfg;
            cfg.tolerance = 1e-8;
            const double a = condition_b_integral(k, cfg).value.real();
            const double b = condition_b_integral(k, cfg).value.real();
            return Outcome{std::isfinite(a) && a == b, "integral " + sci(a)};
        });
    }
    run_check(r, "kernel uniqueness", [] {
        const auto first = catalog();
        const auto second = catalog();
        for (std::size_t j = 0; j < first.size(); ++j) {
            if (first[j].label != second[j].label) return Outcome{false, "label mismatch"};
            for (double u : {0.01, 0.3, 0.5, 0.999, 1.5, 2.0, 7.0}) {
                if (first[j].evaluate(u) != second[j].evaluate(u)) {
                    return Outcome{false, first[j].label + " differs at u=" + sci(u)};
                }
            }
        }
        return Outcome{true, std::to_string(first.size()) + " kernels agree pointwise"};
    });
}

// ---------------------------------------------------------------- operator_engine

// max_x |(λI - C) R f (x) - f(x)|.
double resolvent_residual(Complex lambda, const TestFunction& f, const std::vector<double>& xs,
                          DomainSpace domain) {
    QuadratureConfig outer;
    outer.tolerance = 1e-8;
    const QuadratureConfig inner = outer.tightened(0.1);
    const TestFunction Rf = resolvent_test_function(lambda, f, domain, inner);
    const HausdorffOperator C{cesaro_kernel(), domain};
    double worst = 0.0;
    for (double x : xs) {
        worst = std::max(worst, std::abs(lambda * Rf(x) - apply(C, Rf, x, outer) - f(x)));
    }
    return worst;
}

std::vector<double> x_grid(double a, double b, int n) {
    std::vector<double> xs;
    for (int k = 0; k < n; ++k) xs.push_back(a + (b - a) * k / (n - 1));
    return xs;
}

void operator_engine_suite(SuiteReport& r) {
    const std::vector<TestFunction> fixtures{indicator_unit(), exponential_halfline(), gaussian()};
    run_check(r, "resolvent residual", [&] {
        Worst w;
        const auto xs = x_grid(-1.9, 2.85, 20);
        for (Complex lambda : {Complex(3.0), Complex(0.0, 3.0), Complex(0.5), Complex(1.0, 0.5)}) {
            for (const auto& f : fixtures) {
                w.update(resolvent_residual(lambda, f, xs, DomainSpace::FullLine),
                         "lambda=" + cstr(lambda) + " " + f.label());
            }
        }
        return w.below(1e-6);
    });
    run_check(r, "resolvent across the circle", [&] {
        Worst w;
        const auto xs = x_grid(0.25, 2.5, 6);
        const Complex direction = std::polar(1.0, kPi / 3.0);
        for (double radius : {0.99, 1.01}) {
            const Complex lambda = 1.0 + radius * direction;
            w.update(resolvent_residual(lambda, fixtures[1], xs, DomainSpace::FullLine),
                     "|lambda-1|=" + sci(radius));
        }
        return w.below(1e-5);
    });
    run_check(r, "semigroup on functions", [&] {
        QuadratureConfig outer;
        outer.tolerance = 1e-8;
        const QuadratureConfig inner = outer.tightened(0.1);
        Worst w;
        for (auto [a, b] : {std::pair{Complex(1.0), Complex(1.0)},
                            std::pair{Complex(0.5), Complex(0.5)},
                            std::pair{Complex(1.0), Complex(1.0, 0.5)}}) {
            for (const auto& f : {fixtures[0], fixtures[1]}) {
                const HausdorffOperator Hb{holder_kernel(b), DomainSpace::FullLine};
                const HausdorffOperator Ha{holder_kernel(a), DomainSpace::FullLine};
                const TestFunction g = as_test_function(Hb, f, inner);
                for (double x : {0.5, 2.0}) {
                    const Complex nested = apply(Ha, g, x, outer);
                    const Complex direct = fractional_power_apply(a + b, f, x, DomainSpace::FullLine);
                    w.update(std::abs(nested - direct),
                             "(" + cstr(a) + "," + cstr(b) + ") " + f.label() + " x=" + sci(x));
                }
            }
        }
        return w.below(1e-5);
    });
    run_check(r, "power of power (alpha=2, beta=1)", [&] {
        Worst w;
        for (double x : {0.3, 0.8, 1.7}) {
            const Complex direct = fractional_power_apply(2.0, fixtures[1], x, DomainSpace::FullLine);
            const Complex composed =
                fractional_power_apply(2.0 * 1.0, fixtures[1], x, DomainSpace::FullLine);
            w.update(std::abs(direct - composed), "x=" + sci(x));
        }
        return w.below(1e-12);
    });
    run_check(r, "half-line consistency", [&] {
        std::string detail;
        for (const auto& f : {fixtures[0], fixtures[1]}) {
            for (const Kernel& k : {cesaro_kernel(), hardy_kernel(0.25), holder_kernel(0.5),
                                    copson_kernel(0.25)}) {
                for (double x : {0.1, 0.5, 0.9, 1.5, 4.0}) {
                    const Complex full = apply({k, DomainSpace::FullLine}, f, x);
                    const Complex half = apply({k, DomainSpace::HalfLine}, f, x);
                    if (full != half) {
                        return Outcome{false, k.label + " " + f.label() + " x=" + sci(x) + ": " +
                                                  sci(std::abs(full - half))};
                    }
                }
            }
        }
        return Outcome{true, "FullLine and HalfLine values identical"};
    });
    run_check(r, "bi-restriction", [&] {
        Worst w;
        const TestFunction& f = fixtures[0];
        for (Complex lambda : {Complex(3.0), Complex(0.0, 3.0), Complex(-1.0)}) {
            for (double x : {0.1, 0.4, 0.75, 0.95}) {
                const Complex unit = resolvent_cesaro(lambda, f, x, DomainSpace::UnitInterval);
                const Complex full = resolvent_cesaro(lambda, f, x, DomainSpace::FullLine);
                w.update(std::abs(unit - full), "lambda=" + cstr(lambda) + " x=" + sci(x));
            }
            for (double x : {1.5, 3.0}) {
                w.update(std::abs(resolvent_cesaro(lambda, f, x, DomainSpace::UnitInterval)),
                         "outside, x=" + sci(x));
            }
        }
        return w.below(1e-6);
    });
}

// ---------------------------------------------------------------- symbols

HausdorffOperator full(Kernel k) { return {std::move(k), DomainSpace::FullLine}; }

void symbols_suite(SuiteReport& r) {
    const auto C = full(cesaro_kernel());
    run_check(r, "circle", [&] {
        Worst w;
        for (int k = 0; k < 401; ++k) {
            const double s = -100.0 + 0.5 * k;
            const Complex phi = scalar_symbol(C, s);
            w.update(std::abs(std::abs(phi - 1.0) - 1.0), "s=" + sci(s));
        }
        return w.below(1e-8);
    });
    run_check(r, "symbol functoriality", [&] {
        Worst w;
        const auto hardy = full(hardy_kernel(0.25));
        const auto copson = full(copson_kernel(0.25));
        const auto Fh = hardy_function(0.25);
        const auto Fc = copson_function(0.25);
        for (double s : kMellinGrid) {
            const Complex phi = scalar_symbol(C, s);
            w.update(rel_err(Fh.evaluate(phi), scalar_symbol(hardy, s)), "hardy s=" + sci(s));
            w.update(rel_err(Fc.evaluate(phi), scalar_symbol(copson, s)), "copson s=" + sci(s));
        }
        return w.below(1e-6);
    });
    run_check(r, "semigroup of symbols", [] {
        Worst w;
        for (auto [a, b] : {std::pair{Complex(0.5), Complex(0.5)}, std::pair{Complex(1.0), Complex(2.0)},
                            std::pair{Complex(0.3, 0.2), Complex(0.7, -0.1)},
                            std::pair{Complex(1.0, 1.0), Complex(0.5)}}) {
            const auto Ha = full(holder_kernel(a));
            const auto Hb = full(holder_kernel(b));
            const auto Hab = full(holder_kernel(a + b));
            for (double s : {0.0, 1.0, -1.0, 5.0, -5.0, 20.0, -20.0}) {
                w.update(rel_err(scalar_symbol(Ha, s) * scalar_symbol(Hb, s), scalar_symbol(Hab, s)),
                         "(" + cstr(a) + "," + cstr(b) + ") s=" + sci(s));
            }
        }
        return w.below(1e-8);
    });
    run_check(r, "power of power on symbols", [] {
        Worst w;
        const auto H2 = full(holder_kernel(2.0));
        const auto H1 = full(holder_kernel(1.0));
        int used = 0;
        for (int k = -10; k <= 10; ++k) {
            const double s = 0.05 * k;
            const Complex phi = scalar_symbol(H2, s);
            if (!(phi.real() > 0.0)) continue;
            ++used;
            w.update(rel_err(cpow(phi, 0.5), scalar_symbol(H1, s)), "s=" + sci(s));
        }
        auto out = w.below(1e-8);
        out.second += ", " + std::to_string(used) + " points";
        return out;
    });
    run_check(r, "norm formula", [] {
        Worst w;
        for (Complex a : {Complex(0.5), Complex(1.0), Complex(2.0), Complex(1.0, 1.0),
                          Complex(0.3, -0.2)}) {
            const double norm = operator_norm(full(holder_kernel(a)), {}, SymbolSource::Numeric);
            w.update(rel_err(norm, holder_norm_closed_form(a)), "alpha=" + cstr(a));
        }
        return w.below(1e-5);
    });
    run_check(r, "log curve parametrizations", [] {
        Worst w;
        for (int k = 0; k <= 200; ++k) {
            const double s = -50.0 + 0.5 * k;
            w.update(log_curve_mismatch(s), "s=" + sci(s));
        }
        return w.below(1e-9);
    });
    run_check(r, "curve continuity", [] {
        const double circle = max_sample_gap(spectrum_circle(), 1001);
        const double image = max_sample_gap(spectrum_circle(hardy_function(0.25).evaluate), 1001);
        return Outcome{circle < 0.01 && image < 0.05,
                       "max gaps " + sci(circle) + " (circle), " + sci(image) + " (hardy image)"};
    });
    run_check(r, "inverse of log C on symbols", [&] {
        Worst w;
        const auto inv = full(log_inverse_kernel());
        for (double s : {0.0, 1.0, -1.0, 5.0, -5.0}) {
            const Complex product = scalar_symbol(inv, s) * log_principal(scalar_symbol(C, s));
            w.update(std::abs(product - 1.0), "s=" + sci(s));
        }
        return w.below(1e-6);
    });
}

// ---------------------------------------------------------------- calculus

void calculus_suite(SuiteReport& r) {
    run_check(r, "kernel -> F -> kernel", [] {
        Worst w;
        struct Case {
            HolomorphicFunctionSpec F;
            Kernel k;
        };
        const std::vector<Case> cases{{hardy_function(0.0), hardy_kernel(0.0)},
                                      {hardy_function(0.25), hardy_kernel(0.25)},
                                      {power_function(2.0), holder_kernel(2.0)}};
        for (const auto& c : cases) {
            for (double x : {0.2, 0.5, 0.8}) {
                w.update(std::abs(kernel_from_function(c.F, x) - c.k.evaluate(x)),
                         c.k.label + " x=" + sci(x));
            }
        }
        return w.below(1e-4);
    });
    run_check(r, "midpoint at the jump", [] {
        const Complex v = kernel_from_function(hardy_function(0.25), 1.0);
        return Outcome{std::abs(v - 0.5) < 1e-3, "K(1) = " + cstr(v)};
    });
    run_check(r, "F -> kernel -> F", [] {
        Worst w;
        const auto F = hardy_function(0.25);
        const Kernel k = reconstruct_kernel(F);
        for (double s : {0.0, 2.0, -2.0}) {
            const Complex z(0.5, s);
            w.update(std::abs(mellin_transform(k, z) - F.evaluate(1.0 / z)), "s=" + sci(s));
        }
        return w.below(1e-3);
    });
    run_check(r, "condition (c) implies functoriality", [] {
        const std::vector<double> samples(kMellinGrid);
        const auto C = full(cesaro_kernel());
        std::string detail;
        bool ok = true;
        for (auto [k, F] : {std::pair{hardy_kernel(0.25), hardy_function(0.25)},
                            std::pair{copson_kernel(0.25), copson_function(0.25)}}) {
            const auto report = verify_conditions(k, F, samples);
            double functoriality = 0.0;
            for (double s : samples) {
                functoriality = std::max(
                    functoriality,
                    rel_err(F.evaluate(scalar_symbol(C, s)), scalar_symbol(full(k), s)));
            }
            const bool consistent = !report.pass || functoriality < 1e-6;
            ok = ok && report.pass && consistent;
            detail += k.label + ": conditions " + (report.pass ? "pass" : "fail") +
                      ", functoriality " + sci(functoriality) + "; ";
        }
        return Outcome{ok, detail};
    });
    run_check(r, "fractional part is a negative case", [] {
        const auto report =
            verify_conditions(fractional_part_kernel(), fractional_part_function(), {0.0, 1.0, -5.0});
        const bool noted = !report.notes.empty();
        return Outcome{report.condition_c && noted,
                       std::string("condition (c) ") + (report.condition_c ? "holds" : "fails") +
                           (noted ? ", holomorphy note present" : ", note missing")};
    });
    run_check(r, "Riemann-Lebesgue decay", [] {
        std::string detail;
        bool ok = true;
        for (const Kernel& k : {cesaro_kernel(), holder_kernel(2.0), hardy_kernel(0.25)}) {
            const auto report = riemann_lebesgue_check(k);
            ok = ok && report.pass;
            detail += k.label + ": |M(1/2+200i)| = " + sci(report.moduli.back()) + "; ";
        }
        return Outcome{ok, detail};
    });
}

// ---------------------------------------------------------------- cli

void cli_suite(SuiteReport& r) {
    run_check(r, "CSV determinism", [] {
        const auto C = full(cesaro_kernel());
        std::string runs[2];
        for (auto& text : runs) {
            std::ostringstream out;
            write_symbol_csv(out, symbol_grid(C, -10.0, 10.0, 201, {}, SymbolSource::Numeric));
            write_curve_csv(out, spectrum_log_curve(), 101);
            text = out.str();
        }
        return Outcome{runs[0] == runs[1], std::to_string(runs[0].size()) + " bytes per run"};
    });
    run_check(r, "curve emission", [] {
        std::ostringstream log_out, circle_out;
        write_curve_csv(log_out, spectrum_log_curve(), 3);
        write_curve_csv(circle_out, spectrum_circle(), 5);
        const std::string middle = "0," + format_double(std::log(2.0)) + ",0\n";
        const bool log_ok = log_out.str().find("\n" + middle) != std::string::npos;
        const bool circle_ok = circle_out.str().find("\n0,2,0\n") != std::string::npos;
        return Outcome{log_ok && circle_ok, log_out.str() + circle_out.str()};
    });
    run_check(r, "number format round trip", [] {
        for (double v : {kPi, -1e-300, 123456789.123456789, 2.0 / 3.0, 5e-324, 1e308}) {
            const std::string text = format_double(v);
            double back = 0.0;
            std::from_chars(text.data(), text.data() + text.size(), back);
            if (back != v) return Outcome{false, text};
        }
        return Outcome{true, "17 significant digits round-trip"};
    });
}

}  // namespace

bool SuiteReport::passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return !checks.empty();
}

const std::vector<SuiteInfo>& verification_suites() {
    static const std::vector<SuiteInfo> suites{
        {"special_fn", "gamma recurrence, cpow law, nu references, Laplace and zeta identities"},
        {"quadrature", "monotone error estimates, singular endpoints, critical-line truncation"},
        {"kernels", "Mellin closed forms, condition (b), kernel uniqueness"},
        {"operator_engine", "resolvent residuals, semigroup, half-line and unit-interval rules"},
        {"symbols", "circle, functoriality, semigroup, norms, log curve, inverse of log C"},
        {"calculus", "inverse Mellin round trips, conditions (a)(b)(c), decay"},
        {"cli", "CSV determinism and curve emission"},
    };
    return suites;
}

SuiteReport run_suite(const std::string& name) {
    static const std::vector<std::pair<std::string, void (*)(SuiteReport&)>> runners{
        {"special_fn", special_fn_suite},   {"quadrature", quadrature_suite},
        {"kernels", kernels_suite},         {"operator_engine", operator_engine_suite},
        {"symbols", symbols_suite},         {"calculus", calculus_suite},
        {"cli", cli_suite},
    };
    for (const auto& [suite, runner] : runners) {
        if (suite != name) continue;
        SuiteReport report;
        report.suite = name;
        const auto start = std::chrono::steady_clock::now();
        runner(report);
        report.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }
    throw ConfigError("unknown verification suite '" + name + "'");
}

}  // namespace cesaro
