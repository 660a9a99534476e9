// Acceptance criteria 1-10. Usage: acceptance [N ...]; no argument runs all.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "cesaro/calculus.hpp"
#include "cesaro/operator_engine.hpp"
#include "cesaro/symbols.hpp"

using namespace cesaro;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double time_limit;
    std::function<Verdict()> run;
};

std::string fmt(const char* pattern, double v) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), pattern, v);
    return buf;
}

HausdorffOperator full(Kernel k) { return {std::move(k), DomainSpace::FullLine}; }

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

Verdict circle_spectrum() {
    const auto C = full(cesaro_kernel());
    double worst = 0.0;
    for (int k = 0; k < 401; ++k) {
        const double s = -100.0 + 0.5 * k;
        worst = std::max(worst, std::abs(std::abs(scalar_symbol(C, s) - 1.0) - 1.0));
    }
    return {worst < 1e-8, fmt("max ||phi-1|-1| = %.3e", worst)};
}

Verdict norm_formula() {
    double worst = 0.0;
    for (Complex a : {Complex(0.5), Complex(1.0), Complex(2.0), Complex(1.0, 1.0), Complex(0.3, -0.2)}) {
        const double norm = operator_norm(full(holder_kernel(a)), {}, SymbolSource::Numeric);
        worst = std::max(worst, rel(norm, holder_norm_closed_form(a)));
    }
    const double cesaro = operator_norm(full(cesaro_kernel()), {}, SymbolSource::Numeric);
    const double h2 = operator_norm(full(holder_kernel(2.0)), {}, SymbolSource::Numeric);
    const bool named = std::abs(cesaro - 2.0) < 2e-5 && std::abs(h2 - 4.0) < 4e-5;
    return {worst < 1e-5 && named, fmt("max relative error %.3e", worst) + fmt(", ||C|| = %.12f", cesaro) +
                                       fmt(", ||H_2|| = %.12f", h2)};
}

Verdict mellin_oracles() {
    double worst = 0.0;
    std::string where;
    for (const Kernel& k : {hardy_kernel(0.25), copson_kernel(0.25), holder_kernel(2.0),
                            holder_kernel(Complex(0.5, 0.5)), generalized_cesaro_kernel(2.0),
                            fractional_part_kernel()}) {
        for (double s : {0.0, 1.0, -1.0, 5.0, -5.0, 20.0, -20.0, 50.0, -50.0}) {
            const Complex z(0.5, s);
            const double e = rel(mellin_transform(k, z), (*k.closed_form_mellin)(z));
            if (e > worst) {
                worst = e;
                where = k.label + fmt(" s=%g", s);
            }
        }
    }
    return {worst < 1e-6, fmt("max relative error %.3e at ", worst) + where};
}

Verdict resolvent_residual() {
    QuadratureConfig outer;
    outer.tolerance = 1e-8;
    const QuadratureConfig inner = outer.tightened(0.1);
    const HausdorffOperator C = full(cesaro_kernel());
    double worst = 0.0;
    for (Complex lambda : {Complex(3.0), Complex(0.0, 3.0), Complex(0.5), Complex(1.0, 0.5)}) {
        for (const TestFunction& f : {indicator_unit(), exponential_halfline(), gaussian()}) {
            const TestFunction Rf = resolvent_test_function(lambda, f, DomainSpace::FullLine, inner);
            for (int k = 0; k < 20; ++k) {
                const double x = -1.9 + 0.25 * k;
                worst = std::max(worst, std::abs(lambda * Rf(x) - apply(C, Rf, x, outer) - f(x)));
            }
        }
    }
    return {worst < 1e-6, fmt("max residual %.3e", worst)};
}

Verdict semigroup() {
    double symbol_err = 0.0;
    for (auto [a, b] : {std::pair{Complex(0.5), Complex(0.5)}, std::pair{Complex(1.0), Complex(2.0)},
                        std::pair{Complex(0.3, 0.2), Complex(0.7, -0.1)},
                        std::pair{Complex(1.0, 1.0), Complex(0.5)}}) {
        const auto Ha = full(holder_kernel(a));
        const auto Hb = full(holder_kernel(b));
        const auto Hab = full(holder_kernel(a + b));
        for (int k = 0; k <= 40; ++k) {
            const double s = -20.0 + k;
            symbol_err = std::max(symbol_err, rel(scalar_symbol(Ha, s) * scalar_symbol(Hb, s),
                                                  scalar_symbol(Hab, s)));
        }
    }
    QuadratureConfig outer;
    outer.tolerance = 1e-8;
    const auto H1 = full(holder_kernel(1.0));
    double function_err = 0.0;
    for (const TestFunction& f : {indicator_unit(), exponential_halfline(), gaussian()}) {
        const TestFunction g = as_test_function(H1, f, outer.tightened(0.1));
        for (double x : {-1.5, -0.5, 0.25, 0.5, 0.9, 1.5, 3.0}) {
            const Complex nested = apply(H1, g, x, outer);
            const Complex direct = fractional_power_apply(2.0, f, x, DomainSpace::FullLine);
            function_err = std::max(function_err, std::abs(nested - direct));
        }
    }
    return {symbol_err < 1e-8 && function_err < 1e-5,
            fmt("symbol level %.3e", symbol_err) + fmt(", function level %.3e", function_err)};
}

Verdict log_spectrum() {
    const double bound = spectral_bound(spectrum_log_curve());
    const double at_one = resolvent_norm_log(1.0 + std::log(2.0));
    const double far = resolvent_norm_log(-30.0);
    const bool ok = std::abs(bound - std::log(2.0)) < 1e-8 && std::abs(at_one - 1.0) < 1e-8 &&
                    std::abs(far - 2.0 / std::numbers::pi) < 1e-3;
    return {ok, fmt("s(log C) = %.15f", bound) + fmt(", ||R(1+log2)|| = %.15f", at_one) +
                    fmt(", ||R(-30)|| = %.9f", far)};
}

Verdict nu_contract() {
    const double e30 = std::exp(30.0);
    const double asymptotic = rel(volterra_nu(30.0), e30);
    NuEvalConfig quadrature_only;
    quadrature_only.asymptotic_switch_threshold = 1e3;
    const double by_quadrature = rel(volterra_nu(30.0, quadrature_only), e30);
    const double laplace = std::abs(volterra_nu_laplace(2.0) - 1.0 / std::log(2.0));
    return {asymptotic < 1e-6 && by_quadrature < 1e-6 && laplace < 1e-6,
            fmt("nu(30) vs e^30: %.3e", asymptotic) + fmt(" (quadrature path %.3e)", by_quadrature) +
                fmt(", Laplace at p=2: %.3e", laplace)};
}

Verdict inverse_of_log() {
    const auto inv = full(log_inverse_kernel());
    double worst = 0.0;
    std::string values;
    for (double s : {0.0, 1.0, -1.0, 5.0, -5.0}) {
        const Complex product = scalar_symbol(inv, s) * -log_principal(Complex(0.5, -s));
        worst = std::max(worst, std::abs(product - 1.0));
        values += fmt(" s=%g:", s) + fmt(" %.6f", product.real()) + fmt("%+.6fi", product.imag());
    }
    return {worst < 1e-6, fmt("max |product - 1| = %.3e;", worst) + values};
}

Verdict inverse_mellin() {
    double worst = 0.0;
    const auto Fh = hardy_function(0.25);
    const auto F2 = power_function(2.0);
    const Kernel kh = hardy_kernel(0.25);
    const Kernel k2 = holder_kernel(2.0);
    for (double x : {0.2, 0.5, 0.8}) {
        worst = std::max(worst, std::abs(kernel_from_function(Fh, x) - kh.evaluate(x)));
        worst = std::max(worst, std::abs(kernel_from_function(F2, x) - k2.evaluate(x)));
    }
    const Complex jump = kernel_from_function(Fh, 1.0);
    return {worst < 1e-4 && std::abs(jump - 0.5) < 1e-3,
            fmt("max kernel error %.3e", worst) + fmt(", K(1) = %.12f", jump.real())};
}

Verdict domain_restrictions() {
    bool exact = true;
    for (const TestFunction& f : {indicator_unit(), exponential_halfline()}) {
        for (const Kernel& k : {cesaro_kernel(), hardy_kernel(0.25), copson_kernel(0.25),
                                holder_kernel(0.5), generalized_cesaro_kernel(2.0)}) {
            for (double x : {0.1, 0.5, 0.9, 1.5, 4.0}) {
                exact = exact && apply({k, DomainSpace::FullLine}, f, x) ==
                                     apply({k, DomainSpace::HalfLine}, f, x);
            }
        }
        for (double x : {0.3, 1.7}) {
            exact = exact && fractional_power_apply(0.5, f, x, DomainSpace::FullLine) ==
                                 fractional_power_apply(0.5, f, x, DomainSpace::HalfLine);
        }
    }
    double worst = 0.0;
    const TestFunction chi = indicator_unit();
    for (Complex lambda : {Complex(3.0), Complex(0.0, 3.0), Complex(-1.0), Complex(2.5, 1.0)}) {
        for (double x : {0.05, 0.3, 0.6, 0.95}) {
            worst = std::max(worst, std::abs(resolvent_cesaro(lambda, chi, x, DomainSpace::UnitInterval) -
                                             resolvent_cesaro(lambda, chi, x, DomainSpace::FullLine)));
        }
        for (double x : {1.2, 5.0}) {
            worst = std::max(worst,
                             std::abs(resolvent_cesaro(lambda, chi, x, DomainSpace::UnitInterval)));
        }
    }
    return {exact && worst < 1e-6, std::string("half-line ") + (exact ? "identical" : "differs") +
                                       fmt(", unit interval max deviation %.3e", worst)};
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list{
        {1, "circle spectrum", 5.0, circle_spectrum},
        {2, "norm formula", 30.0, norm_formula},
        {3, "Mellin oracle suite", 60.0, mellin_oracles},
        {4, "resolvent residual", 60.0, resolvent_residual},
        {5, "semigroup", 60.0, semigroup},
        {6, "log C spectrum and resolvent norms", 10.0, log_spectrum},
        {7, "nu-function contract", 30.0, nu_contract},
        {8, "inverse of log C", 30.0, inverse_of_log},
        {9, "inverse-Mellin round trip", 120.0, inverse_mellin},
        {10, "domain restrictions", 30.0, domain_restrictions},
    };
    return list;
}

bool run(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = c.run();
    } catch (const std::exception& e) {
        v = {false, std::string("error: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.time_limit;
    const bool pass = v.pass && in_time;
    std::printf("criterion %2d %s  %s: %s [%.2f s of %.0f s]\n", c.id, pass ? "PASS" : "FAIL",
                c.title.c_str(), v.detail.c_str(), seconds, c.time_limit);
    std::fflush(stdout);
    return pass;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
    bool all = true;
    for (const auto& c : criteria()) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
        all = run(c) && all;
    }
    return all ? 0 : 1;
}
