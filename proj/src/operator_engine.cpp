#include "cesaro/operator_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cesaro {

namespace {

bool inside_unit(double t) { return t > 0.0 && t < 1.0; }

// f as seen by an operator on `domain`.
TestFunction::Fn restricted(const TestFunction& f, DomainSpace domain) {
    switch (domain) {
        case DomainSpace::HalfLine:
            return [f](double t) { return t > 0.0 ? f(t) : Complex{0.0, 0.0}; };
        case DomainSpace::UnitInterval:
            return [f](double t) { return inside_unit(t) ? f(t) : Complex{0.0, 0.0}; };
        case DomainSpace::FullLine:
            break;
    }
    return [f](double t) { return f(t); };
}

std::vector<double> domain_breakpoints(const TestFunction& f, DomainSpace domain) {
    std::vector<double> out = f.breakpoints();
    if (domain == DomainSpace::HalfLine) out.push_back(0.0);
    if (domain == DomainSpace::UnitInterval) {
        out.push_back(0.0);
        out.push_back(1.0);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void check_point(DomainSpace domain, double x) {
    if (!std::isfinite(x)) throw DomainError("evaluation point must be finite");
    if (domain == DomainSpace::HalfLine && !(x > 0.0)) {
        throw DomainError("HalfLine operators are evaluated at x > 0");
    }
}

}  // namespace

std::string to_string(DomainSpace d) {
    switch (d) {
        case DomainSpace::FullLine: return "full";
        case DomainSpace::HalfLine: return "half";
        case DomainSpace::UnitInterval: return "unit";
    }
    return "full";
}

DomainSpace domain_from_string(const std::string& name) {
    if (name == "full" || name == "FullLine") return DomainSpace::FullLine;
    if (name == "half" || name == "HalfLine") return DomainSpace::HalfLine;
    if (name == "unit" || name == "UnitInterval") return DomainSpace::UnitInterval;
    throw ConfigError("unknown domain '" + name + "' (expected full, half or unit)");
}

TestFunction::TestFunction(std::string label, Fn fn, std::vector<double> breakpoints,
                           std::optional<Fn> cesaro_action)
    : label_(std::move(label)),
      fn_(std::move(fn)),
      breakpoints_(std::move(breakpoints)),
      cesaro_action_(std::move(cesaro_action)) {
    std::sort(breakpoints_.begin(), breakpoints_.end());
    breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end()), breakpoints_.end());
}

TestFunction TestFunction::checked(std::string label, Fn fn, std::vector<double> breakpoints,
                                   std::optional<Fn> cesaro_action, const QuadratureConfig& cfg) {
    TestFunction f(std::move(label), std::move(fn), std::move(breakpoints),
                   std::move(cesaro_action));
    double norm = 0.0;
    try {
        norm = f.l2_norm_squared(cfg);
    } catch (const DivergenceSuspected& e) {
        throw DomainError("test function '" + f.label() + "' is not square integrable: " + e.what());
    } catch (const ToleranceNotMet& e) {
        throw DomainError("test function '" + f.label() + "' is not square integrable: " + e.what());
    }
    if (!std::isfinite(norm)) {
        throw DomainError("test function '" + f.label() + "' is not square integrable");
    }
    return f;
}

double TestFunction::l2_norm_squared(const QuadratureConfig& cfg) const {
    RealToComplex square = [this](double t) {
        const double a = std::abs(fn_(t));
        return Complex(a * a, 0.0);
    };
    std::vector<double> pts = breakpoints_;
    if (pts.empty()) pts.push_back(0.0);
    IntegralResult total = integrate_march(square, pts.front(), -1, 1.0, cfg);
    for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
        total += integrate_panels(square, pts[j], pts[j + 1], 1.0, cfg);
    }
    total += integrate_march(square, pts.back(), +1, 1.0, cfg);
    return total.value.real();
}

TestFunction indicator_unit() {
    return TestFunction(
        "indicator_unit", [](double t) { return Complex(inside_unit(t) ? 1.0 : 0.0, 0.0); },
        {0.0, 1.0}, TestFunction::Fn([](double x) {
            if (x <= 0.0) return Complex{0.0, 0.0};
            return Complex(x <= 1.0 ? 1.0 : 1.0 / x, 0.0);
        }));
}

TestFunction exponential_halfline(double p, bool positive) {
    if (!(p > 0.0)) throw DomainError("exponential_halfline needs p > 0");
    const double sign = positive ? 1.0 : -1.0;
    return TestFunction(
        std::string("exponential_") + (positive ? "pos" : "neg") + "(" + std::to_string(p) + ")",
        [p, sign](double t) {
            return Complex(sign * t > 0.0 ? std::exp(-p * std::abs(t)) : 0.0, 0.0);
        },
        {0.0}, TestFunction::Fn([p, sign](double x) {
            if (!(sign * x > 0.0)) return Complex{0.0, 0.0};
            const double px = p * std::abs(x);
            return Complex(-std::expm1(-px) / px, 0.0);
        }));
}

TestFunction gaussian() {
    return TestFunction(
        "gaussian", [](double t) { return Complex(std::exp(-t * t), 0.0); }, {},
        TestFunction::Fn([](double x) {
            if (x == 0.0) return Complex{1.0, 0.0};
            return Complex(std::sqrt(std::numbers::pi) * std::erf(x) / (2.0 * x), 0.0);
        }));
}

Complex apply(const HausdorffOperator& op, const TestFunction& f, double x,
              const QuadratureConfig& cfg) {
    check_point(op.domain, x);
    if (op.domain == DomainSpace::UnitInterval && !inside_unit(x)) return {0.0, 0.0};
    const TestFunction::Fn g = restricted(f, op.domain);

    KernelIntegralRequest req;
    req.cfg = cfg;
    if (x == 0.0) {
        const Complex g0 = g(0.0);
        if (g0 == Complex{0.0, 0.0}) return g0;
        req.weight = [](double) { return Complex{1.0, 0.0}; };
        return g0 * integrate_kernel(op.kernel, req).value;
    }
    req.weight = [&g, x](double w) { return g(x * std::exp(w)); };
    for (double b : domain_breakpoints(f, op.domain)) {
        const double ratio = b / x;
        if (ratio > 0.0) req.breakpoints.push_back(std::log(ratio));
    }
    return integrate_kernel(op.kernel, req).value;
}

TestFunction as_test_function(const HausdorffOperator& op, const TestFunction& f,
                              const QuadratureConfig& cfg) {
    return TestFunction(op.kernel.label + "[" + f.label() + "]",
                        [op, f, cfg](double x) { return apply(op, f, x, cfg); },
                        domain_breakpoints(f, op.domain));
}

Complex resolvent_cesaro(Complex lambda, const TestFunction& f, double x, DomainSpace domain,
                         const QuadratureConfig& cfg) {
    check_point(domain, x);
    const double distance = std::abs(lambda - 1.0);
    if (std::abs(distance - 1.0) < 1e-12) {
        throw SpectrumError("lambda lies on the spectrum circle |lambda - 1| = 1");
    }
    if (domain == DomainSpace::UnitInterval && distance < 1.0) {
        throw SpectrumError("on the unit interval the resolvent is only available for |lambda - 1| > 1");
    }
    if (domain == DomainSpace::UnitInterval && !inside_unit(x)) return {0.0, 0.0};
    const Complex fx = restricted(f, domain)(x);
    if (distance > 1.0) {
        const HausdorffOperator hardy{hardy_kernel(1.0 / lambda), domain};
        return apply(hardy, f, x, cfg) / (lambda * lambda) + fx / lambda;
    }
    const HausdorffOperator copson{copson_kernel(1.0 - 1.0 / lambda), domain};
    return fx / lambda - apply(copson, f, x, cfg) / (lambda * lambda);
}

TestFunction resolvent_test_function(Complex lambda, const TestFunction& f, DomainSpace domain,
                                     const QuadratureConfig& cfg) {
    return TestFunction("resolvent[" + f.label() + "]",
                        [lambda, f, domain, cfg](double x) {
                            if (domain == DomainSpace::HalfLine && !(x > 0.0)) {
                                return Complex{0.0, 0.0};
                            }
                            return resolvent_cesaro(lambda, f, x, domain, cfg);
                        },
                        domain_breakpoints(f, domain));
}

Complex fractional_power_apply(Complex alpha, const TestFunction& f, double x, DomainSpace domain,
                               const QuadratureConfig& cfg) {
    if (!(alpha.real() > 0.0)) throw DomainError("fractional powers need Re alpha > 0");
    return apply({holder_kernel(alpha), domain}, f, x, cfg);
}

Complex log_resolvent_apply(Complex lambda, const TestFunction& f, double x,
                            const QuadratureConfig& cfg, const NuEvalConfig& nu_cfg) {
    return apply({log_resolvent_kernel(lambda, nu_cfg), DomainSpace::FullLine}, f, x, cfg);
}

Complex log_inverse_apply(const TestFunction& f, double x, const QuadratureConfig& cfg,
                          const NuEvalConfig& nu_cfg) {
    return apply({log_inverse_kernel(nu_cfg), DomainSpace::FullLine}, f, x, cfg);
}

}  // namespace cesaro
