#include "cesaro/calculus.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>

namespace cesaro {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kTaylorTerms = 3;

// Taylor coefficients a_0..a_3 of F at 0 from the trapezoid rule on |w| = r.
std::array<Complex, kTaylorTerms + 1> taylor_coefficients(const HolomorphicFunctionSpec& F) {
    constexpr double radius = 0.25;
    constexpr int nodes = 64;
    std::array<Complex, kTaylorTerms + 1> a{};
    for (int j = 0; j < nodes; ++j) {
        const double theta = 2.0 * kPi * j / nodes;
        const Complex w = std::polar(radius, theta);
        const Complex value = F.evaluate(w);
        for (int k = 0; k <= kTaylorTerms; ++k) {
            a[static_cast<std::size_t>(k)] +=
                value * std::polar(std::pow(radius, -k), -k * theta) / static_cast<double>(nodes);
        }
    }
    return a;
}

// Inverse Mellin image of sum a_k z^-k: Hölder-k kernels on (0, 1).
Complex taylor_kernel(const std::array<Complex, kTaylorTerms + 1>& a, double x) {
    if (x > 1.0) return {0.0, 0.0};
    if (x == 1.0) return 0.5 * a[1];
    const double l = std::log(1.0 / x);
    return a[1] + a[2] * l + a[3] * (0.5 * l * l);
}

Complex taylor_remainder(const HolomorphicFunctionSpec& F,
                         const std::array<Complex, kTaylorTerms + 1>& a, Complex z) {
    const Complex inv = 1.0 / z;
    return F.evaluate(inv) - inv * (a[1] + inv * (a[2] + inv * a[3]));
}

// K_R(e^w) e^(w/2) = (1/2π) v.p.∫ R(1/(1/2+is)) e^(-isw) ds.
Complex scaled_remainder_kernel(const HolomorphicFunctionSpec& F,
                                const std::array<Complex, kTaylorTerms + 1>& a, double w,
                                const QuadratureConfig& cfg) {
    RealToComplex g = [&](double s) {
        return taylor_remainder(F, a, Complex(0.5, s)) * std::polar(1.0, -s * w) / (2.0 * kPi);
    };
    return integrate_critical_line(g, cfg).value;
}

std::array<Complex, kTaylorTerms + 1> checked_taylor(const HolomorphicFunctionSpec& F) {
    if (!F.vanishes_at_zero) {
        throw VanishingViolation("the calculus needs F(0) = 0 (" + F.domain_description + ")");
    }
    auto a = taylor_coefficients(F);
    const double scale = std::max({1.0, std::abs(a[1]), std::abs(a[2]), std::abs(a[3])});
    if (std::abs(a[0]) > 1e-8 * scale) {
        throw VanishingViolation("F declared to vanish at 0 but F(0) = " +
                                 std::to_string(std::abs(a[0])));
    }
    return a;
}

}  // namespace

HolomorphicFunctionSpec hardy_function(Complex alpha) {
    return {[alpha](Complex z) { return z / (1.0 - alpha * z); },
            "z/(1 - alpha z), pole at 1/alpha outside the closed disc |z - 1| <= 1", true, true};
}

HolomorphicFunctionSpec copson_function(Complex alpha) {
    return {[alpha](Complex z) { return z / ((1.0 - alpha) * z - 1.0); },
            "z/((1 - alpha) z - 1), pole at 1/(1 - alpha)", true, true};
}

HolomorphicFunctionSpec power_function(Complex alpha) {
    if (!(alpha.real() > 0.0)) throw DomainError("power_function needs Re alpha > 0");
    const bool integer = alpha.imag() == 0.0 && alpha.real() == std::floor(alpha.real());
    if (integer) {
        const int n = static_cast<int>(alpha.real());
        return {[n](Complex z) {
                    Complex out = 1.0;
                    for (int j = 0; j < n; ++j) out *= z;
                    return out;
                },
                "z^" + std::to_string(n) + ", entire", true, true};
    }
    // The branch point 0 lies on T+1, so this F is outside the holomorphic calculus.
    return {[alpha](Complex z) { return cpow(z, alpha); },
            "principal z^alpha on Re z > 0, extended by 0 at z = 0", true, false};
}

HolomorphicFunctionSpec fractional_part_function() {
    return {[](Complex z) { return z / (1.0 - z) - z * zeta_righthalf(1.0 / z); },
            "z/(1 - z) - z zeta(1/z); essential singularity at 0", true, false};
}

IntegralResult mellin_integral(const Kernel& k, Complex z, const QuadratureConfig& cfg) {
    KernelIntegralRequest req;
    req.weight = [z](double w) { return std::exp((z - 1.0) * w); };
    req.frequency = std::abs(z.imag());
    req.mellin_z = z;
    req.cfg = cfg;
    return integrate_kernel(k, req);
}

Complex mellin_transform(const Kernel& k, Complex z, const QuadratureConfig& cfg) {
    return mellin_integral(k, z, cfg).value;
}

QuadratureConfig reconstruction_config() {
    QuadratureConfig cfg;
    cfg.tolerance = 1e-9;
    cfg.critical_line_halfwidth = 500.0;
    return cfg;
}

Complex kernel_from_function(const HolomorphicFunctionSpec& F, double x,
                             const QuadratureConfig& cfg) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("kernel_from_function needs x > 0");
    const auto a = checked_taylor(F);
    const double w = std::log(x);
    return taylor_kernel(a, x) + scaled_remainder_kernel(F, a, w, cfg) / std::sqrt(x);
}

Kernel reconstruct_kernel(const HolomorphicFunctionSpec& F, double w_min, double w_max,
                          double step, const QuadratureConfig& cfg) {
    if (!(w_min < w_max) || !(step > 0.0)) throw ConfigError("invalid reconstruction grid");
    const auto a = checked_taylor(F);
    const auto n = static_cast<std::size_t>(std::llround((w_max - w_min) / step)) + 1;
    std::vector<double> re(n), im(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Complex v = scaled_remainder_kernel(F, a, w_min + step * static_cast<double>(j), cfg);
        re[j] = v.real();
        im[j] = v.imag();
    }
    using Spline = boost::math::interpolators::cardinal_cubic_b_spline<double>;
    auto spline_re = std::make_shared<Spline>(re.begin(), re.end(), w_min, step);
    auto spline_im = std::make_shared<Spline>(im.begin(), im.end(), w_min, step);
    const double w_end = w_min + step * static_cast<double>(n - 1);

    Kernel k;
    k.label = "reconstructed";
    k.support_lo = 0.0;
    k.support_hi = std::numeric_limits<double>::infinity();
    k.log_density = [a, spline_re, spline_im, w_min, w_end](double w) {
        Complex out = taylor_kernel(a, std::exp(w)) * std::exp(w);
        if (w >= w_min && w <= w_end) {
            out += Complex((*spline_re)(w), (*spline_im)(w)) * std::exp(0.5 * w);
        }
        return out;
    };
    // Jump of the Taylor part at w = 0 and the ends of the sampled range.
    Kernel plain = k;
    k.custom_integral = [plain, w_min, w_end](const KernelIntegralRequest& req) {
        KernelIntegralRequest with_breaks = req;
        for (double b : {w_min, 0.0, w_end}) with_breaks.breakpoints.push_back(b);
        return integrate_kernel(plain, with_breaks);
    };
    return k;
}

ConditionReport verify_conditions(const Kernel& k, const HolomorphicFunctionSpec& F,
                                  const std::vector<double>& sample_s, const QuadratureConfig& cfg,
                                  double tolerance) {
    ConditionReport report;
    report.tolerance = tolerance;
    report.condition_a = k.support_lo >= 0.0;
    if (!report.condition_a) report.notes.push_back("kernel support reaches u < 0");
    try {
        report.condition_b_value = condition_b_integral(k, cfg).value.real();
        report.condition_b = std::isfinite(report.condition_b_value);
    } catch (const Error& e) {
        report.condition_b_value = std::numeric_limits<double>::infinity();
        report.notes.push_back(std::string("condition (b) fails: ") + e.what());
    }
    report.condition_c = true;
    for (double s : sample_s) {
        const Complex z(0.5, s);
        double residual = std::numeric_limits<double>::infinity();
        try {
            const Complex lhs = mellin_transform(k, z, cfg);
            const Complex rhs = F.evaluate(1.0 / z);
            residual = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
        } catch (const Error& e) {
            report.notes.push_back("s = " + std::to_string(s) + ": " + e.what());
        }
        report.s_values.push_back(s);
        report.residuals.push_back(residual);
        if (!(residual <= tolerance)) report.condition_c = false;
    }
    if (!F.holomorphic_near_circle) {
        report.notes.push_back("F (" + F.domain_description +
                               ") is not holomorphic on a neighbourhood of T+1, so the "
                               "holomorphic functional calculus does not cover F(C)");
    }
    report.pass = report.condition_a && report.condition_b && report.condition_c;
    return report;
}

DecayReport riemann_lebesgue_check(const Kernel& k, const QuadratureConfig& cfg) {
    DecayReport report;
    report.modulus_at_zero = std::abs(mellin_transform(k, Complex(0.5, 0.0), cfg));
    for (double t : {10.0, 50.0, 100.0, 200.0}) {
        report.t_values.push_back(t);
        report.moduli.push_back(std::abs(mellin_transform(k, Complex(0.5, t), cfg)));
    }
    report.pass = report.moduli.back() < report.moduli.front() &&
                  report.moduli.back() < 0.2 * report.modulus_at_zero;
    return report;
}

}  // namespace cesaro
