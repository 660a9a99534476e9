#include "cesaro/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cesaro {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_parameter(Complex a) {
    std::string out = std::to_string(a.real());
    if (a.imag() != 0.0) out += (a.imag() < 0 ? "" : "+") + std::to_string(a.imag()) + "i";
    return out;
}

Kernel base_kernel(const std::string& label, std::vector<Complex> params, double lo, double hi) {
    Kernel k;
    k.label = label;
    k.parameters = std::move(params);
    k.support_lo = lo;
    k.support_hi = hi;
    return k;
}

IntegralResult split_window(const Kernel& k, const LogFunction& weight, double delta, bool negative,
                            const QuadratureConfig& cfg) {
    const UnitEndpointSplit& split = *k.unit_split;
    const Complex anchor = split.smooth(0.0) * weight(0.0);
    GapIntegrand integrand = [&](double w, double, double) {
        const double v = std::abs(w);
        if (v == 0.0) return Complex{0.0, 0.0};
        return split.singular(v) * (split.smooth(w) * weight(w) - anchor);
    };
    IntegralResult window =
        negative ? integrate_finite_gap(integrand, -delta, 0.0, {0.0, -0.5}, cfg)
                 : integrate_finite_gap(integrand, 0.0, delta, {-0.5, 0.0}, cfg);
    window.value += anchor * split.singular_mass(delta);
    return window;
}

IntegralResult fractional_part_integral(const KernelIntegralRequest& req) {
    // With t = 1/u the integral becomes ∫_1^∞ {t} h(t) dt, h(t) = weight(-ln t)/t².
    constexpr int kIntervals = 2000;
    const QuadratureConfig& cfg = req.cfg;
    cfg.validate();
    const QuadratureConfig piece_cfg = cfg.tightened(1.0 / kIntervals);
    auto h = [&](double t) { return req.weight(-std::log(t)) / (t * t); };

    std::vector<double> cuts;
    for (double w : req.breakpoints) {
        if (w < 0.0) cuts.push_back(std::exp(-w));
    }
    std::sort(cuts.begin(), cuts.end());

    IntegralResult total;
    for (int n = 1; n < kIntervals; ++n) {
        const double lo = n;
        const double hi = n + 1.0;
        std::vector<double> pts{lo};
        for (double c : cuts) {
            if (c > lo && c < hi) pts.push_back(c);
        }
        pts.push_back(hi);
        for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
            total += integrate_finite([&](double t) { return (t - lo) * h(t); }, pts[j], pts[j + 1],
                                      {}, piece_cfg);
        }
    }
    // Beyond N the sawtooth averages to 1/2: ∫_N^∞ {t} h dt ≈ ½∫_N^∞ h dt - h(N)/12,
    // and ∫_N^∞ h(t) dt = ∫_{-∞}^{-ln N} weight(w) e^w dw.
    const double w_max = -std::log(static_cast<double>(kIntervals));
    const double step =
        req.frequency > 0.0 ? std::min(1.0, std::numbers::pi / req.frequency) : 1.0;
    RealToComplex tail = [&](double w) { return req.weight(w) * std::exp(w); };
    std::vector<double> wpts;
    for (double w : req.breakpoints) {
        if (w < w_max) wpts.push_back(w);
    }
    wpts.push_back(w_max);
    std::sort(wpts.begin(), wpts.end());
    IntegralResult head = integrate_march(tail, wpts.front(), -1, step, cfg);
    for (std::size_t j = 0; j + 1 < wpts.size(); ++j) {
        head += integrate_panels(tail, wpts[j], wpts[j + 1], step, cfg);
    }
    total.value += 0.5 * head.value - h(static_cast<double>(kIntervals)) / 12.0;
    total.error_estimate += 0.5 * head.error_estimate;
    total.evaluations += head.evaluations;
    return total;
}

}  // namespace

Complex Kernel::evaluate(double u) const {
    if (!in_support(u)) return {0.0, 0.0};
    return log_density(std::log(u)) / u;
}

IntegralResult integrate_kernel(const Kernel& k, const KernelIntegralRequest& req) {
    if (k.custom_integral) return k.custom_integral(req);
    const QuadratureConfig& cfg = req.cfg;
    cfg.validate();

    const double wlo = k.support_lo > 0.0 ? std::log(k.support_lo) : -kInf;
    const double whi = std::isfinite(k.support_hi) ? std::log(k.support_hi) : kInf;

    bool continued = false;
    Complex tail_exponent;
    if (k.tail && req.mellin_z && whi == kInf) {
        tail_exponent = k.tail->rate + *req.mellin_z - 1.0;
        if (tail_exponent == Complex{0.0, 0.0}) {
            throw DivergenceSuspected("Mellin transform has a pole at this z");
        }
        continued = true;
    }
    LogFunction integrand = [&](double w) {
        if (continued && w > k.tail->start) return k.tail->remainder(w) * req.weight(w);
        return k.log_density(w) * req.weight(w);
    };

    std::vector<double> pts;
    if (std::isfinite(wlo)) pts.push_back(wlo);
    if (std::isfinite(whi)) pts.push_back(whi);
    for (double b : req.breakpoints) {
        if (b > wlo && b < whi) pts.push_back(b);
    }
    if (continued) pts.push_back(k.tail->start);
    if (pts.empty()) pts.push_back(0.0);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // Window around the logarithmic singularity at u = 1.
    double window_lo = 0.0, window_hi = 0.0;
    bool has_window = false;
    IntegralResult total;
    if (k.unit_split && (wlo == 0.0 || whi == 0.0)) {
        const bool negative = whi == 0.0;
        double delta = 1.0;
        for (double p : pts) {
            if (p != 0.0) delta = std::min(delta, std::abs(p));
        }
        total += split_window(k, req.weight, delta, negative, cfg);
        has_window = true;
        window_lo = negative ? -delta : 0.0;
        window_hi = negative ? 0.0 : delta;
        pts.push_back(negative ? -delta : delta);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    }

    const double step =
        req.frequency > 0.0 ? std::min(1.0, std::numbers::pi / req.frequency) : 1.0;
    const bool left_singular = std::isfinite(wlo) && k.singularity.left_exponent != 0.0;
    const bool right_singular = std::isfinite(whi) && k.singularity.right_exponent != 0.0;

    for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
        double p = pts[j];
        double q = pts[j + 1];
        if (has_window && p == window_lo && q == window_hi) continue;
        const bool sing_p = left_singular && p == wlo;
        const bool sing_q = right_singular && q == whi;
        GapIntegrand gap = [&](double w, double, double) { return integrand(w); };
        if (sing_p) {
            const double edge = std::min(q, p + step);
            total += integrate_finite_gap(gap, p, edge, {k.singularity.left_exponent, 0.0}, cfg);
            p = edge;
        }
        if (sing_q && q > p) {
            const double edge = std::max(p, q - step);
            total += integrate_finite_gap(gap, edge, q, {0.0, k.singularity.right_exponent}, cfg);
            q = edge;
        }
        if (q > p) total += integrate_panels(integrand, p, q, step, cfg);
    }
    if (wlo == -kInf) total += integrate_march(integrand, pts.front(), -1, step, cfg);
    if (whi == kInf) total += integrate_march(integrand, pts.back(), +1, step, cfg);
    if (continued) {
        total.value -= k.tail->amplitude * std::exp(tail_exponent * k.tail->start) / tail_exponent;
    }
    require_finite(total.value, "integrate_kernel");
    return total;
}

IntegralResult condition_b_integral(const Kernel& k, const QuadratureConfig& cfg) {
    Kernel absolute = k;
    absolute.tail.reset();
    absolute.log_density = [d = k.log_density](double w) { return Complex(std::abs(d(w)), 0.0); };
    if (k.unit_split) {
        // Exact when S keeps one phase, which holds for real parameters.
        UnitEndpointSplit split = *k.unit_split;
        absolute.unit_split = UnitEndpointSplit{
            [s = split.singular](double v) { return Complex(std::abs(s(v)), 0.0); },
            [m = split.smooth](double w) { return Complex(std::abs(m(w)), 0.0); },
            [mass = split.singular_mass](double d) { return Complex(std::abs(mass(d)), 0.0); }};
    }
    KernelIntegralRequest req;
    req.weight = [](double w) { return Complex(std::exp(-0.5 * w), 0.0); };
    req.cfg = cfg;
    return integrate_kernel(absolute, req);
}

Kernel cesaro_kernel() {
    Kernel k = base_kernel("cesaro", {}, 0.0, 1.0);
    k.log_density = [](double w) { return Complex(std::exp(w), 0.0); };
    k.closed_form_mellin = [](Complex z) { return 1.0 / z; };
    return k;
}

Kernel hardy_kernel(Complex alpha) {
    if (!(alpha.real() < 0.5)) throw DomainError("hardy_kernel needs Re alpha < 1/2");
    Kernel k = base_kernel("hardy(" + format_parameter(alpha) + ")", {alpha}, 0.0, 1.0);
    k.singularity.left_exponent = -alpha.real();
    k.log_density = [alpha](double w) { return std::exp((1.0 - alpha) * w); };
    k.closed_form_mellin = [alpha](Complex z) { return 1.0 / (z - alpha); };
    return k;
}

Kernel copson_kernel(Complex alpha) {
    if (!(alpha.real() < 0.5)) throw DomainError("copson_kernel needs Re alpha < 1/2");
    Kernel k = base_kernel("copson(" + format_parameter(alpha) + ")", {alpha}, 1.0, kInf);
    k.log_density = [alpha](double w) { return std::exp(alpha * w); };
    k.closed_form_mellin = [alpha](Complex z) { return 1.0 / (1.0 - z - alpha); };
    return k;
}

Kernel holder_kernel(Complex alpha) {
    if (!(alpha.real() > 0.0)) throw DomainError("holder_kernel needs Re alpha > 0");
    Kernel k = base_kernel("holder(" + format_parameter(alpha) + ")", {alpha}, 0.0, 1.0);
    const Complex inv_gamma = 1.0 / gamma_complex(alpha);
    k.singularity.right_exponent = alpha.real() - 1.0;
    k.log_density = [alpha, inv_gamma](double w) {
        return cpow(Complex(-w, 0.0), alpha - 1.0) * std::exp(w) * inv_gamma;
    };
    k.unit_split = UnitEndpointSplit{
        [alpha, inv_gamma](double v) { return cpow(Complex(v, 0.0), alpha - 1.0) * inv_gamma; },
        [](double w) { return Complex(std::exp(w), 0.0); },
        [alpha, inv_gamma](double delta) { return cpow(Complex(delta, 0.0), alpha) / alpha * inv_gamma; }};
    k.closed_form_mellin = [alpha](Complex z) { return cpow(z, -alpha); };
    return k;
}

Kernel generalized_cesaro_kernel(double alpha) {
    if (!(alpha > 0.0)) throw DomainError("generalized_cesaro_kernel needs alpha > 0");
    Kernel k = base_kernel("generalized_cesaro(" + format_parameter(alpha) + ")", {alpha}, 0.0, 1.0);
    k.singularity.right_exponent = alpha - 1.0;
    k.log_density = [alpha](double w) {
        return Complex(alpha * std::pow(-std::expm1(w), alpha - 1.0) * std::exp(w), 0.0);
    };
    const Complex gamma_alpha = gamma_complex(alpha);
    k.closed_form_mellin = [alpha, gamma_alpha](Complex z) {
        return alpha * gamma_alpha * gamma_complex(z) / gamma_complex(alpha + z);
    };
    return k;
}

Kernel fractional_part_kernel() {
    Kernel k = base_kernel("fractional_part", {}, 0.0, 1.0);
    k.log_density = [](double w) {
        const double t = std::exp(-w);
        return Complex((t - std::floor(t)) * std::exp(w), 0.0);
    };
    k.closed_form_mellin = [](Complex s) { return 1.0 / (s - 1.0) - zeta_righthalf(s) / s; };
    k.custom_integral = fractional_part_integral;
    return k;
}

Kernel log_resolvent_kernel(Complex lambda, const NuEvalConfig& cfg) {
    cfg.validate();
    if (!(lambda.real() > std::numbers::ln2)) {
        throw DomainError("log_resolvent_kernel needs Re lambda > log 2");
    }
    const Complex c = std::exp(-lambda);
    if (!(c.real() > 0.0)) {
        throw DomainError("log_resolvent_kernel needs |Im lambda| < pi/2");
    }
    Kernel k = base_kernel("log_resolvent(" + format_parameter(lambda) + ")", {lambda}, 0.0, 1.0);
    k.singularity.left_exponent = -c.real();
    k.log_density = [c, cfg](double w) { return c * volterra_nu(-c * w, cfg) * std::exp(w); };
    k.unit_split = UnitEndpointSplit{
        [c, cfg](double v) { return volterra_nu_scaled(c * v, cfg) / v; },
        [](double w) { return Complex(std::exp(w), 0.0); },
        [c, cfg](double delta) { return volterra_nu_primitive(c * delta, cfg); }};
    k.closed_form_mellin = [lambda](Complex z) { return 1.0 / (lambda + log_principal(z)); };
    return k;
}

Kernel log_inverse_kernel(const NuEvalConfig& cfg) {
    cfg.validate();
    Kernel k = base_kernel("log_inverse", {}, 1.0, kInf);
    k.log_density = [cfg](double w) { return -volterra_nu(w, cfg); };
    k.unit_split = UnitEndpointSplit{
        [cfg](double v) { return -volterra_nu_scaled(v, cfg) / v; },
        [](double) { return Complex(1.0, 0.0); },
        [cfg](double delta) { return -volterra_nu_primitive(delta, cfg); }};
    k.tail = ExponentialTail{
        -1.0, 1.0, 1.0, [cfg](double w) { return -volterra_nu_remainder(w, cfg); }};
    // Laplace transform of ν(·,-1) is 1/log p, so MK(z) = -1/log(1 - z).
    k.closed_form_mellin = [](Complex z) { return -1.0 / log_principal(1.0 - z); };
    return k;
}

}  // namespace cesaro
