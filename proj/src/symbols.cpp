#include "cesaro/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cesaro {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGolden = 0.6180339887498949;

// Maximises f on [a, b] by golden-section search; returns (argmax, max).
std::pair<double, double> golden_max(const std::function<double(double)>& f, double a, double b) {
    double c = b - kGolden * (b - a);
    double d = a + kGolden * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 200 && (b - a) > 1e-13 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kGolden * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kGolden * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

// Indices of the largest local maxima of `values`, best first.
std::vector<std::size_t> top_local_maxima(const std::vector<double>& values, std::size_t count) {
    std::vector<std::size_t> peaks;
    for (std::size_t k = 0; k < values.size(); ++k) {
        const bool left_ok = k == 0 || values[k] >= values[k - 1];
        const bool right_ok = k + 1 == values.size() || values[k] >= values[k + 1];
        if (left_ok && right_ok) peaks.push_back(k);
    }
    std::stable_sort(peaks.begin(), peaks.end(),
                     [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });
    if (peaks.size() > count) peaks.resize(count);
    return peaks;
}

// Best value of f over a sampled grid refined by golden sections.
std::pair<double, double> refined_max(const std::function<double(double)>& f,
                                      const std::vector<double>& grid) {
    std::vector<double> values(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) values[k] = f(grid[k]);
    std::pair<double, double> best{grid.front(), values.front()};
    for (std::size_t k : top_local_maxima(values, 3)) {
        if (values[k] > best.second) best = {grid[k], values[k]};
        const double lo = grid[k == 0 ? 0 : k - 1];
        const double hi = grid[std::min(k + 1, grid.size() - 1)];
        if (hi > lo) {
            const auto candidate = golden_max(f, lo, hi);
            if (candidate.second > best.second) best = candidate;
        }
    }
    return best;
}

}  // namespace

Complex scalar_symbol(const HausdorffOperator& op, double s, const QuadratureConfig& cfg) {
    return mellin_transform(op.kernel, Complex(0.5, -s), cfg);
}

Complex symbol_value(const HausdorffOperator& op, double s, SymbolSource source,
                     const QuadratureConfig& cfg) {
    const bool closed = op.kernel.closed_form_mellin.has_value();
    if (source == SymbolSource::ClosedForm && !closed) {
        throw ConfigError("kernel '" + op.kernel.label + "' has no closed-form Mellin transform");
    }
    if (source != SymbolSource::Numeric && closed) {
        return (*op.kernel.closed_form_mellin)(Complex(0.5, -s));
    }
    return scalar_symbol(op, s, cfg);
}

SymbolGrid symbol_grid(const HausdorffOperator& op, double s_min, double s_max, int count,
                       const QuadratureConfig& cfg, SymbolSource source) {
    if (count < 1) throw ConfigError("symbol grid needs at least one point");
    if (count > 1 && !(s_min < s_max)) throw ConfigError("symbol grid needs s_min < s_max");
    SymbolGrid grid;
    for (int k = 0; k < count; ++k) {
        const double s =
            count == 1 ? s_min : s_min + (s_max - s_min) * static_cast<double>(k) / (count - 1);
        grid.s_values.push_back(s);
        grid.phi_values.push_back(symbol_value(op, s, source, cfg));
    }
    return grid;
}

MatrixSymbol matrix_symbol(const HausdorffOperator& op, const QuadratureConfig& cfg) {
    if (op.kernel.support_lo < 0.0) {
        throw DomainError("kernels with support on u < 0 are outside the library's scope");
    }
    return {[op, cfg](double s) { return scalar_symbol(op, s, cfg); },
            [](double) { return Complex{0.0, 0.0}; }};
}

NormResult operator_norm_report(const HausdorffOperator& op, const QuadratureConfig& cfg,
                                SymbolSource source) {
    cfg.validate();
    const double span = cfg.critical_line_halfwidth;
    std::function<double(double)> modulus = [&](double s) {
        return std::abs(symbol_value(op, s, source, cfg));
    };
    constexpr int kSamples = 801;
    std::vector<double> grid(kSamples);
    for (int k = 0; k < kSamples; ++k) {
        const double t = -1.0 + 2.0 * k / (kSamples - 1);
        grid[static_cast<std::size_t>(k)] = span * t * t * t;
    }
    const auto [argmax, interior] = refined_max(modulus, grid);

    NormResult result{interior, argmax, false, ""};
    for (double side : {-1.0, 1.0}) {
        std::vector<double> tail;
        for (double factor : {1.0, 2.0, 4.0, 8.0}) tail.push_back(modulus(side * factor * span));
        const bool growing = tail[1] > tail[0] && tail[2] > tail[1] && tail[3] > tail[2];
        if (growing) {
            throw TailUnbounded("|phi| grows beyond |s| = " + std::to_string(span) +
                                " for kernel '" + op.kernel.label + "'");
        }
        for (std::size_t j = 1; j < tail.size(); ++j) {
            if (tail[j] > result.value) {
                result.value = tail[j];
                result.argmax = side * span * std::pow(2.0, static_cast<double>(j));
                result.attained_in_tail = true;
            }
        }
    }
    result.note = result.attained_in_tail
                      ? "supremum found in the sampled tail; the true value may be larger"
                      : "tail sampled at 2S, 4S, 8S stays below the interior maximum";
    return result;
}

double operator_norm(const HausdorffOperator& op, const QuadratureConfig& cfg,
                     SymbolSource source) {
    return operator_norm_report(op, cfg, source).value;
}

SpectrumCurve spectrum_circle(std::optional<std::function<Complex(Complex)>> F) {
    SpectrumCurve curve;
    curve.t_min = -kPi;
    curve.t_max = kPi;
    if (F) {
        curve.parametrize = [F = *F](double theta) { return F(1.0 + std::polar(1.0, theta)); };
        curve.label = "F(T+1)";
    } else {
        curve.parametrize = [](double theta) { return 1.0 + std::polar(1.0, theta); };
        curve.label = "T+1";
    }
    return curve;
}

SpectrumCurve spectrum_log_curve() {
    constexpr double eps = 1e-9;
    SpectrumCurve curve;
    curve.t_min = -kPi / 2.0 + eps;
    curve.t_max = kPi / 2.0 - eps;
    curve.label = "sigma(log C)";
    curve.parametrize = [](double y) { return Complex(std::log(2.0 * std::cos(y)), y); };
    return curve;
}

Complex log_curve_from_s(double s) { return -log_principal(Complex(0.5, -s)); }

double log_curve_mismatch(double s) {
    const Complex p = log_curve_from_s(s);
    return std::abs(p - spectrum_log_curve()(p.imag()));
}

double max_sample_gap(const SpectrumCurve& curve, int n) {
    if (n < 2) throw ConfigError("max_sample_gap needs n >= 2");
    double gap = 0.0;
    Complex previous = curve(curve.t_min);
    for (int k = 1; k < n; ++k) {
        const double t = curve.t_min + (curve.t_max - curve.t_min) * k / (n - 1);
        const Complex current = curve(t);
        gap = std::max(gap, std::abs(current - previous));
        previous = current;
    }
    return gap;
}

double spectral_bound(const SpectrumCurve& curve) {
    if (!(curve.t_min < curve.t_max)) throw ConfigError("curve parameter range is empty");
    std::function<double(double)> real_part = [&](double t) { return curve(t).real(); };
    constexpr int kSamples = 2001;
    std::vector<double> grid(kSamples);
    for (int k = 0; k < kSamples; ++k) {
        grid[static_cast<std::size_t>(k)] =
            curve.t_min + (curve.t_max - curve.t_min) * k / (kSamples - 1);
    }
    auto [argmax, best] = refined_max(real_part, grid);

    // Probe towards each end when the maximum sits there.
    const double width = curve.t_max - curve.t_min;
    for (int side = 0; side < 2; ++side) {
        const double end = side == 0 ? curve.t_min : curve.t_max;
        if (std::abs(argmax - end) > width / (kSamples - 1)) continue;
        double previous = -std::numeric_limits<double>::infinity();
        double start = 0.0;
        bool increasing = true;
        for (int k = 2; k <= 12; ++k) {
            const double offset = width * std::pow(10.0, -k);
            const double t = side == 0 ? end + offset : end - offset;
            double value = 0.0;
            try {
                value = real_part(t);
            } catch (const Error&) {
                break;
            }
            if (!std::isfinite(value)) {
                throw UnboundedAbove("real part diverges at the end of the curve");
            }
            if (k == 2) start = value;
            else if (!(value > previous)) increasing = false;
            previous = value;
            best = std::max(best, value);
        }
        if (increasing && previous - start > 1.0) {
            throw UnboundedAbove("real part keeps growing towards the end of the curve");
        }
    }
    return best;
}

double resolvent_norm_log(double lambda) {
    if (!std::isfinite(lambda)) throw DomainError("resolvent_norm_log needs a finite lambda");
    std::function<double(double)> closeness = [lambda](double sigma) {
        return -std::abs(lambda - log_curve_from_s(std::sinh(sigma)));
    };
    constexpr int kSamples = 8001;
    std::vector<double> grid(kSamples);
    for (int k = 0; k < kSamples; ++k) {
        grid[static_cast<std::size_t>(k)] = -40.0 + 80.0 * k / (kSamples - 1);
    }
    const double distance = -refined_max(closeness, grid).second;
    if (distance <= 1e-13 * std::max(1.0, std::abs(lambda))) {
        throw OnSpectrum("lambda = " + std::to_string(lambda) + " lies on sigma(log C)");
    }
    return 1.0 / distance;
}

double stability_surrogate(double t, double s) {
    if (!(t >= 0.0)) throw DomainError("stability_surrogate needs t >= 0");
    return std::pow(2.0 * std::abs(Complex(0.5, -s)), -t);
}

double holder_norm_closed_form(Complex alpha) {
    if (!(alpha.real() > 0.0)) throw DomainError("Holder norm needs Re alpha > 0");
    return std::pow(2.0 * alpha.real() / std::abs(alpha), alpha.real()) *
           std::exp(alpha.imag() * std::arg(alpha));
}

}  // namespace cesaro
