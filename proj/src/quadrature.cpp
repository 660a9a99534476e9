#include "cesaro/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace cesaro {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kHalfPi = std::numbers::pi / 2.0;

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077482874781781, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
    double a = 0.0;
    double b = 0.0;
    Complex value;
    double error = 0.0;
    double abs_integral = 0.0;  // integral of |f|, used for decay tests
    bool splittable = true;
};

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Panel gauss_kronrod21(const RealToComplex& f, double a, double b, long& evals) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    Complex fc = f(center);
    Complex kronrod = fc * kWgk[10];
    Complex gauss{0.0, 0.0};
    double resabs = std::abs(fc) * kWgk[10];
    std::array<Complex, 10> f1{}, f2{};
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        kronrod += kWgk[j] * (f1[j] + f2[j]);
        resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1[j] + f2[j]);
    }
    evals += 21;
    const Complex mean = kronrod * 0.5;
    double resasc = kWgk[10] * std::abs(fc - mean);
    for (int j = 0; j < 10; ++j) {
        resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = kronrod * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((kronrod - gauss) * half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
        err = std::max(50.0 * kEps * resabs, err);
    }
    if (!finite(p.value) || !std::isfinite(err)) {
        err = std::numeric_limits<double>::infinity();
    }
    p.error = err;
    p.abs_integral = resabs;
    const double width_floor = 100.0 * kEps * std::max(std::abs(a), std::abs(b));
    p.splittable = std::abs(b - a) > std::max(width_floor, 1e-300);
    return p;
}

// Global adaptive Gauss-Kronrod. `target` maps the current |value| to an
// absolute error goal.
template <class Target>
IntegralResult adaptive_gk(const RealToComplex& f, double a, double b, Target target,
                           int max_subdivisions, double* abs_integral = nullptr) {
    long evals = 0;
    std::vector<Panel> panels{gauss_kronrod21(f, a, b, evals)};
    auto totals = [&](Complex& v, double& e, double& l1) {
        v = Complex{0.0, 0.0};
        e = 0.0;
        l1 = 0.0;
        for (const auto& p : panels) {
            v += p.value;
            e += p.error;
            l1 += p.abs_integral;
        }
    };
    Complex value;
    double err = 0.0, l1 = 0.0;
    totals(value, err, l1);
    while (err > target(std::abs(value))) {
        auto worst = panels.end();
        for (auto it = panels.begin(); it != panels.end(); ++it) {
            if (it->splittable && (worst == panels.end() || it->error > worst->error)) worst = it;
        }
        if (worst == panels.end() || static_cast<int>(panels.size()) >= max_subdivisions) {
            throw ToleranceNotMet("adaptive Gauss-Kronrod on [" + std::to_string(a) + ", " +
                                  std::to_string(b) + "] stalled at error " + std::to_string(err));
        }
        const double mid = 0.5 * (worst->a + worst->b);
        Panel left = gauss_kronrod21(f, worst->a, mid, evals);
        Panel right = gauss_kronrod21(f, mid, worst->b, evals);
        *worst = left;
        panels.insert(worst + 1, right);
        totals(value, err, l1);
    }
    if (abs_integral != nullptr) *abs_integral = l1;
    return {value, err, evals};
}

struct TanhSinhOutcome {
    IntegralResult result;
    bool converged = false;
};

// Tanh-sinh rule on [a, b]; nodes are handed to `f` with their exact distance
// to both ends so that endpoint singularities are sampled accurately.
TanhSinhOutcome tanh_sinh(const GapIntegrand& f, double a, double b, double tol_rel,
                          int max_level) {
    constexpr int kMinLevel = 3;
    constexpr double kMaxT = 6.6;
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    long evals = 0;

    Complex sum = f(center, half, half) * kHalfPi;
    ++evals;
    double t_limit[2] = {kMaxT, kMaxT};

    // Adds contributions of nodes +t (side 0, near b) and -t (side 1, near a).
    auto add_node = [&](double t, bool first_pass, int (&quiet)[2], bool (&done)[2]) {
        const double v = kHalfPi * std::sinh(t);
        const double e = std::exp(-2.0 * v);
        const double denom = 1.0 + e;
        const double gap = half * 2.0 * e / denom;
        const double weight = kHalfPi * std::cosh(t) * 4.0 * e / (denom * denom);
        for (int side = 0; side < 2; ++side) {
            if (done[side] || t > t_limit[side]) continue;
            if (gap <= 0.0 || weight <= 0.0) {
                done[side] = true;
                if (first_pass) t_limit[side] = t;
                continue;
            }
            const double far = 2.0 * half - gap;
            Complex fx = (side == 0) ? f(b - gap, far, gap) : f(a + gap, gap, far);
            ++evals;
            if (!finite(fx)) {
                done[side] = true;
                if (first_pass) t_limit[side] = t;
                continue;
            }
            const Complex term = fx * weight;
            sum += term;
            if (first_pass) {
                if (std::abs(term) <= 1e-18 * std::abs(sum)) {
                    if (++quiet[side] >= 2) {
                        done[side] = true;
                        t_limit[side] = t;
                    }
                } else {
                    quiet[side] = 0;
                }
            }
        }
    };

    {
        int quiet[2] = {0, 0};
        bool done[2] = {false, false};
        for (int k = 1; k <= static_cast<int>(kMaxT); ++k) add_node(k, true, quiet, done);
    }
    double h = 1.0;
    Complex previous = sum * h * half;
    double estimate = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        int quiet[2] = {0, 0};
        bool done[2] = {false, false};
        for (double t = h; t <= std::max(t_limit[0], t_limit[1]) + h; t += 2.0 * h) {
            add_node(t, false, quiet, done);
        }
        const Complex current = sum * h * half;
        estimate = std::abs(current - previous);
        previous = current;
        const double goal = tol_rel * std::max(1.0, std::abs(current));
        if (level >= kMinLevel && estimate <= goal) {
            return {{current, estimate, evals}, true};
        }
    }
    return {{previous, estimate, evals}, false};
}

IntegralResult finite_recursive(const GapIntegrand& f, double a0, double b0, double a, double b,
                                bool left_singular, bool right_singular, double tol_rel,
                                int& budget) {
    // Re-express the sub-interval gaps as distances to the original ends.
    GapIntegrand local = [&](double x, double dl, double dr) {
        const double from_left = (a == a0) ? dl : x - a0;
        const double from_right = (b == b0) ? dr : b0 - x;
        return f(x, from_left, from_right);
    };
    if (!left_singular && !right_singular) {
        RealToComplex plain = [&](double x) { return local(x, x - a, b - x); };
        return adaptive_gk(
            plain, a, b, [tol_rel](double v) { return tol_rel * std::max(1.0, v); },
            std::max(budget, 1));
    }
    constexpr int kMaxLevel = 9;
    TanhSinhOutcome out = tanh_sinh(local, a, b, tol_rel, kMaxLevel);
    if (out.converged) return out.result;
    if (--budget <= 0) {
        throw ToleranceNotMet("tanh-sinh on [" + std::to_string(a) + ", " + std::to_string(b) +
                              "] did not converge (estimate " +
                              std::to_string(out.result.error_estimate) + ")");
    }
    const double mid = 0.5 * (a + b);
    IntegralResult left =
        finite_recursive(f, a0, b0, a, mid, left_singular, false, tol_rel * 0.5, budget);
    IntegralResult right =
        finite_recursive(f, a0, b0, mid, b, false, right_singular, tol_rel * 0.5, budget);
    left += right;
    left.evaluations += out.result.evaluations;
    return left;
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(tolerance > 0.0)) throw ConfigError("quadrature tolerance must be positive");
    if (max_subdivisions < 1) throw ConfigError("max_subdivisions must be at least 1");
    if (!(critical_line_halfwidth > 0.0)) {
        throw ConfigError("critical_line_halfwidth must be positive");
    }
}

QuadratureConfig QuadratureConfig::tightened(double factor) const {
    QuadratureConfig out = *this;
    out.tolerance = std::max(tolerance * factor, 1e-15);
    return out;
}

void EndpointSingularity::validate() const {
    if (!(left_exponent > -1.0) || !(right_exponent > -1.0)) {
        throw DomainError("endpoint exponents must exceed -1 for integrability");
    }
}

IntegralResult integrate_finite_gap(const GapIntegrand& f, double a, double b,
                                    const EndpointSingularity& sing, const QuadratureConfig& cfg) {
    cfg.validate();
    sing.validate();
    if (!(a < b)) throw DomainError("integrate_finite requires a < b");
    int budget = cfg.max_subdivisions;
    return finite_recursive(f, a, b, a, b, sing.left_exponent != 0.0, sing.right_exponent != 0.0,
                            cfg.tolerance, budget);
}

IntegralResult integrate_finite(const RealToComplex& f, double a, double b,
                                const EndpointSingularity& sing, const QuadratureConfig& cfg) {
    return integrate_finite_gap([&f](double x, double, double) { return f(x); }, a, b, sing, cfg);
}

IntegralResult integrate_semiinfinite(const RealToComplex& f, double a, double decay_hint,
                                      const QuadratureConfig& cfg) {
    cfg.validate();
    const double h = decay_hint > 0.0 ? decay_hint : 1.0;
    const double split = a + h;
    // The head may carry an integrable singularity at a.
    const QuadratureConfig half = cfg.tightened(0.5);
    IntegralResult head = integrate_finite(f, a, split, {-0.5, 0.0}, half);

    GapIntegrand mapped = [&](double t, double, double one_minus_t) {
        const double u = split + t / one_minus_t;
        return f(u) / (one_minus_t * one_minus_t);
    };
    auto decaying = [&]() {
        const double u1 = split + 1e2 * h;
        const double u2 = split + 1e4 * h;
        const double m1 = std::abs(f(u1)) * (u1 - a);
        const double m2 = std::abs(f(u2)) * (u2 - a);
        return std::isfinite(m2) && m2 < 0.5 * m1 + 1e-300;
    };
    TanhSinhOutcome tail = tanh_sinh(mapped, 0.0, 1.0, half.tolerance, 9);
    if (!tail.converged) {
        if (!decaying()) {
            throw DivergenceSuspected("tail of semi-infinite integral does not shrink");
        }
        IntegralResult refined = integrate_finite_gap(mapped, 0.0, 1.0, {0.0, -0.5}, half);
        refined.evaluations += tail.result.evaluations;
        tail.result = refined;
    }
    head += tail.result;
    return head;
}

IntegralResult integrate_panels(const RealToComplex& f, double a, double b, double panel_width,
                                const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(a < b)) throw DomainError("integrate_panels requires a < b");
    if (!(panel_width > 0.0)) throw ConfigError("panel width must be positive");
    const auto n = static_cast<long>(std::ceil((b - a) / panel_width - 1e-9));
    const double width = (b - a) / static_cast<double>(n);
    const double share = cfg.tolerance / static_cast<double>(n);
    IntegralResult total;
    for (long k = 0; k < n; ++k) {
        const double lo = a + width * static_cast<double>(k);
        const double hi = (k + 1 == n) ? b : lo + width;
        total += adaptive_gk(
            f, lo, hi, [share](double v) { return share * std::max(1.0, v); },
            cfg.max_subdivisions);
    }
    return total;
}

IntegralResult integrate_march(const RealToComplex& f, double start, int direction,
                               double panel_width, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(panel_width > 0.0)) throw ConfigError("panel width must be positive");
    constexpr long kMinPanels = 8;
    constexpr int kQuietPanels = 4;
    const double max_extent = 4000.0;
    const double sign = direction >= 0 ? 1.0 : -1.0;
    RealToComplex guarded = [&f](double x) {
        try {
            return f(x);
        } catch (const NonFiniteError& e) {
            throw DivergenceSuspected(std::string("integrand overflowed while marching: ") +
                                      e.what());
        }
    };
    IntegralResult total;
    double first_l1 = -1.0;
    int quiet = 0;
    for (long k = 0;; ++k) {
        const double lo = start + sign * panel_width * static_cast<double>(k);
        const double hi = lo + sign * panel_width;
        double l1 = 0.0;
        const double goal_scale = std::max(1.0, std::abs(total.value));
        IntegralResult piece = adaptive_gk(
            guarded, std::min(lo, hi), std::max(lo, hi),
            [&](double v) { return 1e-3 * cfg.tolerance * std::max(goal_scale, v); },
            cfg.max_subdivisions, &l1);
        total += piece;
        if (!std::isfinite(l1) || !finite(total.value)) {
            throw DivergenceSuspected("integrand overflowed while marching to infinity");
        }
        if (first_l1 < 0.0) first_l1 = l1;
        const double negligible = 1e-2 * cfg.tolerance * std::max(1.0, std::abs(total.value));
        quiet = (l1 <= negligible) ? quiet + 1 : 0;
        if (k + 1 >= kMinPanels && quiet >= kQuietPanels) break;
        if (std::abs(hi - start) > max_extent) {
            if (l1 > 0.1 * first_l1) {
                throw DivergenceSuspected("no decay detected over the marching range");
            }
            throw ToleranceNotMet("integrand decays too slowly for the marching range");
        }
    }
    return total;
}

IntegralResult integrate_critical_line(const RealToComplex& g, const QuadratureConfig& cfg) {
    cfg.validate();
    const double s1 = cfg.critical_line_halfwidth;
    constexpr double kPanel = 1.0;
    const IntegralResult core = integrate_panels(g, -s1, s1, kPanel, cfg);
    IntegralResult ring1 = integrate_panels(g, -2.0 * s1, -s1, kPanel, cfg);
    ring1 += integrate_panels(g, s1, 2.0 * s1, kPanel, cfg);
    IntegralResult ring2 = integrate_panels(g, -4.0 * s1, -2.0 * s1, kPanel, cfg);
    ring2 += integrate_panels(g, 2.0 * s1, 4.0 * s1, kPanel, cfg);

    const Complex i1 = core.value;
    const Complex i2 = i1 + ring1.value;
    const Complex i4 = i2 + ring2.value;
    const Complex r1 = 2.0 * i2 - i1;
    const Complex r2 = 2.0 * i4 - i2;

    IntegralResult out;
    out.value = r2;
    out.evaluations = core.evaluations + ring1.evaluations + ring2.evaluations;
    out.error_estimate =
        std::abs(r2 - r1) + core.error_estimate + ring1.error_estimate + ring2.error_estimate;
    if (out.error_estimate > cfg.tolerance * std::max(1.0, std::abs(out.value))) {
        throw SlowDecay("critical-line extrapolants disagree by " +
                        std::to_string(out.error_estimate));
    }
    return out;
}

}  // namespace cesaro
