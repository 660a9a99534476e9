#include "cesaro/special_fn.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "cesaro/quadrature.hpp"

namespace cesaro {

namespace {

constexpr double kPi = std::numbers::pi;

// Godfrey's coefficients for g = 607/128.
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

Complex lanczos_gamma(Complex z) {
    Complex series = 0.999999999999997092;
    Complex denom = z;
    for (double c : kLanczos) {
        denom += 1.0;
        series += c / denom;
    }
    const Complex t = z + 5.24218750000000000;
    const Complex log_value = (z + 0.5) * std::log(t) - t + std::log(2.5066282746310005 * series / z);
    return std::exp(log_value);
}

constexpr std::array<double, 15> kBernoulliEven = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0};

Complex zeta_euler_maclaurin(Complex s) {
    const int n = 20 + static_cast<int>(std::ceil(std::abs(s)));
    Complex sum = 0.0;
    for (int k = 1; k < n; ++k) sum += std::exp(-s * std::log(static_cast<double>(k)));
    const double big_n = n;
    const Complex n_pow = std::exp(-s * std::log(big_n));
    sum += big_n * n_pow / (s - 1.0) + 0.5 * n_pow;
    // Term k: B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)
    Complex rising = s;
    Complex power = n_pow / big_n;
    double factorial = 2.0;
    for (std::size_t k = 0; k < kBernoulliEven.size(); ++k) {
        const Complex term = kBernoulliEven[k] / factorial * rising * power;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        const double m = 2.0 * static_cast<double>(k + 1);
        rising *= (s + m - 1.0) * (s + m);
        power /= big_n * big_n;
        factorial *= (m + 1.0) * (m + 2.0);
    }
    return sum;
}

Complex zeta_borwein(Complex s, int n) {
    // d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    std::vector<double> d(static_cast<std::size_t>(n) + 1);
    double term = 1.0 / static_cast<double>(n);  // i = 0 term divided by n
    double acc = term;
    d[0] = static_cast<double>(n) * acc;
    for (int i = 1; i <= n; ++i) {
        term *= static_cast<double>(n + i - 1) * static_cast<double>(n - i + 1) * 4.0 /
                (static_cast<double>(2 * i - 1) * static_cast<double>(2 * i));
        acc += term;
        d[static_cast<std::size_t>(i)] = static_cast<double>(n) * acc;
    }
    const double dn = d[static_cast<std::size_t>(n)];
    Complex eta = 0.0;
    for (int k = 0; k < n; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        eta += sign * (d[static_cast<std::size_t>(k)] - dn) *
               std::exp(-s * std::log(static_cast<double>(k + 1)));
    }
    eta *= -1.0 / dn;
    return eta / (1.0 - std::exp((1.0 - s) * std::numbers::ln2));
}

// Integral over (0, T] of an integrand that peaks near t ≈ |y| and may be
// concentrated near 0 when |log y| is large. Panels grow geometrically from
// the natural width 1/|log y| so no feature hides between nodes.
Complex integrate_nu_type(const RealToComplex& f, Complex y, double cutoff, double tol) {
    QuadratureConfig cfg;
    cfg.tolerance = tol;
    cfg.max_subdivisions = 2000;
    const double rate = std::max(1.0, std::abs(std::log(y)));
    double lo = 0.0;
    double hi = std::min(cutoff, 1.0 / rate);
    Complex total = 0.0;
    while (lo < cutoff) {
        total += integrate_finite(f, lo, hi, {}, cfg).value;
        lo = hi;
        hi = std::min(cutoff, std::max(hi * 4.0, hi + 1.0));
        if (hi - lo > 8.0) hi = lo + 8.0;
    }
    return total;
}

double nu_cutoff(Complex y, const NuEvalConfig& cfg) {
    return std::max(cfg.tail_truncation, 10.0 * std::abs(y));
}

}  // namespace

void NuEvalConfig::validate() const {
    if (!(quadrature_tolerance > 0.0)) throw ConfigError("nu quadrature_tolerance must be positive");
    if (!(asymptotic_switch_threshold > 0.0)) {
        throw ConfigError("nu asymptotic_switch_threshold must be positive");
    }
    if (!(tail_truncation > 0.0)) throw ConfigError("nu tail_truncation must be positive");
}

Complex gamma_complex(Complex z) {
    require_finite(z, "gamma_complex argument");
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
        throw PoleError("gamma has a pole at " + std::to_string(z.real()));
    }
    Complex divisor = 1.0;
    while (z.real() < 0.5) {
        divisor *= z;
        z += 1.0;
    }
    return require_finite(lanczos_gamma(z) / divisor, "gamma_complex");
}

Complex cpow(Complex z, Complex alpha) {
    if (z == Complex{0.0, 0.0}) return {0.0, 0.0};
    if (z == Complex{1.0, 0.0}) return {1.0, 0.0};
    if (!(z.real() > 0.0)) throw BranchError("cpow needs Re z > 0 or z = 0");
    return require_finite(std::exp(alpha * std::log(z)), "cpow");
}

Complex log_principal(Complex z) {
    if (z == Complex{0.0, 0.0}) throw DomainError("log of zero");
    Complex out = std::log(z);
    // std::log returns -pi on the negative axis with a -0 imaginary part.
    if (out.imag() == -kPi) out.imag(kPi);
    return require_finite(out, "log_principal");
}

Complex zeta_righthalf(Complex s) {
    require_finite(s, "zeta argument");
    if (s == Complex{1.0, 0.0}) throw PoleError("zeta has a pole at s = 1");
    if (!(s.real() > 0.0)) throw DomainError("zeta_righthalf needs Re s > 0");
    const double t = std::abs(s.imag());
    const double needed = (36.8 + 1.571 * t + std::log1p(t)) / 1.7627 + 10.0;
    const Complex denominator = 1.0 - std::exp((1.0 - s) * std::numbers::ln2);
    if (needed > 350.0 || std::abs(denominator) < 0.1) {
        return require_finite(zeta_euler_maclaurin(s), "zeta_righthalf");
    }
    return require_finite(zeta_borwein(s, static_cast<int>(std::ceil(needed))), "zeta_righthalf");
}

Complex volterra_nu(Complex y, const NuEvalConfig& cfg) {
    cfg.validate();
    require_finite(y, "volterra_nu argument");
    if (!(y.real() > 0.0)) throw DomainError("volterra_nu needs Re y > 0");
    if (y.imag() == 0.0 && y.real() >= cfg.asymptotic_switch_threshold) {
        return require_finite(std::exp(y), "volterra_nu");
    }
    const Complex log_y = std::log(y);
    RealToComplex integrand = [log_y](double t) {
        if (t <= 0.0) return Complex{0.0, 0.0};
        return std::exp((t - 1.0) * log_y - std::lgamma(t));
    };
    return require_finite(
        integrate_nu_type(integrand, y, nu_cutoff(y, cfg), cfg.quadrature_tolerance),
        "volterra_nu");
}

Complex volterra_nu_scaled(Complex y, const NuEvalConfig& cfg) {
    cfg.validate();
    if (!(y.real() > 0.0)) throw DomainError("volterra_nu_scaled needs Re y > 0");
    if (std::abs(y) < 1e-200) {
        // 1/Γ(t) = t + γt² + (γ²/2 - π²/12)t³ + ..., integrated against y^t.
        const Complex big_l = -std::log(y);
        const double g = std::numbers::egamma;
        const Complex inv = 1.0 / big_l;
        return inv * inv * (1.0 + inv * (2.0 * g + inv * (3.0 * g * g - kPi * kPi / 2.0)));
    }
    return require_finite(y * volterra_nu(y, cfg), "volterra_nu_scaled");
}

Complex volterra_nu_primitive(Complex y, const NuEvalConfig& cfg) {
    cfg.validate();
    require_finite(y, "volterra_nu_primitive argument");
    if (y == Complex{0.0, 0.0}) return {0.0, 0.0};
    if (!(y.real() > 0.0)) throw DomainError("volterra_nu_primitive needs Re y > 0");
    const Complex log_y = std::log(y);
    RealToComplex integrand = [log_y](double t) {
        return std::exp(t * log_y - std::lgamma(t + 1.0));
    };
    return require_finite(
        integrate_nu_type(integrand, y, nu_cutoff(y, cfg), cfg.quadrature_tolerance),
        "volterra_nu_primitive");
}

Complex volterra_nu_remainder(Complex y, const NuEvalConfig& cfg) {
    cfg.validate();
    if (!(y.real() > 0.0)) throw DomainError("volterra_nu_remainder needs Re y > 0");
    // tau = exp(x): the integrand decays like exp(x) to the left and
    // double-exponentially to the right.
    RealToComplex integrand = [y](double x) {
        return std::exp(-y * std::exp(x) + x) / (kPi * kPi + x * x);
    };
    QuadratureConfig qcfg;
    qcfg.tolerance = cfg.quadrature_tolerance;
    qcfg.max_subdivisions = 2000;
    const double centre = -std::log(std::abs(y));
    IntegralResult right = integrate_march(integrand, centre, +1, 1.0, qcfg);
    right += integrate_march(integrand, centre, -1, 1.0, qcfg);
    return require_finite(right.value, "volterra_nu_remainder");
}

Complex volterra_nu_laplace(Complex p, const NuEvalConfig& cfg) {
    cfg.validate();
    if (!(p.real() > 1.0)) throw DomainError("Laplace transform of nu needs Re p > 1");
    // Integration by parts: ∫ ν'(t) e^{-pt} dt = p ∫ ν(t) e^{-pt} dt, since
    // the primitive ν vanishes at 0. This avoids the 1/(t log² t) spike of ν'.
    NuEvalConfig inner = cfg;
    inner.quadrature_tolerance = std::min(cfg.quadrature_tolerance, 1e-12);
    RealToComplex integrand = [&inner, p](double t) {
        return volterra_nu_primitive(t, inner) * std::exp(-p * t);
    };
    QuadratureConfig qcfg;
    qcfg.tolerance = cfg.quadrature_tolerance;
    qcfg.max_subdivisions = 2000;
    IntegralResult head = integrate_finite(integrand, 0.0, 1.0, {-0.5, 0.0}, qcfg);
    head += integrate_march(integrand, 1.0, +1, 2.0, qcfg);
    return require_finite(p * head.value, "volterra_nu_laplace");
}

}  // namespace cesaro
