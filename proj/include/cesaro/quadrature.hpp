#pragma once

#include <functional>

#include "cesaro/errors.hpp"

namespace cesaro {

struct QuadratureConfig {
    double tolerance = 1e-10;
    int max_subdivisions = 400;
    /// Truncation S for integrals over s in [-S, S] along the critical line.
    double critical_line_halfwidth = 200.0;

    void validate() const;
    /// Same config with the tolerance scaled by `factor`.
    QuadratureConfig tightened(double factor) const;
};

struct IntegralResult {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;
    long evaluations = 0;

    IntegralResult& operator+=(const IntegralResult& other) {
        value += other.value;
        error_estimate += other.error_estimate;
        evaluations += other.evaluations;
        return *this;
    }
};

/// Integrand behaves like (x-a)^left_exponent near a and (b-x)^right_exponent
/// near b. Zero means regular.
struct EndpointSingularity {
    double left_exponent = 0.0;
    double right_exponent = 0.0;

    bool regular() const { return left_exponent == 0.0 && right_exponent == 0.0; }
    void validate() const;
};

using RealToComplex = std::function<Complex(double)>;

/// Integrand that also receives the exact distances to both interval ends.
/// Lets callers evaluate (b-x)^p without the cancellation in b - x.
using GapIntegrand = std::function<Complex(double x, double from_left, double from_right)>;

/// Integral over (a, b). Singular endpoints go through a tanh-sinh
/// transformation, regular ones through adaptive Gauss-Kronrod.
IntegralResult integrate_finite(const RealToComplex& f, double a, double b,
                                const EndpointSingularity& sing, const QuadratureConfig& cfg);

IntegralResult integrate_finite_gap(const GapIntegrand& f, double a, double b,
                                    const EndpointSingularity& sing, const QuadratureConfig& cfg);

/// Integral over (a, inf). [a, a + decay_hint] is integrated directly and the
/// tail is mapped onto (0, 1) with u = a + h + t / (1 - t).
IntegralResult integrate_semiinfinite(const RealToComplex& f, double a, double decay_hint,
                                      const QuadratureConfig& cfg);

/// Integral over [a, b] split into panels no wider than `panel_width`, each
/// integrated by adaptive Gauss-Kronrod. Panels are summed in order.
IntegralResult integrate_panels(const RealToComplex& f, double a, double b, double panel_width,
                                const QuadratureConfig& cfg);

/// Integral from `start` towards +inf (direction > 0) or -inf (direction < 0)
/// by marching panels until the integrand has decayed. Raises
/// DivergenceSuspected when it overflows or shows no decay within 4000 units.
IntegralResult integrate_march(const RealToComplex& f, double start, int direction,
                               double panel_width, const QuadratureConfig& cfg);

/// Symmetric principal-value integral of g over the real line, truncated at
/// S, 2S and 4S (S = cfg.critical_line_halfwidth) and Richardson-extrapolated
/// assuming a 1/S tail. The error estimate is the disagreement between the
/// two extrapolants plus the panel errors.
IntegralResult integrate_critical_line(const RealToComplex& g, const QuadratureConfig& cfg);

}  // namespace cesaro
