#pragma once

#include "cesaro/errors.hpp"

namespace cesaro {

struct NuEvalConfig {
    double quadrature_tolerance = 1e-10;
    /// Real y at or above this value use ν(y,-1) ≈ exp(y).
    double asymptotic_switch_threshold = 30.0;
    /// Lower bound for the cutoff T of the t-integral; T = max(this, 10|y|).
    double tail_truncation = 50.0;

    void validate() const;
};

/// Γ(z) for complex z. Lanczos approximation on Re z >= 1/2 with upward
/// recurrence below that.
Complex gamma_complex(Complex z);

/// Principal-branch power z^alpha on the closed right half-plane.
/// cpow(0, alpha) = 0 and cpow(1, alpha) = 1.
Complex cpow(Complex z, Complex alpha);

/// Principal logarithm, Im in (-pi, pi].
Complex log_principal(Complex z);

/// Riemann ζ(s) for Re s > 0, s != 1.
Complex zeta_righthalf(Complex s);

/// Volterra function ν(y,-1) = ∫_0^∞ y^(t-1)/Γ(t) dt for Re y > 0.
Complex volterra_nu(Complex y, const NuEvalConfig& cfg = {});

/// y·ν(y,-1). Stays bounded as y -> 0 where ν(y,-1) ~ 1/(y log² y).
Complex volterra_nu_scaled(Complex y, const NuEvalConfig& cfg = {});

/// Primitive ∫_0^∞ y^t/Γ(t+1) dt. Its derivative in y is ν(y,-1) and it
/// vanishes as y -> 0+.
Complex volterra_nu_primitive(Complex y, const NuEvalConfig& cfg = {});

/// ν(y,-1) - exp(y) = ∫_0^∞ exp(-yτ)/(π² + ln²τ) dτ for Re y > 0.
Complex volterra_nu_remainder(Complex y, const NuEvalConfig& cfg = {});

/// ∫_0^∞ ν(t,-1) exp(-pt) dt for Re p > 1, evaluated numerically.
Complex volterra_nu_laplace(Complex p, const NuEvalConfig& cfg = {});

}  // namespace cesaro
