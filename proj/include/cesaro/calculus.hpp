#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cesaro/kernels.hpp"

namespace cesaro {

/// A function F for the calculus F(C). Holomorphy near 𝕋+1 is declared by the
/// caller, never detected.
struct HolomorphicFunctionSpec {
    std::function<Complex(Complex)> evaluate;
    std::string domain_description;
    bool vanishes_at_zero = true;
    bool holomorphic_near_circle = true;
};

/// F_α(z) = z / (1 - αz), the function of C giving the Hardy operator P_α.
HolomorphicFunctionSpec hardy_function(Complex alpha);
/// z / ((1 - α)z - 1), giving the operator Q_α with kernel u^(α-1) on (1, ∞).
HolomorphicFunctionSpec copson_function(Complex alpha);
/// z^α, giving the Hölder mean H_α.
HolomorphicFunctionSpec power_function(Complex alpha);
/// z/(1 - z) - z ζ(1/z). Not holomorphic at 0.
HolomorphicFunctionSpec fractional_part_function();

/// (MK)(z) = ∫ K(u) u^(z-1) du. Continued analytically through the kernel's
/// exponential tail when it has one.
IntegralResult mellin_integral(const Kernel& k, Complex z, const QuadratureConfig& cfg = {});
Complex mellin_transform(const Kernel& k, Complex z, const QuadratureConfig& cfg = {});

/// Default settings for inverse Mellin integrals: S = 500.
QuadratureConfig reconstruction_config();

/// K(x) = (1/2πi) v.p.∫ F(1/z) x^(-z) dz over Re z = 1/2. The first Taylor
/// terms of F at 0 are inverted exactly; the remainder is integrated along
/// the critical line. Returns the midpoint value at jumps.
Complex kernel_from_function(const HolomorphicFunctionSpec& F, double x,
                             const QuadratureConfig& cfg = reconstruction_config());

/// Kernel rebuilt from F by sampling the inverse Mellin integral on a
/// log-spaced grid w = ln x in [w_min, w_max].
Kernel reconstruct_kernel(const HolomorphicFunctionSpec& F, double w_min = -40.0,
                          double w_max = 10.0, double step = 0.125,
                          const QuadratureConfig& cfg = reconstruction_config());

struct ConditionReport {
    std::vector<double> s_values;
    std::vector<double> residuals;
    bool condition_a = false;
    bool condition_b = false;
    double condition_b_value = 0.0;
    bool condition_c = false;
    bool pass = false;
    double tolerance = 1e-6;
    std::vector<std::string> notes;
};

/// Checks (a) support in (0, ∞), (b) ∫|K(u)|u^(-1/2) du < ∞ and
/// (c) MK(1/2 + is) = F((1/2 + is)^(-1)) at the sampled s.
ConditionReport verify_conditions(const Kernel& k, const HolomorphicFunctionSpec& F,
                                  const std::vector<double>& sample_s,
                                  const QuadratureConfig& cfg = {}, double tolerance = 1e-6);

struct DecayReport {
    std::vector<double> t_values;
    std::vector<double> moduli;
    double modulus_at_zero = 0.0;
    bool pass = false;
};

/// |MK(1/2 + it)| at t = 10, 50, 100, 200.
DecayReport riemann_lebesgue_check(const Kernel& k, const QuadratureConfig& cfg = {});

}  // namespace cesaro
