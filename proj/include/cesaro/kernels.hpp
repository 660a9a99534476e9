#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cesaro/quadrature.hpp"
#include "cesaro/special_fn.hpp"

namespace cesaro {

/// Function of the log variable w = ln u.
using LogFunction = std::function<Complex(double w)>;

/// Factorisation D(w) = S(|w|) m(w) near w = 0 for kernels whose singularity
/// at u = 1 is too weak for tanh-sinh (logarithmic type). The mass of S over
/// [0, delta] must be known in closed form.
struct UnitEndpointSplit {
    std::function<Complex(double v)> singular;
    LogFunction smooth;
    std::function<Complex(double delta)> singular_mass;
};

/// D(w) = amplitude * exp(rate * w) + remainder(w) for w >= start. Lets the
/// Mellin transform be continued past the abscissa of convergence.
struct ExponentialTail {
    Complex amplitude;
    Complex rate;
    double start = 1.0;
    LogFunction remainder;
};

struct KernelIntegralRequest;

/// A Hausdorff kernel K(u) on (support_lo, support_hi), stored through its
/// log-density D(w) = K(e^w) e^w so that ∫ K(u) g(u) du = ∫ D(w) g(e^w) dw.
struct Kernel {
    std::string label;
    std::vector<Complex> parameters;
    double support_lo = 0.0;
    double support_hi = 1.0;
    EndpointSingularity singularity;
    LogFunction log_density;
    std::optional<std::function<Complex(Complex)>> closed_form_mellin;
    std::optional<UnitEndpointSplit> unit_split;
    std::optional<ExponentialTail> tail;
    /// Replaces the generic integration when the kernel needs its own scheme.
    std::function<IntegralResult(const KernelIntegralRequest&)> custom_integral;

    /// K(u); zero outside the open support.
    Complex evaluate(double u) const;
    bool in_support(double u) const { return u > support_lo && u < support_hi; }
};

/// Everything needed to compute ∫ D(w) weight(w) dw over the support.
struct KernelIntegralRequest {
    LogFunction weight;
    /// Points in w where the weight is not smooth.
    std::vector<double> breakpoints;
    /// Angular frequency of the weight in w; bounds the panel width.
    double frequency = 0.0;
    /// Set for Mellin weights exp((z-1)w); enables tail continuation.
    std::optional<Complex> mellin_z;
    QuadratureConfig cfg;
};

IntegralResult integrate_kernel(const Kernel& k, const KernelIntegralRequest& request);

Kernel cesaro_kernel();
Kernel hardy_kernel(Complex alpha);
Kernel copson_kernel(Complex alpha);
Kernel holder_kernel(Complex alpha);
Kernel generalized_cesaro_kernel(double alpha);
Kernel fractional_part_kernel();
Kernel log_resolvent_kernel(Complex lambda, const NuEvalConfig& cfg = {});
Kernel log_inverse_kernel(const NuEvalConfig& cfg = {});

/// ∫ |K(u)| u^(-1/2) du. Throws DivergenceSuspected when it is infinite.
IntegralResult condition_b_integral(const Kernel& k, const QuadratureConfig& cfg);

}  // namespace cesaro
