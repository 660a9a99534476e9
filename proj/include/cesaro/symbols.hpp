#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cesaro/calculus.hpp"
#include "cesaro/operator_engine.hpp"

namespace cesaro {

struct SymbolGrid {
    std::vector<double> s_values;
    std::vector<Complex> phi_values;
    int refinement_depth = 0;
};

/// Diagonal 2x2 symbol. phi_minus is identically zero for kernels supported
/// in (0, ∞).
struct MatrixSymbol {
    std::function<Complex(double)> phi_plus;
    std::function<Complex(double)> phi_minus;
};

struct SpectrumCurve {
    std::function<Complex(double)> parametrize;
    double t_min = 0.0;
    double t_max = 1.0;
    std::string label;

    Complex operator()(double t) const { return parametrize(t); }
};

enum class SymbolSource { Auto, Numeric, ClosedForm };

/// φ(s) = ∫ K(u) u^(-1/2-is) du, computed by quadrature.
Complex scalar_symbol(const HausdorffOperator& op, double s, const QuadratureConfig& cfg = {});

/// φ(s) from the closed-form Mellin transform when the kernel has one
/// (Auto), or always by quadrature (Numeric).
Complex symbol_value(const HausdorffOperator& op, double s, SymbolSource source,
                     const QuadratureConfig& cfg = {});

/// φ on count equally spaced points of [s_min, s_max].
SymbolGrid symbol_grid(const HausdorffOperator& op, double s_min, double s_max, int count,
                       const QuadratureConfig& cfg = {}, SymbolSource source = SymbolSource::Auto);

MatrixSymbol matrix_symbol(const HausdorffOperator& op, const QuadratureConfig& cfg = {});

struct NormResult {
    double value = 0.0;
    double argmax = 0.0;
    /// True when the value was reached in the sampled tail, not the interior.
    bool attained_in_tail = false;
    std::string note;
};

/// sup_s |φ(s)|: scan over |s| <= cfg.critical_line_halfwidth, golden-section
/// refinement around the best samples and a sampled check that |φ| decays
/// beyond the scanned range. Throws TailUnbounded when it keeps growing.
NormResult operator_norm_report(const HausdorffOperator& op, const QuadratureConfig& cfg = {},
                                SymbolSource source = SymbolSource::Auto);
double operator_norm(const HausdorffOperator& op, const QuadratureConfig& cfg = {},
                     SymbolSource source = SymbolSource::Auto);

/// θ ↦ F(1 + e^{iθ}), θ in [-π, π]. Identity F when absent.
SpectrumCurve spectrum_circle(std::optional<std::function<Complex(Complex)>> F = std::nullopt);

/// y ↦ log(2 cos y) + iy on (-π/2, π/2), clipped by 1e-9 at both ends.
SpectrumCurve spectrum_log_curve();

/// The same curve through s ↦ -log(1/2 - is).
Complex log_curve_from_s(double s);

/// Distance between -log(1/2 - is) and the point of spectrum_log_curve with
/// the same imaginary part.
double log_curve_mismatch(double s);

/// Largest gap between consecutive samples of the curve at n points.
double max_sample_gap(const SpectrumCurve& curve, int n);

/// sup Re over the curve. Throws UnboundedAbove when Re keeps growing
/// towards an end of the parameter range.
double spectral_bound(const SpectrumCurve& curve);

/// ‖R(λ, log C)‖ = 1 / dist(λ, σ(log C)) for real λ. Throws OnSpectrum at log 2.
double resolvent_norm_log(double lambda);

/// |2^{-t} φ_C(s)^t| = (2|1/2 - is|)^{-t}.
double stability_surrogate(double t, double s);

/// (2 Re α / |α|)^{Re α} e^{Im α arg α}, the norm of H_α.
double holder_norm_closed_form(Complex alpha);

}  // namespace cesaro
