#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cesaro/kernels.hpp"

namespace cesaro {

enum class DomainSpace { FullLine, HalfLine, UnitInterval };

std::string to_string(DomainSpace d);
DomainSpace domain_from_string(const std::string& name);

struct HausdorffOperator {
    Kernel kernel;
    DomainSpace domain = DomainSpace::FullLine;
};

class TestFunction {
public:
    using Fn = std::function<Complex(double)>;

    /// Wraps `fn` without any integrability check.
    TestFunction(std::string label, Fn fn, std::vector<double> breakpoints = {},
                 std::optional<Fn> cesaro_action = std::nullopt);

    /// Same, after checking numerically that ∫|f|² over the line is finite.
    /// Throws DomainError otherwise.
    static TestFunction checked(std::string label, Fn fn, std::vector<double> breakpoints = {},
                                std::optional<Fn> cesaro_action = std::nullopt,
                                const QuadratureConfig& cfg = {});

    Complex operator()(double x) const { return fn_(x); }
    const std::string& label() const { return label_; }
    /// Points where f is not smooth.
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::optional<Fn>& closed_form_cesaro_action() const { return cesaro_action_; }

    /// ∫|f|² over the real line.
    double l2_norm_squared(const QuadratureConfig& cfg = {}) const;

private:
    std::string label_;
    Fn fn_;
    std::vector<double> breakpoints_;
    std::optional<Fn> cesaro_action_;
};

/// χ_(0,1).
TestFunction indicator_unit();
/// e^{-p|t|} on t > 0 (positive = true) or t < 0.
TestFunction exponential_halfline(double p = 1.0, bool positive = true);
/// e^{-t²}.
TestFunction gaussian();

/// (H_K f)(x) = ∫ K(u) f(ux) du with the domain rules of op.domain.
Complex apply(const HausdorffOperator& op, const TestFunction& f, double x,
              const QuadratureConfig& cfg = {});

/// x ↦ (op f)(x) as a test function, for composing operators.
TestFunction as_test_function(const HausdorffOperator& op, const TestFunction& f,
                              const QuadratureConfig& cfg = {});

/// R(λ, C) f at x. Outside the disc |λ - 1| <= 1 this is λ^-2 P_{1/λ} + λ^-1 I
/// (Hardy), inside it is λ^-1 I - λ^-2 Q_{1-1/λ} (Copson).
Complex resolvent_cesaro(Complex lambda, const TestFunction& f, double x, DomainSpace domain,
                         const QuadratureConfig& cfg = {});

/// x ↦ R(λ, C) f (x).
TestFunction resolvent_test_function(Complex lambda, const TestFunction& f, DomainSpace domain,
                                     const QuadratureConfig& cfg = {});

/// C^α f (x) = H_α f (x).
Complex fractional_power_apply(Complex alpha, const TestFunction& f, double x, DomainSpace domain,
                               const QuadratureConfig& cfg = {});

/// R(λ, log C) f (x).
Complex log_resolvent_apply(Complex lambda, const TestFunction& f, double x,
                            const QuadratureConfig& cfg = {}, const NuEvalConfig& nu_cfg = {});

/// (log C)^{-1} f (x).
Complex log_inverse_apply(const TestFunction& f, double x, const QuadratureConfig& cfg = {},
                          const NuEvalConfig& nu_cfg = {});

}  // namespace cesaro
