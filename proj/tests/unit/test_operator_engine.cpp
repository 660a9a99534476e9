#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../oracles/oracle_values.hpp"
#include "cesaro/operator_engine.hpp"

using namespace cesaro;

namespace {

HausdorffOperator full(Kernel k) { return {std::move(k), DomainSpace::FullLine}; }

}  // namespace

TEST_CASE("Cesaro operator on the indicator") {
    const auto C = full(cesaro_kernel());
    const TestFunction chi = indicator_unit();
    CHECK(std::abs(apply(C, chi, 2.0) - 0.5) < 1e-12);
    CHECK(std::abs(apply(C, chi, 0.5) - 1.0) < 1e-12);
    CHECK(std::abs(apply(C, chi, -1.0)) < 1e-12);
    CHECK(std::abs(apply(C, gaussian(), 1.0) - std::sqrt(std::numbers::pi) / 2 * std::erf(1.0)) < 1e-10);
}

TEST_CASE("domain rules") {
    const TestFunction chi = indicator_unit();
    const HausdorffOperator on_interval{cesaro_kernel(), DomainSpace::UnitInterval};
    CHECK(apply(on_interval, chi, 1.5) == Complex(0.0));
    CHECK_THROWS_AS(apply({cesaro_kernel(), DomainSpace::HalfLine}, chi, -1.0), DomainError);
    CHECK(domain_from_string(to_string(DomainSpace::HalfLine)) == DomainSpace::HalfLine);
    CHECK_THROWS_AS(domain_from_string("torus"), ConfigError);
}

TEST_CASE("resolvent of C on both sides of the circle") {
    const TestFunction chi = indicator_unit();
    const auto C = full(cesaro_kernel());
    for (Complex lambda : {Complex(3.0), Complex(1.0, 0.5)}) {
        const TestFunction Rf = resolvent_test_function(lambda, chi, DomainSpace::FullLine);
        for (double x : {0.5, 2.0}) {
            CHECK(std::abs(lambda * Rf(x) - apply(C, Rf, x, QuadratureConfig{}.tightened(10.0)) - chi(x)) <
                  1e-6);
        }
    }
    CHECK_THROWS_AS(resolvent_cesaro(Complex(1.0, 1.0), chi, 0.5, DomainSpace::FullLine), SpectrumError);
    CHECK_THROWS_AS(resolvent_cesaro(2.0, chi, 0.5, DomainSpace::FullLine), SpectrumError);
}

TEST_CASE("fractional powers") {
    const TestFunction chi = indicator_unit();
    const auto C = full(cesaro_kernel());
    CHECK(std::abs(fractional_power_apply(1.0, chi, 2.0, DomainSpace::FullLine) - apply(C, chi, 2.0)) < 1e-10);
    CHECK(std::abs(fractional_power_apply(2.0, chi, 2.0, DomainSpace::FullLine) -
                   0.5 * (1.0 + std::log(2.0))) < 1e-9);
}

TEST_CASE("resolvent of log C") {
    const TestFunction chi = indicator_unit();
    CHECK(std::abs(log_resolvent_apply(1.0, chi, 2.0) - oracle::log_resolvent_indicator_x2) < 1e-7);
    CHECK_THROWS_AS(log_resolvent_apply(std::log(2.0), chi, 2.0), DomainError);
}

TEST_CASE("log resolvent agrees with the Laplace transform of the semigroup") {
    const TestFunction chi = indicator_unit();
    QuadratureConfig cfg;
    cfg.tolerance = 1e-8;
    for (double x : {0.5, 2.0}) {
        const auto integrand = [&](double a) {
            return std::exp(-a) * fractional_power_apply(a, chi, x, DomainSpace::FullLine);
        };
        const Complex laplace = integrate_finite(integrand, 1e-6, 40.0, {}, cfg).value;
        CHECK(std::abs(laplace - log_resolvent_apply(1.0, chi, x)) < 1e-4);
    }
}

TEST_CASE("log resolvent for large lambda behaves like f / lambda") {
    const double lambda = 50.0;
    const TestFunction chi = indicator_unit();
    CHECK(std::abs(lambda * log_resolvent_apply(lambda, chi, 0.5) - chi(0.5)) < 1e-3);
    const TestFunction g = gaussian();
    CHECK(std::abs(lambda * log_resolvent_apply(lambda, g, 0.5) - g(0.5)) < 1.0 / lambda);
    CHECK(std::abs(log_resolvent_apply(1.0, chi, -1.0)) < 1e-15);
}

TEST_CASE("inverse of log C") {
    CHECK(std::abs(log_inverse_apply(exponential_halfline(), 1.0) - oracle::log_inverse_exp_x1) < 1e-6);
    const TestFunction zero("zero", [](double) { return Complex(0.0); });
    CHECK(log_inverse_apply(zero, 1.0) == Complex(0.0));
}

TEST_CASE("checked test functions") {
    CHECK_NOTHROW(TestFunction::checked("gauss", [](double t) { return Complex(std::exp(-t * t)); }));
    CHECK_THROWS_AS(TestFunction::checked("one", [](double) { return Complex(1.0); }), DomainError);
    CHECK(gaussian().l2_norm_squared() == doctest::Approx(std::sqrt(std::numbers::pi / 2)));
}
