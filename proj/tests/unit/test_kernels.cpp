#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../oracles/oracle_values.hpp"
#include "cesaro/calculus.hpp"
#include "cesaro/kernels.hpp"

using namespace cesaro;

namespace {

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("kernel values") {
    const Kernel C = cesaro_kernel();
    CHECK(C.evaluate(0.5) == Complex(1.0));
    CHECK(C.evaluate(1.5) == Complex(0.0));
    CHECK(C.evaluate(0.0) == Complex(0.0));
    CHECK(std::abs(hardy_kernel(0.25).evaluate(0.5) - std::pow(0.5, -0.25)) < 1e-14);
    CHECK(std::abs(copson_kernel(0.25).evaluate(2.0) - std::pow(2.0, -0.75)) < 1e-14);
    CHECK(copson_kernel(0.25).evaluate(0.5) == Complex(0.0));
    CHECK(std::abs(holder_kernel(2.0).evaluate(0.5) - std::log(2.0)) < 1e-14);
    CHECK(std::abs(holder_kernel(1.0).evaluate(0.3) - 1.0) < 1e-14);
    CHECK(std::abs(fractional_part_kernel().evaluate(0.4) - 0.5) < 1e-14);
    CHECK(std::abs(generalized_cesaro_kernel(2.0).evaluate(0.5) - 1.0) < 1e-14);
}

TEST_CASE("Volterra-type kernels against reference values") {
    CHECK(rel(log_resolvent_kernel(1.0).evaluate(0.5), oracle::log_resolvent_kernel_1_at_half) < 1e-8);
    CHECK(rel(log_inverse_kernel().evaluate(std::numbers::e), oracle::log_inverse_kernel_at_e) < 1e-8);
    CHECK(log_inverse_kernel().evaluate(0.5) == Complex(0.0));
}

TEST_CASE("closed-form Mellin transforms") {
    const Complex z(0.5, 2.0);
    CHECK(std::abs((*cesaro_kernel().closed_form_mellin)(z) - 1.0 / z) < 1e-15);
    CHECK(std::abs((*hardy_kernel(0.25).closed_form_mellin)(z) - 1.0 / (z - 0.25)) < 1e-15);
    CHECK(std::abs((*holder_kernel(2.0).closed_form_mellin)(z) - 1.0 / (z * z)) < 1e-15);
    const Kernel lr = log_resolvent_kernel(1.0);
    if (lr.closed_form_mellin) {
        CHECK(std::abs((*lr.closed_form_mellin)(z) - 1.0 / (1.0 + log_principal(z))) < 1e-14);
    }
}

TEST_CASE("numeric Mellin transforms match closed forms") {
    for (const Kernel& k : {cesaro_kernel(), hardy_kernel(0.25), copson_kernel(0.25), holder_kernel(2.0),
                            holder_kernel(Complex(0.5, 0.5)), generalized_cesaro_kernel(2.0),
                            fractional_part_kernel()}) {
        for (double s : {0.0, 3.0, -7.0}) {
            const Complex z(0.5, s);
            CHECK(rel(mellin_transform(k, z), (*k.closed_form_mellin)(z)) < 1e-8);
        }
    }
    CHECK(rel(mellin_transform(fractional_part_kernel(), 0.5), oracle::fractional_part_mellin_half) < 1e-8);
    CHECK(rel(mellin_transform(fractional_part_kernel(), 2.0), oracle::fractional_part_mellin_2) < 1e-8);
    CHECK(rel(mellin_transform(generalized_cesaro_kernel(2.0), 0.5), oracle::generalized_cesaro_2_half) <
          1e-10);
}

TEST_CASE("condition (b)") {
    QuadratureConfig cfg;
    cfg.tolerance = 1e-9;
    CHECK(std::abs(condition_b_integral(cesaro_kernel(), cfg).value - 2.0) < 1e-8);
    CHECK(std::abs(condition_b_integral(hardy_kernel(0.25), cfg).value - 4.0) < 1e-7);
    CHECK(std::abs(condition_b_integral(holder_kernel(2.0), cfg).value - 4.0) < 1e-7);
    CHECK_THROWS_AS(condition_b_integral(log_inverse_kernel(), cfg), DivergenceSuspected);
}

TEST_CASE("parameter domains") {
    CHECK_THROWS_AS(hardy_kernel(0.5), DomainError);
    CHECK_THROWS_AS(copson_kernel(0.5), DomainError);
    CHECK_THROWS_AS(holder_kernel(0.0), DomainError);
    CHECK_THROWS_AS(holder_kernel(Complex(-1.0, 1.0)), DomainError);
    CHECK_THROWS_AS(generalized_cesaro_kernel(-0.5), DomainError);
}
