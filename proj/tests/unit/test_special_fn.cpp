#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../oracles/oracle_values.hpp"
#include "cesaro/special_fn.hpp"

using namespace cesaro;
using doctest::Approx;

namespace {

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("gamma at classical points") {
    CHECK(rel(gamma_complex(1.0), 1.0) < 1e-14);
    CHECK(rel(gamma_complex(0.5), std::sqrt(std::numbers::pi)) < 1e-14);
    CHECK(rel(gamma_complex(Complex(3.0, 4.0)), oracle::gamma_3p4i) < 1e-12);
    CHECK(rel(gamma_complex(6.0), 120.0) < 1e-13);
}

TEST_CASE("gamma below the Lanczos range uses the recurrence") {
    const Complex z(-2.5, 0.3);
    CHECK(rel(gamma_complex(z + 1.0), z * gamma_complex(z)) < 1e-12);
    CHECK(rel(gamma_complex(Complex(-9.5, 0.0)), std::tgamma(-9.5)) < 1e-12);
}

TEST_CASE("gamma poles") {
    CHECK_THROWS_AS(gamma_complex(0.0), PoleError);
    CHECK_THROWS_AS(gamma_complex(-3.0), PoleError);
}

TEST_CASE("cpow conventions and branch") {
    CHECK(cpow(1.0, Complex(2.0, 3.0)) == Complex(1.0, 0.0));
    CHECK(cpow(0.0, 0.5) == Complex(0.0, 0.0));
    CHECK(rel(cpow(2.0, Complex(0.5, 0.5)), oracle::cpow_2_half_half) < 1e-14);
    CHECK_THROWS_AS(cpow(Complex(-1.0, 0.5), 0.5), BranchError);
    CHECK_THROWS_AS(cpow(Complex(0.0, 1.0), 0.5), BranchError);
}

TEST_CASE("principal logarithm") {
    CHECK(std::abs(log_principal(1.0)) == 0.0);
    CHECK(std::abs(log_principal(std::numbers::e) - 1.0) < 1e-15);
    CHECK(std::abs(log_principal(Complex(0.0, 1.0)) - Complex(0.0, std::numbers::pi / 2)) < 1e-15);
    CHECK(log_principal(Complex(-1.0, -0.0)).imag() == Approx(std::numbers::pi));
    CHECK_THROWS_AS(log_principal(0.0), DomainError);
}

TEST_CASE("zeta on the right half-plane") {
    CHECK(rel(zeta_righthalf(2.0), std::numbers::pi * std::numbers::pi / 6.0) < 1e-13);
    CHECK(rel(zeta_righthalf(0.5), oracle::zeta_half) < 1e-12);
    CHECK(rel(zeta_righthalf(Complex(0.5, 5.0)), oracle::zeta_half_5i) < 1e-10);
    CHECK(rel(zeta_righthalf(Complex(1.0, 9.06)), oracle::zeta_1_9i) < 1e-10);
    CHECK(rel(zeta_righthalf(Complex(3.0, 40.0)), oracle::zeta_3_40i) < 1e-10);
    CHECK(std::abs(zeta_righthalf(Complex(0.5, 14.1347251417))) < 0.01);
    CHECK_THROWS_AS(zeta_righthalf(1.0), PoleError);
    CHECK_THROWS_AS(zeta_righthalf(Complex(-0.5, 2.0)), DomainError);
}

TEST_CASE("Volterra nu against reference values") {
    CHECK(rel(volterra_nu(0.1), oracle::nu_0p1) < 1e-9);
    CHECK(rel(volterra_nu(0.5), oracle::nu_0p5) < 1e-9);
    CHECK(rel(volterra_nu(1.0), oracle::nu_1) < 1e-9);
    CHECK(rel(volterra_nu(2.0), oracle::nu_2) < 1e-9);
    CHECK(rel(volterra_nu(5.0), oracle::nu_5) < 1e-9);
    CHECK(rel(volterra_nu(10.0), oracle::nu_10) < 1e-9);
    CHECK(rel(volterra_nu(20.0), oracle::nu_20) < 1e-9);
    CHECK(rel(volterra_nu(Complex(1.0, 1.0)), oracle::nu_1_plus_i) < 1e-9);
}

TEST_CASE("nu switches to exp(y) at the threshold") {
    CHECK(rel(volterra_nu(30.0), std::exp(30.0)) < 1e-6);
    CHECK(rel(volterra_nu(30.0), oracle::nu_30) < 1e-12);
    NuEvalConfig quadrature_only;
    quadrature_only.asymptotic_switch_threshold = 100.0;
    CHECK(rel(volterra_nu(30.0, quadrature_only), oracle::nu_30) < 1e-9);
}

TEST_CASE("nu relatives") {
    CHECK(rel(volterra_nu_primitive(1.0), oracle::nu_primitive_1) < 1e-9);
    CHECK(rel(volterra_nu_remainder(1.0) + std::exp(1.0), oracle::nu_1) < 1e-9);
    CHECK(rel(volterra_nu_scaled(0.5), 0.5 * oracle::nu_0p5) < 1e-9);
    const double y = 1e-40;
    const double L = -std::log(y);
    const double scaled = volterra_nu_scaled(y).real();
    CHECK(scaled == Approx(1.0 / (L * L)).epsilon(0.05));
}

TEST_CASE("Laplace transform of nu") {
    for (Complex p : {Complex(2.0), Complex(3.0), Complex(2.0, -1.0), Complex(1.5, 4.0)}) {
        CHECK(std::abs(volterra_nu_laplace(p) - 1.0 / log_principal(p)) < 1e-6);
    }
    CHECK_THROWS(volterra_nu_laplace(Complex(0.5, -1.0)));
}

TEST_CASE("nu domain and config") {
    CHECK_THROWS_AS(volterra_nu(Complex(-1.0, 0.5)), DomainError);
    NuEvalConfig bad;
    bad.quadrature_tolerance = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}
