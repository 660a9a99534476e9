"""Regenerates tests/oracles/oracle_values.hpp with mpmath at 30 digits."""

from pathlib import Path

import mpmath as mp

mp.mp.dps = 30


def nu(y):
    return mp.quad(lambda t: y ** (t - 1) / mp.gamma(t), [0, 1, 5, 20, mp.inf])


def fmt(z):
    z = mp.mpc(z)
    return f"{{{mp.nstr(z.real, 20)}, {mp.nstr(z.imag, 20)}}}"


def main():
    values = {}
    values["gamma_3p4i"] = mp.gamma(mp.mpc(3, 4))
    values["gamma_half"] = mp.gamma(0.5)
    values["cpow_2_half_half"] = mp.power(2, mp.mpc(0.5, 0.5))
    values["zeta_half"] = mp.zeta(0.5)
    values["zeta_half_5i"] = mp.zeta(mp.mpc(0.5, 5))
    values["zeta_1_9i"] = mp.zeta(mp.mpc(1, 9.06))
    values["zeta_3_40i"] = mp.zeta(mp.mpc(3, 40))
    for y in ["0.1", "0.5", "1", "2", "5", "10", "20", "30"]:
        values["nu_" + y.replace(".", "p")] = nu(mp.mpf(y))
    values["nu_1_plus_i"] = nu(mp.mpc(1, 1))
    values["nu_primitive_1"] = mp.quad(lambda t: 1 / mp.gamma(t + 1), [0, 1, 5, 20, mp.inf])

    e1 = mp.exp(-1)
    values["log_resolvent_kernel_1_at_half"] = e1 * nu(e1 * mp.log(2))
    values["log_inverse_kernel_at_e"] = -nu(mp.mpf(1)) / mp.e
    # R(1, log C) applied to the indicator of (0, 1) at x = 2: ∫_0^{1/2} K(u) du.
    # With v = log(1/u): ∫_{log 2}^∞ e^{-1} ν(e^{-1} v) e^{-v} dv.
    values["log_resolvent_indicator_x2"] = mp.quad(
        lambda v: e1 * nu(e1 * v) * mp.exp(-v), [mp.log(2), 2, 5, 10, 30, mp.inf])
    # (log C)^{-1} applied to e^{-t} on t > 0 at x = 1: -∫_0^∞ ν(w,-1) exp(-e^w) dw.
    # ν(w,-1) ~ 1/(w log² w) at 0 converges too slowly for plain quadrature,
    # so the value at w = 0 is split off and its mass ∫_0^1 ν = ν_primitive(1) added back.
    head = mp.quad(lambda w: nu(w) * (mp.exp(-mp.exp(w)) - e1), [0, 0.5, 1])
    tail = mp.quad(lambda w: nu(w) * mp.exp(-mp.exp(w)), [1, 2, 3, 4])
    values["log_inverse_exp_x1"] = -(head + e1 * values["nu_primitive_1"] + tail)
    values["fractional_part_mellin_half"] = 1 / (mp.mpf(0.5) - 1) - mp.zeta(0.5) / 0.5
    values["fractional_part_mellin_2"] = 1 - mp.zeta(2) / 2
    values["generalized_cesaro_2_half"] = 2 * mp.beta(2, 0.5)

    lines = ["#pragma once", "", "// Generated by tests/oracles/generate_fixtures.py.", "",
             "#include <complex>", "", "namespace oracle {", ""]
    for name, value in values.items():
        lines.append(f"inline const std::complex<double> {name}{fmt(value)};")
    lines += ["", "}  // namespace oracle", ""]
    out = Path(__file__).with_name("oracle_values.hpp")
    out.write_text("\n".join(lines))
    print(out.read_text())


if __name__ == "__main__":
    main()
