#pragma once

// Generated by tests/oracles/generate_fixtures.py.

#include <complex>

namespace oracle {

inline const std::complex<double> gamma_3p4i{0.0052255384713692141947, -0.17254707929430018772};
inline const std::complex<double> gamma_half{1.7724538509055160273, 0.0};
inline const std::complex<double> cpow_2_half_half{1.3301274004259787921, 0.48037599714809635087};
inline const std::complex<double> zeta_half{-1.4603545088095868129, 0.0};
inline const std::complex<double> zeta_half_5i{0.70181237116568663004, 0.23103800839141992679};
inline const std::complex<double> zeta_1_9i{1.3460852153097213521, 0.11081555080735053748};
inline const std::complex<double> zeta_3_40i{0.93260914392849836057, -0.063757506071177590191};
inline const std::complex<double> nu_0p1{1.8394404588722550002, 0.0};
inline const std::complex<double> nu_0p5{1.8286017509626361342, 0.0};
inline const std::complex<double> nu_1{2.8077702420285193652, 0.0};
inline const std::complex<double> nu_2{7.4308466788401444821, 0.0};
inline const std::complex<double> nu_5{148.42715501543112788, 0.0};
inline const std::complex<double> nu_10{22026.471626550749376, 0.0};
inline const std::complex<double> nu_20{485165195.4121675972, 0.0};
inline const std::complex<double> nu_30{10686474581524.463548, 0.0};
inline const std::complex<double> nu_1_plus_i{1.5103769069132879451, 2.2385212330834339426};
inline const std::complex<double> nu_primitive_1{2.2665345076998488351, 0.0};
inline const std::complex<double> log_resolvent_kernel_1_at_half{0.59785383422967915553, 0.0};
inline const std::complex<double> log_inverse_kernel_at_e{-1.0329209475752570589, 0.0};
inline const std::complex<double> log_resolvent_indicator_x2{0.40899945858746957158, 0.0};
inline const std::complex<double> log_inverse_exp_x1{-0.54161801953987748248, 0.0};
inline const std::complex<double> fractional_part_mellin_half{0.92070901761917362578, 0.0};
inline const std::complex<double> fractional_part_mellin_2{0.17753296657588678176, 0.0};
inline const std::complex<double> generalized_cesaro_2_half{2.6666666666666666667, 0.0};

}  // namespace oracle
