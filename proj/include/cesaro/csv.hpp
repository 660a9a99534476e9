#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cesaro/symbols.hpp"

namespace cesaro {

/// Shortest form that round-trips at 17 significant digits, locale independent.
std::string format_double(double v);

/// Header `s,re,im`.
void write_symbol_csv(std::ostream& out, const SymbolGrid& grid);
/// Header `t,re,im`; n rows equally spaced over [t_min, t_max].
void write_curve_csv(std::ostream& out, const SpectrumCurve& curve, int n);
/// Header `x,re,im`.
void write_action_csv(std::ostream& out, const std::vector<double>& xs,
                      const std::vector<Complex>& values);

/// write_curve_csv into a file. Throws std::runtime_error on I/O failure.
void emit_curve(const SpectrumCurve& curve, int n, const std::string& path);

}  // namespace cesaro
