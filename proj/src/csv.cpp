#include "cesaro/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace cesaro {

namespace {

void write_row(std::ostream& out, double key, Complex value) {
    out << format_double(key) << ',' << format_double(value.real()) << ','
        << format_double(value.imag()) << '\n';
}

}  // namespace

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // drops the sign of -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_symbol_csv(std::ostream& out, const SymbolGrid& grid) {
    out << "s,re,im\n";
    for (std::size_t k = 0; k < grid.s_values.size(); ++k) {
        write_row(out, grid.s_values[k], grid.phi_values[k]);
    }
}

void write_curve_csv(std::ostream& out, const SpectrumCurve& curve, int n) {
    if (n < 2) throw ConfigError("a curve needs at least 2 samples");
    out << "t,re,im\n";
    for (int k = 0; k < n; ++k) {
        const double f = static_cast<double>(k) / (n - 1);
        const double t = (1.0 - f) * curve.t_min + f * curve.t_max;
        write_row(out, t, curve(t));
    }
}

void write_action_csv(std::ostream& out, const std::vector<double>& xs,
                      const std::vector<Complex>& values) {
    if (xs.size() != values.size()) throw ConfigError("x and value columns differ in length");
    out << "x,re,im\n";
    for (std::size_t k = 0; k < xs.size(); ++k) write_row(out, xs[k], values[k]);
}

void emit_curve(const SpectrumCurve& curve, int n, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    write_curve_csv(file, curve, n);
    if (!file) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace cesaro
