#include "cli_support.hpp"

#include <charconv>
#include <cmath>

namespace cesaro::cli {

namespace {

double parse_real(std::string_view text, const std::string& whole) {
    double v = 0.0;
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw ConfigError("cannot parse number '" + whole + "'");
    }
    return v;
}

}  // namespace

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (c != ' ') s += c;
    }
    if (s.empty()) throw ConfigError("empty complex number");
    if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, text), 0.0};

    s.pop_back();
    // Split at the last sign that is not the leading one or part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string re = split == std::string::npos ? "" : s.substr(0, split);
    std::string im = split == std::string::npos ? s : s.substr(split);
    if (im.empty() || im == "+") im += "1";
    if (im == "-") im += "1";
    return {re.empty() ? 0.0 : parse_real(re, text), parse_real(im, text)};
}

std::vector<double> parse_range(const std::string& text) {
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? first : text.find(':', first + 1);
    if (second == std::string::npos) throw ConfigError("range must look like a:b:step, got '" + text + "'");
    const double a = parse_real(std::string_view(text).substr(0, first), text);
    const double b = parse_real(std::string_view(text).substr(first + 1, second - first - 1), text);
    const double step = parse_real(std::string_view(text).substr(second + 1), text);
    if (!(step > 0.0)) throw ConfigError("range step must be positive");
    if (!(a <= b)) throw ConfigError("range needs a <= b");
    const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
    if (count > 10'000'000) throw ConfigError("range has too many points");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long k = 0; k < count; ++k) out.push_back(a + step * static_cast<double>(k));
    return out;
}

const std::vector<std::string>& kernel_names() {
    static const std::vector<std::string> names{"cesaro",         "hardy",          "copson",
                                                "holder",         "generalized-cesaro",
                                                "fractional-part", "log-resolvent", "log-inverse"};
    return names;
}

Kernel kernel_by_name(const std::string& name, Complex alpha, Complex lambda) {
    if (name == "cesaro") return cesaro_kernel();
    if (name == "hardy") return hardy_kernel(alpha);
    if (name == "copson") return copson_kernel(alpha);
    if (name == "holder") return holder_kernel(alpha);
    if (name == "generalized-cesaro") {
        if (alpha.imag() != 0.0) throw ConfigError("generalized-cesaro needs a real alpha");
        return generalized_cesaro_kernel(alpha.real());
    }
    if (name == "fractional-part") return fractional_part_kernel();
    if (name == "log-resolvent") return log_resolvent_kernel(lambda);
    if (name == "log-inverse") return log_inverse_kernel();
    throw ConfigError("unknown kernel '" + name + "'");
}

}  // namespace cesaro::cli
