// cesaro: command-line front end for the cesaro_calculus library.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "cesaro/calculus.hpp"
#include "cesaro/csv.hpp"
#include "cesaro/operator_engine.hpp"
#include "cesaro/symbols.hpp"
#include "cesaro/verify.hpp"
#include "cli_support.hpp"

using namespace cesaro;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kConfigError = 2;

struct Options {
    std::string kernel = "cesaro";
    std::string alpha = "1";
    std::string lambda = "1";
    std::string domain = "full";
    std::string function = "indicator";
    double p = 1.0;
    std::string x_range;
    std::string s_range = "-10:10:0.1";
    std::string source = "auto";
    std::string curve = "circle";
    std::string curve_function = "identity";
    int samples = 101;
    bool bound = false;
    bool check_circle = false;
    std::string z = "0.5";
    std::string y = "1";
    std::string nu_kind = "nu";
    std::string suite = "all";
    bool list = false;
    double tolerance = 1e-10;
    double halfwidth = 200.0;
    std::string output;
    std::string format = "csv";
};

QuadratureConfig quadrature(const Options& o) {
    QuadratureConfig cfg;
    cfg.tolerance = o.tolerance;
    cfg.critical_line_halfwidth = o.halfwidth;
    cfg.validate();
    return cfg;
}

SymbolSource symbol_source(const std::string& name) {
    if (name == "auto") return SymbolSource::Auto;
    if (name == "numeric") return SymbolSource::Numeric;
    if (name == "closed") return SymbolSource::ClosedForm;
    throw ConfigError("unknown symbol source '" + name + "'");
}

TestFunction test_function(const Options& o) {
    if (o.function == "indicator") return indicator_unit();
    if (o.function == "exp") return exponential_halfline(o.p, true);
    if (o.function == "exp-neg") return exponential_halfline(o.p, false);
    if (o.function == "gaussian") return gaussian();
    throw ConfigError("unknown test function '" + o.function + "'");
}

HolomorphicFunctionSpec curve_function(const Options& o) {
    const Complex alpha = cli::parse_complex(o.alpha);
    if (o.curve_function == "hardy") return hardy_function(alpha);
    if (o.curve_function == "copson") return copson_function(alpha);
    if (o.curve_function == "power") return power_function(alpha);
    throw ConfigError("unknown curve function '" + o.curve_function + "'");
}

// Writes to --output (relative paths go under $CESARO_OUTPUT_DIR) or stdout.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path.empty() || path == "-") return;
        std::filesystem::path target(path);
        if (const char* dir = std::getenv("CESARO_OUTPUT_DIR"); dir && target.is_relative()) {
            target = std::filesystem::path(dir) / target;
        }
        file_ = std::make_unique<std::ofstream>(target, std::ios::binary);
        if (!*file_) throw ConfigError("cannot open " + target.string() + " for writing");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

// Plain format: space separated, no header.
void emit_table(std::ostream& out, const std::string& format, const std::string& csv) {
    if (format == "csv") {
        out << csv;
        return;
    }
    if (format != "plain") throw ConfigError("unknown format '" + format + "'");
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        for (char& c : line) {
            if (c == ',') c = ' ';
        }
        out << line << '\n';
    }
}

int run_apply(const Options& o) {
    const auto cfg = quadrature(o);
    const Kernel k =
        cli::kernel_by_name(o.kernel, cli::parse_complex(o.alpha), cli::parse_complex(o.lambda));
    const HausdorffOperator op{k, domain_from_string(o.domain)};
    const TestFunction f = test_function(o);
    if (o.x_range.empty()) throw ConfigError("apply needs --x-range a:b:step");
    const auto xs = cli::parse_range(o.x_range);
    std::vector<Complex> values;
    for (double x : xs) values.push_back(apply(op, f, x, cfg));
    std::ostringstream csv;
    write_action_csv(csv, xs, values);
    Sink sink(o.output);
    emit_table(sink.stream(), o.format, csv.str());
    return kOk;
}

int run_symbol(const Options& o) {
    const auto cfg = quadrature(o);
    const Kernel k =
        cli::kernel_by_name(o.kernel, cli::parse_complex(o.alpha), cli::parse_complex(o.lambda));
    const HausdorffOperator op{k, DomainSpace::FullLine};
    const auto ss = cli::parse_range(o.s_range);
    const auto source = symbol_source(o.source);
    SymbolGrid grid;
    for (double s : ss) {
        grid.s_values.push_back(s);
        grid.phi_values.push_back(symbol_value(op, s, source, cfg));
    }
    std::ostringstream csv;
    write_symbol_csv(csv, grid);
    Sink sink(o.output);
    emit_table(sink.stream(), o.format, csv.str());
    if (o.check_circle) {
        double worst = 0.0;
        for (Complex phi : grid.phi_values) worst = std::max(worst, std::abs(std::abs(phi - 1.0) - 1.0));
        std::cerr << "max ||phi - 1| - 1| = " << format_double(worst) << '\n';
        if (!(worst < 1e-8)) return kVerificationFailed;
    }
    return kOk;
}

int run_norm(const Options& o) {
    const auto cfg = quadrature(o);
    const Kernel k =
        cli::kernel_by_name(o.kernel, cli::parse_complex(o.alpha), cli::parse_complex(o.lambda));
    const auto report = operator_norm_report({k, DomainSpace::FullLine}, cfg, symbol_source(o.source));
    Sink sink(o.output);
    sink.stream() << format_double(report.value) << '\n';
    std::cerr << "argmax s = " << format_double(report.argmax) << "; " << report.note << '\n';
    return kOk;
}

int run_spectrum(const Options& o) {
    SpectrumCurve curve;
    if (o.curve == "circle") {
        curve = o.curve_function == "identity" ? spectrum_circle()
                                               : spectrum_circle(curve_function(o).evaluate);
    } else if (o.curve == "log") {
        curve = spectrum_log_curve();
    } else {
        throw ConfigError("unknown curve '" + o.curve + "'");
    }
    Sink sink(o.output);
    if (o.bound) {
        sink.stream() << format_double(spectral_bound(curve)) << '\n';
        return kOk;
    }
    std::ostringstream csv;
    write_curve_csv(csv, curve, o.samples);
    emit_table(sink.stream(), o.format, csv.str());
    return kOk;
}

int run_mellin(const Options& o) {
    const auto cfg = quadrature(o);
    const Kernel k =
        cli::kernel_by_name(o.kernel, cli::parse_complex(o.alpha), cli::parse_complex(o.lambda));
    const Complex z = cli::parse_complex(o.z);
    const auto res = mellin_integral(k, z, cfg);
    Sink sink(o.output);
    sink.stream() << format_double(res.value.real()) << ' ' << format_double(res.value.imag())
                  << '\n';
    std::cerr << "error estimate " << format_double(res.error_estimate) << ", "
              << res.evaluations << " evaluations";
    if (k.closed_form_mellin) {
        const Complex closed = (*k.closed_form_mellin)(z);
        std::cerr << "; closed form " << format_double(closed.real()) << ' '
                  << format_double(closed.imag());
    }
    std::cerr << '\n';
    return kOk;
}

int run_nu(const Options& o) {
    const Complex y = cli::parse_complex(o.y);
    Complex v;
    if (o.nu_kind == "nu") {
        v = volterra_nu(y);
    } else if (o.nu_kind == "primitive") {
        v = volterra_nu_primitive(y);
    } else if (o.nu_kind == "laplace") {
        v = volterra_nu_laplace(y);
    } else {
        throw ConfigError("unknown --kind '" + o.nu_kind + "'");
    }
    Sink sink(o.output);
    sink.stream() << format_double(v.real()) << ' ' << format_double(v.imag()) << '\n';
    return kOk;
}

int run_verify(const Options& o) {
    Sink sink(o.output);
    std::ostream& out = sink.stream();
    if (o.list) {
        for (const auto& s : verification_suites()) out << s.name << "\t" << s.description << '\n';
        return kOk;
    }
    std::vector<std::string> names;
    if (o.suite == "all") {
        for (const auto& s : verification_suites()) names.push_back(s.name);
    } else {
        names.push_back(o.suite);
    }
    bool all_passed = true;
    for (const auto& name : names) {
        const SuiteReport report = run_suite(name);
        for (const auto& c : report.checks) {
            out << (c.passed ? "PASS " : "FAIL ") << name << " / " << c.name << ": " << c.detail
                << '\n';
        }
        out << (report.passed() ? "suite " + name + " passed" : "suite " + name + " FAILED")
            << " (" << report.seconds << " s)\n";
        all_passed = all_passed && report.passed();
    }
    return all_passed ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Functional calculus of the continuous Cesaro operator"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* cmd) {
        cmd->add_option("--tol", o.tolerance, "Quadrature tolerance")->capture_default_str();
        cmd->add_option("--halfwidth", o.halfwidth, "Critical-line truncation S")
            ->capture_default_str();
        cmd->add_option("-o,--output", o.output, "Output file (default stdout)");
        cmd->add_option("--format", o.format, "csv or plain")->capture_default_str();
    };
    auto add_kernel = [&o](CLI::App* cmd) {
        cmd->add_option("--kernel", o.kernel, "Kernel name")
            ->check(CLI::IsMember(cli::kernel_names()))
            ->capture_default_str();
        cmd->add_option("--alpha", o.alpha, "Kernel parameter alpha, e.g. 0.25 or 1+1i")
            ->capture_default_str();
        cmd->add_option("--lambda", o.lambda, "Spectral parameter of log-resolvent")
            ->capture_default_str();
    };

    auto* apply_cmd = app.add_subcommand("apply", "Apply a Hausdorff operator to a test function");
    add_kernel(apply_cmd);
    add_common(apply_cmd);
    apply_cmd->add_option("--domain", o.domain, "full, half or unit")->capture_default_str();
    apply_cmd->add_option("--function", o.function, "indicator, exp, exp-neg or gaussian")
        ->capture_default_str();
    apply_cmd->add_option("--p", o.p, "Decay rate of the exponential fixture")->capture_default_str();
    apply_cmd->add_option("--x-range", o.x_range, "a:b:step")->required();

    auto* symbol_cmd = app.add_subcommand("symbol", "Scalar symbol on the critical line");
    add_kernel(symbol_cmd);
    add_common(symbol_cmd);
    symbol_cmd->add_option("--s-range", o.s_range, "a:b:step")->capture_default_str();
    symbol_cmd->add_option("--source", o.source, "auto, numeric or closed")->capture_default_str();
    symbol_cmd->add_flag("--check-circle", o.check_circle, "Fail unless |phi - 1| = 1 on every row");

    auto* norm_cmd = app.add_subcommand("norm", "Operator norm as the supremum of |phi|");
    add_kernel(norm_cmd);
    add_common(norm_cmd);
    norm_cmd->add_option("--source", o.source, "auto, numeric or closed")->capture_default_str();

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Sample a spectrum curve");
    add_common(spectrum_cmd);
    spectrum_cmd->add_option("--curve", o.curve, "circle or log")->capture_default_str();
    spectrum_cmd->add_option("--function", o.curve_function,
                             "Map the circle through hardy, copson or power")
        ->capture_default_str();
    spectrum_cmd->add_option("--alpha", o.alpha, "Parameter of --function")->capture_default_str();
    spectrum_cmd->add_option("-n,--samples", o.samples, "Number of rows")->capture_default_str();
    spectrum_cmd->add_flag("--bound", o.bound, "Print the spectral bound instead");

    auto* mellin_cmd = app.add_subcommand("mellin", "Mellin transform of a kernel at z");
    add_kernel(mellin_cmd);
    add_common(mellin_cmd);
    mellin_cmd->add_option("--z", o.z, "Complex point, e.g. 0.5+2i")->capture_default_str();

    auto* nu_cmd = app.add_subcommand("nu", "Volterra function nu(y,-1) and relatives");
    add_common(nu_cmd);
    nu_cmd->add_option("--y", o.y, "Argument (Re y > 0)")->capture_default_str();
    nu_cmd->add_option("--kind", o.nu_kind, "nu, primitive or laplace")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    verify_cmd->add_option("--suite", o.suite, "Suite name or all")->capture_default_str();
    verify_cmd->add_flag("--list", o.list, "List suites");
    verify_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }

    try {
        if (*apply_cmd) return run_apply(o);
        if (*symbol_cmd) return run_symbol(o);
        if (*norm_cmd) return run_norm(o);
        if (*spectrum_cmd) return run_spectrum(o);
        if (*mellin_cmd) return run_mellin(o);
        if (*nu_cmd) return run_nu(o);
        if (*verify_cmd) return run_verify(o);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << '\n';
        return kConfigError;
    } catch (const DomainError& e) {
        std::cerr << e.what() << '\n';
        return kConfigError;
    } catch (const BranchError& e) {
        std::cerr << e.what() << '\n';
        return kConfigError;
    } catch (const PoleError& e) {
        std::cerr << e.what() << '\n';
        return kConfigError;
    } catch (const SpectrumError& e) {
        std::cerr << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kVerificationFailed;
    }
    return kConfigError;
}
