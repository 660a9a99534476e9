#include <doctest.h>

#include <charconv>
#include <cmath>
#include <sstream>

#include "cesaro/csv.hpp"
#include "cesaro/symbols.hpp"
#include "cli_support.hpp"

using namespace cesaro;

TEST_CASE("complex parsing") {
    using cli::parse_complex;
    CHECK(parse_complex("2") == Complex(2.0, 0.0));
    CHECK(parse_complex("-0.5") == Complex(-0.5, 0.0));
    CHECK(parse_complex("1+2i") == Complex(1.0, 2.0));
    CHECK(parse_complex("0.3-0.2i") == Complex(0.3, -0.2));
    CHECK(parse_complex("3i") == Complex(0.0, 3.0));
    CHECK(parse_complex("-i") == Complex(0.0, -1.0));
    CHECK(parse_complex("1e-3+2i") == Complex(1e-3, 2.0));
    CHECK_THROWS_AS(parse_complex("abc"), ConfigError);
    CHECK_THROWS_AS(parse_complex(""), ConfigError);
}

TEST_CASE("range parsing") {
    const auto r = cli::parse_range("-1:1:0.5");
    REQUIRE(r.size() == 5);
    CHECK(r.front() == -1.0);
    CHECK(r.back() == 1.0);
    CHECK(r[2] == 0.0);
    CHECK_THROWS_AS(cli::parse_range("1:0:0.1"), ConfigError);
    CHECK_THROWS_AS(cli::parse_range("0:1:0"), ConfigError);
    CHECK_THROWS_AS(cli::parse_range("0:1"), ConfigError);
}

TEST_CASE("kernel lookup") {
    CHECK(cli::kernel_by_name("cesaro", 0.0, 0.0).evaluate(0.5) == Complex(1.0));
    CHECK(std::abs(cli::kernel_by_name("holder", 2.0, 0.0).evaluate(0.5) - std::log(2.0)) < 1e-15);
    CHECK_THROWS_AS(cli::kernel_by_name("nonsense", 0.0, 0.0), ConfigError);
    CHECK(cli::kernel_names().size() == 8);
}

TEST_CASE("number formatting round-trips") {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 5e-324, 1e300, 123456789.0}) {
        const std::string text = format_double(v);
        double back = 0.0;
        std::from_chars(text.data(), text.data() + text.size(), back);
        CHECK(back == v);
    }
    CHECK(format_double(-0.0) == "0");
}

TEST_CASE("symbol csv") {
    const auto grid = symbol_grid({cesaro_kernel(), DomainSpace::FullLine}, -1.0, 1.0, 3);
    std::ostringstream out;
    write_symbol_csv(out, grid);
    const std::string text = out.str();
    CHECK(text.rfind("s,re,im\n", 0) == 0);
    CHECK(text.find("\n0,2,0\n") != std::string::npos);
    std::ostringstream again;
    write_symbol_csv(again, grid);
    CHECK(again.str() == text);
}

TEST_CASE("curve csv") {
    std::ostringstream out;
    write_curve_csv(out, spectrum_circle(), 3);
    std::istringstream in(out.str());
    std::string line;
    int rows = 0;
    std::getline(in, line);
    CHECK(line == "t,re,im");
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 3);
    std::ostringstream bad;
    CHECK_THROWS_AS(write_curve_csv(bad, spectrum_circle(), 1), ConfigError);
}
