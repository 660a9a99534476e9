#pragma once

#include <string>
#include <vector>

#include "cesaro/kernels.hpp"

namespace cesaro::cli {

/// Parses "2", "-0.5", "1+2i", "0.3-0.2i", "3i", "-i". Throws ConfigError.
Complex parse_complex(const std::string& text);

/// "a:b:step" -> a, a + step, ..., up to b inclusive. Throws ConfigError
/// unless a <= b and step > 0.
std::vector<double> parse_range(const std::string& text);

/// Catalog kernel by name: cesaro, hardy, copson, holder, generalized-cesaro,
/// fractional-part, log-resolvent, log-inverse.
Kernel kernel_by_name(const std::string& name, Complex alpha, Complex lambda);

const std::vector<std::string>& kernel_names();

}  // namespace cesaro::cli
