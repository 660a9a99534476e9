#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace cesaro {

using Complex = std::complex<double>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CESARO_DEFINE_ERROR(Name)                  \
    class Name : public Error {                    \
    public:                                        \
        explicit Name(const std::string& what)     \
            : Error(std::string(#Name ": ") + what) {} \
    }

CESARO_DEFINE_ERROR(PoleError);
CESARO_DEFINE_ERROR(BranchError);
CESARO_DEFINE_ERROR(DomainError);
CESARO_DEFINE_ERROR(NonFiniteError);
CESARO_DEFINE_ERROR(ConfigError);
CESARO_DEFINE_ERROR(ToleranceNotMet);
CESARO_DEFINE_ERROR(DivergenceSuspected);
CESARO_DEFINE_ERROR(SlowDecay);
CESARO_DEFINE_ERROR(SpectrumError);
CESARO_DEFINE_ERROR(VanishingViolation);
CESARO_DEFINE_ERROR(TailUnbounded);
CESARO_DEFINE_ERROR(UnboundedAbove);
CESARO_DEFINE_ERROR(OnSpectrum);

#undef CESARO_DEFINE_ERROR

/// Throws NonFiniteError unless both components of `z` are finite.
inline Complex require_finite(Complex z, const char* where) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw NonFiniteError(std::string(where) + " produced a non-finite value");
    }
    return z;
}

inline double require_finite(double x, const char* where) {
    if (!std::isfinite(x)) {
        throw NonFiniteError(std::string(where) + " produced a non-finite value");
    }
    return x;
}

}  // namespace cesaro
