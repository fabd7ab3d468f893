#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <string>

#include "wbinom/errors.hpp"

namespace wbinom {

// Exact rational coefficients (arbitrary precision).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Complex double values for the numeric coefficient domain.
using Cplx = std::complex<double>;

inline bool is_finite(Cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline Cplx ensure_finite(Cplx z, const char* what) {
    if (!is_finite(z)) {
        throw Error(std::string("non-finite value produced by ") + what);
    }
    return z;
}

// Integer power with exact handling of negative exponents.
inline Cplx cpow(Cplx base, long e) {
    if (e < 0) {
        if (base == Cplx{0.0, 0.0}) {
            throw DegenerateParameter("zero base raised to a negative power");
        }
        base = 1.0 / base;
        e = -e;
    }
    Cplx out{1.0, 0.0};
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

std::string format_cplx(Cplx z);
// Parses "re" or "re,im".
Cplx parse_cplx(const std::string& text);

} // namespace wbinom
