#pragma once

// Scalar layer: every algorithm in the library is templated on a scalar type,
// either exact rationals (GMP mpq) or binary64. Exact mode is the default for
// small rational inputs; float mode covers everything else.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace ginv {

using Rational = mpq_class;

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static const char* mode_name() { return "exact"; }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static const char* mode_name() { return "float"; }
};

inline double scalar_abs(double x) { return std::fabs(x); }
inline Rational scalar_abs(const Rational& x) { return abs(x); }

// sign in {-1,0,1}; sign(0) = 0 by convention
inline int scalar_sign(double x) { return (x > 0.0) - (x < 0.0); }
inline int scalar_sign(const Rational& x) { return sgn(x); }

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Rational&) { return true; }

// Default residual tolerance for threshold tests (MP checks, LP residuals).
template <class T>
inline T default_check_tol() {
    if constexpr (scalar_traits<T>::exact)
        return T(0);
    else
        return T(1e-9);
}

// "p/q", "p", "-p/q"; exact. Doubles print with round-trip precision.
inline std::string scalar_to_string(const Rational& x) { return x.get_str(); }
inline std::string scalar_to_string(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Parses integers, fractions "p/q", decimals and scientific notation into an
// exact rational. Throws parse_error on malformed input.
Rational rational_from_token(const std::string& token);

} // namespace ginv
