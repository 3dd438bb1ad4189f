#pragma once

#include <cmath>
#include <string>

#include <gmpxx.h>

namespace hyperalg {

/// Exact scalar: arbitrary-precision rational, always canonicalized.
using Rational = mpq_class;
using Integer = mpz_class;

/// Per-ring helpers used by the generic algebra code. Exact rings ignore the
/// tolerance; floating rings compare against it.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& v, double /*tol*/ = 0.0) { return sgn(v) == 0; }
    static double magnitude(const Rational& v) { return std::fabs(v.get_d()); }
    static Rational from_int(long v) { return Rational(v); }
    static Rational from_rational(const Rational& v) { return v; }
    static double to_double(const Rational& v) { return v.get_d(); }
    static std::string to_string(const Rational& v) { return v.get_str(); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static bool is_zero(double v, double tol = 0.0) { return std::fabs(v) <= tol; }
    static double magnitude(double v) { return std::fabs(v); }
    static double from_int(long v) { return static_cast<double>(v); }
    static double from_rational(const Rational& v) { return v.get_d(); }
    static double to_double(double v) { return v; }
    static std::string to_string(double v);
};

/// Parses "p/q", "p" or a decimal literal ("0.25") into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace hyperalg
