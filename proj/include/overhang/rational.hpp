#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

namespace overhang {

// Exact arithmetic used by the certification paths. All stack coordinates
// that admit a finite decimal representation (<= 12 fractional digits) can
// be carried exactly alongside their double value.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rational_from_int(long long n) { return Rational(n); }

// Rational with denominator 10^12, i.e. the decimal the double was printed
// from. Returns nullopt when rounding to 12 fractional digits does not
// reproduce the double bit-exactly (the value is not a short decimal).
std::optional<Rational> rational_from_decimal(double x);

// Exact decimal string (no exponent, trailing zeros stripped) if the
// denominator divides 10^12, otherwise nullopt.
std::optional<std::string> decimal_string(const Rational& r);

// Shortest round-trip representation of a double.
std::string double_string(double x);

// floor(p/q) for a rational, as a BigInt.
BigInt rational_floor(const Rational& r);

}  // namespace overhang
