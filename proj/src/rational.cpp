#include "overhang/rational.hpp"

#include <charconv>
#include <sstream>

namespace overhang {

namespace {
const BigInt kScale = []() {
  BigInt s = 1;
  for (int i = 0; i < 12; ++i) s *= 10;
  return s;
}();
}  // namespace

std::optional<Rational> rational_from_decimal(double x) {
  if (!std::isfinite(x)) return std::nullopt;
  double scaled = x * 1e12;
  if (std::abs(scaled) > 9.0e18) return std::nullopt;
  long long n = std::llround(scaled);
  Rational r(BigInt(n), kScale);
  if (to_double(r) != x) return std::nullopt;
  return r;
}

std::optional<std::string> decimal_string(const Rational& r) {
  BigInt num = numerator(r) * kScale;
  if (num % denominator(r) != 0) return std::nullopt;
  BigInt scaled = num / denominator(r);
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  BigInt whole = scaled / kScale;
  BigInt frac = scaled % kScale;
  std::ostringstream out;
  if (neg) out << '-';
  out << whole;
  if (frac != 0) {
    std::ostringstream f;
    f << frac;
    std::string digits = f.str();
    digits.insert(0, 12 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out << '.' << digits;
  }
  return out.str();
}

std::string double_string(double x) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

BigInt rational_floor(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

}  // namespace overhang
