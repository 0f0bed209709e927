#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include <starsched/core/errors.hpp>

namespace starsched::core {

using BigInt = boost::multiprecision::cpp_int;

/// All task-model timing is exact: times are arbitrary-precision
/// rationals, never floating point.
using Rational = boost::multiprecision::cpp_rational;

/// Largest integer q with q <= value.
inline BigInt floor_to_int(const Rational& value) {
  BigInt q = numerator(value) / denominator(value);
  if (numerator(value) < 0 && q * denominator(value) != numerator(value)) {
    --q;
  }
  return q;
}

/// Smallest integer q with q >= value.
inline BigInt ceil_to_int(const Rational& value) { return -floor_to_int(-value); }

/// Parses "13", "-2", "2.5", ".5" or "5/2". Returns nullopt on anything
/// else (including a zero denominator).
inline std::optional<Rational> try_parse_rational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  BigInt num = 0;
  BigInt den = 1;
  bool any_digit = false;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    num = num * 10 + (text[i] - '0');
    any_digit = true;
    ++i;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      num = num * 10 + (text[i] - '0');
      den *= 10;
      any_digit = true;
      ++i;
    }
  } else if (i < text.size() && text[i] == '/') {
    if (!any_digit) return std::nullopt;
    ++i;
    BigInt q = 0;
    bool q_digit = false;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      q = q * 10 + (text[i] - '0');
      q_digit = true;
      ++i;
    }
    if (!q_digit || q == 0) return std::nullopt;
    den = q;
  }
  if (!any_digit || i != text.size()) return std::nullopt;
  Rational r(num, den);
  if (negative) r = -r;
  return r;
}

inline Rational parse_rational(std::string_view text) {
  auto r = try_parse_rational(text);
  if (!r) {
    throw ParseError("malformed-rational",
                     "not a rational number: '" + std::string(text) + "'");
  }
  return *r;
}

/// Exact textual form: "13" when integral, "5/2" otherwise.
inline std::string format_rational(const Rational& value) {
  std::string s = numerator(value).str();
  if (denominator(value) != 1) {
    s += '/';
    s += denominator(value).str();
  }
  return s;
}

}  // namespace starsched::core
