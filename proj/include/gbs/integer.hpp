#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gbs {

// Exact arithmetic throughout: label products along long cycles and pinch
// rewrites overflow any fixed-width type.
using Integer = mpz_class;
using Rational = mpq_class;

// Largest magnitude that a JSON number may carry without loss (2^53 - 1).
inline constexpr std::int64_t kJsonSafeInteger = 9007199254740991LL;

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

// Parses an optionally signed decimal integer; nullopt on anything else.
std::optional<Integer> parse_integer(std::string_view text);

bool fits_json_number(const Integer& value);
std::int64_t to_int64(const Integer& value);  // caller guarantees it fits

Integer abs(const Integer& value);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
int sign(const Integer& value);
// Sign of |a| - |b|.
int compare_abs(const Integer& a, const Integer& b);

// Exact quotient when `divisor` divides `value`.
std::optional<Integer> divide_exact(const Integer& value, const Integer& divisor);

}  // namespace gbs
