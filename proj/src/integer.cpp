#include "gbs/integer.hpp"

#include <cctype>

namespace gbs {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  return canonical.get_str();
}

std::optional<Integer> parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && text[0] == '-') pos = 1;
  if (pos == text.size()) return std::nullopt;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
  }
  return Integer(std::string(text), 10);
}

bool fits_json_number(const Integer& value) {
  return mpz_cmpabs(value.get_mpz_t(), Integer(static_cast<long>(kJsonSafeInteger)).get_mpz_t()) <= 0;
}

std::int64_t to_int64(const Integer& value) { return static_cast<std::int64_t>(value.get_si()); }

Integer abs(const Integer& value) { return ::abs(value); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

int sign(const Integer& value) { return sgn(value); }

int compare_abs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

std::optional<Integer> divide_exact(const Integer& value, const Integer& divisor) {
  if (divisor == 0) return std::nullopt;
  if (!mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t())) return std::nullopt;
  Integer q;
  mpz_divexact(q.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
  return q;
}

}  // namespace gbs
