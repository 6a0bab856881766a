#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sidonlab {

// Exact arithmetic types. Every coordinate in the library is an exact
// rational; nothing is ever rounded.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(); }

namespace detail {

inline bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// mpz_set_str rejects a leading '+', so handle the sign here.
inline Integer to_integer(std::string_view s) {
  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  Integer z{std::string(s)};
  return neg ? Integer(-z) : z;
}

}  // namespace detail

// Parses "p" or "p/q" (optional sign on either part, q != 0) into an exact
// rational in lowest terms. Throws std::invalid_argument on anything else;
// in particular decimal notation is rejected so no value is ever rounded.
inline Rational parse_rational(std::string_view token) {
  const auto bad = [&] {
    return std::invalid_argument("invalid rational token: '" +
                                 std::string(token) + "'");
  };
  std::string_view num_part = token;
  std::string_view den_part;
  if (auto slash = token.find('/'); slash != std::string_view::npos) {
    num_part = token.substr(0, slash);
    den_part = token.substr(slash + 1);
    if (den_part.find('/') != std::string_view::npos) throw bad();
    if (!detail::is_integer_token(den_part)) throw bad();
  }
  if (!detail::is_integer_token(num_part)) throw bad();
  Integer num = detail::to_integer(num_part);
  Integer den = den_part.empty() ? Integer(1) : detail::to_integer(den_part);
  if (den == 0)
    throw std::invalid_argument("zero denominator in rational token: '" +
                                std::string(token) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// 3-adic valuation: the exponent of 3 in m. Requires m > 0.
inline unsigned v3(const Integer& m) {
  if (m <= 0)
    throw std::invalid_argument("v3 requires a positive integer, got " +
                                to_string(m));
  Integer r = m;
  unsigned k = 0;
  while (mpz_divisible_ui_p(r.get_mpz_t(), 3)) {
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), 3);
    ++k;
  }
  return k;
}

inline Integer pow_ui(unsigned long base, unsigned long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

}  // namespace sidonlab
