/// @file rational.hpp
/// @brief Exact rational scalars (GMP backed) and their text form "p/q".

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperslice {

/// Exact rational number. `mpq_class` keeps the canonical form (gcd 1,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an internal self-check (resummation, zonality, ...) fails.
class SelfCheckError : public Error {
 public:
  using Error::Error;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// p/q in canonical form (the two-argument mpq_class constructor does not
/// canonicalize).
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Canonical text form: "3", "-3/2".
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p", "p/q". Throws Error on malformed input or q == 0.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t start = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) start = 1;
    if (start == part.size()) return false;
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false))
    throw Error("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw Error("zero denominator in rational literal '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// n!! with the conventions (-1)!! = 0!! = 1.
inline mpz_class double_factorial(long n) {
  if (n < -1) throw Error("double factorial of " + std::to_string(n));
  mpz_class r = 1;
  for (long k = n; k > 1; k -= 2) r *= k;
  return r;
}

inline mpz_class factorial(long n) {
  mpz_class r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace hyperslice
