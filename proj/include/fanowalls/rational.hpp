#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fanowalls {

/// Exact rational number. Always kept in canonical (reduced, positive
/// denominator) form by the helpers in this header.
using Rational = mpq_class;

/// Raised for any input that violates a documented precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when two classes from different threefolds are combined.
class ContextMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p", "p/q" (q != 0). Whitespace is not accepted.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Integer value of an integral rational; throws if not integral or if it
/// does not fit in 64 bits.
std::int64_t to_int64(const Rational& q);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// floor and ceil of a rational, as exact integers.
mpz_class floor_of(const Rational& q);
mpz_class ceil_of(const Rational& q);

/// Exact square root when q is the square of a rational.
bool rational_sqrt(const Rational& q, Rational& root);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace fanowalls
