#pragma once

// Shared helpers and brute-force oracles for the test suites. Nothing here
// calls into the code under test except for constructing inputs.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fanowalls/lattice.hpp"

namespace testing_support {

using fanowalls::ChernCharacter;
using fanowalls::FanoContext;
using fanowalls::Rational;

inline Rational q(const std::string& text) { return fanowalls::parse_rational(text); }
inline Rational q(std::int64_t num, std::int64_t den = 1) {
  return fanowalls::make_rational(num, den);
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed'f00dULL);
  return gen;
}

inline std::int64_t rand_int(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline Rational rand_rational(std::int64_t span = 9, std::int64_t max_den = 7) {
  return q(rand_int(-span, span), rand_int(1, max_den));
}

inline ChernCharacter rand_class(FanoContext ctx) {
  return {ctx, rand_rational(), rand_rational(), rand_rational(), rand_rational()};
}

/// chi(O(n)) by the classical closed forms: index two, degree d gives
/// (n+1)(d n^2 + 2 d n + 6)/6; index one, genus g gives
/// (g-1) n (n+1)(2n+1)/6 + 2n + 1.
inline Rational line_bundle_chi(FanoContext ctx, std::int64_t n) {
  if (ctx.index() == 2) {
    const std::int64_t d = ctx.degree();
    return q((n + 1) * (d * n * n + 2 * d * n + 6), 6);
  }
  const std::int64_t g = ctx.degree() / 2 + 1;
  return q((g - 1) * n * (n + 1) * (2 * n + 1), 6) + q(2 * n + 1);
}

/// The integer system for splits of 2 - 2L on Y_d along beta = -1/2 in the
/// coordinates ch^{-1/2}(A) = (a, H/2, (c/8d) H^2), solved by brute force:
/// a odd, d-32 <= a c <= d, d-32 <= (a-2)(c+16-2d) <= d, the integrality
/// c/8 - d(1-a)^2/8 - d(2-a)/8, and t = alpha^2 from slope equality.
struct SplitSolution {
  std::int64_t a, c;
  bool ray;
  Rational t;
};

inline std::vector<SplitSolution> instanton_split_oracle(std::int64_t d) {
  std::vector<SplitSolution> out;
  for (std::int64_t a = -40; a <= 40; ++a) {
    if (a % 2 == 0) continue;
    for (std::int64_t c = -400; c <= 400; ++c) {
      const std::int64_t p1 = a * c;
      const std::int64_t p2 = (a - 2) * (c + 16 - 2 * d);
      if (p1 < d - 32 || p1 > d || p2 < d - 32 || p2 > d) continue;
      const Rational integrality =
          q(c, 8) - q(d * (1 - a) * (1 - a), 8) - q(d * (2 - a), 8);
      if (!fanowalls::is_integer(integrality)) continue;
      // mu(A) = (c/8 - d a t/2) / (d/2), mu(E) = ((d-8)/4 - d t) / d.
      // Equal iff t d (1 - a) = (d-8)/4 - c/4, i.e. linear in t.
      const Rational lhs_coeff = q(d * (1 - a));
      const Rational rhs = q(d - 8, 4) - q(c, 4);
      if (lhs_coeff == 0) {
        if (rhs == 0) out.push_back({a, c, true, 0});
        continue;
      }
      const Rational t = rhs / lhs_coeff;
      if (t > 0) out.push_back({a, c, false, t});
    }
  }
  return out;
}

}  // namespace testing_support
