#pragma once

// Chern-character arithmetic on a prime Fano threefold X of Picard rank one.
//
// A class is stored as (r, c, m, n) meaning r + cH + mL + nP, where H is the
// fundamental divisor, L = H^2/D the class of a line and P the class of a
// point. The intersection ring is H.H = D.L, H.L = P, everything of degree
// above three vanishes.

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "fanowalls/rational.hpp"

namespace fanowalls {

/// Discrete data of the ambient threefold: index i (-K = iH) and degree D = H^3.
class FanoContext {
 public:
  /// index must be 1 or 2; index 2 requires 1 <= degree <= 5.
  static FanoContext make(int index, int degree);
  /// Index two threefold Y_d.
  static FanoContext index_two(int degree) { return make(2, degree); }
  /// Index one threefold X_{2g-2}.
  static FanoContext of_genus(int genus) { return make(1, 2 * genus - 2); }

  int index() const { return index_; }
  int degree() const { return degree_; }
  /// g with D = 2g - 2. Only defined for index one with even degree.
  int genus() const;

  /// T = (i^2 D + 24/i) / 12, the degree of H.td_2 (uses c_1 c_2 = 24).
  Rational todd_constant() const;

  std::string name() const;

  friend bool operator==(const FanoContext&, const FanoContext&) = default;

 private:
  FanoContext(int index, int degree) : index_(index), degree_(degree) {}
  int index_;
  int degree_;
};

struct ChernCharacter {
  FanoContext ctx;
  Rational r;  // ch_0
  Rational c;  // ch_1 in H-units
  Rational m;  // ch_2 in L-units
  Rational n;  // ch_3 in P-units

  ChernCharacter(FanoContext context, Rational rank = 0, Rational h = 0, Rational l = 0,
                 Rational p = 0)
      : ctx(context), r(std::move(rank)), c(std::move(h)), m(std::move(l)), n(std::move(p)) {}

  static ChernCharacter unit(FanoContext ctx) { return {ctx, 1}; }
  static ChernCharacter point(FanoContext ctx) { return {ctx, 0, 0, 0, 1}; }
  /// ch(O(k)) = e^{kH}.
  static ChernCharacter line_bundle(FanoContext ctx, std::int64_t k);

  bool is_zero() const { return r == 0 && c == 0 && m == 0 && n == 0; }
  /// True when the truncation (r, c, m) vanishes.
  bool truncated_zero() const { return r == 0 && c == 0 && m == 0; }

  ChernCharacter operator-() const { return {ctx, -r, -c, -m, -n}; }
  ChernCharacter& operator+=(const ChernCharacter& o);
  ChernCharacter& operator-=(const ChernCharacter& o);
  friend ChernCharacter operator+(ChernCharacter a, const ChernCharacter& b) { return a += b; }
  friend ChernCharacter operator-(ChernCharacter a, const ChernCharacter& b) { return a -= b; }
  friend ChernCharacter operator*(const Rational& s, const ChernCharacter& a) {
    return {a.ctx, s * a.r, s * a.c, s * a.m, s * a.n};
  }
  friend bool operator==(const ChernCharacter& a, const ChernCharacter& b) {
    return a.ctx == b.ctx && a.r == b.r && a.c == b.c && a.m == b.m && a.n == b.n;
  }

  /// Lexicographic order on (r, c, m, n); contexts must agree.
  friend std::strong_ordering operator<=>(const ChernCharacter& a, const ChernCharacter& b);

  /// Human-readable form, e.g. "2 + H + L - 2/3P".
  std::string str() const;
  /// The same class with ch_2, ch_3 in H^2, H^3 units, e.g. "1 - 1/3H^2".
  std::string str_h_units() const;
};

/// ch from Chern classes: c2 in L-units, c3 in P-units.
ChernCharacter from_chern_classes(FanoContext ctx, std::int64_t rank, std::int64_t c1,
                                  const Rational& c2, const Rational& c3);

/// Truncated product in the intersection ring.
ChernCharacter multiply(const ChernCharacter& a, const ChernCharacter& b);

/// ch^beta = e^{-beta H} ch.
ChernCharacter twist(const ChernCharacter& ch, const Rational& beta);

/// Sign change (-1)^k on ch_k.
ChernCharacter dual(const ChernCharacter& ch);

/// ch(E (x) O(k)).
inline ChernCharacter tensor_line_bundle(const ChernCharacter& ch, std::int64_t k) {
  return twist(ch, Rational(-k));
}

/// chi(E, F) = int ch(E)^dual . ch(F) . td(X). Throws ContextMismatch.
Rational euler(const ChernCharacter& e, const ChernCharacter& f);

/// chi(F) = chi(O_X, F).
Rational euler_char(const ChernCharacter& ch);

/// Cubic p(k) = p0 + p1 k + p2 k^2 + p3 k^3 over Q, tagged with a rank.
struct HilbertPoly {
  std::array<Rational, 4> coeff;
  Rational rank;

  Rational operator()(const Rational& k) const {
    return coeff[0] + k * (coeff[1] + k * (coeff[2] + k * coeff[3]));
  }
  friend bool operator==(const HilbertPoly&, const HilbertPoly&) = default;
};

/// k -> chi(ch (x) O(k)).
HilbertPoly hilbert_polynomial(const ChernCharacter& ch);

/// r, c integral and chi of the twists by O, O(1), O(2) integral.
bool lattice_member(const ChernCharacter& ch);

/// The values of ch_2 making (r, c, ch_2) the truncation of some lattice
/// class form a coset m0 + Z. Returns m0 in [0, 1), or nothing when no
/// lattice class has this rank and c_1 (or r, c are not integers).
std::optional<Rational> ch2_coset(FanoContext ctx, const Rational& r, const Rational& c);

/// A lattice class with truncation (r, c, m), if one exists. ch_3 is chosen
/// so that chi = 0.
std::optional<ChernCharacter> lift_to_lattice(FanoContext ctx, const Rational& r,
                                              const Rational& c, const Rational& m);

void require_same_context(const ChernCharacter& a, const ChernCharacter& b);

}  // namespace fanowalls
