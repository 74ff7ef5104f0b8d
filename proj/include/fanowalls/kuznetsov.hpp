#pragma once

// Rank-two numerical lattices of the Kuznetsov components Ku(Y_d) (index two,
// basis v, w) and A_X (index one, genus 8/10/12, basis s, t).

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fanowalls/lattice.hpp"

namespace fanowalls {

using Matrix2 = std::array<std::array<Rational, 2>, 2>;
using IntMatrix2 = std::array<std::array<std::int64_t, 2>, 2>;

/// Coordinates of a class a.basis[0] + b.basis[1].
struct KuClass {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const KuClass&, const KuClass&) = default;
  friend auto operator<=>(const KuClass&, const KuClass&) = default;
  KuClass operator-() const { return {-a, -b}; }
  friend KuClass operator+(KuClass x, KuClass y) { return {x.a + y.a, x.b + y.b}; }
  friend KuClass operator-(KuClass x, KuClass y) { return {x.a - y.a, x.b - y.b}; }
};

/// Coefficients of Q(a, b) = aa a^2 + ab a b + bb b^2.
struct QuadraticForm {
  std::int64_t aa = 0;
  std::int64_t ab = 0;
  std::int64_t bb = 0;

  std::int64_t operator()(std::int64_t a, std::int64_t b) const {
    return aa * a * a + ab * a * b + bb * b * b;
  }
  std::int64_t operator()(KuClass u) const { return (*this)(u.a, u.b); }
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

class KuLattice {
 public:
  /// Y_d for d in 1..5, or X_{2g-2} for g in {8, 10, 12}.
  static KuLattice make(FanoContext ctx);

  const FanoContext& ctx() const { return ctx_; }
  const std::array<ChernCharacter, 2>& basis() const { return basis_; }
  /// gram[i][j] = chi(basis_i, basis_j).
  const Matrix2& gram() const { return gram_; }

 private:
  KuLattice(FanoContext ctx, std::array<ChernCharacter, 2> basis, Matrix2 gram)
      : ctx_(ctx), basis_(std::move(basis)), gram_(std::move(gram)) {}

  FanoContext ctx_;
  std::array<ChernCharacter, 2> basis_;
  Matrix2 gram_;
};

ChernCharacter embed(const KuLattice& lattice, KuClass u);

/// chi(u, w) = u^T E w.
std::int64_t pairing(const KuLattice& lattice, KuClass u, KuClass w);

/// chi(u, u).
std::int64_t self_intersection(const KuLattice& lattice, KuClass u);

/// Q = -chi(u, u), read off the gram matrix.
QuadraticForm quadratic_form(const KuLattice& lattice);

/// All u with |a|, |b| <= bound and chi(u, u) = -r, in lexicographic order.
/// With up_to_sign only the representative with a > 0, or a = 0 and b > 0,
/// is kept (the zero class is kept as is).
std::vector<KuClass> enumerate_classes(const KuLattice& lattice, std::int64_t r,
                                       std::int64_t bound, bool up_to_sign,
                                       unsigned workers = 1);

/// Numerical Serre operator: the integer S with E S = E^T.
/// Throws DomainError if S is not integral.
IntMatrix2 serre_matrix(const KuLattice& lattice);

/// Rotation functor on N(Ku(Y_5)) acting on coordinate columns.
/// Throws DomainError for any other lattice.
IntMatrix2 rotation_matrix(const KuLattice& lattice);

/// R^k u for k = 0..steps (steps >= 0) or R^{-k} u for k = 0..|steps|.
std::vector<KuClass> rotation_orbit(const KuLattice& lattice, KuClass u, int steps);

IntMatrix2 multiply(const IntMatrix2& x, const IntMatrix2& y);
KuClass apply(const IntMatrix2& x, KuClass u);
IntMatrix2 identity2();

/// Integer solutions of x^2 - dp y^2 = n with |x|, |y| <= bound, ordered.
/// Throws DomainError when dp is not a positive non-square.
std::vector<std::pair<std::int64_t, std::int64_t>> pell_solve(std::int64_t dp, std::int64_t n,
                                                              std::int64_t bound);

struct PairingTarget {
  std::int64_t chi_ab = 0;  // chi(A, B)
  std::int64_t chi_ba = 0;  // chi(B, A)
};

struct Decomposition {
  KuClass sub;   // A
  KuClass quot;  // B = total - A
  std::size_t target = 0;  // index into the target list that matched
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// All A with A + B = total matching one of the targets, scanned over
/// |a1|, |b1| <= max(|total.a|, |total.b|) + extra, lexicographic in A.
std::vector<Decomposition> pairing_system_solve(const KuLattice& lattice, KuClass total,
                                                const std::vector<PairingTarget>& targets,
                                                std::int64_t extra = 20);

}  // namespace fanowalls
