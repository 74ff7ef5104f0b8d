#pragma once

// Numerical walls in the tilt half-plane and exhaustive destabilizer scans.
//
// A decomposition total = sub + quot is always taken in the truncated lattice
// (ch_0, ch_1, ch_2); ch_3 plays no role in wall loci. Each sub carries a
// concrete ch_3 (chosen so that chi(sub) = 0) so that downstream ch_3
// constraints can be applied to full characters.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fanowalls/lattice.hpp"
#include "fanowalls/tilt.hpp"

namespace fanowalls {

struct EmptyLocus {
  friend bool operator==(const EmptyLocus&, const EmptyLocus&) = default;
};
struct Everywhere {
  friend bool operator==(const Everywhere&, const Everywhere&) = default;
};
struct VerticalLine {
  Rational beta;
  friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};
/// (beta - center)^2 + t = radius_sq, t > 0.
struct Semicircle {
  Rational center;
  Rational radius_sq;
  friend bool operator==(const Semicircle&, const Semicircle&) = default;
};

using WallLocus = std::variant<EmptyLocus, Everywhere, VerticalLine, Semicircle>;

std::string describe(const WallLocus& locus);

/// Locus of mu(v) = mu(w). Throws DomainError when either truncation is zero.
WallLocus numerical_wall(const ChernCharacter& v, const ChernCharacter& w);

/// Box for the destabilizer scans. Ranks run over |r| <= max_rank, c_1 over
/// |c_1| <= max_c1 where the scan does not already bound it, and twisted
/// ch_2 over |8 ch_2| <= max_ch2 * D (in L-units).
struct ScanBounds {
  std::int64_t max_rank = 8;
  std::int64_t max_c1 = 8;
  std::int64_t max_ch2 = 64;
  unsigned workers = 1;

  ScanBounds scaled(std::int64_t factor) const;
};

/// ch^beta_{<=2}(sub) = (a, (b/2) H, (c/8) L). At beta = -1/2 these are the
/// integers of the usual parameterization.
struct WallParams {
  Rational a, b, c;
  friend bool operator==(const WallParams&, const WallParams&) = default;
};

struct WallCandidate {
  ChernCharacter sub;
  ChernCharacter quot;
  WallParams params;
  /// Reference line the params are twisted to.
  Rational beta;
  /// Crossing with the reference line; empty when the slopes agree on the
  /// whole ray {beta} x (0, inf).
  std::optional<Rational> t;
  /// numerical_wall(sub, total).
  WallLocus locus;
};

WallParams wall_params(const ChernCharacter& sub, const Rational& beta);

/// Every decomposition of total on the line beta0 with equal slopes, both
/// imaginary parts positive, 0 <= Delta(sub), Delta(quot) <= Delta(total) and
/// sub in the lattice. The result is closed under sub <-> quot and sorted by
/// params. Throws DomainError when total has zero imaginary part at beta0.
std::vector<WallCandidate> walls_on_line(const ChernCharacter& total, const Rational& beta0,
                                         const ScanBounds& bounds = {});

/// Keeps one candidate per {sub, quot} pair, the one whose sub is
/// lexicographically smaller in (r, c, m, n).
std::vector<WallCandidate> canonical_candidates(std::vector<WallCandidate> candidates);

/// All semicircular numerical walls of total from Delta-bounded lattice subs
/// along which both factors keep non-negative imaginary part, restricted to
/// walls meeting the open strip beta_lo < beta < beta_hi. Sorted by
/// decreasing radius, then by sub.
std::vector<WallCandidate> semicircle_walls(const ChernCharacter& total, const Rational& beta_lo,
                                            const Rational& beta_hi,
                                            const ScanBounds& bounds = {});

/// The candidate of semicircle_walls with the largest radius (ties: smaller sub).
std::optional<WallCandidate> largest_wall(const ChernCharacter& total, const Rational& beta_lo,
                                          const Rational& beta_hi,
                                          const ScanBounds& bounds = {});

/// Scan for walls of total with respect to the rotated charge Z^0, starting
/// from the top point pt0 of a wall and following it to its left foot
/// (0, beta_end), beta_end = pt0.beta - sqrt(pt0.t).
struct InfinityCandidate {
  ChernCharacter sub;
  ChernCharacter quot;
  /// ch^{beta_end}_{<=2}(sub) = (a, b H, (c/2) L) with a, b, c integers.
  std::array<Rational, 3> params;
  /// The factor with vanishing charge at the foot (proportional to
  /// ch_{<=2}(O(beta_end)), e.g. O(-1) for beta_end = -1).
  bool sub_vanishes = false;
  bool quot_vanishes = false;
};

/// A split on the parameter grid that passes the sign constraints and whose
/// sub matches the rotated slope of O(beta_end) at the foot, but whose
/// quotient does not. Recorded whether or not the sub is a lattice class.
struct EliminatedBranch {
  std::array<Rational, 3> params;
  std::string reason;
};

struct InfinityScan {
  TiltPoint top;
  TiltPoint foot;
  /// total itself has vanishing charge at the foot: every split is a
  /// multiple of the same class and the locus is everywhere.
  bool degenerate = false;
  std::vector<InfinityCandidate> candidates;
  std::vector<EliminatedBranch> eliminated;
};

/// Throws DomainError unless the rotated slope of total at pt0 is +infinity
/// and pt0.t is the square of a rational.
InfinityScan infinity_slope_candidates(const ChernCharacter& total, const TiltPoint& pt0,
                                       const ScanBounds& bounds = {});

struct TangentCandidate {
  ChernCharacter sub;
  ChernCharacter quot;
  WallLocus locus;
  /// sub proportional to total in (ch_0, ch_1, ch_2): the slopes agree
  /// everywhere and no chamber is bounded.
  bool pseudo_wall = false;
};

struct TangentScan {
  std::vector<TangentCandidate> candidates;
  /// numerical_wall(total, total); reported so a primitive total with no
  /// splits still has a locus to show.
  WallLocus self_locus;
};

/// Decompositions with mu_{0,0}(sub) = mu_{0,0}(total), imaginary parts
/// positive just left of beta = 0 and Delta bounds, whose wall with total is
/// either a semicircle ending at (0, 0) or a pseudo-wall.
TangentScan tangent_walls_at_zero(const ChernCharacter& total, const ScanBounds& bounds = {});

}  // namespace fanowalls
