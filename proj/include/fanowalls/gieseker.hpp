#pragma once

// Slope and Gieseker stability numerics for torsion-free classes, and the
// rank-one destabilizer scan for the instanton class 2 - 2L on Y_d.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fanowalls/lattice.hpp"
#include "fanowalls/tilt.hpp"

namespace fanowalls {

/// c / r, +infinity for r = 0. Throws DomainError when r = c = 0.
Slope mu_slope(const ChernCharacter& ch);

/// Compares p(ch1, n)/r1 with p(ch2, n)/r2 for n >> 0. Both ranks must be
/// positive (DomainError otherwise).
Order reduced_compare(const ChernCharacter& ch1, const ChernCharacter& ch2);

/// Compares mu_{t, beta}(ch1) with mu_{t, beta}(ch2) for t >> 0. Both
/// classes need nonzero twisted c_1 at beta.
Order large_volume_compare(const ChernCharacter& ch1, const ChernCharacter& ch2,
                           const Rational& beta);

/// G = 1 + aH + (b/2)L + (c/2)P.
struct DestabilizerHit {
  std::int64_t a = 0, b = 0, c = 0;
  ChernCharacter g;
  /// Which of: (1) a > 0; (2) a = 0, b > -2; (3) a = 0, b = -2, c > 0.
  std::array<bool, 3> conditions{};
  /// 1, 2 or 3 when exactly one condition holds, 0 otherwise.
  int case_id = 0;

  /// Outcome of the follow-up checks: lattice membership, mu-semistability
  /// of the total (case 1), tilt-semistability of the total at beta = -1/2
  /// for t >> 0 (case 2), and the BMS inequality for G at (0, -1/2)
  /// (case 3).
  bool survives = false;
  std::string verdict;
};

struct DestabilizerScan {
  FanoContext ctx;
  /// half = (2 - 2L) / 2 = 1 - L.
  ChernCharacter half;
  /// All G in the box with reduced_compare(G, half) = GT, ordered by (a, b, c).
  std::vector<DestabilizerHit> hits;
  /// Every hit satisfies exactly one of the three conditions.
  bool partition_ok = true;
};

/// Scans |a|, |b|, |c| <= bound. Requires an index-two context.
DestabilizerScan destabilizer_cases(FanoContext ctx, std::int64_t bound);

/// Hits that pass all follow-up checks.
std::vector<DestabilizerHit> surviving_destabilizers(const DestabilizerScan& scan);

}  // namespace fanowalls
