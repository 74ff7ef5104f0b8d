#include "fanowalls/gieseker.hpp"

namespace fanowalls {

Slope mu_slope(const ChernCharacter& ch) {
  if (ch.r == 0) {
    if (ch.c == 0) throw DomainError("mu-slope undefined for r = c = 0");
    return Slope::infinity();
  }
  return Slope::finite(ch.c / ch.r);
}

Order reduced_compare(const ChernCharacter& ch1, const ChernCharacter& ch2) {
  require_same_context(ch1, ch2);
  if (ch1.r <= 0 || ch2.r <= 0) throw DomainError("reduced Hilbert polynomials need positive rank");
  const HilbertPoly p1 = hilbert_polynomial(ch1);
  const HilbertPoly p2 = hilbert_polynomial(ch2);
  for (int k = 3; k >= 0; --k) {
    const auto o = compare(p1.coeff[k] / ch1.r, p2.coeff[k] / ch2.r);
    if (o != 0) return to_order(o);
  }
  return Order::EQ;
}

Order large_volume_compare(const ChernCharacter& ch1, const ChernCharacter& ch2,
                           const Rational& beta) {
  require_same_context(ch1, ch2);
  const ChernCharacter t1 = twist(ch1, beta);
  const ChernCharacter t2 = twist(ch2, beta);
  if (t1.c == 0 || t2.c == 0) throw DomainError("twisted c_1 vanishes; slope is +inf for all t");
  // mu = -(t D r' / 2 - m') / (D c') = t (-r' / 2c') + m' / (D c').
  const Rational d(ch1.ctx.degree());
  const auto lead = compare(-t1.r / (2 * t1.c), -t2.r / (2 * t2.c));
  if (lead != 0) return to_order(lead);
  return to_order(compare(t1.m / (d * t1.c), t2.m / (d * t2.c)));
}

namespace {

void judge(DestabilizerHit& hit, const ChernCharacter& half) {
  const Rational minus_half = make_rational(-1, 2);
  if (!lattice_member(hit.g)) {
    hit.verdict = "not a lattice class";
    return;
  }
  switch (hit.case_id) {
    case 1:
      if (mu_slope(hit.g) > mu_slope(2 * half)) {
        hit.verdict = "mu-slope above the total";
        return;
      }
      break;
    case 2:
      if (large_volume_compare(hit.g, 2 * half, minus_half) == Order::GT) {
        hit.verdict = "tilt slope above the total at beta = -1/2 for t >> 0";
        return;
      }
      break;
    case 3:
      if (bms_inequality(hit.g, TiltPoint::make(0, minus_half)) < 0) {
        hit.verdict = "violates the BMS inequality at (0, -1/2)";
        return;
      }
      break;
    default:
      hit.verdict = "outside the three cases";
      return;
  }
  hit.survives = true;
  hit.verdict = "survives";
}

}  // namespace

DestabilizerScan destabilizer_cases(FanoContext ctx, std::int64_t bound) {
  if (ctx.index() != 2) throw DomainError("destabilizer scan needs an index-two context");
  if (bound < 0) throw DomainError("bound must be non-negative");
  DestabilizerScan scan{ctx, ChernCharacter(ctx, 1, 0, -1, 0), {}, true};
  for (std::int64_t a = -bound; a <= bound; ++a) {
    for (std::int64_t b = -bound; b <= bound; ++b) {
      for (std::int64_t c = -bound; c <= bound; ++c) {
        ChernCharacter g(ctx, 1, a, make_rational(b, 2), make_rational(c, 2));
        if (reduced_compare(g, scan.half) != Order::GT) continue;
        DestabilizerHit hit{a, b, c, std::move(g),
                            {a > 0, a == 0 && b > -2, a == 0 && b == -2 && c > 0},
                            0, false, {}};
        int count = 0;
        for (int k = 0; k < 3; ++k) {
          if (hit.conditions[k]) {
            ++count;
            hit.case_id = k + 1;
          }
        }
        if (count != 1) {
          hit.case_id = 0;
          scan.partition_ok = false;
        }
        judge(hit, scan.half);
        scan.hits.push_back(std::move(hit));
      }
    }
  }
  return scan;
}

std::vector<DestabilizerHit> surviving_destabilizers(const DestabilizerScan& scan) {
  std::vector<DestabilizerHit> out;
  for (const auto& hit : scan.hits) {
    if (hit.survives) out.push_back(hit);
  }
  return out;
}

}  // namespace fanowalls
