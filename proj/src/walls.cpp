#include "fanowalls/walls.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace fanowalls {

namespace {

// Calls visit(m) for every m in the lattice coset of (r, c) with lo <= m <= hi.
template <class Visit>
void for_each_ch2(FanoContext ctx, const Rational& r, const Rational& c, const Rational& lo,
                  const Rational& hi, Visit&& visit) {
  const std::optional<Rational> m0 = ch2_coset(ctx, r, c);
  if (!m0 || lo > hi) return;
  const mpz_class first = ceil_of(lo - *m0);
  const mpz_class last = floor_of(hi - *m0);
  for (mpz_class k = first; k <= last; ++k) visit(Rational(*m0 + Rational(k)));
}

// Runs scan(r) for each rank in [-max_rank, max_rank] on up to `workers`
// threads and concatenates the per-rank results in rank order.
template <class T>
std::vector<T> over_ranks(std::int64_t max_rank, unsigned workers,
                          const std::function<std::vector<T>(std::int64_t)>& scan) {
  const std::int64_t count = 2 * max_rank + 1;
  std::vector<std::vector<T>> per_rank(static_cast<std::size_t>(count));
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(count));
  auto run = [&](unsigned w) {
    for (std::int64_t i = w; i < count; i += workers) {
      per_rank[static_cast<std::size_t>(i)] = scan(i - max_rank);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  std::vector<T> out;
  for (auto& chunk : per_rank) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
  }
  return out;
}

bool within_discriminant_bounds(const ChernCharacter& sub, const ChernCharacter& quot,
                                const Rational& total_delta) {
  const Rational ds = discriminant(sub);
  const Rational dq = discriminant(quot);
  return ds >= 0 && dq >= 0 && ds <= total_delta && dq <= total_delta;
}

int sign(const Rational& q) { return sgn(q); }

// Range of m' = ch_2^beta allowed by |8 m'| <= max_ch2 * D, pulled back to
// untwisted m for a class of rank r and c_1 = c.
std::pair<Rational, Rational> ch2_window(FanoContext ctx, const Rational& r, const Rational& c,
                                         const Rational& beta, std::int64_t max_ch2) {
  const Rational d(ctx.degree());
  const Rational half_width = Rational(max_ch2) * d / 8;
  const Rational shift = beta * c * d - beta * beta * r * d / 2;
  return {shift - half_width, shift + half_width};
}

bool params_less(const WallParams& x, const WallParams& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  return x.c < y.c;
}

}  // namespace

ScanBounds ScanBounds::scaled(std::int64_t factor) const {
  if (factor < 1) throw DomainError("bound scale must be a positive integer");
  ScanBounds out = *this;
  out.max_rank *= factor;
  out.max_c1 *= factor;
  out.max_ch2 *= factor;
  return out;
}

std::string describe(const WallLocus& locus) {
  struct Visitor {
    std::string operator()(const EmptyLocus&) const { return "empty"; }
    std::string operator()(const Everywhere&) const { return "everywhere"; }
    std::string operator()(const VerticalLine& v) const {
      return "vertical beta=" + to_string(v.beta);
    }
    std::string operator()(const Semicircle& s) const {
      return "semicircle center=" + to_string(s.center) + " radius^2=" + to_string(s.radius_sq);
    }
  };
  return std::visit(Visitor{}, locus);
}

WallLocus numerical_wall(const ChernCharacter& v, const ChernCharacter& w) {
  require_same_context(v, w);
  if (v.truncated_zero() || w.truncated_zero()) {
    throw DomainError("numerical wall needs nonzero (ch0, ch1, ch2)");
  }
  // re(v) im(w) - re(w) im(v) = D [ D x (t + beta^2) / 2 + y beta + z ].
  const Rational d(v.ctx.degree());
  const Rational x = v.r * w.c - w.r * v.c;
  const Rational y = v.m * w.r - w.m * v.r;
  const Rational z = w.m * v.c - v.m * w.c;
  if (x != 0) {
    const Rational center = -y / (d * x);
    const Rational radius_sq = center * center - 2 * z / (d * x);
    if (radius_sq <= 0) return EmptyLocus{};
    return Semicircle{center, radius_sq};
  }
  if (y != 0) return VerticalLine{-z / y};
  if (z == 0) return Everywhere{};
  return EmptyLocus{};
}

WallParams wall_params(const ChernCharacter& sub, const Rational& beta) {
  const ChernCharacter tw = twist(sub, beta);
  return {tw.r, 2 * tw.c, 8 * tw.m};
}

std::vector<WallCandidate> walls_on_line(const ChernCharacter& total, const Rational& beta0,
                                         const ScanBounds& bounds) {
  const FanoContext ctx = total.ctx;
  const ChernCharacter te = twist(total, beta0);
  if (te.c == 0) {
    throw DomainError("total has zero imaginary part along beta = " + to_string(beta0));
  }
  const int side = sign(te.c);
  const Rational d(ctx.degree());
  const Rational total_delta = discriminant(total);

  std::vector<WallCandidate> found = over_ranks<WallCandidate>(
      bounds.max_rank, bounds.workers, [&](std::int64_t rank) {
        std::vector<WallCandidate> out;
        const Rational r(rank);
        // 0 < side * c'(sub) < side * c'(total), c'(sub) = c - beta0 r.
        const Rational base = beta0 * r;
        const Rational far = te.c + base;
        const Rational& lo = side > 0 ? base : far;
        const Rational& hi = side > 0 ? far : base;
        for (mpz_class ci = floor_of(lo) + 1; ci < hi; ++ci) {
          const Rational c(ci);
          const auto [mlo, mhi] = ch2_window(ctx, r, c, beta0, bounds.max_ch2);
          for_each_ch2(ctx, r, c, mlo, mhi, [&](const Rational& m) {
            const std::optional<ChernCharacter> sub = lift_to_lattice(ctx, r, c, m);
            if (!sub) return;
            const ChernCharacter quot = total - *sub;
            if (!within_discriminant_bounds(*sub, quot, total_delta)) return;
            const ChernCharacter ts = twist(*sub, beta0);
            // Slopes agree iff k t = rhs.
            const Rational k = d * (ts.r * te.c - te.r * ts.c) / 2;
            const Rational rhs = ts.m * te.c - te.m * ts.c;
            std::optional<Rational> t;
            if (k == 0) {
              if (rhs != 0) return;
            } else {
              t = rhs / k;
              if (*t <= 0) return;
            }
            out.push_back({*sub, quot, wall_params(*sub, beta0), beta0, t,
                           numerical_wall(*sub, total)});
          });
        }
        return out;
      });
  std::stable_sort(found.begin(), found.end(), [](const WallCandidate& x, const WallCandidate& y) {
    return params_less(x.params, y.params);
  });
  return found;
}

std::vector<WallCandidate> canonical_candidates(std::vector<WallCandidate> candidates) {
  std::vector<WallCandidate> out;
  for (auto& cand : candidates) {
    const ChernCharacter sub_trunc(cand.sub.ctx, cand.sub.r, cand.sub.c, cand.sub.m);
    const ChernCharacter quot_trunc(cand.quot.ctx, cand.quot.r, cand.quot.c, cand.quot.m);
    if ((quot_trunc <=> sub_trunc) < 0) continue;
    out.push_back(std::move(cand));
  }
  return out;
}

namespace {

// Imaginary part D (c - r beta) of a class stays >= 0 on the closed beta
// range of the semicircle and > 0 at its top.
bool positive_along(const ChernCharacter& ch, const Semicircle& s) {
  const Rational at_center = ch.c - ch.r * s.center;
  if (at_center <= 0) return false;
  return at_center * at_center >= ch.r * ch.r * s.radius_sq;
}

// The open beta-interval (center - R, center + R) meets (lo, hi).
bool meets_strip(const Semicircle& s, const Rational& lo, const Rational& hi) {
  const Rational left_gap = lo - s.center;   // need R > left_gap
  const Rational right_gap = s.center - hi;  // need R > right_gap
  const bool reaches_lo = left_gap < 0 || s.radius_sq > left_gap * left_gap;
  const bool reaches_hi = right_gap < 0 || s.radius_sq > right_gap * right_gap;
  return reaches_lo && reaches_hi;
}

}  // namespace

std::vector<WallCandidate> semicircle_walls(const ChernCharacter& total, const Rational& beta_lo,
                                            const Rational& beta_hi, const ScanBounds& bounds) {
  if (beta_lo >= beta_hi) throw DomainError("empty beta window");
  const FanoContext ctx = total.ctx;
  const Rational d(ctx.degree());
  const Rational total_delta = discriminant(total);
  if (total_delta <= 0) return {};

  std::vector<WallCandidate> found = over_ranks<WallCandidate>(
      bounds.max_rank, bounds.workers, [&](std::int64_t rank) {
        std::vector<WallCandidate> out;
        const Rational r(rank);
        for (std::int64_t ci = -bounds.max_c1; ci <= bounds.max_c1; ++ci) {
          const Rational c(ci);
          Rational mlo, mhi;
          if (rank == 0) {
            const Rational half_width = Rational(bounds.max_ch2) * d / 8;
            mlo = -half_width;
            mhi = half_width;
          } else {
            // 0 <= (cD)^2 - 2 D r m <= Delta(total).
            const Rational a = (c * d) * (c * d) / (2 * d * r);
            const Rational b = ((c * d) * (c * d) - total_delta) / (2 * d * r);
            mlo = rank > 0 ? b : a;
            mhi = rank > 0 ? a : b;
          }
          for_each_ch2(ctx, r, c, mlo, mhi, [&](const Rational& m) {
            const std::optional<ChernCharacter> sub = lift_to_lattice(ctx, r, c, m);
            if (!sub || sub->truncated_zero()) return;
            const ChernCharacter quot = total - *sub;
            if (quot.truncated_zero()) return;
            if (!within_discriminant_bounds(*sub, quot, total_delta)) return;
            const WallLocus locus = numerical_wall(*sub, total);
            const auto* circle = std::get_if<Semicircle>(&locus);
            if (circle == nullptr) return;
            if (!positive_along(*sub, *circle) || !positive_along(quot, *circle)) return;
            if (!meets_strip(*circle, beta_lo, beta_hi)) return;
            out.push_back({*sub, quot, wall_params(*sub, circle->center), circle->center,
                           circle->radius_sq, locus});
          });
        }
        return out;
      });
  std::stable_sort(found.begin(), found.end(), [](const WallCandidate& x, const WallCandidate& y) {
    const auto& cx = std::get<Semicircle>(x.locus);
    const auto& cy = std::get<Semicircle>(y.locus);
    if (cx.radius_sq != cy.radius_sq) return cx.radius_sq > cy.radius_sq;
    return (x.sub <=> y.sub) < 0;
  });
  return found;
}

std::optional<WallCandidate> largest_wall(const ChernCharacter& total, const Rational& beta_lo,
                                          const Rational& beta_hi, const ScanBounds& bounds) {
  std::vector<WallCandidate> walls = semicircle_walls(total, beta_lo, beta_hi, bounds);
  if (walls.empty()) return std::nullopt;
  return std::move(walls.front());
}

InfinityScan infinity_slope_candidates(const ChernCharacter& total, const TiltPoint& pt0,
                                       const ScanBounds& bounds) {
  const FanoContext ctx = total.ctx;
  if (!rotated_slope(total, pt0, Slope::finite(0)).is_infinite()) {
    throw DomainError("rotated slope of total at the start point is not +inf");
  }
  Rational radius;
  if (!rational_sqrt(pt0.t, radius)) {
    throw DomainError("start point t = " + to_string(pt0.t) + " is not a rational square");
  }
  InfinityScan scan{pt0, TiltPoint::make(0, pt0.beta - radius), false, {}, {}};
  const Rational& beta_end = scan.foot.beta;
  if (central_charge(total, scan.foot).is_zero()) {
    scan.degenerate = true;
    return scan;
  }

  struct Hit {
    std::optional<InfinityCandidate> candidate;
    std::optional<EliminatedBranch> eliminated;
  };
  const ChernCharacter te = twist(total, beta_end);
  const std::int64_t max_c = bounds.max_ch2 * ctx.degree() / 4;
  // The chain runs on the integer grid ch^{beta_end}(sub) = (a, bH, (c/2)L);
  // lattice membership is only asked of the final candidates.
  std::vector<Hit> hits = over_ranks<Hit>(bounds.max_rank, bounds.workers, [&](std::int64_t a) {
    std::vector<Hit> out;
    // Re Z^0 = im Z <= 0 at the foot for sub and quot: te.c <= b <= 0.
    for (mpz_class b = ceil_of(te.c); b <= 0; ++b) {
      for (std::int64_t c = -max_c; c <= max_c; ++c) {
        const std::array<Rational, 3> params{Rational(a), Rational(b), Rational(c)};
        const ChernCharacter sub = twist(ChernCharacter(ctx, a, b, make_rational(c, 2)), -beta_end);
        const ChernCharacter quot(ctx, total.r - sub.r, total.c - sub.c, total.m - sub.m);
        if (sub.truncated_zero() || quot.truncated_zero()) continue;
        if (central_charge(sub, pt0).im > 0 || central_charge(quot, pt0).im > 0) continue;
        const ChargeValue sub_foot = central_charge(sub, scan.foot);
        const ChargeValue quot_foot = central_charge(quot, scan.foot);
        bool sub_vanishes = false, quot_vanishes = false;
        if (sub_foot.im == 0 || quot_foot.im == 0) {
          // A factor on the real axis at the foot must match the rotated
          // slope of O(beta_end) there, which forces zero charge.
          sub_vanishes = sub_foot.is_zero();
          quot_vanishes = quot_foot.is_zero();
          if ((sub_foot.im == 0 && !sub_vanishes) || (quot_foot.im == 0 && !quot_vanishes)) {
            continue;
          }
        } else {
          // Both factors off the real axis: both need rotated slope +inf.
          if (sub_foot.re != 0) continue;
          if (quot_foot.re != 0) {
            out.push_back({std::nullopt, EliminatedBranch{
                                             params,
                                             "quotient rotated slope at the foot is not +inf"}});
            continue;
          }
        }
        const std::optional<ChernCharacter> lifted = lift_to_lattice(ctx, sub.r, sub.c, sub.m);
        if (!lifted) continue;
        out.push_back({InfinityCandidate{*lifted, total - *lifted, params, sub_vanishes,
                                         quot_vanishes},
                       std::nullopt});
      }
    }
    return out;
  });
  for (auto& hit : hits) {
    if (hit.candidate) scan.candidates.push_back(std::move(*hit.candidate));
    if (hit.eliminated) scan.eliminated.push_back(std::move(*hit.eliminated));
  }
  auto by_params = [](const auto& x, const auto& y) { return x.params < y.params; };
  std::stable_sort(scan.candidates.begin(), scan.candidates.end(), by_params);
  std::stable_sort(scan.eliminated.begin(), scan.eliminated.end(), by_params);
  return scan;
}

TangentScan tangent_walls_at_zero(const ChernCharacter& total, const ScanBounds& bounds) {
  const FanoContext ctx = total.ctx;
  const Rational d(ctx.degree());
  const Rational total_delta = discriminant(total);
  const TiltPoint origin = TiltPoint::make(0, 0);
  const Slope total_slope = slope(total, origin);
  // Imaginary part just left of beta = 0 is D (c - r beta), beta -> 0-.
  auto positive_left_of_zero = [](const ChernCharacter& ch) {
    return ch.c > 0 || (ch.c == 0 && ch.r > 0);
  };

  TangentScan scan{{}, numerical_wall(total, total)};
  if (total.c < 0) return scan;
  scan.candidates = over_ranks<TangentCandidate>(
      bounds.max_rank, bounds.workers, [&](std::int64_t rank) {
        std::vector<TangentCandidate> out;
        const Rational r(rank);
        for (mpz_class ci = 0; ci <= floor_of(total.c); ++ci) {
          const Rational c(ci);
          const auto [mlo, mhi] = ch2_window(ctx, r, c, 0, bounds.max_ch2);
          for_each_ch2(ctx, r, c, mlo, mhi, [&](const Rational& m) {
            const std::optional<ChernCharacter> sub = lift_to_lattice(ctx, r, c, m);
            if (!sub) return;
            const ChernCharacter quot = total - *sub;
            if (!positive_left_of_zero(*sub) || !positive_left_of_zero(quot)) return;
            if (!within_discriminant_bounds(*sub, quot, total_delta)) return;
            const ChargeValue z = central_charge(*sub, origin);
            if (z.is_zero() || slope_of(z) != total_slope) return;
            const WallLocus locus = numerical_wall(*sub, total);
            if (std::holds_alternative<Everywhere>(locus)) {
              out.push_back({*sub, quot, locus, true});
              return;
            }
            const auto* circle = std::get_if<Semicircle>(&locus);
            if (circle != nullptr && circle->center < 0 &&
                circle->radius_sq == circle->center * circle->center) {
              out.push_back({*sub, quot, locus, false});
            }
          });
        }
        return out;
      });
  std::stable_sort(scan.candidates.begin(), scan.candidates.end(),
                   [](const TangentCandidate& x, const TangentCandidate& y) {
                     return (x.sub <=> y.sub) < 0;
                   });
  return scan;
}

}  // namespace fanowalls
