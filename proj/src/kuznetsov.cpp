#include "fanowalls/kuznetsov.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace fanowalls {

KuLattice KuLattice::make(FanoContext ctx) {
  const Rational d(ctx.degree());
  std::array<ChernCharacter, 2> basis{ChernCharacter(ctx), ChernCharacter(ctx)};
  if (ctx.index() == 2) {
    basis[0] = ChernCharacter(ctx, 1, 0, -1, 0);
    basis[1] = ChernCharacter(ctx, 0, 1, -d / 2, d / 6 - 1);
  } else {
    const int g = ctx.genus();
    if (g != 8 && g != 10 && g != 12) {
      throw DomainError("Kuznetsov lattice needs genus 8, 10 or 12, got " + ctx.name());
    }
    const Rational gq(g);
    basis[0] = ChernCharacter(ctx, 1, 0, -2, 0);
    basis[1] = ChernCharacter(ctx, 0, 1, -(gq / 2 + 1), -(16 - gq) / 12);
  }
  Matrix2 gram;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) gram[i][j] = euler(basis[i], basis[j]);
  }
  return KuLattice(ctx, std::move(basis), std::move(gram));
}

ChernCharacter embed(const KuLattice& lattice, KuClass u) {
  return Rational(u.a) * lattice.basis()[0] + Rational(u.b) * lattice.basis()[1];
}

std::int64_t pairing(const KuLattice& lattice, KuClass u, KuClass w) {
  const Matrix2& e = lattice.gram();
  const Rational a1(u.a), b1(u.b), a2(w.a), b2(w.b);
  return to_int64(a1 * (e[0][0] * a2 + e[0][1] * b2) + b1 * (e[1][0] * a2 + e[1][1] * b2));
}

std::int64_t self_intersection(const KuLattice& lattice, KuClass u) {
  return pairing(lattice, u, u);
}

QuadraticForm quadratic_form(const KuLattice& lattice) {
  const Matrix2& e = lattice.gram();
  return {to_int64(-e[0][0]), to_int64(-(e[0][1] + e[1][0])), to_int64(-e[1][1])};
}

std::vector<KuClass> enumerate_classes(const KuLattice& lattice, std::int64_t r,
                                       std::int64_t bound, bool up_to_sign,
                                       unsigned workers) {
  if (bound < 1) throw DomainError("bound must be at least 1");
  const QuadraticForm q = quadratic_form(lattice);
  const std::int64_t rows = 2 * bound + 1;
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(rows));

  // Rows of constant a are split into contiguous chunks; concatenating the
  // chunks in order keeps the lexicographic order.
  std::vector<std::vector<KuClass>> chunks(workers);
  auto scan = [&](unsigned w) {
    const std::int64_t lo = -bound + rows * w / workers;
    const std::int64_t hi = -bound + rows * (w + 1) / workers;
    for (std::int64_t a = lo; a < hi; ++a) {
      for (std::int64_t b = -bound; b <= bound; ++b) {
        if (q(a, b) != r) continue;
        if (up_to_sign && (a < 0 || (a == 0 && b < 0))) continue;
        chunks[w].push_back({a, b});
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }
  std::vector<KuClass> out;
  for (auto& chunk : chunks) out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

IntMatrix2 serre_matrix(const KuLattice& lattice) {
  const Matrix2& e = lattice.gram();
  const Rational det = e[0][0] * e[1][1] - e[0][1] * e[1][0];
  if (det == 0) throw DomainError("gram matrix is singular");
  // inv(E) = adj(E) / det; S = inv(E) E^T.
  const Matrix2 adj{{{e[1][1], -e[0][1]}, {-e[1][0], e[0][0]}}};
  IntMatrix2 s{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Rational entry = (adj[i][0] * e[j][0] + adj[i][1] * e[j][1]) / det;
      if (!is_integer(entry)) {
        throw DomainError("Serre matrix entry " + to_string(entry) + " is not integral");
      }
      s[i][j] = to_int64(entry);
    }
  }
  return s;
}

IntMatrix2 rotation_matrix(const KuLattice& lattice) {
  if (!(lattice.ctx() == FanoContext::index_two(5))) {
    throw DomainError("rotation matrix is only available for Y5, got " + lattice.ctx().name());
  }
  return {{{-4, -5}, {1, 1}}};
}

IntMatrix2 multiply(const IntMatrix2& x, const IntMatrix2& y) {
  IntMatrix2 z{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  }
  return z;
}

KuClass apply(const IntMatrix2& x, KuClass u) {
  return {x[0][0] * u.a + x[0][1] * u.b, x[1][0] * u.a + x[1][1] * u.b};
}

IntMatrix2 identity2() { return {{{1, 0}, {0, 1}}}; }

std::vector<KuClass> rotation_orbit(const KuLattice& lattice, KuClass u, int steps) {
  IntMatrix2 step = rotation_matrix(lattice);
  if (steps < 0) {
    // det R = 1, so the inverse is the adjugate.
    step = {{{step[1][1], -step[0][1]}, {-step[1][0], step[0][0]}}};
  }
  std::vector<KuClass> orbit{u};
  for (int k = 0; k < std::abs(steps); ++k) orbit.push_back(fanowalls::apply(step, orbit.back()));
  return orbit;
}

namespace {

bool perfect_square(std::int64_t v, std::int64_t& root) {
  if (v < 0) return false;
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  root = s;
  return s * s == v;
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> pell_solve(std::int64_t dp, std::int64_t n,
                                                              std::int64_t bound) {
  std::int64_t root = 0;
  if (dp <= 0 || perfect_square(dp, root)) {
    throw DomainError("Pell coefficient must be a positive non-square, got " + std::to_string(dp));
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t y = -bound; y <= bound; ++y) {
    std::int64_t x = 0;
    if (!perfect_square(n + dp * y * y, x) || x > bound) continue;
    out.emplace_back(x, y);
    if (x != 0) out.emplace_back(-x, y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Decomposition> pairing_system_solve(const KuLattice& lattice, KuClass total,
                                                const std::vector<PairingTarget>& targets,
                                                std::int64_t extra) {
  const std::int64_t box = std::max(std::abs(total.a), std::abs(total.b)) + extra;
  std::vector<Decomposition> out;
  for (std::int64_t a = -box; a <= box; ++a) {
    for (std::int64_t b = -box; b <= box; ++b) {
      const KuClass sub{a, b};
      const KuClass quot = total - sub;
      const std::int64_t ab = pairing(lattice, sub, quot);
      const std::int64_t ba = pairing(lattice, quot, sub);
      for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i].chi_ab == ab && targets[i].chi_ba == ba) {
          out.push_back({sub, quot, i});
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace fanowalls
