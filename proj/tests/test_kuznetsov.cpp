#include <doctest.h>

#include <algorithm>
#include <set>

#include "fanowalls/kuznetsov.hpp"
#include "support.hpp"

using namespace fanowalls;
using testing_support::q;

namespace {

std::vector<KuLattice> all_lattices() {
  std::vector<KuLattice> out;
  for (int d = 1; d <= 5; ++d) out.push_back(KuLattice::make(FanoContext::index_two(d)));
  for (int g : {8, 10, 12}) out.push_back(KuLattice::make(FanoContext::of_genus(g)));
  return out;
}

Matrix2 expected_gram(const FanoContext& ctx) {
  if (ctx.index() == 2) {
    const int d = ctx.degree();
    return {{{q(-1), q(-1)}, {q(1 - d), q(-d)}}};
  }
  const int g = ctx.genus();
  return {{{q(-1), q(-2)}, {q(1) - q(g, 2), q(1 - g)}}};
}

}  // namespace

TEST_CASE("gram matrices") {
  for (const auto& lattice : all_lattices()) {
    CAPTURE(lattice.ctx().name());
    CHECK(lattice.gram() == expected_gram(lattice.ctx()));
    for (const auto& b : lattice.basis()) CHECK(lattice_member(b));
    const Matrix2& e = lattice.gram();
    CHECK(e[0][0] * e[1][1] - e[0][1] * e[1][0] == 1);
  }
  CHECK_THROWS_AS(KuLattice::make(FanoContext::of_genus(7)), DomainError);
}

TEST_CASE("embedding") {
  const KuLattice y3 = KuLattice::make(FanoContext::index_two(3));
  const FanoContext c3 = y3.ctx();
  CHECK(embed(y3, {1, 0}) == ChernCharacter(c3, 1, 0, -1, 0));
  CHECK(embed(y3, {2, 0}) == ChernCharacter(c3, 2, 0, -2, 0));
  const KuLattice x14 = KuLattice::make(FanoContext::of_genus(8));
  CHECK(embed(x14, {1, 0}) == ChernCharacter(x14.ctx(), 1, 0, -2, 0));
}

TEST_CASE("pairing agrees with euler on embedded classes") {
  for (const auto& lattice : all_lattices()) {
    for (int i = 0; i < 30; ++i) {
      const KuClass u{testing_support::rand_int(-20, 20), testing_support::rand_int(-20, 20)};
      const KuClass w{testing_support::rand_int(-20, 20), testing_support::rand_int(-20, 20)};
      CHECK(Rational(pairing(lattice, u, w)) == euler(embed(lattice, u), embed(lattice, w)));
    }
  }
}

TEST_CASE("self intersection and quadratic forms") {
  const KuLattice y3 = KuLattice::make(FanoContext::index_two(3));
  CHECK(self_intersection(y3, {1, 0}) == -1);
  CHECK(self_intersection(y3, {2, 0}) == -4);
  CHECK(self_intersection(KuLattice::make(FanoContext::index_two(5)), {0, 0}) == 0);
  CHECK(quadratic_form(KuLattice::make(FanoContext::index_two(5))) == QuadraticForm{1, 5, 5});
  CHECK(quadratic_form(KuLattice::make(FanoContext::index_two(4))) == QuadraticForm{1, 4, 4});
  CHECK(quadratic_form(KuLattice::make(FanoContext::of_genus(8))) == QuadraticForm{1, 5, 7});
  for (const auto& lattice : all_lattices()) {
    const QuadraticForm qf = quadratic_form(lattice);
    for (int i = 0; i < 100; ++i) {
      const KuClass u{testing_support::rand_int(-50, 50), testing_support::rand_int(-50, 50)};
      CHECK(self_intersection(lattice, u) == -qf(u));
      // (-1)-classes double to (-4)-classes and back.
      CHECK((qf(u) == 1) == (qf(2 * u.a, 2 * u.b) == 4));
    }
  }
  // Y4: the form is a perfect square.
  const QuadraticForm q4 = quadratic_form(KuLattice::make(FanoContext::index_two(4)));
  for (int a = -20; a <= 20; ++a) {
    for (int b = -20; b <= 20; ++b) CHECK(q4(a, b) == (a + 2 * b) * (a + 2 * b));
  }
}

TEST_CASE("class enumeration") {
  const KuLattice y3 = KuLattice::make(FanoContext::index_two(3));
  const KuLattice x14 = KuLattice::make(FanoContext::of_genus(8));
  const KuLattice y4 = KuLattice::make(FanoContext::index_two(4));
  const KuLattice y5 = KuLattice::make(FanoContext::index_two(5));
  CHECK(enumerate_classes(y3, 1, 10, true) == std::vector<KuClass>{{1, -1}, {1, 0}, {2, -1}});
  CHECK(enumerate_classes(x14, 1, 10, true) == std::vector<KuClass>{{1, 0}, {2, -1}, {3, -1}});
  for (int r : {2, 3}) {
    CHECK(enumerate_classes(y4, r, 50, false).empty());
    CHECK(enumerate_classes(y5, r, 50, false).empty());
  }
  CHECK(enumerate_classes(y5, 0, 50, false) == std::vector<KuClass>{{0, 0}});
  // Y4 has infinitely many (0)-classes: the count grows with the bound.
  CHECK(enumerate_classes(y4, 0, 10, false).size() < enumerate_classes(y4, 0, 20, false).size());
  CHECK_THROWS_AS(enumerate_classes(y3, 1, 0, false), DomainError);

  // Oracle: direct euler evaluation on every embedded class of the box.
  for (const auto& lattice : {y3, y5, x14}) {
    for (int r = -1; r <= 4; ++r) {
      std::vector<KuClass> expected;
      for (std::int64_t a = -8; a <= 8; ++a) {
        for (std::int64_t b = -8; b <= 8; ++b) {
          const ChernCharacter ch = embed(lattice, {a, b});
          if (euler(ch, ch) == -r) expected.push_back({a, b});
        }
      }
      CHECK(enumerate_classes(lattice, r, 8, false) == expected);
      CHECK(enumerate_classes(lattice, r, 8, false, 4) == expected);
    }
  }
}

TEST_CASE("Y5 forms never take the values 2 and 3") {
  const QuadraticForm q5 = quadratic_form(KuLattice::make(FanoContext::index_two(5)));
  for (int a = -60; a <= 60; ++a) {
    for (int b = -60; b <= 60; ++b) {
      const auto v = ((q5(a, b) % 5) + 5) % 5;
      CHECK((v == 0 || v == 1 || v == 4));
    }
  }
}

TEST_CASE("serre operator") {
  const IntMatrix2 s3 = serre_matrix(KuLattice::make(FanoContext::index_two(3)));
  CHECK(s3 == IntMatrix2{{{2, 3}, {-1, -1}}});
  const IntMatrix2 s14 = serre_matrix(KuLattice::make(FanoContext::of_genus(8)));
  CHECK(s14 == IntMatrix2{{{3, 7}, {-1, -2}}});
  const IntMatrix2 minus_id{{{-1, 0}, {0, -1}}};
  for (const auto& lattice : all_lattices()) {
    CAPTURE(lattice.ctx().name());
    const IntMatrix2 s = serre_matrix(lattice);
    // E S = E^T.
    const Matrix2& e = lattice.gram();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        CHECK(e[i][0] * s[0][j] + e[i][1] * s[1][j] == e[j][i]);
      }
    }
    // chi(y, S x) = chi(x, y).
    for (int k = 0; k < 20; ++k) {
      const KuClass x{testing_support::rand_int(-9, 9), testing_support::rand_int(-9, 9)};
      const KuClass y{testing_support::rand_int(-9, 9), testing_support::rand_int(-9, 9)};
      CHECK(pairing(lattice, y, apply(s, x)) == pairing(lattice, x, y));
    }
  }
  // The cube is -Id exactly for the lattices of Y1, Y3 and X14.
  const std::set<std::string> cube_minus_id{"Y1", "Y3", "X14"};
  for (const auto& lattice : all_lattices()) {
    const IntMatrix2 s = serre_matrix(lattice);
    CHECK((multiply(s, multiply(s, s)) == minus_id) == cube_minus_id.count(lattice.ctx().name()));
  }
  CHECK(serre_matrix(KuLattice::make(FanoContext::index_two(2))) == identity2());
}

TEST_CASE("rotation on Y5") {
  const KuLattice y5 = KuLattice::make(FanoContext::index_two(5));
  const IntMatrix2 r = rotation_matrix(y5);
  CHECK(r == IntMatrix2{{{-4, -5}, {1, 1}}});
  CHECK_THROWS_AS(rotation_matrix(KuLattice::make(FanoContext::index_two(3))), DomainError);
  const QuadraticForm q5 = quadratic_form(y5);
  CHECK(apply(r, {1, 0}) == KuClass{-4, 1});
  CHECK(q5(-4, 1) == 1);
  for (int i = 0; i < 100; ++i) {
    const KuClass u{testing_support::rand_int(-1000, 1000), testing_support::rand_int(-1000, 1000)};
    CHECK(q5(apply(r, u)) == q5(u));
  }
  const auto forward = rotation_orbit(y5, {1, 0}, 3);
  CHECK(forward == std::vector<KuClass>{{1, 0}, {-4, 1}, {11, -3}, {-29, 8}});
  const auto back = rotation_orbit(y5, {1, 0}, -1);
  CHECK(apply(r, back[1]) == KuClass{1, 0});
}

TEST_CASE("pell equations") {
  auto has = [](const auto& sols, std::int64_t x, std::int64_t y) {
    return std::find(sols.begin(), sols.end(), std::make_pair(x, y)) != sols.end();
  };
  const auto one = pell_solve(5, 1, 100);
  for (auto [x, y] : std::vector<std::pair<int, int>>{{1, 0}, {-1, 0}, {9, 4}, {-9, 4}, {9, -4}, {-9, -4}}) {
    CHECK(has(one, x, y));
  }
  const auto four = pell_solve(5, 4, 100);
  for (auto [x, y] : std::vector<std::pair<int, int>>{{2, 0}, {3, 1}, {-3, -1}, {7, 3}, {-7, 3}}) {
    CHECK(has(four, x, y));
  }
  CHECK(pell_solve(5, 2, 1000).empty());
  CHECK_THROWS_AS(pell_solve(4, 1, 10), DomainError);
  CHECK_THROWS_AS(pell_solve(0, 1, 10), DomainError);
  // Oracle: brute force over both coordinates.
  for (std::int64_t n : {-4, -1, 1, 4, 11}) {
    std::vector<std::pair<std::int64_t, std::int64_t>> expected;
    for (std::int64_t x = -60; x <= 60; ++x) {
      for (std::int64_t y = -60; y <= 60; ++y) {
        if (x * x - 5 * y * y == n) expected.emplace_back(x, y);
      }
    }
    CHECK(pell_solve(5, n, 60) == expected);
  }
}

TEST_CASE("Y5 (-1)-classes form two rotation orbits") {
  const KuLattice y5 = KuLattice::make(FanoContext::index_two(5));
  const auto classes = enumerate_classes(y5, 1, 50, false);
  std::set<KuClass> covered;
  for (int sign : {1, -1}) {
    for (int dir : {12, -12}) {
      for (auto u : rotation_orbit(y5, {sign, 0}, dir)) covered.insert(u);
    }
  }
  for (auto u : classes) CHECK(covered.count(u) == 1);
}

TEST_CASE("pairing systems") {
  const KuLattice y5 = KuLattice::make(FanoContext::index_two(5));
  const auto solutions = pairing_system_solve(y5, {2, 0}, {{-1, -1}});
  REQUIRE(solutions.size() == 1);
  CHECK(solutions[0].sub == KuClass{1, 0});
  CHECK(solutions[0].quot == KuClass{1, 0});
  CHECK(pairing_system_solve(y5, {2, 0}, {{0, -2}}).empty());
  for (const auto& lattice : all_lattices()) {
    const std::int64_t vv = self_intersection(lattice, {1, 0});
    const auto found = pairing_system_solve(lattice, {2, 0}, {{vv, vv}});
    CHECK(std::find(found.begin(), found.end(), Decomposition{{1, 0}, {1, 0}, 0}) != found.end());
  }
}
