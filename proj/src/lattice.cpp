#include "fanowalls/lattice.hpp"

#include <vector>

namespace fanowalls {

FanoContext FanoContext::make(int index, int degree) {
  if (index != 1 && index != 2) {
    throw DomainError("index must be 1 or 2, got " + std::to_string(index));
  }
  if (degree <= 0) throw DomainError("degree must be positive");
  if (index == 2 && degree > 5) {
    throw DomainError("index 2 threefolds have degree 1..5, got " + std::to_string(degree));
  }
  return FanoContext(index, degree);
}

int FanoContext::genus() const {
  if (index_ != 1 || degree_ % 2 != 0) {
    throw DomainError("genus is defined only for index 1 and even degree");
  }
  return degree_ / 2 + 1;
}

Rational FanoContext::todd_constant() const {
  Rational t(index_ * index_ * degree_);
  t += make_rational(24, index_);
  t /= 12;
  return t;
}

std::string FanoContext::name() const {
  return (index_ == 2 ? "Y" : "X") + std::to_string(degree_);
}

ChernCharacter ChernCharacter::line_bundle(FanoContext ctx, std::int64_t k) {
  return twist(unit(ctx), Rational(-k));
}

void require_same_context(const ChernCharacter& a, const ChernCharacter& b) {
  if (!(a.ctx == b.ctx)) {
    throw ContextMismatch("classes live on different threefolds (" + a.ctx.name() + " vs " +
                          b.ctx.name() + ")");
  }
}

ChernCharacter& ChernCharacter::operator+=(const ChernCharacter& o) {
  require_same_context(*this, o);
  r += o.r;
  c += o.c;
  m += o.m;
  n += o.n;
  return *this;
}

ChernCharacter& ChernCharacter::operator-=(const ChernCharacter& o) {
  require_same_context(*this, o);
  r -= o.r;
  c -= o.c;
  m -= o.m;
  n -= o.n;
  return *this;
}

std::strong_ordering operator<=>(const ChernCharacter& a, const ChernCharacter& b) {
  require_same_context(a, b);
  for (auto cmp_result : {compare(a.r, b.r), compare(a.c, b.c), compare(a.m, b.m),
                          compare(a.n, b.n)}) {
    if (cmp_result != 0) return cmp_result;
  }
  return std::strong_ordering::equal;
}

namespace {

std::string format_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::string out;
  for (const auto& [coef, sym] : terms) {
    if (coef == 0) continue;
    const bool negative = coef < 0;
    const Rational mag = negative ? Rational(-coef) : coef;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (sym.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag);
      out += sym;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string ChernCharacter::str() const {
  return format_terms({{r, ""}, {c, "H"}, {m, "L"}, {n, "P"}});
}

std::string ChernCharacter::str_h_units() const {
  const Rational d(ctx.degree());
  return format_terms({{r, ""}, {c, "H"}, {m / d, "H^2"}, {n / d, "H^3"}});
}

ChernCharacter from_chern_classes(FanoContext ctx, std::int64_t rank, std::int64_t c1,
                                  const Rational& c2, const Rational& c3) {
  const Rational d(ctx.degree());
  const Rational a(c1);
  Rational ch2 = a * a * d / 2 - c2;
  Rational ch3 = (a * a * a * d - 3 * a * c2 + 3 * c3) / 6;
  return {ctx, Rational(rank), a, ch2, ch3};
}

ChernCharacter multiply(const ChernCharacter& a, const ChernCharacter& b) {
  require_same_context(a, b);
  const Rational d(a.ctx.degree());
  return {a.ctx, a.r * b.r, a.r * b.c + a.c * b.r, a.r * b.m + a.m * b.r + a.c * b.c * d,
          a.r * b.n + a.n * b.r + a.c * b.m + a.m * b.c};
}

ChernCharacter twist(const ChernCharacter& ch, const Rational& beta) {
  const Rational d(ch.ctx.degree());
  const Rational b2 = beta * beta;
  const Rational b3 = b2 * beta;
  return {ch.ctx, ch.r, ch.c - beta * ch.r, ch.m - beta * ch.c * d + b2 / 2 * ch.r * d,
          ch.n - beta * ch.m + b2 / 2 * ch.c * d - b3 / 6 * ch.r * d};
}

ChernCharacter dual(const ChernCharacter& ch) { return {ch.ctx, ch.r, -ch.c, ch.m, -ch.n}; }

namespace {

// int p . td(X) for p = (r, c, m, n).
Rational integrate_against_todd(const ChernCharacter& p) {
  return p.r + p.c * p.ctx.todd_constant() + p.m * make_rational(p.ctx.index(), 2) + p.n;
}

}  // namespace

Rational euler(const ChernCharacter& e, const ChernCharacter& f) {
  return integrate_against_todd(multiply(dual(e), f));
}

Rational euler_char(const ChernCharacter& ch) { return integrate_against_todd(ch); }

HilbertPoly hilbert_polynomial(const ChernCharacter& ch) {
  // Expand chi(twist(ch, -k)) in k.
  const Rational d(ch.ctx.degree());
  const Rational half_index = make_rational(ch.ctx.index(), 2);
  const Rational t = ch.ctx.todd_constant();
  HilbertPoly p;
  p.rank = ch.r;
  p.coeff[0] = euler_char(ch);
  p.coeff[1] = ch.r * t + ch.c * d * half_index + ch.m;
  p.coeff[2] = ch.r * d * half_index / 2 + ch.c * d / 2;
  p.coeff[3] = ch.r * d / 6;
  return p;
}

bool lattice_member(const ChernCharacter& ch) {
  if (!is_integer(ch.r) || !is_integer(ch.c)) return false;
  for (std::int64_t k = 0; k <= 2; ++k) {
    if (!is_integer(euler_char(tensor_line_bundle(ch, k)))) return false;
  }
  return true;
}

std::optional<Rational> ch2_coset(FanoContext ctx, const Rational& r, const Rational& c) {
  if (!is_integer(r) || !is_integer(c)) return std::nullopt;
  // chi(ch(k)) - chi(ch) = m k + (terms in r, c); the k = 1 difference fixes
  // m mod Z and the second difference must be integral on its own.
  const ChernCharacter probe(ctx, r, c, 0, 0);
  const HilbertPoly p = hilbert_polynomial(probe);
  const Rational second = 2 * p.coeff[2] + 6 * p.coeff[3];
  if (!is_integer(second)) return std::nullopt;
  const Rational first = p.coeff[1] + p.coeff[2] + p.coeff[3];
  Rational m0 = -first;
  m0 -= Rational(floor_of(m0));
  return m0;
}

std::optional<ChernCharacter> lift_to_lattice(FanoContext ctx, const Rational& r,
                                              const Rational& c, const Rational& m) {
  ChernCharacter ch(ctx, r, c, m, 0);
  ch.n = -euler_char(ch);
  if (!lattice_member(ch)) return std::nullopt;
  return ch;
}

}  // namespace fanowalls
