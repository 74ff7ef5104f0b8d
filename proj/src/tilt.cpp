#include "fanowalls/tilt.hpp"

namespace fanowalls {

TiltPoint TiltPoint::make(Rational t, Rational beta) {
  if (t < 0) throw DomainError("t = alpha^2 must be non-negative, got " + to_string(t));
  return {std::move(t), std::move(beta)};
}

Order to_order(std::strong_ordering o) {
  if (o < 0) return Order::LT;
  if (o > 0) return Order::GT;
  return Order::EQ;
}

const char* order_name(Order o) {
  switch (o) {
    case Order::LT: return "LT";
    case Order::EQ: return "EQ";
    case Order::GT: return "GT";
  }
  return "?";
}

ChargeValue central_charge(const ChernCharacter& ch, const TiltPoint& pt) {
  const ChernCharacter tw = twist(ch, pt.beta);
  const Rational d(ch.ctx.degree());
  return {pt.t * d * tw.r / 2 - tw.m, tw.c * d};
}

Slope slope_of(const ChargeValue& z) {
  if (z.is_zero()) throw DomainError("zero central charge has no slope");
  if (z.im == 0) return Slope::infinity();
  return Slope::finite(-z.re / z.im);
}

Slope slope(const ChernCharacter& ch, const TiltPoint& pt) {
  return slope_of(central_charge(ch, pt));
}

Rational discriminant(const ChernCharacter& ch) {
  const Rational d(ch.ctx.degree());
  const Rational h2c1 = ch.c * d;
  return h2c1 * h2c1 - 2 * d * ch.r * ch.m;
}

Rational bms_inequality(const ChernCharacter& ch, const TiltPoint& pt) {
  const ChernCharacter tw = twist(ch, pt.beta);
  const Rational d(ch.ctx.degree());
  return pt.t * discriminant(ch) + 4 * tw.m * tw.m - 6 * (tw.c * d) * tw.n;
}

Slope rotated_slope(const ChernCharacter& ch, const TiltPoint& pt, const Slope& mu0) {
  if (mu0.is_infinite() || mu0.value() != 0) {
    throw DomainError("rotated charge is only supported for mu0 = 0, got " + mu0.str());
  }
  // Z^0 = -i Z, so Re Z^0 = im Z and Im Z^0 = -re Z.
  const ChargeValue z = central_charge(ch, pt);
  if (z.re == 0) return Slope::infinity();
  return Slope::finite(z.im / z.re);
}

Order slope_compare(const ChernCharacter& a, const ChernCharacter& b, const TiltPoint& pt) {
  return to_order(slope(a, pt) <=> slope(b, pt));
}

ChargeValue apply(const Matrix2& transform, const ChargeValue& z) {
  return {transform[0][0] * z.re + transform[0][1] * z.im,
          transform[1][0] * z.re + transform[1][1] * z.im};
}

bool in_upper_half_plane(const ChargeValue& z) { return z.im > 0 || (z.im == 0 && z.re < 0); }

bool gl_slope_order_invariance(const ChernCharacter& a, const ChernCharacter& b,
                               const TiltPoint& pt, const Matrix2& transform) {
  const Rational det = transform[0][0] * transform[1][1] - transform[0][1] * transform[1][0];
  if (det <= 0) throw DomainError("transform must have positive determinant");
  const ChargeValue za = central_charge(a, pt);
  const ChargeValue zb = central_charge(b, pt);
  const Order before = to_order(slope_of(za) <=> slope_of(zb));
  const Order after = to_order(slope_of(fanowalls::apply(transform, za)) <=> slope_of(fanowalls::apply(transform, zb)));
  return before == after;
}

}  // namespace fanowalls
