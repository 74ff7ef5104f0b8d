#pragma once

// Tilt-stability numerics on the (alpha, beta) half-plane. alpha never
// appears directly: points carry t = alpha^2 so every quantity stays in Q.

#include <string>

#include "fanowalls/kuznetsov.hpp"
#include "fanowalls/lattice.hpp"

namespace fanowalls {

struct TiltPoint {
  Rational t;     // alpha^2, t >= 0
  Rational beta;

  static TiltPoint make(Rational t, Rational beta);
  friend bool operator==(const TiltPoint&, const TiltPoint&) = default;
};

struct ChargeValue {
  Rational re;
  Rational im;

  bool is_zero() const { return re == 0 && im == 0; }
  ChargeValue& operator+=(const ChargeValue& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend ChargeValue operator+(ChargeValue a, const ChargeValue& b) { return a += b; }
  friend bool operator==(const ChargeValue&, const ChargeValue&) = default;
};

/// A slope: a rational or +infinity, with +infinity above every rational.
class Slope {
 public:
  static Slope finite(Rational v) { return Slope(false, std::move(v)); }
  static Slope infinity() { return Slope(true, 0); }

  bool is_infinite() const { return infinite_; }
  /// Only meaningful for finite slopes.
  const Rational& value() const { return value_; }
  std::string str() const { return infinite_ ? "+inf" : to_string(value_); }

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return compare(a.value_, b.value_);
  }

 private:
  Slope(bool infinite, Rational v) : infinite_(infinite), value_(std::move(v)) {}
  bool infinite_;
  Rational value_;
};

enum class Order { LT, EQ, GT };

Order to_order(std::strong_ordering o);
const char* order_name(Order o);

/// Z = 1/2 t D r' - m' + i D c' with (r', c', m', n') = ch^beta.
ChargeValue central_charge(const ChernCharacter& ch, const TiltPoint& pt);

/// -re/im, +infinity when im = 0. Throws DomainError on the zero charge.
Slope slope_of(const ChargeValue& z);

Slope slope(const ChernCharacter& ch, const TiltPoint& pt);

/// (H^2 ch_1)^2 - 2 H^3 ch_0 . H ch_2 = (cD)^2 - 2 D r m.
Rational discriminant(const ChernCharacter& ch);

/// t Delta + 4 (m')^2 - 6 (c' D) n' at pt; the inequality is value >= 0.
Rational bms_inequality(const ChernCharacter& ch, const TiltPoint& pt);

/// Slope of the rotated charge Z / u where -Re u / Im u = mu0. Only mu0 = 0
/// (u = i) is supported: the value is im Z / re Z, and +infinity whenever
/// re Z = 0. Other targets throw DomainError.
Slope rotated_slope(const ChernCharacter& ch, const TiltPoint& pt, const Slope& mu0);

Order slope_compare(const ChernCharacter& a, const ChernCharacter& b, const TiltPoint& pt);

/// Compares the slopes of two charges, then of their images under T, and
/// reports whether the two comparisons agree. Throws DomainError if
/// det T <= 0. Agreement is guaranteed when both charges and both images lie
/// in the half-plane of phases (0, 1].
bool gl_slope_order_invariance(const ChernCharacter& a, const ChernCharacter& b,
                               const TiltPoint& pt, const Matrix2& transform);

ChargeValue apply(const Matrix2& transform, const ChargeValue& z);

/// True when z has phase in (0, 1]: im > 0, or im = 0 and re < 0.
bool in_upper_half_plane(const ChargeValue& z);

}  // namespace fanowalls
