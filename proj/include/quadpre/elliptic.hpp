#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "quadpre/error.hpp"
#include "quadpre/rat.hpp"

namespace quadpre {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q. Singular models are
/// representable; is_singular() reports them.
struct WeierstrassCurve {
  Rat a1, a2, a3, a4, a6;

  Rat b2() const { return a1 * a1 + Rat(4) * a2; }
  Rat b4() const { return Rat(2) * a4 + a1 * a3; }
  Rat b6() const { return a3 * a3 + Rat(4) * a6; }
  Rat b8() const {
    return a1 * a1 * a6 + Rat(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  }
  Rat c4() const { return b2() * b2() - Rat(24) * b4(); }
  Rat c6() const {
    Rat B2 = b2();
    return -B2 * B2 * B2 + Rat(36) * B2 * b4() - Rat(216) * b6();
  }
  Rat discriminant() const {
    Rat B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - Rat(8) * B4 * B4 * B4 - Rat(27) * B6 * B6 + Rat(9) * B2 * B4 * B6;
  }
  bool is_singular() const { return discriminant().is_zero(); }

  /// c4^3 / Delta; absent on singular models.
  std::optional<Rat> j_invariant() const {
    Rat d = discriminant();
    if (d.is_zero()) return std::nullopt;
    Rat C4 = c4();
    return C4 * C4 * C4 / d;
  }

  /// lhs - rhs of the defining equation at (x, y).
  Rat residue(const Rat& x, const Rat& y) const {
    return y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6);
  }

  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

/// Short-hand for y^2 = x^3 + a2 x^2 + a4 x + a6.
inline WeierstrassCurve curve_from_cubic(const Rat& a2, const Rat& a4, const Rat& a6) {
  return {Rat(), a2, Rat(), a4, a6};
}

struct AffinePoint {
  Rat x, y;
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

struct Infinity {
  friend bool operator==(const Infinity&, const Infinity&) = default;
};

/// Point of E(Q): the identity at infinity or an affine point.
class ECPoint {
 public:
  ECPoint() = default;  // infinity
  ECPoint(Rat x, Rat y) : p_(AffinePoint{std::move(x), std::move(y)}) {}

  static ECPoint infinity() { return {}; }

  bool is_infinity() const { return std::holds_alternative<Infinity>(p_); }
  const Rat& x() const { return std::get<AffinePoint>(p_).x; }
  const Rat& y() const { return std::get<AffinePoint>(p_).y; }

  std::string str() const { return is_infinity() ? "O" : "(" + x().str() + ", " + y().str() + ")"; }

  friend bool operator==(const ECPoint&, const ECPoint&) = default;

 private:
  std::variant<Infinity, AffinePoint> p_;
};

class OffCurve : public std::invalid_argument {
 public:
  OffCurve(const ECPoint& p, const Rat& residue)
      : std::invalid_argument("point " + p.str() + " is not on the curve (residue " + residue.str() + ")"),
        residue_(residue) {}

  const Rat& residue() const noexcept { return residue_; }

 private:
  Rat residue_;
};

inline bool on_curve(const WeierstrassCurve& e, const ECPoint& p) {
  return p.is_infinity() || e.residue(p.x(), p.y()).is_zero();
}

inline void require_on_curve(const WeierstrassCurve& e, const ECPoint& p) {
  if (p.is_infinity()) return;
  Rat res = e.residue(p.x(), p.y());
  if (!res.is_zero()) throw OffCurve(p, res);
}

namespace detail {

// Chord-tangent addition for points already known to lie on e.
inline ECPoint add_unchecked(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const Rat& x1 = p.x();
  const Rat& y1 = p.y();
  const Rat& x2 = q.x();
  const Rat& y2 = q.y();
  Rat lambda;
  if (x1 == x2) {
    Rat ysum = y1 + y2 + e.a1 * x2 + e.a3;
    if (ysum.is_zero()) return ECPoint::infinity();
    lambda = (Rat(3) * x1 * x1 + Rat(2) * e.a2 * x1 + e.a4 - e.a1 * y1) / (Rat(2) * y1 + e.a1 * x1 + e.a3);
  } else {
    lambda = (y2 - y1) / (x2 - x1);
  }
  Rat nu = y1 - lambda * x1;
  Rat x3 = lambda * lambda + e.a1 * lambda - e.a2 - x1 - x2;
  Rat y3 = -(lambda + e.a1) * x3 - nu - e.a3;
  return {x3, y3};
}

}  // namespace detail

inline ECPoint ec_neg(const WeierstrassCurve& e, const ECPoint& p) {
  if (p.is_infinity()) return p;
  return {p.x(), -p.y() - e.a1 * p.x() - e.a3};
}

inline ECPoint ec_add(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& q) {
  require_on_curve(e, p);
  require_on_curve(e, q);
  return detail::add_unchecked(e, p, q);
}

/// [n]P by double-and-add; negative n multiplies -P.
inline ECPoint ec_mul(const WeierstrassCurve& e, long n, const ECPoint& p) {
  require_on_curve(e, p);
  ECPoint base = n < 0 ? ec_neg(e, p) : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1UL : static_cast<unsigned long>(n);
  ECPoint acc;
  while (k != 0) {
    if ((k & 1UL) != 0) acc = detail::add_unchecked(e, acc, base);
    k >>= 1UL;
    if (k != 0) base = detail::add_unchecked(e, base, base);
  }
  return acc;
}

/// Order of a point of E(Q): 1..10 or 12, or nullopt for infinite order.
/// Mazur's theorem bounds rational torsion orders, so checking multiples up
/// to 12 is conclusive.
inline std::optional<unsigned> point_order(const WeierstrassCurve& e, const ECPoint& p) {
  require_on_curve(e, p);
  if (e.is_singular()) throw ContractViolation("point_order: singular curve");
  ECPoint acc = p;
  for (unsigned n = 1; n <= 12; ++n) {
    if (acc.is_infinity()) return n;
    acc = detail::add_unchecked(e, acc, p);
  }
  return std::nullopt;
}

}  // namespace quadpre
