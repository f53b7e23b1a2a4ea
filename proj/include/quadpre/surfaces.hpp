#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadpre/elliptic.hpp"
#include "quadpre/error.hpp"
#include "quadpre/rat.hpp"

namespace quadpre {

/// A fibre of one of the pre-image elliptic surfaces at a rational a.
struct SurfaceFiber {
  Rat a;
  WeierstrassCurve curve;
  std::vector<ECPoint> sections;  // E24: {T}; E222: {P, Q}
  std::optional<Rat> j;           // of the model; absent on singular fibres
  Rat discriminant;               // of the model (b2/b4/b6/b8 formula)
  bool singular = false;
};

/// Two first and four second pre-images:
///   v^2 = u^3 + (4a - 1)u^2 + 16a u + (64a^2 - 16a),  T(a) = (2, 8a + 2).
inline SurfaceFiber specialize_E24(const Rat& a) {
  WeierstrassCurve e = curve_from_cubic(Rat(4) * a - Rat(1), Rat(16) * a, Rat(64) * a * a - Rat(16) * a);
  SurfaceFiber f{a, e, {ECPoint(Rat(2), Rat(8) * a + Rat(2))}, e.j_invariant(), e.discriminant(), false};
  f.singular = f.discriminant.is_zero();
  return f;
}

/// The closed forms printed alongside the E24 model.
inline Rat e24_closed_discriminant(const Rat& a) { return a * pow(Rat(4) * a + Rat(1), 4); }
inline std::optional<Rat> e24_closed_j(const Rat& a) {
  Rat d = e24_closed_discriminant(a);
  if (d.is_zero()) return std::nullopt;
  return pow(Rat(16) * a * a - Rat(56) * a + Rat(1), 3) / d;
}

/// Two first, two second and two third pre-images:
///   v^2 = u^3 + (16a + 942/13)u^2 + (10048/13 a + 293084/169)u
///         + (1024a^2 + 1620800/169 a + 30250696/2197),
/// with sections P(a) = (-262/13, 32a + 8) and Q(a) = (-366/13, 32a + 8).
inline SurfaceFiber specialize_E222(const Rat& a) {
  const Rat a2 = Rat(16) * a + Rat(942) / Rat(13);
  const Rat a4 = Rat(10048) / Rat(13) * a + Rat(293084) / Rat(169);
  const Rat a6 = Rat(1024) * a * a + Rat(1620800) / Rat(169) * a + Rat(30250696) / Rat(2197);
  WeierstrassCurve e = curve_from_cubic(a2, a4, a6);
  const Rat y = Rat(32) * a + Rat(8);
  SurfaceFiber f{a, e, {ECPoint(Rat(-262) / Rat(13), y), ECPoint(Rat(-366) / Rat(13), y)},
                 e.j_invariant(), e.discriminant(), false};
  f.singular = f.discriminant.is_zero();
  return f;
}

inline Rat e222_closed_discriminant(const Rat& a) {
  Rat cubic = Rat(256) * a * a * a + Rat(368) * a * a + Rat(104) * a + Rat(23);
  return pow(Rat(4) * a + Rat(1), 2) * cubic;
}
inline std::optional<Rat> e222_closed_j(const Rat& a) {
  Rat d = e222_closed_discriminant(a);
  if (d.is_zero()) return std::nullopt;
  return pow(Rat(16) * a * a + Rat(3), 2) / d;
}

enum class TorsionKind { Z2xZ4, Z8, Z2xZ8, Z12 };

inline std::string_view to_string(TorsionKind k) {
  switch (k) {
    case TorsionKind::Z2xZ4: return "Z2xZ4";
    case TorsionKind::Z8: return "Z8";
    case TorsionKind::Z2xZ8: return "Z2xZ8";
    case TorsionKind::Z12: return "Z12";
  }
  return "?";
}

inline TorsionKind parse_torsion_kind(std::string_view s) {
  for (auto k : {TorsionKind::Z2xZ4, TorsionKind::Z8, TorsionKind::Z2xZ8, TorsionKind::Z12})
    if (to_string(k) == s) return k;
  throw ParseError("unknown torsion kind '" + std::string(s) + "'", 0);
}

/// Invariant factors (m1, m2) of the named group.
inline std::pair<unsigned, unsigned> invariant_factors(TorsionKind k) {
  switch (k) {
    case TorsionKind::Z2xZ4: return {2, 4};
    case TorsionKind::Z8: return {1, 8};
    case TorsionKind::Z2xZ8: return {2, 8};
    case TorsionKind::Z12: return {1, 12};
  }
  return {1, 1};
}

namespace detail {

// Z12 family constants, kept verbatim in one place.
struct Z12Constants {
  Rat n1_t2 = Rat::parse("13691470144");
  Rat n2_t2 = Rat::parse("13903463744");
  Rat lin = Rat::parse("235376");
  Rat den = Rat::parse("9527265101250297856000000");
  Rat pole = Rat::parse("117688");
};

inline const Z12Constants& z12() {
  static const Z12Constants k;
  return k;
}

}  // namespace detail

/// The family formula without the excluded-parameter check; nullopt only at
/// poles of the formula.
inline std::optional<Rat> torsion_family_formula(TorsionKind kind, const Rat& t) {
  const Rat one(1), four(4);
  switch (kind) {
    case TorsionKind::Z2xZ4:
      return -(t * t);
    case TorsionKind::Z8:
      return t * t * (t * t - Rat(2)) / four;
    case TorsionKind::Z2xZ8: {
      Rat t2 = t * t;
      Rat p = four * t2 - four * t - one;
      Rat q = four * t2 + four * t - one;
      return -(p * p * q * q) / (four * pow(four * t2 + one, 4));
    }
    case TorsionKind::Z12: {
      const auto& k = detail::z12();
      Rat d = k.den * pow(t, 6) * pow(k.pole * t - one, 2);
      if (d.is_zero()) return std::nullopt;
      Rat f1 = k.n1_t2 * t * t - k.lin * t + one;
      Rat f2 = k.n2_t2 * t * t - k.lin * t + one;
      return f1 * pow(f2, 3) / d;
    }
  }
  return std::nullopt;
}

inline std::vector<Rat> torsion_family_excluded(TorsionKind kind) {
  switch (kind) {
    case TorsionKind::Z2xZ4:
    case TorsionKind::Z2xZ8:
      return {Rat(0), Rat(1) / Rat(2), Rat(-1) / Rat(2)};
    case TorsionKind::Z8:
      return {Rat(0), Rat(1), Rat(-1)};
    case TorsionKind::Z12:
      return {Rat(0), Rat(1) / detail::z12().pole};
  }
  return {};
}

/// Parameter a for which E24(a) carries the named torsion; nullopt for the
/// excluded parameters of the family.
inline std::optional<Rat> torsion_family_a(TorsionKind kind, const Rat& t) {
  for (const auto& bad : torsion_family_excluded(kind))
    if (t == bad) return std::nullopt;
  return torsion_family_formula(kind, t);
}

/// v^2 = u^3 + u^2 - 9u + 7, the 244 curve over a = -1/4, with its point
/// (3, 4) of infinite order.
struct Curve244 {
  WeierstrassCurve curve;
  ECPoint sample_point;
};

inline Curve244 curve_244() { return {curve_from_cubic(Rat(1), Rat(-9), Rat(7)), ECPoint(Rat(3), Rat(4))}; }

}  // namespace quadpre
