#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "quadpre/bigint.hpp"
#include "quadpre/elliptic.hpp"
#include "quadpre/error.hpp"
#include "quadpre/factor.hpp"
#include "quadpre/rat.hpp"

namespace quadpre {

/// Z/n1 x Z/n2 with n1 | n2, plus generators and the full list of torsion
/// points (identity first).
struct TorsionGroup {
  unsigned n1 = 1;
  unsigned n2 = 1;
  std::vector<ECPoint> generators;
  std::vector<ECPoint> points;

  unsigned order() const { return n1 * n2; }

  /// True when Z/m1 x Z/m2 (m1 | m2) embeds in this group.
  bool contains(unsigned m1, unsigned m2) const { return n1 % m1 == 0 && n2 % m2 == 0; }
};

/// Integral model y^2 = x^3 + alpha x^2 + beta x + gamma reached from a long
/// Weierstrass model by y -> y + (a1 x + a3)/2 and (x, y) -> (x/u^2, y/u^3).
struct IntegralCubicModel {
  BigInt alpha, beta, gamma;
  BigInt u;
  BigInt discriminant;  // of the cubic

  ECPoint to_original(const WeierstrassCurve& e, const BigInt& X, const BigInt& Y) const {
    Rat x(X, u * u);
    Rat y(Y, u * u * u);
    y -= (e.a1 * x + e.a3) / Rat(2);
    return {x, y};
  }
};

namespace detail {

inline BigInt ceil_div(const BigInt& a, unsigned long b) {
  BigInt q;
  mpz_cdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), b);
  return q;
}

inline BigInt floor_div(const BigInt& a, unsigned long b) {
  BigInt q;
  mpz_fdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), b);
  return q;
}

struct MonicCubic {
  BigInt a, b, c;  // x^3 + a x^2 + b x + c
  BigInt operator()(const BigInt& x) const { return ((x + a) * x + b) * x + c; }
};

// Integer root of an increasing (or decreasing, sign = -1) function on [lo, hi].
inline std::optional<BigInt> monotone_root(const MonicCubic& f, BigInt lo, BigInt hi, int direction) {
  if (lo > hi) return std::nullopt;
  auto value = [&](const BigInt& x) { return direction * sgn(f(x)); };
  if (value(lo) > 0 || value(hi) < 0) return std::nullopt;
  while (lo < hi) {
    BigInt mid = lo + (hi - lo) / 2;
    if (value(mid) < 0) lo = mid + 1;
    else hi = mid;
  }
  if (sgn(f(lo)) == 0) return lo;
  return std::nullopt;
}

/// All integer roots of a monic integer cubic.
inline std::vector<BigInt> integer_roots(const MonicCubic& f) {
  std::set<BigInt> roots;
  BigInt bound = 1 + std::max({abs(f.a), abs(f.b), abs(f.c)});
  // f' = 3x^2 + 2a x + b; critical points (-a +- s)/3 with s^2 = a^2 - 3b
  BigInt disc = f.a * f.a - 3 * f.b;
  if (sgn(disc) <= 0) {
    if (auto r = monotone_root(f, -bound, bound, 1)) roots.insert(*r);
  } else {
    BigInt r = isqrt_floor(disc);  // s in [r, r + 1)
    BigInt lo_minus = floor_div(-f.a - r - 1, 3);
    BigInt hi_minus = ceil_div(-f.a - r, 3);
    BigInt lo_plus = floor_div(-f.a + r, 3);
    BigInt hi_plus = ceil_div(-f.a + r + 1, 3);
    for (BigInt x = lo_minus; x <= hi_minus; ++x)
      if (sgn(f(x)) == 0) roots.insert(x);
    for (BigInt x = lo_plus; x <= hi_plus; ++x)
      if (sgn(f(x)) == 0) roots.insert(x);
    if (auto v = monotone_root(f, -bound, lo_minus, 1)) roots.insert(*v);
    if (auto v = monotone_root(f, hi_minus, lo_plus, -1)) roots.insert(*v);
    if (auto v = monotone_root(f, hi_plus, bound, 1)) roots.insert(*v);
  }
  return {roots.begin(), roots.end()};
}

inline void square_divisors(const Factorization& fac, std::size_t i, const BigInt& acc, std::vector<BigInt>& out) {
  if (i == fac.size()) {
    out.push_back(acc);
    return;
  }
  BigInt cur = acc;
  for (unsigned k = 0; k <= fac[i].second / 2; ++k) {
    square_divisors(fac, i + 1, cur, out);
    cur *= fac[i].first;
  }
}

}  // namespace detail

inline IntegralCubicModel integral_cubic_model(const WeierstrassCurve& e, const FactorBudget& budget = {}) {
  // y^2 = x^3 + (b2/4) x^2 + (b4/2) x + b6/4
  const std::array<Rat, 3> coeffs{e.b2() / Rat(4), e.b4() / Rat(2), e.b6() / Rat(4)};
  BigInt den = 1;
  for (const auto& q : coeffs) den = big_lcm(den, q.den());
  BigInt u = 1;
  if (den != 1) {
    for (const auto& [p, unused] : factorize(den, budget)) {
      unsigned need = 0;
      for (unsigned k = 0; k < 3; ++k) {
        unsigned v = static_cast<unsigned>(mpz_remove(BigInt().get_mpz_t(), coeffs[k].den().get_mpz_t(), p.get_mpz_t()));
        unsigned weight = 2 * (k + 1);
        need = std::max(need, (v + weight - 1) / weight);
      }
      u *= big_pow(p, need);
    }
  }
  auto scaled = [&](const Rat& q, unsigned long w) {
    Rat s = q * Rat(big_pow(u, w));
    if (!s.is_integer()) throw ContractViolation("integral_cubic_model: scaling failed");
    return s.num();
  };
  IntegralCubicModel m{scaled(coeffs[0], 2), scaled(coeffs[1], 4), scaled(coeffs[2], 6), u, 0};
  const BigInt &a = m.alpha, &b = m.beta, &c = m.gamma;
  m.discriminant = a * a * b * b - 4 * b * b * b - 4 * a * a * a * c - 27 * c * c + 18 * a * b * c;
  return m;
}

namespace detail {

using ZPoly = std::vector<BigInt>;  // lowest degree first

inline void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

inline ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), BigInt(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
  return a;
}

inline BigInt zeval(const ZPoly& p, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline ZPoly zderivative(const ZPoly& p) {
  ZPoly r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<unsigned long>(i));
  ztrim(r);
  return r;
}

/// f_0..f_nmax on y^2 = x^3 + alpha x^2 + beta x + gamma, where f_n = psi_n
/// for odd n and psi_n / psi_2 for even n.
inline std::vector<ZPoly> division_polynomials(const IntegralCubicModel& m, unsigned nmax) {
  const BigInt b2 = 4 * m.alpha, b4 = 2 * m.beta, b6 = 4 * m.gamma;
  const BigInt b8 = 4 * m.alpha * m.gamma - m.beta * m.beta;
  const ZPoly F4{b6, 2 * b4, b2, BigInt(4)};
  const ZPoly F4sq = zmul(F4, F4);
  std::vector<ZPoly> f(std::max(nmax + 1, 5U));
  f[0] = {};
  f[1] = {BigInt(1)};
  f[2] = {BigInt(1)};
  f[3] = {b8, 3 * b6, 3 * b4, b2, BigInt(3)};
  f[4] = {b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, BigInt(2)};
  for (unsigned n = 5; n <= nmax; ++n) {
    const unsigned k = n / 2;
    auto cube = [](const ZPoly& p) { return zmul(zmul(p, p), p); };
    auto sq = [](const ZPoly& p) { return zmul(p, p); };
    if (n % 2 == 1) {
      ZPoly lhs = zmul(f[k + 2], cube(f[k]));
      ZPoly rhs = zmul(f[k - 1], cube(f[k + 1]));
      if (k % 2 == 0) lhs = zmul(F4sq, lhs);
      else rhs = zmul(F4sq, rhs);
      f[n] = zsub(lhs, rhs);
    } else {
      f[n] = zmul(f[k], zsub(zmul(f[k + 2], sq(f[k - 1])), zmul(f[k - 2], sq(f[k + 1]))));
    }
  }
  f.resize(nmax + 1);
  return f;
}

inline bool small_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Integer roots of a squarefree integer polynomial: simple roots mod a
/// small prime are lifted by Newton iteration past twice the Cauchy bound.
inline std::vector<BigInt> integer_roots_hensel(ZPoly f) {
  ztrim(f);
  std::vector<BigInt> out;
  if (f.size() <= 1) return out;
  if (f[0] == 0) {
    out.push_back(0);
    std::size_t z = 0;
    while (f[z] == 0) ++z;
    f.erase(f.begin(), f.begin() + static_cast<long>(z));
    if (f.size() <= 1) return out;
  }
  const ZPoly df = zderivative(f);
  BigInt cauchy = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) cauchy = std::max(cauchy, BigInt(abs(f[i])));
  cauchy = cauchy / abs(f.back()) + 2;
  const BigInt window = 2 * cauchy + 1;

  for (unsigned long p = 101;; p += 2) {
    if (!small_prime(p) || mpz_divisible_ui_p(f.back().get_mpz_t(), p) != 0) continue;
    std::vector<unsigned long> fp, dfp;
    for (const auto& c : f) fp.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    for (const auto& c : df) dfp.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    auto eval_mod = [p](const std::vector<unsigned long>& poly, unsigned long x) {
      unsigned long acc = 0;
      for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (acc * x + *it) % p;
      return acc;
    };
    std::vector<unsigned long> roots;
    bool simple = true;
    for (unsigned long x = 0; x < p && simple; ++x) {
      if (eval_mod(fp, x) != 0) continue;
      if (eval_mod(dfp, x) == 0) simple = false;
      roots.push_back(x);
    }
    if (!simple) continue;
    const BigInt P(p);
    for (unsigned long r0 : roots) {
      BigInt r(r0), mod = P;
      while (mod <= window) {
        mod *= mod;
        BigInt d = zeval(df, r) % mod, inv;
        if (d < 0) d += mod;
        if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t()) == 0) break;
        r = (r - zeval(f, r) * inv) % mod;
        if (r < 0) r += mod;
      }
      if (2 * r > mod) r -= mod;
      if (zeval(f, r) == 0) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
}

inline BigInt square_divisor_count(const Factorization& fac) {
  BigInt n = 1;
  for (const auto& [p, e] : fac) n *= e / 2 + 1;
  return n;
}

}  // namespace detail

/// Candidate-count limit above which torsion_subgroup switches from the
/// y^2 | D enumeration to division-polynomial roots.
inline constexpr unsigned long kLutzNagellEnumerationLimit = 200'000;

enum class TorsionMethod { Auto, Enumerate, DivisionPolynomials };

/// Rational torsion subgroup on the integral model, where every torsion
/// point has integer coordinates with Y = 0 or Y^2 | disc(cubic)
/// (Lutz-Nagell). Candidates come from the Y^2 | D enumeration when the
/// number of square divisors is at most kLutzNagellEnumerationLimit, or
/// from the integer roots of f_7, f_8, f_9, f_10, f_12 otherwise (every
/// torsion order allowed by Mazur divides one of these); either way each
/// candidate passes the Lutz-Nagell test and point_order. Throws
/// FactorizationBudgetExceeded when the discriminant cannot be factored
/// within `budget`.
inline TorsionGroup torsion_subgroup(const WeierstrassCurve& e, const FactorBudget& budget = {},
                                     TorsionMethod method = TorsionMethod::Auto) {
  if (e.is_singular()) throw ContractViolation("torsion_subgroup: singular curve");
  const IntegralCubicModel m = integral_cubic_model(e, budget);
  const Factorization fac = factorize(m.discriminant, budget);
  if (method == TorsionMethod::Auto)
    method = detail::square_divisor_count(fac) <= kLutzNagellEnumerationLimit ? TorsionMethod::Enumerate
                                                                              : TorsionMethod::DivisionPolynomials;

  TorsionGroup g;
  g.points.push_back(ECPoint::infinity());
  std::set<std::pair<Rat, Rat>> seen;
  auto consider = [&](const BigInt& x, const BigInt& y) {
    const BigInt y2 = y * y;
    if (y != 0 && !divides(y2, m.discriminant)) return;
    ECPoint p = m.to_original(e, x, y);
    if (!seen.insert({p.x(), p.y()}).second) return;
    if (point_order(e, p)) g.points.push_back(p);
  };

  if (method == TorsionMethod::Enumerate) {
    std::vector<BigInt> ys{BigInt(0)};
    detail::square_divisors(fac, 0, BigInt(1), ys);

    // x^3 + alpha x^2 + beta x + gamma = Y^2 must be solvable mod small moduli
    static constexpr std::array<unsigned long, 12> kSieve{5, 7, 9, 11, 13, 16, 17, 19, 23, 29, 31, 37};
    std::vector<std::vector<bool>> reachable;
    for (unsigned long l : kSieve) {
      std::vector<bool> hit(l, false);
      for (unsigned long x = 0; x < l; ++x) {
        BigInt v = ((BigInt(x) + m.alpha) * x + m.beta) * x + m.gamma;
        hit[mpz_fdiv_ui(v.get_mpz_t(), l)] = true;
      }
      reachable.push_back(std::move(hit));
    }
    for (const BigInt& y : ys) {
      bool feasible = true;
      for (std::size_t i = 0; i < kSieve.size() && feasible; ++i) {
        unsigned long ym = mpz_fdiv_ui(y.get_mpz_t(), kSieve[i]);
        feasible = reachable[i][(ym * ym) % kSieve[i]];
      }
      if (!feasible) continue;
      detail::MonicCubic f{m.alpha, m.beta, m.gamma - y * y};
      for (const BigInt& x : detail::integer_roots(f)) {
        consider(x, y);
        if (y != 0) consider(x, -y);
      }
    }
  } else {
    detail::MonicCubic cubic{m.alpha, m.beta, m.gamma};
    for (const BigInt& x : detail::integer_roots(cubic)) consider(x, BigInt(0));
    const auto divpolys = detail::division_polynomials(m, 12);
    std::set<BigInt> xs;
    for (unsigned n : {7U, 8U, 9U, 10U, 12U})
      for (const BigInt& x : detail::integer_roots_hensel(divpolys[n])) xs.insert(x);
    for (const BigInt& x : xs) {
      BigInt v = cubic(x);
      if (sgn(v) < 0) continue;
      auto y = int_sqrt(v);
      if (!y) continue;
      consider(x, *y);
      if (*y != 0) consider(x, -*y);
    }
  }

  const auto n = static_cast<unsigned>(g.points.size());
  unsigned two_torsion = 0;
  for (const auto& p : g.points)
    if (!p.is_infinity() && point_order(e, p) == 2u) ++two_torsion;
  if (two_torsion == 3) {
    g.n1 = 2;
    g.n2 = n / 2;
  } else {
    g.n1 = 1;
    g.n2 = n;
  }
  for (const auto& p : g.points) {
    if (point_order(e, p) == g.n2) {
      g.generators.push_back(p);
      break;
    }
  }
  if (g.n1 == 2) {
    ECPoint in_cyclic = ec_mul(e, g.n2 / 2, g.generators.front());
    for (const auto& p : g.points) {
      if (!p.is_infinity() && point_order(e, p) == 2u && !(p == in_cyclic)) {
        g.generators.push_back(p);
        break;
      }
    }
  }
  return g;
}

}  // namespace quadpre
