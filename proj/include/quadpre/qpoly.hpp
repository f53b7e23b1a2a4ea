#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quadpre/error.hpp"
#include "quadpre/rat.hpp"

namespace quadpre {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// is the empty vector.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(long constant) : QPoly(Rat(constant)) {}
  explicit QPoly(const Rat& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
  }
  explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  QPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

  static QPoly monomial(const Rat& coeff, std::size_t degree) {
    if (coeff.is_zero()) return {};
    std::vector<Rat> c(degree + 1);
    c[degree] = coeff;
    return QPoly(std::move(c));
  }
  static QPoly x() { return monomial(Rat(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(); }
  Rat leading() const { return c_.empty() ? Rat() : c_.back(); }
  Rat constant_term() const { return coeff(0); }

  QPoly operator-() const {
    QPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  QPoly& operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(r));
  }
  friend QPoly operator*(const Rat& s, QPoly p) {
    if (s.is_zero()) return {};
    for (auto& x : p.c_) x *= s;
    return p;
  }
  friend QPoly operator*(QPoly p, const Rat& s) { return s * std::move(p); }

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division over Q: returns (quotient, remainder).
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
    if (d.is_zero()) throw ContractViolation("QPoly::divmod: division by zero polynomial");
    QPoly r = *this;
    if (r.degree() < d.degree()) return {QPoly(), r};
    std::vector<Rat> q(static_cast<std::size_t>(r.degree() - d.degree() + 1));
    Rat inv_lead = Rat(1) / d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      auto shift = static_cast<std::size_t>(r.degree() - d.degree());
      Rat f = r.leading() * inv_lead;
      q[shift] = f;
      for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[i + shift] -= f * d.c_[i];
      r.trim();
    }
    return {QPoly(std::move(q)), r};
  }

  QPoly operator%(const QPoly& d) const { return divmod(d).second; }

  QPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return QPoly(std::move(r));
  }

  Rat operator()(const Rat& x) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Horner evaluation in any ring R that can embed rationals via
  /// from_rational(like, q).
  template <class R>
  R eval_in(const R& x) const {
    R acc = from_rational(x, Rat());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + from_rational(x, *it);
    return acc;
  }

  QPoly compose(const QPoly& inner) const {
    QPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + QPoly(*it);
    return acc;
  }

  QPoly monic() const {
    if (is_zero()) return {};
    return (Rat(1) / leading()) * *this;
  }

  /// Integer coefficients, content 1, positive leading coefficient.
  QPoly primitive_integer() const {
    if (is_zero()) return {};
    BigInt den = 1;
    for (const auto& x : c_) den = big_lcm(den, x.den());
    BigInt g = 0;
    for (const auto& x : c_) g = big_gcd(g, x.num() * (den / x.den()));
    Rat scale(den, g);
    if (leading().sign() < 0) scale = -scale;
    return scale * *this;
  }

  /// Descending-degree rendering, e.g. "4c^3 + 6c^2 + 2c + 1".
  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Rat& a = c_[static_cast<std::size_t>(k)];
      if (a.is_zero()) continue;
      Rat mag = a.sign() < 0 ? -a : a;
      if (first) {
        if (a.sign() < 0) os << "-";
      } else {
        os << (a.sign() < 0 ? " - " : " + ");
      }
      first = false;
      bool unit = mag == Rat(1);
      if (k == 0 || !unit) {
        if (!mag.is_integer() && k > 0) os << "(" << mag << ")";
        else os << mag;
      }
      if (k >= 1) os << var;
      if (k >= 2) os << "^" << k;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rat> c_;
};

inline bool is_zero(const QPoly& p) { return p.is_zero(); }
inline QPoly from_rational(const QPoly& /*like*/, const Rat& q) { return QPoly(q); }

/// Exact division in Q[x]; throws when the remainder is nonzero.
inline QPoly exact_quotient(const QPoly& a, const QPoly& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) throw ContractViolation("exact_quotient: inexact polynomial division");
  return q;
}

inline QPoly pow(const QPoly& base, unsigned e) {
  QPoly r(1);
  QPoly b = base;
  while (e != 0) {
    if ((e & 1U) != 0) r *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return r;
}

/// Monic gcd over Q (zero when both inputs are zero).
inline QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

struct ExtendedGcd {
  QPoly g;  // monic
  QPoly s;
  QPoly t;  // s*a + t*b == g
};

inline ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0(1), s1;
  QPoly t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    QPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {QPoly(), QPoly(), QPoly()};
  Rat inv = Rat(1) / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

}  // namespace quadpre
