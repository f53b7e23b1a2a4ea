#pragma once

#include <concepts>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "quadpre/error.hpp"
#include "quadpre/qpoly.hpp"
#include "quadpre/rat.hpp"

namespace quadpre {

/// Coefficient rings the subresultant PRS can run over: commutative, no zero
/// divisors, with exact division when the quotient exists.
template <class R>
concept IntegralDomain = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { exact_quotient(a, b) } -> std::convertible_to<R>;
  R(1);
};

namespace detail {

template <class R>
void trim(std::vector<R>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class R>
int deg(const std::vector<R>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class R>
R ring_pow(const R& base, int e) {
  R r(1);
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

/// lc(b)^(deg a - deg b + 1) * a  mod  b, computed without division.
template <class R>
std::vector<R> pseudo_remainder(std::vector<R> a, const std::vector<R>& b) {
  const int db = deg(b);
  const R& lb = b.back();
  int e = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    R lead = a.back();
    auto shift = static_cast<std::size_t>(deg(a) - db);
    for (auto& x : a) x = lb * x;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = a[i + shift] - lead * b[i];
    trim(a);
    --e;
  }
  R scale = ring_pow(lb, e);
  for (auto& x : a) x = scale * x;
  trim(a);
  return a;
}

}  // namespace detail

/// Res(f, g) by the subresultant pseudo-remainder sequence (Collins/Brown,
/// content-free form). Polynomials are coefficient vectors, lowest first.
template <IntegralDomain R>
R subresultant_resultant(std::vector<R> f, std::vector<R> g) {
  using detail::deg;
  detail::trim(f);
  detail::trim(g);
  if (f.empty() && g.empty()) throw ContractViolation("resultant: both polynomials are zero");
  if (f.empty() || g.empty()) return R(0);

  R sign(1);
  if (deg(f) < deg(g)) {
    std::swap(f, g);
    if ((deg(f) % 2 == 1) && (deg(g) % 2 == 1)) sign = -sign;
  }
  if (deg(g) == 0) return sign * detail::ring_pow(g[0], deg(f));

  R gg(1);
  R h(1);
  while (true) {
    const int delta = deg(f) - deg(g);
    if ((deg(f) % 2 == 1) && (deg(g) % 2 == 1)) sign = -sign;
    std::vector<R> r = detail::pseudo_remainder(f, g);
    f = std::move(g);
    if (r.empty()) return R(0);
    R divisor = gg * detail::ring_pow(h, delta);
    for (auto& x : r) x = exact_quotient(x, divisor);
    g = std::move(r);
    gg = f.back();
    // h <- gg^delta / h^(delta - 1); unchanged when delta == 0
    if (delta > 0) h = exact_quotient(detail::ring_pow(gg, delta), detail::ring_pow(h, delta - 1));
    if (deg(g) == 0) {
      const int df = deg(f);
      R num = detail::ring_pow(g[0], df);
      R res = df >= 1 ? exact_quotient(num, detail::ring_pow(h, df - 1)) : num;
      return sign * res;
    }
  }
}

inline Rat resultant(const QPoly& f, const QPoly& g) {
  return subresultant_resultant<Rat>(f.coeffs(), g.coeffs());
}

/// Sparse bivariate polynomial over Q in (c, a): key = (deg_c, deg_a).
class BiPoly {
 public:
  using Key = std::pair<unsigned, unsigned>;

  BiPoly() = default;

  static BiPoly c_poly(const QPoly& p) {
    BiPoly r;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) r.add({static_cast<unsigned>(i), 0}, p.coeffs()[i]);
    return r;
  }
  static BiPoly a_var() {
    BiPoly r;
    r.add({0, 1}, Rat(1));
    return r;
  }

  void add(Key k, const Rat& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::map<Key, Rat>& terms() const { return terms_; }

  int degree_c() const {
    int d = -1;
    for (const auto& [k, v] : terms_) d = std::max(d, static_cast<int>(k.first));
    return d;
  }

  /// View as a polynomial in c with coefficients in Q[a].
  std::vector<QPoly> as_c_poly() const {
    std::vector<QPoly> r(static_cast<std::size_t>(degree_c() + 1));
    for (const auto& [k, v] : terms_) r[k.first] += QPoly::monomial(v, k.second);
    return r;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) {
    for (const auto& [k, v] : b.terms_) a.add(k, v);
    return a;
  }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) {
    for (const auto& [k, v] : b.terms_) a.add(k, -v);
    return a;
  }

 private:
  std::map<Key, Rat> terms_;
};

/// Res_c(f, g) as a polynomial in a, normalised to a primitive integer
/// polynomial with positive leading coefficient.
inline QPoly eliminate_c(const BiPoly& f, const BiPoly& g) {
  if (f.degree_c() < 1 || g.degree_c() < 1)
    throw ContractViolation("eliminate_c: both inputs need positive degree in c");
  QPoly r = subresultant_resultant<QPoly>(f.as_c_poly(), g.as_c_poly());
  return r.primitive_integer();
}

}  // namespace quadpre
