#pragma once

// Independent reference implementations used only by tests and the
// acceptance checks. Nothing here shares code paths with the algorithms it
// checks beyond Rat arithmetic.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "quadpre/dynamics.hpp"
#include "quadpre/qpoly.hpp"
#include "quadpre/rat.hpp"

namespace quadpre::oracle {

/// Determinant by fraction Gaussian elimination.
inline Rat determinant(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Rat f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// Res(f, g) as the determinant of the Sylvester matrix.
inline Rat sylvester_resultant(const QPoly& f, const QPoly& g) {
  const int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) return Rat(0);
  if (m == 0 && n == 0) return Rat(1);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + k] = f.coeff(static_cast<std::size_t>(m - k));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = g.coeff(static_cast<std::size_t>(n - k));
  return determinant(std::move(s));
}

/// All reduced fractions p/q (any sign) with max(|p|, q) <= bound.
inline std::vector<Rat> fractions_up_to(long bound, bool nonnegative_only) {
  std::set<Rat> out;
  for (long q = 1; q <= bound; ++q)
    for (long p = nonnegative_only ? 0 : -bound; p <= bound; ++p)
      if (std::gcd(std::labs(p), q) == 1) out.insert(Rat(mpz_class(p), mpz_class(q)));
  return {out.begin(), out.end()};
}

/// x with x^2 + c = y among the given fractions, by direct evaluation.
inline std::set<Rat> preimages_brute(const Rat& c, const Rat& y, const std::vector<Rat>& fractions) {
  std::set<Rat> out;
  for (const auto& x : fractions)
    if (x * x + c == y) out.insert(x);
  return out;
}

inline bool is_square_integer(const mpz_class& n) { return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

/// Per-level pre-image counts, computed with a separate square test.
inline std::vector<std::size_t> signature_oracle(const Rat& c, const Rat& a, unsigned depth) {
  std::vector<std::size_t> counts;
  std::set<Rat> level{a};
  for (unsigned k = 0; k < depth; ++k) {
    std::set<Rat> next;
    for (const auto& y : level) {
      Rat d = y - c;
      if (d.sign() < 0 || !is_square_integer(d.num()) || !is_square_integer(d.den())) continue;
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), d.num().get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), d.den().get_mpz_t());
      Rat r(rn, rd);
      next.insert(r);
      next.insert(-r);
    }
    counts.push_back(next.size());
    level = std::move(next);
  }
  return counts;
}

/// Every (c, a) reached by the naive double loop over third pre-image pairs
/// of height <= bound, with its per-level counts to `depth`.
inline std::map<std::pair<Rat, Rat>, std::vector<std::size_t>> thirdpair_brute(long bound, unsigned depth) {
  const auto xs = fractions_up_to(bound, true);
  std::map<std::pair<Rat, Rat>, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i; j < xs.size(); ++j) {
      Rat X = xs[i] * xs[i], Y = xs[j] * xs[j];
      Rat c = -(X + Y) / Rat(2);
      Rat s = (X - Y) / Rat(2);
      Rat t = s * s + c;
      Rat a = t * t + c;
      auto key = std::make_pair(c, a);
      if (out.count(key) == 0) out.emplace(key, signature_oracle(c, a, depth));
    }
  }
  return out;
}

inline std::set<std::pair<Rat, Rat>> filter_dominating(
    const std::map<std::pair<Rat, Rat>, std::vector<std::size_t>>& all, const std::vector<std::size_t>& target) {
  std::set<std::pair<Rat, Rat>> hits;
  for (const auto& [key, sig] : all) {
    bool ok = sig.size() >= target.size();
    for (std::size_t k = 0; ok && k < target.size(); ++k) ok = sig[k] >= target[k];
    if (ok) hits.insert(key);
  }
  return hits;
}

/// Deterministic generator of small-height random rationals.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}
  Rat next(long height) {
    std::uniform_int_distribution<long> num(-height, height), den(1, height);
    return Rat(mpz_class(num(rng_)), mpz_class(den(rng_)));
  }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  QPoly poly(int max_degree, long height) {
    std::vector<Rat> cs;
    int d = static_cast<int>(integer(0, max_degree));
    for (int i = 0; i <= d; ++i) cs.push_back(next(height));
    if (cs.back().is_zero()) cs.back() = Rat(1);
    return QPoly(std::move(cs));
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Cubic discriminant and j from y^2 = x^3 + A x^2 + B x + C.
struct CubicInvariants {
  Rat disc;  // of the cubic
  Rat delta; // 16 disc
  std::optional<Rat> j;
};

inline CubicInvariants cubic_invariants(const Rat& A, const Rat& B, const Rat& C) {
  Rat disc = A * A * B * B - Rat(4) * B * B * B - Rat(4) * A * A * A * C - Rat(27) * C * C +
             Rat(18) * A * B * C;
  CubicInvariants out{disc, Rat(16) * disc, std::nullopt};
  if (!disc.is_zero()) out.j = Rat(256) * pow(A * A - Rat(3) * B, 3) / disc;
  return out;
}

}  // namespace quadpre::oracle
