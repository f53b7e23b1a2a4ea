#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "quadpre/bigint.hpp"
#include "quadpre/error.hpp"

namespace quadpre {

/// Effort bound for integer factorisation: trial division by all primes up to
/// trial_limit, then Pollard-Brent rho with at most rho_iterations steps in
/// total across all cofactors of one call.
struct FactorBudget {
  unsigned long trial_limit = 1'000'000;
  std::uint64_t rho_iterations = 20'000'000;
};

/// Prime factorisation of |n| (n != 0) as (prime, exponent) pairs in
/// increasing order. Large prime factors are certified with 30 Miller-Rabin
/// rounds (GMP's probable-prime test).
using Factorization = std::vector<std::pair<BigInt, unsigned>>;

namespace detail {

inline const std::vector<unsigned long>& small_primes(unsigned long limit) {
  static const std::vector<unsigned long> cached = [] {
    const unsigned long n = 1'000'000;
    std::vector<bool> composite(n + 1, false);
    std::vector<unsigned long> ps;
    for (unsigned long i = 2; i <= n; ++i) {
      if (composite[i]) continue;
      ps.push_back(i);
      for (unsigned long j = i * i; j <= n; j += i) composite[j] = true;
    }
    return ps;
  }();
  if (limit <= 1'000'000) return cached;
  thread_local std::vector<unsigned long> big;
  big.clear();
  std::vector<bool> composite(limit + 1, false);
  for (unsigned long i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    big.push_back(i);
    for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return big;
}

inline bool is_probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

/// Returns a nontrivial factor of the odd composite n, or 0 when the budget
/// runs out first.
inline BigInt brent_rho(const BigInt& n, std::uint64_t& budget) {
  for (unsigned long c = 1; budget > 0; ++c) {
    BigInt y = 2, x, q = 1, g = 1, ys;
    const BigInt cc = c;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    auto step = [&](BigInt& v) {
      v = v * v + cc;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y);
          BigInt diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        budget = budget > lim ? budget - lim : 0;
        g = big_gcd(q, n);
        k += lim;
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      do {
        step(ys);
        g = big_gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

inline void split(const BigInt& n, std::map<BigInt, unsigned>& out, std::uint64_t& budget) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t()) != 0) {
    for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
      BigInt root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<BigInt, unsigned> sub;
        split(root, sub, budget);
        for (const auto& [p, e] : sub) out[p] += e * static_cast<unsigned>(k);
        return;
      }
    }
  }
  BigInt f = brent_rho(n, budget);
  if (f == 0) throw FactorizationBudgetExceeded(n.get_str());
  split(f, out, budget);
  split(n / f, out, budget);
}

}  // namespace detail

inline Factorization factorize(const BigInt& n_in, const FactorBudget& budget = {}) {
  if (n_in == 0) throw ContractViolation("factorize: zero");
  BigInt n = abs(n_in);
  std::map<BigInt, unsigned> found;
  for (unsigned long p : detail::small_primes(budget.trial_limit)) {
    if (p > budget.trial_limit) break;
    if (n == 1) break;
    if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    found[BigInt(p)] += e;
  }
  std::uint64_t rho = budget.rho_iterations;
  detail::split(n, found, rho);
  return {found.begin(), found.end()};
}

}  // namespace quadpre
