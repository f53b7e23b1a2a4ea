#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "quadpre/error.hpp"

namespace quadpre {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& n) { return n.get_str(); }

/// Floor of the square root; n must be nonnegative.
inline BigInt isqrt_floor(const BigInt& n) {
  if (sgn(n) < 0) throw ContractViolation("isqrt_floor: negative input " + n.get_str());
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// Exact square root: returns r >= 0 with r*r == n, or nullopt when n is not a
/// perfect square.
inline std::optional<BigInt> int_sqrt(const BigInt& n) {
  if (sgn(n) < 0) throw ContractViolation("int_sqrt: negative input " + n.get_str());
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  BigInt r;
  BigInt rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (sgn(rem) != 0) return std::nullopt;
  return r;
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline BigInt big_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool divides(const BigInt& d, const BigInt& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace quadpre
