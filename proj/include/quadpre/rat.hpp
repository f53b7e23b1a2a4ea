#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "quadpre/bigint.hpp"
#include "quadpre/error.hpp"

namespace quadpre {

/// Rational number in lowest terms with positive denominator. Zero is 0/1.
class Rat {
 public:
  Rat() = default;
  Rat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const BigInt& n) : q_(n) {}
  Rat(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw ContractViolation("Rat: zero denominator");
    q_.get_num() = num;
    q_.get_den() = den;
    q_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p", "-p", "p/q" (decimal integers, optional leading sign on p).
  static Rat parse(std::string_view text) {
    std::size_t i = 0;
    auto read_int = [&](bool allow_sign) {
      std::size_t start = i;
      if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      std::size_t digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits) throw ParseError("malformed rational '" + std::string(text) + "'", i);
      std::string s(text.substr(start, i - start));
      if (s[0] == '+') s.erase(0, 1);
      return BigInt(s);
    };
    BigInt num = read_int(true);
    BigInt den = 1;
    if (i < text.size() && text[i] == '/') {
      ++i;
      std::size_t den_pos = i;
      den = read_int(false);
      if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", den_pos);
    }
    if (i != text.size()) throw ParseError("malformed rational '" + std::string(text) + "'", i);
    return Rat(num, den);
  }

  const BigInt& num() const { return q_.get_num(); }
  const BigInt& den() const { return q_.get_den(); }
  const mpq_class& gmp() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw ContractViolation("Rat: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline Rat exact_quotient(const Rat& a, const Rat& b) { return a / b; }
inline Rat from_rational(const Rat& /*like*/, const Rat& q) { return q; }

inline Rat pow(const Rat& base, unsigned e) {
  Rat r(1);
  Rat b = base;
  while (e != 0) {
    if ((e & 1U) != 0) r *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return r;
}

/// Multiplicative height max(|num|, den).
inline BigInt height(const Rat& q) {
  BigInt n = abs(q.num());
  return n > q.den() ? n : q.den();
}

/// Nonnegative square root when num and den are both perfect squares.
inline std::optional<Rat> rat_sqrt(const Rat& q) {
  if (q.sign() < 0) return std::nullopt;
  auto n = int_sqrt(q.num());
  if (!n) return std::nullopt;
  auto d = int_sqrt(q.den());
  if (!d) return std::nullopt;
  return Rat(*n, *d);
}

struct RatHash {
  std::size_t operator()(const Rat& r) const {
    std::size_t h1 = mpz_fdiv_ui(r.num().get_mpz_t(), 4294967291UL);
    std::size_t h2 = mpz_fdiv_ui(r.den().get_mpz_t(), 4294967279UL);
    return h1 * 1000003U ^ h2;
  }
};

}  // namespace quadpre
