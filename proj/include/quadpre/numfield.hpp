#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "quadpre/error.hpp"
#include "quadpre/qpoly.hpp"
#include "quadpre/rat.hpp"

namespace quadpre {

/// Raised by NFElem::inverse when the representative shares a factor with a
/// reducible modulus. factor() is the monic common divisor that was found.
class NotInvertible : public std::domain_error {
 public:
  explicit NotInvertible(QPoly factor)
      : std::domain_error("element not invertible; modulus has factor " + factor.to_string()),
        factor_(std::move(factor)) {}

  const QPoly& factor() const noexcept { return factor_; }

 private:
  QPoly factor_;
};

/// Element of the quotient ring Q[x]/(modulus). Elements built from the same
/// `std::shared_ptr` modulus compare moduli by pointer; otherwise by value.
class NFElem {
 public:
  using Modulus = std::shared_ptr<const QPoly>;

  static Modulus make_modulus(QPoly m) {
    if (m.degree() < 1) throw ContractViolation("NFElem: modulus must be nonconstant");
    return std::make_shared<const QPoly>(std::move(m));
  }

  NFElem(Modulus modulus, const QPoly& rep) : mod_(std::move(modulus)) {
    if (!mod_ || mod_->degree() < 1) throw ContractViolation("NFElem: modulus must be nonconstant");
    rep_ = rep % *mod_;
  }
  NFElem(Modulus modulus, const Rat& constant) : NFElem(std::move(modulus), QPoly(constant)) {}

  /// The class of x itself.
  static NFElem generator(Modulus modulus) { return {std::move(modulus), QPoly::x()}; }

  const QPoly& rep() const { return rep_; }
  const QPoly& modulus() const { return *mod_; }
  const Modulus& modulus_ptr() const { return mod_; }
  bool is_zero() const { return rep_.is_zero(); }

  NFElem operator-() const { return {mod_, -rep_}; }
  friend NFElem operator+(const NFElem& a, const NFElem& b) {
    a.check_same(b);
    return {a.mod_, a.rep_ + b.rep_};
  }
  friend NFElem operator-(const NFElem& a, const NFElem& b) {
    a.check_same(b);
    return {a.mod_, a.rep_ - b.rep_};
  }
  friend NFElem operator*(const NFElem& a, const NFElem& b) {
    a.check_same(b);
    return {a.mod_, a.rep_ * b.rep_};
  }
  friend NFElem operator*(const Rat& s, const NFElem& a) { return {a.mod_, s * a.rep_}; }

  friend bool operator==(const NFElem& a, const NFElem& b) {
    a.check_same(b);
    return a.rep_ == b.rep_;
  }

  NFElem inverse() const {
    if (is_zero()) throw ContractViolation("NFElem::inverse: zero element");
    ExtendedGcd e = extended_gcd(rep_, *mod_);
    if (e.g.degree() > 0) throw NotInvertible(e.g);
    return {mod_, e.s};
  }

  friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

  std::string to_string(const std::string& var = "x") const { return rep_.to_string(var); }

 private:
  void check_same(const NFElem& o) const {
    if (mod_ != o.mod_ && *mod_ != *o.mod_) throw ContractViolation("NFElem: modulus mismatch");
  }

  Modulus mod_;
  QPoly rep_;
};

inline bool is_zero(const NFElem& x) { return x.is_zero(); }
inline NFElem from_rational(const NFElem& like, const Rat& q) { return {like.modulus_ptr(), q}; }

inline NFElem nf_make(const NFElem::Modulus& modulus, const QPoly& rep) { return {modulus, rep}; }
inline NFElem nf_add(const NFElem& a, const NFElem& b) { return a + b; }
inline NFElem nf_mul(const NFElem& a, const NFElem& b) { return a * b; }
inline NFElem nf_inv(const NFElem& a) { return a.inverse(); }

/// Minimal polynomial of beta where beta^2 = k*alpha and alpha is a root of
/// `alpha_poly`: substitute alpha = beta^2/k and clear denominators. The
/// result is primitive with positive leading coefficient.
inline QPoly square_root_tower_poly(const QPoly& alpha_poly, const Rat& k) {
  QPoly alpha_in_beta = QPoly::monomial(Rat(1) / k, 2);
  return alpha_poly.compose(alpha_in_beta).primitive_integer();
}

}  // namespace quadpre
