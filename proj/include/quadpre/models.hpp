#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "quadpre/bigint.hpp"
#include "quadpre/error.hpp"
#include "quadpre/qpoly.hpp"
#include "quadpre/rat.hpp"

namespace quadpre {

/// Exponent vector of a monomial in the projective coordinates.
using Monomial = std::vector<unsigned>;

/// A quadratic form: monomial -> coefficient polynomial in a.
using QuadraticForm = std::map<Monomial, QPoly>;

/// Homogeneous quadrics in num_vars() projective coordinates with
/// coefficients in Q[a].
class QuadricModel {
 public:
  QuadricModel(std::string name, std::vector<std::string> vars, std::size_t ambient_dim)
      : name_(std::move(name)), vars_(std::move(vars)), ambient_dim_(ambient_dim) {}

  const std::string& name() const { return name_; }
  std::size_t num_vars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  /// n for the P^n the model is displayed in (may differ from
  /// num_vars() - 1 for the 2222 display).
  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<QuadraticForm>& generators() const { return gens_; }

  /// Adds coeff * x_i * x_j to the generator under construction.
  QuadricModel& term(std::size_t i, std::size_t j, const QPoly& coeff) {
    if (i >= num_vars() || j >= num_vars()) throw ContractViolation("QuadricModel: variable index out of range");
    Monomial m(num_vars(), 0);
    ++m[i];
    ++m[j];
    auto& slot = current_[m];
    slot += coeff;
    if (slot.is_zero()) current_.erase(m);
    return *this;
  }
  QuadricModel& term(std::size_t i, std::size_t j, long coeff) { return term(i, j, QPoly(coeff)); }

  /// Closes the current generator and starts a new one.
  QuadricModel& next() {
    gens_.push_back(std::move(current_));
    current_.clear();
    return *this;
  }

  /// Evaluates generator g at a point in R with a specialised to a_value.
  template <class R>
  R evaluate(std::size_t g, const std::vector<R>& point, const R& a_value) const {
    if (point.size() != num_vars()) throw ContractViolation("QuadricModel::evaluate: wrong coordinate count");
    R total = from_rational(a_value, Rat(0));
    for (const auto& [mono, coeff] : gens_.at(g)) {
      R v = coeff.eval_in(a_value);
      for (std::size_t k = 0; k < mono.size(); ++k)
        for (unsigned e = 0; e < mono[k]; ++e) v = v * point[k];
      total = total + v;
    }
    return total;
  }

  /// d(generator g)/d(var) at the point.
  template <class R>
  R partial(std::size_t g, std::size_t var, const std::vector<R>& point, const R& a_value) const {
    R total = from_rational(a_value, Rat(0));
    for (const auto& [mono, coeff] : gens_.at(g)) {
      if (mono[var] == 0) continue;
      R v = Rat(static_cast<long>(mono[var])) * coeff.eval_in(a_value);
      for (std::size_t k = 0; k < mono.size(); ++k) {
        unsigned e = mono[k] - (k == var ? 1U : 0U);
        for (unsigned i = 0; i < e; ++i) v = v * point[k];
      }
      total = total + v;
    }
    return total;
  }

 private:
  std::string name_;
  std::vector<std::string> vars_;
  std::size_t ambient_dim_;
  std::vector<QuadraticForm> gens_;
  QuadraticForm current_;
};

inline QPoly a_poly() { return QPoly::x(); }

/// Z_{N-1}^2 + Z_i Z_N - Z_{i-1}^2 - a Z_N^2 for i = 1..N-1, in Z_0..Z_N.
inline QuadricModel ideal_J(unsigned n) {
  if (n < 2) throw ContractViolation("ideal_J: N must be >= 2");
  std::vector<std::string> vars;
  for (unsigned i = 0; i <= n; ++i) vars.push_back("Z" + std::to_string(i));
  QuadricModel m("J" + std::to_string(n), vars, n);
  for (unsigned i = 1; i <= n - 1; ++i) {
    m.term(n - 1, n - 1, 1).term(i, n, 1).term(i - 1, i - 1, -1).term(n, n, -a_poly());
    m.next();
  }
  return m;
}

enum class ArrangementTag { T224, T242, T2222 };

inline ArrangementTag parse_arrangement_tag(std::string_view s) {
  if (s == "224") return ArrangementTag::T224;
  if (s == "242") return ArrangementTag::T242;
  if (s == "2222") return ArrangementTag::T2222;
  throw ContractViolation("unknown arrangement tag '" + std::string(s) + "'");
}

namespace detail {

// Adds a z^2 - t^2 - (lin - sq^2) with lin = sign * x_lin * z.
inline void level_equation(QuadricModel& m, std::size_t z, std::size_t t, std::size_t lin, long sign,
                           std::size_t sq) {
  m.term(z, z, a_poly()).term(t, t, -1).term(lin, z, -sign).term(sq, sq, 1);
  m.next();
}

}  // namespace detail

/// The explicit arrangement curves, coordinates in the displayed order.
inline QuadricModel arrangement_curve(ArrangementTag tag) {
  switch (tag) {
    case ArrangementTag::T224: {
      // (q, r, s, t, z)
      QuadricModel m("C224", {"q", "r", "s", "t", "z"}, 4);
      detail::level_equation(m, 4, 3, 3, 1, 2);   // tz - s^2
      detail::level_equation(m, 4, 3, 2, 1, 0);   // sz - q^2
      detail::level_equation(m, 4, 3, 2, -1, 1);  // -sz - r^2
      return m;
    }
    case ArrangementTag::T242: {
      // (q, s, t, u, z)
      QuadricModel m("C242", {"q", "s", "t", "u", "z"}, 4);
      detail::level_equation(m, 4, 2, 2, 1, 1);   // tz - s^2
      detail::level_equation(m, 4, 2, 2, -1, 3);  // -tz - u^2
      detail::level_equation(m, 4, 2, 1, 1, 0);   // sz - q^2
      return m;
    }
    case ArrangementTag::T2222: {
      // (q, s, t, u, z); the display places it in P^5 with three generators
      QuadricModel m("C2222", {"q", "s", "t", "u", "z"}, 5);
      detail::level_equation(m, 4, 2, 2, 1, 1);  // tz - s^2
      detail::level_equation(m, 4, 2, 1, 1, 0);  // sz - q^2
      detail::level_equation(m, 4, 2, 0, 1, 3);  // qz - u^2
      return m;
    }
  }
  throw ContractViolation("arrangement_curve: bad tag");
}

/// (N - 3) 2^(N-2) + 1.
inline BigInt genus_closed(unsigned n) {
  if (n < 1) throw ContractViolation("genus_closed: N must be >= 1");
  if (n == 1) return 0;  // (1 - 3) / 2 + 1
  return (BigInt(static_cast<long>(n)) - 3) * big_pow(2, n - 2) + 1;
}

/// binom(z + N, N) at an integer z, as a falling factorial over N!.
inline BigInt hilbert_phi(unsigned n, long z) {
  BigInt num = 1, fact = 1;
  for (unsigned k = 1; k <= n; ++k) {
    num *= BigInt(z + static_cast<long>(k));
    fact *= k;
  }
  return num / fact;
}

/// Arithmetic genus of a complete intersection of N - 1 quadrics in P^N.
inline BigInt genus_hilbert(unsigned n) {
  if (n < 2) throw ContractViolation("genus_hilbert: N must be >= 2");
  BigInt total = 0;
  BigInt binom = 1;  // binom(N-1, m)
  for (unsigned m = 1; m <= n - 1; ++m) {
    binom = binom * (n - m) / m;
    BigInt term = binom * hilbert_phi(n, -2 * static_cast<long>(m));
    if (m % 2 == 1) total += term;
    else total -= term;
  }
  return total;
}

/// (d - 1)(d - 2) / 2 for a plane curve of degree d.
inline BigInt plane_arithmetic_genus(unsigned degree) {
  if (degree < 1) throw ContractViolation("plane_arithmetic_genus: degree must be >= 1");
  return BigInt(static_cast<long>(degree) - 1) * BigInt(static_cast<long>(degree) - 2) / 2;
}

namespace detail {

inline BigInt subtract_deltas(BigInt pa, const std::vector<unsigned long>& deltas) {
  for (unsigned long d : deltas) {
    if (d == 0) throw ContractViolation("genus_with_delta: delta invariants are positive");
    pa -= d;
  }
  if (sgn(pa) < 0) throw ContractViolation("genus_with_delta: negative genus " + pa.get_str());
  return pa;
}

}  // namespace detail

/// genus_hilbert(N) minus the supplied delta invariants.
inline BigInt genus_with_delta(unsigned n, const std::vector<unsigned long>& deltas) {
  return detail::subtract_deltas(genus_hilbert(n), deltas);
}

/// The same bookkeeping on a plane model of the given degree.
inline BigInt genus_with_delta_plane(unsigned degree, const std::vector<unsigned long>& deltas) {
  return detail::subtract_deltas(plane_arithmetic_genus(degree), deltas);
}

using SignVector = std::vector<int>;

/// The 2^(N-1) points (e_0 : ... : e_{N-1} : 0) of ideal_J(N) with
/// e_{N-1} = +1, listed in binary order with + before -.
inline std::vector<SignVector> infinity_points(unsigned n) {
  if (n < 2) throw ContractViolation("infinity_points: N must be >= 2");
  std::vector<SignVector> out;
  const unsigned free = n - 1;
  for (unsigned long mask = 0; mask < (1UL << free); ++mask) {
    SignVector v(n, 1);
    for (unsigned i = 0; i < free; ++i)
      if ((mask >> (free - 1 - i)) & 1UL) v[i] = -1;
    out.push_back(std::move(v));
  }
  return out;
}

/// Projective point of ideal_J(N) for an infinity sign vector.
template <class R>
std::vector<R> infinity_point_coords(const SignVector& eps, const R& like) {
  std::vector<R> p;
  for (int e : eps) p.push_back(from_rational(like, Rat(e)));
  p.push_back(from_rational(like, Rat(0)));
  return p;
}

class OffModel : public std::invalid_argument {
 public:
  OffModel(std::size_t generator, const std::string& residue)
      : std::invalid_argument("point is not on the model: generator " + std::to_string(generator) +
                              " evaluates to " + residue),
        generator_(generator) {}
  std::size_t generator() const noexcept { return generator_; }

 private:
  std::size_t generator_;
};

namespace detail {

template <class R>
std::string ring_str(const R& v) {
  if constexpr (requires { v.str(); }) return v.str();
  else return v.to_string();
}

template <class R>
R determinant(const std::vector<std::vector<R>>& m, const R& like) {
  const std::size_t n = m.size();
  if (n == 0) return from_rational(like, Rat(1));
  if (n == 1) return m[0][0];
  R total = from_rational(like, Rat(0));
  for (std::size_t col = 0; col < n; ++col) {
    if (is_zero(m[0][col])) continue;
    std::vector<std::vector<R>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<R> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    R term = m[0][col] * determinant(sub, like);
    total = col % 2 == 0 ? total + term : total - term;
  }
  return total;
}

inline void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Affine chart x_chart = 1: inserts the 1 into an affine coordinate list.
template <class R>
std::vector<R> chart_to_projective(std::size_t chart_var, const std::vector<R>& affine, const R& like) {
  std::vector<R> p;
  for (std::size_t i = 0, k = 0; i <= affine.size(); ++i)
    p.push_back(i == chart_var ? from_rational(like, Rat(1)) : affine.at(k++));
  return p;
}

/// Maximal minors of the Jacobian of the generators dehomogenised at
/// x_chart = 1, evaluated at the affine point. Columns follow the remaining
/// variables in order; minors are listed by lexicographic column subsets
/// (rows <= columns) or row subsets otherwise. Throws OffModel when a
/// generator does not vanish at the point, unless require_on_model is false.
template <class R>
std::vector<R> jacobian_minors(const QuadricModel& model, std::size_t chart_var, const std::vector<R>& affine,
                               const R& a_value, bool require_on_model = true) {
  if (chart_var >= model.num_vars()) throw ContractViolation("jacobian_minors: chart variable out of range");
  if (affine.size() + 1 != model.num_vars())
    throw ContractViolation("jacobian_minors: expected " + std::to_string(model.num_vars() - 1) +
                            " affine coordinates");
  const auto point = chart_to_projective(chart_var, affine, a_value);
  const std::size_t rows = model.generators().size();
  for (std::size_t g = 0; g < rows && require_on_model; ++g) {
    R v = model.evaluate(g, point, a_value);
    if (!is_zero(v)) throw OffModel(g, detail::ring_str(v));
  }
  std::vector<std::size_t> cols;
  for (std::size_t v = 0; v < model.num_vars(); ++v)
    if (v != chart_var) cols.push_back(v);
  std::vector<std::vector<R>> jac(rows);
  for (std::size_t g = 0; g < rows; ++g)
    for (std::size_t v : cols) jac[g].push_back(model.partial(g, v, point, a_value));

  std::vector<R> minors;
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> cur;
  if (rows <= cols.size()) {
    detail::combinations(cols.size(), rows, 0, cur, subsets);
    for (const auto& s : subsets) {
      std::vector<std::vector<R>> m(rows);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c : s) m[r].push_back(jac[r][c]);
      minors.push_back(detail::determinant(m, a_value));
    }
  } else {
    detail::combinations(rows, cols.size(), 0, cur, subsets);
    for (const auto& s : subsets) {
      std::vector<std::vector<R>> m;
      for (std::size_t r : s) m.push_back(jac[r]);
      minors.push_back(detail::determinant(m, a_value));
    }
  }
  return minors;
}

/// True when the point lies on the model and every maximal minor vanishes.
template <class R>
bool is_singular_point(const QuadricModel& model, std::size_t chart_var, const std::vector<R>& affine,
                       const R& a_value) {
  for (const auto& m : jacobian_minors(model, chart_var, affine, a_value))
    if (!is_zero(m)) return false;
  return true;
}

namespace detail {

inline std::string monomial_str(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (unsigned e = 0; e < m[i]; ++e) {
      if (!s.empty()) s += "*";
      s += vars[i];
    }
  }
  return s;
}

}  // namespace detail

/// One generator as an integer-cleared polynomial string in a and the
/// model variables, e.g. "a*z^2 - t^2 - t*z + s^2" style (terms in monomial
/// order).
inline std::string generator_string(const QuadricModel& model, std::size_t g) {
  const auto& form = model.generators().at(g);
  BigInt den = 1;
  for (const auto& [mono, coeff] : form)
    for (const auto& c : coeff.coeffs()) den = big_lcm(den, c.den());
  std::string out;
  for (auto it = form.rbegin(); it != form.rend(); ++it) {
    const auto& [mono, coeff] = *it;
    const std::string mon = detail::monomial_str(mono, model.vars());
    for (int k = coeff.degree(); k >= 0; --k) {
      Rat c = coeff.coeff(static_cast<std::size_t>(k)) * Rat(den);
      if (c.is_zero()) continue;
      BigInt n = c.num();
      bool neg = sgn(n) < 0;
      if (neg) n = -n;
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string factors;
      if (n != 1) factors = n.get_str();
      if (k > 0) {
        if (!factors.empty()) factors += "*";
        factors += k == 1 ? "a" : "a^" + std::to_string(k);
      }
      if (!factors.empty()) factors += "*";
      out += factors + mon;
    }
  }
  return out.empty() ? "0" : out;
}

/// Plain-text export: header, variable list, one generator per line.
inline std::string export_model(const QuadricModel& model) {
  std::ostringstream os;
  os << "# " << model.name() << " in P^" << model.ambient_dim() << "\n";
  os << "vars:";
  for (const auto& v : model.vars()) os << " " << v;
  os << "\n";
  for (std::size_t g = 0; g < model.generators().size(); ++g) os << generator_string(model, g) << "\n";
  return os.str();
}

}  // namespace quadpre
