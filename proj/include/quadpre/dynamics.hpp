#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "quadpre/error.hpp"
#include "quadpre/qpoly.hpp"
#include "quadpre/rat.hpp"
#include "quadpre/resultant.hpp"

namespace quadpre {

/// f_c^n(x) for f_c(x) = x^2 + c; n = 0 returns x.
inline Rat iterate(const Rat& c, const Rat& x, unsigned n) {
  Rat v = x;
  for (unsigned i = 0; i < n; ++i) v = v * v + c;
  return v;
}

/// Rational solutions of x^2 + c = y, sorted descending: {}, {0} or {r, -r}.
inline std::vector<Rat> preimages(const Rat& c, const Rat& y) {
  auto r = rat_sqrt(y - c);
  if (!r) return {};
  if (r->is_zero()) return {*r};
  return {*r, -*r};
}

struct TreeNode {
  Rat value;
  std::size_t parent = 0;  // index into the previous level; 0 for level 1
  bool degenerate = false;  // value == 0, its own negation
};

/// Rational pre-image tree of `root` under f_c. levels[k] holds the rational
/// solutions of f_c^(k+1)(x) = root, deduplicated within the level and sorted
/// by value, descending.
struct PreimageTree {
  Rat c;
  Rat root;
  std::vector<std::vector<TreeNode>> levels;

  std::size_t depth() const { return levels.size(); }

  /// Number of distinct values across all levels (periodic points that recur
  /// at several depths count once).
  std::size_t union_count() const {
    std::set<Rat> seen;
    for (const auto& level : levels)
      for (const auto& n : level) seen.insert(n.value);
    return seen.size();
  }
};

using ArrangementSignature = std::vector<std::size_t>;

inline PreimageTree preimage_tree(const Rat& c, const Rat& a, unsigned depth) {
  if (depth < 1) throw ContractViolation("preimage_tree: depth must be >= 1");
  PreimageTree tree{c, a, {}};
  std::vector<Rat> parents{a};
  for (unsigned k = 0; k < depth; ++k) {
    std::vector<TreeNode> level;
    for (std::size_t p = 0; p < parents.size(); ++p) {
      for (auto& v : preimages(c, parents[p])) {
        bool degenerate = v.is_zero();
        level.push_back({std::move(v), p, degenerate});
      }
    }
    std::sort(level.begin(), level.end(),
              [](const TreeNode& x, const TreeNode& y) { return x.value > y.value; });
    level.erase(std::unique(level.begin(), level.end(),
                            [](const TreeNode& x, const TreeNode& y) { return x.value == y.value; }),
                level.end());
    parents.clear();
    for (const auto& n : level) parents.push_back(n.value);
    tree.levels.push_back(std::move(level));
    if (parents.empty()) {
      // remaining levels are empty
      for (unsigned r = k + 1; r < depth; ++r) tree.levels.emplace_back();
      break;
    }
  }
  return tree;
}

inline ArrangementSignature signature(const PreimageTree& tree) {
  ArrangementSignature s;
  for (const auto& level : tree.levels) s.push_back(level.size());
  return s;
}

/// counts dominate target component-wise over the target's length.
inline bool dominates(const ArrangementSignature& counts, const ArrangementSignature& target) {
  if (counts.size() < target.size()) return false;
  for (std::size_t i = 0; i < target.size(); ++i)
    if (counts[i] < target[i]) return false;
  return true;
}

/// f_c^n(0) as a polynomial in c.
inline QPoly orbit_of_zero(unsigned n) {
  QPoly g;  // f_c^0(0) = 0
  const QPoly c = QPoly::x();
  for (unsigned i = 0; i < n; ++i) g = g * g + c;
  return g;
}

/// d/dc f_c^n(0).
inline QPoly critical_poly(unsigned n) {
  if (n < 1) throw ContractViolation("critical_poly: N must be >= 1");
  return orbit_of_zero(n).derivative();
}

struct CriticalData {
  unsigned n = 0;
  QPoly crit_poly_c;      // in c
  QPoly avalue_minpoly;   // in a, primitive integer, positive leading coefficient
};

inline CriticalData critical_avalues(unsigned n) {
  if (n < 2) throw ContractViolation("critical_avalues: N must be >= 2");
  QPoly crit = critical_poly(n);
  BiPoly g = BiPoly::a_var() - BiPoly::c_poly(orbit_of_zero(n));
  return {n, crit, eliminate_c(BiPoly::c_poly(crit), g)};
}

/// True when a is a j-th critical value for some 2 <= j <= n.
inline bool is_critical_value(const Rat& a, unsigned n) {
  if (n < 2) throw ContractViolation("is_critical_value: N must be >= 2");
  for (unsigned j = 2; j <= n; ++j)
    if (critical_avalues(j).avalue_minpoly(a).is_zero()) return true;
  return false;
}

}  // namespace quadpre
