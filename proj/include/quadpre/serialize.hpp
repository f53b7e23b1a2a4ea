#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "quadpre/dynamics.hpp"
#include "quadpre/elliptic.hpp"
#include "quadpre/error.hpp"
#include "quadpre/qpoly.hpp"
#include "quadpre/rat.hpp"

namespace quadpre {

using json = nlohmann::json;

inline json rat_json(const Rat& q) { return q.str(); }

inline Rat rat_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("expected a rational string", 0);
  return Rat::parse(j.get<std::string>());
}

inline json poly_json(const QPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(rat_json(c));
  return out;
}

inline QPoly poly_from_json(const json& j) {
  std::vector<Rat> cs;
  for (const auto& c : j) cs.push_back(rat_from_json(c));
  return QPoly(std::move(cs));
}

inline json signature_json(const ArrangementSignature& s) { return json(s); }

inline json tree_json(const PreimageTree& t) {
  json levels = json::array();
  for (const auto& level : t.levels) {
    json row = json::array();
    for (const auto& n : level) row.push_back(rat_json(n.value));
    levels.push_back(std::move(row));
  }
  return {{"c", rat_json(t.c)},
          {"a", rat_json(t.root)},
          {"depth", t.depth()},
          {"levels", std::move(levels)},
          {"signature", signature_json(signature(t))},
          {"union_count", t.union_count()}};
}

/// Rebuilds a tree from its record; parents are recovered from x^2 + c and
/// the tree is checked against its defining equations.
inline PreimageTree tree_from_json(const json& j) {
  PreimageTree t{rat_from_json(j.at("c")), rat_from_json(j.at("a")), {}};
  std::vector<Rat> parents{t.root};
  for (const auto& row : j.at("levels")) {
    std::vector<TreeNode> level;
    for (const auto& v : row) {
      Rat x = rat_from_json(v);
      Rat image = x * x + t.c;
      std::size_t p = 0;
      while (p < parents.size() && !(parents[p] == image)) ++p;
      if (p == parents.size()) throw ParseError("tree node " + x.str() + " has no parent", 0);
      level.push_back({x, p, x.is_zero()});
    }
    parents.clear();
    for (const auto& n : level) parents.push_back(n.value);
    t.levels.push_back(std::move(level));
  }
  return t;
}

inline json point_json(const ECPoint& p) {
  if (p.is_infinity()) return "O";
  return json::array({rat_json(p.x()), rat_json(p.y())});
}

inline ECPoint point_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "O") return ECPoint::infinity();
  return {rat_from_json(j.at(0)), rat_from_json(j.at(1))};
}

inline json curve_json(const WeierstrassCurve& e) {
  auto jv = e.j_invariant();
  return {{"a1", rat_json(e.a1)},
          {"a2", rat_json(e.a2)},
          {"a3", rat_json(e.a3)},
          {"a4", rat_json(e.a4)},
          {"a6", rat_json(e.a6)},
          {"discriminant", rat_json(e.discriminant())},
          {"j", jv ? rat_json(*jv) : json(nullptr)},
          {"singular", e.is_singular()}};
}

inline WeierstrassCurve curve_from_json(const json& j) {
  return {rat_from_json(j.at("a1")), rat_from_json(j.at("a2")), rat_from_json(j.at("a3")),
          rat_from_json(j.at("a4")), rat_from_json(j.at("a6"))};
}

}  // namespace quadpre
