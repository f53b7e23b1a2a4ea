// Torsion of E24 fibres picked from each family.

#include <iostream>

#include "quadpre/quadpre.hpp"

int main() {
  using namespace quadpre;
  for (auto kind : {TorsionKind::Z2xZ4, TorsionKind::Z8, TorsionKind::Z2xZ8, TorsionKind::Z12}) {
    auto a = torsion_family_a(kind, Rat(3));
    if (!a) continue;
    SurfaceFiber f = specialize_E24(*a);
    TorsionGroup g = torsion_subgroup(f.curve);
    std::cout << to_string(kind) << " at t = 3: torsion Z/" << g.n1 << " x Z/" << g.n2 << "\n";
  }
}
