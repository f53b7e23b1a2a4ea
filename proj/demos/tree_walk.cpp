// Walks the pre-image tree of a listed 246 pair and shows how the pair is
// recovered from two of its third pre-images.

#include <iostream>

#include "quadpre/quadpre.hpp"

int main() {
  using namespace quadpre;
  const Rat c = Rat::parse("-24361/14400"), a = Rat::parse("-42/25");
  PreimageTree t = preimage_tree(c, a, 3);
  for (std::size_t k = 0; k < t.depth(); ++k) {
    std::cout << "level " << k + 1 << ":";
    for (const auto& n : t.levels[k]) std::cout << " " << n.value.str();
    std::cout << "\n";
  }

  // Two third pre-images over opposite second pre-images fix c.
  const Rat p1 = Rat::parse("209/120"), p2 = Rat::parse("71/120");
  Rat c2 = -(p1 * p1 + p2 * p2) / Rat(2);
  std::cout << "c from (209/120, 71/120): " << c2.str() << "\n";
  std::cout << "a = f_c^3(209/120): " << iterate(c2, p1, 3).str() << "\n";
}
