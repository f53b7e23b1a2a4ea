#pragma once

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "quadpre/rat.hpp"

namespace quadpre::testing {

// Randomized tests share one seed; QUADPRE_TEST_SEED overrides it and the
// value in use is printed so a failure can be replayed.
inline std::uint64_t seed() {
  static const std::uint64_t s = [] {
    const char* env = std::getenv("QUADPRE_TEST_SEED");
    std::uint64_t v = env ? std::strtoull(env, nullptr, 10) : 20261014ULL;
    std::cout << "[seed] " << v << std::endl;
    return v;
  }();
  return s;
}

inline Rat R(const char* s) { return Rat::parse(s); }

}  // namespace quadpre::testing
