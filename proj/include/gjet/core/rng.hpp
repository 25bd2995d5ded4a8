#pragma once

#include "gjet/core/gq.hpp"

#include <cstdint>
#include <random>

namespace gjet {

// Seeded RNG for the randomized property corpora. Bounded draws are
// implemented here (not via std distributions) so a fixed seed gives the
// same corpus everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  int uniform(int lo, int hi) {  // inclusive bounds
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(next() % span);
  }

  bool chance(int num, int den) { return uniform(1, den) <= num; }

  Rat small_rat() {
    int num = uniform(-4, 4);
    int den = uniform(1, 3);
    return rat(num, den);
  }

  GQ small_gq() {
    GQ z(small_rat());
    if (chance(1, 2)) z.im = small_rat();
    if (z.is_zero()) z = GQ(1);
    return z;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gjet
