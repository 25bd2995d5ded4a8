#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>

namespace gjet {

// Z2 grade (parity). Fermionic quantities carry grade 1, bosonic grade 0;
// addition is mod 2.
struct Grade {
  std::uint8_t parity = 0;

  constexpr Grade() = default;
  constexpr explicit Grade(int p) : parity(static_cast<std::uint8_t>(p & 1)) {}

  constexpr bool odd() const { return parity == 1; }
  constexpr bool even() const { return parity == 0; }

  friend constexpr Grade operator+(Grade a, Grade b) { return Grade(a.parity ^ b.parity); }
  friend constexpr bool operator==(Grade a, Grade b) { return a.parity == b.parity; }
  friend constexpr bool operator!=(Grade a, Grade b) { return a.parity != b.parity; }
};

inline constexpr Grade even_grade{0};
inline constexpr Grade odd_grade{1};

// Sign (-1)^{(sum of left parities)(sum of right parities)} incurred when a
// block of graded factors is transposed past another block.
inline int koszul_sign(std::span<const Grade> left, std::span<const Grade> right) {
  int l = 0, r = 0;
  for (Grade g : left) l ^= g.parity;
  for (Grade g : right) r ^= g.parity;
  return (l & r) ? -1 : 1;
}

inline int koszul_sign(std::initializer_list<Grade> left, std::initializer_list<Grade> right) {
  return koszul_sign(std::span<const Grade>(left.begin(), left.size()),
                     std::span<const Grade>(right.begin(), right.size()));
}

inline int koszul_sign(Grade left, Grade right) { return (left.parity & right.parity) ? -1 : 1; }

}  // namespace gjet
