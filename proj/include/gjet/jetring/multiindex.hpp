#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace gjet::jetring {

// Symmetric (order-free) derivative multi-index over base coordinates
// 0..m-1, m <= 4. Stored as per-index counts.
struct MultiIndex {
  std::array<std::uint8_t, 4> counts{0, 0, 0, 0};

  int length() const { return counts[0] + counts[1] + counts[2] + counts[3]; }

  MultiIndex plus(int a) const {
    MultiIndex r = *this;
    ++r.counts[static_cast<std::size_t>(a)];
    return r;
  }

  bool empty() const { return length() == 0; }

  std::uint32_t packed() const {
    return static_cast<std::uint32_t>(counts[0]) | (static_cast<std::uint32_t>(counts[1]) << 8) |
           (static_cast<std::uint32_t>(counts[2]) << 16) |
           (static_cast<std::uint32_t>(counts[3]) << 24);
  }

  static MultiIndex unpack(std::uint32_t v) {
    MultiIndex r;
    r.counts = {static_cast<std::uint8_t>(v & 0xff), static_cast<std::uint8_t>((v >> 8) & 0xff),
                static_cast<std::uint8_t>((v >> 16) & 0xff),
                static_cast<std::uint8_t>((v >> 24) & 0xff)};
    return r;
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.counts == b.counts; }

  // Canonical printing lists indices ascending, e.g. {0,0,1} -> "001".
  std::string str() const {
    std::string s;
    for (int a = 0; a < 4; ++a)
      for (int r = 0; r < counts[static_cast<std::size_t>(a)]; ++r) s += static_cast<char>('0' + a);
    return s;
  }
};

inline MultiIndex mi() { return MultiIndex{}; }
inline MultiIndex mi(int a) { return MultiIndex{}.plus(a); }
inline MultiIndex mi(int a, int b) { return MultiIndex{}.plus(a).plus(b); }

}  // namespace gjet::jetring
