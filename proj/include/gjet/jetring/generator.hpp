#pragma once

#include "gjet/core/grade.hpp"
#include "gjet/jetring/model.hpp"
#include "gjet/jetring/multiindex.hpp"

#include <cstdint>
#include <string>

namespace gjet::jetring {

// A ring generator packed into one 64-bit key. The integer order of keys is
// the fixed total order used for canonical monomials: theta, then base
// coordinates, then jet coordinates (by sector, component, multi-index),
// then background symbols.
//
// layout (msb..lsb): kind:4 | sector_or_symbol:8 | component:16 | len:4 | counts:32
struct Gen {
  enum Kind : std::uint8_t { kTheta = 0, kBase = 1, kJet = 2, kBackground = 3 };

  std::uint64_t key = 0;

  static Gen theta() { return pack(kTheta, 0, 0, MultiIndex{}); }
  static Gen base(int a) { return pack(kBase, 0, static_cast<std::uint16_t>(a), MultiIndex{}); }
  static Gen jet(int sector, int comp, MultiIndex a) {
    return pack(kJet, static_cast<std::uint8_t>(sector), static_cast<std::uint16_t>(comp), a);
  }
  static Gen background(int symbol, MultiIndex deriv = MultiIndex{}) {
    return pack(kBackground, static_cast<std::uint8_t>(symbol), 0, deriv);
  }

  Kind kind() const { return static_cast<Kind>((key >> 60) & 0xf); }
  int sector() const { return static_cast<int>((key >> 52) & 0xff); }
  int symbol() const { return sector(); }
  int comp() const { return static_cast<int>((key >> 36) & 0xffff); }
  MultiIndex mi() const { return MultiIndex::unpack(static_cast<std::uint32_t>(key & 0xffffffffu)); }

  Grade grade(const RingModel& model) const {
    switch (kind()) {
      case kTheta:
        return odd_grade;
      case kJet:
        return model.sector(sector()).grade;
      default:
        return even_grade;
    }
  }

  Gen with_mi(MultiIndex a) const {
    Gen g;
    g.key = (key & ~0xfffffffffull) | (static_cast<std::uint64_t>(a.length() & 0xf) << 32) |
            a.packed();
    return g;
  }

  friend bool operator==(Gen a, Gen b) { return a.key == b.key; }
  friend bool operator!=(Gen a, Gen b) { return a.key != b.key; }
  friend bool operator<(Gen a, Gen b) { return a.key < b.key; }

  std::string str(const RingModel& model) const {
    switch (kind()) {
      case kTheta:
        return "th";
      case kBase:
        return "x" + std::to_string(comp());
      case kJet: {
        const Sector& s = model.sector(sector());
        std::string out = s.name;
        if (!s.shape.empty()) {
          out += "[";
          auto idx = model.unflatten(sector(), comp());
          for (std::size_t k = 0; k < idx.size(); ++k)
            out += (k ? "," : "") + std::to_string(idx[k]);
          out += "]";
        }
        if (!mi().empty()) out += "_{," + mi().str() + "}";
        return out;
      }
      case kBackground: {
        std::string out = model.symbol(symbol()).name;
        if (!mi().empty()) out += "_{," + mi().str() + "}";
        return out;
      }
    }
    return "?";
  }

 private:
  static Gen pack(Kind k, std::uint8_t sec, std::uint16_t comp, MultiIndex a) {
    Gen g;
    g.key = (static_cast<std::uint64_t>(k) << 60) | (static_cast<std::uint64_t>(sec) << 52) |
            (static_cast<std::uint64_t>(comp) << 36) |
            (static_cast<std::uint64_t>(a.length() & 0xf) << 32) | a.packed();
    return g;
  }
};

}  // namespace gjet::jetring
