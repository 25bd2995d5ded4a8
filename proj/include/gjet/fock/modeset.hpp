#pragma once

#include "gjet/core/grade.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gjet::fock {

enum class Statistics { boson, fermion };

struct SectorSpec {
  std::string name;
  Statistics stat = Statistics::boson;
  int fiber_dim = 1;
};

// Finite mode set: ordered points ("x" labels) times sectors times fiber
// indices. The declaration order fixes the canonical mode order and with it
// every fermionic sign.
class ModeSet {
 public:
  ModeSet(int points, std::vector<SectorSpec> sectors)
      : points_(points), sectors_(std::move(sectors)) {
    if (points_ < 1) throw std::invalid_argument("ModeSet needs at least one point");
    if (sectors_.empty()) throw std::invalid_argument("ModeSet needs at least one sector");
    per_point_ = 0;
    for (const auto& s : sectors_) per_point_ += s.fiber_dim;
  }

  int points() const { return points_; }
  int n_modes() const { return points_ * per_point_; }
  const std::vector<SectorSpec>& sectors() const { return sectors_; }

  int mode(int point, int sector, int fiber) const {
    if (point < 0 || point >= points_) throw std::out_of_range("point");
    int off = 0;
    for (int s = 0; s < sector; ++s) off += sectors_[static_cast<std::size_t>(s)].fiber_dim;
    return point * per_point_ + off + fiber;
  }

  Statistics stat_of(int mode) const {
    int within = mode % per_point_;
    for (const auto& s : sectors_) {
      if (within < s.fiber_dim) return s.stat;
      within -= s.fiber_dim;
    }
    throw std::out_of_range("mode");
  }

  bool fermionic(int mode) const { return stat_of(mode) == Statistics::fermion; }
  Grade grade_of(int mode) const { return fermionic(mode) ? odd_grade : even_grade; }

 private:
  int points_;
  std::vector<SectorSpec> sectors_;
  int per_point_;
};

}  // namespace gjet::fock
