#pragma once

#include "gjet/core/gq.hpp"
#include "gjet/core/grade.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gjet::jetring {

// One field sector: a named block of fiber coordinates sharing a Z2 grade.
// `shape` gives the index ranges (e.g. {4,2} for psi^{alpha i}); components
// are addressed by the flattened row-major index.
struct Sector {
  std::string name;
  Grade grade;
  std::vector<int> shape;
  int ncomp = 1;
};

// A background symbol: metric blocks, sqrt|g|, momentum labels, sqrt3.
// Non-differentiable symbols are constants (total derivative zero); a known
// square lets normalization rewrite s^2 -> square (used for sqrt3).
struct Symbol {
  std::string name;
  bool differentiable = false;
  std::optional<GQ> square;
};

// Declares the graded polynomial ring: base dimension, sectors with grades,
// background symbols. Generators and polynomials refer back to one model.
class RingModel {
 public:
  explicit RingModel(int base_dim) : base_dim_(base_dim) {
    if (base_dim < 1 || base_dim > 4) throw std::invalid_argument("base_dim must be 1..4");
  }

  int base_dim() const { return base_dim_; }

  int add_sector(std::string name, Grade grade, std::vector<int> shape) {
    Sector s;
    s.name = std::move(name);
    s.grade = grade;
    s.shape = std::move(shape);
    s.ncomp = 1;
    for (int d : s.shape) s.ncomp *= d;
    sectors_.push_back(std::move(s));
    return static_cast<int>(sectors_.size()) - 1;
  }

  int add_symbol(std::string name, bool differentiable, std::optional<GQ> square = std::nullopt) {
    symbols_.push_back(Symbol{std::move(name), differentiable, std::move(square)});
    return static_cast<int>(symbols_.size()) - 1;
  }

  const std::vector<Sector>& sectors() const { return sectors_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  const Sector& sector(int id) const { return sectors_.at(static_cast<std::size_t>(id)); }
  const Symbol& symbol(int id) const { return symbols_.at(static_cast<std::size_t>(id)); }

  int sector_id(const std::string& name) const {
    for (std::size_t k = 0; k < sectors_.size(); ++k)
      if (sectors_[k].name == name) return static_cast<int>(k);
    throw std::out_of_range("unknown sector " + name);
  }

  int symbol_id(const std::string& name) const {
    for (std::size_t k = 0; k < symbols_.size(); ++k)
      if (symbols_[k].name == name) return static_cast<int>(k);
    throw std::out_of_range("unknown symbol " + name);
  }

  // Row-major flattening of a multi-axis sector component.
  int flatten(int sector_id, const std::vector<int>& idx) const {
    const Sector& s = sector(sector_id);
    if (idx.size() != s.shape.size()) throw std::invalid_argument("component rank mismatch");
    int flat = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 0 || idx[k] >= s.shape[k]) throw std::out_of_range("component out of range");
      flat = flat * s.shape[k] + idx[k];
    }
    return flat;
  }

  std::vector<int> unflatten(int sector_id, int comp) const {
    const Sector& s = sector(sector_id);
    std::vector<int> idx(s.shape.size());
    for (std::size_t k = s.shape.size(); k-- > 0;) {
      idx[k] = comp % s.shape[k];
      comp /= s.shape[k];
    }
    return idx;
  }

 private:
  int base_dim_;
  std::vector<Sector> sectors_;
  std::vector<Symbol> symbols_;
};

}  // namespace gjet::jetring
