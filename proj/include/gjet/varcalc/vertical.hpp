#pragma once

#include "gjet/varcalc/form.hpp"

#include <map>
#include <stdexcept>

namespace gjet::varcalc {

// Vertical field v = v^i d/dy^i with polynomial components (first-jet
// dependence allowed). `shift` is the uniform grade offset of the components
// relative to their sectors: 0 for grade-preserving symmetries (the BRST
// field carries theta inside its components, so its shift is 0 too), 1 for
// the stripped BRST antiderivation.
class VerticalField {
 public:
  explicit VerticalField(const RingModel* model, Grade shift = even_grade)
      : model_(model), shift_(shift) {}

  const RingModel& model() const { return *model_; }
  Grade shift() const { return shift_; }

  void set(int sector, int comp, Poly value) {
    Gen g = Gen::jet(sector, comp, MultiIndex{});
    if (!value.is_zero()) {
      auto vg = value.grade();
      if (!vg || *vg != g.grade(*model_) + shift_)
        throw std::invalid_argument("vertical component grade mismatch: " + g.str(*model_));
    }
    comps_[g.key] = std::move(value);
  }

  const Poly& component(std::uint64_t gen0_key) const {
    static const Poly empty;
    auto it = comps_.find(gen0_key);
    if (it == comps_.end()) {
      zero_ = Poly::zero(*model_);
      return zero_;
    }
    return it->second;
  }

  const std::map<std::uint64_t, Poly>& comps() const { return comps_; }

 private:
  const RingModel* model_;
  Grade shift_;
  std::map<std::uint64_t, Poly> comps_;
  mutable Poly zero_;
};

// Holonomic prolongation table {(i, A) -> d_A v^i}, built by iterated total
// derivatives and cached.
class Prolongation {
 public:
  explicit Prolongation(const VerticalField* v) : v_(v) {}

  const Poly& at(int sector, int comp, const MultiIndex& a) const {
    Gen base = Gen::jet(sector, comp, MultiIndex{});
    return at_key(base.key, a);
  }

  const Poly& at_key(std::uint64_t gen0_key, const MultiIndex& a) const {
    auto key = std::make_pair(gen0_key, a.packed());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Poly value;
    if (a.empty()) {
      value = v_->component(gen0_key);
    } else {
      MultiIndex down = a;
      int d = 0;
      for (int b = 3; b >= 0; --b)
        if (down.counts[static_cast<std::size_t>(b)] > 0) {
          d = b;
          break;
        }
      --down.counts[static_cast<std::size_t>(d)];
      value = jetring::total_derivative(at_key(gen0_key, down), d);
    }
    return cache_.emplace(key, std::move(value)).first->second;
  }

  const VerticalField& field() const { return *v_; }

 private:
  const VerticalField* v_;
  mutable std::map<std::pair<std::uint64_t, std::uint32_t>, Poly> cache_;
};

// delta[v] f = sum_{i,A} (d_A v^i) * (partial_i^A f). The prolonged component
// multiplies from the left, matching the left-derivative convention.
inline Poly delta(const Prolongation& pv, const Poly& f) {
  const RingModel& model = f.model();
  Poly r = Poly::zero(model);
  for (std::uint64_t key : f.jet_gens()) {
    Gen g{key};
    Gen base = Gen::jet(g.sector(), g.comp(), MultiIndex{});
    const Poly& dv = pv.at_key(base.key, g.mi());
    if (dv.is_zero()) continue;
    Poly pf = jetring::partial(f, g);
    if (pf.is_zero()) continue;
    r += dv * pf;
  }
  return r;
}

inline Poly delta(const VerticalField& v, const Poly& f) {
  Prolongation pv(&v);
  return delta(pv, f);
}

inline BasicForm delta(const VerticalField& v, const BasicForm& a) {
  Prolongation pv(&v);
  BasicForm r(&a.model(), a.degree());
  for (const auto& [t, p] : a.comps()) r.set(t, delta(pv, p));
  return r;
}

// [v,w]^i = delta[v]w^i - (-1)^{|v||w|} delta[w]v^i.
inline VerticalField vert_bracket(const VerticalField& v, const VerticalField& w) {
  if (&v.model() != &w.model()) throw std::invalid_argument("vert_bracket: model mismatch");
  VerticalField r(&v.model(), v.shift() + w.shift());
  int sign = koszul_sign(v.shift(), w.shift());
  Prolongation pv(&v);
  Prolongation pw(&w);
  std::set<std::uint64_t> keys;
  for (const auto& [k, p] : v.comps()) keys.insert(k);
  for (const auto& [k, p] : w.comps()) keys.insert(k);
  for (std::uint64_t k : keys) {
    Poly c = delta(pv, w.component(k));
    Poly d = delta(pw, v.component(k));
    Poly val = (sign < 0) ? c + d : c - d;
    Gen g{k};
    r.set(g.sector(), g.comp(), std::move(val));
  }
  return r;
}

}  // namespace gjet::varcalc
