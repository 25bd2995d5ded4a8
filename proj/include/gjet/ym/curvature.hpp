#pragma once

#include "gjet/jetring/poly.hpp"
#include "gjet/ym/liealg.hpp"

#include <functional>
#include <vector>

namespace gjet::ym {

using jetring::Gen;
using jetring::Poly;
using jetring::RingModel;

// Momentum-space scratch model for the curvature-like tensor: gauge-field
// components alpha^I_a and a gauge-shift chi^I as even fiber coordinates,
// momentum labels p_a as constant background symbols.
class MomentumModel {
 public:
  MomentumModel(int base_dim, LieAlgebraData group)
      : ring_(base_dim), group_(std::move(group)) {
    alpha_ = ring_.add_sector("al", even_grade, {base_dim, group_.dim});
    chi_ = ring_.add_sector("chi", even_grade, {group_.dim});
    for (int a = 0; a < base_dim; ++a)
      p_sym_.push_back(ring_.add_symbol("p" + std::to_string(a), false));
    sqrt3_ = ring_.add_symbol("sqrt3", false, GQ(3));
  }

  const RingModel& ring() const { return ring_; }
  const LieAlgebraData& group() const { return group_; }

  Poly alpha(int a, int i) const {
    return Poly::gen(ring_, Gen::jet(alpha_, ring_.flatten(alpha_, {a, i}), {}));
  }
  Poly chi(int i) const { return Poly::gen(ring_, Gen::jet(chi_, i, {})); }
  Poly p(int a) const {
    return Poly::gen(ring_, Gen::background(p_sym_[static_cast<std::size_t>(a)]));
  }
  Poly structure(int i, int j, int k) const {
    const Q3& v = group_.cc(i, j, k);
    Poly r = Poly::scalar(ring_, v.a);
    if (!v.b.is_zero()) r += v.b * Poly::gen(ring_, Gen::background(sqrt3_));
    return r;
  }

  // the shifted field p tensor chi + alpha
  Poly shifted_alpha(int a, int i) const { return p(a) * chi(i) + alpha(a, i); }

 private:
  RingModel ring_;
  LieAlgebraData group_;
  int alpha_ = -1, chi_ = -1, sqrt3_ = -1;
  std::vector<int> p_sym_;
};

// rho[alpha]^I_{ab} = i (p_a alpha^I_b - p_b alpha^I_a) + c^I_{JK} alpha^J_a alpha^K_b
inline Poly curvature_like(const MomentumModel& mm, int i, int a, int b,
                           const std::function<Poly(int, int)>& field) {
  Poly r = GQ::i() * (mm.p(a) * field(b, i) - mm.p(b) * field(a, i));
  for (int j = 0; j < mm.group().dim; ++j)
    for (int k = 0; k < mm.group().dim; ++k) {
      Poly c = mm.structure(i, j, k);
      if (!c.is_zero()) r += c * field(a, j) * field(b, k);
    }
  return r;
}

inline Poly curvature_like(const MomentumModel& mm, int i, int a, int b) {
  return curvature_like(mm, i, a, b, [&](int aa, int ii) { return mm.alpha(aa, ii); });
}

// rho[p tensor chi + alpha] - rho[alpha]; vanishes in the abelian case, equals
// c^I_{JK} chi^J (p_a alpha^K_b - p_b alpha^K_a) otherwise. Exposed for
// inspection, no identity is asserted.
inline Poly curvature_shift_residual(const MomentumModel& mm, int i, int a, int b) {
  Poly shifted =
      curvature_like(mm, i, a, b, [&](int aa, int ii) { return mm.shifted_alpha(aa, ii); });
  return shifted - curvature_like(mm, i, a, b);
}

}  // namespace gjet::ym
