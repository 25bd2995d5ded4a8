#pragma once

#include "gjet/varcalc/vertical.hpp"

#include <map>
#include <vector>

namespace gjet::varcalc {

// k-order Lagrangian density L = ell d^m x, ell an even fiber polynomial.
struct LagrangianDensity {
  Poly ell;

  int order() const { return ell.max_jet_order(); }
  const RingModel& model() const { return ell.model(); }
};

// Components F_i = sum_A (-1)^{|A|} d_A partial_i^A ell of the
// Euler-Lagrange operator, indexed by the order-zero fiber coordinate.
class EulerLagrange {
 public:
  explicit EulerLagrange(const LagrangianDensity& L) : model_(&L.model()) {
    for (std::uint64_t key : L.ell.jet_gens()) {
      Gen g{key};
      Gen base = Gen::jet(g.sector(), g.comp(), MultiIndex{});
      Poly piece = jetring::total_derivative(jetring::partial(L.ell, g), g.mi());
      if (g.mi().length() % 2 == 1) piece = -piece;
      auto it = comps_.find(base.key);
      if (it == comps_.end())
        comps_.emplace(base.key, std::move(piece));
      else
        it->second += piece;
    }
    for (auto it = comps_.begin(); it != comps_.end();)
      it = it->second.is_zero() ? comps_.erase(it) : std::next(it);
  }

  const Poly& component(std::uint64_t gen0_key) const {
    static const Poly none;
    auto it = comps_.find(gen0_key);
    if (it == comps_.end()) {
      zero_ = Poly::zero(*model_);
      return zero_;
    }
    return it->second;
  }

  const std::map<std::uint64_t, Poly>& comps() const { return comps_; }

  // F | v  =  sum_i v^i * F_i  (field component on the left).
  Poly contract(const VerticalField& v) const {
    Poly r = Poly::zero(*model_);
    for (const auto& [key, f] : comps_) {
      const Poly& vc = v.component(key);
      if (!vc.is_zero()) r += vc * f;
    }
    return r;
  }

 private:
  const RingModel* model_;
  std::map<std::uint64_t, Poly> comps_;
  mutable Poly zero_;
};

// Momentum P^a of a first- or second-order density, with the contraction
// helpers P^a | v and P^a | v_(1). Orders above two are not supported.
class Momentum {
 public:
  explicit Momentum(const LagrangianDensity& L) : model_(&L.model()), k_(L.order()) {
    if (k_ > 2) throw std::invalid_argument("momentum: only orders one and two supported");
    for (std::uint64_t key : L.ell.jet_gens()) {
      Gen g{key};
      if (g.mi().length() == 0) continue;
      Poly p = jetring::partial(L.ell, g);
      if (!p.is_zero()) table_[key] = std::move(p);
    }
  }

  int order() const { return k_; }

  // partial of ell with respect to y^i_A, i.e. P_i^A, zero when absent.
  const Poly& P(std::uint64_t gen0_key, const MultiIndex& a) const {
    Gen base{gen0_key};
    Gen g = base.with_mi(a);
    auto it = table_.find(g.key);
    if (it == table_.end()) {
      zero_ = Poly::zero(*model_);
      return zero_;
    }
    return it->second;
  }

  // Upper components of P | v_(k-1):
  //   k=1:  v^i P^a_i
  //   k=2:  v^i (P^a_i - d_b P^{ab}_i) + (d_b v^i) P^{ab}_i
  // P^{ab} carries ordered indices; the multiset derivative partial^{(ab)}
  // counts each unordered pair once, so off-diagonal entries get weight 1/2.
  std::vector<Poly> contract(const VerticalField& v) const {
    int m = model_->base_dim();
    Prolongation pv(&v);
    std::set<std::uint64_t> bases;
    for (const auto& [key, p] : table_) {
      Gen g{key};
      bases.insert(Gen::jet(g.sector(), g.comp(), MultiIndex{}).key);
    }
    std::vector<Poly> out(static_cast<std::size_t>(m), Poly::zero(*model_));
    for (std::uint64_t base : bases) {
      const Poly& v0 = pv.at_key(base, MultiIndex{});
      for (int a = 0; a < m; ++a) {
        Poly coef = P(base, jetring::mi(a));
        if (k_ == 2) {
          for (int b = 0; b < m; ++b) {
            Poly pab = P(base, jetring::mi(a, b));
            if (pab.is_zero()) continue;
            if (a != b) pab = GQ(rat(1, 2)) * pab;
            coef -= jetring::total_derivative(pab, b);
            const Poly& dv = pv.at_key(base, jetring::mi(b));
            if (!dv.is_zero()) out[static_cast<std::size_t>(a)] += dv * pab;
          }
        }
        if (!coef.is_zero() && !v0.is_zero()) out[static_cast<std::size_t>(a)] += v0 * coef;
      }
    }
    return out;
  }

 private:
  const RingModel* model_;
  int k_;
  std::map<std::uint64_t, Poly> table_;
  mutable Poly zero_;
};

// delta[v]L as a density (the coefficient of d^m x).
inline Poly delta_density(const VerticalField& v, const LagrangianDensity& L) {
  return delta(v, L.ell);
}

// Residual of the splitting theorem
//   d_H(P | v_(k-1)) - (delta[v]L - F | v);
// identically zero for fiber polynomial densities of order one and two.
inline Poly splitting_residual(const LagrangianDensity& L, const VerticalField& v) {
  Momentum P(L);
  EulerLagrange F(L);
  Poly lhs = divergence(P.contract(v));
  Poly rhs = delta_density(v, L) - F.contract(v);
  return lhs - rhs;
}

struct NoetherResult {
  std::vector<Poly> current;  // J^a, upper components
  Poly exactness_residual;    // delta[v]L - d_H N, must vanish for J to exist
  Poly conservation_residual; // d_H J + F | v, the off-shell certificate

  bool ok() const { return exactness_residual.is_zero() && conservation_residual.is_zero(); }
};

// Noether current J = P | v_(k-1) - N for a symmetry with delta[v]L = d_H N.
// Rejects the construction (nonzero exactness residual) otherwise, and checks
// the conservation certificate d_H J + F | v = 0 as an exact identity.
inline NoetherResult noether_current(const LagrangianDensity& L, const VerticalField& v,
                                     const std::vector<Poly>& n_up) {
  NoetherResult res;
  res.exactness_residual = delta_density(v, L) - divergence(n_up);
  if (!res.exactness_residual.is_zero()) {
    res.conservation_residual = Poly::zero(L.model());
    return res;
  }
  Momentum P(L);
  res.current = P.contract(v);
  for (std::size_t a = 0; a < res.current.size(); ++a) res.current[a] -= n_up[a];
  EulerLagrange F(L);
  res.conservation_residual = divergence(res.current) + F.contract(v);
  return res;
}

}  // namespace gjet::varcalc
