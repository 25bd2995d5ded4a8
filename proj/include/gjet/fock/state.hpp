#pragma once

#include "gjet/fock/coeff.hpp"
#include "gjet/fock/modeset.hpp"

#include <map>
#include <string>
#include <vector>

namespace gjet::fock {

using Occ = std::vector<std::uint8_t>;  // per-mode occupation numbers

// Sparse multi-particle state in the occupation-monomial basis: the monomial
// with occupations n is the product of the corresponding emission operators
// (canonical mode order) on the vacuum, coefficient one. Bosonic total
// occupancy is truncated at n_max; dropped terms raise the truncated flag.
class FockState {
 public:
  FockState() = default;
  FockState(const ModeSet* ms, const SymTable* tab, int n_max = 4)
      : ms_(ms), tab_(tab), n_max_(n_max) {}

  static FockState vacuum(const ModeSet& ms, const SymTable& tab, int n_max = 4) {
    FockState s(&ms, &tab, n_max);
    s.add(Occ(static_cast<std::size_t>(ms.n_modes()), 0), Coeff(&tab, GQ(1)));
    return s;
  }

  static FockState single(const ModeSet& ms, const SymTable& tab, int mode, int n_max = 4) {
    FockState s(&ms, &tab, n_max);
    Occ occ(static_cast<std::size_t>(ms.n_modes()), 0);
    occ[static_cast<std::size_t>(mode)] = 1;
    s.add(std::move(occ), Coeff(&tab, GQ(1)));
    return s;
  }

  const ModeSet& modes() const { return *ms_; }
  const SymTable& table() const { return *tab_; }
  int n_max() const { return n_max_; }
  bool truncated() const { return truncated_; }
  void mark_truncated() { truncated_ = true; }
  const std::map<Occ, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int boson_occupancy(const Occ& occ) const {
    int t = 0;
    for (std::size_t m = 0; m < occ.size(); ++m)
      if (!ms_->fermionic(static_cast<int>(m))) t += occ[m];
    return t;
  }

  void add(Occ occ, const Coeff& c) {
    if (c.is_zero()) return;
    if (boson_occupancy(occ) > n_max_) {
      truncated_ = true;
      return;
    }
    auto it = terms_.find(occ);
    if (it == terms_.end()) {
      terms_.emplace(std::move(occ), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FockState& operator+=(const FockState& o) {
    for (const auto& [occ, c] : o.terms_) add(occ, c);
    truncated_ |= o.truncated_;
    return *this;
  }
  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) {
    for (const auto& [occ, c] : b.terms_) a.add(occ, -c);
    a.truncated_ |= b.truncated_;
    return a;
  }
  friend FockState operator*(const Coeff& s, const FockState& a) {
    FockState r(a.ms_, a.tab_, a.n_max_);
    r.truncated_ = a.truncated_;
    for (const auto& [occ, c] : a.terms_) r.add(occ, s * c);
    return r;
  }
  friend FockState operator*(const GQ& s, const FockState& a) {
    return Coeff(a.tab_, s) * a;
  }
  friend bool operator==(const FockState& a, const FockState& b) { return a.terms_ == b.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [occ, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")|";
      for (std::size_t m = 0; m < occ.size(); ++m) out += std::to_string(static_cast<int>(occ[m]));
      out += ">";
    }
    return out;
  }

 private:
  const ModeSet* ms_ = nullptr;
  const SymTable* tab_ = nullptr;
  int n_max_ = 4;
  bool truncated_ = false;
  std::map<Occ, Coeff> terms_;
};

// Dual states share the representation; their monomials pair with state
// monomials by Kronecker delta on modes (bosonic multiplicities contribute
// the usual n! through iterated interior products).
using DualState = FockState;

namespace detail {
inline int fermi_sign_below(const ModeSet& ms, const Occ& occ, int mode) {
  int par = 0;
  for (int m = 0; m < mode; ++m)
    if (ms.fermionic(m) && occ[static_cast<std::size_t>(m)]) par ^= 1;
  return par ? -1 : 1;
}
}  // namespace detail

// z (x) psi for one basis mode: emission in the monomial normalization.
inline FockState apply_creator(const FockState& psi, int mode) {
  const ModeSet& ms = psi.modes();
  FockState r(&ms, &psi.table(), psi.n_max());
  if (psi.truncated()) r.mark_truncated();
  for (const auto& [occ, c] : psi.terms()) {
    if (ms.fermionic(mode)) {
      if (occ[static_cast<std::size_t>(mode)]) continue;  // Pauli
      int sign = detail::fermi_sign_below(ms, occ, mode);
      Occ occ2 = occ;
      occ2[static_cast<std::size_t>(mode)] = 1;
      r.add(std::move(occ2), sign < 0 ? -c : c);
    } else {
      Occ occ2 = occ;
      ++occ2[static_cast<std::size_t>(mode)];
      r.add(std::move(occ2), c);
    }
  }
  return r;
}

// zeta | psi for one basis dual mode: interior product, a|n> = n|n-1>.
inline FockState apply_annihilator(const FockState& psi, int mode) {
  const ModeSet& ms = psi.modes();
  FockState r(&ms, &psi.table(), psi.n_max());
  if (psi.truncated()) r.mark_truncated();
  for (const auto& [occ, c] : psi.terms()) {
    int n = occ[static_cast<std::size_t>(mode)];
    if (n == 0) continue;
    if (ms.fermionic(mode)) {
      int sign = detail::fermi_sign_below(ms, occ, mode);
      Occ occ2 = occ;
      occ2[static_cast<std::size_t>(mode)] = 0;
      r.add(std::move(occ2), sign < 0 ? -c : c);
    } else {
      Occ occ2 = occ;
      --occ2[static_cast<std::size_t>(mode)];
      r.add(std::move(occ2), GQ(n) * c);
    }
  }
  return r;
}

// Graded-symmetric product: symmetrized in bosonic sectors, antisymmetrized
// in fermionic ones. Bilinear; truncation overflow drops terms and flags.
inline FockState exterior_product(const FockState& phi, const FockState& psi) {
  const ModeSet& ms = phi.modes();
  FockState r(&ms, &phi.table(), phi.n_max());
  if (phi.truncated() || psi.truncated()) r.mark_truncated();
  int n = ms.n_modes();
  for (const auto& [oa, ca] : phi.terms())
    for (const auto& [ob, cb] : psi.terms()) {
      bool dead = false;
      int par = 0;
      // each fermion of psi moves left past the fermions of phi above it
      for (int mb = 0; mb < n && !dead; ++mb) {
        if (!ms.fermionic(mb) || !ob[static_cast<std::size_t>(mb)]) continue;
        if (oa[static_cast<std::size_t>(mb)]) {
          dead = true;
          break;
        }
        for (int ma = mb + 1; ma < n; ++ma)
          if (ms.fermionic(ma) && oa[static_cast<std::size_t>(ma)]) par ^= 1;
      }
      if (dead) continue;
      Occ occ(static_cast<std::size_t>(n));
      for (int m = 0; m < n; ++m)
        occ[static_cast<std::size_t>(m)] =
            static_cast<std::uint8_t>(oa[static_cast<std::size_t>(m)] + ob[static_cast<std::size_t>(m)]);
      Coeff c = ca * cb;
      r.add(std::move(occ), par ? -c : c);
    }
  return r;
}

// lambda | psi: the dual monomial acts leftmost factor first, so modes apply
// in ascending order with their multiplicities.
inline FockState interior_product(const DualState& lambda, const FockState& psi) {
  const ModeSet& ms = psi.modes();
  FockState r(&ms, &psi.table(), psi.n_max());
  if (lambda.truncated() || psi.truncated()) r.mark_truncated();
  for (const auto& [od, cd] : lambda.terms()) {
    FockState cur = cd * psi;
    for (int m = 0; m < ms.n_modes() && !cur.is_zero(); ++m)
      for (int t = 0; t < od[static_cast<std::size_t>(m)]; ++t) cur = apply_annihilator(cur, m);
    r += cur;
  }
  return r;
}

// <lambda, psi>: vacuum component of lambda | psi.
inline Coeff pairing(const DualState& lambda, const FockState& psi) {
  FockState res = interior_product(lambda, psi);
  Occ vac(static_cast<std::size_t>(psi.modes().n_modes()), 0);
  auto it = res.terms().find(vac);
  return it == res.terms().end() ? Coeff(&psi.table()) : it->second;
}

// bra of a ket: same occupations, conjugated coefficients.
inline DualState dual_of(const FockState& psi) {
  DualState r(&psi.modes(), &psi.table(), psi.n_max());
  for (const auto& [occ, c] : psi.terms()) r.add(occ, c.conj());
  return r;
}

}  // namespace gjet::fock
