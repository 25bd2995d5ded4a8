#pragma once

#include "gjet/fock/op.hpp"
#include "gjet/report.hpp"
#include "gjet/ym/matrix.hpp"

#include <string>
#include <vector>

namespace gjet::fock {

// Dense operator image over the truncated occupation basis; the independent
// composition path used by the matrix-element oracles. Truncation artifacts
// live near the occupancy cap, exactly like the physical cutoff.
class DenseRep {
 public:
  DenseRep(const ModeSet& ms, const SymTable& tab, int n_max)
      : ms_(&ms), tab_(&tab), n_max_(n_max) {
    Occ occ(static_cast<std::size_t>(ms.n_modes()), 0);
    enumerate(occ, 0);
  }

  int dim() const { return static_cast<int>(basis_.size()); }
  const Occ& state(int k) const { return basis_[static_cast<std::size_t>(k)]; }

  int index_of(const Occ& occ) const {
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (basis_[k] == occ) return static_cast<int>(k);
    return -1;
  }

  int boson_occupancy(const Occ& occ) const {
    int t = 0;
    for (std::size_t m = 0; m < occ.size(); ++m)
      if (!ms_->fermionic(static_cast<int>(m))) t += occ[m];
    return t;
  }

  using Mat = std::vector<std::vector<Coeff>>;

  Mat matrix(const FockOperator& op) const {
    Mat m(basis_.size(), std::vector<Coeff>(basis_.size(), Coeff(tab_)));
    for (std::size_t col = 0; col < basis_.size(); ++col) {
      FockState b(ms_, tab_, n_max_);
      b.add(basis_[col], Coeff(tab_, GQ(1)));
      FockState out = apply(op, b);
      for (const auto& [occ, c] : out.terms()) {
        int row = index_of(occ);
        if (row >= 0) m[static_cast<std::size_t>(row)][col] = c;
      }
    }
    return m;
  }

  Mat mul(const Mat& a, const Mat& b) const {
    std::size_t n = basis_.size();
    Mat r(n, std::vector<Coeff>(n, Coeff(tab_)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (a[i][k].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
      }
    return r;
  }

  Mat commutator(const Mat& a, const Mat& b, int sign) const {  // ab - sign * ba
    Mat ab = mul(a, b);
    Mat ba = mul(b, a);
    std::size_t n = basis_.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        ab[i][j] = (sign > 0) ? ab[i][j] - ba[i][j] : ab[i][j] + ba[i][j];
    return ab;
  }

 private:
  void enumerate(Occ& occ, int mode) {
    if (mode == ms_->n_modes()) {
      basis_.push_back(occ);
      return;
    }
    int cap = ms_->fermionic(mode) ? 1 : n_max_;
    for (int n = 0; n <= cap; ++n) {
      occ[static_cast<std::size_t>(mode)] = static_cast<std::uint8_t>(n);
      if (boson_occupancy(occ) <= n_max_) enumerate(occ, mode + 1);
    }
    occ[static_cast<std::size_t>(mode)] = 0;
  }

  const ModeSet* ms_;
  const SymTable* tab_;
  int n_max_;
  std::vector<Occ> basis_;
};

// e^{2 pi i j / N} for the lattices with rational (or sqrt3-rational)
// trigonometry: N in {1,2,3,4,6}.
inline Coeff lattice_phase(const SymTable& tab, int sqrt3_sym, int n, int j) {
  j = ((j % n) + n) % n;
  Coeff out(&tab);
  auto with_sqrt3 = [&](GQ plain, GQ root_part) {
    out.add(SymMono{}, std::move(plain));
    if (!root_part.is_zero()) out.add(SymMono{{sqrt3_sym, 2}}, std::move(root_part));
  };
  switch (n) {
    case 1:
      with_sqrt3(GQ(1), GQ(0));
      return out;
    case 2:
      with_sqrt3(GQ(j == 0 ? 1 : -1), GQ(0));
      return out;
    case 3: {
      if (j == 0) with_sqrt3(GQ(1), GQ(0));
      if (j == 1) with_sqrt3(GQ(rat(-1, 2)), GQ(Rat(0), rat(1, 2)));
      if (j == 2) with_sqrt3(GQ(rat(-1, 2)), GQ(Rat(0), rat(-1, 2)));
      return out;
    }
    case 4: {
      static const int re[4] = {1, 0, -1, 0};
      static const int im[4] = {0, 1, 0, -1};
      with_sqrt3(GQ(Rat(re[j]), Rat(im[j])), GQ(0));
      return out;
    }
    case 6: {
      static const int re2[6] = {2, 1, -1, -2, -1, 1};  // 2*cos
      static const int sq[6] = {0, 1, 1, 0, -1, -1};    // sin in units sqrt3/2
      with_sqrt3(GQ(rat(re2[j], 2)), GQ(Rat(0), rat(sq[j], 2)));
      return out;
    }
    default:
      throw std::invalid_argument("lattice phases are exact only for N in {1,2,3,4,6}");
  }
}

// 2 - 2 cos(2 pi k / N): the squared lattice momentum of mode k.
inline Rat lattice_momentum_sq(int n, int k) {
  k = ((k % n) + n) % n;
  switch (n) {
    case 1:
      return Rat(0);
    case 2:
      return k == 0 ? Rat(0) : Rat(4);
    case 3:
      return k == 0 ? Rat(0) : Rat(3);
    case 4: {
      static const int v[4] = {0, 2, 4, 2};
      return Rat(v[k]);
    }
    case 6: {
      static const int v[6] = {0, 1, 3, 4, 3, 1};
      return Rat(v[k]);
    }
    default:
      throw std::invalid_argument("lattice momenta are exact only for N in {1,2,3,4,6}");
  }
}

// Free scalar field and conjugate momentum on the periodic chain, with the
// frequencies kept as formal symbols omega_k, omega_k^2 = m^2 + p_k^2:
//   phi(x) = sum_k nu omega_k^{-1/2} (e^{ikx} a_k + e^{-ikx} a+_k)
//   Pi(x)  = -i sum_k nu omega_k^{+1/2} (e^{ikx} a_k - e^{-ikx} a+_k)
// with nu^2 = 1/(2N).
struct LatticeField {
  ModeSet ms;
  SymTable tab;
  int sqrt3_sym = -1;
  std::vector<FockOperator> phi, pi;

  LatticeField(int n, const Rat& mass, Statistics stat)
      : ms(n, {SectorSpec{"chain", stat, 1}}) {
    sqrt3_sym = tab.add("sqrt3", GQ(3));
    bool fermion = (stat == Statistics::fermion);
    int nu = tab.add("nu", GQ(fermion ? Rat(1) / Rat(n) : Rat(1) / Rat(2 * n)));
    std::vector<int> omega(static_cast<std::size_t>(n / 2 + 1), -1);
    if (!fermion) {
      if (!(mass > 0)) throw std::invalid_argument("boson chain needs positive mass");
      for (int k = 0; k <= n / 2; ++k)
        omega[static_cast<std::size_t>(k)] =
            tab.add("omega" + std::to_string(k), GQ(mass * mass + lattice_momentum_sq(n, k)));
    }
    auto omega_class = [&](int k) {
      return omega[static_cast<std::size_t>(std::min(k, n - k))];  // omega_{-p} = omega_p
    };
    for (int x = 0; x < n; ++x) {
      FockOperator f(&ms, &tab), p(&ms, &tab);
      for (int k = 0; k < n; ++k) {
        int mode = ms.mode(k, 0, 0);
        Coeff u(&tab), w(&tab);
        if (fermion) {
          u.add(SymMono{{nu, 2}}, GQ(1));
          w = u;
        } else {
          int om = omega_class(k);
          u.add(SymMono{{nu, 2}, {om, -1}}, GQ(1));
          w.add(SymMono{{nu, 2}, {om, 1}}, GQ(1));
        }
        Coeff fwd = lattice_phase(tab, sqrt3_sym, n, k * x);
        Coeff bwd = lattice_phase(tab, sqrt3_sym, n, -k * x);
        f += FockOperator::absorb(ms, tab, {{mode, u * fwd}});
        if (!fermion) {
          f += FockOperator::emit(ms, tab, {{mode, u * bwd}});
          p += (-GQ::i()) * FockOperator::absorb(ms, tab, {{mode, w * fwd}});
          p += GQ::i() * FockOperator::emit(ms, tab, {{mode, w * bwd}});
        } else {
          // charged fermion: psi absorbs, the conjugate field creates
          p += FockOperator::emit(ms, tab, {{mode, w * bwd}});
        }
      }
      phi.push_back(std::move(f));
      pi.push_back(std::move(p));
    }
  }
};

// Equal-time structure of the free lattice field. Fermions: the super-
// commutators are exact on the whole space. Bosons: the operator identities
// are exact as well; the dense-matrix cross-check is restricted to matrix
// elements with occupancy <= n_max - 2, where the truncated composition is
// free of cutoff artifacts.
inline std::vector<CheckResult> free_field_check(int sites, const Rat& mass, Statistics stat,
                                                 int n_max) {
  if (sites < 2) throw std::invalid_argument("free_field_check needs N >= 2");
  std::vector<CheckResult> out;
  LatticeField lat(sites, mass, stat);
  const bool fermion = (stat == Statistics::fermion);
  const std::string field = fermion ? "psi" : "phi";
  const std::string conj = fermion ? "psi+" : "Pi";

  auto op_equal = [&](const std::string& name, const FockOperator& lhs,
                      const FockOperator& rhs) {
    FockOperator d = lhs - rhs;
    out.push_back({name, d.is_zero(), d.is_zero() ? "" : d.str()});
  };

  FockOperator id = FockOperator::identity(lat.ms, lat.tab);
  for (int x = 0; x < sites; ++x)
    for (int y = 0; y < sites; ++y) {
      FockOperator expect = FockOperator::zero(lat.ms, lat.tab);
      if (x == y) expect = fermion ? id : GQ::i() * id;
      op_equal("[[" + field + "(" + std::to_string(x) + ")," + conj + "(" + std::to_string(y) +
                   ")]] = " + (fermion ? "delta" : "i delta"),
               superbracket(lat.phi[static_cast<std::size_t>(x)],
                            lat.pi[static_cast<std::size_t>(y)]),
               expect);
      op_equal("[[" + field + "," + field + "]](" + std::to_string(x) + "," + std::to_string(y) +
                   ") = 0",
               superbracket(lat.phi[static_cast<std::size_t>(x)],
                            lat.phi[static_cast<std::size_t>(y)]),
               FockOperator::zero(lat.ms, lat.tab));
      op_equal("[[" + conj + "," + conj + "]](" + std::to_string(x) + "," + std::to_string(y) +
                   ") = 0",
               superbracket(lat.pi[static_cast<std::size_t>(x)],
                            lat.pi[static_cast<std::size_t>(y)]),
               FockOperator::zero(lat.ms, lat.tab));
    }

  // dense-matrix oracle for the equal-point bracket across the truncated basis
  DenseRep dense(lat.ms, lat.tab, n_max);
  int sign = fermion ? -1 : 1;  // anticommutator for odd fields
  auto mf = dense.matrix(lat.phi[0]);
  auto mp = dense.matrix(lat.pi[0]);
  auto bracket = dense.commutator(mf, mp, sign);
  bool pass = true;
  std::string witness;
  for (int col = 0; col < dense.dim(); ++col) {
    if (!fermion && dense.boson_occupancy(dense.state(col)) > n_max - 2) continue;
    for (int row = 0; row < dense.dim(); ++row) {
      Coeff expect(&lat.tab);
      if (row == col) expect = Coeff(&lat.tab, fermion ? GQ(1) : GQ::i());
      if (bracket[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != expect) {
        pass = false;
        witness = "entry (" + std::to_string(row) + "," + std::to_string(col) + ")";
      }
    }
  }
  out.push_back({"dense truncated oracle for [[" + field + "," + conj + "]] at x=0", pass,
                 witness});
  return out;
}

// Internal-symmetry charge on a finite mode set: phi^i = a_i, Pi_i = i a+_i,
// v^i = M^i_j phi^j with [[phi, v]] = 0; the charge Q = Pi_i v^i generates
// the symmetry, [[Q, phi^i]] = -i v^i (discrete sum, sqrt|g| = 1).
inline std::vector<CheckResult> charge_commutator_check(Statistics stat,
                                                        const ym::Matrix<GQ>& m_rot,
                                                        int n_max = 4) {
  std::vector<CheckResult> out;
  int n = m_rot.rows();
  ModeSet ms(1, {SectorSpec{"flavor", stat, n}});
  SymTable tab;

  std::vector<FockOperator> phi, pi, v;
  for (int i = 0; i < n; ++i) {
    phi.push_back(FockOperator::absorb(ms, tab, {{i, Coeff(&tab, GQ(1))}}));
    pi.push_back(GQ::i() * FockOperator::emit(ms, tab, {{i, Coeff(&tab, GQ(1))}}));
  }
  for (int i = 0; i < n; ++i) {
    FockOperator vi = FockOperator::zero(ms, tab);
    for (int j = 0; j < n; ++j)
      if (!m_rot(i, j).is_zero()) vi += m_rot(i, j) * phi[static_cast<std::size_t>(j)];
    v.push_back(std::move(vi));
  }

  FockOperator id = FockOperator::identity(ms, tab);
  bool equal_time_ok = true;
  auto op_check = [&](const std::string& name, const FockOperator& lhs, const FockOperator& rhs,
                      bool* flag = nullptr) {
    FockOperator d = lhs - rhs;
    out.push_back({name, d.is_zero(), d.is_zero() ? "" : d.str()});
    if (flag && !d.is_zero()) *flag = false;
  };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      FockOperator expect = (i == j) ? GQ::i() * id : FockOperator::zero(ms, tab);
      op_check("equal-time [[phi_" + std::to_string(i) + ", Pi_" + std::to_string(j) + "]]",
               superbracket(phi[static_cast<std::size_t>(i)], pi[static_cast<std::size_t>(j)]),
               expect, &equal_time_ok);
      op_check("equal-time [[phi_" + std::to_string(i) + ", phi_" + std::to_string(j) + "]]",
               superbracket(phi[static_cast<std::size_t>(i)], phi[static_cast<std::size_t>(j)]),
               FockOperator::zero(ms, tab), &equal_time_ok);
      op_check("equal-time [[Pi_" + std::to_string(i) + ", Pi_" + std::to_string(j) + "]]",
               superbracket(pi[static_cast<std::size_t>(i)], pi[static_cast<std::size_t>(j)]),
               FockOperator::zero(ms, tab), &equal_time_ok);
    }
  if (!equal_time_ok) {
    out.push_back({"charge generation", false, "aborted: equal-time rules failed"});
    return out;
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      op_check("[[phi_" + std::to_string(i) + ", v_" + std::to_string(j) + "]] = 0",
               superbracket(phi[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]),
               FockOperator::zero(ms, tab));

  FockOperator q = FockOperator::zero(ms, tab);
  for (int i = 0; i < n; ++i)
    q += compose(pi[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]);

  for (int i = 0; i < n; ++i)
    op_check("[[Q, phi_" + std::to_string(i) + "]] = -i v_" + std::to_string(i),
             superbracket(q, phi[static_cast<std::size_t>(i)]),
             (-GQ::i()) * v[static_cast<std::size_t>(i)]);

  // truncated dense-matrix oracle on the guarded subspace
  DenseRep dense(ms, tab, n_max);
  auto mq = dense.matrix(q);
  bool pass = true;
  std::string witness;
  for (int i = 0; i < n; ++i) {
    auto mphi = dense.matrix(phi[static_cast<std::size_t>(i)]);
    auto mv = dense.matrix(v[static_cast<std::size_t>(i)]);
    auto comm = dense.commutator(mq, mphi, 1);
    for (int col = 0; col < dense.dim(); ++col) {
      if (stat == Statistics::boson && dense.boson_occupancy(dense.state(col)) > n_max - 2)
        continue;
      for (int row = 0; row < dense.dim(); ++row) {
        Coeff expect = (-GQ::i()) * mv[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        if (comm[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != expect) {
          pass = false;
          witness = "i=" + std::to_string(i) + " entry (" + std::to_string(row) + "," +
                    std::to_string(col) + ")";
        }
      }
    }
  }
  out.push_back({"dense truncated oracle for [[Q, phi]] = -i v", pass, witness});
  return out;
}

}  // namespace gjet::fock
