#pragma once

#include "gjet/jetring/poly.hpp"
#include "gjet/ym/gamma.hpp"
#include "gjet/ym/liealg.hpp"

#include <memory>
#include <string>

namespace gjet::ym {

using jetring::Gen;
using jetring::MultiIndex;
using jetring::Poly;
using jetring::RingModel;

enum class MetricMode { constant, formal };

struct ModelOptions {
  LieAlgebraData group;
  int base_dim = 4;
  MetricMode metric = MetricMode::constant;
  bool fermion_sector = true;
  bool ghost_sector = true;
  Rat xi = Rat(1);
  Rat mass = Rat(1);
  // skip the Lie-algebra axiom gate; lets broken structure constants flow
  // into the identity checks so the violation witnesses can be observed
  bool validate = true;
};

// The field content of the gauge model: fermion pair psi/psibar (grade 1),
// gauge field A (grade 0), ghost omega and antighost varpi (grade 1),
// Nakanishi-Lautrup field n (grade 0); plus the background metric handling.
class FieldModel {
 public:
  static FieldModel build(ModelOptions opt) {
    FieldModel fm;
    fm.opt_ = std::move(opt);
    if (fm.opt_.fermion_sector && fm.opt_.metric == MetricMode::formal)
      throw std::invalid_argument("fermion sector requires the constant metric mode");
    if (fm.opt_.fermion_sector && fm.opt_.base_dim != 4)
      throw std::invalid_argument("fermion sector requires base dimension 4");
    if (fm.opt_.fermion_sector && !fm.opt_.group.rep_is_rational())
      throw std::invalid_argument("fermion sector needs Gaussian-rational rep matrices");
    if (fm.opt_.validate) {
      auto check = validate_lie_algebra(fm.opt_.group);
      if (!check.ok())
        throw std::invalid_argument("lie algebra axioms fail: " + check.summary());
    }
    if (fm.opt_.fermion_sector) {
      fm.gamma_ = make_dirac_gamma();
      std::string err = fm.gamma_.validate();
      if (!err.empty()) throw std::logic_error("gamma algebra: " + err);
    }

    int m = fm.opt_.base_dim;
    int nl = fm.opt_.group.dim;
    int nf = fm.opt_.group.rep_dim;
    fm.ring_ = std::make_unique<RingModel>(m);
    RingModel& ring = *fm.ring_;
    if (fm.opt_.fermion_sector) {
      fm.psi_ = ring.add_sector("ps", odd_grade, {4, nf});
      fm.psibar_ = ring.add_sector("pb", odd_grade, {4, nf});
    }
    fm.gauge_ = ring.add_sector("A", even_grade, {m, nl});
    if (fm.opt_.ghost_sector) {
      fm.omega_ = ring.add_sector("om", odd_grade, {nl});
      fm.varpi_ = ring.add_sector("vp", odd_grade, {nl});
      fm.nl_ = ring.add_sector("n", even_grade, {nl});
    }
    if (fm.opt_.metric == MetricMode::formal) {
      for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b)
          fm.ginv_sym_[a][b] =
              ring.add_symbol("g" + std::to_string(a) + std::to_string(b), true);
      fm.sqrtg_sym_ = ring.add_symbol("sg", true);
    }
    fm.sqrt3_sym_ = ring.add_symbol("sqrt3", false, GQ(3));
    return fm;
  }

  const RingModel& ring() const { return *ring_; }
  const LieAlgebraData& group() const { return opt_.group; }
  const GammaAlgebra& gamma() const { return gamma_; }
  MetricMode metric_mode() const { return opt_.metric; }
  int base_dim() const { return opt_.base_dim; }
  int nl() const { return opt_.group.dim; }
  int nf() const { return opt_.group.rep_dim; }
  bool has_fermion() const { return opt_.fermion_sector; }
  bool has_ghost() const { return opt_.ghost_sector; }
  GQ xi() const { return GQ(opt_.xi); }
  GQ mass() const { return GQ(opt_.mass); }

  int psi_sector() const { return psi_; }
  int psibar_sector() const { return psibar_; }
  int gauge_sector() const { return gauge_; }
  int omega_sector() const { return omega_; }
  int varpi_sector() const { return varpi_; }
  int nl_sector() const { return nl_; }

  Gen psi(int alpha, int i, MultiIndex d = {}) const {
    return Gen::jet(psi_, ring_->flatten(psi_, {alpha, i}), d);
  }
  Gen psibar(int alpha, int i, MultiIndex d = {}) const {
    return Gen::jet(psibar_, ring_->flatten(psibar_, {alpha, i}), d);
  }
  Gen gauge(int a, int i, MultiIndex d = {}) const {
    return Gen::jet(gauge_, ring_->flatten(gauge_, {a, i}), d);
  }
  Gen ghost(int i, MultiIndex d = {}) const { return Gen::jet(omega_, i, d); }
  Gen antighost(int i, MultiIndex d = {}) const { return Gen::jet(varpi_, i, d); }
  Gen nlfield(int i, MultiIndex d = {}) const { return Gen::jet(nl_, i, d); }

  Poly P(Gen g) const { return Poly::gen(*ring_, g); }
  Poly zero() const { return Poly::zero(*ring_); }
  Poly one() const { return Poly::one(*ring_); }
  Poly scalar(GQ c) const { return Poly::scalar(*ring_, c); }
  Poly theta() const { return Poly::gen(*ring_, Gen::theta()); }

  // Inverse metric g^{ab}: exact Minkowski entries in constant mode, a free
  // background symbol (closed under formal d_a) otherwise.
  Poly ginv(int a, int b) const {
    if (opt_.metric == MetricMode::constant) {
      if (a != b) return zero();
      return scalar(GQ(a == 0 ? Rat(1) : Rat(-1)));
    }
    int lo = std::min(a, b), hi = std::max(a, b);
    return P(Gen::background(ginv_sym_[lo][hi]));
  }

  bool ginv_zero(int a, int b) const {
    return opt_.metric == MetricMode::constant && a != b;
  }

  Poly sqrtg() const {
    if (opt_.metric == MetricMode::constant) return one();
    return P(Gen::background(sqrtg_sym_));
  }

  // Lift of a Q(i)[sqrt3] scalar into the ring (sqrt3 enters as a constant
  // background generator with square 3).
  Poly lift(const Q3& v) const {
    Poly p = scalar(v.a);
    if (!v.b.is_zero()) p += v.b * P(Gen::background(sqrt3_sym_));
    return p;
  }

  Poly structure(int i, int j, int k) const { return lift(opt_.group.cc(i, j, k)); }

  // Rational representation entry (fermion couplings); the fermion sector is
  // rejected at build time for irrational frames.
  GQ rep(int i, int r, int c) const {
    const Q3& v = opt_.group.rep[static_cast<std::size_t>(i)](r, c);
    if (!v.is_rational()) throw std::logic_error("irrational rep entry");
    return v.a;
  }

 private:
  ModelOptions opt_;
  GammaAlgebra gamma_;
  std::unique_ptr<RingModel> ring_;
  int psi_ = -1, psibar_ = -1, gauge_ = -1, omega_ = -1, varpi_ = -1, nl_ = -1;
  int ginv_sym_[4][4] = {};
  int sqrtg_sym_ = -1;
  int sqrt3_sym_ = -1;
};

}  // namespace gjet::ym
