#pragma once

#include "gjet/varcalc/euler.hpp"
#include "gjet/ym/fieldmodel.hpp"

#include <vector>

namespace gjet::ym {

using jetring::mi;
using varcalc::LagrangianDensity;

// nabla_b omega^I = omega^I_{,b} + c^I_{JH} omega^J A^H_b
inline Poly nabla_omega(const FieldModel& fm, int i, int b) {
  Poly r = fm.P(fm.ghost(i, mi(b)));
  for (int j = 0; j < fm.nl(); ++j)
    for (int h = 0; h < fm.nl(); ++h) {
      Poly c = fm.structure(i, j, h);
      if (c.is_zero()) continue;
      r += c * fm.P(fm.ghost(j)) * fm.P(fm.gauge(b, h));
    }
  return r;
}

// F^I_{ac} = A^I_{[a,c]} + c^I_{JH} A^J_a A^H_c
inline Poly field_strength(const FieldModel& fm, int i, int a, int c) {
  Poly r = fm.P(fm.gauge(a, i, mi(c))) - fm.P(fm.gauge(c, i, mi(a)));
  for (int j = 0; j < fm.nl(); ++j)
    for (int h = 0; h < fm.nl(); ++h) {
      Poly cc = fm.structure(i, j, h);
      if (cc.is_zero()) continue;
      r += cc * fm.P(fm.gauge(a, j)) * fm.P(fm.gauge(c, h));
    }
  return r;
}

// f^I sqrt|g| = d_a(g^{ab} sqrt|g| A^I_b); the sqrt|g| factor keeps the
// gauge-fixing function polynomial in both metric modes.
inline Poly f_times_sqrtg(const FieldModel& fm, int i) {
  Poly r = fm.zero();
  for (int a = 0; a < fm.base_dim(); ++a) {
    Poly inner = fm.zero();
    for (int b = 0; b < fm.base_dim(); ++b) {
      if (fm.ginv_zero(a, b)) continue;
      inner += fm.ginv(a, b) * fm.sqrtg() * fm.P(fm.gauge(b, i));
    }
    r += jetring::total_derivative(inner, a);
  }
  return r;
}

// F with raised indices, F^{I ab} = g^{ac} g^{bd} F^I_{cd}.
inline Poly field_strength_up(const FieldModel& fm, int i, int a, int b) {
  Poly r = fm.zero();
  for (int c = 0; c < fm.base_dim(); ++c) {
    if (fm.ginv_zero(a, c)) continue;
    for (int d = 0; d < fm.base_dim(); ++d) {
      if (fm.ginv_zero(b, d)) continue;
      r += fm.ginv(a, c) * fm.ginv(b, d) * field_strength(fm, i, c, d);
    }
  }
  return r;
}

// l_A = -1/4 g^{ab} g^{cd} F^I_{ac} F^I_{bd} sqrt|g|
inline Poly ell_gauge(const FieldModel& fm) {
  int m = fm.base_dim();
  std::vector<std::vector<std::vector<Poly>>> F(
      static_cast<std::size_t>(fm.nl()),
      std::vector<std::vector<Poly>>(static_cast<std::size_t>(m),
                                     std::vector<Poly>(static_cast<std::size_t>(m))));
  for (int i = 0; i < fm.nl(); ++i)
    for (int a = 0; a < m; ++a)
      for (int c = 0; c < m; ++c)
        F[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] =
            field_strength(fm, i, a, c);
  Poly r = fm.zero();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (fm.ginv_zero(a, b)) continue;
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          if (fm.ginv_zero(c, d)) continue;
          Poly sum = fm.zero();
          for (int i = 0; i < fm.nl(); ++i)
            sum += F[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)]
                    [static_cast<std::size_t>(c)] *
                   F[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)]
                    [static_cast<std::size_t>(d)];
          if (sum.is_zero()) continue;
          r += (GQ(rat(-1, 4))) * (fm.ginv(a, b) * fm.ginv(c, d) * sum * fm.sqrtg());
        }
    }
  return r;
}

// l_ghost = g^{ab} varpi_{I,a} nabla_b omega^I sqrt|g| + n_I (f^I + xi/2 n^I) sqrt|g|
inline Poly ell_ghost(const FieldModel& fm) {
  Poly r = fm.zero();
  for (int a = 0; a < fm.base_dim(); ++a)
    for (int b = 0; b < fm.base_dim(); ++b) {
      if (fm.ginv_zero(a, b)) continue;
      for (int i = 0; i < fm.nl(); ++i)
        r += fm.ginv(a, b) * fm.P(fm.antighost(i, mi(a))) * nabla_omega(fm, i, b) * fm.sqrtg();
    }
  GQ half_xi = GQ(rat(1, 2)) * fm.xi();
  for (int i = 0; i < fm.nl(); ++i) {
    r += fm.P(fm.nlfield(i)) * f_times_sqrtg(fm, i);
    r += half_xi * (fm.P(fm.nlfield(i)) * fm.P(fm.nlfield(i)) * fm.sqrtg());
  }
  return r;
}

// Dirac operator columns for the fermion Lagrangian (constant metric,
// vanishing spin connection).
inline Poly slash_psi(const FieldModel& fm, int alpha, int i) {
  const GammaAlgebra& ga = fm.gamma();
  Poly r = fm.zero();
  for (int a = 0; a < fm.base_dim(); ++a)
    for (int beta = 0; beta < 4; ++beta) {
      GQ g = ga.gamma[static_cast<std::size_t>(a)](alpha, beta);
      if (g.is_zero()) continue;
      Poly inner = fm.P(fm.psi(beta, i, mi(a)));
      for (int ii = 0; ii < fm.nl(); ++ii)
        for (int j = 0; j < fm.nf(); ++j) {
          GQ l = fm.rep(ii, i, j);
          if (l.is_zero()) continue;
          inner -= l * (fm.P(fm.gauge(a, ii)) * fm.P(fm.psi(beta, j)));
        }
      r += g * inner;
    }
  return r;
}

inline Poly slash_psibar(const FieldModel& fm, int alpha, int i) {
  const GammaAlgebra& ga = fm.gamma();
  Poly r = fm.zero();
  for (int a = 0; a < fm.base_dim(); ++a)
    for (int beta = 0; beta < 4; ++beta) {
      GQ g = ga.gamma[static_cast<std::size_t>(a)](beta, alpha);
      if (g.is_zero()) continue;
      Poly inner = fm.P(fm.psibar(beta, i, mi(a)));
      for (int ii = 0; ii < fm.nl(); ++ii)
        for (int j = 0; j < fm.nf(); ++j) {
          GQ l = fm.rep(ii, j, i);
          if (l.is_zero()) continue;
          inner += l * (fm.P(fm.gauge(a, ii)) * fm.P(fm.psibar(beta, j)));
        }
      r += g * inner;
    }
  return r;
}

// l_psi = ( i/2 (psibar slash(psi) - slash(psibar) psi) - m psibar psi ) sqrt|g|
inline Poly ell_fermion(const FieldModel& fm) {
  GQ ihalf = GQ(Rat(0), rat(1, 2));
  Poly r = fm.zero();
  for (int alpha = 0; alpha < 4; ++alpha)
    for (int i = 0; i < fm.nf(); ++i) {
      r += ihalf * (fm.P(fm.psibar(alpha, i)) * slash_psi(fm, alpha, i));
      r -= ihalf * (slash_psibar(fm, alpha, i) * fm.P(fm.psi(alpha, i)));
      r -= fm.mass() * (fm.P(fm.psibar(alpha, i)) * fm.P(fm.psi(alpha, i)));
    }
  return r;  // sqrt|g| = 1 in the constant mode this sector requires
}

inline LagrangianDensity build_lagrangian(const FieldModel& fm) {
  Poly ell = ell_gauge(fm);
  if (fm.has_fermion()) ell += ell_fermion(fm);
  if (fm.has_ghost()) ell += ell_ghost(fm);
  return LagrangianDensity{ell};
}

// L_psi + L_A alone (the delta[v]-closed part).
inline LagrangianDensity build_psi_gauge_lagrangian(const FieldModel& fm) {
  Poly ell = ell_gauge(fm);
  if (fm.has_fermion()) ell += ell_fermion(fm);
  return LagrangianDensity{ell};
}

// N = <n, *nabla omega>:  N^a = g^{ab} sqrt|g| n_I nabla_b omega^I
inline std::vector<Poly> current_N(const FieldModel& fm) {
  std::vector<Poly> n(static_cast<std::size_t>(fm.base_dim()), fm.zero());
  for (int a = 0; a < fm.base_dim(); ++a)
    for (int b = 0; b < fm.base_dim(); ++b) {
      if (fm.ginv_zero(a, b)) continue;
      for (int i = 0; i < fm.nl(); ++i)
        n[static_cast<std::size_t>(a)] +=
            fm.ginv(a, b) * fm.sqrtg() * fm.P(fm.nlfield(i)) * nabla_omega(fm, i, b);
    }
  return n;
}

// M = <varpi, *nabla omega>:  M^a = g^{ab} varpi_I nabla_b omega^I sqrt|g|
inline std::vector<Poly> current_M(const FieldModel& fm) {
  std::vector<Poly> m(static_cast<std::size_t>(fm.base_dim()), fm.zero());
  for (int a = 0; a < fm.base_dim(); ++a)
    for (int b = 0; b < fm.base_dim(); ++b) {
      if (fm.ginv_zero(a, b)) continue;
      for (int i = 0; i < fm.nl(); ++i)
        m[static_cast<std::size_t>(a)] +=
            fm.ginv(a, b) * fm.P(fm.antighost(i)) * nabla_omega(fm, i, b) * fm.sqrtg();
    }
  return m;
}

// K = varpi_I (f^I + xi/2 n^I) sqrt|g| d^m x
inline Poly density_K(const FieldModel& fm) {
  Poly r = fm.zero();
  GQ half_xi = GQ(rat(1, 2)) * fm.xi();
  for (int i = 0; i < fm.nl(); ++i) {
    r += fm.P(fm.antighost(i)) * f_times_sqrtg(fm, i);
    r += half_xi * (fm.P(fm.antighost(i)) * fm.P(fm.nlfield(i)) * fm.sqrtg());
  }
  return r;
}

// Ghost part of the displayed BRST current:
//   g^{ab} (n_I nabla_b omega^I - 1/2 varpi_{I,b} c^I_{JH} omega^J omega^H) sqrt|g|
inline std::vector<Poly> current_J_ghost(const FieldModel& fm) {
  std::vector<Poly> j(static_cast<std::size_t>(fm.base_dim()), fm.zero());
  GQ mhalf = GQ(rat(-1, 2));
  for (int a = 0; a < fm.base_dim(); ++a)
    for (int b = 0; b < fm.base_dim(); ++b) {
      if (fm.ginv_zero(a, b)) continue;
      Poly inner = fm.zero();
      for (int i = 0; i < fm.nl(); ++i) {
        inner += fm.P(fm.nlfield(i)) * nabla_omega(fm, i, b);
        for (int jj = 0; jj < fm.nl(); ++jj)
          for (int h = 0; h < fm.nl(); ++h) {
            Poly c = fm.structure(i, jj, h);
            if (c.is_zero()) continue;
            inner += mhalf * (fm.P(fm.antighost(i, mi(b))) * c * fm.P(fm.ghost(jj)) *
                              fm.P(fm.ghost(h)));
          }
      }
      j[static_cast<std::size_t>(a)] += fm.ginv(a, b) * inner * fm.sqrtg();
    }
  return j;
}

// Matter/gauge part of the displayed BRST current:
//   (-i <psibar gamma^a omega psi> + <F^{ab}, nabla_b omega>) sqrt|g|
inline std::vector<Poly> current_J_psi_gauge(const FieldModel& fm) {
  std::vector<Poly> j(static_cast<std::size_t>(fm.base_dim()), fm.zero());
  for (int a = 0; a < fm.base_dim(); ++a) {
    Poly acc = fm.zero();
    if (fm.has_fermion()) {
      GQ mi_unit = -GQ::i();
      for (int alpha = 0; alpha < 4; ++alpha)
        for (int beta = 0; beta < 4; ++beta) {
          GQ g = fm.gamma().gamma[static_cast<std::size_t>(a)](alpha, beta);
          if (g.is_zero()) continue;
          for (int i = 0; i < fm.nf(); ++i)
            for (int ii = 0; ii < fm.nl(); ++ii)
              for (int jj = 0; jj < fm.nf(); ++jj) {
                GQ l = fm.rep(ii, i, jj);
                if (l.is_zero()) continue;
                acc += (mi_unit * g * l) *
                       (fm.P(fm.psibar(alpha, i)) * fm.P(fm.ghost(ii)) * fm.P(fm.psi(beta, jj)));
              }
        }
    }
    for (int b = 0; b < fm.base_dim(); ++b)
      for (int i = 0; i < fm.nl(); ++i) {
        Poly fup = field_strength_up(fm, i, a, b);
        if (!fup.is_zero()) acc += fup * nabla_omega(fm, i, b);
      }
    j[static_cast<std::size_t>(a)] = acc * fm.sqrtg();
  }
  return j;
}

inline std::vector<Poly> current_J_display(const FieldModel& fm) {
  std::vector<Poly> j = current_J_psi_gauge(fm);
  std::vector<Poly> g = current_J_ghost(fm);
  for (std::size_t a = 0; a < j.size(); ++a) j[a] += g[a];
  return j;
}

// Faddeev-Popov current J_FP^a = g^{ab} (varpi_{I,b} omega^I + varpi_I nabla_b omega^I) sqrt|g|
inline std::vector<Poly> current_J_FP(const FieldModel& fm) {
  std::vector<Poly> j(static_cast<std::size_t>(fm.base_dim()), fm.zero());
  for (int a = 0; a < fm.base_dim(); ++a)
    for (int b = 0; b < fm.base_dim(); ++b) {
      if (fm.ginv_zero(a, b)) continue;
      Poly inner = fm.zero();
      for (int i = 0; i < fm.nl(); ++i) {
        inner += fm.P(fm.antighost(i, mi(b))) * fm.P(fm.ghost(i));
        inner += fm.P(fm.antighost(i)) * nabla_omega(fm, i, b);
      }
      j[static_cast<std::size_t>(a)] += fm.ginv(a, b) * inner * fm.sqrtg();
    }
  return j;
}

}  // namespace gjet::ym
