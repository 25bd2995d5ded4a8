#pragma once

#include "gjet/ym/gamma.hpp"

#include <array>
#include <string>
#include <vector>

namespace gjet::ym {

// On-shell momentum with rational contravariant components,
// (p^0)^2 - |p|^2 = m^2 > 0.
struct OnShellMomentum {
  std::array<Rat, 4> p;
  Rat mass;
};

// Integer quadruples (p0,p1,p2,p3) with p0^2 - p1^2 - p2^2 - p3^2 a positive
// perfect square; the enumeration oracle for projector tests.
inline std::vector<OnShellMomentum> enumerate_onshell(int range, std::size_t count) {
  std::vector<OnShellMomentum> out;
  for (int p0 = 1; p0 <= range && out.size() < count; ++p0)
    for (int p1 = -range; p1 <= range && out.size() < count; ++p1)
      for (int p2 = -range; p2 <= range && out.size() < count; ++p2)
        for (int p3 = -range; p3 <= range && out.size() < count; ++p3) {
          long long m2 = 1LL * p0 * p0 - 1LL * p1 * p1 - 1LL * p2 * p2 - 1LL * p3 * p3;
          if (m2 <= 0) continue;
          long long r = 0;
          while (r * r < m2) ++r;
          if (r * r != m2) continue;
          out.push_back({{Rat(p0), Rat(p1), Rat(p2), Rat(p3)}, Rat(r)});
        }
  return out;
}

struct ProjectorReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// gamma(p) = p_a gamma^a with the index lowered by the Minkowski metric.
inline MatGQ gamma_slash(const GammaAlgebra& ga, const OnShellMomentum& p) {
  MatGQ r(4, 4);
  for (int a = 0; a < 4; ++a) {
    Rat pa = p.p[static_cast<std::size_t>(a)] * ga.metric_diag[static_cast<std::size_t>(a)];
    if (pa == 0) continue;
    r = r + GQ(pa) * ga.gamma[static_cast<std::size_t>(a)];
  }
  return r;
}

// Electron/positron projectors P± = (m ± gamma(p)) / 2m onto
// W± = ker(m -+ gamma(p)). Checks idempotence, complementarity, rank 2,
// trace 2, and the signature of the Dirac Hermitian form restricted to W±.
inline ProjectorReport dirac_projectors(const GammaAlgebra& ga, const OnShellMomentum& p) {
  ProjectorReport rep;
  auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
  Rat m2 = p.p[0] * p.p[0] - p.p[1] * p.p[1] - p.p[2] * p.p[2] - p.p[3] * p.p[3];
  if (!(p.mass > 0) || m2 != p.mass * p.mass) {
    fail("momentum off shell");
    return rep;
  }
  MatGQ slash = gamma_slash(ga, p);
  GQ inv2m = GQ(Rat(1) / (Rat(2) * p.mass));
  MatGQ mass_id = GQ(p.mass) * MatGQ::identity(4);
  MatGQ plus = inv2m * (mass_id + slash);
  MatGQ minus = inv2m * (mass_id - slash);

  if (!(plus * plus == plus)) fail("P+^2 != P+");
  if (!(minus * minus == minus)) fail("P-^2 != P-");
  if (!(plus * minus).is_zero()) fail("P+ P- != 0");
  if (!(plus + minus == MatGQ::identity(4))) fail("P+ + P- != 1");
  if (plus.rank() != 2) fail("rank P+ != 2");
  if (minus.rank() != 2) fail("rank P- != 2");
  if (!(plus.trace() == GQ(2))) fail("tr P+ != 2");
  if (!(minus.trace() == GQ(2))) fail("tr P- != 2");

  // W± = ker(m -+ gamma(p)); Dirac form k(z,w) = z^dag gamma^0 w restricted
  // to W± is ±definite and the two spaces are mutually orthogonal.
  auto kernel_basis = [&](const MatGQ& proj_killer) { return proj_killer.kernel(); };
  MatGQ kplus = mass_id - slash;   // W+ = ker(m - gamma_p)
  MatGQ kminus = mass_id + slash;  // W- = ker(m + gamma_p)
  auto wplus = kernel_basis(kplus);
  auto wminus = kernel_basis(kminus);
  if (wplus.size() != 2) fail("dim W+ != 2");
  if (wminus.size() != 2) fail("dim W- != 2");
  const MatGQ& g0 = ga.gamma[0];
  auto pair_k = [&](const std::vector<GQ>& z, const std::vector<GQ>& w) {
    GQ s;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) s += z[static_cast<std::size_t>(r)].conj() * g0(r, c) * w[static_cast<std::size_t>(c)];
    return s;
  };
  if (wplus.size() == 2 && wminus.size() == 2) {
    for (const auto& zp : wplus)
      for (const auto& zm : wminus)
        if (!pair_k(zp, zm).is_zero()) fail("W+ not orthogonal to W-");
    auto definite = [&](const std::vector<std::vector<GQ>>& basis, int sign) {
      GQ g11 = pair_k(basis[0], basis[0]);
      GQ g12 = pair_k(basis[0], basis[1]);
      GQ g22 = pair_k(basis[1], basis[1]);
      if (!g11.is_real() || !g22.is_real()) return false;
      Rat det = (g11 * g22 - g12 * g12.conj()).re;
      if (sign > 0) return g11.re > 0 && det > 0;
      return g11.re < 0 && det > 0;
    };
    if (!definite(wplus, +1)) fail("Dirac form not positive on W+");
    if (!definite(wminus, -1)) fail("Dirac form not negative on W-");
  }
  return rep;
}

}  // namespace gjet::ym
