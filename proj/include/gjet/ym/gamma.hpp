#pragma once

#include "gjet/ym/matrix.hpp"

#include <string>
#include <vector>

namespace gjet::ym {

// Dirac gamma matrices with exact Gaussian-rational entries and the diagonal
// metric they represent: {gamma^a, gamma^b} = 2 g^{ab}. gamma^0 is Hermitian,
// the spatial matrices anti-Hermitian.
struct GammaAlgebra {
  std::vector<MatGQ> gamma;
  std::vector<Rat> metric_diag;

  int spin_dim() const { return gamma.empty() ? 0 : gamma[0].rows(); }

  std::string validate() const {
    int m = static_cast<int>(gamma.size());
    int n = spin_dim();
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        MatGQ anti = gamma[static_cast<std::size_t>(a)] * gamma[static_cast<std::size_t>(b)] +
                     gamma[static_cast<std::size_t>(b)] * gamma[static_cast<std::size_t>(a)];
        MatGQ expect(n, n);
        if (a == b)
          expect = GQ(Rat(2) * metric_diag[static_cast<std::size_t>(a)]) * MatGQ::identity(n);
        if (!(anti == expect))
          return "clifford relation fails at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
    for (int a = 0; a < m; ++a) {
      const MatGQ& g = gamma[static_cast<std::size_t>(a)];
      bool hermitian = (g.adjoint() == g);
      bool anti = (g.adjoint() == -g);
      if (a == 0 && !hermitian) return "gamma^0 not Hermitian";
      if (a > 0 && !anti) return "gamma^" + std::to_string(a) + " not anti-Hermitian";
    }
    return "";
  }
};

// Standard Dirac-basis matrices for Minkowski signature (+,-,-,-).
inline GammaAlgebra make_dirac_gamma() {
  GammaAlgebra g;
  g.metric_diag = {Rat(1), Rat(-1), Rat(-1), Rat(-1)};
  GQ z;
  GQ one(1), m1(-1), im = GQ::i(), mim = -GQ::i();
  auto mat = [&](std::initializer_list<std::initializer_list<GQ>> rows) {
    MatGQ m(4, 4);
    int r = 0;
    for (const auto& row : rows) {
      int c = 0;
      for (const GQ& v : row) m(r, c++) = v;
      ++r;
    }
    return m;
  };
  g.gamma.push_back(mat({{one, z, z, z}, {z, one, z, z}, {z, z, m1, z}, {z, z, z, m1}}));
  g.gamma.push_back(mat({{z, z, z, one}, {z, z, one, z}, {z, m1, z, z}, {m1, z, z, z}}));
  g.gamma.push_back(mat({{z, z, z, mim}, {z, z, im, z}, {z, im, z, z}, {mim, z, z, z}}));
  g.gamma.push_back(mat({{z, z, one, z}, {z, z, z, m1}, {m1, z, z, z}, {z, one, z, z}}));
  return g;
}

}  // namespace gjet::ym
