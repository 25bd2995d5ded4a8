#pragma once

#include "gjet/core/gq.hpp"
#include "gjet/ym/matrix.hpp"

#include <string>
#include <vector>

namespace gjet::ym {

// Element of Q(i)[sqrt3]: a + b*sqrt3. Keeps su(3) structure constants and
// Gell-Mann matrices exact; sqrt3^2 reduces to 3.
struct Q3 {
  GQ a{};  // rational part
  GQ b{};  // sqrt3 part

  Q3() = default;
  Q3(GQ ra) : a(std::move(ra)) {}  // NOLINT
  Q3(GQ ra, GQ rb) : a(std::move(ra)), b(std::move(rb)) {}
  Q3(std::int64_t n) : a(GQ(n)) {}  // NOLINT

  static Q3 sqrt3(GQ coeff = GQ(1)) { return Q3(GQ(0), std::move(coeff)); }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_rational() const { return b.is_zero(); }

  Q3 conj() const { return Q3(a.conj(), b.conj()); }

  Q3 operator-() const { return Q3(-a, -b); }
  Q3& operator+=(const Q3& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  friend Q3 operator+(Q3 x, const Q3& y) { return x += y; }
  friend Q3 operator-(Q3 x, const Q3& y) {
    x.a -= y.a;
    x.b -= y.b;
    return x;
  }
  friend Q3 operator*(const Q3& x, const Q3& y) {
    return Q3(x.a * y.a + GQ(3) * (x.b * y.b), x.a * y.b + x.b * y.a);
  }
  friend bool operator==(const Q3& x, const Q3& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Q3& x, const Q3& y) { return !(x == y); }

  Q3 inv() const {
    GQ n = a * a - GQ(3) * (b * b);
    if (n.is_zero()) throw std::domain_error("Q3::inv");
    GQ ninv = n.inv();
    return Q3(a * ninv, -(b * ninv));
  }
};

inline std::string to_string(const Q3& x) {
  if (x.b.is_zero()) return to_string(x.a);
  std::string s = "(" + to_string(x.b) + ")*sqrt3";
  if (!x.a.is_zero()) s = to_string(x.a) + "+" + s;
  return s;
}

using MatQ3 = Matrix<Q3>;

// Structure constants c^I_{JK} and a faithful anti-Hermitian representation
// (the frame l_I of the gauge Lie algebra in End F).
struct LieAlgebraData {
  std::string name;
  int dim = 0;       // number of generators
  int rep_dim = 0;   // dimension of F
  std::vector<Q3> c;  // dim^3, c[(I*dim+J)*dim+K]
  std::vector<MatQ3> rep;
  bool orthonormal = true;

  const Q3& cc(int i, int j, int k) const {
    return c[static_cast<std::size_t>((i * dim + j) * dim + k)];
  }
  Q3& cc(int i, int j, int k) { return c[static_cast<std::size_t>((i * dim + j) * dim + k)]; }

  bool rep_is_rational() const {
    for (const MatQ3& m : rep)
      for (int i = 0; i < rep_dim; ++i)
        for (int j = 0; j < rep_dim; ++j)
          if (!m(i, j).is_rational()) return false;
    return true;
  }
};

struct LieViolation {
  std::string axiom;
  std::string where;
  std::string witness;
};

struct LieValidation {
  std::vector<LieViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const {
    std::string s;
    for (const auto& v : violations) s += v.axiom + " at " + v.where + ": " + v.witness + "; ";
    return s;
  }
};

// Checks antisymmetry of c, the Jacobi identity, bracket/representation
// consistency [l_J,l_K] = c^I_{JK} l_I, anti-Hermiticity and tracelessness of
// the frame, and (for frames declared orthonormal) total antisymmetry of
// c_{IJK}, which is what the gauge-sector identities actually use.
inline LieValidation validate_lie_algebra(const LieAlgebraData& g) {
  LieValidation out;
  auto idx3 = [](int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
  };
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k) {
        Q3 s = g.cc(i, j, k) + g.cc(i, k, j);
        if (!s.is_zero())
          out.violations.push_back({"antisymmetry", idx3(i, j, k), to_string(s)});
      }
  // sum over L of c^L_{KM} c^I_{JL} + c^L_{MJ} c^I_{KL} + c^L_{JK} c^I_{ML} = 0
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k)
        for (int m = 0; m < g.dim; ++m) {
          Q3 s;
          for (int l = 0; l < g.dim; ++l) {
            s += g.cc(l, k, m) * g.cc(i, j, l);
            s += g.cc(l, m, j) * g.cc(i, k, l);
            s += g.cc(l, j, k) * g.cc(i, m, l);
          }
          if (!s.is_zero())
            out.violations.push_back({"jacobi", idx3(j, k, m) + "->" + std::to_string(i),
                                      to_string(s)});
        }
  for (int j = 0; j < g.dim; ++j)
    for (int k = 0; k < g.dim; ++k) {
      MatQ3 lhs = g.rep[static_cast<std::size_t>(j)] * g.rep[static_cast<std::size_t>(k)] -
                  g.rep[static_cast<std::size_t>(k)] * g.rep[static_cast<std::size_t>(j)];
      for (int i = 0; i < g.dim; ++i)
        lhs = lhs - g.cc(i, j, k) * g.rep[static_cast<std::size_t>(i)];
      if (!lhs.is_zero())
        out.violations.push_back(
            {"bracket_representation", "(" + std::to_string(j) + "," + std::to_string(k) + ")",
             "[l_J,l_K] != c^I_{JK} l_I"});
    }
  bool abelian = true;
  for (const Q3& v : g.c) abelian &= v.is_zero();
  for (int i = 0; i < g.dim; ++i) {
    const MatQ3& l = g.rep[static_cast<std::size_t>(i)];
    if (!(l.adjoint() + l).is_zero())
      out.violations.push_back({"anti_hermitian", std::to_string(i), "l^dag != -l"});
    // u(1) acts by a phase; tracelessness only binds the nonabelian frames
    if (!abelian && !l.trace().is_zero())
      out.violations.push_back({"traceless", std::to_string(i), to_string(l.trace())});
  }
  if (g.orthonormal) {
    for (int i = 0; i < g.dim; ++i)
      for (int j = 0; j < g.dim; ++j)
        for (int k = 0; k < g.dim; ++k) {
          Q3 s = g.cc(i, j, k) + g.cc(k, j, i);
          if (!s.is_zero())
            out.violations.push_back({"total_antisymmetry", idx3(i, j, k), to_string(s)});
        }
  }
  return out;
}

inline LieAlgebraData make_u1() {
  LieAlgebraData g;
  g.name = "u1";
  g.dim = 1;
  g.rep_dim = 1;
  g.c.assign(1, Q3{});
  MatQ3 l(1, 1);
  l(0, 0) = Q3(GQ::i());
  g.rep = {l};
  return g;
}

inline LieAlgebraData make_su2() {
  LieAlgebraData g;
  g.name = "su2";
  g.dim = 3;
  g.rep_dim = 2;
  g.c.assign(27, Q3{});
  // c^I_{JK} = epsilon_{IJK}
  int eps[3][2] = {{1, 2}, {2, 0}, {0, 1}};
  for (int i = 0; i < 3; ++i) {
    g.cc(i, eps[i][0], eps[i][1]) = Q3(1);
    g.cc(i, eps[i][1], eps[i][0]) = Q3(GQ(-1));
  }
  // l_I = -(i/2) sigma_I
  GQ mi2 = GQ(Rat(0), rat(-1, 2));
  MatQ3 l1(2, 2), l2(2, 2), l3(2, 2);
  l1(0, 1) = Q3(mi2);
  l1(1, 0) = Q3(mi2);
  l2(0, 1) = Q3(mi2 * GQ(Rat(0), Rat(-1)));
  l2(1, 0) = Q3(mi2 * GQ(Rat(0), Rat(1)));
  l3(0, 0) = Q3(mi2);
  l3(1, 1) = Q3(-mi2);
  g.rep = {l1, l2, l3};
  return g;
}

inline LieAlgebraData make_su3() {
  LieAlgebraData g;
  g.name = "su3";
  g.dim = 8;
  g.rep_dim = 3;
  g.c.assign(8 * 8 * 8, Q3{});
  struct F {
    int i, j, k;
    Q3 v;
  };
  Q3 half(GQ(rat(1, 2)));
  Q3 s32 = Q3::sqrt3(GQ(rat(1, 2)));
  std::vector<F> f = {{0, 1, 2, Q3(1)},  {0, 3, 6, half},  {0, 4, 5, -half}, {1, 3, 5, half},
                      {1, 4, 6, half},   {2, 3, 4, half},  {2, 5, 6, -half}, {3, 4, 7, s32},
                      {5, 6, 7, s32}};
  auto set_totally_antisymmetric = [&](int i, int j, int k, const Q3& v) {
    int p[6][3] = {{i, j, k}, {j, k, i}, {k, i, j}, {j, i, k}, {i, k, j}, {k, j, i}};
    for (int t = 0; t < 3; ++t) g.cc(p[t][0], p[t][1], p[t][2]) = v;
    for (int t = 3; t < 6; ++t) g.cc(p[t][0], p[t][1], p[t][2]) = -v;
  };
  for (const F& e : f) set_totally_antisymmetric(e.i, e.j, e.k, e.v);

  // l_I = -(i/2) lambda_I
  GQ i1 = GQ::i();
  GQ m1(-1);
  auto mat = [&](std::initializer_list<std::initializer_list<Q3>> rows) {
    MatQ3 m(3, 3);
    int r = 0;
    for (const auto& row : rows) {
      int c = 0;
      for (const Q3& v : row) m(r, c++) = v;
      ++r;
    }
    return m;
  };
  Q3 z{};
  Q3 one(1);
  Q3 im(i1);
  MatQ3 lam1 = mat({{z, one, z}, {one, z, z}, {z, z, z}});
  MatQ3 lam2 = mat({{z, -im, z}, {im, z, z}, {z, z, z}});
  MatQ3 lam3 = mat({{one, z, z}, {z, Q3(m1), z}, {z, z, z}});
  MatQ3 lam4 = mat({{z, z, one}, {z, z, z}, {one, z, z}});
  MatQ3 lam5 = mat({{z, z, -im}, {z, z, z}, {im, z, z}});
  MatQ3 lam6 = mat({{z, z, z}, {z, z, one}, {z, one, z}});
  MatQ3 lam7 = mat({{z, z, z}, {z, z, -im}, {z, im, z}});
  // lambda_8 = (1/sqrt3) diag(1,1,-2) = (sqrt3/3) diag(1,1,-2)
  Q3 t3 = Q3::sqrt3(GQ(rat(1, 3)));
  MatQ3 lam8 = mat({{t3, z, z}, {z, t3, z}, {z, z, Q3(GQ(-2)) * t3}});
  Q3 mi2(GQ(Rat(0), rat(-1, 2)));
  for (const MatQ3& lam : {lam1, lam2, lam3, lam4, lam5, lam6, lam7, lam8})
    g.rep.push_back(mi2 * lam);
  return g;
}

}  // namespace gjet::ym
