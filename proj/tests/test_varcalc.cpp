#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "testutil.hpp"

#include "gjet/varcalc/euler.hpp"
#include "gjet/varcalc/form.hpp"
#include "gjet/varcalc/vertical.hpp"

using namespace gjet;
using namespace gjet::jetring;
using namespace gjet::varcalc;
using testutil::make_model;
using testutil::random_poly;

namespace {

Gen yg(const RingModel& m, MultiIndex a = MultiIndex{}) {
  return Gen::jet(m.sector_id("u"), 0, a);
}

// Minkowski eta for m=2 test models: diag(1,-1).
GQ eta2(int a, int b) {
  if (a != b) return GQ(0);
  return a == 0 ? GQ(1) : GQ(-1);
}

VerticalField random_vertical(Rng& rng, const RingModel& m) {
  VerticalField v(&m);
  for (std::size_t s = 0; s < m.sectors().size(); ++s) {
    for (int c = 0; c < m.sector(static_cast<int>(s)).ncomp; ++c) {
      Poly comp =
          random_poly(rng, m, 3, 2, 1, m.sector(static_cast<int>(s)).grade, /*theta=*/true);
      v.set(static_cast<int>(s), c, comp);
    }
  }
  return v;
}

BasicForm random_form(Rng& rng, const RingModel& m, int degree) {
  BasicForm a(&m, degree);
  int md = m.base_dim();
  std::vector<int> idx(static_cast<std::size_t>(degree));
  for (int k = 0; k < degree; ++k) idx[static_cast<std::size_t>(k)] = k;
  while (true) {
    a.set(idx, random_poly(rng, m, 3, 3, 2, std::nullopt, true));
    int pos = degree - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == md - 1 - (degree - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int k = pos + 1; k < degree; ++k)
      idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
  }
  return a;
}

}  // namespace

TEST_CASE("d_H of a scalar gives total derivatives") {
  RingModel m = make_model(2);
  Poly y = Poly::gen(m, yg(m));
  BasicForm df = d_H(BasicForm::scalar(y));
  CHECK(df.at({0}) == Poly::gen(m, yg(m, mi(0))));
  CHECK(df.at({1}) == Poly::gen(m, yg(m, mi(1))));
}

TEST_CASE("d_H of y dx1 matches d_H(y) wedge dx1") {
  // oracle: d_H(y dx^1) = d_H y ^ dx^1 = y_0 dx^0 ^ dx^1
  RingModel m = make_model(2);
  BasicForm a(&m, 1);
  a.set({1}, Poly::gen(m, yg(m)));
  BasicForm da = d_H(a);
  CHECK(da.at({0, 1}) == Poly::gen(m, yg(m, mi(0))));
}

TEST_CASE("top-degree forms differentiate to zero") {
  RingModel m = make_model(2);
  BasicForm top = BasicForm::volume(Poly::gen(m, yg(m)));
  CHECK(d_H(top).is_zero());
}

TEST_CASE("d_H is nilpotent on random forms") {
  for (int dim : {2, 4}) {
    RingModel m = make_model(dim);
    Rng rng(101 + dim);
    for (int it = 0; it < 25; ++it) {
      for (int q = 0; q <= dim - 2; ++q) {
        BasicForm a = random_form(rng, m, q);
        CHECK(d_H(d_H(a)).is_zero());
      }
    }
  }
}

TEST_CASE("dx_a representation round trips and diverges correctly") {
  RingModel m = make_model(2);
  Rng rng(55);
  std::vector<Poly> J{random_poly(rng, m, 3, 2, 1), random_poly(rng, m, 3, 2, 1)};
  BasicForm a = BasicForm::from_dual(J);
  auto back = a.dual_comps();
  CHECK(back[0] == J[0]);
  CHECK(back[1] == J[1]);
  CHECK(d_H(a).density() == divergence(J));
}

TEST_CASE("delta on simple symmetries") {
  RingModel m = make_model(2);
  Poly y = Poly::gen(m, yg(m));
  VerticalField v(&m);
  v.set(m.sector_id("u"), 0, y);

  // v = y d/dy, l = 1/2 y^2  ->  delta l = y^2
  Poly ell = GQ(rat(1, 2)) * (y * y);
  CHECK(delta(v, ell) == y * y);

  // constants are untouched
  CHECK(delta(v, Poly::scalar(m, GQ(7))).is_zero());
}

TEST_CASE("delta matches the momentum display on Lagrangians") {
  // delta[v]L = sum_A (d_A v^i) P^A_i with P^A_i = partial^A_i ell
  RingModel m = make_model(2);
  Rng rng(77);
  for (int it = 0; it < 20; ++it) {
    Poly ell = random_poly(rng, m, 5, 3, 1, even_grade, false);
    VerticalField v = random_vertical(rng, m);
    Prolongation pv(&v);
    Poly rhs = Poly::zero(m);
    for (std::uint64_t key : ell.jet_gens()) {
      Gen g{key};
      Gen base = Gen::jet(g.sector(), g.comp(), MultiIndex{});
      rhs += pv.at_key(base.key, g.mi()) * jetring::partial(ell, g);
    }
    CHECK(delta(v, ell) == rhs);
  }
}

TEST_CASE("delta and d_H commute") {
  for (int dim : {2, 4}) {
    RingModel m = make_model(dim);
    Rng rng(31 + dim);
    for (int it = 0; it < 20; ++it) {
      VerticalField v = random_vertical(rng, m);
      for (int q : {0, 1}) {
        BasicForm a = random_form(rng, m, q);
        BasicForm lhs = delta(v, d_H(a));
        BasicForm rhs = d_H(delta(v, a));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("delta is an even derivation for grade-matched fields") {
  RingModel m = make_model(2);
  Rng rng(41);
  for (int it = 0; it < 30; ++it) {
    VerticalField v = random_vertical(rng, m);
    Poly f = random_poly(rng, m, 4, 2, 1, std::nullopt, true);
    Poly g = random_poly(rng, m, 4, 2, 1, std::nullopt, true);
    Prolongation pv(&v);
    CHECK(delta(pv, f * g) == delta(pv, f) * g + f * delta(pv, g));
  }
}

TEST_CASE("prolongation tables") {
  RingModel m = make_model(2);
  Poly y = Poly::gen(m, yg(m));
  VerticalField v(&m);
  v.set(m.sector_id("u"), 0, y);
  Prolongation pv(&v);
  CHECK(pv.at(m.sector_id("u"), 0, mi()) == y);
  CHECK(pv.at(m.sector_id("u"), 0, mi(0)) == Poly::gen(m, yg(m, mi(0))));
  CHECK(pv.at(m.sector_id("u"), 0, mi(0, 1)) == Poly::gen(m, yg(m, mi(0, 1))));

  // constant shift: only the order-zero component survives
  VerticalField c(&m);
  c.set(m.sector_id("u"), 0, Poly::scalar(m, GQ(rat(3, 2))));
  Prolongation pc(&c);
  CHECK(pc.at(m.sector_id("u"), 0, mi(1)).is_zero());
}

TEST_CASE("euler-lagrange basics") {
  RingModel m = make_model(2);
  Poly y = Poly::gen(m, yg(m));

  LagrangianDensity quad{GQ(rat(1, 2)) * (y * y)};
  EulerLagrange f0(quad);
  CHECK(f0.component(yg(m).key) == y);

  // Klein-Gordon, m=2, eta=diag(1,-1), mu^2 = 2:
  // l = 1/2 eta^{ab} y_a y_b - y^2  ->  F = -y_00 + y_11 - 2y
  Poly ell = Poly::zero(m);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      GQ e = eta2(a, b);
      if (!e.is_zero())
        ell += (GQ(rat(1, 2)) * e) * (Poly::gen(m, yg(m, mi(a))) * Poly::gen(m, yg(m, mi(b))));
    }
  ell -= Poly::gen(m, yg(m)) * Poly::gen(m, yg(m));
  EulerLagrange fkg(LagrangianDensity{ell});
  Poly expect = -Poly::gen(m, yg(m, mi(0, 0))) + Poly::gen(m, yg(m, mi(1, 1))) -
                GQ(2) * Poly::gen(m, yg(m));
  CHECK(fkg.component(yg(m).key) == expect);
}

TEST_CASE("d_H-exact densities are variationally trivial") {
  RingModel m = make_model(2);
  Rng rng(61);
  for (int it = 0; it < 15; ++it) {
    Poly ell = random_poly(rng, m, 4, 3, 1, even_grade);
    std::vector<Poly> n{random_poly(rng, m, 3, 2, 1, even_grade),
                        random_poly(rng, m, 3, 2, 1, even_grade)};
    LagrangianDensity base{ell};
    LagrangianDensity shifted{ell + divergence(n)};
    EulerLagrange fa(base);
    EulerLagrange fb(shifted);
    for (const auto& [key, comp] : fb.comps()) CHECK(comp == fa.component(key));
    for (const auto& [key, comp] : fa.comps()) CHECK(comp == fb.component(key));
  }
}

TEST_CASE("momentum of the Klein-Gordon density") {
  RingModel m = make_model(2);
  Poly ell = Poly::zero(m);
  for (int a = 0; a < 2; ++a) {
    GQ e = eta2(a, a);
    ell += (GQ(rat(1, 2)) * e) * (Poly::gen(m, yg(m, mi(a))) * Poly::gen(m, yg(m, mi(a))));
  }
  Momentum P(LagrangianDensity{ell});
  CHECK(P.P(yg(m).key, mi(0)) == Poly::gen(m, yg(m, mi(0))));
  CHECK(P.P(yg(m).key, mi(1)) == -Poly::gen(m, yg(m, mi(1))));
  CHECK(P.order() == 1);
}

TEST_CASE("momentum rejects orders above two") {
  RingModel m = make_model(2);
  Poly y2 = Poly::gen(m, yg(m, mi(0, 0)));
  Poly y3 = jetring::total_derivative(y2, 0);
  CHECK_THROWS(Momentum(LagrangianDensity{y3 * y3}));
}

TEST_CASE("splitting theorem: delta[v]L - F|v = d_H(P|v)") {
  for (int dim : {2, 4}) {
    RingModel m = make_model(dim);
    Rng rng(87 + dim);
    for (int it = 0; it < 12; ++it) {
      // order 1
      Poly ell1 = random_poly(rng, m, 5, 3, 1, even_grade);
      VerticalField v = random_vertical(rng, m);
      CHECK(splitting_residual(LagrangianDensity{ell1}, v).is_zero());
      // order 2
      Poly ell2 = random_poly(rng, m, 4, 2, 2, even_grade);
      CHECK(splitting_residual(LagrangianDensity{ell2}, v).is_zero());
    }
  }
}

TEST_CASE("noether current for the phase symmetry of a complex scalar") {
  RingModel m(2);
  int sy = m.add_sector("y", even_grade, {});
  int sc = m.add_sector("yb", even_grade, {});
  Gen y = Gen::jet(sy, 0, MultiIndex{});
  Gen yb = Gen::jet(sc, 0, MultiIndex{});

  Poly ell = Poly::zero(m);
  for (int a = 0; a < 2; ++a) {
    GQ e = eta2(a, a);
    ell += e * (Poly::gen(m, Gen::jet(sc, 0, mi(a))) * Poly::gen(m, Gen::jet(sy, 0, mi(a))));
  }
  ell -= GQ(2) * (Poly::gen(m, yb) * Poly::gen(m, y));  // mu^2 = 2

  VerticalField v(&m);
  v.set(sy, 0, GQ::i() * Poly::gen(m, y));
  v.set(sc, 0, -GQ::i() * Poly::gen(m, yb));

  std::vector<Poly> n_zero{Poly::zero(m), Poly::zero(m)};
  NoetherResult res = noether_current(LagrangianDensity{ell}, v, n_zero);
  REQUIRE(res.ok());

  // J^a = i eta^{ab} (yb_b y - y_b yb)
  for (int a = 0; a < 2; ++a) {
    Poly expect = (GQ::i() * eta2(a, a)) *
                  (Poly::gen(m, Gen::jet(sc, 0, mi(a))) * Poly::gen(m, y) -
                   Poly::gen(m, Gen::jet(sy, 0, mi(a))) * Poly::gen(m, yb));
    CHECK(res.current[static_cast<std::size_t>(a)] == expect);
  }

  // v = 0, N = 0 gives the zero current
  VerticalField v0(&m);
  NoetherResult res0 = noether_current(LagrangianDensity{ell}, v0, n_zero);
  REQUIRE(res0.ok());
  for (const Poly& c : res0.current) CHECK(c.is_zero());
}

TEST_CASE("noether rejects a mismatched N") {
  RingModel m = make_model(2);
  Poly y = Poly::gen(m, yg(m));
  VerticalField v(&m);
  v.set(m.sector_id("u"), 0, y);
  LagrangianDensity L{GQ(rat(1, 2)) * (y * y)};
  std::vector<Poly> n_zero{Poly::zero(m), Poly::zero(m)};
  NoetherResult res = noether_current(L, v, n_zero);
  CHECK(!res.ok());
  CHECK(res.exactness_residual == y * y);
}

TEST_CASE("form serialization is deterministic") {
  RingModel m = make_model(2);
  BasicForm a(&m, 1);
  a.set({0}, Poly::gen(m, yg(m)));
  a.set({1}, GQ(rat(1, 2)) * Poly::gen(m, yg(m, mi(0))));
  CHECK(a.str() == "[dx0] (1)*u  +  [dx1] (1/2)*u_{,0}");
}

TEST_CASE("vertical bracket") {
  RingModel m = make_model(2);
  // [v, v] = 0 for an even field with constant components
  VerticalField v(&m);
  v.set(m.sector_id("u"), 0, Poly::scalar(m, GQ(2)));
  VerticalField vv = vert_bracket(v, v);
  for (const auto& [k, c] : vv.comps()) CHECK(c.is_zero());

  // [w, w] for the scaling field w = u d/du is zero as well
  VerticalField w(&m);
  w.set(m.sector_id("u"), 0, Poly::gen(m, yg(m)));
  VerticalField ww = vert_bracket(w, w);
  for (const auto& [k, c] : ww.comps()) CHECK(c.is_zero());

  // mixed: [u d/du, u^2 d/du] = u^2 d/du
  VerticalField w2(&m);
  Poly u = Poly::gen(m, yg(m));
  w2.set(m.sector_id("u"), 0, u * u);
  VerticalField br = vert_bracket(w, w2);
  CHECK(br.component(yg(m).key) == u * u);
}
