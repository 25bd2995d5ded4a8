#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gjet/core/rng.hpp"
#include "gjet/fock/lattice.hpp"

using namespace gjet;
using namespace gjet::fock;

namespace {

struct Fixture {
  ModeSet ms;
  SymTable tab;
  Fixture(int points, std::vector<SectorSpec> sectors) : ms(points, std::move(sectors)) {}

  FockState vac(int n_max = 4) const { return FockState::vacuum(ms, tab, n_max); }
  FockState ket(int mode, int n_max = 4) const {
    return FockState::single(ms, tab, mode, n_max);
  }
  Coeff c(GQ v) const { return Coeff(&tab, v); }
  FockOperator a(int mode) const {
    return FockOperator::absorb(ms, tab, {{mode, Coeff(&tab, GQ(1))}});
  }
  FockOperator ad(int mode) const {
    return FockOperator::emit(ms, tab, {{mode, Coeff(&tab, GQ(1))}});
  }
};

FockState random_state(Rng& rng, const Fixture& f, int n_max) {
  FockState s(&f.ms, &f.tab, n_max);
  int n = f.ms.n_modes();
  for (int t = rng.uniform(1, 3); t-- > 0;) {
    Occ occ(static_cast<std::size_t>(n), 0);
    for (int m = 0; m < n; ++m) {
      int cap = f.ms.fermionic(m) ? 1 : 2;
      occ[static_cast<std::size_t>(m)] = static_cast<std::uint8_t>(rng.uniform(0, cap));
    }
    s.add(std::move(occ), Coeff(&f.tab, rng.small_gq()));
  }
  return s;
}

ModeVector random_vector(Rng& rng, const Fixture& f, bool fermionic) {
  ModeVector v;
  for (int m = 0; m < f.ms.n_modes(); ++m) {
    if (f.ms.fermionic(m) != fermionic) continue;
    if (rng.chance(1, 2)) v.push_back({m, Coeff(&f.tab, rng.small_gq())});
  }
  if (v.empty())
    for (int m = 0; m < f.ms.n_modes(); ++m)
      if (f.ms.fermionic(m) == fermionic) {
        v.push_back({m, Coeff(&f.tab, GQ(1))});
        break;
      }
  return v;
}

FockState grade_part(const Fixture& f, const FockState& s, int want) {
  FockState out(&f.ms, &f.tab, s.n_max());
  for (const auto& [occ, c] : s.terms()) {
    int par = 0;
    for (int m = 0; m < f.ms.n_modes(); ++m)
      if (f.ms.fermionic(m)) par ^= occ[static_cast<std::size_t>(m)] & 1;
    if (par == want) out.add(occ, c);
  }
  return out;
}

}  // namespace

TEST_CASE("exterior product basics") {
  Fixture f(1, {{"f", Statistics::fermion, 2}, {"b", Statistics::boson, 1}});
  FockState m1 = f.ket(0), m2 = f.ket(1), b = f.ket(2);

  CHECK(exterior_product(m1, m1).is_zero());
  CHECK(exterior_product(m1, m2) == (-GQ(1)) * exterior_product(m2, m1));

  // bosonic monomial: |b> <> |b> matches emit(b) emit(b) on the vacuum
  FockState b2 = exterior_product(b, b);
  CHECK(b2 == apply_creator(apply_creator(f.vac(), 2), 2));
  CHECK(!b2.is_zero());

  CHECK(exterior_product(f.vac(), m1) == m1);
}

TEST_CASE("graded symmetry of the exterior product on random states") {
  Fixture f(2, {{"f", Statistics::fermion, 1}, {"b", Statistics::boson, 1}});
  Rng rng(19);
  for (int it = 0; it < 40; ++it) {
    FockState phi = random_state(rng, f, 6);
    FockState psi = random_state(rng, f, 6);
    FockState phi_even = grade_part(f, phi, 0), phi_odd = grade_part(f, phi, 1);
    FockState psi_even = grade_part(f, psi, 0), psi_odd = grade_part(f, psi, 1);
    FockState lhs = exterior_product(phi, psi);
    FockState rhs = exterior_product(psi_even, phi) + exterior_product(psi_odd, phi_even) -
                    exterior_product(psi_odd, phi_odd);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("interior product examples") {
  Fixture f(1, {{"f", Statistics::fermion, 2}});
  FockState m1 = f.ket(0), m2 = f.ket(1);
  DualState d1 = dual_of(m1), d2 = dual_of(m2);

  CHECK(interior_product(d1, m1) == f.vac());
  CHECK(interior_product(d1, f.vac()).is_zero());

  FockState pair = exterior_product(m1, m2);
  CHECK(interior_product(d1, pair) == m2);
  CHECK(interior_product(d2, pair) == (-GQ(1)) * m1);
}

TEST_CASE("iterated interior rule (zeta <> lambda) | psi = lambda | (zeta | psi)") {
  Fixture f(2, {{"f", Statistics::fermion, 1}, {"b", Statistics::boson, 1}});
  Rng rng(23);
  for (int it = 0; it < 40; ++it) {
    FockState zeta = f.ket(rng.uniform(0, f.ms.n_modes() - 1), 6);
    FockState lam = random_state(rng, f, 6);
    FockState psi = random_state(rng, f, 6);
    FockState lhs = interior_product(exterior_product(zeta, lam), psi);
    FockState rhs = interior_product(lam, interior_product(zeta, psi));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("interior product graded leibniz rule for single duals") {
  Fixture f(1, {{"f", Statistics::fermion, 2}, {"b", Statistics::boson, 1}});
  Rng rng(29);
  for (int it = 0; it < 40; ++it) {
    int zmode = rng.uniform(0, f.ms.n_modes() - 1);
    DualState z = dual_of(f.ket(zmode, 6));
    bool z_odd = f.ms.fermionic(zmode);
    int want = rng.uniform(0, 1);
    FockState phi = grade_part(f, random_state(rng, f, 6), want);
    FockState psi = random_state(rng, f, 6);
    FockState lhs = interior_product(z, exterior_product(phi, psi));
    FockState rhs = exterior_product(interior_product(z, phi), psi);
    FockState cross = exterior_product(phi, interior_product(z, psi));
    if (z_odd && want == 1)
      rhs = rhs - cross;
    else
      rhs = rhs + cross;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("ladder operators") {
  Fixture f(1, {{"f", Statistics::fermion, 2}});
  CHECK(apply(f.ad(0), f.vac()) == f.ket(0));
  FockOperator mixed = FockOperator::emit(f.ms, f.tab, {{0, f.c(GQ(1))}, {1, f.c(GQ::i())}});
  FockState expect = f.ket(0) + GQ::i() * f.ket(1);
  CHECK(apply(mixed, f.vac()) == expect);
}

TEST_CASE("transpose property of emission and absorption") {
  Fixture f(2, {{"f", Statistics::fermion, 1}, {"b", Statistics::boson, 1}});
  Rng rng(31);
  for (int it = 0; it < 30; ++it) {
    int mode = rng.uniform(0, f.ms.n_modes() - 1);
    DualState zeta = dual_of(f.ket(mode, 6));
    FockState psi = random_state(rng, f, 6);
    DualState lam = dual_of(random_state(rng, f, 6));
    Coeff lhs = pairing(lam, interior_product(zeta, psi));
    Coeff rhs = pairing(exterior_product(zeta, lam), psi);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("apply composes like the ladder factors") {
  Fixture f(1, {{"f", Statistics::fermion, 1}, {"b", Statistics::boson, 1}});
  Rng rng(37);
  FockState psi = random_state(rng, f, 6);
  CHECK(apply(FockOperator::identity(f.ms, f.tab), psi) == psi);

  FockOperator num = compose(f.ad(0), f.a(0));
  CHECK(apply(num, f.ket(0)) == f.ket(0));
  CHECK(apply(num, f.vac()).is_zero());
}

TEST_CASE("super-commutation relations of ladder operators") {
  Fixture f(2, {{"f", Statistics::fermion, 1}, {"b", Statistics::boson, 1}});
  FockOperator id = FockOperator::identity(f.ms, f.tab);

  CHECK(superbracket(f.a(0), f.ad(0)) == id);
  CHECK(superbracket(f.a(0), f.ad(2)).is_zero());
  CHECK(superbracket(f.a(1), f.ad(1)) == id);

  Rng rng(41);
  for (int it = 0; it < 25; ++it) {
    bool fermionic = rng.chance(1, 2);
    ModeVector zv = random_vector(rng, f, fermionic);
    ModeVector yv = random_vector(rng, f, fermionic);
    FockOperator az = FockOperator::absorb(f.ms, f.tab, zv);
    FockOperator ay = FockOperator::absorb(f.ms, f.tab, yv);
    FockOperator cz = FockOperator::emit(f.ms, f.tab, zv);
    FockOperator cy = FockOperator::emit(f.ms, f.tab, yv);
    CHECK(superbracket(az, ay).is_zero());
    CHECK(superbracket(cz, cy).is_zero());
    Coeff ip(&f.tab);
    for (const auto& [m1, c1] : yv)
      for (const auto& [m2, c2] : zv)
        if (m1 == m2) ip += c1 * c2;
    CHECK(superbracket(ay, cz) == ip * id);
  }
}

TEST_CASE("normal order: wick against the dense composition oracle") {
  Fixture f(1, {{"f", Statistics::fermion, 1}, {"b", Statistics::boson, 1}});
  int n_max = 4;
  DenseRep dense(f.ms, f.tab, n_max);
  Rng rng(43);
  for (int it = 0; it < 40; ++it) {
    int len = rng.uniform(1, 4);
    std::vector<Ladder> comp;
    std::vector<FockOperator> elementary;
    for (int t = 0; t < len; ++t) {
      bool create = rng.chance(1, 2);
      ModeVector v = random_vector(rng, f, rng.chance(1, 2));
      comp.push_back({create, v});
      elementary.push_back(create ? FockOperator::emit(f.ms, f.tab, v)
                                  : FockOperator::absorb(f.ms, f.tab, v));
    }
    FockOperator no = normal_order(f.ms, f.tab, comp, /*wick=*/true);
    auto acc = dense.matrix(elementary[0]);
    for (std::size_t t = 1; t < elementary.size(); ++t)
      acc = dense.mul(acc, dense.matrix(elementary[t]));
    auto mno = dense.matrix(no);
    for (int col = 0; col < dense.dim(); ++col) {
      if (dense.boson_occupancy(dense.state(col)) > n_max - static_cast<int>(elementary.size()))
        continue;
      for (int row = 0; row < dense.dim(); ++row)
        CHECK(acc[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] ==
              mno[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]);
    }
  }
}

TEST_CASE("normal order in wick and modified modes on one fermionic mode") {
  Fixture f(1, {{"f", Statistics::fermion, 1}});
  std::vector<Ladder> aad{{false, {{0, f.c(GQ(1))}}}, {true, {{0, f.c(GQ(1))}}}};
  FockOperator wick = normal_order(f.ms, f.tab, aad, true);
  FockOperator expect = FockOperator::identity(f.ms, f.tab) - compose(f.ad(0), f.a(0));
  CHECK(wick == expect);
  FockOperator modified = normal_order(f.ms, f.tab, aad, false);
  CHECK(modified == (-GQ(1)) * compose(f.ad(0), f.a(0)));
  std::vector<Ladder> ada{{true, {{0, f.c(GQ(1))}}}, {false, {{0, f.c(GQ(1))}}}};
  CHECK(normal_order(f.ms, f.tab, ada, true) == compose(f.ad(0), f.a(0)));
  CHECK(normal_order(f.ms, f.tab, ada, false) == compose(f.ad(0), f.a(0)));
}

TEST_CASE("modified product is graded-commutative on ladder generators") {
  Fixture f(1, {{"f", Statistics::fermion, 2}, {"b", Statistics::boson, 1}});
  Rng rng(47);
  for (int it = 0; it < 30; ++it) {
    bool c1 = rng.chance(1, 2), c2 = rng.chance(1, 2);
    int m1 = rng.uniform(0, 2), m2 = rng.uniform(0, 2);
    std::vector<Ladder> xy{{c1, {{m1, f.c(GQ(1))}}}, {c2, {{m2, f.c(GQ(1))}}}};
    std::vector<Ladder> yx{{c2, {{m2, f.c(GQ(1))}}}, {c1, {{m1, f.c(GQ(1))}}}};
    FockOperator lhs = normal_order(f.ms, f.tab, xy, false);
    FockOperator rhs = normal_order(f.ms, f.tab, yx, false);
    int sign = (f.ms.fermionic(m1) && f.ms.fermionic(m2)) ? -1 : 1;
    CHECK(lhs == (sign < 0 ? (-GQ(1)) * rhs : rhs));
  }
}

TEST_CASE("modified product is associative on normal-ordered generators") {
  Fixture f(1, {{"f", Statistics::fermion, 2}, {"b", Statistics::boson, 1}});
  Rng rng(53);
  auto modified_compose = [&](const FockOperator& a, const FockOperator& b) {
    FockOperator out(&f.ms, &f.tab);
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms()) {
        std::vector<Factor> seq = term_sequence(ka);
        auto tail = term_sequence(kb);
        seq.insert(seq.end(), tail.begin(), tail.end());
        out += normal_order_sequence(f.ms, f.tab, std::move(seq), ca * cb, false);
      }
    return out;
  };
  for (int it = 0; it < 20; ++it) {
    auto ladder = [&]() {
      return Ladder{rng.chance(1, 2), {{rng.uniform(0, 2), f.c(rng.small_gq())}}};
    };
    Ladder x = ladder(), y = ladder(), z = ladder();
    FockOperator xyz = normal_order(f.ms, f.tab, {x, y, z}, false);
    FockOperator xy = normal_order(f.ms, f.tab, {x, y}, false);
    FockOperator yz = normal_order(f.ms, f.tab, {y, z}, false);
    FockOperator zop(&f.ms, &f.tab);
    zop += z.create ? FockOperator::emit(f.ms, f.tab, z.vec)
                    : FockOperator::absorb(f.ms, f.tab, z.vec);
    FockOperator xop(&f.ms, &f.tab);
    xop += x.create ? FockOperator::emit(f.ms, f.tab, x.vec)
                    : FockOperator::absorb(f.ms, f.tab, x.vec);
    CHECK(modified_compose(xy, zop) == xyz);
    CHECK(modified_compose(xop, yz) == xyz);
  }
}

TEST_CASE("superbracket of derivations is a derivation of summed grade") {
  Fixture f(1, {{"f", Statistics::fermion, 2}, {"b", Statistics::boson, 1}});
  Rng rng(59);
  for (int it = 0; it < 15; ++it) {
    auto deriv = [&]() {
      ModeVector y = random_vector(rng, f, rng.chance(1, 2));
      ModeVector z = random_vector(rng, f, rng.chance(1, 2));
      return compose(FockOperator::emit(f.ms, f.tab, y), FockOperator::absorb(f.ms, f.tab, z));
    };
    FockOperator x1 = deriv(), x2 = deriv();
    auto g1 = x1.grade(), g2 = x2.grade();
    if (!g1 || !g2) continue;
    FockOperator br = superbracket(x1, x2);
    Grade gb = *g1 + *g2;
    FockState phi = random_state(rng, f, 6);
    FockState psi = random_state(rng, f, 6);
    for (int want : {0, 1}) {
      FockState part = grade_part(f, phi, want);
      if (part.is_zero()) continue;
      FockState lhs = apply(br, exterior_product(part, psi));
      FockState rhs = exterior_product(apply(br, part), psi);
      FockState cross = exterior_product(part, apply(br, psi));
      if (gb.odd() && want == 1)
        rhs = rhs - cross;
      else
        rhs = rhs + cross;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("single-site boson bracket matrix elements on the guarded subspace") {
  // <n|[phi,Pi]|n> = i for n <= n_max - 2, via the truncated dense oracle
  SymTable tab;
  int nu = tab.add("nu", GQ(rat(1, 2)));
  int om = tab.add("omega", GQ(5));
  ModeSet ms(1, {SectorSpec{"b", Statistics::boson, 1}});
  Coeff u(&tab), w(&tab);
  u.add(SymMono{{nu, 2}, {om, -1}}, GQ(1));
  w.add(SymMono{{nu, 2}, {om, 1}}, GQ(1));
  FockOperator phi =
      FockOperator::absorb(ms, tab, {{0, u}}) + FockOperator::emit(ms, tab, {{0, u}});
  FockOperator pi = (-GQ::i()) * FockOperator::absorb(ms, tab, {{0, w}}) +
                    GQ::i() * FockOperator::emit(ms, tab, {{0, w}});
  int n_max = 4;
  DenseRep dense(ms, tab, n_max);
  auto comm = dense.commutator(dense.matrix(phi), dense.matrix(pi), 1);
  for (int col = 0; col <= n_max - 2; ++col)
    for (int row = 0; row < dense.dim(); ++row) {
      Coeff expect(&tab);
      if (row == col) expect = Coeff(&tab, GQ::i());
      CHECK(comm[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] == expect);
    }
}

TEST_CASE("free field equal-time structure on small chains") {
  for (int n : {2, 3}) {
    auto rep = free_field_check(n, Rat(1), Statistics::fermion, 4);
    for (const auto& r : rep) {
      INFO(r.name, " ", r.witness);
      CHECK(r.pass);
    }
  }
  for (int n : {2, 3, 4}) {
    auto rep = free_field_check(n, Rat(2), Statistics::boson, 4);
    for (const auto& r : rep) {
      INFO(r.name, " ", r.witness);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("charge generates the symmetry") {
  ym::MatGQ phase(2, 2);
  phase(0, 0) = GQ::i();
  phase(1, 1) = GQ::i();
  for (const auto& r : charge_commutator_check(Statistics::boson, phase)) {
    INFO(r.name, " ", r.witness);
    CHECK(r.pass);
  }
  ym::MatGQ zero(2, 2);
  for (const auto& r : charge_commutator_check(Statistics::boson, zero)) {
    INFO(r.name, " ", r.witness);
    CHECK(r.pass);
  }
  ym::MatGQ isigma(2, 2);
  isigma(0, 1) = GQ::i();
  isigma(1, 0) = GQ::i();
  for (const auto& r : charge_commutator_check(Statistics::fermion, isigma)) {
    INFO(r.name, " ", r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("free field check demands at least two sites") {
  CHECK_THROWS_AS(free_field_check(1, Rat(1), Statistics::boson, 4), std::invalid_argument);
}

TEST_CASE("truncation overflow is dropped and flagged") {
  Fixture f(1, {{"b", Statistics::boson, 1}});
  FockState b = f.ket(0, 2);
  FockState b2 = exterior_product(b, b);
  CHECK(!b2.truncated());
  FockState b4 = exterior_product(b2, b2);
  CHECK(b4.truncated());
  CHECK(b4.is_zero());
}
