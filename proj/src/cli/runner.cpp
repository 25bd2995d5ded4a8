#include "gjet/cli/runner.hpp"

#include "gjet/core/rng.hpp"
#include "gjet/fock/lattice.hpp"
#include "gjet/ym/brst.hpp"
#include "gjet/ym/curvature.hpp"
#include "gjet/ym/dirac.hpp"

#include "json.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <thread>

namespace gjet::cli {

using nlohmann::ordered_json;

namespace {

Rat rat_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw std::invalid_argument("expected integer or \"p/q\" string");
}

ym::LieAlgebraData group_from_json(const ordered_json& j) {
  if (j.is_string()) {
    std::string g = j.get<std::string>();
    if (g == "u1") return ym::make_u1();
    if (g == "su2") return ym::make_su2();
    if (g == "su3") return ym::make_su3();
    throw std::invalid_argument("unknown group alias " + g);
  }
  ym::LieAlgebraData g;
  g.name = "inline";
  g.dim = j.at("dim").get<int>();
  const auto& c = j.at("c");
  g.c.assign(static_cast<std::size_t>(g.dim * g.dim * g.dim), ym::Q3{});
  for (int i = 0; i < g.dim; ++i)
    for (int a = 0; a < g.dim; ++a)
      for (int b = 0; b < g.dim; ++b)
        g.cc(i, a, b) = ym::Q3(GQ(rat_from_json(c.at(i).at(a).at(b))));
  const auto& l = j.at("l");
  g.rep_dim = static_cast<int>(l.at(0).size());
  for (int i = 0; i < g.dim; ++i) {
    ym::MatQ3 m(g.rep_dim, g.rep_dim);
    for (int r = 0; r < g.rep_dim; ++r)
      for (int col = 0; col < g.rep_dim; ++col) {
        const auto& e = l.at(i).at(r).at(col);
        GQ v;
        if (e.is_array())
          v = GQ(rat_from_json(e.at(0)), rat_from_json(e.at(1)));
        else
          v = GQ(rat_from_json(e));
        m(r, col) = ym::Q3(v);
      }
    g.rep.push_back(std::move(m));
  }
  g.orthonormal = j.value("orthonormal", true);
  return g;
}

ModelSpec builtin_spec(const std::string& name) {
  ModelSpec spec;
  spec.name = name;
  spec.dimension = 4;
  spec.metric = ym::MetricMode::formal;
  spec.xi = Rat(1);
  spec.mass = Rat(1);
  if (name == "u1") {
    spec.group = ym::make_u1();
  } else if (name == "su2") {
    spec.group = ym::make_su2();
  } else if (name == "su3") {
    spec.group = ym::make_su3();
    spec.fermion_sector = false;  // Gell-Mann frame is irrational in the fermion coupling
  } else {
    throw std::invalid_argument("unknown builtin model " + name);
  }
  return spec;
}

// Scratch ring for the model-independent property suites.
jetring::RingModel property_model(int dim) {
  jetring::RingModel m(dim);
  m.add_sector("u", even_grade, {});
  m.add_sector("w", even_grade, {2});
  m.add_sector("om", odd_grade, {2});
  m.add_symbol("B", true);
  return m;
}

jetring::MultiIndex random_mi(Rng& rng, int dim, int max_order) {
  jetring::MultiIndex a;
  for (int len = rng.uniform(0, max_order); len-- > 0;) a = a.plus(rng.uniform(0, dim - 1));
  return a;
}

jetring::Gen random_gen(Rng& rng, const jetring::RingModel& m, int max_order) {
  if (rng.chance(1, 6))
    return jetring::Gen::background(0, random_mi(rng, m.base_dim(), 1));
  int sec = rng.uniform(0, static_cast<int>(m.sectors().size()) - 1);
  int comp = rng.uniform(0, m.sector(sec).ncomp - 1);
  return jetring::Gen::jet(sec, comp, random_mi(rng, m.base_dim(), max_order));
}

jetring::Poly random_poly(Rng& rng, const jetring::RingModel& m, int nterms, int max_degree,
                          int max_order, std::optional<Grade> parity = std::nullopt) {
  jetring::Poly p(&m);
  for (int t = 0; t < nterms; ++t) {
    std::vector<jetring::Gen> raw;
    for (int d = rng.uniform(0, max_degree); d-- > 0;)
      raw.push_back(random_gen(rng, m, max_order));
    if (parity) {
      Grade g = even_grade;
      for (auto gen : raw) g = g + gen.grade(m);
      if (g != *parity) continue;
    }
    p.add_raw(raw, rng.small_gq());
  }
  return p;
}

varcalc::VerticalField random_vertical(Rng& rng, const jetring::RingModel& m) {
  varcalc::VerticalField v(&m);
  for (std::size_t s = 0; s < m.sectors().size(); ++s)
    for (int c = 0; c < m.sector(static_cast<int>(s)).ncomp; ++c)
      v.set(static_cast<int>(s), c,
            random_poly(rng, m, 3, 2, 1, m.sector(static_cast<int>(s)).grade));
  return v;
}

varcalc::BasicForm random_form(Rng& rng, const jetring::RingModel& m, int degree) {
  varcalc::BasicForm a(&m, degree);
  int md = m.base_dim();
  std::vector<int> idx(static_cast<std::size_t>(degree));
  for (int k = 0; k < degree; ++k) idx[static_cast<std::size_t>(k)] = k;
  while (true) {
    a.set(idx, random_poly(rng, m, 3, 3, 2));
    int pos = degree - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == md - 1 - (degree - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int k = pos + 1; k < degree; ++k)
      idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
  }
  return a;
}

void push(std::vector<CheckResult>& items, const std::string& name, bool pass,
          const std::string& witness = "") {
  items.push_back({name, pass, pass ? "" : witness});
}

// ---------------------------------------------------------------- fock checks

std::vector<CheckResult> check_fock_axioms(const ModelSpec&, std::uint64_t seed) {
  using namespace fock;
  std::vector<CheckResult> items;
  Rng rng(seed ^ 0xf0cca11);
  for (int trial = 0; trial < 10; ++trial) {
    int points = rng.uniform(1, 3);
    std::vector<SectorSpec> sectors;
    int nsec = rng.uniform(1, 2);
    for (int s = 0; s < nsec; ++s)
      sectors.push_back({"s" + std::to_string(s),
                         rng.chance(1, 2) ? Statistics::fermion : Statistics::boson,
                         rng.uniform(1, 2)});
    ModeSet ms(points, sectors);
    SymTable tab;
    auto rand_vec = [&](bool fermionic) {
      ModeVector v;
      for (int m = 0; m < ms.n_modes(); ++m)
        if (ms.fermionic(m) == fermionic && rng.chance(1, 2))
          v.push_back({m, Coeff(&tab, rng.small_gq())});
      if (v.empty())
        for (int m = 0; m < ms.n_modes(); ++m)
          if (ms.fermionic(m) == fermionic) {
            v.push_back({m, Coeff(&tab, GQ(1))});
            break;
          }
      return v;
    };
    bool has_f = false, has_b = false;
    for (int m = 0; m < ms.n_modes(); ++m) (ms.fermionic(m) ? has_f : has_b) = true;
    std::string tag = " #" + std::to_string(trial);
    FockOperator id = FockOperator::identity(ms, tab);
    for (bool fermionic : {true, false}) {
      if ((fermionic && !has_f) || (!fermionic && !has_b)) continue;
      ModeVector zv = rand_vec(fermionic), yv = rand_vec(fermionic);
      FockOperator az = FockOperator::absorb(ms, tab, zv);
      FockOperator ay = FockOperator::absorb(ms, tab, yv);
      FockOperator cz = FockOperator::emit(ms, tab, zv);
      FockOperator cy = FockOperator::emit(ms, tab, yv);
      std::string kind = fermionic ? "fermion" : "boson";
      push(items, "[[a,a]] = 0 " + kind + tag, superbracket(az, ay).is_zero());
      push(items, "[[a+,a+]] = 0 " + kind + tag, superbracket(cy, cz).is_zero());
      Coeff ip(&tab);
      for (const auto& [m1, c1] : yv)
        for (const auto& [m2, c2] : zv)
          if (m1 == m2) ip += c1 * c2;
      FockOperator lhs = superbracket(ay, cz);
      push(items, "[[a,a+]] = <zeta,z> 1 " + kind + tag, lhs == ip * id,
           (lhs - ip * id).str());
      // dense realization on the truncated basis; bosonic columns guarded at
      // occupancy <= n_max - 2
      if (ms.n_modes() <= 4) {
        int n_max = 4;
        DenseRep dense(ms, tab, n_max);
        auto bracket =
            dense.commutator(dense.matrix(ay), dense.matrix(cz), fermionic ? -1 : 1);
        auto mid = dense.matrix(ip * id);
        bool ok = true;
        for (int col = 0; col < dense.dim() && ok; ++col) {
          if (!fermionic && dense.boson_occupancy(dense.state(col)) > n_max - 2) continue;
          for (int row = 0; row < dense.dim(); ++row)
            if (bracket[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] !=
                mid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]) {
              ok = false;
              break;
            }
        }
        push(items, "dense guarded [[a,a+]] " + kind + tag, ok);
      }
    }
  }
  return items;
}

std::vector<CheckResult> check_fock_normal_order(const ModelSpec&, std::uint64_t seed) {
  using namespace fock;
  std::vector<CheckResult> items;
  Rng rng(seed ^ 0x0f0f1);
  ModeSet ms(1, {SectorSpec{"f", Statistics::fermion, 1}, SectorSpec{"b", Statistics::boson, 1}});
  SymTable tab;
  int n_max = 4;
  DenseRep dense(ms, tab, n_max);
  for (int it = 0; it < 30; ++it) {
    int len = rng.uniform(1, 4);
    std::vector<Ladder> comp;
    std::vector<FockOperator> elementary;
    for (int t = 0; t < len; ++t) {
      bool create = rng.chance(1, 2);
      ModeVector v;
      for (int m = 0; m < ms.n_modes(); ++m)
        if (rng.chance(1, 2)) v.push_back({m, Coeff(&tab, rng.small_gq())});
      if (v.empty()) v.push_back({rng.uniform(0, 1), Coeff(&tab, GQ(1))});
      comp.push_back({create, v});
      elementary.push_back(create ? FockOperator::emit(ms, tab, v)
                                  : FockOperator::absorb(ms, tab, v));
    }
    FockOperator no = normal_order(ms, tab, comp, true);
    auto acc = dense.matrix(elementary[0]);
    for (std::size_t t = 1; t < elementary.size(); ++t)
      acc = dense.mul(acc, dense.matrix(elementary[t]));
    auto mno = dense.matrix(no);
    bool ok = true;
    for (int col = 0; col < dense.dim() && ok; ++col) {
      if (dense.boson_occupancy(dense.state(col)) > n_max - len) continue;
      for (int row = 0; row < dense.dim(); ++row)
        if (acc[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] !=
            mno[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]) {
          ok = false;
          break;
        }
    }
    push(items, "wick normal order = dense composition #" + std::to_string(it), ok);
  }
  return items;
}

std::vector<CheckResult> check_fock_lattice(const ModelSpec&, std::uint64_t) {
  using namespace fock;
  std::vector<CheckResult> items;
  for (int n : {2, 3}) {
    auto rep = free_field_check(n, Rat(1), Statistics::fermion, 4);
    for (auto& r : rep)
      items.push_back({"fermion N=" + std::to_string(n) + " " + r.name, r.pass, r.witness});
  }
  for (int n : {2, 3}) {
    auto rep = free_field_check(n, Rat(2), Statistics::boson, 4);
    for (auto& r : rep)
      items.push_back({"boson N=" + std::to_string(n) + " " + r.name, r.pass, r.witness});
  }
  ym::MatGQ phase(2, 2);
  phase(0, 0) = GQ::i();
  phase(1, 1) = GQ::i();
  for (auto& r : fock::charge_commutator_check(Statistics::boson, phase))
    items.push_back({"charge boson-phase " + r.name, r.pass, r.witness});
  ym::MatGQ isigma(2, 2);
  isigma(0, 1) = GQ::i();
  isigma(1, 0) = GQ::i();
  for (auto& r : fock::charge_commutator_check(Statistics::fermion, isigma))
    items.push_back({"charge fermion-sigma " + r.name, r.pass, r.witness});
  ym::MatGQ zero(2, 2);
  for (auto& r : fock::charge_commutator_check(Statistics::boson, zero))
    items.push_back({"charge M=0 " + r.name, r.pass, r.witness});
  return items;
}

// ------------------------------------------------------- ring/varcalc checks

std::vector<CheckResult> check_ring_properties(const ModelSpec&, std::uint64_t seed) {
  using namespace jetring;
  std::vector<CheckResult> items;
  RingModel m = property_model(2);
  Rng rng(seed ^ 0x417);
  bool assoc = true, comm = true, leibniz = true, even_der = true, commute_d = true,
       partial_comm = true;
  for (int it = 0; it < 50; ++it) {
    Grade ga(rng.uniform(0, 1)), gb(rng.uniform(0, 1));
    Poly f = random_poly(rng, m, 4, 3, 1, ga);
    Poly g = random_poly(rng, m, 4, 3, 1, gb);
    Poly h = random_poly(rng, m, 3, 2, 1);
    assoc &= ((f * g) * h == f * (g * h));
    Poly gf = g * f;
    comm &= (f * g == (koszul_sign(ga, gb) < 0 ? -gf : gf));
    Gen target = Gen::jet(rng.uniform(0, 2), 0, MultiIndex{});
    Poly cross = f * partial(g, target);
    if (koszul_sign(target.grade(m), ga) < 0) cross = -cross;
    leibniz &= (partial(f * g, target) == partial(f, target) * g + cross);
    int a = rng.uniform(0, 1);
    even_der &= (total_derivative(f * g, a) ==
                 total_derivative(f, a) * g + f * total_derivative(g, a));
    commute_d &= (total_derivative(total_derivative(f, 0), 1) ==
                  total_derivative(total_derivative(f, 1), 0));
    Gen t2 = Gen::jet(2, rng.uniform(0, 1), MultiIndex{});
    Poly lhs = partial(partial(f, target), t2);
    Poly rhs = partial(partial(f, t2), target);
    if (koszul_sign(target.grade(m), t2.grade(m)) < 0) rhs = -rhs;
    partial_comm &= (lhs == rhs);
  }
  push(items, "mul associative", assoc);
  push(items, "mul graded-commutative", comm);
  push(items, "partial left graded Leibniz", leibniz);
  push(items, "total derivative even derivation", even_der);
  push(items, "d_a d_b = d_b d_a", commute_d);
  push(items, "partials commute up to Koszul sign", partial_comm);
  return items;
}

std::vector<CheckResult> check_dh_delta(const ModelSpec&, std::uint64_t seed) {
  std::vector<CheckResult> items;
  for (int dim : {2, 4}) {
    jetring::RingModel m = property_model(dim);
    Rng rng(seed ^ (0xd4 + static_cast<std::uint64_t>(dim)));
    bool nilpotent = true, commute = true;
    for (int it = 0; it < 25; ++it) {
      varcalc::VerticalField v = random_vertical(rng, m);
      for (int q = 0; q <= std::min(dim - 1, 3); ++q) {
        varcalc::BasicForm a = random_form(rng, m, q);
        if (q <= dim - 2) nilpotent &= d_H(d_H(a)).is_zero();
        commute &= (delta(v, d_H(a)) == d_H(delta(v, a)));
      }
    }
    std::string tag = " (m=" + std::to_string(dim) + ")";
    push(items, "d_H^2 = 0" + tag, nilpotent);
    push(items, "[d_H, delta[v]] = 0" + tag, commute);
  }
  return items;
}

std::vector<CheckResult> check_splitting(const ModelSpec&, std::uint64_t seed) {
  std::vector<CheckResult> items;
  for (int dim : {2, 4}) {
    jetring::RingModel m = property_model(dim);
    Rng rng(seed ^ (0x5b1 + static_cast<std::uint64_t>(dim)));
    bool k1 = true, k2 = true;
    for (int it = 0; it < 25; ++it) {
      varcalc::VerticalField v = random_vertical(rng, m);
      jetring::Poly ell1 = random_poly(rng, m, 5, 3, 1, even_grade);
      k1 &= varcalc::splitting_residual(varcalc::LagrangianDensity{ell1}, v).is_zero();
      jetring::Poly ell2 = random_poly(rng, m, 4, 2, 2, even_grade);
      k2 &= varcalc::splitting_residual(varcalc::LagrangianDensity{ell2}, v).is_zero();
    }
    std::string tag = " (m=" + std::to_string(dim) + ")";
    push(items, "splitting k=1" + tag, k1);
    push(items, "splitting k=2" + tag, k2);
  }
  return items;
}

// Finite-difference oracle: discretized scalar action on a periodic 5x5 grid.
// Floats live only on the oracle side; the symbolic Euler-Lagrange operator
// stays exact and is evaluated on the grid through iterated central
// differences.
std::vector<CheckResult> check_el_oracle(const ModelSpec&, std::uint64_t seed) {
  using namespace jetring;
  std::vector<CheckResult> items;
  RingModel m(2);
  int sy = m.add_sector("y", even_grade, {});
  Gen y0 = Gen::jet(sy, 0, MultiIndex{});

  // l = 1/2 eta^{ab} y_a y_b - 1/2 mu^2 y^2 - lambda/4 y^4
  Poly ell = Poly::zero(m);
  ell += GQ(rat(1, 2)) * (Poly::gen(m, y0.with_mi(mi(0))) * Poly::gen(m, y0.with_mi(mi(0))));
  ell -= GQ(rat(1, 2)) * (Poly::gen(m, y0.with_mi(mi(1))) * Poly::gen(m, y0.with_mi(mi(1))));
  Poly y = Poly::gen(m, y0);
  ell -= GQ(rat(3, 4)) * (y * y);          // mu^2 = 3/2
  ell -= GQ(rat(1, 8)) * (y * y * y * y);  // lambda = 1/2
  varcalc::EulerLagrange F(varcalc::LagrangianDensity{ell});
  const Poly& f = F.component(y0.key);

  const int n = 5;
  Rng rng(seed ^ 0xe1);
  double grid[n][n];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      grid[i][j] = static_cast<double>(rng.uniform(-100, 100)) / 50.0;

  auto wrap = [&](int k) { return ((k % n) + n) % n; };
  std::function<double(const MultiIndex&, int, int)> jet =
      [&](const MultiIndex& a, int i, int j) -> double {
    if (a.empty()) return grid[i][j];
    MultiIndex down = a;
    int d = down.counts[0] > 0 ? 0 : 1;
    --down.counts[static_cast<std::size_t>(d)];
    int di = (d == 0) ? 1 : 0, dj = (d == 1) ? 1 : 0;
    return (jet(down, wrap(i + di), wrap(j + dj)) - jet(down, wrap(i - di), wrap(j - dj))) / 2.0;
  };
  auto eval_poly = [&](const Poly& p, int i, int j) {
    double acc = 0;
    for (const auto& [mono, c] : p.terms()) {
      double term = static_cast<double>(c.re);
      for (const auto& [key, exp] : mono) {
        Gen g{key};
        double val = jet(g.mi(), i, j);
        for (std::uint32_t e = 0; e < exp; ++e) term *= val;
      }
      acc += term;
    }
    return acc;
  };
  auto action = [&]() {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += eval_poly(ell, i, j);
    return s;
  };

  double max_rel = 0;
  const double eps = 1e-5;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double save = grid[i][j];
      grid[i][j] = save + eps;
      double sp = action();
      grid[i][j] = save - eps;
      double sm = action();
      grid[i][j] = save;
      double fd = (sp - sm) / (2 * eps);
      double sym = eval_poly(f, i, j);
      double rel = std::fabs(fd - sym) / std::max(1.0, std::fabs(sym));
      max_rel = std::max(max_rel, rel);
    }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "max relative error %.3e", max_rel);
  push(items, "finite-difference variation matches euler_lagrange", max_rel < 1e-6, buf);
  return items;
}

// ------------------------------------------------------------- ym_brst checks

ym::FieldModel build_fm(const ModelSpec& spec, bool fermion, ym::MetricMode metric) {
  ym::ModelOptions opt;
  opt.group = spec.group;
  opt.base_dim = spec.dimension;
  opt.metric = metric;
  opt.fermion_sector = fermion;
  opt.ghost_sector = spec.ghost_sector;
  opt.xi = spec.xi;
  opt.mass = spec.mass;
  opt.validate = spec.validate;
  return ym::FieldModel::build(std::move(opt));
}

std::vector<CheckResult> check_lie(const ModelSpec& spec, std::uint64_t) {
  std::vector<CheckResult> items;
  ym::LieValidation v = ym::validate_lie_algebra(spec.group);
  push(items, "lie algebra axioms (" + spec.group.name + ")", v.ok(), v.summary());
  if (spec.fermion_sector) {
    ym::GammaAlgebra ga = ym::make_dirac_gamma();
    std::string err = ga.validate();
    push(items, "gamma algebra Clifford relations", err.empty(), err);
  }
  return items;
}

std::vector<CheckResult> check_nilpotency(const ModelSpec& spec, std::uint64_t seed) {
  ym::FieldModel fm = build_fm(spec, false, spec.metric);
  std::vector<CheckResult> items = ym::check_nilpotent(fm, seed, 50);
  if (spec.fermion_sector) {
    ym::FieldModel full = build_fm(spec, true, ym::MetricMode::constant);
    for (auto& item : ym::check_nilpotent(full, seed ^ 1, 25))
      items.push_back({"[fermion] " + item.name, item.pass, item.witness});
  }
  return items;
}

std::vector<CheckResult> check_theta_delta(const ModelSpec& spec, std::uint64_t seed) {
  ym::FieldModel fm = build_fm(spec, false, spec.metric);
  std::vector<CheckResult> items = ym::check_theta_delta(fm, seed, 25);
  if (spec.fermion_sector) {
    ym::FieldModel full = build_fm(spec, true, ym::MetricMode::constant);
    for (auto& item : ym::check_theta_delta(full, seed ^ 1, 10))
      items.push_back({"[fermion] " + item.name, item.pass, item.witness});
  }
  return items;
}

std::vector<CheckResult> check_ghost_exactness(const ModelSpec& spec, std::uint64_t) {
  ym::FieldModel fm = build_fm(spec, false, spec.metric);
  return ym::ghost_exactness(fm).items;
}

std::vector<CheckResult> check_brst_current(const ModelSpec& spec, std::uint64_t) {
  ym::FieldModel fm = build_fm(spec, false, spec.metric);
  std::vector<CheckResult> items = ym::brst_current(fm).items;
  if (spec.fermion_sector) {
    ym::FieldModel full = build_fm(spec, true, ym::MetricMode::constant);
    for (auto& item : ym::brst_current(full).items)
      items.push_back({"[fermion] " + item.name, item.pass, item.witness});
  }
  return items;
}

std::vector<CheckResult> check_fp_current(const ModelSpec& spec, std::uint64_t) {
  ym::FieldModel fm = build_fm(spec, false, spec.metric);
  std::vector<CheckResult> items = ym::fp_current(fm).items;
  if (spec.fermion_sector) {
    ym::FieldModel full = build_fm(spec, true, ym::MetricMode::constant);
    for (auto& item : ym::fp_current(full).items)
      items.push_back({"[fermion] " + item.name, item.pass, item.witness});
  }
  return items;
}

std::vector<CheckResult> check_second_order(const ModelSpec& spec, std::uint64_t) {
  ym::FieldModel fm = build_fm(spec, false, spec.metric);
  std::vector<CheckResult> items = ym::second_order_equivalence(fm).items;
  if (spec.fermion_sector) {
    ym::FieldModel full = build_fm(spec, true, ym::MetricMode::constant);
    for (auto& item : ym::second_order_equivalence(full).items)
      items.push_back({"[fermion] " + item.name, item.pass, item.witness});
  }
  return items;
}

std::vector<CheckResult> check_dirac(const ModelSpec&, std::uint64_t) {
  std::vector<CheckResult> items;
  ym::GammaAlgebra ga = ym::make_dirac_gamma();
  auto momenta = ym::enumerate_onshell(6, 25);
  push(items, "enumeration yields >= 20 on-shell momenta", momenta.size() >= 20,
       std::to_string(momenta.size()));
  bool all_ok = true;
  std::string witness;
  for (const auto& p : momenta) {
    auto rep = ym::dirac_projectors(ga, p);
    if (!rep.ok()) {
      all_ok = false;
      witness = rep.failures[0];
    }
  }
  push(items, "projector identities on all momenta", all_ok, witness);
  ym::OnShellMomentum off{{Rat(1), Rat(1), Rat(1), Rat(1)}, Rat(1)};
  push(items, "off-shell momentum rejected", !ym::dirac_projectors(ga, off).ok());
  return items;
}

std::vector<CheckResult> check_curvature(const ModelSpec& spec, std::uint64_t) {
  std::vector<CheckResult> items;
  ym::MomentumModel mm(spec.dimension, spec.group);
  bool pure_ok = true;
  for (int i = 0; i < spec.group.dim; ++i)
    for (int a = 0; a < spec.dimension; ++a)
      for (int b = a + 1; b < spec.dimension; ++b) {
        jetring::Poly rho = ym::curvature_like(
            mm, i, a, b, [&](int aa, int ii) { return mm.p(aa) * mm.chi(ii); });
        pure_ok &= rho.is_zero();
      }
  push(items, "rho[p tensor chi] = 0", pure_ok);
  bool abelian = true;
  for (const auto& c : spec.group.c) abelian &= c.is_zero();
  if (abelian) {
    bool residual_ok = true;
    for (int i = 0; i < spec.group.dim; ++i)
      residual_ok &= ym::curvature_shift_residual(mm, i, 0, 1).is_zero();
    push(items, "abelian gauge-shift residual vanishes", residual_ok);
  } else {
    // residual equals c^I_{JK} chi^J (p_a alpha^K_b - p_b alpha^K_a)
    bool match = true;
    for (int i = 0; i < spec.group.dim && match; ++i) {
      jetring::Poly res = ym::curvature_shift_residual(mm, i, 0, 1);
      jetring::Poly expect = jetring::Poly::zero(mm.ring());
      for (int j = 0; j < spec.group.dim; ++j)
        for (int k = 0; k < spec.group.dim; ++k) {
          jetring::Poly c = mm.structure(i, j, k);
          if (c.is_zero()) continue;
          expect += c * mm.chi(j) * (mm.p(0) * mm.alpha(1, k) - mm.p(1) * mm.alpha(0, k));
        }
      match &= (res == expect);
    }
    push(items, "nonabelian gauge-shift residual exposed", match);
  }
  return items;
}

struct CheckDef {
  std::string name;
  std::function<std::vector<CheckResult>(const ModelSpec&, std::uint64_t)> fn;
  bool needs_ghost = false;
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"lie_validate", check_lie, false},
      {"fock_axioms", check_fock_axioms, false},
      {"fock_normal_order", check_fock_normal_order, false},
      {"fock_lattice", check_fock_lattice, false},
      {"ring_properties", check_ring_properties, false},
      {"dh_delta", check_dh_delta, false},
      {"splitting", check_splitting, false},
      {"el_oracle", check_el_oracle, false},
      {"nilpotency", check_nilpotency, true},
      {"theta_delta", check_theta_delta, true},
      {"ghost_exactness", check_ghost_exactness, true},
      {"brst_current", check_brst_current, true},
      {"fp_current", check_fp_current, true},
      {"second_order", check_second_order, true},
      {"dirac_projectors", check_dirac, false},
      {"curvature", check_curvature, false},
  };
  return defs;
}

}  // namespace

ModelSpec load_model(const std::string& alias_or_path) {
  ModelSpec spec;
  if (alias_or_path == "u1" || alias_or_path == "su2" || alias_or_path == "su3") {
    spec = builtin_spec(alias_or_path);
  } else {
    std::ifstream in(alias_or_path);
    if (!in) throw std::invalid_argument("cannot open model file " + alias_or_path);
    ordered_json j = ordered_json::parse(in);
    std::string group_name =
        j.at("group").is_string() ? j.at("group").get<std::string>() : std::string("inline");
    if (group_name == "u1" || group_name == "su2" || group_name == "su3")
      spec = builtin_spec(group_name);
    spec.name = alias_or_path;
    spec.group = group_from_json(j.at("group"));
    spec.dimension = j.value("dimension", 4);
    if (j.contains("metric_mode")) {
      std::string mode = j.at("metric_mode").get<std::string>();
      if (mode == "constant")
        spec.metric = ym::MetricMode::constant;
      else if (mode == "formal")
        spec.metric = ym::MetricMode::formal;
      else
        throw std::invalid_argument("metric_mode must be constant or formal");
    }
    if (j.contains("xi")) spec.xi = rat_from_json(j.at("xi"));
    if (j.contains("mass")) spec.mass = rat_from_json(j.at("mass"));
    if (j.contains("sectors_enabled")) {
      spec.fermion_sector = false;
      spec.ghost_sector = false;
      for (const auto& s : j.at("sectors_enabled")) {
        std::string name = s.get<std::string>();
        if (name == "fermion") spec.fermion_sector = true;
        if (name == "ghost") spec.ghost_sector = true;
      }
    }
    spec.validate = j.value("validate", true);
    if (!spec.group.rep_is_rational()) spec.fermion_sector = false;
  }
  if (spec.validate) {
    ym::LieValidation v = ym::validate_lie_algebra(spec.group);
    if (!v.ok())
      throw std::invalid_argument("model rejected, lie algebra axioms fail: " + v.summary());
  }
  return spec;
}

std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& def : registry()) names.push_back(def.name);
  return names;
}

Report run(const RunConfig& config) {
  ModelSpec spec = load_model(config.model);
  if (config.metric_override) spec.metric = *config.metric_override;

  std::vector<const CheckDef*> selected;
  bool all = false;
  for (const auto& name : config.checks)
    if (name == "all") all = true;
  if (all) {
    for (const auto& def : registry()) selected.push_back(&def);
  } else {
    for (const auto& name : config.checks) {
      const CheckDef* found = nullptr;
      for (const auto& def : registry())
        if (def.name == name) found = &def;
      if (!found) throw std::invalid_argument("unknown check " + name);
      selected.push_back(found);
    }
  }

  Report report;
  report.model = spec;
  report.seed = config.seed;
  report.checks.resize(selected.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t k = next.fetch_add(1);
      if (k >= selected.size()) break;
      const CheckDef& def = *selected[k];
      CheckOutcome& out = report.checks[k];
      out.name = def.name;
      auto t0 = std::chrono::steady_clock::now();
      if (def.needs_ghost && !spec.ghost_sector) {
        out.status = "skip";
        out.items.push_back({"ghost sector disabled", true, ""});
      } else {
        try {
          out.items = def.fn(spec, config.seed);
          out.status = all_pass(out.items) ? "pass" : "fail";
        } catch (const std::exception& e) {
          out.status = "fail";
          out.items.push_back({"exception", false, e.what()});
        }
      }
      out.wall_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
              .count();
    }
  };
  int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return report;
}

int Report::passed() const {
  int n = 0;
  for (const auto& c : checks) n += (c.status == "pass");
  return n;
}
int Report::failed() const {
  int n = 0;
  for (const auto& c : checks) n += (c.status == "fail");
  return n;
}
int Report::skipped() const {
  int n = 0;
  for (const auto& c : checks) n += (c.status == "skip");
  return n;
}

std::string Report::render_text(bool timings) const {
  std::string out;
  out += "model " + model.name + " (group " + model.group.name + ", m=" +
         std::to_string(model.dimension) + ", metric " +
         (model.metric == ym::MetricMode::formal ? "formal" : "constant") + ", seed " +
         std::to_string(seed) + ")\n";
  for (const auto& c : checks) {
    std::string line = (c.status == "pass" ? "PASS " : c.status == "skip" ? "SKIP " : "FAIL ");
    line += c.name + " [" + std::to_string(c.items.size()) + " items]";
    if (timings) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), " (%.1f ms)", c.wall_ms);
      line += buf;
    }
    out += line + "\n";
    for (const auto& item : c.items)
      if (!item.pass) out += "    FAILED " + item.name + ": " + item.witness + "\n";
  }
  out += "summary: " + std::to_string(passed()) + " pass, " + std::to_string(failed()) +
         " fail, " + std::to_string(skipped()) + " skip\n";
  return out;
}

std::string Report::render_json(bool timings) const {
  ordered_json j;
  j["schema_version"] = 1;
  j["model"] = {{"name", model.name},
                {"group", model.group.name},
                {"dimension", model.dimension},
                {"metric_mode", model.metric == ym::MetricMode::formal ? "formal" : "constant"},
                {"xi", rat_str(model.xi)},
                {"mass", rat_str(model.mass)},
                {"fermion_sector", model.fermion_sector},
                {"ghost_sector", model.ghost_sector}};
  j["seed"] = seed;
  j["checks"] = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = c.status;
    if (timings) jc["wall_ms"] = c.wall_ms;
    jc["items"] = ordered_json::array();
    for (const auto& item : c.items) {
      ordered_json ji;
      ji["name"] = item.name;
      ji["pass"] = item.pass;
      if (!item.pass) ji["witness"] = item.witness;
      jc["items"].push_back(std::move(ji));
    }
    j["checks"].push_back(std::move(jc));
  }
  j["summary"] = {{"pass", passed()}, {"fail", failed()}, {"skip", skipped()}};
  return j.dump(2) + "\n";
}

int exit_code(const Report& report) { return report.failed() > 0 ? 1 : 0; }

}  // namespace gjet::cli
