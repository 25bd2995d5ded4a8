#pragma once

#include "gjet/core/rng.hpp"
#include "gjet/jetring/poly.hpp"

#include <optional>
#include <vector>

namespace gjet::testutil {

using jetring::Gen;
using jetring::MultiIndex;
using jetring::Poly;
using jetring::RingModel;

// Scratch model for ring/varcalc property tests: two even scalars, one even
// doublet, one odd doublet, plus formal background symbols.
inline RingModel make_model(int base_dim) {
  RingModel m(base_dim);
  m.add_sector("u", even_grade, {});
  m.add_sector("w", even_grade, {2});
  m.add_sector("om", odd_grade, {2});
  m.add_symbol("B", true);
  return m;
}

inline MultiIndex random_mi(Rng& rng, int base_dim, int max_order) {
  MultiIndex a;
  int len = rng.uniform(0, max_order);
  for (int k = 0; k < len; ++k) a = a.plus(rng.uniform(0, base_dim - 1));
  return a;
}

inline Gen random_gen(Rng& rng, const RingModel& model, int max_order) {
  if (!model.symbols().empty() && rng.chance(1, 6))
    return Gen::background(rng.uniform(0, static_cast<int>(model.symbols().size()) - 1),
                           random_mi(rng, model.base_dim(), 1));
  int sec = rng.uniform(0, static_cast<int>(model.sectors().size()) - 1);
  int comp = rng.uniform(0, model.sector(sec).ncomp - 1);
  return Gen::jet(sec, comp, random_mi(rng, model.base_dim(), max_order));
}

// Random polynomial; when `parity` is set the result is homogeneous of that
// grade (terms of the other parity are discarded).
inline Poly random_poly(Rng& rng, const RingModel& model, int nterms, int max_degree,
                        int max_order, std::optional<Grade> parity = std::nullopt,
                        bool allow_theta = false) {
  Poly p(&model);
  for (int t = 0; t < nterms; ++t) {
    std::vector<Gen> raw;
    if (allow_theta && rng.chance(1, 3)) raw.push_back(Gen::theta());
    int deg = rng.uniform(0, max_degree);
    for (int d = 0; d < deg; ++d) raw.push_back(random_gen(rng, model, max_order));
    Grade g = even_grade;
    for (const Gen& gen : raw) g = g + gen.grade(model);
    if (parity && g != *parity) continue;
    p.add_raw(raw, rng.small_gq());
  }
  return p;
}

}  // namespace gjet::testutil
