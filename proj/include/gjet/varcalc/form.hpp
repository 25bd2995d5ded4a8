#pragma once

#include "gjet/jetring/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace gjet::varcalc {

using jetring::Gen;
using jetring::MultiIndex;
using jetring::Poly;
using jetring::RingModel;

// Basic (totally horizontal) q-form with polynomial components. Only strictly
// increasing base-index tuples are stored; antisymmetry is structural.
class BasicForm {
 public:
  BasicForm() = default;
  BasicForm(const RingModel* model, int degree) : model_(model), degree_(degree) {
    if (degree < 0 || degree > model->base_dim()) throw std::invalid_argument("bad form degree");
  }

  static BasicForm scalar(const Poly& f) {
    BasicForm a(&f.model(), 0);
    a.set({}, f);
    return a;
  }

  // Builds sum_a J^a dx_a, where dx_a = partial_a | d^m x. The component on
  // the increasing tuple omitting a is (-1)^a J^a.
  static BasicForm from_dual(const std::vector<Poly>& comps_up) {
    if (comps_up.empty()) throw std::invalid_argument("from_dual: empty");
    const RingModel& model = comps_up[0].model();
    int m = model.base_dim();
    BasicForm a(&model, m - 1);
    for (int idx = 0; idx < m; ++idx) {
      std::vector<int> tuple;
      for (int b = 0; b < m; ++b)
        if (b != idx) tuple.push_back(b);
      Poly c = (idx % 2 == 0) ? comps_up[static_cast<std::size_t>(idx)]
                              : -comps_up[static_cast<std::size_t>(idx)];
      a.set(tuple, c);
    }
    return a;
  }

  static BasicForm volume(const Poly& ell) {
    BasicForm a(&ell.model(), ell.model().base_dim());
    std::vector<int> full;
    for (int b = 0; b < ell.model().base_dim(); ++b) full.push_back(b);
    a.set(full, ell);
    return a;
  }

  const RingModel& model() const { return *model_; }
  int degree() const { return degree_; }

  const Poly& at(const std::vector<int>& tuple) const {
    static const Poly empty;
    auto it = comps_.find(tuple);
    if (it == comps_.end()) {
      zero_ = Poly::zero(*model_);
      return zero_;
    }
    return it->second;
  }

  void set(const std::vector<int>& tuple, Poly p) {
    if (static_cast<int>(tuple.size()) != degree_) throw std::invalid_argument("tuple size");
    for (std::size_t k = 1; k < tuple.size(); ++k)
      if (tuple[k - 1] >= tuple[k]) throw std::invalid_argument("tuple must increase");
    if (p.is_zero())
      comps_.erase(tuple);
    else
      comps_[tuple] = std::move(p);
  }

  const std::map<std::vector<int>, Poly>& comps() const { return comps_; }

  bool is_zero() const {
    for (const auto& [t, p] : comps_)
      if (!p.is_zero()) return false;
    return true;
  }

  // Scalar density of an m-form (the ell in ell d^m x).
  const Poly& density() const {
    if (degree_ != model_->base_dim()) throw std::logic_error("density: not a top form");
    std::vector<int> full;
    for (int b = 0; b < model_->base_dim(); ++b) full.push_back(b);
    return at(full);
  }

  // Upper-index components J^a of an (m-1)-form written as J^a dx_a.
  std::vector<Poly> dual_comps() const {
    if (degree_ != model_->base_dim() - 1) throw std::logic_error("dual_comps: degree != m-1");
    int m = model_->base_dim();
    std::vector<Poly> out;
    for (int idx = 0; idx < m; ++idx) {
      std::vector<int> tuple;
      for (int b = 0; b < m; ++b)
        if (b != idx) tuple.push_back(b);
      Poly c = at(tuple);
      out.push_back(idx % 2 == 0 ? c : -c);
    }
    return out;
  }

  BasicForm& operator+=(const BasicForm& o) {
    check(o);
    for (const auto& [t, p] : o.comps_) {
      Poly s = at(t) + p;
      set(t, std::move(s));
    }
    return *this;
  }
  BasicForm& operator-=(const BasicForm& o) {
    check(o);
    for (const auto& [t, p] : o.comps_) {
      Poly s = at(t) - p;
      set(t, std::move(s));
    }
    return *this;
  }
  friend BasicForm operator+(BasicForm a, const BasicForm& b) { return a += b; }
  friend BasicForm operator-(BasicForm a, const BasicForm& b) { return a -= b; }

  friend bool operator==(const BasicForm& a, const BasicForm& b) {
    if (a.degree_ != b.degree_) return false;
    BasicForm d = a;
    d -= b;
    return d.is_zero();
  }

  std::string str() const {
    if (comps_.empty()) return "0";
    std::string out;
    for (const auto& [t, p] : comps_) {
      if (!out.empty()) out += "  +  ";
      out += "[dx";
      for (int b : t) out += std::to_string(b);
      out += "] " + p.str();
    }
    return out;
  }

 private:
  void check(const BasicForm& o) const {
    if (model_ != o.model_ || degree_ != o.degree_)
      throw std::invalid_argument("form mismatch");
  }

  const RingModel* model_ = nullptr;
  int degree_ = 0;
  std::map<std::vector<int>, Poly> comps_;
  mutable Poly zero_;
};

// Horizontal differential. Componentwise antisymmetrized total derivatives:
// (d_H a)_T = sum_j (-1)^j d_{T_j} a_{T minus T_j}. Degree m forms map to the
// zero m-form by convention.
inline BasicForm d_H(const BasicForm& a) {
  const RingModel& model = a.model();
  int m = model.base_dim();
  int q = a.degree();
  if (q >= m) return BasicForm(&model, m);
  BasicForm r(&model, q + 1);
  std::vector<int> tuple(static_cast<std::size_t>(q) + 1);
  // iterate ascending tuples of size q+1
  std::vector<int> idx(static_cast<std::size_t>(q) + 1);
  for (int k = 0; k <= q; ++k) idx[static_cast<std::size_t>(k)] = k;
  while (true) {
    Poly comp = Poly::zero(model);
    for (int j = 0; j <= q; ++j) {
      std::vector<int> rest;
      for (int k = 0; k <= q; ++k)
        if (k != j) rest.push_back(idx[static_cast<std::size_t>(k)]);
      Poly d = jetring::total_derivative(a.at(rest), idx[static_cast<std::size_t>(j)]);
      if (j % 2 == 0)
        comp += d;
      else
        comp -= d;
    }
    r.set(idx, std::move(comp));
    // next combination
    int pos = q;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - 1 - (q - pos)) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int k = pos + 1; k <= q; ++k)
      idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
  }
  return r;
}

// Divergence d_a J^a of an (m-1)-form given by upper components; equals the
// density of d_H(J^a dx_a).
inline Poly divergence(const std::vector<Poly>& comps_up) {
  const RingModel& model = comps_up.at(0).model();
  Poly r = Poly::zero(model);
  for (int a = 0; a < model.base_dim(); ++a)
    r += jetring::total_derivative(comps_up[static_cast<std::size_t>(a)], a);
  return r;
}

}  // namespace gjet::varcalc
