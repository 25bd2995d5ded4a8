#pragma once

#include "gjet/core/gq.hpp"
#include "gjet/core/grade.hpp"
#include "gjet/jetring/generator.hpp"
#include "gjet/jetring/model.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gjet::jetring {

// Canonical monomial: generators sorted by key, with exponents. Odd
// generators never repeat (their square is zero); theta is an ordinary odd
// generator that sorts to the front, so theta^2 = 0 and all theta signs fall
// out of the generic Koszul bookkeeping.
using Mono = std::vector<std::pair<std::uint64_t, std::uint32_t>>;

struct Term {
  Mono mono;
  GQ coeff;
};

// Sorts a raw generator list into canonical order. The coefficient picks up
// the Koszul sign of the permutation restricted to odd generators; a repeated
// odd generator kills the term. Background symbols with a known square are
// reduced (s^2 -> value).
inline bool normalize_raw(const RingModel& model, std::vector<Gen> raw, GQ coeff, Term& out) {
  if (coeff.is_zero()) return false;
  int sign = 1;
  // insertion sort, counting transpositions of odd pairs
  for (std::size_t i = 1; i < raw.size(); ++i) {
    Gen g = raw[i];
    bool g_odd = g.grade(model).odd();
    std::size_t j = i;
    while (j > 0 && g.key < raw[j - 1].key) {
      if (g_odd && raw[j - 1].grade(model).odd()) sign = -sign;
      raw[j] = raw[j - 1];
      --j;
    }
    raw[j] = g;
  }
  Mono mono;
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t j = i;
    while (j < raw.size() && raw[j].key == raw[i].key) ++j;
    std::uint32_t exp = static_cast<std::uint32_t>(j - i);
    if (exp > 1 && raw[i].grade(model).odd()) return false;  // odd square vanishes
    if (raw[i].kind() == Gen::kBackground) {
      const Symbol& sym = model.symbol(raw[i].symbol());
      if (sym.square && raw[i].mi().empty()) {
        for (; exp >= 2; exp -= 2) coeff *= *sym.square;
      }
    }
    if (exp > 0) mono.emplace_back(raw[i].key, exp);
    i = j;
  }
  if (coeff.is_zero()) return false;
  if (sign < 0) coeff = -coeff;
  out.mono = std::move(mono);
  out.coeff = std::move(coeff);
  return true;
}

inline std::vector<Gen> mono_flat(const Mono& m) {
  std::vector<Gen> flat;
  for (const auto& [key, exp] : m)
    for (std::uint32_t r = 0; r < exp; ++r) flat.push_back(Gen{key});
  return flat;
}

// Exact polynomial in jet coordinates, base coordinates and background
// symbols over the Gaussian rationals, in canonical monomial order.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const RingModel* model) : model_(model) {}

  static Poly zero(const RingModel& m) { return Poly(&m); }
  static Poly scalar(const RingModel& m, GQ c) {
    Poly p(&m);
    if (!c.is_zero()) p.terms_[Mono{}] = std::move(c);
    return p;
  }
  static Poly one(const RingModel& m) { return scalar(m, GQ(1)); }
  static Poly gen(const RingModel& m, Gen g, GQ c = GQ(1)) {
    Poly p(&m);
    p.add_raw({g}, std::move(c));
    return p;
  }

  const RingModel& model() const { return *model_; }
  const std::map<Mono, GQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(Mono m, const GQ& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_raw(std::vector<Gen> raw, GQ c) {
    Term t;
    if (normalize_raw(*model_, std::move(raw), std::move(c), t)) add_term(std::move(t.mono), t.coeff);
  }

  Poly& operator+=(const Poly& o) {
    check_model(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_model(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  Poly operator-() const {
    Poly r(model_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }

  friend Poly operator*(const GQ& c, const Poly& p) {
    Poly r(p.model_);
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_[m] = c * pc;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_model(b);
    Poly r(a.model_);
    for (const auto& [ma, ca] : a.terms_) {
      std::vector<Gen> fa = mono_flat(ma);
      for (const auto& [mb, cb] : b.terms_) {
        std::vector<Gen> raw = fa;
        for (const auto& [key, exp] : mb)
          for (std::uint32_t k = 0; k < exp; ++k) raw.push_back(Gen{key});
        r.add_raw(std::move(raw), ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Z2 grade; empty for inhomogeneous polynomials. Zero counts as even.
  std::optional<Grade> grade() const {
    std::optional<Grade> g;
    for (const auto& [m, c] : terms_) {
      Grade tg = even_grade;
      for (const auto& [key, exp] : m)
        if (exp & 1) tg = tg + Gen{key}.grade(*model_);
      if (!g)
        g = tg;
      else if (*g != tg)
        return std::nullopt;
    }
    return g ? g : std::optional<Grade>(even_grade);
  }

  int max_jet_order() const {
    int k = 0;
    for (const auto& [m, c] : terms_)
      for (const auto& [key, exp] : m) {
        Gen g{key};
        if (g.kind() == Gen::kJet) k = std::max(k, g.mi().length());
      }
    return k;
  }

  // All jet coordinates appearing in the polynomial.
  std::set<std::uint64_t> jet_gens() const {
    std::set<std::uint64_t> gens;
    for (const auto& [m, c] : terms_)
      for (const auto& [key, exp] : m)
        if (Gen{key}.kind() == Gen::kJet) gens.insert(key);
    return gens;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += "(" + to_string(c) + ")";
      for (const auto& [key, exp] : m) {
        out += "*" + Gen{key}.str(*model_);
        if (exp > 1) out += "^" + std::to_string(exp);
      }
    }
    return out;
  }

  void check_model(const Poly& o) const {
    if (model_ != o.model_) throw std::invalid_argument("polynomials from different models");
  }

  const RingModel* model_ = nullptr;
  std::map<Mono, GQ> terms_;
};

// Left graded partial derivative with respect to one generator:
// d(y*M) = M + (-1)^{|y||y'|} y'*dM between monomial factors; concretely the
// derivative of a canonical monomial at an odd factor carries the parity of
// the factors standing to its left.
inline Poly partial(const Poly& p, Gen target) {
  Poly r(&p.model());
  const RingModel& model = p.model();
  bool odd_target = target.grade(model).odd();
  for (const auto& [m, c] : p.terms()) {
    int prefix = 0;  // parity of grades left of the current entry
    for (std::size_t k = 0; k < m.size(); ++k) {
      Gen g{m[k].first};
      std::uint32_t exp = m[k].second;
      if (g == target) {
        GQ coeff = c;
        if (odd_target) {
          if (prefix & 1) coeff = -coeff;
        } else {
          coeff *= GQ(static_cast<std::int64_t>(exp));
        }
        Mono reduced;
        reduced.reserve(m.size());
        for (std::size_t j = 0; j < m.size(); ++j) {
          if (j == k) {
            if (exp > 1) reduced.emplace_back(m[j].first, exp - 1);
          } else {
            reduced.push_back(m[j]);
          }
        }
        r.add_term(std::move(reduced), coeff);
      }
      if (g.grade(model).odd() && (exp & 1)) prefix ^= 1;
    }
  }
  return r;
}

// Total derivative d_a: even derivation; jet coordinates get their
// multi-index extended, differentiable background symbols accumulate formal
// derivative indices, base coordinate x^a differentiates to 1, constants to 0.
inline Poly total_derivative(const Poly& p, int a) {
  const RingModel& model = p.model();
  Poly r(&model);
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      Gen g{m[k].first};
      std::uint32_t exp = m[k].second;
      GQ coeff = c * GQ(static_cast<std::int64_t>(exp));
      if (g.kind() == Gen::kTheta) continue;
      if (g.kind() == Gen::kBase) {
        if (g.comp() != a) continue;
        Mono reduced;
        for (std::size_t j = 0; j < m.size(); ++j) {
          if (j == k) {
            if (exp > 1) reduced.emplace_back(m[j].first, exp - 1);
          } else {
            reduced.push_back(m[j]);
          }
        }
        r.add_term(std::move(reduced), coeff);
        continue;
      }
      if (g.kind() == Gen::kBackground && !model.symbol(g.symbol()).differentiable) continue;
      // the lifted generator replaces the factor in place; an even derivation
      // must not disturb the Koszul bookkeeping of the remaining factors
      Gen lifted = g.with_mi(g.mi().plus(a));
      std::vector<Gen> raw;
      raw.reserve(m.size() + 1);
      for (std::size_t j = 0; j < m.size(); ++j) {
        std::uint32_t e = m[j].second;
        if (j == k) {
          raw.push_back(lifted);
          --e;
        }
        for (std::uint32_t t = 0; t < e; ++t) raw.push_back(Gen{m[j].first});
      }
      r.add_raw(std::move(raw), coeff);
    }
  }
  return r;
}

inline Poly total_derivative(const Poly& p, const MultiIndex& a) {
  Poly r = p;
  for (int d = 0; d < 4; ++d)
    for (int k = 0; k < a.counts[static_cast<std::size_t>(d)]; ++k) r = total_derivative(r, d);
  return r;
}

// Simultaneous substitution generator -> polynomial, then normalization.
// Bindings must match the grade of the generator they replace.
inline Poly substitute(const Poly& p, const std::map<std::uint64_t, Poly>& bindings) {
  const RingModel& model = p.model();
  for (const auto& [key, val] : bindings) {
    if (val.is_zero()) continue;
    auto g = val.grade();
    if (!g || *g != Gen{key}.grade(model))
      throw std::invalid_argument("substitute: grade mismatch for " + Gen{key}.str(model));
  }
  Poly r(&model);
  for (const auto& [m, c] : p.terms()) {
    Poly acc = Poly::scalar(model, c);
    for (const auto& [key, exp] : m) {
      auto it = bindings.find(key);
      const Poly factor = (it != bindings.end()) ? it->second : Poly::gen(model, Gen{key});
      for (std::uint32_t k = 0; k < exp; ++k) acc = acc * factor;
      if (acc.is_zero()) break;
    }
    r += acc;
  }
  return r;
}

}  // namespace gjet::jetring
