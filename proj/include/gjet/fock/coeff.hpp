#pragma once

#include "gjet/core/gq.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gjet::fock {

// Registry of formal positive scalars (lattice frequencies omega_p, box
// normalizations, sqrt3, the odd parameter theta). A symbol may have a known
// square q; exponents live in half units, so entry (s, h) means s^(h/2) and
// h is reduced modulo 4 against q by the normalization.
class SymTable {
 public:
  int add(std::string name, std::optional<GQ> square = std::nullopt) {
    names_.push_back(std::move(name));
    squares_.push_back(std::move(square));
    return static_cast<int>(names_.size()) - 1;
  }
  const std::string& name(int id) const { return names_.at(static_cast<std::size_t>(id)); }
  const std::optional<GQ>& square(int id) const {
    return squares_.at(static_cast<std::size_t>(id));
  }
  int size() const { return static_cast<int>(names_.size()); }

 private:
  std::vector<std::string> names_;
  std::vector<std::optional<GQ>> squares_;
};

using SymMono = std::vector<std::pair<int, int>>;  // (symbol, half-exponent), sorted

// Exact scalar: Gaussian-rational combination of symbol monomials. Plain
// numbers are the empty monomial; everything stays a commutative ring.
class Coeff {
 public:
  Coeff() = default;
  explicit Coeff(const SymTable* tab) : tab_(tab) {}
  Coeff(const SymTable* tab, GQ c) : tab_(tab) { add(SymMono{}, std::move(c)); }

  static Coeff one(const SymTable& tab) { return Coeff(&tab, GQ(1)); }

  const SymTable* table() const { return tab_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<SymMono, GQ>& terms() const { return terms_; }

  // The purely numeric value, when no symbols survive.
  std::optional<GQ> as_gq() const {
    if (terms_.empty()) return GQ(0);
    if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
    return std::nullopt;
  }

  void add(SymMono mono, GQ c) {
    if (c.is_zero()) return;
    normalize(mono, c);
    if (c.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      terms_.emplace(std::move(mono), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Coeff& operator+=(const Coeff& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    if (!tab_) tab_ = o.tab_;
    return *this;
  }
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) {
    for (const auto& [m, c] : b.terms_) a.add(m, -c);
    if (!a.tab_) a.tab_ = b.tab_;
    return a;
  }
  Coeff operator-() const {
    Coeff r(tab_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  friend Coeff operator*(const Coeff& a, const Coeff& b) {
    Coeff r(a.tab_ ? a.tab_ : b.tab_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        SymMono m = ma;
        for (const auto& [sym, h] : mb) {
          bool found = false;
          for (auto& [s2, h2] : m)
            if (s2 == sym) {
              h2 += h;
              found = true;
              break;
            }
          if (!found) m.emplace_back(sym, h);
        }
        std::sort(m.begin(), m.end());
        r.add(std::move(m), ca * cb);
      }
    return r;
  }
  friend Coeff operator*(const GQ& s, const Coeff& a) {
    Coeff r(a.tab_);
    for (const auto& [m, c] : a.terms_) r.add(m, s * c);
    return r;
  }
  friend bool operator==(const Coeff& a, const Coeff& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }
  friend bool operator<(const Coeff& a, const Coeff& b) { return a.terms_ < b.terms_; }

  Coeff conj() const {  // symbols are real and positive
    Coeff r(tab_);
    for (const auto& [m, c] : terms_) r.terms_[m] = c.conj();
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + to_string(c) + ")";
      for (const auto& [sym, h] : m) {
        out += "*" + (tab_ ? tab_->name(sym) : "s" + std::to_string(sym));
        if (h != 2) out += "^(" + std::to_string(h) + "/2)";
      }
    }
    return out;
  }

 private:
  // reduce each half-exponent modulo 4 against the known square
  void normalize(SymMono& mono, GQ& c) const {
    SymMono out;
    for (auto& [sym, h] : mono) {
      if (h == 0) continue;
      const auto& sq = tab_ ? tab_->square(sym) : std::nullopt;
      if (sq) {
        int k = (h >= 0) ? h / 4 : -((-h + 3) / 4);
        int r = h - 4 * k;
        if (k != 0) {
          if (sq->is_zero()) {
            if (k > 0) {
              c = GQ(0);
              return;
            }
            throw std::domain_error("negative power of nilpotent symbol");
          }
          GQ factor = (k > 0) ? *sq : sq->inv();
          for (int t = 0; t < std::abs(k); ++t) c *= factor;
        }
        if (r != 0) out.emplace_back(sym, r);
      } else {
        out.emplace_back(sym, h);
      }
    }
    mono = std::move(out);
  }

  const SymTable* tab_ = nullptr;
  std::map<SymMono, GQ> terms_;
};

}  // namespace gjet::fock
