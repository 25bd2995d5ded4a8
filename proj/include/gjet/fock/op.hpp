#pragma once

#include "gjet/fock/state.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace gjet::fock {

// One ladder factor in a composition sequence.
struct Factor {
  bool create = false;
  int mode = 0;
};

// Single-particle vector (or dual vector): amplitudes over basis modes.
using ModeVector = std::vector<std::pair<int, Coeff>>;

// Normal-ordered sparse operator: sum of a+[C] a[A] terms with creator and
// annihilator multisets stored as ascending mode lists. As a composition the
// creator block runs ascending left to right and the annihilator block
// descending, matching the monomial conventions of the state space.
class FockOperator {
 public:
  using Key = std::pair<std::vector<int>, std::vector<int>>;

  FockOperator() = default;
  FockOperator(const ModeSet* ms, const SymTable* tab) : ms_(ms), tab_(tab) {}

  static FockOperator zero(const ModeSet& ms, const SymTable& tab) {
    return FockOperator(&ms, &tab);
  }
  static FockOperator identity(const ModeSet& ms, const SymTable& tab) {
    FockOperator op(&ms, &tab);
    op.add({}, {}, Coeff(&tab, GQ(1)));
    return op;
  }
  // emission operator a+[z], z a single-particle vector
  static FockOperator emit(const ModeSet& ms, const SymTable& tab, const ModeVector& z) {
    FockOperator op(&ms, &tab);
    for (const auto& [m, amp] : z) op.add({m}, {}, amp);
    return op;
  }
  // absorption operator a[zeta], zeta a single-particle dual vector
  static FockOperator absorb(const ModeSet& ms, const SymTable& tab, const ModeVector& zeta) {
    FockOperator op(&ms, &tab);
    for (const auto& [m, amp] : zeta) op.add({}, {m}, amp);
    return op;
  }

  const ModeSet& modes() const { return *ms_; }
  const SymTable& table() const { return *tab_; }
  const std::map<Key, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(std::vector<int> creators, std::vector<int> annihilators, const Coeff& c) {
    if (c.is_zero()) return;
    Key k{std::move(creators), std::move(annihilators)};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FockOperator& operator+=(const FockOperator& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
  }
  friend FockOperator operator+(FockOperator a, const FockOperator& b) { return a += b; }
  friend FockOperator operator-(FockOperator a, const FockOperator& b) {
    for (const auto& [k, c] : b.terms_) a.add(k.first, k.second, -c);
    return a;
  }
  friend FockOperator operator*(const Coeff& s, const FockOperator& a) {
    FockOperator r(a.ms_, a.tab_);
    for (const auto& [k, c] : a.terms_) r.add(k.first, k.second, s * c);
    return r;
  }
  friend FockOperator operator*(const GQ& s, const FockOperator& a) {
    return Coeff(a.tab_, s) * a;
  }
  friend bool operator==(const FockOperator& a, const FockOperator& b) {
    return a.terms_ == b.terms_;
  }

  // Z2 grade: parity of the fermionic factor count, demanded definite.
  std::optional<Grade> grade() const {
    std::optional<Grade> g;
    for (const auto& [k, c] : terms_) {
      int par = 0;
      for (int m : k.first) par ^= ms_->fermionic(m) ? 1 : 0;
      for (int m : k.second) par ^= ms_->fermionic(m) ? 1 : 0;
      Grade tg{par};
      if (!g)
        g = tg;
      else if (*g != tg)
        return std::nullopt;
    }
    return g ? g : std::optional<Grade>(even_grade);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      for (int m : k.first) out += " a+_" + std::to_string(m);
      for (auto it = k.second.rbegin(); it != k.second.rend(); ++it)
        out += " a_" + std::to_string(*it);
    }
    return out;
  }

 private:
  const ModeSet* ms_ = nullptr;
  const SymTable* tab_ = nullptr;
  std::map<Key, Coeff> terms_;
};

namespace detail {

// Sorts a ladder block, counting fermion transpositions. `descending` picks
// the target order; a repeated fermionic mode annihilates the term.
inline bool sort_block(const ModeSet& ms, std::vector<int>& block, bool descending, int& sign) {
  for (std::size_t i = 1; i < block.size(); ++i) {
    int v = block[i];
    bool v_f = ms.fermionic(v);
    std::size_t j = i;
    while (j > 0 && (descending ? block[j - 1] < v : block[j - 1] > v)) {
      if (v_f && ms.fermionic(block[j - 1])) sign = -sign;
      block[j] = block[j - 1];
      --j;
    }
    if (j > 0 && block[j - 1] == v && v_f) return false;
    block[j] = v;
  }
  return true;
}

}  // namespace detail

// Rewrites a composition of elementary ladder factors into normal order.
// wick = true keeps the contraction terms of a_k a+_j = (-1)^{|k||j|} a+_j a_k
// + delta_{kj}; the modified rule (wick = false) drops them, making the
// product of normal-ordered generators graded-commutative.
inline FockOperator normal_order_sequence(const ModeSet& ms, const SymTable& tab,
                                          std::vector<Factor> seq, Coeff coeff, bool wick) {
  FockOperator out(&ms, &tab);
  std::deque<std::pair<std::vector<Factor>, Coeff>> work;
  work.emplace_back(std::move(seq), std::move(coeff));
  while (!work.empty()) {
    auto [s, c] = std::move(work.front());
    work.pop_front();
    bool reduced = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (!s[i].create && s[i + 1].create) {
        int k = s[i].mode, j = s[i + 1].mode;
        std::vector<Factor> swapped = s;
        std::swap(swapped[i], swapped[i + 1]);
        Coeff cs = c;
        if (ms.fermionic(k) && ms.fermionic(j)) cs = -cs;
        work.emplace_back(std::move(swapped), std::move(cs));
        if (wick && k == j) {
          std::vector<Factor> contracted;
          for (std::size_t t = 0; t < s.size(); ++t)
            if (t != i && t != i + 1) contracted.push_back(s[t]);
          work.emplace_back(std::move(contracted), c);
        }
        reduced = true;
        break;
      }
    }
    if (reduced) continue;
    std::vector<int> creators, annihilators;
    for (const Factor& f : s) (f.create ? creators : annihilators).push_back(f.mode);
    int sign = 1;
    if (!detail::sort_block(ms, creators, /*descending=*/false, sign)) continue;
    // the annihilator block reads descending in composition order; the stored
    // multiset is its ascending reversal
    if (!detail::sort_block(ms, annihilators, /*descending=*/true, sign)) continue;
    std::reverse(annihilators.begin(), annihilators.end());
    out.add(std::move(creators), std::move(annihilators), sign < 0 ? -c : c);
  }
  return out;
}

inline std::vector<Factor> term_sequence(const FockOperator::Key& k) {
  std::vector<Factor> seq;
  for (int m : k.first) seq.push_back({true, m});
  for (auto it = k.second.rbegin(); it != k.second.rend(); ++it) seq.push_back({false, *it});
  return seq;
}

// Operator composition with Wick reordering into normal form.
inline FockOperator compose(const FockOperator& x, const FockOperator& y) {
  FockOperator out(&x.modes(), &x.table());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      std::vector<Factor> seq = term_sequence(kx);
      std::vector<Factor> tail = term_sequence(ky);
      seq.insert(seq.end(), tail.begin(), tail.end());
      out += normal_order_sequence(x.modes(), x.table(), std::move(seq), cx * cy, true);
    }
  return out;
}

// Super-bracket [[X,Y]] = XY - (-1)^{|X||Y|} YX; grades must be definite.
inline FockOperator superbracket(const FockOperator& x, const FockOperator& y) {
  auto gx = x.grade(), gy = y.grade();
  if (!gx || !gy) throw std::invalid_argument("superbracket needs definite grades");
  FockOperator xy = compose(x, y);
  FockOperator yx = compose(y, x);
  if (koszul_sign(*gx, *gy) < 0) return xy + yx;
  return xy - yx;
}

// A ladder composition given as a list of emit/absorb factors with general
// single-particle vectors; `wick` keeps contractions, the modified rule drops
// them (Eq. of the modified super-commutator).
struct Ladder {
  bool create = false;
  ModeVector vec;
};

inline FockOperator normal_order(const ModeSet& ms, const SymTable& tab,
                                 const std::vector<Ladder>& composition, bool wick) {
  std::vector<std::pair<std::vector<Factor>, Coeff>> expansions{{{}, Coeff(&tab, GQ(1))}};
  for (const Ladder& l : composition) {
    std::vector<std::pair<std::vector<Factor>, Coeff>> next;
    for (const auto& [seq, c] : expansions)
      for (const auto& [m, amp] : l.vec) {
        auto s2 = seq;
        s2.push_back({l.create, m});
        next.emplace_back(std::move(s2), c * amp);
      }
    expansions = std::move(next);
  }
  FockOperator out(&ms, &tab);
  for (auto& [seq, c] : expansions)
    out += normal_order_sequence(ms, tab, std::move(seq), std::move(c), wick);
  return out;
}

// Linear action on states: annihilators act ascending (rightmost factor
// first), then creators descending. Truncation flags propagate.
inline FockState apply(const FockOperator& op, const FockState& psi) {
  FockState out(&psi.modes(), &psi.table(), psi.n_max());
  if (psi.truncated()) out.mark_truncated();
  for (const auto& [k, c] : op.terms()) {
    FockState cur = c * psi;
    for (int m : k.second) {
      cur = apply_annihilator(cur, m);
      if (cur.is_zero() && !cur.truncated()) break;
    }
    for (auto it = k.first.rbegin(); it != k.first.rend(); ++it)
      cur = apply_creator(cur, *it);
    out += cur;
  }
  return out;
}

}  // namespace gjet::fock
