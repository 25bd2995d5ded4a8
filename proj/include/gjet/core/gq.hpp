#pragma once

#include "gjet/core/rational.hpp"

#include <string>

namespace gjet {

// Gaussian rational re + im*i. Exact ring arithmetic in Q(i); this is the
// coefficient field of every state, operator and polynomial in the engine.
struct GQ {
  Rat re{0};
  Rat im{0};

  GQ() = default;
  GQ(Rat r) : re(std::move(r)) {}  // NOLINT: implicit by design
  GQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GQ(std::int64_t n) : re(rat(n)) {}  // NOLINT

  static GQ i() { return GQ(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GQ conj() const { return GQ(re, -im); }

  GQ operator-() const { return GQ(-re, -im); }

  GQ& operator+=(const GQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GQ& operator-=(const GQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GQ& operator*=(const GQ& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GQ operator+(GQ a, const GQ& b) { return a += b; }
  friend GQ operator-(GQ a, const GQ& b) { return a -= b; }
  friend GQ operator*(GQ a, const GQ& b) { return a *= b; }
  friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }
  friend bool operator<(const GQ& a, const GQ& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  // Multiplicative inverse; only needed for nonzero values (rank computations
  // and symbol-square reduction). 1/(a+bi) = (a-bi)/(a^2+b^2).
  GQ inv() const {
    Rat n = re * re + im * im;
    if (n == 0) throw std::domain_error("GQ::inv of zero");
    return GQ(re / n, -im / n);
  }
};

inline std::string to_string(const GQ& z) {
  if (z.is_zero()) return "0";
  std::string s;
  if (z.re != 0) s += rat_str(z.re);
  if (z.im != 0) {
    if (!s.empty() && z.im > 0) s += "+";
    if (z.im == 1)
      s += "i";
    else if (z.im == -1)
      s += "-i";
    else
      s += rat_str(z.im) + "i";
  }
  return s;
}

}  // namespace gjet
