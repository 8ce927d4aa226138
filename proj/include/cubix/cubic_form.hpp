#pragma once

#include <array>
#include <cmath>
#include <optional>

#include "cubix/numeric.hpp"

namespace cubix {

enum class height_kind { balanced, weighted };

// n = k * m^2 with k squarefree; the sign of n sits on k, m >= 1.
struct squarefree_split_t {
  Int k;
  Int m;
};

inline squarefree_split_t squarefree_split(const Int& n) {
  if (n == 0) throw error(errc::bad_argument, "squarefree_split(0)");
  Int k = n < 0 ? Int(-1) : Int(1);
  Int m = 1;
  for (auto& [p, e] : factor(n)) {
    if (e % 2) k *= p;
    for (int i = 0; i < e / 2; ++i) m *= p;
  }
  return {k, m};
}

// The binary cubic a x^3 + b x^2 y + c x y^2 + d y^3.
struct binary_cubic {
  Int a, b, c, d;

  binary_cubic() : a(0), b(0), c(0), d(0) {}
  binary_cubic(Int a_, Int b_, Int c_, Int d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  bool operator==(const binary_cubic&) const = default;

  Int disc() const {
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
           27 * a * a * d * d;
  }

  Int eval(const Int& x, const Int& y) const {
    return ((a * x + b * y) * x + c * y * y) * x + d * y * y * y;
  }

  Rat eval(const Rat& x, const Rat& y) const {
    return ((a * x + b * y) * x + c * y * y) * x + d * y * y * y;
  }

  Int eval(long long x, long long y) const { return eval(Int(x), Int(y)); }

  // df/dx, as a function of (x, y)
  Int deriv_x(const Int& x, const Int& y) const {
    return (3 * a * x + 2 * b * y) * x + c * y * y;
  }

  Int deriv_x(long long x, long long y) const { return deriv_x(Int(x), Int(y)); }

  // f(y, x)
  binary_cubic reversed() const { return {d, c, b, a}; }

  squarefree_split_t a_split() const { return squarefree_split(a); }
  squarefree_split_t d_split() const { return squarefree_split(d); }
};

// H_bal = max(|b|, |c|).
inline Int height_balanced(const binary_cubic& f) { return std::max(iabs(f.b), iabs(f.c)); }

// H_wei = max(|b|, |c|^(1/2)); its square max(b^2, |c|) is an exact integer,
// so all comparisons can be done without floating point.
inline Int height_weighted_sq(const binary_cubic& f) { return std::max(Int(f.b * f.b), iabs(f.c)); }

// Exact test H(f) < X for rational X.
inline bool height_below(const binary_cubic& f, height_kind kind, const Rat& X) {
  if (kind == height_kind::balanced) return Rat(height_balanced(f)) < X;
  return Rat(height_weighted_sq(f)) < X * X;
}

inline double height_value(const binary_cubic& f, height_kind kind) {
  if (kind == height_kind::balanced) return static_cast<double>(height_balanced(f));
  return std::sqrt(static_cast<double>(height_weighted_sq(f)));
}

struct mat2 {
  // row-major 2x2 integer matrix
  Int m00, m01, m10, m11;
  Int det() const { return m00 * m11 - m01 * m10; }
};

// Twisted GL_2 action gamma.f(x,y) = det(gamma)^{-1} f((x,y).gamma), where
// (x,y).gamma is the row vector (x m00 + y m10, x m01 + y m11). Preserves the
// discriminant for unimodular gamma.
inline binary_cubic gl2_act(const mat2& g, const binary_cubic& f) {
  Int det = g.det();
  if (det != 1 && det != -1) throw error(errc::not_unimodular, "gl2_act: det must be +-1");
  // substitute x -> m00 x + m10 y, y -> m01 x + m11 y and expand
  const Int &p = g.m00, &q = g.m10, &r = g.m01, &s = g.m11;
  Int a2 = f.a * p * p * p + f.b * p * p * r + f.c * p * r * r + f.d * r * r * r;
  Int b2 = 3 * f.a * p * p * q + f.b * (p * p * s + 2 * p * q * r) + f.c * (2 * p * r * s + q * r * r) +
           3 * f.d * r * r * s;
  Int c2 = 3 * f.a * p * q * q + f.b * (2 * p * q * s + q * q * r) + f.c * (p * s * s + 2 * q * r * s) +
           3 * f.d * r * s * s;
  Int d2 = f.a * q * q * q + f.b * q * q * s + f.c * q * s * s + f.d * s * s * s;
  if (det == -1) { a2 = -a2; b2 = -b2; c2 = -c2; d2 = -d2; }
  return {a2, b2, c2, d2};
}

}  // namespace cubix
