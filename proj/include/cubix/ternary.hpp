#pragma once

#include <array>

#include "cubix/cubic_form.hpp"
#include "cubix/numeric.hpp"

namespace cubix {

enum class lattice_class { half_integral, integer_matrix, general };

// A ternary quadratic form, stored as its exact rational Gram matrix. The
// form coefficient m_ij is the ij entry for i = j and twice the ij entry for
// i != j, matching the convention used for pairs throughout.
struct ternary_form {
  std::array<std::array<Rat, 3>, 3> g;  // symmetric

  ternary_form() {
    for (auto& row : g) row.fill(Rat(0));
  }

  static ternary_form from_gram(std::array<std::array<Rat, 3>, 3> gram) {
    ternary_form t;
    t.g = std::move(gram);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (t.g[i][j] != t.g[j][i]) throw error(errc::bad_argument, "gram not symmetric");
    return t;
  }

  // diagonal entries and doubled off-diagonal entries, i.e. the coefficients
  // of the quadratic form
  static ternary_form from_coeffs(const Rat& m11, const Rat& m22, const Rat& m33, const Rat& m12,
                                  const Rat& m13, const Rat& m23) {
    ternary_form t;
    t.g[0][0] = m11; t.g[1][1] = m22; t.g[2][2] = m33;
    t.g[0][1] = t.g[1][0] = m12 / 2;
    t.g[0][2] = t.g[2][0] = m13 / 2;
    t.g[1][2] = t.g[2][1] = m23 / 2;
    return t;
  }

  bool operator==(const ternary_form&) const = default;

  Rat coeff(int i, int j) const { return i == j ? g[i][j] : g[i][j] * 2; }

  Rat det() const {
    return g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
           g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
           g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  }

  Rat eval(const Rat& x, const Rat& y, const Rat& z) const {
    std::array<Rat, 3> v{x, y, z};
    Rat r = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r += g[i][j] * v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
    return r;
  }

  // Inspect denominators: half-integral means integral diagonal and
  // half-integral off-diagonal (an integral quadratic form); integer-matrix
  // means every Gram entry is integral.
  lattice_class classify() const {
    bool intmat = true, halfint = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Int den = denominator(g[i][j]);
        if (den != 1) intmat = false;
        if (i == j ? den != 1 : (den != 1 && den != 2)) halfint = false;
      }
    if (intmat) return lattice_class::integer_matrix;
    if (halfint) return lattice_class::half_integral;
    return lattice_class::general;
  }
};

// The fixed anti-diagonal form with anti-diagonal entries 1, -1, 1.
inline ternary_form antidiagonal_form() {
  ternary_form t;
  t.g[0][2] = t.g[2][0] = 1;
  t.g[1][1] = -1;
  return t;
}

inline ternary_form diagonal_form(const Rat& a, const Rat& b, const Rat& c) {
  ternary_form t;
  t.g[0][0] = a; t.g[1][1] = b; t.g[2][2] = c;
  return t;
}

struct mat3 {
  std::array<std::array<Int, 3>, 3> m;
  Int det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
};

// g.A = g A g^T
inline ternary_form sl3_act(const mat3& g, const ternary_form& A) {
  ternary_form out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat s = 0;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) s += A.g[k][l] * g.m[i][k] * g.m[j][l];
      out.g[i][j] = s;
    }
  return out;
}

// Signature of a nonsingular rational symmetric 3x3 matrix, computed exactly:
// the characteristic polynomial has all roots real, so Descartes' rule counts
// the positive eigenvalues exactly.
inline std::pair<int, int> signature(const ternary_form& A) {
  Rat det = A.det();
  if (det == 0) throw error(errc::degenerate_form, "signature of singular form");
  Rat tr = A.g[0][0] + A.g[1][1] + A.g[2][2];
  Rat m2 = A.g[1][1] * A.g[2][2] - A.g[1][2] * A.g[2][1] + A.g[0][0] * A.g[2][2] -
           A.g[0][2] * A.g[2][0] + A.g[0][0] * A.g[1][1] - A.g[0][1] * A.g[1][0];
  // char poly: x^3 - tr x^2 + m2 x - det; count sign variations
  std::array<Rat, 4> cs{Rat(1), -tr, m2, -det};
  int pos = 0, last = 0;
  for (auto& cc : cs) {
    int s = cc == 0 ? 0 : (cc > 0 ? 1 : -1);
    if (s != 0) {
      if (last != 0 && s != last) ++pos;
      last = s;
    }
  }
  return {pos, 3 - pos};
}

// kappa_infty: +1 if A is isotropic over R (indefinite), -1 if definite.
inline int kappa_inf(const ternary_form& A) {
  auto [pos, neg] = signature(A);
  return (pos == 3 || neg == 3) ? -1 : +1;
}

// A cubic form with rational coefficients; resolvents of rational pairs live
// here, integral ones convert down to binary_cubic.
struct rat_cubic {
  Rat a, b, c, d;
  bool operator==(const rat_cubic&) const = default;
  bool integral() const {
    return denominator(a) == 1 && denominator(b) == 1 && denominator(c) == 1 && denominator(d) == 1;
  }
  binary_cubic to_integer() const {
    if (!integral()) throw error(errc::bad_argument, "resolvent is not integral");
    return {numerator(a), numerator(b), numerator(c), numerator(d)};
  }
  Rat disc() const {
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
           27 * a * a * d * d;
  }
};

inline rat_cubic to_rat_cubic(const binary_cubic& f) { return {Rat(f.a), Rat(f.b), Rat(f.c), Rat(f.d)}; }

// An ordered pair (A, B) with its resolvent 4 det(xA - yB) cached at
// construction. The pair is immutable, so the cache cannot go stale.
struct qf_pair {
  ternary_form A, B;
  rat_cubic res;

  qf_pair(ternary_form A_, ternary_form B_) : A(std::move(A_)), B(std::move(B_)), res(compute_resolvent(A, B)) {}

  static rat_cubic compute_resolvent(const ternary_form& A, const ternary_form& B) {
    // det of the matrix of linear forms x*A - y*B; entries (u, v) represent
    // u x + v y, products expanded by convolution
    struct lin { Rat u, v; };
    auto ent = [&](int i, int j) { return lin{A.g[i][j], -B.g[i][j]}; };
    std::array<Rat, 4> acc{Rat(0), Rat(0), Rat(0), Rat(0)};  // x^3, x^2 y, x y^2, y^3
    int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
    int signs[6] = {1, 1, 1, -1, -1, -1};
    for (int t = 0; t < 6; ++t) {
      lin e0 = ent(0, perms[t][0]), e1 = ent(1, perms[t][1]), e2 = ent(2, perms[t][2]);
      std::array<Rat, 4> term{e0.u * e1.u * e2.u,
                              e0.u * e1.u * e2.v + e0.u * e1.v * e2.u + e0.v * e1.u * e2.u,
                              e0.u * e1.v * e2.v + e0.v * e1.u * e2.v + e0.v * e1.v * e2.u,
                              e0.v * e1.v * e2.v};
      for (int i = 0; i < 4; ++i) acc[static_cast<size_t>(i)] += signs[t] * term[static_cast<size_t>(i)];
    }
    return {4 * acc[0], 4 * acc[1], 4 * acc[2], 4 * acc[3]};
  }
};

inline qf_pair sl3_act(const mat3& g, const qf_pair& p) {
  if (g.det() != 1) throw error(errc::not_unimodular, "sl3_act: det must be 1");
  return qf_pair(sl3_act(g, p.A), sl3_act(g, p.B));
}

}  // namespace cubix
