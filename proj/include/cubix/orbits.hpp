#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "cubix/local.hpp"
#include "cubix/poly.hpp"
#include "cubix/ternary.hpp"

namespace cubix {

// ---------------------------------------------------------------------------
// distinguished and Delta-distinguished representatives

// The pair with a11 = b11 = 0 representing the unique distinguished orbit
// with resolvent f.
inline qf_pair distinguished_rep(const binary_cubic& f) {
  if (f.disc() == 0) throw error(errc::degenerate_form, "distinguished_rep: disc = 0");
  ternary_form A, B;
  A.g[0][2] = A.g[2][0] = rat(1, 2);
  A.g[1][1] = -f.a;
  A.g[2][2] = -f.c;
  B.g[0][1] = B.g[1][0] = rat(1, 2);
  B.g[1][1] = f.b;
  B.g[2][2] = f.d;
  return qf_pair(A, B);
}

// The rational pair with vanishing leading 2x2 minors representing the unique
// Delta-distinguished orbit with resolvent f; denominators divide 4ad.
inline qf_pair delta_distinguished_rep(const binary_cubic& f) {
  if (f.a == 0 || f.d == 0) throw error(errc::bad_argument, "delta_distinguished_rep: ad = 0");
  if (f.disc() == 0) throw error(errc::degenerate_form, "delta_distinguished_rep: disc = 0");
  Rat q(1, 2);
  ternary_form A, B;
  A.g[0][0] = -f.a;
  A.g[1][2] = A.g[2][1] = q;
  A.g[2][2] = rat(f.b, 4 * f.a * f.d);
  B.g[0][2] = B.g[2][0] = q;
  B.g[1][1] = f.d;
  B.g[2][2] = rat(-f.c, 4 * f.a * f.d);
  return qf_pair(A, B);
}

// ---------------------------------------------------------------------------
// integral existence of the Delta-distinguished orbit

enum class delta_space { W, Wvee };
enum class delta_reason { gcd_fail, congruence_fail, table_fail, found };

struct delta_dist_result {
  bool exists = false;
  std::optional<qf_pair> witness;
  delta_reason reason = delta_reason::found;
};

namespace detail {

using residue_set = std::set<std::pair<int, int>>;
using table_t = std::map<std::pair<int, int>, std::map<std::pair<int, int>, residue_set>>;

// mod-4 table for 2 coprime to a_k d_k: rows keyed by (a_k, d_k) mod 4,
// columns by (a_m, d_m) mod 2, entries the admissible (b, c) mod 4. The row
// (3,1) is derived from (1,3) by the symmetry (a,d) <-> (d,a), (b,c) <-> (c,b).
inline const table_t& delta_table_mod4() {
  static const table_t tab = [] {
    table_t t;
    t[{1, 1}] = {{{0, 0}, {{1, 1}}},
                 {{0, 1}, {{1, 3}}},
                 {{1, 0}, {{3, 1}}},
                 {{1, 1}, {{0, 0}, {1, 2}, {2, 1}}}};
    t[{1, 3}] = {{{0, 0}, {{3, 1}}},
                 {{0, 1}, {{3, 3}}},
                 {{1, 0}, {{1, 1}}},
                 {{1, 1}, {{0, 0}, {2, 1}, {3, 2}}}};
    t[{3, 3}] = {{{0, 0}, {{3, 3}}},
                 {{0, 1}, {{3, 1}}},
                 {{1, 0}, {{1, 3}}},
                 {{1, 1}, {{0, 0}, {2, 3}, {3, 2}}}};
    for (auto& [col, entries] : t[{1, 3}]) {
      residue_set swapped;
      for (auto& [b, c] : entries) swapped.insert({c, b});
      t[{3, 1}][{col.second, col.first}] = swapped;
    }
    return t;
  }();
  return tab;
}

// mod-8 table for 2 | d_k (a odd): rows (a_k, d_k) mod 8, columns (a_m, d_m)
// mod 2, entries (b, c) mod 8. The case 2 | a_k goes through the same table
// with the roles of a and d (and b and c) exchanged.
inline const table_t& delta_table_mod8() {
  static const table_t tab = [] {
    table_t t;
    t[{1, 2}] = {{{1, 0}, {{0, 1}, {4, 1}}},
                 {{1, 1}, {{0, 0}, {2, 1}, {2, 4}, {4, 4}, {6, 0}, {6, 1}}}};
    t[{1, 6}] = {{{1, 0}, {{0, 1}, {4, 1}}},
                 {{1, 1}, {{0, 0}, {2, 0}, {2, 1}, {4, 4}, {6, 1}, {6, 4}}}};
    t[{3, 2}] = {{{1, 0}, {{0, 3}, {4, 3}}},
                 {{1, 1}, {{0, 0}, {2, 3}, {2, 4}, {4, 4}, {6, 0}, {6, 3}}}};
    t[{3, 6}] = {{{1, 0}, {{0, 3}, {4, 3}}},
                 {{1, 1}, {{0, 0}, {2, 0}, {2, 3}, {4, 4}, {6, 3}, {6, 4}}}};
    t[{5, 2}] = {{{1, 0}, {{0, 5}, {4, 5}}},
                 {{1, 1}, {{0, 0}, {2, 4}, {2, 5}, {4, 4}, {6, 0}, {6, 5}}}};
    t[{5, 6}] = {{{1, 0}, {{0, 5}, {4, 5}}},
                 {{1, 1}, {{0, 0}, {2, 0}, {2, 5}, {4, 4}, {6, 4}, {6, 5}}}};
    t[{7, 2}] = {{{1, 0}, {{0, 7}, {4, 7}}},
                 {{1, 1}, {{0, 0}, {2, 4}, {2, 7}, {4, 4}, {6, 0}, {6, 7}}}};
    t[{7, 6}] = {{{1, 0}, {{0, 7}, {4, 7}}},
                 {{1, 1}, {{0, 0}, {2, 0}, {2, 7}, {4, 4}, {6, 4}, {6, 7}}}};
    return t;
  }();
  return tab;
}

inline int resi(const Int& n, int m) { return static_cast<int>(to_i64(mod_floor(n, Int(m)))); }

// the 2-adic table condition of the integral-existence criterion
inline bool delta_two_adic_ok(const binary_cubic& f, const squarefree_split_t& as,
                              const squarefree_split_t& ds) {
  if (as.k % 2 != 0 && ds.k % 2 != 0) {
    const auto& row = delta_table_mod4().at({resi(as.k, 4), resi(ds.k, 4)});
    const auto& cell = row.at({resi(as.m, 2), resi(ds.m, 2)});
    return cell.count({resi(f.b, 4), resi(f.c, 4)}) > 0;
  }
  if (ds.k % 2 == 0) {
    const auto& row = delta_table_mod8().at({resi(as.k, 8), resi(ds.k, 8)});
    const auto& cell = row.at({resi(as.m, 2), resi(ds.m, 2)});
    return cell.count({resi(f.b, 8), resi(f.c, 8)}) > 0;
  }
  // 2 | a_k: symmetric case
  const auto& row = delta_table_mod8().at({resi(ds.k, 8), resi(as.k, 8)});
  const auto& cell = row.at({resi(ds.m, 2), resi(as.m, 2)});
  return cell.count({resi(f.c, 8), resi(f.b, 8)}) > 0;
}

}  // namespace detail

// Exhaustive residue scan over the shape with a11 = a_k, |a23| = a_m,
// b22 = d_k, |b13| = d_m forced by maximality: the two free off-diagonal
// entries determine a33 and b33 through the resolvent identities, and their
// integrality depends only on the residues mod 4|a_k d_k| (W) or |a_k d_k|
// (Wvee); scanning mod 8|a_k d_k| (resp. 2|a_k d_k|) is a safe superset.
// Sign choices of a23, b13 are absorbed by the full scans.
inline delta_dist_result delta_dist_search(const binary_cubic& f, delta_space space) {
  if (f.a == 0 || f.d == 0) throw error(errc::bad_argument, "delta_dist_search: ad = 0");
  auto as = f.a_split(), ds = f.d_split();
  Int ak = as.k, am = as.m, dk = ds.k, dm = ds.m;
  Int div = space == delta_space::W ? Int(4 * ak * dk) : Int(ak * dk);
  Int adiv = iabs(div);
  Int M = 8 * iabs(Int(ak * dk));  // 8|a_k d_k| for W, 2|a_k d_k| for Wvee
  if (space == delta_space::Wvee) M = 2 * iabs(Int(ak * dk));
  if (M > 4096) throw error(errc::range_too_large, "delta_dist_search: |a_k d_k| too large to scan");
  delta_dist_result out;
  for (Int a13 = 0; a13 < M; ++a13)
    for (Int b23 = 0; b23 < M; ++b23) {
      Int n1 = -a13 * a13 * dk + 2 * ak * am * b23 + f.b;
      Int n2 = ak * b23 * b23 - 2 * a13 * dm * dk - f.c;
      if (mod_floor(n1, adiv) != 0 || mod_floor(n2, adiv) != 0) continue;
      Int a33 = n1 / div, b33 = n2 / div;
      qf_pair w = [&] {
        if (space == delta_space::W) {
          ternary_form A = ternary_form::from_coeffs(Rat(-ak), Rat(0), Rat(a33), Rat(0), Rat(a13), Rat(am));
          ternary_form B = ternary_form::from_coeffs(Rat(0), Rat(dk), Rat(b33), Rat(0), Rat(dm), Rat(b23));
          return qf_pair(A, B);
        }
        ternary_form A, B;
        A.g[0][0] = -ak; A.g[0][2] = A.g[2][0] = a13; A.g[1][2] = A.g[2][1] = am; A.g[2][2] = a33;
        B.g[1][1] = dk; B.g[0][2] = B.g[2][0] = dm; B.g[1][2] = B.g[2][1] = b23; B.g[2][2] = b33;
        return qf_pair(A, B);
      }();
      rat_cubic expect = to_rat_cubic(f);
      if (space == delta_space::Wvee)
        expect = {4 * expect.a, 4 * expect.b, 4 * expect.c, 4 * expect.d};
      if (!(w.res == expect))
        throw error(errc::bad_argument, "delta_dist_search: witness resolvent mismatch");
      out.exists = true;
      out.witness = std::move(w);
      out.reason = delta_reason::found;
      return out;
    }
  out.exists = false;
  out.reason = delta_reason::table_fail;
  return out;
}

namespace detail {
inline delta_dist_result delta_dist_criterion(const binary_cubic& f, delta_space space,
                                              bool build_witness) {
  if (f.a == 0 || f.d == 0 || f.disc() == 0)
    throw error(errc::bad_argument, "delta-distinguished criterion needs ad != 0, disc != 0");
  if (!is_maximal(f)) throw error(errc::not_maximal, "delta-distinguished criterion: f not maximal");
  auto as = f.a_split(), ds = f.d_split();
  delta_dist_result out;
  if (igcd(iabs(as.k), iabs(f.d)) != 1 || igcd(iabs(f.a), iabs(ds.k)) != 1) {
    out.reason = delta_reason::gcd_fail;
    return out;
  }
  if (mod_floor(f.b * f.b - 4 * f.a * f.c, iabs(ds.k)) != 0 ||
      mod_floor(f.c * f.c - 4 * f.b * f.d, iabs(as.k)) != 0) {
    out.reason = delta_reason::congruence_fail;
    return out;
  }
  if (space == delta_space::W && !delta_two_adic_ok(f, as, ds)) {
    out.reason = delta_reason::table_fail;
    return out;
  }
  out.exists = true;
  out.reason = delta_reason::found;
  if (build_witness) {
    delta_dist_result sr = delta_dist_search(f, space);
    if (!sr.exists)
      throw error(errc::bad_argument,
                  "criterion accepts but residue search finds no representative; "
                  "criterion/search mismatch must be investigated, not reconciled");
    out.witness = std::move(sr.witness);
  }
  return out;
}
}  // namespace detail

// Existence of an integral representative of the Delta-distinguished orbit in
// W(Z) (pairs of integral forms), by the gcd / congruence / 2-adic-table
// criterion; a witness is produced through the independent residue search.
inline delta_dist_result delta_dist_integral_W(const binary_cubic& f, bool build_witness = true) {
  return detail::delta_dist_criterion(f, delta_space::W, build_witness);
}

// Same for W^vee(Z) (integer-matrix pairs, resolvent 4f): gcd and congruence
// conditions only.
inline delta_dist_result delta_dist_integral_Wvee(const binary_cubic& f, bool build_witness = true) {
  return detail::delta_dist_criterion(f, delta_space::Wvee, build_witness);
}

// ---------------------------------------------------------------------------
// binary quartics and real solubility

// q = c0 x^4 + c1 x^3 y + c2 x^2 y^2 + c3 x y^3 + c4 y^4
struct binary_quartic {
  std::array<Rat, 5> c;
  bool operator==(const binary_quartic&) const = default;
};

// The quartic of the 2-cover attached to a pair (A, B) with A the fixed
// anti-diagonal form: add the multiple of A that clears the 13-entry of B and
// read off the coefficients.
inline binary_quartic associated_quartic(const qf_pair& p) {
  if (!(p.A == antidiagonal_form()))
    throw error(errc::not_normalized, "associated_quartic: A must be the anti-diagonal form");
  ternary_form B = p.B;
  Rat t = -B.g[0][2];
  const ternary_form Ad = antidiagonal_form();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) B.g[i][j] += t * Ad.g[i][j];
  // b13 is now 0; coefficients in the doubled off-diagonal convention
  return binary_quartic{{B.g[0][0] / 4, 2 * B.g[0][1], B.g[1][1], 4 * B.g[1][2], B.g[2][2]}};
}

// Number of distinct real projective roots, via exact Sturm sequences on the
// affine chart plus the root at (1,0) when the x^4 coefficient vanishes.
inline int count_real_roots(const binary_quartic& q) {
  bool all_zero = true;
  for (auto& cc : q.c) all_zero = all_zero && cc == 0;
  if (all_zero) throw error(errc::bad_argument, "count_real_roots: zero quartic");
  poly affine(std::vector<Rat>{q.c[4], q.c[3], q.c[2], q.c[1], q.c[0]});
  int n = count_real_roots(affine);
  if (q.c[0] == 0) ++n;
  return n;
}

// R-solubility of the Delta-distinguished orbit over a monic f: soluble iff
// Disc(f) < 0, or Disc(f) > 0 and f(0,1) > 0.
inline bool real_soluble_delta_dist(const binary_cubic& f) {
  if (f.a != 1) throw error(errc::bad_argument, "real_soluble_delta_dist: f must be monic");
  Int D = f.disc();
  if (D == 0) throw error(errc::degenerate_form, "real_soluble_delta_dist: disc = 0");
  return D < 0 || f.d > 0;
}

// ---------------------------------------------------------------------------
// real orbits and splitting types

enum class real_splitting { s1111, s112, s22sharp, s22plus, s22minus };

inline const char* to_string(real_splitting t) {
  switch (t) {
    case real_splitting::s1111: return "(1111)";
    case real_splitting::s112: return "(112)";
    case real_splitting::s22sharp: return "(22#)";
    case real_splitting::s22plus: return "(22+)";
    case real_splitting::s22minus: return "(22-)";
  }
  return "?";
}

// Rational approximations r1 < r2 < r3 to the roots of a monic f of positive
// discriminant, each within `width` of the true root and sharing its sign
// (roots that are exactly rational are returned exactly).
inline std::array<Rat, 3> isolated_roots(const binary_cubic& f, const Rat& width) {
  if (f.a != 1) throw error(errc::bad_argument, "isolated_roots: f must be monic");
  if (f.disc() <= 0) throw error(errc::bad_argument, "isolated_roots: needs three real roots");
  poly g(std::vector<Rat>{Rat(f.d), Rat(f.c), Rat(f.b), Rat(1)});
  // rational roots of a monic integer cubic are integers; candidates divide d
  // (or c, after stripping the root at 0 when d = 0)
  std::vector<Rat> exact;
  if (f.d == 0) exact.push_back(0);
  {
    Int base = f.d != 0 ? f.d : f.c;
    std::vector<Int> divs{1};
    for (auto& [p, e] : factor(base)) {
      std::vector<Int> next;
      Int pe = 1;
      for (int i = 0; i <= e; ++i, pe *= p)
        for (auto& v : divs) next.push_back(v * pe);
      divs = std::move(next);
    }
    for (const Int& v : divs)
      for (int s : {1, -1})
        if (f.eval(Int(s * v), Int(1)) == 0) exact.push_back(Rat(s * v));
  }
  auto iv = isolate_real_roots(g, width);
  if (iv.size() != 3) throw error(errc::precision_exhausted, "root isolation failed");
  std::array<Rat, 3> out;
  for (int i = 0; i < 3; ++i) {
    auto [lo, hi] = iv[static_cast<size_t>(i)];
    auto snap = [&]() -> std::optional<Rat> {
      for (const Rat& r : exact)
        if (lo < r && r <= hi) return r;
      return std::nullopt;
    };
    if (auto r = snap()) {
      out[static_cast<size_t>(i)] = *r;
      continue;
    }
    // the root is irrational, so bisection eventually fixes its sign
    for (int iter = 0; iter < 512 && !(lo > 0 || hi < 0); ++iter) {
      Rat mid = (lo + hi) / 2;
      if (count_real_roots_in(g, lo, mid) == 1) hi = mid;
      else lo = mid;
    }
    if (!(lo > 0 || hi < 0)) throw error(errc::precision_exhausted, "sign of root undecided");
    out[static_cast<size_t>(i)] = (lo + hi) / 2;
  }
  return out;
}

// The four diagonal representatives (A_i, B_i) over a totally real monic f;
// det(xA_i - B_i) = f(x,1) exactly when the roots are rational, otherwise up
// to the isolation width.
inline std::array<qf_pair, 4> real_orbit_reps(const binary_cubic& f,
                                              const Rat& width = Rat(1, Int(1) << 26)) {
  auto r = isolated_roots(f, width);
  const Rat &r1 = r[0], &r2 = r[1], &r3 = r[2];
  auto mk = [](Rat a1, Rat a2, Rat a3, Rat b1, Rat b2, Rat b3) {
    return qf_pair(diagonal_form(a1, a2, a3), diagonal_form(b1, b2, b3));
  };
  return {mk(-1, 1, -1, -r1, r2, -r3), mk(1, -1, -1, r1, -r2, -r3), mk(-1, -1, 1, -r1, -r2, r3),
          mk(1, 1, 1, r1, r2, r3)};
}

namespace detail {

// resultant of two quadratics in z with binary-form coefficients; a2, b2 are
// the z^2 coefficients, a1, b1 linear in (x,y), a0, b0 quadratic
struct zslice {
  Rat c2;          // z^2
  Rat l1x, l1y;    // z * (l1x x + l1y y)
  Rat q0xx, q0xy, q0yy;
};

inline zslice slice_z(const ternary_form& A) {
  return {A.g[2][2], 2 * A.g[0][2], 2 * A.g[1][2], A.g[0][0], 2 * A.g[0][1], A.g[1][1]};
}

// Res_z(A, B) as a binary quartic in (x, y)
inline binary_quartic resultant_z(const ternary_form& A, const ternary_form& B) {
  zslice a = slice_z(A), b = slice_z(B);
  // work with poly-in-(x,y) coefficient triples/pairs
  // E = a2*b0 - a0*b2 (quadratic), F = a2*b1 - a1*b2 (linear),
  // G = a1*b0 - a0*b1 (cubic); Res = E^2 - F*G
  Rat Exx = a.c2 * b.q0xx - a.q0xx * b.c2;
  Rat Exy = a.c2 * b.q0xy - a.q0xy * b.c2;
  Rat Eyy = a.c2 * b.q0yy - a.q0yy * b.c2;
  Rat Fx = a.c2 * b.l1x - a.l1x * b.c2;
  Rat Fy = a.c2 * b.l1y - a.l1y * b.c2;
  // G = (l1x x + l1y y)(b0) - (a0)(b1x x + b1y y): cubic coefficients
  Rat Gxxx = a.l1x * b.q0xx - a.q0xx * b.l1x;
  Rat Gxxy = a.l1x * b.q0xy + a.l1y * b.q0xx - (a.q0xx * b.l1y + a.q0xy * b.l1x);
  Rat Gxyy = a.l1x * b.q0yy + a.l1y * b.q0xy - (a.q0xy * b.l1y + a.q0yy * b.l1x);
  Rat Gyyy = a.l1y * b.q0yy - a.q0yy * b.l1y;
  binary_quartic q;
  q.c[0] = Exx * Exx - Fx * Gxxx;
  q.c[1] = 2 * Exx * Exy - (Fx * Gxxy + Fy * Gxxx);
  q.c[2] = Exy * Exy + 2 * Exx * Eyy - (Fx * Gxyy + Fy * Gxxy);
  q.c[3] = 2 * Exy * Eyy - (Fx * Gyyy + Fy * Gxyy);
  q.c[4] = Eyy * Eyy - Fy * Gyyy;
  return q;
}

// deterministic list of determinant-one coordinate changes used to put the
// pencil in general position: cyclic permutations composed with z-row shears
inline std::vector<mat3> shear_list() {
  std::vector<mat3> out;
  auto mk = [](std::array<std::array<int, 3>, 3> v) {
    mat3 g;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = v[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return g;
  };
  std::array<mat3, 3> rot{mk({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}),
                          mk({{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}),
                          mk({{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}})};
  auto mul = [](const mat3& a, const mat3& b) {
    mat3 c;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Int s = 0;
        for (int k = 0; k < 3; ++k) s += a.m[static_cast<size_t>(i)][static_cast<size_t>(k)] * b.m[static_cast<size_t>(k)][static_cast<size_t>(j)];
        c.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
      }
    return c;
  };
  const int ts[] = {0, 1, -1, 2, -2, 3, 5};
  for (int t : ts)
    for (int u : ts)
      for (const mat3& r : rot) out.push_back(mul(mk({{{1, 0, 0}, {0, 1, 0}, {t, u, 1}}}), r));
  return out;
}

inline poly affine_part(const binary_quartic& q) {
  return poly(std::vector<Rat>{q.c[4], q.c[3], q.c[2], q.c[1], q.c[0]});
}

// a rational point on the projective conic A = 0, by bounded search
inline std::optional<std::array<Rat, 3>> conic_rational_point(const ternary_form& A, int bound) {
  for (int n = 0; n <= bound; ++n)
    for (int x = -n; x <= n; ++x)
      for (int y = -n; y <= n; ++y)
        for (int z = -n; z <= n; ++z) {
          if (std::max({std::abs(x), std::abs(y), std::abs(z)}) != n) continue;
          if (x == 0 && y == 0 && z == 0) continue;
          if (A.eval(x, y, z) == 0) return std::array<Rat, 3>{Rat(x), Rat(y), Rat(z)};
        }
  return std::nullopt;
}

// sign of B on the zero set of an isotropic A with no common zeros of A and
// B; the real conic is connected, so one point decides
inline int sign_of_B_on_conic(const ternary_form& A, const ternary_form& B) {
  if (auto pt = conic_rational_point(A, 24)) {
    Rat v = B.eval((*pt)[0], (*pt)[1], (*pt)[2]);
    if (v == 0) throw error(errc::precision_exhausted, "B vanishes at conic point");
    return v > 0 ? +1 : -1;
  }
  // no small rational point: scan rational lines (x0, y0, z) and isolate an
  // intersection with the conic, then pin the sign of B on a subinterval that
  // provably contains the root and no root of B's restriction
  for (int n = 1; n <= 64; ++n)
    for (int xd = -n; xd <= n; ++xd)
      for (int yd = -n; yd <= n; ++yd) {
        if (std::max(std::abs(xd), std::abs(yd)) != n) continue;
        Rat x0(xd, 2), y0(yd, 2);
        // A(x0, y0, t) as a quadratic in t
        Rat c2 = A.g[2][2];
        Rat c1 = 2 * (A.g[0][2] * x0 + A.g[1][2] * y0);
        Rat c0 = A.g[0][0] * x0 * x0 + 2 * A.g[0][1] * x0 * y0 + A.g[1][1] * y0 * y0;
        if (c2 == 0) continue;
        Rat disc = c1 * c1 - 4 * c2 * c0;
        if (disc <= 0) continue;
        poly g(std::vector<Rat>{c0, c1, c2});
        poly h(std::vector<Rat>{B.g[0][0] * x0 * x0 + 2 * B.g[0][1] * x0 * y0 + B.g[1][1] * y0 * y0,
                                2 * (B.g[0][2] * x0 + B.g[1][2] * y0), B.g[2][2]});
        auto roots = isolate_real_roots(g, rat(1, 1024));
        for (auto [lo, hi] : roots) {
          for (int iter = 0; iter < 256; ++iter) {
            if (count_real_roots_in(h, lo, hi) == 0 && h.eval(lo) != 0 && h.eval(hi) != 0 &&
                (h.eval(lo) > 0) == (h.eval(hi) > 0))
              return h.eval(lo) > 0 ? +1 : -1;
            Rat mid = (lo + hi) / 2;
            if (count_real_roots_in(g, lo, mid) == 1) hi = mid;
            else lo = mid;
          }
        }
      }
  throw error(errc::precision_exhausted, "no usable line section of the conic found");
}

}  // namespace detail

// Splitting type over R of a pair with nondegenerate resolvent: (112) in the
// negative-discriminant case; otherwise the conics meet in 4 or 0 real
// points, counted exactly through a z-resultant in general position, with the
// 0-point case refined by definiteness of A and the sign of B on A = 0.
inline real_splitting real_splitting_type(const qf_pair& p) {
  Rat D = p.res.disc();
  if (D == 0) throw error(errc::degenerate_form, "real_splitting_type: disc = 0");
  if (D < 0) return real_splitting::s112;
  int n = -1;
  for (const mat3& g : detail::shear_list()) {
    ternary_form A = sl3_act(g, p.A), B = sl3_act(g, p.B);
    if (A.g[2][2] == 0 || B.g[2][2] == 0) continue;
    binary_quartic q = detail::resultant_z(A, B);
    poly aff = detail::affine_part(q);
    if (aff.deg() != 4) continue;  // projection loses a point at infinity
    if (poly_gcd(aff, aff.deriv()).deg() > 0) continue;  // projection not injective
    n = count_real_roots(aff);
    break;
  }
  if (n < 0) throw error(errc::precision_exhausted, "no shear puts the pencil in general position");
  if (n == 4) return real_splitting::s1111;
  if (n != 0) throw error(errc::precision_exhausted, "unexpected real intersection count");
  auto [pos, neg] = signature(p.A);
  if (pos == 3 || neg == 3) return real_splitting::s22sharp;
  return detail::sign_of_B_on_conic(p.A, p.B) > 0 ? real_splitting::s22plus : real_splitting::s22minus;
}

// Archimedean mass table for the splitting types that carry soluble orbits.
// epsilon_1 = -1 never contributes; the (22+) mass sits on (1,1) exactly when
// r2 > 0 or r3 < 0 and on (1,-1) otherwise.
inline Rat real_mass(const binary_cubic& f, int e1, int e2, real_splitting t) {
  Int D = f.disc();
  if (D == 0) throw error(errc::degenerate_form, "real_mass: disc = 0");
  if (t == real_splitting::s112) {
    if (D > 0) throw error(errc::type_mismatch, "(112) requires negative discriminant");
    return e1 == 1 && e2 == 1 ? rat(1, 2) : Rat(0);
  }
  if (D < 0) throw error(errc::type_mismatch, "positive-discriminant type with disc < 0");
  if (t == real_splitting::s1111) return e1 == 1 && e2 == 1 ? rat(1, 4) : Rat(0);
  if (t != real_splitting::s22plus)
    throw error(errc::type_mismatch, "mass table covers (1111), (112) and (22+)");
  if (e1 != 1) return 0;
  if (f.a != 1) throw error(errc::bad_argument, "real_mass at (22+): f must be monic");
  // r2 > 0 or r3 < 0, decided by exact Sturm counts of positive/negative roots
  poly g(std::vector<Rat>{Rat(f.d), Rat(f.c), Rat(f.b), Rat(1)});
  auto chain = sturm_chain(g);
  int at0 = detail::sturm_variations_at(chain, 0);
  int pos_roots = at0 - detail::sturm_variations_at_inf(chain, +1);
  int all_roots = detail::sturm_variations_at_inf(chain, -1) - detail::sturm_variations_at_inf(chain, +1);
  int nonpos_roots = all_roots - pos_roots;
  bool cond = pos_roots >= 2 || (nonpos_roots == 3 && f.d != 0);
  if (e2 == 1) return cond ? rat(1, 4) : Rat(0);
  if (e2 == -1) return cond ? Rat(0) : rat(1, 4);
  return 0;
}

}  // namespace cubix
