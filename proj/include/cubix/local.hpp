#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "cubix/cubic_form.hpp"
#include "cubix/ternary.hpp"

namespace cubix {

// Factorisation pattern of a binary cubic over F_p. The repeated factor is
// written on the left exactly when the repeated root is (1,0), following the
// convention for the (1^21)/(11^2) distinction.
enum class splitting_type { t111, t12, t3, t11sq, t1sq1, t1cube };

inline const char* to_string(splitting_type t) {
  switch (t) {
    case splitting_type::t111: return "(111)";
    case splitting_type::t12: return "(12)";
    case splitting_type::t3: return "(3)";
    case splitting_type::t11sq: return "(11^2)";
    case splitting_type::t1sq1: return "(1^21)";
    case splitting_type::t1cube: return "(1^3)";
  }
  return "?";
}

enum class ram_side { a_side, d_side };

namespace modp {

inline std::int64_t norm(const Int& x, std::int64_t p) { return to_i64(mod_floor(x, Int(p))); }

inline std::int64_t mulm(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

inline std::int64_t powm(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a %= p;
  if (a < 0) a += p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::int64_t invm(std::int64_t a, std::int64_t p) { return powm(a, p - 2, p); }

// Square root mod an odd prime via Tonelli-Shanks; nullopt for non-residues.
inline std::optional<std::int64_t> sqrtm(std::int64_t a, std::int64_t p) {
  a = mod_floor64(a, p);
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powm(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return powm(a, (p + 1) / 4, p);
  std::int64_t q = p - 1, s = 0;
  while (q % 2 == 0) { q /= 2; ++s; }
  std::int64_t z = 2;
  while (powm(z, (p - 1) / 2, p) != p - 1) ++z;
  std::int64_t m = s, c = powm(z, q, p), t = powm(a, q, p), r = powm(a, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t t2 = t, i = 0;
    while (t2 != 1) { t2 = mulm(t2, t2, p); ++i; }
    std::int64_t b = powm(c, 1ll << (m - i - 1), p);
    m = i;
    c = mulm(b, b, p);
    t = mulm(t, c, p);
    r = mulm(r, b, p);
  }
  return r;
}

}  // namespace modp

// Splitting type of f mod p; f must be nonzero mod p.
inline splitting_type splitting_type_mod_p(const binary_cubic& f, std::int64_t p) {
  std::int64_t a = modp::norm(f.a, p), b = modp::norm(f.b, p), c = modp::norm(f.c, p),
               d = modp::norm(f.d, p);
  if (a == 0 && b == 0 && c == 0 && d == 0)
    throw error(errc::imprimitive, "splitting type of a form divisible by p");
  // multiplicity of the root (1,0) = power of y dividing f mod p
  int m_inf = 0;
  for (std::int64_t t : {a, b, c, d}) {
    if (t != 0) break;
    ++m_inf;
  }
  if (m_inf == 3) return splitting_type::t1cube;
  // affine roots of f(x,1) with multiplicity, by repeated synthetic division;
  // deg f(x,1) = 3 - m_inf, so affine multiplicities + rem_deg fill the rest
  std::vector<std::int64_t> cs{d, c, b, a};
  while (cs.size() > 1 && cs.back() == 0) cs.pop_back();
  int max_aff_mult = 0;
  for (std::int64_t r = 0; r < p && cs.size() > 1; ++r) {
    int mult = 0;
    while (cs.size() > 1) {
      std::int64_t acc = 0;
      std::vector<std::int64_t> q(cs.size() - 1);
      for (size_t i = cs.size(); i-- > 0;) {
        acc = mod_floor64(modp::mulm(acc, r, p) + cs[i], p);
        if (i > 0) q[i - 1] = acc;
      }
      if (acc != 0) break;
      cs = std::move(q);
      ++mult;
    }
    max_aff_mult = std::max(max_aff_mult, mult);
  }
  int rem_deg = static_cast<int>(cs.size()) - 1;
  if (max_aff_mult == 3) return splitting_type::t1cube;
  if (m_inf == 2) return splitting_type::t1sq1;
  if (max_aff_mult == 2) return splitting_type::t11sq;
  if (rem_deg == 2) return splitting_type::t12;
  if (rem_deg == 3) return splitting_type::t3;
  return splitting_type::t111;  // three simple roots, possibly one at (1,0)
}

// Dedekind's criterion at p, applied projectively: non-maximal iff some
// repeated root of f mod p, moved to (1,0), has x^3-coefficient divisible by
// p^2 and x^2y-coefficient divisible by p. For the root (1,0) itself this
// reads p^2 | a and p | b; for an affine root r it reads p^2 | f(r,1) and
// p | f'(r,1).
inline bool is_maximal_at(const binary_cubic& f, const Int& p) {
  if (f.disc() == 0) throw error(errc::degenerate_form, "maximality of a degenerate form");
  Int p2 = p * p;
  Int a = mod_floor(f.a, p), b = mod_floor(f.b, p), c = mod_floor(f.c, p), d = mod_floor(f.d, p);
  if (a == 0 && b == 0 && c == 0 && d == 0) return false;  // imprimitive
  if (a == 0 && mod_floor(f.a, p2) == 0 && b == 0) return false;
  std::int64_t pi = to_i64(p);
  if (pi <= 1024) {
    for (std::int64_t r = 0; r < pi; ++r) {
      if (f.eval(r, 1) % pi != 0) continue;
      if (f.eval(r, 1) % p2 == 0 && f.deriv_x(r, 1) % pi == 0) return false;
    }
    return true;
  }
  // large p: repeated affine roots are the roots of gcd(f mod p, f' mod p)
  std::int64_t ai = to_i64(a), bi = to_i64(b), ci = to_i64(c), di = to_i64(d);
  std::vector<std::int64_t> u{di, ci, bi, ai};                           // f(x,1)
  std::vector<std::int64_t> v{ci, mod_floor64(2 * bi, pi), mod_floor64(3 * ai, pi)};  // f'(x,1)
  auto strip = [](std::vector<std::int64_t>& w) { while (!w.empty() && w.back() == 0) w.pop_back(); };
  strip(u); strip(v);
  while (!v.empty()) {
    // u mod v over F_p
    while (u.size() >= v.size() && !u.empty()) {
      std::int64_t fac = modp::mulm(u.back(), modp::invm(v.back(), pi), pi);
      size_t shift = u.size() - v.size();
      for (size_t i = 0; i < v.size(); ++i)
        u[i + shift] = mod_floor64(u[i + shift] - modp::mulm(fac, v[i], pi), pi);
      strip(u);
    }
    std::swap(u, v);
  }
  // u now holds the gcd (possibly constant)
  std::vector<std::int64_t> roots;
  if (u.size() == 2) {
    roots.push_back(mod_floor64(-modp::mulm(u[0], modp::invm(u[1], pi), pi), pi));
  } else if (u.size() == 3) {
    std::int64_t A2 = u[2], A1 = u[1], A0 = u[0];
    std::int64_t discq = mod_floor64(modp::mulm(A1, A1, pi) - 4 * modp::mulm(A2, A0, pi), pi);
    auto s = modp::sqrtm(discq, pi);
    if (s) {
      std::int64_t inv2a = modp::invm(mod_floor64(2 * A2, pi), pi);
      roots.push_back(modp::mulm(mod_floor64(-A1 + *s, pi), inv2a, pi));
      roots.push_back(modp::mulm(mod_floor64(-A1 - *s, pi), inv2a, pi));
    }
  }
  for (std::int64_t r : roots) {
    if (mod_floor(f.eval(r, 1), p2) == 0 && mod_floor(f.deriv_x(r, 1), p) == 0) return false;
  }
  return true;
}

// Maximality over Z: only primes with p^2 | disc can obstruct.
inline bool is_maximal(const binary_cubic& f) {
  Int D = f.disc();
  if (D == 0) throw error(errc::degenerate_form, "maximality of a degenerate form");
  for (auto& [p, e] : factor(D)) {
    if (e >= 2 && !is_maximal_at(f, p)) return false;
  }
  return true;
}

namespace detail {
// Whether the univariate reduction (coefficients low-to-high) is a unit times
// a square over F_p: nonzero, even degree, and for degree 2 a vanishing
// discriminant.
inline bool unit_times_square_mod_p(std::array<Int, 4> cs, const Int& p) {
  int deg = -1;
  for (int i = 0; i < 4; ++i) {
    cs[static_cast<size_t>(i)] = mod_floor(cs[static_cast<size_t>(i)], p);
    if (cs[static_cast<size_t>(i)] != 0) deg = i;
  }
  if (deg < 0 || deg % 2 != 0) return false;
  if (deg == 0) return true;
  return mod_floor(cs[1] * cs[1] - 4 * cs[2] * cs[0], p) == 0;
}
}  // namespace detail

// The congruence half of sufficient ramification: f(x,1) (a-side) or f(1,y)
// (d-side) is a unit times a square mod p. Exposed separately because the
// mass formulas key on p | a rather than p | a_k.
inline bool ram_congruence(const binary_cubic& f, const Int& p, ram_side side) {
  if (side == ram_side::a_side) return detail::unit_times_square_mod_p({f.d, f.c, f.b, f.a}, p);
  return detail::unit_times_square_mod_p({f.a, f.b, f.c, f.d}, p);
}

// Sufficiently-ramified in the sense of the family: requires p to divide the
// squarefree part of the fixed outer coefficient, else false.
inline bool is_suff_ramified(const binary_cubic& f, const Int& p, ram_side side) {
  const Int& outer = side == ram_side::a_side ? f.a : f.d;
  if (outer == 0) return false;
  if (mod_floor(squarefree_split(outer).k, p) != 0) return false;
  return ram_congruence(f, p, side);
}

// kappa_p of a p-integral ternary form: 0 when the reduced conic is smooth,
// +1 / -1 when it is two distinct lines rational / conjugate over F_{p^2}.
inline int kappa_p(const ternary_form& A, std::int64_t p) {
  if (p == 2) {
    // form coefficients mod 2; factor the conic into lines over F_4 by brute
    // force, since the odd-p rank argument needs 1/2
    std::array<int, 6> q;  // x^2, y^2, z^2, xy, xz, yz
    const int I[6] = {0, 1, 2, 0, 0, 1}, J[6] = {0, 1, 2, 1, 2, 2};
    for (int t = 0; t < 6; ++t) {
      Rat cf = A.coeff(I[t], J[t]);
      if (denominator(cf) % 2 == 0) throw error(errc::bad_argument, "form not 2-integral");
      q[static_cast<size_t>(t)] = static_cast<int>(to_i64(mod_floor(numerator(cf), Int(2))));
    }
    if (q[0] + q[1] + q[2] + q[3] + q[4] + q[5] == 0)
      throw error(errc::unsupported_reduction, "reduction vanishes mod 2");
    // F_4 = {0,1,w,w+1} with w^2 = w+1, packed in 2 bits
    auto f4mul = [](int x, int y) {
      int a0 = x & 1, a1 = x >> 1, b0 = y & 1, b1 = y >> 1;
      return ((a0 & b0) ^ (a1 & b1)) | ((((a0 & b1) ^ (a1 & b0) ^ (a1 & b1))) << 1);
    };
    std::vector<std::array<int, 3>> lines;  // projective, first nonzero coordinate = 1
    for (int u = 0; u < 4; ++u)
      for (int v = 0; v < 4; ++v)
        for (int w = 0; w < 4; ++w) {
          if (u + v + w == 0) continue;
          if ((u ? u : (v ? v : w)) != 1) continue;
          lines.push_back({u, v, w});
        }
    for (size_t i = 0; i < lines.size(); ++i)
      for (size_t j = i; j < lines.size(); ++j) {
        const auto& L = lines[i];
        const auto& M = lines[j];
        int prod[6] = {f4mul(L[0], M[0]), f4mul(L[1], M[1]), f4mul(L[2], M[2]),
                       f4mul(L[0], M[1]) ^ f4mul(L[1], M[0]), f4mul(L[0], M[2]) ^ f4mul(L[2], M[0]),
                       f4mul(L[1], M[2]) ^ f4mul(L[2], M[1])};
        // the normalized product can differ from Q by an F_4 scalar
        bool match = false;
        for (int c = 1; c < 4 && !match; ++c) {
          bool ok = true;
          for (int t = 0; t < 6 && ok; ++t) ok = prod[t] == f4mul(c, q[static_cast<size_t>(t)]);
          match = ok;
        }
        if (!match) continue;
        if (i == j) throw error(errc::unsupported_reduction, "reduction is a double line");
        // the unordered pair is Frobenius-stable, so the lines are either both
        // rational or conjugate
        bool rat_i = L[0] < 2 && L[1] < 2 && L[2] < 2;
        bool rat_j = M[0] < 2 && M[1] < 2 && M[2] < 2;
        return rat_i && rat_j ? +1 : -1;
      }
    return 0;  // no factorization into lines: smooth conic
  }
  // odd p: reduce the Gram matrix mod p; rank 3 is the smooth case, rank 2 is
  // a pair of distinct lines, rational iff the nondegenerate binary part has
  // square negated determinant
  std::array<std::array<std::int64_t, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Rat& e = A.g[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (mod_floor(denominator(e), Int(p)) == 0) throw error(errc::bad_argument, "form not p-integral");
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          modp::mulm(modp::norm(numerator(e), p), modp::invm(modp::norm(denominator(e), p), p), p);
    }
  auto M = [&](int i, int j) { return m[static_cast<size_t>(i)][static_cast<size_t>(j)]; };
  std::int64_t det3 =
      mod_floor64(M(0, 0) * (modp::mulm(M(1, 1), M(2, 2), p) - modp::mulm(M(1, 2), M(2, 1), p)) -
                      M(0, 1) * (modp::mulm(M(1, 0), M(2, 2), p) - modp::mulm(M(1, 2), M(2, 0), p)) +
                      M(0, 2) * (modp::mulm(M(1, 0), M(2, 1), p) - modp::mulm(M(1, 1), M(2, 0), p)),
                  p);
  if (det3 != 0) return 0;
  // for symmetric matrices over odd characteristic the rank is witnessed by a
  // principal minor
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      std::int64_t det2 = mod_floor64(modp::mulm(M(i, i), M(j, j), p) - modp::mulm(M(i, j), M(i, j), p), p);
      if (det2 == 0) continue;
      std::int64_t t = mod_floor64(-det2, p);
      return modp::powm(t, (p - 1) / 2, p) == 1 ? +1 : -1;
    }
  throw error(errc::unsupported_reduction, "reduction has rank <= 1");
}

// cube character: 1 if u is a nonzero cube in F_p, else 0
inline int chi_p(const Int& u, std::int64_t p) {
  std::int64_t t = modp::norm(u, p);
  if (t == 0) return 0;
  if (p % 3 != 1) return 1;  // every unit is a cube
  return modp::powm(t, (p - 1) / 3, p) == 1 ? 1 : 0;
}

// number of cube roots of -d/a in F_p (both a, d prime to p)
inline int cube_root_count(std::int64_t p, const Int& a, const Int& d) {
  if (p % 3 != 1) return 1;
  // -1 is always a cube; d/a is a cube iff d a^2 is
  return 3 * chi_p(d * a * a, p);
}

// p-adic density of maximal forms in U_{a,d}(Z_p), keyed on the valuations of
// a and d. For p coprime to ad the density is 1 - p^-2 + p^-3 outright: each
// mod-p class with a repeated root loses exactly p of its p^2 lifts, so the
// count never sees the cube character. (The printed closed form splits off a
// p = 1 mod 3 branch that the exhaustive oracle refutes.)
inline Rat maximal_density(std::int64_t p, const Int& a, const Int& d) {
  if (a == 0 || d == 0) throw error(errc::bad_argument, "maximal_density: ad = 0");
  Int P(p);
  int va = std::min(valuation(a, P), 2), vd = std::min(valuation(d, P), 2);
  Int p2 = P * P, p3 = p2 * P;
  if (va > vd) std::swap(va, vd);
  if (va == 0 && vd == 0) return 1 - rat(1, p2) + rat(1, p3);
  if (va == 0 && vd == 1) return 1 - rat(1, p2) + rat(1, p3);
  if (va == 0 && vd == 2) return rat(P - 1, P) * rat(p2 - 1, p2);
  if (va == 1 && vd == 1) return 1 - rat(1, p2);
  if (va == 1 && vd == 2) return rat(P - 1, P);
  return rat(P - 1, P) * rat(P - 1, P);
}

// Density of a-side ramification-congruent forms among maximal ones, keyed on
// the valuations (nu_p(a), nu_p(d)). The nu_a >= 2 row is 1/(p+1), the value
// forced by the splitting-type counts and the exhaustive oracle.
inline Rat ram_density(std::int64_t p, const Int& a, const Int& d, ram_side side) {
  if (a == 0 || d == 0) throw error(errc::bad_argument, "ram_density: ad = 0");
  Int P(p);
  int va = std::min(valuation(a, P), 2), vd = std::min(valuation(d, P), 2);
  if (side == ram_side::d_side) std::swap(va, vd);
  if (va == 1 && vd == 0) return rat(P * P - P + 1, P * P * P - P + 1);
  if (va == 2 && vd == 0) return rat(1, P + 1);
  if (va == 1 && vd == 1) return rat(1, P + 1);
  if (va == 2 && vd == 1) return rat(1, P);
  return Rat(0);
}

// Closed-form splitting histogram for maximal forms in U_{a,d}(Z/p^2 Z),
// i.e. the three case tables, with the (1^3) entry carrying the cube-root
// count n3 in the unramified case.
inline std::map<splitting_type, Int> expected_histogram(std::int64_t p, const Int& a, const Int& d) {
  Int P(p);
  int va = valuation(a, P), vd = valuation(d, P);
  std::map<splitting_type, Int> h;
  Int p2 = P * P, p3 = p2 * P;
  if (va == 0 && vd == 0) {
    Int n3(cube_root_count(p, a, d));
    h[splitting_type::t111] = p2 * ((P - 1) * (P - 4) + 2 * n3) / 6;
    h[splitting_type::t12] = p3 * (P - 1) / 2;
    h[splitting_type::t3] = p2 * (p2 + P + 1 - n3) / 3;
    h[splitting_type::t11sq] = P * (P - 1) * (P - 1 - n3);
    h[splitting_type::t1cube] = P * (P - 1) * n3;
  } else if (vd == 0 || va == 0) {
    // p divides exactly one outer coefficient; the double root at (1,0) (resp.
    // (0,1)) comes from the a (resp. d) side, while the generic affine double
    // is always of type (11^2)
    bool pa = vd == 0;
    int v = pa ? va : vd;
    h[splitting_type::t111] = p2 * (P - 1) * (P - 2) / 2;
    h[splitting_type::t12] = p3 * (P - 1) / 2;
    h[pa ? splitting_type::t1sq1 : splitting_type::t11sq] = v == 1 ? p2 * (P - 1) : Int(0);
    h[splitting_type::t11sq] += P * (P - 1) * (P - 1);
    h[splitting_type::t1cube] = v == 1 ? p2 : Int(0);
  } else {
    h[splitting_type::t111] = p2 * (P - 1) * (P - 1);
    h[splitting_type::t1sq1] = va == 1 ? p2 * (P - 1) : Int(0);
    h[splitting_type::t11sq] = vd == 1 ? p2 * (P - 1) : Int(0);
  }
  for (auto it = h.begin(); it != h.end();) {
    if (it->second == 0) it = h.erase(it);
    else ++it;
  }
  return h;
}

struct local_density_report {
  std::int64_t p = 0;
  Rat maximal;       // density of maximal forms among all (b,c) mod p^2
  Rat aside_ram;     // a-side ramification congruence among maximal
  Rat dside_ram;
  std::map<splitting_type, Int> histogram;  // maximal forms by splitting type
  Int n_maximal;
};

// Exhaustive enumeration of (b,c) mod p^2 with fixed outer coefficients:
// Dedekind's criterion, splitting type and the two ramification congruences
// for every class. Ground truth for the closed forms above.
inline local_density_report density_oracle(std::int64_t p, const Int& a, const Int& d,
                                           std::int64_t p_bound = 13) {
  if (p > p_bound) throw error(errc::oracle_bound, "density oracle: p exceeds bound");
  if (a == 0 || d == 0) throw error(errc::bad_argument, "density oracle: ad = 0");
  Int p2 = Int(p) * p;
  local_density_report rep;
  rep.p = p;
  Int n_max = 0, n_aside = 0, n_dside = 0;
  for (Int b = 0; b < p2; ++b)
    for (Int c = 0; c < p2; ++c) {
      binary_cubic f{mod_floor(a, p2), b, c, mod_floor(d, p2)};
      // Dedekind mod p^2 directly (disc may vanish on a residue class lift;
      // the criterion only looks at f mod p^2)
      bool maximal = [&] {
        Int ra = mod_floor(f.a, Int(p)), rb = mod_floor(f.b, Int(p)), rc = mod_floor(f.c, Int(p)),
            rd = mod_floor(f.d, Int(p));
        if (ra == 0 && rb == 0 && rc == 0 && rd == 0) return false;
        if (ra == 0 && mod_floor(f.a, p2) == 0 && rb == 0) return false;
        for (std::int64_t r = 0; r < p; ++r) {
          if (mod_floor(f.eval(r, 1), Int(p)) != 0) continue;
          if (mod_floor(f.eval(r, 1), p2) == 0 && mod_floor(f.deriv_x(r, 1), Int(p)) == 0) return false;
        }
        return true;
      }();
      if (!maximal) continue;
      ++n_max;
      ++rep.histogram[splitting_type_mod_p(f, p)];
      if (ram_congruence(f, Int(p), ram_side::a_side)) ++n_aside;
      if (ram_congruence(f, Int(p), ram_side::d_side)) ++n_dside;
    }
  rep.n_maximal = n_max;
  rep.maximal = rat(n_max, p2 * p2);
  rep.aside_ram = n_max == 0 ? Rat(0) : rat(n_aside, n_max);
  rep.dside_ram = n_max == 0 ? Rat(0) : rat(n_dside, n_max);
  return rep;
}

// Mass_p^{e1,e2}(f) for maximal f, dispatched on divisibility of the outer
// coefficients and the ramification congruences. a-side ramification forces
// e1 = +1, d-side forces e2 = +1; every mass row sums to 1.
inline Rat local_mass(const binary_cubic& f, std::int64_t p, int e1, int e2) {
  if (!is_maximal_at(f, Int(p))) throw error(errc::not_maximal, "local_mass: f not maximal at p");
  bool pa = mod_floor(f.a, Int(p)) == 0, pd = mod_floor(f.d, Int(p)) == 0;
  bool ra = pa && ram_congruence(f, Int(p), ram_side::a_side);
  bool rd = pd && ram_congruence(f, Int(p), ram_side::d_side);
  auto pm = [](int e) { return e == 1 || e == -1; };
  if (!pa && !pd) return e1 == 0 && e2 == 0 ? Rat(1) : Rat(0);
  if (pa && !pd) {
    if (e2 != 0 || !pm(e1)) return 0;
    if (ra) return e1 == 1 ? Rat(1) : Rat(0);
    return rat(1, 2);
  }
  if (!pa && pd) {
    if (e1 != 0 || !pm(e2)) return 0;
    if (rd) return e2 == 1 ? Rat(1) : Rat(0);
    return rat(1, 2);
  }
  if (!pm(e1) || !pm(e2)) return 0;
  if (ra) return e1 == 1 ? rat(1, 2) : Rat(0);
  if (rd) return e2 == 1 ? rat(1, 2) : Rat(0);
  return rat(1, 4);
}

// The averaged factor at p of the mass sum over a maximal family: the
// Sigma_p-average of Mass_p^{e1,e2}.
inline Rat averaged_mass_factor(std::int64_t p, const Int& a, const Int& d, int e1, int e2) {
  bool pa = mod_floor(a, Int(p)) == 0, pd = mod_floor(d, Int(p)) == 0;
  if (!pa && !pd) return 1;
  if (pa && !pd) return rat(1, 2) + e1 * ram_density(p, a, d, ram_side::a_side) / 2;
  if (!pa && pd) return rat(1, 2) + e2 * ram_density(p, a, d, ram_side::d_side) / 2;
  return rat(1, 4) + e1 * ram_density(p, a, d, ram_side::a_side) / 4 +
         e2 * ram_density(p, a, d, ram_side::d_side) / 4;
}

}  // namespace cubix
