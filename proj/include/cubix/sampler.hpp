#pragma once

#include <bitset>
#include <cstdint>
#include <vector>

#include "cubix/averages.hpp"
#include "cubix/local.hpp"
#include "cubix/orbits.hpp"
#include "cubix/parallel.hpp"

namespace cubix {

namespace detail {

// primes to 2*10^4 with multiplicative divisibility constants: for odd p,
// p | x  iff  x * p^{-1} (mod 2^64) <= (2^64 - 1) / p
struct prime_screen {
  std::vector<std::uint64_t> p, pinv, plim;
  prime_screen() {
    for (std::int64_t q : primes_up_to(20000)) {
      if (q == 2) continue;
      std::uint64_t inv = 1, pp = static_cast<std::uint64_t>(q);
      for (int i = 0; i < 6; ++i) inv *= 2 - pp * inv;  // Newton inverse mod 2^64
      p.push_back(pp);
      pinv.push_back(inv);
      plim.push_back(~0ull / pp);
    }
  }
};

inline const prime_screen& screen() {
  static const prime_screen s;
  return s;
}

// primes p with p^2 | n, for 0 < n < ~2.6e13 (then any cofactor surviving
// trial division to 2*10^4 has at most two prime factors, so it contributes a
// square prime only when it is a perfect square)
inline void square_support(std::uint64_t n, std::vector<std::int64_t>& out) {
  out.clear();
  if (n % 4 == 0) out.push_back(2);
  while (n % 2 == 0) n /= 2;
  const prime_screen& s = screen();
  for (size_t i = 0; i < s.p.size() && s.p[i] * s.p[i] <= n; ++i) {
    if (n * s.pinv[i] > s.plim[i]) continue;
    n /= s.p[i];
    if (n * s.pinv[i] <= s.plim[i]) {
      out.push_back(static_cast<std::int64_t>(s.p[i]));
      do n /= s.p[i];
      while (n * s.pinv[i] <= s.plim[i]);
    }
  }
  if (n > 1) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    for (std::uint64_t t = r > 1 ? r - 1 : 1; t <= r + 1; ++t)
      if (t * t == n) {
        out.push_back(static_cast<std::int64_t>(t));
        return;
      }
  }
}

inline bool dedekind_maximal64(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                               std::int64_t p) {
  const std::int64_t p2 = p * p;
  if (mod_floor64(a, p) == 0 && mod_floor64(b, p) == 0 && mod_floor64(c, p) == 0 &&
      mod_floor64(d, p) == 0)
    return false;
  if (mod_floor64(a, p2) == 0 && mod_floor64(b, p) == 0) return false;
  if (p <= 512) {
    // |coefficients| < 2^32 and r < 512 keep the raw values inside int64
    for (std::int64_t r = 0; r < p; ++r) {
      std::int64_t fr = ((a * r + b) * r + c) * r + d;
      if (mod_floor64(fr, p) != 0) continue;
      std::int64_t fpr = (3 * a * r + 2 * b) * r + c;
      if (mod_floor64(fr, p2) == 0 && mod_floor64(fpr, p) == 0) return false;
    }
    return true;
  }
  return is_maximal_at(binary_cubic{a, b, c, d}, Int(p));
}

}  // namespace detail

struct family_sample_stats {
  std::int64_t n_box = 0;            // forms in the height box with disc != 0
  std::int64_t n_positive_disc = 0;  // of those, positive discriminant
  std::int64_t n_sign = 0;           // matching the family sign
  std::int64_t n_maximal = 0;        // maximal among the sign-matching forms
  std::int64_t n_aside_ram = 0;      // sufficiently ramified on the a side, among maximal
  std::int64_t n_dside_ram = 0;
  std::int64_t n_delta_dist = 0;     // Delta-distinguished integral (W), among maximal
  std::int64_t n_unresolved = 0;     // factorisation gave up (excluded with a warning)
};

struct family_sample {
  family_sample_stats stats;
  std::vector<binary_cubic> forms;  // empty when collection is off
  double X = 0;
  height_kind kind = height_kind::balanced;
};

// Exhaustive scan of the thin family in the height-X box: discriminant sign,
// maximality at every prime with p^2 | disc, ramification and the integral
// Delta-distinguished criterion. Exact throughout; parallel over b-stripes
// with an ordered merge.
inline family_sample enumerate_family(const family_spec& spec, double X, height_kind kind,
                                      bool collect_forms = false) {
  if (!spec.all_maximal())
    throw error(errc::unsupported_family, "enumerate_family: only all-maximal conditions supported");
  const std::int64_t a = to_i64(spec.a), d = to_i64(spec.d);
  auto strict_bound = [](double v) {
    std::int64_t f = static_cast<std::int64_t>(std::floor(v));
    return static_cast<double>(f) == v ? f - 1 : f;
  };
  const std::int64_t Bx = strict_bound(X);
  const std::int64_t Cx = kind == height_kind::balanced ? Bx : strict_bound(X * X);
  if (Bx < 0 || Cx < 0) return {};
  // box volume cap, plus a c-range cap that keeps 4|a| c^3 inside int64
  if ((2 * Bx + 1) > 200000000ll / (2 * Cx + 1) || Cx > 700000)
    throw error(errc::range_too_large, "enumerate_family: box too large");

  // family-level constants for the Delta-distinguished criterion
  auto as = squarefree_split(spec.a), ds = squarefree_split(spec.d);
  const std::int64_t ak = to_i64(iabs(as.k)), dk = to_i64(iabs(ds.k));
  const bool delta_gcd_ok =
      igcd(iabs(as.k), iabs(spec.d)) == 1 && igcd(iabs(spec.a), iabs(ds.k)) == 1;
  std::bitset<64> delta_allowed;  // (b mod 8, c mod 8), lifted from mod 4 when applicable
  if (delta_gcd_ok) {
    for (int br = 0; br < 8; ++br)
      for (int cr = 0; cr < 8; ++cr) {
        binary_cubic probe{spec.a, Int(br), Int(cr), spec.d};
        if (detail::delta_two_adic_ok(probe, as, ds))
          delta_allowed.set(static_cast<size_t>(br * 8 + cr));
      }
  }
  std::vector<std::int64_t> aside_primes, dside_primes;
  for (const Int& p : prime_divisors(as.k)) aside_primes.push_back(to_i64(p));
  for (const Int& p : prime_divisors(ds.k)) dside_primes.push_back(to_i64(p));

  struct acc_t {
    family_sample_stats st;
    std::vector<binary_cubic> forms;
  };
  auto work = [&](std::int64_t b_lo, std::int64_t b_hi, acc_t& acc) {
    std::vector<std::int64_t> sq;
    for (std::int64_t b = b_lo; b < b_hi; ++b) {
      for (std::int64_t c = -Cx; c <= Cx; ++c) {
        // disc in 64 bits: |b| < 2^20 and |c| < 2^32 keep every term far from
        // overflow at the desk scales enforced above
        const std::int64_t disc = 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c -
                                  4 * a * c * c * c - 27 * a * a * d * d;
        if (disc == 0) continue;
        ++acc.st.n_box;
        if (disc > 0) ++acc.st.n_positive_disc;
        if ((disc > 0) != (spec.sign > 0)) continue;
        ++acc.st.n_sign;
        detail::square_support(static_cast<std::uint64_t>(disc < 0 ? -disc : disc), sq);
        bool maximal = true;
        for (std::int64_t p : sq)
          if (!detail::dedekind_maximal64(a, b, c, d, p)) {
            maximal = false;
            break;
          }
        if (!maximal) continue;
        ++acc.st.n_maximal;
        binary_cubic f{Int(a), Int(b), Int(c), Int(d)};
        bool aside = false, dside = false;
        for (std::int64_t p : aside_primes)
          if (ram_congruence(f, Int(p), ram_side::a_side)) { aside = true; break; }
        for (std::int64_t p : dside_primes)
          if (ram_congruence(f, Int(p), ram_side::d_side)) { dside = true; break; }
        if (aside) ++acc.st.n_aside_ram;
        if (dside) ++acc.st.n_dside_ram;
        if (delta_gcd_ok && delta_allowed.test(static_cast<size_t>(mod_floor64(b, 8) * 8 + mod_floor64(c, 8)))) {
          bool cong = mod_floor64(b * b - 4 * a * c, dk) == 0 && mod_floor64(c * c - 4 * b * d, ak) == 0;
          if (cong) ++acc.st.n_delta_dist;
        }
        if (collect_forms) acc.forms.push_back(f);
      }
    }
  };
  auto accs = parallel_chunks<acc_t>(-Bx, Bx + 1, work);
  family_sample out;
  out.X = X;
  out.kind = kind;
  for (auto& acc : accs) {
    out.stats.n_box += acc.st.n_box;
    out.stats.n_positive_disc += acc.st.n_positive_disc;
    out.stats.n_sign += acc.st.n_sign;
    out.stats.n_maximal += acc.st.n_maximal;
    out.stats.n_aside_ram += acc.st.n_aside_ram;
    out.stats.n_dside_ram += acc.st.n_dside_ram;
    out.stats.n_delta_dist += acc.st.n_delta_dist;
    out.stats.n_unresolved += acc.st.n_unresolved;
    if (collect_forms)
      out.forms.insert(out.forms.end(), acc.forms.begin(), acc.forms.end());
  }
  return out;
}

// Fraction of maximal forms in the sample whose Delta-distinguished orbit has
// an integral representative in W(Z).
inline double empirical_delta_density(const family_spec& spec, double X, height_kind kind) {
  family_sample s = enumerate_family(spec, X, kind);
  if (s.stats.n_maximal == 0) throw error(errc::empty_region, "no maximal forms in the box");
  return static_cast<double>(s.stats.n_delta_dist) / static_cast<double>(s.stats.n_maximal);
}

// Truncated Euler product of the local maximal densities, the expected
// maximal fraction for comparison with samples (tail beyond the bound is
// O(1/(P log P))).
inline double expected_maximal_fraction(const Int& a, const Int& d, std::int64_t p_bound = 10000) {
  double prod = 1;
  for (std::int64_t p : primes_up_to(p_bound)) prod *= to_double(maximal_density(p, a, d));
  return prod;
}

}  // namespace cubix
