#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cubix/local.hpp"
#include "cubix/orbits.hpp"

namespace cubix {

enum class local_condition { maximal, explicit_residues };

// A thin family: fixed outer coefficients, a discriminant sign, and local
// conditions (all-maximal by default; at most finitely many primes may carry
// anything else, which is what makes the family acceptable).
struct family_spec {
  Int a = 1, d = 1;
  int sign = +1;  // +1: positive discriminant, -1: negative
  std::map<Int, local_condition> local_conditions;
  bool selmer_sigma2 = false;  // impose f = x^3 + x^2 y + y^3 mod 8

  bool all_maximal() const {
    for (auto& [p, c] : local_conditions)
      if (c != local_condition::maximal) return false;
    return true;
  }
};

inline int chi(const Int& a, const Int& d) {
  if (a == 0 || d == 0) throw error(errc::bad_argument, "chi: ad = 0");
  return igcd(iabs(squarefree_split(a).k), iabs(squarefree_split(d).k)) == 1 ? 1 : 0;
}

// rho = prod over p | a_k of the a-side density, lambda the mirror product;
// empty products are 1.
inline std::pair<Rat, Rat> family_rho_lambda(const family_spec& spec) {
  if (!spec.all_maximal())
    throw error(errc::unsupported_family, "rho/lambda only defined for all-maximal conditions");
  Rat rho = 1, lambda = 1;
  for (const Int& p : prime_divisors(squarefree_split(spec.a).k))
    rho *= ram_density(to_i64(p), spec.a, spec.d, ram_side::a_side);
  for (const Int& p : prime_divisors(squarefree_split(spec.d).k))
    lambda *= ram_density(to_i64(p), spec.a, spec.d, ram_side::d_side);
  return {rho, lambda};
}

// The 2-adic factor of the Delta-distinguished density. The 8|d (resp. 8|a)
// entry is 1/12: the exhaustive mod-8 oracle puts two fully-maximal admissible
// classes over a 2-maximal density of 3/8, which pins (2/64)/(3/8).
inline Rat delta2_factor(const Int& a, const Int& d) {
  auto as = squarefree_split(a), ds = squarefree_split(d);
  bool ak2 = as.k % 2 == 0, dk2 = ds.k % 2 == 0;
  bool am2 = as.m % 2 == 0, dm2 = ds.m % 2 == 0;
  if (!ak2 && !dk2) {
    if (!am2 && !dm2) return rat(3, 14);
    if (am2 && dm2) return rat(1, 4);
    return rat(1, 6);
  }
  if (dk2 && !ak2) {
    if (mod_floor(a, 2) != 0 && !dm2) return rat(3, 28);
    if (mod_floor(a, 2) != 0 && mod_floor(d, 8) == 0) return rat(1, 12);
    return Rat(0);
  }
  if (ak2 && !dk2) {
    if (mod_floor(d, 2) != 0 && !am2) return rat(3, 28);
    if (mod_floor(d, 2) != 0 && mod_floor(a, 8) == 0) return rat(1, 12);
    return Rat(0);
  }
  return Rat(0);
}

// density of forms in the maximal family over which the Delta-distinguished
// orbit has an integral representative in W(Z)
inline Rat delta_sigma(const family_spec& spec) {
  if (!spec.all_maximal() || spec.selmer_sigma2)
    throw error(errc::unsupported_family, "delta_sigma needs the all-maximal family");
  if (chi(spec.a, spec.d) == 0) return 0;
  Rat v = delta2_factor(spec.a, spec.d);
  for (const Int& p : prime_divisors(squarefree_split(spec.a).k))
    if (p > 2) v *= ram_density(to_i64(p), spec.a, spec.d, ram_side::a_side);
  for (const Int& p : prime_divisors(squarefree_split(spec.d).k))
    if (p > 2) v *= ram_density(to_i64(p), spec.a, spec.d, ram_side::d_side);
  return v;
}

enum class average_kind { cl2_real, cl2_complex, sel2_real_pos, sel2_real_neg, sel2_complex };

struct average_report {
  Rat rho, lambda, delta;
  int chi_val = 0;
  Rat bound;
  average_kind kind = average_kind::cl2_real;
  std::optional<double> pi_estimate;
  std::optional<std::uint64_t> pi_seed;
  // every value is an upper bound, conjecturally the exact average
  static constexpr const char* label = "bound (conjecturally exact)";
};

// Average 2-torsion bound for the class groups over the family:
//   5/4 + (rho + lambda + chi rho lambda)/4          (positive discriminant)
//   3/2 + (rho + lambda + chi rho lambda)/2 + delta  (negative discriminant)
inline average_report avg_cl2_bound(const family_spec& spec) {
  auto [rho, lambda] = family_rho_lambda(spec);
  int x = chi(spec.a, spec.d);
  Rat mix = rho + lambda + x * rho * lambda;
  average_report rep;
  rep.rho = rho;
  rep.lambda = lambda;
  rep.chi_val = x;
  if (spec.sign > 0) {
    rep.delta = 0;
    rep.kind = average_kind::cl2_real;
    rep.bound = rat(5, 4) + mix / 4;
  } else {
    rep.delta = delta_sigma(spec);
    rep.kind = average_kind::cl2_complex;
    rep.bound = rat(3, 2) + mix / 2 + rep.delta;
  }
  return rep;
}

enum class cubic_family { full, monogenised, unit_monogenised };

// The three closed forms of the comparison table, at signature (r1, r2).
inline Rat table1_formula(cubic_family fam, int r1, int r2) {
  if (!((r1 == 3 && r2 == 0) || (r1 == 1 && r2 == 1)))
    throw error(errc::bad_argument, "table1: signature must be (3,0) or (1,1)");
  Int denom = Int(1) << (r1 + r2 - 1);
  switch (fam) {
    case cubic_family::full: return 1 + rat(1, denom);
    case cubic_family::monogenised: return 1 + rat(2, denom);
    case cubic_family::unit_monogenised: return 1 + rat(4, denom) + rat(3 * r2, 14);
  }
  throw error(errc::bad_argument, "table1: unknown family");
}

// ---------------------------------------------------------------------------
// real volumes and the Pi_d estimator

namespace detail {

// real roots of a cubic with nonzero leading coefficient, ascending
inline std::vector<double> cubic_roots(double a3, double a2, double a1, double a0) {
  double b = a2 / a3, c = a1 / a3, d = a0 / a3;
  double p = c - b * b / 3.0;
  double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  double shift = -b / 3.0;
  std::vector<double> out;
  double disc = -4.0 * p * p * p - 27.0 * q * q;
  if (disc > 0) {
    double m = 2.0 * std::sqrt(-p / 3.0);
    double theta = std::acos(std::clamp(3.0 * q / (p * m), -1.0, 1.0)) / 3.0;
    for (int k = 0; k < 3; ++k) out.push_back(shift + m * std::cos(theta - 2.0 * M_PI * k / 3.0));
  } else {
    double u;
    if (p == 0 && q == 0) {
      out.push_back(shift);
      std::sort(out.begin(), out.end());
      return out;
    }
    double h = std::sqrt(std::max(0.0, q * q / 4.0 + p * p * p / 27.0));
    u = std::cbrt(-q / 2.0 + h) + std::cbrt(-q / 2.0 - h);
    out.push_back(shift + u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// length of {c in [-C, C] : sign(disc(b, c)) = sgn} for fixed real b
inline double disc_sign_measure(double a, double d, double b, double C, int sgn) {
  // Disc as a cubic in c: -4a c^3 + b^2 c^2 + 18abd c + (-4 b^3 d - 27 a^2 d^2)
  double c3 = -4.0 * a, c2 = b * b, c1 = 18.0 * a * b * d, c0 = -4.0 * b * b * b * d - 27.0 * a * a * d * d;
  auto val = [&](double c) { return ((c3 * c + c2) * c + c1) * c + c0; };
  std::vector<double> cuts{-C};
  for (double r : cubic_roots(c3, c2, c1, c0))
    if (r > -C && r < C) cuts.push_back(r);
  cuts.push_back(C);
  double total = 0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double mid = (cuts[i] + cuts[i + 1]) / 2;
    double v = val(mid);
    if ((sgn > 0 && v > 0) || (sgn < 0 && v < 0)) total += cuts[i + 1] - cuts[i];
  }
  return total;
}

inline double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                               double fl, double fm, double fh, double tol, int depth) {
  double mid = (lo + hi) / 2;
  double lm = (lo + mid) / 2, rm = (mid + hi) / 2;
  double flm = f(lm), frm = f(rm);
  double whole = (hi - lo) / 6.0 * (fl + 4 * fm + fh);
  double left = (mid - lo) / 6.0 * (fl + 4 * flm + fm);
  double right = (hi - mid) / 6.0 * (fm + 4 * frm + fh);
  if (depth <= 0 || std::abs(left + right - whole) < 15 * tol) return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, lo, mid, fl, flm, fm, tol / 2, depth - 1) +
         adaptive_simpson(f, mid, hi, fm, frm, fh, tol / 2, depth - 1);
}

}  // namespace detail

// Area of the height-X region, optionally cut by the discriminant sign.
// Without the sign cut the box areas are exact: 4X^2 (balanced), 4X^3
// (weighted). With the cut, adaptive quadrature on the per-b measure of the
// admissible c-interval, to ~1e-6 relative accuracy.
inline double region_volume(const family_spec& spec, double X, height_kind kind,
                            bool sign_constrained = true) {
  if (X <= 0) throw error(errc::bad_argument, "region_volume: X must be positive");
  double C = kind == height_kind::balanced ? X : X * X;
  if (!sign_constrained) return 4.0 * X * C;
  double a = static_cast<double>(spec.a), d = static_cast<double>(spec.d);
  auto f = [&](double b) { return detail::disc_sign_measure(a, d, b, C, spec.sign); };
  double fl = f(-X), fm = f(0), fh = f(X);
  double total = detail::adaptive_simpson(f, -X, 0, fl, f(-X / 2), fm, 1e-7 * 4 * X * C, 28) +
                 detail::adaptive_simpson(f, 0, X, fm, f(X / 2), fh, 1e-7 * 4 * X * C, 28);
  return total;
}

struct pi_estimate_result {
  double value = 1.0;        // estimate at the largest ladder rung
  double diagnostic = 0.0;   // max successive difference across the ladder
  std::uint64_t seed = 0;
  std::vector<std::pair<double, double>> ladder;  // (X, estimate)
};

// Pi_{d,H}: asymptotic proportion of the positive-discriminant height region
// where r2 > 0 or r3 < 0. Identically 1 for d > 0 (the root product -d < 0
// forces either one or three negative roots). For d < 0 a seeded Monte Carlo
// over the height box; the root-sign condition is exact via Descartes (all
// roots are real on disc > 0).
inline pi_estimate_result pi_d_estimate(const Int& d, height_kind kind,
                                        std::vector<double> ladder = {100, 1000, 10000},
                                        std::size_t samples = 1000000, std::uint64_t seed = 20240001) {
  if (d == 0) throw error(errc::bad_argument, "pi_d_estimate: d = 0");
  pi_estimate_result out;
  out.seed = seed;
  if (d > 0) {
    for (double X : ladder) out.ladder.emplace_back(X, 1.0);
    return out;
  }
  double dd = static_cast<double>(d);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double prev = -1;
  for (double X : ladder) {
    double C = kind == height_kind::balanced ? X : X * X;
    std::size_t n_pos = 0, n_cond = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      double b = unit(rng) * X, c = unit(rng) * C;
      double disc = 18.0 * b * c * dd - 4.0 * b * b * b * dd + b * b * c * c - 4.0 * c * c * c -
                    27.0 * dd * dd;
      if (disc <= 0) continue;
      ++n_pos;
      // positive-root count = sign variations of (1, b, c, d)
      int var = 0;
      double lastv = 1;
      for (double t : {b, c, dd}) {
        if (t == 0) continue;
        if ((t > 0) != (lastv > 0)) ++var;
        lastv = t;
      }
      if (var != 1) ++n_cond;  // r2 > 0 or r3 < 0 fails exactly when one root is positive
    }
    if (n_pos == 0) throw error(errc::empty_region, "pi_d_estimate: no positive-discriminant samples");
    double est = static_cast<double>(n_cond) / static_cast<double>(n_pos);
    if (prev >= 0) out.diagnostic = std::max(out.diagnostic, std::abs(est - prev));
    prev = est;
    out.ladder.emplace_back(X, est);
    out.value = est;
  }
  return out;
}

// Selmer average bound for the fixed-Sigma_2 family over U_{1,d}:
//   3 + 3 lambda            (d > 0, either sign; also negative discriminant)
//   3 + 2 Pi_{d,H} lambda   (d < 0, positive discriminant)
inline average_report avg_sel2_bound(const family_spec& spec, height_kind kind,
                                     std::size_t pi_samples = 200000) {
  if (spec.a != 1 || !spec.selmer_sigma2 || mod_floor(spec.d, 8) != 1)
    throw error(errc::unsupported_family, "sel2 bound needs a = 1, d = 1 mod 8, the fixed Sigma_2");
  Rat lambda = 1;
  for (const Int& p : prime_divisors(squarefree_split(spec.d).k))
    if (p > 2) lambda *= ram_density(to_i64(p), spec.a, spec.d, ram_side::d_side);
  average_report rep;
  rep.rho = 0;
  rep.lambda = lambda;
  rep.chi_val = chi(spec.a, spec.d);
  rep.delta = 0;
  if (spec.sign < 0) {
    rep.kind = average_kind::sel2_complex;
    rep.bound = 3 + 3 * lambda;
  } else if (spec.d > 0) {
    rep.kind = average_kind::sel2_real_pos;
    rep.bound = 3 + 3 * lambda;
  } else {
    rep.kind = average_kind::sel2_real_neg;
    auto pi = pi_d_estimate(spec.d, kind, {100, 1000}, pi_samples);
    rep.pi_estimate = pi.value;
    rep.pi_seed = pi.seed;
    // rendered numerically; the exact part of the bound is 3 + 2 pi lambda
    rep.bound = 3 + 2 * Rat(Int(std::llround(pi.value * 1000000)), 1000000) * lambda;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// the 5x5 grid

struct table2_entry {
  int a = 0, d = 0;
  Rat real_bound, complex_bound;
  std::string real_str, complex_str;
  std::string printed_real, printed_complex;   // the published reference values
  bool real_discrepancy = false, complex_discrepancy = false;
};

// The published theoretical grid, indexed (a-1)*5 + (d-1). Five real cells
// ((2,5),(5,2),(3,5),(5,3),(5,5)) disagree with the closed forms; the grid
// reports the formula value and flags these.
inline const std::array<std::pair<const char*, const char*>, 25>& table2_printed() {
  static const std::array<std::pair<const char*, const char*>, 25> tab{{
      {"2.000", "3.214"}, {"1.714", "2.536"}, {"1.640", "2.340"}, {"2.000", "3.167"}, {"1.587", "2.211"},
      {"1.714", "2.536"}, {"1.417", "1.833"}, {"1.457", "1.944"}, {"1.500", "2.000"}, {"1.388", "1.857"},
      {"1.640", "2.340"}, {"1.457", "1.944"}, {"1.375", "1.750"}, {"1.640", "2.327"}, {"1.372", "1.761"},
      {"2.000", "3.167"}, {"1.500", "2.000"}, {"1.640", "2.327"}, {"2.000", "3.250"}, {"1.587", "2.202"},
      {"1.587", "2.211"}, {"1.388", "1.857"}, {"1.372", "1.761"}, {"1.587", "2.202"}, {"1.354", "1.667"},
  }};
  return tab;
}

inline std::vector<table2_entry> table2_grid() {
  std::vector<table2_entry> out;
  for (int a = 1; a <= 5; ++a)
    for (int d = 1; d <= 5; ++d) {
      family_spec sp;
      sp.a = a;
      sp.d = d;
      sp.sign = +1;
      table2_entry e;
      e.a = a;
      e.d = d;
      e.real_bound = avg_cl2_bound(sp).bound;
      sp.sign = -1;
      e.complex_bound = avg_cl2_bound(sp).bound;
      e.real_str = render3(e.real_bound);
      e.complex_str = render3(e.complex_bound);
      auto [pr, pc] = table2_printed()[static_cast<size_t>((a - 1) * 5 + (d - 1))];
      e.printed_real = pr;
      e.printed_complex = pc;
      e.real_discrepancy = e.real_str != e.printed_real;
      e.complex_discrepancy = e.complex_str != e.printed_complex;
      out.push_back(std::move(e));
    }
  return out;
}

// ---------------------------------------------------------------------------
// the product identity behind the mass simplification

// sum over sign vectors with product c of prod (X_i + eps_i Y_i)
//   = 2^(#T - 1) (prod X_i + c prod Y_i),
// verified exactly at random rational points.
inline bool hanke_identity_check(int t_size, int trials, std::uint64_t seed = 7) {
  if (t_size < 1 || t_size > 6) throw error(errc::bad_argument, "hanke check: 1 <= T <= 6");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  for (int tr = 0; tr < trials; ++tr) {
    std::vector<Rat> X(static_cast<size_t>(t_size)), Y(static_cast<size_t>(t_size));
    for (int i = 0; i < t_size; ++i) {
      X[static_cast<size_t>(i)] = rat(num(rng), den(rng));
      Y[static_cast<size_t>(i)] = rat(num(rng), den(rng));
    }
    for (int c : {1, -1}) {
      Rat lhs = 0;
      for (int mask = 0; mask < (1 << t_size); ++mask) {
        int parity = 1;
        for (int i = 0; i < t_size; ++i)
          if (mask & (1 << i)) parity = -parity;
        if (parity != c) continue;
        Rat term = 1;
        for (int i = 0; i < t_size; ++i)
          term *= X[static_cast<size_t>(i)] + (mask & (1 << i) ? -1 : 1) * Y[static_cast<size_t>(i)];
        lhs += term;
      }
      Rat px = 1, py = 1;
      for (int i = 0; i < t_size; ++i) {
        px *= X[static_cast<size_t>(i)];
        py *= Y[static_cast<size_t>(i)];
      }
      Rat rhs = Rat(Int(1) << (t_size - 1)) * (px + c * py);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace cubix
