#pragma once

#include <utility>
#include <vector>

#include "cubix/numeric.hpp"

namespace cubix {

// Dense univariate polynomial over Q, coefficient i on x^i. Degrees in this
// artifact stay <= 4, so plain Euclidean arithmetic is fine.
struct poly {
  std::vector<Rat> c;

  poly() = default;
  explicit poly(std::vector<Rat> cs) : c(std::move(cs)) { trim(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  const Rat& lead() const { return c.back(); }

  Rat eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
  }

  poly deriv() const {
    if (c.size() <= 1) return poly{};
    std::vector<Rat> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * Int(i);
    return poly(std::move(d));
  }
};

inline poly operator*(const poly& a, const poly& b) {
  if (a.zero() || b.zero()) return {};
  std::vector<Rat> r(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return poly(std::move(r));
}

inline poly operator-(const poly& a, const poly& b) {
  std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return poly(std::move(r));
}

inline poly rem(poly a, const poly& b) {
  while (!a.zero() && a.deg() >= b.deg()) {
    Rat q = a.lead() / b.lead();
    int shift = a.deg() - b.deg();
    for (int i = 0; i <= b.deg(); ++i) a.c[static_cast<size_t>(i + shift)] -= q * b.c[static_cast<size_t>(i)];
    a.trim();
  }
  return a;
}

inline poly poly_gcd(poly a, poly b) {
  while (!b.zero()) {
    poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.zero()) {
    Rat l = a.lead();
    for (auto& x : a.c) x /= l;
  }
  return a;
}

inline poly squarefree_part(const poly& p) {
  if (p.deg() <= 0) return p;
  poly g = poly_gcd(p, p.deriv());
  if (g.deg() <= 0) return p;
  // exact division p / g
  poly q, r = p;
  std::vector<Rat> qc(static_cast<size_t>(p.deg() - g.deg()) + 1, Rat(0));
  while (!r.zero() && r.deg() >= g.deg()) {
    Rat f = r.lead() / g.lead();
    int shift = r.deg() - g.deg();
    qc[static_cast<size_t>(shift)] = f;
    for (int i = 0; i <= g.deg(); ++i) r.c[static_cast<size_t>(i + shift)] -= f * g.c[static_cast<size_t>(i)];
    r.trim();
  }
  return poly(std::move(qc));
}

inline std::vector<poly> sturm_chain(const poly& p) {
  std::vector<poly> s;
  s.push_back(p);
  s.push_back(p.deriv());
  while (!s.back().zero() && s.back().deg() >= 0) {
    poly r = rem(s[s.size() - 2], s.back());
    if (r.zero()) break;
    for (auto& x : r.c) x = -x;
    s.push_back(std::move(r));
  }
  return s;
}

namespace detail {
inline int sturm_variations_at(const std::vector<poly>& chain, const Rat& x) {
  int var = 0, last = 0;
  for (const auto& q : chain) {
    Rat v = q.eval(x);
    int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
    if (s != 0) {
      if (last != 0 && s != last) ++var;
      last = s;
    }
  }
  return var;
}

inline int sturm_variations_at_inf(const std::vector<poly>& chain, int dir) {
  int var = 0, last = 0;
  for (const auto& q : chain) {
    if (q.zero()) continue;
    int s = q.lead() > 0 ? 1 : -1;
    if (dir < 0 && q.deg() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}
}  // namespace detail

// Number of distinct real roots of p (non-squarefree inputs handled).
inline int count_real_roots(const poly& p) {
  if (p.deg() <= 0) return 0;
  poly sf = squarefree_part(p);
  auto chain = sturm_chain(sf);
  return detail::sturm_variations_at_inf(chain, -1) - detail::sturm_variations_at_inf(chain, +1);
}

// Distinct real roots in the half-open interval (lo, hi].
inline int count_real_roots_in(const poly& p, const Rat& lo, const Rat& hi) {
  poly sf = squarefree_part(p);
  auto chain = sturm_chain(sf);
  return detail::sturm_variations_at(chain, lo) - detail::sturm_variations_at(chain, hi);
}

// Isolating intervals (lo, hi] for every real root of a squarefree p, each of
// width at most `width`. Endpoints are exact rationals.
inline std::vector<std::pair<Rat, Rat>> isolate_real_roots(const poly& p, const Rat& width) {
  std::vector<std::pair<Rat, Rat>> out;
  poly sf = squarefree_part(p);
  if (sf.deg() <= 0) return out;
  auto chain = sturm_chain(sf);
  // Cauchy bound on root magnitude
  Rat bound = 0;
  for (int i = 0; i < sf.deg(); ++i) {
    Rat t = abs(sf.c[static_cast<size_t>(i)] / sf.lead());
    if (t > bound) bound = t;
  }
  bound += 1;
  struct seg { Rat lo, hi; int n; };
  auto vars = [&](const Rat& x) { return detail::sturm_variations_at(chain, x); };
  std::vector<seg> work{{-bound, bound, vars(-bound) - vars(bound)}};
  while (!work.empty()) {
    seg s = work.back();
    work.pop_back();
    if (s.n == 0) continue;
    if (s.n == 1 && s.hi - s.lo <= width) {
      out.emplace_back(s.lo, s.hi);
      continue;
    }
    Rat mid = (s.lo + s.hi) / 2;
    if (sf.eval(mid) == 0) {
      // exact root at mid: snug interval around it
      Rat eps = width / 4;
      out.emplace_back(mid - eps, mid);
      int left = vars(s.lo) - vars(mid - eps);
      int right = vars(mid) - vars(s.hi);
      if (left > 0) work.push_back({s.lo, mid - eps, left});
      if (right > 0) work.push_back({mid, s.hi, right});
      continue;
    }
    int vm = vars(mid);
    int left = vars(s.lo) - vm;
    if (left > 0) work.push_back({s.lo, mid, left});
    if (s.n - left > 0) work.push_back({mid, s.hi, s.n - left});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace cubix
