#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "cubix/numeric.hpp"
#include "cubix/parallel.hpp"
#include "cubix/ternary.hpp"

namespace cubix {

// Coefficients (a,b,c,d,e,f) of a ternary form with Gram rows
// (a, b/2, d/2), (b/2, c, e/2), (d/2, e/2, f), so that
//   -k = -4 det = f (b^2 - 4ac) + (a e^2 - b e d + c d^2).
// A skewed box scales each coefficient range by the torus weight of its
// matrix entry and the dilation Y.
struct skew_box {
  double s1 = 1.0, s2 = 1.0;
  double Y = 1.0;
  std::array<double, 6> base{1, 1, 1, 1, 1, 1};  // symmetric half-widths at Y = 1, s = 1
  lattice_class cls = lattice_class::half_integral;

  std::array<std::int64_t, 6> ranges() const {
    const double w[6] = {std::pow(s1, -4) * std::pow(s2, -2), std::pow(s1, -1) * std::pow(s2, -2),
                         s1 * s1 * std::pow(s2, -2),          std::pow(s1, -1) * s2,
                         s1 * s1 * s2,                        s1 * s1 * std::pow(s2, 4)};
    std::array<std::int64_t, 6> r;
    for (int i = 0; i < 6; ++i) {
      double v = std::floor(base[static_cast<size_t>(i)] * w[i] * Y + 1e-9);
      if (v > 2e5) throw error(errc::range_too_large, "skew box range too large for 64-bit counting");
      r[static_cast<size_t>(i)] = v < 0 ? 0 : static_cast<std::int64_t>(v);
    }
    return r;
  }
};

struct count_breakdown {
  Int n = 0;                  // all solutions in the box
  Int n_star = 0;             // those with a != 0
  Int n_delta_zero = 0;       // Delta = b^2 - 4ac = 0
  Int n_delta_nonzero = 0;
  Int n_star_delta_zero = 0;
  Int n_star_delta_nonzero = 0;
};

namespace detail {
struct count_acc {
  std::int64_t dz = 0, dnz = 0, sdz = 0, sdnz = 0;
};
}  // namespace detail

// Count integer coefficient tuples in the box with 4 det = k. Five of the six
// coordinates are enumerated; when Delta != 0 the last coordinate f is solved
// for (divisibility maintained incrementally in e, so the inner loop is
// add/compare only), and when Delta = 0 the whole f-range counts at once.
inline count_breakdown count_fixed_det(std::int64_t k, const skew_box& box) {
  if (k == 0) throw error(errc::bad_argument, "count_fixed_det: k = 0");
  bool intmat = box.cls == lattice_class::integer_matrix;
  if (intmat && mod_floor64(k, 4) != 0)
    throw error(errc::bad_argument, "integer-matrix forms have 4 det = 0 mod 4: k inconsistent");
  auto R = box.ranges();
  const std::int64_t Ra = R[0], Rb = R[1], Rc = R[2], Rd = R[3], Re = R[4], Rf = R[5];
  const std::int64_t step = intmat ? 2 : 1;
  const std::int64_t f_total = 2 * Rf + 1;  // f carries no parity constraint in either class

  auto work = [&](std::int64_t a_lo, std::int64_t a_hi, detail::count_acc& acc) {
    for (std::int64_t a = a_lo; a < a_hi; ++a) {
      for (std::int64_t b = intmat ? -(Rb - mod_floor64(Rb, 2)) : -Rb; b <= Rb; b += step) {
        for (std::int64_t c = -Rc; c <= Rc; ++c) {
          const std::int64_t delta = b * b - 4 * a * c;
          if (delta != 0) {
            const std::int64_t D = delta > 0 ? delta : -delta;
            const std::int64_t twoa_mod = mod_floor64(2 * a * step * step, D);
            for (std::int64_t d = intmat ? -(Rd - mod_floor64(Rd, 2)) : -Rd; d <= Rd; d += step) {
              // T(e) = a e^2 - b e d + c d^2 along e in steps
              std::int64_t e0 = intmat ? -(Re - mod_floor64(Re, 2)) : -Re;
              std::int64_t T = a * e0 * e0 - b * e0 * d + c * d * d;
              // increment of T per step: a((e+s)^2 - e^2) - b d s = s(a(2e+s) - bd)
              std::int64_t inc = step * (a * (2 * e0 + step) - b * d);
              std::int64_t r = mod_floor64(-k - T, D);
              std::int64_t inc_mod = mod_floor64(inc, D);
              for (std::int64_t e = e0;;) {
                if (r == 0) {
                  std::int64_t fv = (-k - T) / delta;
                  if (fv >= -Rf && fv <= Rf) {
                    ++acc.dnz;
                    if (a != 0) ++acc.sdnz;
                  }
                }
                e += step;
                if (e > Re) break;
                T += inc;
                r -= inc_mod;
                if (r < 0) r += D;
                inc += step * step * 2 * a;
                inc_mod += twoa_mod;
                if (inc_mod >= D) inc_mod -= D;
              }
            }
          } else {
            for (std::int64_t d = intmat ? -(Rd - mod_floor64(Rd, 2)) : -Rd; d <= Rd; d += step) {
              for (std::int64_t e = intmat ? -(Re - mod_floor64(Re, 2)) : -Re; e <= Re; e += step) {
                if (a * e * e - b * e * d + c * d * d == -k) {
                  acc.dz += f_total;
                  if (a != 0) acc.sdz += f_total;
                }
              }
            }
          }
        }
      }
    }
  };
  auto accs = parallel_chunks<detail::count_acc>(-Ra, Ra + 1, work);
  count_breakdown out;
  for (const auto& acc : accs) {
    out.n_delta_zero += acc.dz;
    out.n_delta_nonzero += acc.dnz;
    out.n_star_delta_zero += acc.sdz;
    out.n_star_delta_nonzero += acc.sdnz;
  }
  out.n = out.n_delta_zero + out.n_delta_nonzero;
  out.n_star = out.n_star_delta_zero + out.n_star_delta_nonzero;
  return out;
}

// The six-loop oracle at tiny scale; same box semantics.
inline count_breakdown count_fixed_det_oracle(std::int64_t k, const skew_box& box) {
  if (k == 0) throw error(errc::bad_argument, "count_fixed_det_oracle: k = 0");
  bool intmat = box.cls == lattice_class::integer_matrix;
  auto R = box.ranges();
  const std::int64_t step = intmat ? 2 : 1;
  count_breakdown out;
  auto start = [&](std::int64_t r, bool stepped) { return stepped ? -(r - mod_floor64(r, 2)) : -r; };
  for (std::int64_t a = -R[0]; a <= R[0]; ++a)
    for (std::int64_t b = start(R[1], intmat); b <= R[1]; b += step)
      for (std::int64_t c = -R[2]; c <= R[2]; ++c)
        for (std::int64_t d = start(R[3], intmat); d <= R[3]; d += step)
          for (std::int64_t e = start(R[4], intmat); e <= R[4]; e += step)
            for (std::int64_t f = -R[5]; f <= R[5]; ++f) {
              std::int64_t delta = b * b - 4 * a * c;
              if (f * delta + (a * e * e - b * e * d + c * d * d) != -k) continue;
              ++out.n;
              if (delta == 0) ++out.n_delta_zero;
              else ++out.n_delta_nonzero;
              if (a != 0) {
                ++out.n_star;
                if (delta == 0) ++out.n_star_delta_zero;
                else ++out.n_star_delta_nonzero;
              }
            }
  return out;
}

struct skew_row {
  double s1 = 1, s2 = 1;
  count_breakdown counts;
  double ratio = 1;  // N(s) / N(1,1)
};

// Counts under a list of torus skews, with the ratio against the unskewed box.
inline std::vector<skew_row> skew_ratio(std::int64_t k, double Y,
                                        const std::vector<std::pair<double, double>>& s_list,
                                        std::array<double, 6> base = {1, 1, 1, 1, 1, 1}) {
  skew_box unit;
  unit.Y = Y;
  unit.base = base;
  count_breakdown ref = count_fixed_det(k, unit);
  std::vector<skew_row> out;
  for (auto [s1, s2] : s_list) {
    skew_box box;
    box.s1 = s1;
    box.s2 = s2;
    box.Y = Y;
    box.base = base;
    skew_row row;
    row.s1 = s1;
    row.s2 = s2;
    row.counts = count_fixed_det(k, box);
    row.ratio = ref.n == 0 ? 0.0
                           : static_cast<double>(row.counts.n) / static_cast<double>(ref.n);
    out.push_back(std::move(row));
  }
  return out;
}

// Least-squares slope of log N against log Y over a dilation ladder.
inline double growth_exponent(std::int64_t k, const std::vector<double>& Ys,
                              lattice_class cls = lattice_class::half_integral) {
  if (Ys.size() < 3) throw error(errc::bad_argument, "growth fit needs at least 3 ladder points");
  std::vector<double> lx, ly;
  for (double Y : Ys) {
    skew_box box;
    box.Y = Y;
    box.cls = cls;
    count_breakdown ct = count_fixed_det(k, box);
    if (ct.n == 0) throw error(errc::bad_argument, "growth fit: empty count in ladder");
    lx.push_back(std::log(Y));
    ly.push_back(std::log(static_cast<double>(ct.n)));
  }
  double n = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0) throw error(errc::bad_argument, "growth fit: degenerate ladder");
  return (n * sxy - sx * sy) / denom;
}

}  // namespace cubix
