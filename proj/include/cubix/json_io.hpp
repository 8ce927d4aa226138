#pragma once

#include <json.hpp>

#include "cubix/averages.hpp"
#include "cubix/lattice.hpp"
#include "cubix/local.hpp"
#include "cubix/orbits.hpp"
#include "cubix/sampler.hpp"

namespace cubix {

using json = nlohmann::json;

// Rationals travel as "num/den" strings so nothing is ever rounded through a
// double on the wire.
inline json to_json(const Rat& q) { return numerator(q).str() + "/" + denominator(q).str(); }

inline Rat rat_from_json(const json& j) {
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int den(s.substr(slash + 1));
  if (den == 0) throw error(errc::bad_argument, "zero denominator");
  return rat(Int(s.substr(0, slash)), den);
}

inline json to_json_int(const Int& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(n);
  return n.str();
}

inline Int int_from_json(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<std::int64_t>());
}

inline json to_json(const binary_cubic& f) {
  return json::array({to_json_int(f.a), to_json_int(f.b), to_json_int(f.c), to_json_int(f.d)});
}

inline binary_cubic cubic_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw error(errc::bad_argument, "cubic form expects [a,b,c,d]");
  return {int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2]), int_from_json(j[3])};
}

inline json to_json(const ternary_form& A) {
  json g = json::array();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g.push_back(to_json(A.g[i][j]));
  return g;
}

inline ternary_form ternary_from_json(const json& j) {
  if (!j.is_array() || j.size() != 9) throw error(errc::bad_argument, "gram expects 9 row-major entries");
  std::array<std::array<Rat, 3>, 3> g;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) g[static_cast<size_t>(i)][static_cast<size_t>(k)] = rat_from_json(j[static_cast<size_t>(3 * i + k)]);
  return ternary_form::from_gram(g);
}

inline json to_json(const qf_pair& p) {
  return json{{"A", to_json(p.A)},
              {"B", to_json(p.B)},
              {"resolvent", json::array({to_json(p.res.a), to_json(p.res.b), to_json(p.res.c), to_json(p.res.d)})}};
}

inline json to_json(const local_density_report& r) {
  json hist = json::object();
  for (auto& [t, n] : r.histogram) hist[to_string(t)] = to_json_int(n);
  return json{{"p", r.p},
              {"maximal_density", to_json(r.maximal)},
              {"aside_ram_density", to_json(r.aside_ram)},
              {"dside_ram_density", to_json(r.dside_ram)},
              {"n_maximal", to_json_int(r.n_maximal)},
              {"splitting_histogram", hist}};
}

inline const char* to_string(delta_reason r) {
  switch (r) {
    case delta_reason::gcd_fail: return "GcdFail";
    case delta_reason::congruence_fail: return "CongruenceFail";
    case delta_reason::table_fail: return "TableFail";
    case delta_reason::found: return "Found";
  }
  return "?";
}

inline json to_json(const delta_dist_result& r) {
  json j{{"exists", r.exists}, {"reason", to_string(r.reason)}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

inline const char* to_string(average_kind k) {
  switch (k) {
    case average_kind::cl2_real: return "Cl2Real";
    case average_kind::cl2_complex: return "Cl2Complex";
    case average_kind::sel2_real_pos: return "Sel2RealPos";
    case average_kind::sel2_real_neg: return "Sel2RealNeg";
    case average_kind::sel2_complex: return "Sel2Complex";
  }
  return "?";
}

inline json to_json(const average_report& r) {
  json j{{"rho", to_json(r.rho)},
         {"lambda", to_json(r.lambda)},
         {"chi", r.chi_val},
         {"delta", to_json(r.delta)},
         {"bound", to_json(r.bound)},
         {"bound_rendered", render3(r.bound)},
         {"kind", to_string(r.kind)},
         {"label", average_report::label}};
  if (r.pi_estimate) j["pi_estimate"] = *r.pi_estimate;
  return j;
}

inline json to_json(const count_breakdown& c) {
  return json{{"N", to_json_int(c.n)},
              {"N_star", to_json_int(c.n_star)},
              {"N_delta_zero", to_json_int(c.n_delta_zero)},
              {"N_delta_nonzero", to_json_int(c.n_delta_nonzero)},
              {"N_star_delta_zero", to_json_int(c.n_star_delta_zero)},
              {"N_star_delta_nonzero", to_json_int(c.n_star_delta_nonzero)}};
}

inline json to_json(const family_sample_stats& s) {
  return json{{"n_box", s.n_box},
              {"n_positive_disc", s.n_positive_disc},
              {"n_sign", s.n_sign},
              {"n_maximal", s.n_maximal},
              {"n_aside_ram", s.n_aside_ram},
              {"n_dside_ram", s.n_dside_ram},
              {"n_delta_dist", s.n_delta_dist},
              {"n_unresolved", s.n_unresolved}};
}

inline json to_json(const table2_entry& e) {
  return json{{"a", e.a},
              {"d", e.d},
              {"real_bound", to_json(e.real_bound)},
              {"complex_bound", to_json(e.complex_bound)},
              {"real", e.real_str},
              {"complex", e.complex_str},
              {"printed_real", e.printed_real},
              {"printed_complex", e.printed_complex},
              {"real_discrepancy", e.real_discrepancy},
              {"complex_discrepancy", e.complex_discrepancy}};
}

}  // namespace cubix
