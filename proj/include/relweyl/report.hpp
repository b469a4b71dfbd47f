// JSON and plain-text renderings of engine results.

#ifndef RELWEYL_REPORT_HPP_
#define RELWEYL_REPORT_HPP_

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "criterion.hpp"
#include "levi.hpp"

namespace relweyl {

using Json = nlohmann::json;

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(const QVector& v) {
  Json a = Json::array();
  for (const auto& x : v)
    a.push_back(to_string(x));
  return a;
}

inline Json to_json(const ValueExp& v) {
  return {{"q_exp", to_string(v.q_exp)}, {"torsion", to_string(v.torsion)}};
}

inline Json one_based(const IVector& v) {
  Json a = Json::array();
  for (int x : v)
    a.push_back(x + 1);
  return a;
}

inline Json word_json(const WeylGroup& w, ElementId x) { return one_based(w.word(x)); }

inline Json group_json(const WeylGroup& w, const Subgroup& g, bool with_elements = true) {
  Json j{{"order", g.order()}};
  if (with_elements) {
    Json e = Json::array();
    for (ElementId x : g)
      e.push_back(word_json(w, x));
    j["elements"] = e;
  }
  return j;
}

inline Json root_json(const RelativeData& rd, std::size_t a) { return rd.roots[a].coords; }

inline Json roots_json(const RelativeData& rd, const std::vector<std::size_t>& set,
                       bool positive_only = true) {
  Json a = Json::array();
  for (std::size_t x : set)
    if (!positive_only || rd.is_positive(x))
      a.push_back(root_json(rd, x));
  return a;
}

inline Json character_json(const LeviContext& ctx, const UnramifiedParam& nu) {
  return {{"coordinates", ctx.lattice.kind() == TorusKind::simply_connected ? "fundamental-weight"
                                                                             : "epsilon"},
          {"q_part", to_json(nu.q_part)},
          {"t_part", to_json(nu.t_part)}};
}

inline Json semidirect_json(const SemidirectCheck& c) {
  return {{"normal", c.normal},
          {"trivial_intersection", c.trivial_intersection},
          {"orders_multiply", c.orders_multiply},
          {"unique_factorization", c.unique_factorization}};
}

inline Json decomposition_json(const LeviContext& ctx) {
  const WeylGroup& w = ctx.weyl();
  const RelativeData& rd = ctx.rd;
  Json roots = Json::array();
  for (std::size_t a = 0; a < rd.num_positive(); ++a) {
    const RelativeRoot& r = rd.roots[a];
    Json fiber = Json::array();
    for (std::size_t b : r.fiber)
      fiber.push_back(ctx.roots().root(b));
    Json j{{"coords", r.coords},
           {"fiber", fiber},
           {"projection", to_json(r.projection)},
           {"norm", to_string(r.norm)},
           {"in_phi0", rd.in_phi0(a)},
           {"relative_simple", rd.is_relative_simple(a)}};
    if (rd.in_phi0(a))
      j["reflection"] = word_json(w, rd.reflection.at(a));
    if (rd.is_relative_simple(a)) {
      ElementId om = relative_reflection_simple(rd, a);
      j["omega"] = word_json(w, om);
      j["omega_preserves_theta"] = ctx.wm.contains(om);
    }
    roots.push_back(j);
  }
  return {{"type", ctx.roots().cartan().name()},
          {"theta", one_based(ctx.levi.theta)},
          {"weyl_order", w.order()},
          {"relative_roots", roots},
          {"phi_M_0", roots_json(rd, rd.phi0)},
          {"delta_M_0", roots_json(rd, rd.delta0)},
          {"W_M", group_json(w, ctx.wm.reps)},
          {"W_M_0", group_json(w, ctx.wm.small, false)},
          {"W_M_1", group_json(w, ctx.wm.complement)},
          {"split", semidirect_json(ctx.wm.split)},
          {"subroot_failures", check_subroot_system(rd, ctx.wm)}};
}

inline Json flags_json(const RelativeData& rd, const RootFlags& f) {
  Json a = Json::array();
  for (auto& [k, v] : f)
    a.push_back({{"root", root_json(rd, k)}, {"value", v}});
  return a;
}

inline Json clause_json(const Clause& c) {
  return {{"clause", c.name}, {"holds", c.holds}, {"detail", c.detail}};
}

inline Json shortcut_json(const Shortcut& s) {
  Json j{{"applies", s.applies}};
  if (s.verdict)
    j["verdict"] = to_string(*s.verdict);
  if (!s.note.empty())
    j["note"] = s.note;
  return j;
}

inline Json report_json(const LeviContext& ctx, const CriterionReport& rep) {
  const WeylGroup& w = ctx.weyl();
  const RelativeData& rd = ctx.rd;
  Json pairings = Json::array();
  for (std::size_t a = 0; a < rd.num_positive(); ++a)
    pairings.push_back({{"root", root_json(rd, a)}, {"value", to_json(rep.pairings[a])}});
  Json reasons = Json::array();
  for (const auto& c : rep.reasons)
    reasons.push_back(clause_json(c));

  Json j{{"verdict", to_string(rep.verdict)},
         {"reasons", reasons},
         {"pairings", pairings},
         {"unitary", rep.unitary},
         {"trivial_twists", rep.trivial_twists},
         {"phi_M_0", roots_json(rd, rd.phi0)},
         {"W_sigma_nu", group_json(w, rep.stab)},
         {"phi_sigma_nu_0", roots_json(rd, rep.rgroup.phi0)},
         {"W0", group_json(w, rep.rgroup.w0, false)},
         {"R", group_json(w, rep.rgroup.r)},
         {"stab_split", semidirect_json(rep.rgroup.check)},
         {"corank_irred", flags_json(rd, rep.corank)},
         {"mu_zero", flags_json(rd, rep.mu_zero)},
         {"regular_shortcut", shortcut_json(rep.regular)},
         {"unitary_shortcut", shortcut_json(rep.unitary_check)}};
  j["delta_1"] = {{"roots", roots_json(rd, rep.delta1.roots)},
                  {"base", roots_json(rd, rep.delta1.base)},
                  {"W_delta_1", group_json(w, rep.delta1.group, false)},
                  {"reflection_closed", rep.delta1.reflection_closed},
                  {"base_indecomposable", rep.delta1.base_indecomposable},
                  {"base_spans", rep.delta1.base_spans},
                  {"stabilizer_contained", rep.stab_in_w_delta1},
                  {"containment_asserted", rep.trivial_twists}};
  if (rep.ladder) {
    const Ladder& l = *rep.ladder;
    j["ladder"] = {{"phi_prime", roots_json(rd, l.phi_prime)},
                   {"W0_prime", group_json(w, l.w0_prime, false)},
                   {"R_prime", group_json(w, l.r_prime)},
                   {"R0", group_json(w, l.r0)},
                   {"R_prime_split", semidirect_json(l.prime_split)},
                   {"quotient_order", l.quotient_order},
                   {"positivity", "inherited from (Phi_sigma_nu^0)^+"}};
  } else {
    j["ladder"] = nullptr;
  }
  Json orbit = Json::array();
  for (const auto& o : rep.orbit_note)
    orbit.push_back({{"w1", word_json(w, o.w1)}, {"translated", character_json(ctx, o.translated)}});
  j["orbit_note"] = orbit;
  if (rep.muller) {
    const MullerSection& m = *rep.muller;
    Json phi = Json::array();
    for (std::size_t a : m.phi_lambda_0)
      if (rd.is_positive(a))
        phi.push_back(root_json(rd, a));
    j["muller"] = {{"phi_lambda_0", phi},
                   {"W_lambda", group_json(w, m.w_lambda)},
                   {"W_lambda_0", group_json(w, m.w_lambda_0, false)},
                   {"R_lambda", group_json(w, m.r_lambda)},
                   {"walls", roots_json(rd, m.walls)},
                   {"verdict", to_string(m.verdict)}};
  }
  return j;
}

inline Json prediction_json(const LeviContext& ctx, const Prediction& p) {
  const WeylGroup& w = ctx.weyl();
  Json j{{"abstained", p.abstained},
         {"W_sigma", group_json(w, p.w_sigma, false)},
         {"R_sigma", group_json(w, p.r_sigma)}};
  if (p.abstained)
    j["reason"] = p.reason;
  if (p.verdict)
    j["predicted"] = to_string(*p.verdict);
  j["failing_roots"] = roots_json(ctx.rd, p.failing);
  j["failing_outside_phi_M_0"] = roots_json(ctx.rd, p.failing_outside);
  Json pairs = Json::array();
  for (auto [a, b] : p.failing_pairs)
    pairs.push_back({a + 1, b + 1});
  j["failing_pairs"] = pairs;
  return j;
}

// ---- text ------------------------------------------------------------------

inline std::string words_text(const Json& group) {
  std::string s = std::to_string(group["order"].get<std::size_t>());
  if (group.contains("elements") && group["elements"].size() > 1 && group["elements"].size() <= 12) {
    s += " {";
    bool first = true;
    for (auto& e : group["elements"]) {
      s += (first ? "" : " ") + std::string(e.empty() ? "1" : "s" + e.dump());
      first = false;
    }
    s += "}";
  }
  return s;
}

inline std::string roots_text(const Json& roots) {
  std::string s = "{";
  bool first = true;
  for (auto& r : roots) {
    s += (first ? "" : " ") + r.dump();
    first = false;
  }
  return s + "}";
}

inline std::string decomposition_text(const Json& d) {
  std::ostringstream o;
  o << d["type"].get<std::string>() << "  theta=" << d["theta"].dump() << "  |W|=" << d["weyl_order"]
    << "\n";
  o << "relative roots (positive):";
  for (auto& r : d["relative_roots"])
    o << " " << r["coords"].dump() << (r["in_phi0"].get<bool>() ? "*" : "");
  o << "   (* = in Phi_M^0)\n";
  o << "Delta_M^0 = " << roots_text(d["delta_M_0"]) << "\n";
  o << "|W_M| = " << words_text(d["W_M"]) << "\n";
  o << "|W_M^0| = " << d["W_M_0"]["order"] << "   |W_M^1| = " << words_text(d["W_M_1"]) << "\n";
  return o.str();
}

inline std::string report_text(const Json& r) {
  std::ostringstream o;
  o << "verdict: " << r["verdict"].get<std::string>() << "\n";
  for (auto& c : r["reasons"]) {
    o << "  " << c["clause"].get<std::string>() << ": " << (c["holds"].get<bool>() ? "ok" : "fails");
    if (!c["detail"].empty())
      o << " " << c["detail"].dump();
    o << "\n";
  }
  o << "pairings:";
  for (auto& p : r["pairings"])
    o << " " << p["root"].dump() << "->(" << p["value"]["q_exp"].get<std::string>() << ","
      << p["value"]["torsion"].get<std::string>() << ")";
  o << "\n";
  o << "|W_sigma_nu| = " << words_text(r["W_sigma_nu"]) << "\n";
  o << "Phi_sigma_nu^0 = " << roots_text(r["phi_sigma_nu_0"]) << "\n";
  o << "|W^0| = " << r["W0"]["order"] << "   |R| = " << words_text(r["R"]) << "\n";
  o << "Delta_1 = " << roots_text(r["delta_1"]["roots"]) << "  base " << roots_text(r["delta_1"]["base"])
    << "\n";
  if (!r["ladder"].is_null())
    o << "|W^0'| = " << r["ladder"]["W0_prime"]["order"] << "   |R'| = " << r["ladder"]["R_prime"]["order"]
      << "   |R^0| = " << r["ladder"]["R0"]["order"] << "\n";
  if (r.contains("muller")) {
    auto& m = r["muller"];
    o << "principal series: Phi_lambda^0 = " << roots_text(m["phi_lambda_0"])
      << "  |W_lambda| = " << m["W_lambda"]["order"] << "  |R_lambda| = " << words_text(m["R_lambda"])
      << "  walls " << roots_text(m["walls"]) << "\n";
  }
  return o.str();
}

} // namespace relweyl

#endif // RELWEYL_REPORT_HPP_
