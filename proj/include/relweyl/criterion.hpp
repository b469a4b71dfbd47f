// Stabilizers of induction data, the R-group ladder and the irreducibility
// verdicts built on them.
//
// A supercuspidal sigma of M enters only through a SigmaOracle: twisted
// stabilizer pairs (w, chi_w) meaning w.sigma = sigma (x) chi_w, and boolean
// flags on relative roots. Twists compose with the left action,
//   chi_{w1 w2} = chi_{w1} + w1.chi_{w2}.

#ifndef RELWEYL_CRITERION_HPP_
#define RELWEYL_CRITERION_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charlat.hpp"
#include "error.hpp"
#include "levi.hpp"
#include "subgroup.hpp"

namespace relweyl {

enum class Verdict { irreducible, reducible };

inline std::string to_string(Verdict v) {
  return v == Verdict::irreducible ? "irreducible" : "reducible";
}

struct StabPair {
  ElementId w = 0;
  UnramifiedParam twist;
};

// Flags are keyed by positive relative root index and read for both signs.
using RootFlags = std::map<std::size_t, bool>;

struct SigmaOracle {
  std::vector<StabPair> stab_pairs;
  RootFlags mu_zero;
  RootFlags corank_irred;
};

inline std::optional<bool> flag_of(const RootFlags& f, const RelativeData& rd, std::size_t a) {
  auto it = f.find(rd.positive_part(a));
  if (it == f.end())
    return std::nullopt;
  return it->second;
}

// "(c1,c2,...)" in relative coordinates.
inline std::string root_label(const RelativeData& rd, std::size_t a) {
  std::string s = "(";
  const IVector& c = rd.roots[a].coords;
  for (std::size_t k = 0; k < c.size(); ++k)
    s += (k ? "," : "") + std::to_string(c[k]);
  return s + ")";
}

// The group generated by the stabilizer pairs, each element carrying its
// twist. Conflicting twists for one element are rejected.
struct TwistedGroup {
  std::map<ElementId, UnramifiedParam> twist;
  bool trivial_twists = true;

  Subgroup elements() const {
    std::vector<ElementId> v;
    for (auto& [w, c] : twist)
      v.push_back(w);
    return Subgroup(std::move(v));
  }
};

inline TwistedGroup close_stab_pairs(const LeviContext& ctx, const std::vector<StabPair>& pairs) {
  const WeylGroup& w = ctx.weyl();
  TwistedGroup g;
  g.twist.emplace(w.identity(), trivial_character(ctx));
  std::vector<StabPair> gens;
  auto conflict = [&](ElementId x) {
    impl::reject("stabilizer pairs are inconsistent: two different twists for " +
                     impl::word_string(w.word(x)),
                 {impl::word_string(w.word(x))});
  };
  for (const StabPair& p : pairs) {
    ctx.action(p.w); // rejects elements outside W_M
    if (auto it = g.twist.find(p.w); it != g.twist.end()) {
      if (!(it->second == p.twist))
        conflict(p.w);
      continue;
    }
    gens.push_back(p);
    // Re-close from the identity with the enlarged generator list.
    std::map<ElementId, UnramifiedParam> closed;
    closed.emplace(w.identity(), trivial_character(ctx));
    std::vector<ElementId> queue{w.identity()};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      ElementId x = queue[k];
      UnramifiedParam cx = closed.at(x);
      for (const StabPair& s : gens) {
        ElementId y = w.multiply(x, s.w);
        UnramifiedParam cy = cx + weyl_act(ctx, x, s.twist);
        auto [it, fresh] = closed.emplace(y, cy);
        if (fresh)
          queue.push_back(y);
        else if (!(it->second == cy))
          conflict(y);
      }
    }
    for (auto& [x, c] : g.twist)
      if (!(closed.at(x) == c))
        conflict(x);
    g.twist = std::move(closed);
  }
  for (auto& [x, c] : g.twist)
    if (!is_zero(c.q_part) || !is_zero(c.t_part))
      g.trivial_twists = false;
  return g;
}

// Every element of W_M with the trivial twist: sigma is W_M-invariant.
inline TwistedGroup untwisted(const LeviContext& ctx, const Subgroup& group) {
  TwistedGroup g;
  for (ElementId x : group)
    g.twist.emplace(x, trivial_character(ctx));
  return g;
}

// W_{sigma nu} = { w : chi_w + w.nu = nu }.
inline Subgroup stabilizer_sigma_nu(const LeviContext& ctx, const TwistedGroup& pairs,
                                    const UnramifiedParam& nu) {
  std::vector<ElementId> out;
  for (auto& [x, c] : pairs.twist)
    if (c + weyl_act(ctx, x, nu) == nu)
      out.push_back(x);
  return Subgroup(std::move(out));
}

// {alpha in Phi_M^0 : w_alpha in stab}, both signs.
inline std::vector<std::size_t> phi_sigma_nu_0(const RelativeData& rd, const Subgroup& stab) {
  std::vector<std::size_t> out;
  for (std::size_t a : rd.phi0)
    if (stab.contains(rd.reflection.at(a)))
      out.push_back(a);
  return out;
}

struct RGroup {
  std::vector<std::size_t> phi0;
  Subgroup w0;
  Subgroup r;
  std::vector<ElementId> gens;
  SemidirectCheck check;
};

inline RGroup r_group(const LeviContext& ctx, const Subgroup& stab,
                      const std::vector<std::size_t>& phi0) {
  for (std::size_t a : phi0)
    if (!stab.contains(ctx.rd.reflection.at(a)))
      impl::reject("reflection of " + root_label(ctx.rd, a) + " is not in the stabilizer");
  auto s = split_by_reflections(ctx.rd, ctx.wm, stab, phi0);
  if (!s.check.ok())
    impl::broken("stabilizer does not split as reflection part x| R");
  return {phi0, std::move(s.reflection_part), std::move(s.complement), std::move(s.gens),
          std::move(s.check)};
}

struct Delta1 {
  std::vector<std::size_t> roots; // both signs
  std::vector<std::size_t> base;
  Subgroup group;                 // generated by the reflections of roots
  bool reflection_closed = true;
  bool base_indecomposable = true;
  bool base_spans = true; // every positive root is a nonnegative integral combination
};

// Delta_1 = { alpha in Phi_M^0 : nu_alpha = 1 }, both components trivial.
inline Delta1 delta_1(const LeviContext& ctx, const UnramifiedParam& nu) {
  const RelativeData& rd = ctx.rd;
  const RootSystem& rs = ctx.roots();
  Delta1 d;
  for (std::size_t a : rd.phi0)
    if (eval_on_coroot(ctx, nu, a).is_identity())
      d.roots.push_back(a);
  auto in = [&](std::size_t a) { return std::binary_search(d.roots.begin(), d.roots.end(), a); };
  for (std::size_t a : d.roots)
    for (std::size_t b : d.roots)
      if (!in(ctx.wm.act_on(rd.reflection.at(a), b)))
        d.reflection_closed = false;
  d.base = simple_system(rd, ctx.wm, d.roots);
  std::vector<ElementId> gens;
  for (std::size_t a : d.roots)
    if (rd.is_positive(a))
      gens.push_back(rd.reflection.at(a));
  d.group = generate_subgroup(ctx.weyl(), gens);

  auto sum = [&](std::size_t a, std::size_t b) {
    IVector s(rd.dim());
    for (std::size_t k = 0; k < s.size(); ++k)
      s[k] = rd.roots[a].coords[k] + rd.roots[b].coords[k];
    return s;
  };
  for (std::size_t a : d.base)
    for (std::size_t b : d.roots)
      for (std::size_t c : d.roots)
        if (rd.is_positive(b) && rd.is_positive(c) && sum(b, c) == rd.roots[a].coords)
          d.base_indecomposable = false;

  // Coefficients on the base from the Gram system of the projections.
  const std::size_t n = d.base.size();
  QMatrix gram(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram[i][j] = rs.inner(rd.roots[d.base[i]].projection, rd.roots[d.base[j]].projection);
  for (std::size_t a : d.roots) {
    if (!rd.is_positive(a))
      continue;
    QVector rhs(n);
    for (std::size_t i = 0; i < n; ++i)
      rhs[i] = rs.inner(rd.roots[a].projection, rd.roots[d.base[i]].projection);
    auto c = solve(gram, rhs);
    if (!c) {
      d.base_spans = false;
      continue;
    }
    QVector back(rs.rank(), Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_integer((*c)[i]) || (*c)[i] < 0)
        d.base_spans = false;
      for (int k = 0; k < rs.rank(); ++k)
        back[k] += (*c)[i] * rd.roots[d.base[i]].projection[k];
    }
    if (back != rd.roots[a].projection)
      d.base_spans = false;
  }
  return d;
}

// Knapp-Stein side: W^{0'} generated by the mu-zero reflections of
// Phi_{sigma nu}^0, R' its positivity complement in the stabilizer,
// R^0 = W^0 cap R'.
struct Ladder {
  std::vector<std::size_t> phi_prime;
  Subgroup w0_prime;
  Subgroup r_prime;
  Subgroup r0;
  SemidirectCheck stab_split;  // stab = W^{0'} x| R'
  SemidirectCheck prime_split; // R' = R^0 x| R
  bool quotient_order = false; // |R^0| = |W^0| / |W^{0'}|

  bool ok() const { return stab_split.ok() && prime_split.ok() && quotient_order; }
};

inline Ladder knapp_stein_ladder(const LeviContext& ctx, const Subgroup& stab, const RGroup& rg,
                                 const RootFlags& mu_zero) {
  const RelativeData& rd = ctx.rd;
  Ladder l;
  for (std::size_t a : rg.phi0) {
    auto f = flag_of(mu_zero, rd, a);
    if (!f)
      impl::broken("mu_zero flag missing inside the ladder");
    if (*f)
      l.phi_prime.push_back(a);
  }
  auto s = split_by_reflections(rd, ctx.wm, stab, l.phi_prime);
  l.w0_prime = std::move(s.reflection_part);
  l.r_prime = std::move(s.complement);
  l.stab_split = std::move(s.check);
  l.r0 = intersect(rg.w0, l.r_prime);
  l.prime_split = check_semidirect(ctx.weyl(), l.r_prime, l.r0, l.r0.elements(), rg.r);
  l.quotient_order = l.r0.order() * l.w0_prime.order() == rg.w0.order();
  return l;
}

struct Clause {
  std::string name;
  bool holds = true;
  std::vector<std::string> detail;
};

struct Shortcut {
  bool applies = false;
  std::optional<Verdict> verdict;
  std::string note;
};

struct OrbitNote {
  ElementId w1 = 0;
  UnramifiedParam translated;
};

// Principal-series data computed from the definitions on W itself.
struct MullerSection {
  std::vector<std::size_t> phi_lambda_0; // absolute roots, both signs
  Subgroup w_lambda;
  Subgroup w_lambda_0;
  Subgroup r_lambda;
  std::vector<std::size_t> walls; // positive roots with lambda_alpha = |.|^{+-1}
  Verdict verdict = Verdict::irreducible;
};

struct CriterionReport {
  std::vector<ValueExp> pairings; // per relative root, both signs
  bool trivial_twists = true;
  bool unitary = false;
  Subgroup stab;
  RGroup rgroup;
  Delta1 delta1;
  bool stab_in_w_delta1 = false;
  std::optional<Ladder> ladder;
  RootFlags corank;  // effective flags on Phi_M^0 (positive parts)
  RootFlags mu_zero; // effective flags on Phi_{sigma nu}^0, if known
  std::vector<std::size_t> corank_failures;
  Verdict verdict = Verdict::irreducible;
  std::vector<Clause> reasons;
  Shortcut regular;
  Shortcut unitary_check;
  std::vector<OrbitNote> orbit_note;
  std::optional<MullerSection> muller;
};

namespace impl {

inline void check_orbit_constant(const LeviContext& ctx, const Subgroup& stab,
                                 const RootFlags& flags, const std::string& what) {
  const RelativeData& rd = ctx.rd;
  for (auto& [a, v] : flags)
    for (ElementId x : stab) {
      std::size_t b = ctx.wm.act_on(x, a);
      auto fb = flag_of(flags, rd, b);
      if (fb && *fb != v)
        reject(what + " flags are not constant on stabilizer orbits: " + root_label(rd, a) +
                   " and " + root_label(rd, b) + " differ",
               {root_label(rd, a), root_label(rd, b)});
    }
}

} // namespace impl

// Main theorem: irreducible iff R_{sigma nu} = 1 and every co-rank one
// induction along Phi_M^0 is irreducible.
inline CriterionReport decide_gps(const LeviContext& ctx, const UnramifiedParam& nu,
                                  const SigmaOracle& oracle, const TwistedGroup& pairs) {
  const RelativeData& rd = ctx.rd;
  const WeylGroup& w = ctx.weyl();
  CriterionReport rep;
  for (std::size_t a = 0; a < rd.roots.size(); ++a)
    rep.pairings.push_back(eval_on_coroot(ctx, nu, a));
  rep.trivial_twists = pairs.trivial_twists;
  rep.unitary = is_unitary(ctx, nu);

  // Coverage of the co-rank one flags.
  std::vector<std::string> uncovered;
  for (std::size_t a : rd.phi0)
    if (rd.is_positive(a) && !flag_of(oracle.corank_irred, rd, a))
      uncovered.push_back(root_label(rd, a));
  if (!uncovered.empty())
    throw SchemaError("corank_irred flags missing for relative roots in Phi_M^0", uncovered);

  rep.stab = stabilizer_sigma_nu(ctx, pairs, nu);
  impl::check_orbit_constant(ctx, rep.stab, oracle.corank_irred, "corank_irred");
  impl::check_orbit_constant(ctx, rep.stab, oracle.mu_zero, "mu_zero");

  rep.rgroup = r_group(ctx, rep.stab, phi_sigma_nu_0(rd, rep.stab));
  rep.delta1 = delta_1(ctx, nu);
  rep.stab_in_w_delta1 = is_subset(rep.stab, rep.delta1.group);

  for (std::size_t a : rd.phi0)
    if (rd.is_positive(a)) {
      bool f = *flag_of(oracle.corank_irred, rd, a);
      rep.corank[a] = f;
      if (!f)
        rep.corank_failures.push_back(a);
    }

  bool mu_known = true;
  for (std::size_t a : rep.rgroup.phi0) {
    auto f = flag_of(oracle.mu_zero, rd, a);
    if (!f)
      mu_known = false;
    else if (rd.is_positive(a))
      rep.mu_zero[a] = *f;
  }
  if (mu_known) {
    rep.ladder = knapp_stein_ladder(ctx, rep.stab, rep.rgroup, oracle.mu_zero);
    if (!rep.ladder->ok())
      impl::broken("R' does not split as R^0 x| R");
  }

  Clause rc{"R-group", rep.rgroup.r.trivial(), {}};
  for (ElementId x : rep.rgroup.r)
    if (x != w.identity())
      rc.detail.push_back(impl::word_string(w.word(x)));
  Clause cc{"corank", rep.corank_failures.empty(), {}};
  for (std::size_t a : rep.corank_failures)
    cc.detail.push_back(root_label(rd, a));
  rep.verdict = rc.holds && cc.holds ? Verdict::irreducible : Verdict::reducible;
  rep.reasons = {rc, cc};
  if ((rep.verdict == Verdict::irreducible) != (rep.rgroup.r.trivial() && rep.corank_failures.empty()))
    impl::broken("verdict contradicts its own clauses");

  // Regular datum: the verdict is the conjunction of the co-rank one flags.
  if (rep.stab.trivial()) {
    rep.regular.applies = true;
    rep.regular.verdict = cc.holds ? Verdict::irreducible : Verdict::reducible;
    if (*rep.regular.verdict != rep.verdict)
      impl::broken("regular shortcut disagrees with the main verdict");
  } else {
    rep.regular.note = "stabilizer is nontrivial";
  }

  // Unitary datum: irreducible iff R' = 1, provided the flags are coherent.
  if (!rep.unitary) {
    rep.unitary_check.note = "nu is not unitary";
  } else if (!rep.ladder) {
    rep.unitary_check.note = "mu_zero flags missing on Phi_{sigma nu}^0";
  } else {
    std::vector<std::string> bad;
    for (std::size_t a : rd.phi0) {
      if (!rd.is_positive(a))
        continue;
      bool in_stab = std::binary_search(rep.rgroup.phi0.begin(), rep.rgroup.phi0.end(), a);
      bool c = rep.corank.at(a);
      if (in_stab ? c != rep.mu_zero.at(a) : !c)
        bad.push_back(root_label(rd, a));
    }
    if (!bad.empty())
      impl::reject("in the unitary case corank_irred must equal mu_zero on Phi_{sigma nu}^0 and "
                   "hold off it",
                   bad);
    rep.unitary_check.applies = true;
    rep.unitary_check.verdict = rep.ladder->r_prime.trivial() ? Verdict::irreducible
                                                              : Verdict::reducible;
    if (*rep.unitary_check.verdict != rep.verdict)
      impl::broken("unitary shortcut disagrees with the main verdict");
  }

  for (ElementId x : ctx.wm.complement)
    if (x != w.identity())
      rep.orbit_note.push_back({x, weyl_act(ctx, x, nu)});
  return rep;
}

inline CriterionReport decide_gps(const LeviContext& ctx, const UnramifiedParam& nu,
                                  const SigmaOracle& oracle) {
  return decide_gps(ctx, nu, oracle, close_stab_pairs(ctx, oracle.stab_pairs));
}

// Unramified principal series (theta empty). sigma is the unitary part of
// lambda and nu its real part; the co-rank one flags come from the rank-one
// criterion on M_alpha and the mu-zero flags from sigma_alpha = 1.
struct DegenerateData {
  UnramifiedParam nu;
  TwistedGroup pairs;
  SigmaOracle oracle;
};

inline DegenerateData degenerate_oracle(const LeviContext& ctx, const UnramifiedParam& lambda) {
  if (!ctx.levi.theta.empty())
    impl::reject("principal-series mode needs an empty Levi subset");
  const RelativeData& rd = ctx.rd;
  DegenerateData d;
  UnramifiedParam sigma = lambda;
  std::fill(sigma.q_part.begin(), sigma.q_part.end(), Rational(0));
  d.nu = lambda;
  std::fill(d.nu.t_part.begin(), d.nu.t_part.end(), Rational(0));
  d.pairs = untwisted(ctx, stabilizer(ctx, sigma));
  Subgroup w_lambda = stabilizer(ctx, lambda);
  for (std::size_t a = 0; a < rd.num_positive(); ++a) {
    ValueExp v = eval_on_coroot(ctx, lambda, a);
    bool r_effect = w_lambda.contains(rd.reflection.at(a)) && !v.is_identity();
    d.oracle.corank_irred[a] = !is_wall(v) && !r_effect;
    d.oracle.mu_zero[a] = v.torsion == 0;
  }
  return d;
}

inline MullerSection muller_section(const LeviContext& ctx, const UnramifiedParam& lambda) {
  const RelativeData& rd = ctx.rd;
  MullerSection m;
  std::vector<std::size_t> phi;
  for (std::size_t a = 0; a < rd.roots.size(); ++a) {
    ValueExp v = eval_on_coroot(ctx, lambda, a);
    if (v.is_identity())
      phi.push_back(a);
    if (rd.is_positive(a) && is_wall(v))
      m.walls.push_back(a);
  }
  m.phi_lambda_0 = phi;
  m.w_lambda = stabilizer(ctx, lambda);
  auto s = split_by_reflections(rd, ctx.wm, m.w_lambda, phi);
  if (!s.check.ok())
    impl::broken("W_lambda does not split as W_lambda^0 x| R_lambda");
  m.w_lambda_0 = std::move(s.reflection_part);
  m.r_lambda = std::move(s.complement);
  m.verdict = m.r_lambda.trivial() && m.walls.empty() ? Verdict::irreducible : Verdict::reducible;
  return m;
}

inline CriterionReport decide_ps_unramified(const LeviContext& ctx, const UnramifiedParam& lambda) {
  DegenerateData d = degenerate_oracle(ctx, lambda);
  CriterionReport rep = decide_gps(ctx, d.nu, d.oracle, d.pairs);
  rep.muller = muller_section(ctx, lambda);
  // Pairings are reported for lambda itself.
  for (std::size_t a = 0; a < ctx.rd.roots.size(); ++a)
    rep.pairings[a] = eval_on_coroot(ctx, lambda, a);
  Clause wc{"wall", rep.muller->walls.empty(), {}};
  for (std::size_t a : rep.muller->walls)
    wc.detail.push_back(root_label(ctx.rd, a));
  rep.reasons.push_back(wc);
  if (rep.muller->verdict != rep.verdict)
    impl::broken("principal-series and generalized verdicts disagree");
  return rep;
}

// Translate a datum by w1 in W_M: nu -> w1.nu, (w, chi) -> (w1 w w1^-1, w1.chi),
// flags carried along alpha -> w1.alpha.
inline std::pair<UnramifiedParam, SigmaOracle> translate_datum(const LeviContext& ctx, ElementId w1,
                                                               const UnramifiedParam& nu,
                                                               const SigmaOracle& oracle) {
  const WeylGroup& w = ctx.weyl();
  const RelativeData& rd = ctx.rd;
  SigmaOracle o;
  for (const StabPair& p : oracle.stab_pairs)
    o.stab_pairs.push_back({w.conjugate(w1, p.w), weyl_act(ctx, w1, p.twist)});
  auto move = [&](const RootFlags& f) {
    RootFlags out;
    for (auto& [a, v] : f)
      out[rd.positive_part(ctx.wm.act_on(w1, a))] = v;
    return out;
  };
  o.mu_zero = move(oracle.mu_zero);
  o.corank_irred = move(oracle.corank_irred);
  return {weyl_act(ctx, w1, nu), std::move(o)};
}

inline TwistedGroup translate_pairs(const LeviContext& ctx, ElementId w1, const TwistedGroup& g) {
  TwistedGroup out;
  out.trivial_twists = g.trivial_twists;
  for (auto& [x, c] : g.twist)
    out.twist.emplace(ctx.weyl().conjugate(w1, x), weyl_act(ctx, w1, c));
  return out;
}

// Product formula: the blocks are pairwise orthogonal, disjoint sets of
// simple roots whose union contains theta. Every reducing co-rank one root
// and every element of R must live inside the blocks.
struct ProductCount {
  std::uint64_t total = 1;
  std::vector<std::string> confinement; // one line per verified condition
};

inline ProductCount product_formula_count(const LeviContext& ctx,
                                          const std::vector<std::vector<int>>& blocks,
                                          const std::vector<std::uint64_t>& counts,
                                          const CriterionReport& rep) {
  const RootSystem& rs = ctx.roots();
  const WeylGroup& w = ctx.weyl();
  if (blocks.empty())
    impl::reject("product formula needs at least one block");
  if (blocks.size() != counts.size())
    impl::reject("one count per block is required");
  std::vector<int> owner(rs.rank(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      impl::reject("block " + std::to_string(b + 1) + " is empty");
    for (int i : blocks[b]) {
      if (i < 0 || i >= rs.rank())
        impl::reject("block index " + std::to_string(i + 1) + " out of range");
      if (owner[i] >= 0)
        impl::reject("simple root " + std::to_string(i + 1) + " lies in two blocks");
      owner[i] = int(b);
    }
  }
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j)
      if (owner[i] >= 0 && owner[j] >= 0 && owner[i] != owner[j] && rs.cartan()(i, j) != 0)
        impl::reject("blocks " + std::to_string(owner[i] + 1) + " and " +
                     std::to_string(owner[j] + 1) + " are not orthogonal");
  for (int i : ctx.levi.theta)
    if (owner[i] < 0)
      impl::reject("simple root " + std::to_string(i + 1) + " of the Levi is outside every block");
  for (std::uint64_t c : counts)
    if (c == 0)
      impl::reject("block counts must be positive");

  ProductCount pc;
  auto block_of_root = [&](std::size_t root) {
    int b = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (rs.root(root)[i] != 0) {
        if (owner[i] < 0 || (b >= 0 && owner[i] != b))
          return -1;
        b = owner[i];
      }
    return b;
  };
  for (std::size_t a : rep.corank_failures) {
    int b = -2;
    for (std::size_t root : ctx.rd.roots[a].fiber) {
      int c = block_of_root(root);
      if (c < 0 || (b >= 0 && c != b)) {
        b = -1;
        break;
      }
      b = c;
    }
    if (b < 0)
      impl::reject("co-rank one reducibility at " + root_label(ctx.rd, a) + " crosses blocks",
                   {root_label(ctx.rd, a)});
    pc.confinement.push_back("corank " + root_label(ctx.rd, a) + " in block " +
                             std::to_string(b + 1));
  }
  for (ElementId x : rep.rgroup.r) {
    for (int i : w.word(x))
      if (owner[i] < 0)
        impl::reject("R-group element " + impl::word_string(w.word(x)) + " leaves the blocks",
                     {impl::word_string(w.word(x))});
    if (x != w.identity())
      pc.confinement.push_back("R element " + impl::word_string(w.word(x)) + " inside blocks");
  }
  for (std::uint64_t c : counts) {
    if (pc.total > UINT64_MAX / c)
      impl::reject("product of block counts overflows");
    pc.total *= c;
  }
  return pc;
}

// Conjectural predictor: with R_sigma = 1, irreducible iff every co-rank
// one induction over all of Phi_M is irreducible.
struct Prediction {
  bool abstained = false;
  std::string reason;
  std::optional<Verdict> verdict;
  Subgroup w_sigma;
  Subgroup r_sigma;
  std::vector<std::size_t> failing;         // positive relative roots with a false flag
  std::vector<std::size_t> failing_outside; // ... that are outside Phi_M^0
  std::vector<std::pair<int, int>> failing_pairs;
};

// Blocks of a type A Levi: maximal runs of consecutive simple roots in theta.
// Returns for each positive relative root the pair (i, j) of blocks it joins.
inline std::vector<std::pair<int, int>> type_a_block_pairs(const LeviContext& ctx) {
  if (ctx.roots().cartan().family != 'A')
    impl::reject("pairwise mode is only available in type A");
  const RelativeData& rd = ctx.rd;
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < rd.num_positive(); ++a) {
    const IVector& c = rd.roots[a].coords;
    int first = -1, last = -1;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) {
        if (first < 0)
          first = int(k);
        last = int(k);
      }
    out.push_back({first, last + 1});
  }
  return out;
}

inline std::size_t type_a_block_count(const LeviContext& ctx) { return ctx.rd.dim() + 1; }

inline Prediction conjecture_predict(const LeviContext& ctx, const UnramifiedParam& nu,
                                     const SigmaOracle& oracle, const TwistedGroup& pairs,
                                     const std::optional<std::vector<std::vector<bool>>>& pairwise) {
  const RelativeData& rd = ctx.rd;
  Prediction p;
  std::vector<ElementId> ws;
  for (auto& [x, c] : pairs.twist)
    if (is_zero(c.q_part) && is_zero(c.t_part))
      ws.push_back(x);
  p.w_sigma = Subgroup(std::move(ws));
  p.r_sigma = r_group(ctx, p.w_sigma, phi_sigma_nu_0(rd, p.w_sigma)).r;
  (void)nu;

  std::vector<std::pair<int, int>> joins;
  if (pairwise) {
    joins = type_a_block_pairs(ctx);
    std::size_t t = type_a_block_count(ctx);
    if (pairwise->size() != t)
      throw SchemaError("pairwise matrix must be " + std::to_string(t) + "x" + std::to_string(t));
    for (auto& row : *pairwise)
      if (row.size() != t)
        throw SchemaError("pairwise matrix must be square");
  }

  if (!p.r_sigma.trivial()) {
    p.abstained = true;
    p.reason = "R_sigma is nontrivial";
    return p;
  }

  std::vector<std::string> uncovered;
  bool all = true;
  if (pairwise) {
    const std::size_t t = pairwise->size();
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j)
        if (i != j && !(*pairwise)[i][j]) {
          all = false;
          p.failing_pairs.push_back({int(i), int(j)});
        }
    for (std::size_t a = 0; a < rd.num_positive(); ++a) {
      auto f = flag_of(oracle.corank_irred, rd, a);
      auto [i, j] = joins[a];
      bool pw = (*pairwise)[i][j] && (*pairwise)[j][i];
      if (f && *f != pw)
        impl::reject("pairwise matrix disagrees with corank_irred at " + root_label(rd, a),
                     {root_label(rd, a)});
      if (!pw) {
        p.failing.push_back(a);
        if (!rd.in_phi0(a))
          p.failing_outside.push_back(a);
      }
    }
  } else {
    for (std::size_t a = 0; a < rd.num_positive(); ++a) {
      auto f = flag_of(oracle.corank_irred, rd, a);
      if (!f) {
        uncovered.push_back(root_label(rd, a));
        continue;
      }
      if (!*f) {
        all = false;
        p.failing.push_back(a);
        if (!rd.in_phi0(a))
          p.failing_outside.push_back(a);
      }
    }
    if (!uncovered.empty())
      throw SchemaError("corank_irred flags missing for relative roots in Phi_M", uncovered);
  }
  p.verdict = all ? Verdict::irreducible : Verdict::reducible;
  return p;
}

} // namespace relweyl

#endif // RELWEYL_CRITERION_HPP_
