// Problem descriptions, dispatch and the report envelope of the command line
// front end. Kept in a header so tests drive the same code path.

#ifndef RELWEYL_CLI_HPP_
#define RELWEYL_CLI_HPP_

#include <algorithm>
#include <exception>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "charlat.hpp"
#include "criterion.hpp"
#include "error.hpp"
#include "levi.hpp"
#include "report.hpp"
#include "rootsys.hpp"

#ifndef RELWEYL_VERSION
#define RELWEYL_VERSION "0.0.0"
#endif

namespace relweyl::cli {

enum ExitCode { ok = 0, schema_error = 2, rejection = 3, invariant_failure = 4 };

inline const std::vector<std::string>& modes() {
  static const std::vector<std::string> m{"decompose", "decide-ps", "decide-gps", "verify",
                                          "atlas",     "product-count", "predict"};
  return m;
}

struct CharacterInput {
  std::string basis;
  QVector q_part;
  QVector t_part;
};

struct PairInput {
  IVector word; // 0-based letters
  std::optional<CharacterInput> twist;
};

struct FlagInput {
  IVector root;
  bool value = false;
};

struct SigmaInput {
  std::vector<PairInput> stab_pairs;
  std::vector<FlagInput> mu_zero;
  std::vector<FlagInput> corank_irred;
};

struct GridInput {
  QVector q_exp;
  QVector torsion;
};

struct ProblemSpec {
  std::string mode;
  char family = 'A';
  int rank = 1;
  std::optional<TorusKind> torus;
  std::optional<std::vector<int>> levi; // 0-based
  std::optional<CharacterInput> character;
  std::optional<SigmaInput> sigma;
  std::optional<std::vector<std::vector<int>>> blocks; // 0-based
  std::optional<std::vector<std::uint64_t>> factor_counts;
  std::optional<std::vector<std::vector<bool>>> pairwise;
  std::optional<GridInput> grid;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> cap;
};

namespace impl {

[[noreturn]] inline void schema(const std::string& msg) { throw SchemaError(msg); }

inline void allow_keys(const Json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object())
    schema(where + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys)
      if (it.key() == k)
        known = true;
    if (!known)
      schema("unknown field '" + it.key() + "' in " + where);
  }
}

inline const Json& required(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key))
    schema("missing field '" + std::string(key) + "' in " + where);
  return j.at(key);
}

inline Rational rational(const Json& j, const std::string& where) {
  if (j.is_number_integer())
    return Rational(j.get<long>());
  if (j.is_string()) {
    auto r = parse_rational(j.get<std::string>());
    if (r)
      return *r;
  }
  schema(where + ": expected an exact rational (string \"p/q\" or integer), got " + j.dump());
}

inline QVector rationals(const Json& j, const std::string& where) {
  if (!j.is_array())
    schema(where + " must be an array");
  QVector v;
  for (const auto& x : j)
    v.push_back(rational(x, where));
  return v;
}

inline long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer())
    schema(where + " must be an integer");
  return j.get<long>();
}

inline IVector integers(const Json& j, const std::string& where) {
  if (!j.is_array())
    schema(where + " must be an array of integers");
  IVector v;
  for (const auto& x : j)
    v.push_back(int(integer(x, where)));
  return v;
}

inline IVector indices(const Json& j, const std::string& where) {
  IVector v = integers(j, where);
  for (auto& x : v)
    --x;
  return v;
}

inline bool boolean(const Json& j, const std::string& where) {
  if (!j.is_boolean())
    schema(where + " must be a boolean");
  return j.get<bool>();
}

inline CharacterInput character(const Json& j, const std::string& where) {
  allow_keys(j, where, {"basis", "q_part", "t_part"});
  CharacterInput c;
  if (j.contains("basis")) {
    if (!j["basis"].is_string())
      schema(where + ".basis must be a string");
    c.basis = j["basis"].get<std::string>();
    if (c.basis != "fundamental-weight" && c.basis != "simple-root" && c.basis != "epsilon")
      schema(where + ".basis must be fundamental-weight, simple-root or epsilon");
  }
  if (j.contains("q_part"))
    c.q_part = rationals(j["q_part"], where + ".q_part");
  if (j.contains("t_part"))
    c.t_part = rationals(j["t_part"], where + ".t_part");
  if (c.q_part.empty() && c.t_part.empty())
    schema(where + " needs q_part or t_part");
  return c;
}

inline std::vector<FlagInput> flags(const Json& j, const std::string& where) {
  if (!j.is_array())
    schema(where + " must be an array");
  std::vector<FlagInput> out;
  for (const auto& f : j) {
    allow_keys(f, where + "[]", {"root", "value"});
    out.push_back({integers(required(f, "root", where), where + ".root"),
                   boolean(required(f, "value", where), where + ".value")});
  }
  return out;
}

inline Json rationals_json(const QVector& v) { return to_json(v); }

inline Json character_echo(const CharacterInput& c) {
  Json j = Json::object();
  if (!c.basis.empty())
    j["basis"] = c.basis;
  if (!c.q_part.empty())
    j["q_part"] = rationals_json(c.q_part);
  if (!c.t_part.empty())
    j["t_part"] = rationals_json(c.t_part);
  return j;
}

inline Json flags_echo(const std::vector<FlagInput>& f) {
  Json a = Json::array();
  for (const auto& x : f)
    a.push_back({{"root", x.root}, {"value", x.value}});
  return a;
}

} // namespace impl

inline ProblemSpec parse_spec(const Json& j) {
  using namespace impl;
  allow_keys(j, "problem", {"mode", "family", "rank", "torus", "levi", "character", "sigma", "blocks",
                            "factor_counts", "pairwise", "grid", "budget", "cap"});
  ProblemSpec s;
  if (j.contains("mode")) {
    if (!j["mode"].is_string())
      schema("mode must be a string");
    s.mode = j["mode"].get<std::string>();
    if (std::find(modes().begin(), modes().end(), s.mode) == modes().end())
      schema("unknown mode '" + s.mode + "'");
  }
  const Json& fam = required(j, "family", "problem");
  if (!fam.is_string() || fam.get<std::string>().size() != 1)
    schema("family must be one of \"A\"..\"G\"");
  s.family = fam.get<std::string>()[0];
  s.rank = int(integer(required(j, "rank", "problem"), "rank"));
  if (!valid_type(s.family, s.rank))
    schema("invalid type " + std::string(1, s.family) + std::to_string(s.rank));
  if (j.contains("torus")) {
    if (j["torus"] == "simply-connected")
      s.torus = TorusKind::simply_connected;
    else if (j["torus"] == "general-linear")
      s.torus = TorusKind::general_linear;
    else
      schema("torus must be \"simply-connected\" or \"general-linear\"");
  }
  if (j.contains("levi")) {
    s.levi = indices(j["levi"], "levi");
    for (int i : *s.levi)
      if (i < 0 || i >= s.rank)
        schema("levi index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(s.rank));
  }
  if (j.contains("character"))
    s.character = character(j["character"], "character");
  if (j.contains("sigma")) {
    const Json& g = j["sigma"];
    allow_keys(g, "sigma", {"stab_pairs", "mu_zero", "corank_irred"});
    SigmaInput si;
    const Json& pairs = required(g, "stab_pairs", "sigma");
    if (!pairs.is_array())
      schema("sigma.stab_pairs must be an array");
    for (const auto& p : pairs) {
      allow_keys(p, "sigma.stab_pairs[]", {"word", "twist"});
      PairInput pi;
      pi.word = indices(required(p, "word", "sigma.stab_pairs[]"), "sigma.stab_pairs[].word");
      for (int i : pi.word)
        if (i < 0 || i >= s.rank)
          schema("stab_pairs word letter " + std::to_string(i + 1) + " out of range");
      if (p.contains("twist"))
        pi.twist = character(p["twist"], "sigma.stab_pairs[].twist");
      si.stab_pairs.push_back(std::move(pi));
    }
    if (g.contains("mu_zero"))
      si.mu_zero = flags(g["mu_zero"], "sigma.mu_zero");
    if (g.contains("corank_irred"))
      si.corank_irred = flags(g["corank_irred"], "sigma.corank_irred");
    s.sigma = std::move(si);
  }
  if (j.contains("blocks")) {
    if (!j["blocks"].is_array())
      schema("blocks must be an array of arrays");
    std::vector<std::vector<int>> b;
    for (const auto& x : j["blocks"])
      b.push_back(indices(x, "blocks[]"));
    s.blocks = b;
  }
  if (j.contains("factor_counts")) {
    std::vector<std::uint64_t> c;
    if (!j["factor_counts"].is_array())
      schema("factor_counts must be an array");
    for (const auto& x : j["factor_counts"]) {
      long v = integer(x, "factor_counts[]");
      if (v <= 0)
        schema("factor_counts entries must be positive");
      c.push_back(std::uint64_t(v));
    }
    s.factor_counts = c;
  }
  if (j.contains("pairwise")) {
    if (!j["pairwise"].is_array())
      schema("pairwise must be a matrix of booleans");
    std::vector<std::vector<bool>> m;
    for (const auto& row : j["pairwise"]) {
      if (!row.is_array())
        schema("pairwise must be a matrix of booleans");
      std::vector<bool> r;
      for (const auto& x : row)
        r.push_back(boolean(x, "pairwise[][]"));
      m.push_back(r);
    }
    s.pairwise = m;
  }
  if (j.contains("grid")) {
    allow_keys(j["grid"], "grid", {"q_exp", "torsion"});
    GridInput gi;
    gi.q_exp = rationals(required(j["grid"], "q_exp", "grid"), "grid.q_exp");
    gi.torsion = rationals(required(j["grid"], "torsion", "grid"), "grid.torsion");
    s.grid = gi;
  }
  if (j.contains("budget")) {
    long b = integer(j["budget"], "budget");
    if (b < 0)
      schema("budget must be nonnegative");
    s.budget = std::uint64_t(b);
  }
  if (j.contains("cap")) {
    long c = integer(j["cap"], "cap");
    if (c <= 0)
      schema("cap must be positive");
    s.cap = std::uint64_t(c);
  }
  return s;
}

// Canonical form of a parsed spec; parse_spec(spec_to_json(s)) == s.
inline Json spec_to_json(const ProblemSpec& s) {
  using namespace impl;
  Json j{{"family", std::string(1, s.family)}, {"rank", s.rank}};
  if (!s.mode.empty())
    j["mode"] = s.mode;
  if (s.torus)
    j["torus"] = to_string(*s.torus);
  if (s.levi)
    j["levi"] = one_based(*s.levi);
  if (s.character)
    j["character"] = character_echo(*s.character);
  if (s.sigma) {
    Json pairs = Json::array();
    for (const auto& p : s.sigma->stab_pairs) {
      Json pj{{"word", one_based(p.word)}};
      if (p.twist)
        pj["twist"] = character_echo(*p.twist);
      pairs.push_back(pj);
    }
    j["sigma"] = {{"stab_pairs", pairs}};
    if (!s.sigma->mu_zero.empty())
      j["sigma"]["mu_zero"] = flags_echo(s.sigma->mu_zero);
    if (!s.sigma->corank_irred.empty())
      j["sigma"]["corank_irred"] = flags_echo(s.sigma->corank_irred);
  }
  if (s.blocks) {
    Json b = Json::array();
    for (const auto& x : *s.blocks)
      b.push_back(one_based(x));
    j["blocks"] = b;
  }
  if (s.factor_counts)
    j["factor_counts"] = *s.factor_counts;
  if (s.pairwise)
    j["pairwise"] = *s.pairwise;
  if (s.grid)
    j["grid"] = {{"q_exp", rationals_json(s.grid->q_exp)}, {"torsion", rationals_json(s.grid->torsion)}};
  if (s.budget)
    j["budget"] = *s.budget;
  if (s.cap)
    j["cap"] = *s.cap;
  return j;
}

struct RunOptions {
  std::string mode; // the verb; may be empty when the spec names the mode
  std::optional<std::uint64_t> cap;
  unsigned jobs = 1;
};

struct RunResult {
  int exit_code = ok;
  Json envelope;
};

inline Json conventions() {
  return {{"cartan", "A(i,j) = <alpha_j, alpha_i^vee>; Bourbaki numbering; in G2 alpha_2 is short"},
          {"indices", "simple roots and word letters are 1-based"},
          {"relative_roots", "coordinates on the simple roots outside the Levi subset"},
          {"coroot", "relative coroot 2 alpha / (alpha, alpha) under the invariant form"},
          {"character", "values q^r exp(2 pi i s) on the cocharacter lattice basis; s read mod 1"},
          {"lattice", "simply-connected: fundamental-weight coordinates; general-linear: epsilon "
                      "coordinates"}};
}

namespace impl {

inline QVector pad(QVector v, std::size_t n, const std::string& where) {
  if (v.empty())
    v.assign(n, Rational(0));
  if (v.size() != n)
    schema(where + " needs " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  return v;
}

inline UnramifiedParam to_param(const LeviContext& ctx, const CharacterInput& c,
                                const std::string& where) {
  const CharacterLattice& lat = ctx.lattice;
  const bool sc = lat.kind() == TorusKind::simply_connected;
  std::string basis = c.basis.empty() ? (sc ? "fundamental-weight" : "epsilon") : c.basis;
  QVector q, t;
  if (basis == "simple-root") {
    std::size_t r = std::size_t(ctx.roots().rank());
    q = lat.from_simple_root(pad(c.q_part, r, where + ".q_part"));
    t = lat.from_simple_root(pad(c.t_part, r, where + ".t_part"));
  } else {
    if ((basis == "epsilon") == sc)
      schema(where + ": basis " + basis + " does not match the " + to_string(lat.kind()) + " torus");
    q = pad(c.q_part, lat.dim(), where + ".q_part");
    t = pad(c.t_part, lat.dim(), where + ".t_part");
  }
  return make_unramified(ctx, std::move(q), std::move(t));
}

inline std::size_t relative_root(const LeviContext& ctx, const IVector& coords,
                                 const std::string& where) {
  auto a = ctx.rd.find(coords);
  if (!a) {
    std::string s;
    for (std::size_t k = 0; k < coords.size(); ++k)
      s += (k ? "," : "") + std::to_string(coords[k]);
    throw SchemaError(where + ": (" + s + ") is not a relative root of the Levi subgroup");
  }
  return ctx.rd.positive_part(*a);
}

inline RootFlags to_flags(const LeviContext& ctx, const std::vector<FlagInput>& in,
                          const std::string& where) {
  RootFlags out;
  for (const auto& f : in) {
    std::size_t a = relative_root(ctx, f.root, where);
    auto [it, fresh] = out.emplace(a, f.value);
    if (!fresh && it->second != f.value)
      throw SchemaError(where + ": conflicting values for " + root_label(ctx.rd, a));
  }
  return out;
}

inline SigmaOracle to_oracle(const LeviContext& ctx, const SigmaInput& in) {
  SigmaOracle o;
  for (const auto& p : in.stab_pairs) {
    StabPair sp{ctx.weyl().from_word(p.word), trivial_character(ctx)};
    if (!ctx.wm.contains(sp.w))
      relweyl::impl::reject("stab_pairs word " + relweyl::impl::word_string(p.word) +
                            " does not normalize the Levi subgroup");
    if (p.twist)
      sp.twist = to_param(ctx, *p.twist, "twist");
    o.stab_pairs.push_back(std::move(sp));
  }
  o.mu_zero = to_flags(ctx, in.mu_zero, "sigma.mu_zero");
  o.corank_irred = to_flags(ctx, in.corank_irred, "sigma.corank_irred");
  return o;
}

inline Json verify_rank(const Ambient& amb, bool& all_ok) {
  const WeylGroup& w = *amb.weyl;
  const RootSystem& rs = *amb.roots;
  const int r = rs.rank();
  Json rows = Json::array();
  Json fixtures = Json::array();
  std::size_t passed = 0, failed = 0;
  bool order_ok = w.order() == weyl_order_formula(rs.cartan().family, r);
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> theta;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i))
        theta.push_back(i);
    Json row{{"theta", one_based(theta)}};
    std::vector<std::string> failures;
    try {
      LeviContext ctx = make_context(amb, TorusKind::simply_connected, theta);
      row["W_M"] = ctx.wm.reps.order();
      row["W_M_0"] = ctx.wm.small.order();
      row["W_M_1"] = ctx.wm.complement.order();
      row["phi_M"] = ctx.rd.num_positive();
      row["phi_M_0"] = ctx.rd.phi0.size() / 2;
      if (!ctx.wm.split.ok())
        failures.push_back("W_M does not split");
      for (auto& f : check_subroot_system(ctx.rd, ctx.wm))
        failures.push_back(f);
      for (std::size_t a : ctx.rd.phi0)
        if (ctx.rd.is_relative_simple(a) && relative_reflection_simple(ctx.rd, a) != ctx.rd.reflection.at(a))
          failures.push_back("omega_alpha differs from w_alpha at " + root_label(ctx.rd, a));
      std::vector<ElementId> gens;
      for (int i : theta)
        gens.push_back(w.from_word({i}));
      Subgroup para = generate_subgroup(w, gens);
      for (ElementId x : ctx.wm.reps)
        for (ElementId u : para)
          if (u != w.identity() && w.length(w.multiply(x, u)) <= w.length(x)) {
            failures.push_back("representative " + relweyl::impl::word_string(w.word(x)) +
                               " is not the unique minimal element of its coset");
            break;
          }
      if (ctx.wm.complement.order() > 1) {
        Json words = Json::array();
        for (ElementId x : ctx.wm.complement)
          words.push_back(word_json(w, x));
        fixtures.push_back({{"theta", one_based(theta)}, {"W_M_1", words}});
      }
    } catch (const Error& e) {
      failures.push_back(e.what());
    }
    row["ok"] = failures.empty();
    row["failures"] = failures;
    (failures.empty() ? passed : failed)++;
    rows.push_back(row);
  }
  all_ok = failed == 0 && order_ok;
  return {{"type", rs.cartan().name()},
          {"weyl_order", w.order()},
          {"order_matches_formula", order_ok},
          {"subsets", rows.size()},
          {"passed", passed},
          {"failed", failed},
          {"levis", rows},
          {"fixtures_W_M_1_nontrivial", fixtures}};
}

inline std::string atlas_class(const CriterionReport& rep) {
  if (!rep.muller->walls.empty())
    return "wall";
  if (!rep.muller->r_lambda.trivial())
    return "R-group";
  return "irreducible";
}

inline Json atlas(const LeviContext& ctx, const GridInput& grid, std::uint64_t budget,
                  unsigned jobs) {
  const std::size_t m = ctx.lattice.dim();
  std::vector<std::pair<Rational, Rational>> values;
  for (const auto& q : grid.q_exp)
    for (const auto& t : grid.torsion)
      values.push_back({q, mod_one(t)});
  std::uint64_t count = values.empty() ? 0 : 1;
  for (std::size_t k = 0; k < m && count; ++k) {
    if (count > budget / values.size() + 1)
      relweyl::impl::reject("atlas grid exceeds the budget of " + std::to_string(budget) + " points");
    count *= values.size();
  }
  if (count > budget)
    relweyl::impl::reject("atlas grid has " + std::to_string(count) + " points, budget is " +
                          std::to_string(budget));
  std::vector<Json> rows(count);
  auto eval = [&](std::uint64_t idx) {
    QVector q(m), t(m);
    std::uint64_t rest = idx;
    for (std::size_t k = m; k-- > 0;) {
      auto& v = values[rest % values.size()];
      rest /= values.size();
      q[k] = v.first;
      t[k] = v.second;
    }
    UnramifiedParam lam = make_unramified(ctx, q, t);
    CriterionReport rep = decide_ps_unramified(ctx, lam);
    return Json{{"index", idx},
                {"q_part", to_json(lam.q_part)},
                {"t_part", to_json(lam.t_part)},
                {"verdict", to_string(rep.verdict)},
                {"class", atlas_class(rep)},
                {"W_lambda", rep.muller->w_lambda.order()},
                {"R_lambda", rep.muller->r_lambda.order()},
                {"R_sigma_nu", rep.rgroup.r.order()},
                {"walls", rep.muller->walls.size()}};
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, unsigned(std::max<std::uint64_t>(count, 1))));
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j)
    pool.emplace_back([&, j] {
      try {
        for (std::uint64_t i = j; i < count; i += jobs)
          rows[i] = eval(i);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  for (auto& th : pool)
    th.join();
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  Json table = Json::array();
  for (auto& r : rows)
    table.push_back(std::move(r));
  return {{"type", ctx.roots().cartan().name()}, {"points", count}, {"rows", table}};
}

} // namespace impl

inline RunResult run(const Json& input, const RunOptions& opt) {
  RunResult res;
  Json env{{"engine", {{"name", "relweyl"}, {"version", RELWEYL_VERSION}}},
           {"conventions", conventions()},
           {"input", input},
           {"status", "ok"}};
  try {
    ProblemSpec spec = parse_spec(input);
    std::string mode = opt.mode.empty() ? spec.mode : opt.mode;
    if (mode.empty())
      throw SchemaError("no mode given on the command line or in the problem");
    if (!spec.mode.empty() && spec.mode != mode)
      throw SchemaError("problem mode '" + spec.mode + "' differs from requested '" + mode + "'");
    if (std::find(modes().begin(), modes().end(), mode) == modes().end())
      throw SchemaError("unknown mode '" + mode + "'");
    spec.mode = mode;
    env["input"] = spec_to_json(spec);

    std::uint64_t cap = opt.cap ? *opt.cap : spec.cap ? *spec.cap : default_cap();
    Ambient amb = make_ambient(spec.family, spec.rank, cap);
    TorusKind torus = spec.torus.value_or(TorusKind::simply_connected);
    std::vector<int> theta = spec.levi.value_or(std::vector<int>{});

    if (mode == "verify") {
      bool all_ok = true;
      env["result"] = impl::verify_rank(amb, all_ok);
      if (!all_ok) {
        env["status"] = "fail";
        res.exit_code = invariant_failure;
      }
      res.envelope = env;
      return res;
    }

    LeviContext ctx = make_context(amb, torus, theta);
    UnramifiedParam nu = spec.character ? impl::to_param(ctx, *spec.character, "character")
                                        : trivial_character(ctx);

    // sigma from the input, or the principal-series model when theta is empty.
    auto gps_inputs = [&]() -> std::pair<SigmaOracle, TwistedGroup> {
      if (spec.sigma) {
        SigmaOracle o = impl::to_oracle(ctx, *spec.sigma);
        TwistedGroup g = close_stab_pairs(ctx, o.stab_pairs);
        return {o, g};
      }
      if (!theta.empty())
        throw SchemaError("sigma is required when the Levi subset is nonempty");
      DegenerateData d = degenerate_oracle(ctx, nu);
      nu = d.nu;
      return {d.oracle, d.pairs};
    };

    if (mode == "decompose") {
      env["result"] = decomposition_json(ctx);
    } else if (mode == "decide-ps") {
      if (spec.sigma)
        throw SchemaError("decide-ps takes no sigma");
      CriterionReport rep = decide_ps_unramified(ctx, nu);
      env["result"] = report_json(ctx, rep);
    } else if (mode == "decide-gps") {
      auto [o, g] = gps_inputs();
      env["result"] = report_json(ctx, decide_gps(ctx, nu, o, g));
    } else if (mode == "atlas") {
      if (!theta.empty())
        relweyl::impl::reject("atlas runs on the principal series only (empty Levi subset)");
      if (!spec.grid)
        throw SchemaError("atlas needs a grid");
      env["result"] = impl::atlas(ctx, *spec.grid, spec.budget.value_or(100000), opt.jobs);
    } else if (mode == "product-count") {
      if (!spec.blocks || !spec.factor_counts)
        throw SchemaError("product-count needs blocks and factor_counts");
      auto [o, g] = gps_inputs();
      CriterionReport rep = decide_gps(ctx, nu, o, g);
      ProductCount pc = product_formula_count(ctx, *spec.blocks, *spec.factor_counts, rep);
      env["result"] = {{"total", pc.total},
                       {"confinement", pc.confinement},
                       {"verdict", to_string(rep.verdict)},
                       {"R", group_json(ctx.weyl(), rep.rgroup.r)}};
    } else if (mode == "predict") {
      auto [o, g] = gps_inputs();
      Prediction p = conjecture_predict(ctx, nu, o, g, spec.pairwise);
      Json j = prediction_json(ctx, p);
      bool covered = true;
      for (std::size_t a : ctx.rd.phi0)
        if (!flag_of(o.corank_irred, ctx.rd, a))
          covered = false;
      if (covered) {
        CriterionReport rep = decide_gps(ctx, nu, o, g);
        j["theorem_verdict"] = to_string(rep.verdict);
        j["regular"] = rep.stab.trivial();
        if (p.verdict)
          j["agrees"] = *p.verdict == rep.verdict;
      } else {
        j["theorem_verdict"] = nullptr;
      }
      env["result"] = j;
    }
  } catch (const SchemaError& e) {
    res.exit_code = schema_error;
    env["status"] = "error";
    env["error"] = {{"kind", "schema"}, {"message", e.what()}, {"details", e.details()}};
  } catch (const Rejection& e) {
    res.exit_code = rejection;
    env["status"] = "error";
    env["error"] = {{"kind", "rejection"}, {"message", e.what()}, {"details", e.details()}};
  } catch (const InvariantViolation& e) {
    res.exit_code = invariant_failure;
    env["status"] = "error";
    env["error"] = {{"kind", "invariant"}, {"message", e.what()}, {"details", e.details()}};
  } catch (const Json::exception& e) {
    res.exit_code = schema_error;
    env["status"] = "error";
    env["error"] = {{"kind", "schema"}, {"message", e.what()}, {"details", Json::array()}};
  }
  res.envelope = env;
  return res;
}

inline std::string render_csv(const Json& env) {
  std::ostringstream o;
  o << "index,q_part,t_part,verdict,class,W_lambda,R_lambda,R_sigma_nu,walls\n";
  auto vec = [](const Json& a) {
    std::string s;
    for (std::size_t k = 0; k < a.size(); ++k)
      s += (k ? " " : "") + a[k].get<std::string>();
    return s;
  };
  for (const auto& r : env["result"]["rows"])
    o << r["index"] << "," << vec(r["q_part"]) << "," << vec(r["t_part"]) << ","
      << r["verdict"].get<std::string>() << "," << r["class"].get<std::string>() << ","
      << r["W_lambda"] << "," << r["R_lambda"] << "," << r["R_sigma_nu"] << "," << r["walls"] << "\n";
  return o.str();
}

inline std::string render_text(const Json& env) {
  std::ostringstream o;
  if (env["status"] == "error") {
    o << "error (" << env["error"]["kind"].get<std::string>()
      << "): " << env["error"]["message"].get<std::string>() << "\n";
    for (const auto& d : env["error"]["details"])
      o << "  " << d.get<std::string>() << "\n";
    return o.str();
  }
  const Json& in = env["input"];
  const Json& r = env["result"];
  std::string mode = in["mode"];
  if (mode == "decompose")
    return decomposition_text(r);
  if (mode == "decide-ps" || mode == "decide-gps")
    return report_text(r);
  if (mode == "verify") {
    o << r["type"].get<std::string>() << ": |W| = " << r["weyl_order"] << ", " << r["passed"] << "/"
      << r["subsets"] << " Levi subsets pass\n";
    for (const auto& row : r["levis"]) {
      o << "  theta=" << row["theta"].dump() << (row["ok"].get<bool>() ? " ok" : " FAIL");
      if (row.contains("W_M"))
        o << "  |W_M|=" << row["W_M"] << " |W_M^0|=" << row["W_M_0"] << " |W_M^1|=" << row["W_M_1"];
      o << "\n";
      for (const auto& f : row["failures"])
        o << "    " << f.get<std::string>() << "\n";
    }
    return o.str();
  }
  if (mode == "atlas") {
    for (const auto& row : r["rows"])
      o << row["q_part"].dump() << " " << row["t_part"].dump() << "  " << row["class"].get<std::string>()
        << "\n";
    return o.str();
  }
  if (mode == "product-count") {
    o << "total = " << r["total"] << "  (verdict " << r["verdict"].get<std::string>() << ")\n";
    for (const auto& c : r["confinement"])
      o << "  " << c.get<std::string>() << "\n";
    return o.str();
  }
  if (mode == "predict") {
    if (r["abstained"].get<bool>())
      o << "abstains: " << r["reason"].get<std::string>() << "\n";
    else
      o << "predicted: " << r["predicted"].get<std::string>() << "\n";
    if (!r["theorem_verdict"].is_null())
      o << "theorem verdict: " << r["theorem_verdict"].get<std::string>() << "\n";
    return o.str();
  }
  return env.dump(2) + "\n";
}

// Renders the envelope; CSV is only defined for atlas results.
inline std::optional<std::string> render(const Json& env, const std::string& format) {
  if (format == "json")
    return env.dump(2) + "\n";
  if (format == "text")
    return render_text(env);
  if (format == "csv") {
    if (env["status"] != "ok" || env["input"].value("mode", "") != "atlas")
      return std::nullopt;
    return render_csv(env);
  }
  return std::nullopt;
}

} // namespace relweyl::cli

#endif // RELWEYL_CLI_HPP_
