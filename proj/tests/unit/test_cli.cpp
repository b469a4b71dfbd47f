#include <gtest/gtest.h>

#include "oracle/muller_bruteforce.hpp"
#include "relweyl/cli.hpp"

using namespace relweyl;
using cli::run;
using cli::RunOptions;

namespace {

cli::RunResult exec(const std::string& mode, const std::string& text, unsigned jobs = 1) {
  RunOptions opt;
  opt.mode = mode;
  opt.jobs = jobs;
  return run(Json::parse(text), opt);
}

} // namespace

TEST(Cli, DecomposeBlockSwap) {
  auto r = exec("decompose", R"({"family":"A","rank":3,"levi":[1,3]})");
  ASSERT_EQ(r.exit_code, 0) << r.envelope.dump(2);
  const Json& res = r.envelope["result"];
  EXPECT_EQ(res["W_M"]["order"], 2);
  EXPECT_EQ(res["W_M_1"]["order"], 1);
  EXPECT_EQ(res["phi_M_0"].size(), res["relative_roots"].size());
  EXPECT_TRUE(r.envelope.contains("conventions"));
  EXPECT_EQ(r.envelope["engine"]["name"], "relweyl");
}

TEST(Cli, DecidePsQuadratic) {
  auto r = exec("decide-ps", R"({"family":"A","rank":1,"character":{"t_part":["1/2"]}})");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.envelope["result"]["verdict"], "reducible");
  EXPECT_EQ(r.envelope["result"]["muller"]["R_lambda"]["order"], 2);
  EXPECT_EQ(r.envelope["result"]["R"]["order"], 1);
}

TEST(Cli, SimpleRootBasis) {
  // rho = alpha_1 + alpha_2 in A2 pairs to 1 with both simple coroots.
  auto r = exec("decide-ps",
                R"({"family":"A","rank":2,"character":{"basis":"simple-root","q_part":["1","1"]}})");
  ASSERT_EQ(r.exit_code, 0) << r.envelope.dump(2);
  for (const auto& p : r.envelope["result"]["pairings"]) {
    if (p["root"] == Json::array({1, 0}) || p["root"] == Json::array({0, 1})) {
      EXPECT_EQ(p["value"]["q_exp"], "1");
    }
  }
  EXPECT_EQ(r.envelope["result"]["verdict"], "reducible");
}

TEST(Cli, MissingCorankFlagsIsSchemaError) {
  auto r = exec("decide-gps", R"({"family":"A","rank":3,"levi":[2],"sigma":{"stab_pairs":[]}})");
  EXPECT_EQ(r.exit_code, cli::schema_error);
  EXPECT_EQ(r.envelope["error"]["kind"], "schema");
  EXPECT_FALSE(r.envelope["error"]["details"].empty());
}

TEST(Cli, GpsWithOracle) {
  auto r = exec("decide-gps", R"({"family":"A","rank":3,"levi":[1,3],
      "sigma":{"stab_pairs":[{"word":[2,1,3,2]}],
               "mu_zero":[{"root":[1],"value":true}],
               "corank_irred":[{"root":[1],"value":true}]}})");
  ASSERT_EQ(r.exit_code, 0) << r.envelope.dump(2);
  EXPECT_EQ(r.envelope["result"]["verdict"], "irreducible");
  EXPECT_EQ(r.envelope["result"]["W_sigma_nu"]["order"], 2);
}

TEST(Cli, StrictSchema) {
  struct Case {
    const char* mode;
    const char* text;
    int code;
  };
  for (Case c : {
           Case{"decompose", R"({"family":"A","rank":3,"colour":1})", cli::schema_error},
           Case{"decompose", R"({"family":"A","rank":3,"levi":[4]})", cli::schema_error},
           Case{"decompose", R"({"family":"A","rank":3,"levi":[0]})", cli::schema_error},
           Case{"decompose", R"({"family":"B","rank":1})", cli::schema_error},
           Case{"decompose", R"({"family":"A"})", cli::schema_error},
           Case{"decide-ps", R"({"family":"A","rank":1,"character":{"q_part":["0.5"]}})", cli::schema_error},
           Case{"decide-ps", R"({"family":"A","rank":1,"character":{"q_part":["1/0"]}})", cli::schema_error},
           Case{"decide-ps", R"({"family":"A","rank":1,"character":{"q_part":[0.5]}})", cli::schema_error},
           Case{"decide-ps", R"({"family":"A","rank":2,"character":{"q_part":["1"]}})", cli::schema_error},
           Case{"decide-ps", R"({"family":"A","rank":1,"mode":"verify"})", cli::schema_error},
           Case{"decide-ps", R"({"family":"B","rank":2,"character":{"basis":"epsilon","q_part":["1","0"]}})",
                cli::schema_error},
           Case{"decide-gps", R"({"family":"A","rank":2,"levi":[1],"sigma":{"stab_pairs":[{"word":[2]}],
                "corank_irred":[]}})", cli::rejection},
           Case{"decide-ps", R"({"family":"A","rank":3,"levi":[1],"character":{"q_part":["0","1","0"]}})",
                cli::rejection},
           Case{"decide-ps", R"({"family":"A","rank":2,"levi":[1],"character":{"q_part":["1","0"]}})",
                cli::rejection},
           Case{"verify", R"({"family":"E","rank":6,"cap":100})", cli::rejection},
       }) {
    auto r = exec(c.mode, c.text);
    EXPECT_EQ(r.exit_code, c.code) << c.text << "\n" << r.envelope.dump(2);
    EXPECT_EQ(r.envelope["status"], "error");
  }
}

TEST(Cli, EchoRoundTrips) {
  const char* text = R"({"family":"A","rank":3,"levi":[1,3],"torus":"simply-connected",
      "character":{"basis":"fundamental-weight","q_part":["0","2/4","0"],"t_part":["0","-1/3","0"]},
      "sigma":{"stab_pairs":[{"word":[2,1,3,2],"twist":{"t_part":["0","1/2","0"]}}],
               "mu_zero":[{"root":[1],"value":false}],
               "corank_irred":[{"root":[1],"value":true}]},
      "blocks":[[1],[3]],"factor_counts":[2,3],"pairwise":[[true,false],[false,true]],
      "grid":{"q_exp":["0","1"],"torsion":["1/2"]},"budget":7,"cap":5000})";
  cli::ProblemSpec s = cli::parse_spec(Json::parse(text));
  Json echo = cli::spec_to_json(s);
  Json again = cli::spec_to_json(cli::parse_spec(echo));
  EXPECT_EQ(echo, again);
  EXPECT_EQ(Json::parse(echo.dump()), echo);
  EXPECT_EQ(echo["character"]["q_part"][1], "1/2");

  auto r = exec("decompose", text);
  ASSERT_EQ(r.exit_code, 0) << r.envelope.dump(2);
  EXPECT_EQ(cli::spec_to_json(cli::parse_spec(r.envelope["input"])), r.envelope["input"]);
}

TEST(Cli, Deterministic) {
  const char* text = R"({"family":"B","rank":2,"grid":{"q_exp":["-1","0","1/2","1"],"torsion":["0","1/2"]}})";
  auto a = exec("atlas", text, 1).envelope.dump(2);
  auto b = exec("atlas", text, 1).envelope.dump(2);
  auto c = exec("atlas", text, 4).envelope.dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Cli, VerifySmallTypes) {
  for (auto [f, r, n] : std::vector<std::tuple<const char*, int, int>>{{"A", 3, 8}, {"B", 3, 8}, {"G", 2, 4}}) {
    Json in{{"family", f}, {"rank", r}};
    auto res = run(in, {"verify", std::nullopt, 1});
    ASSERT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.envelope["result"]["passed"], n);
    EXPECT_EQ(res.envelope["result"]["failed"], 0);
  }
}

TEST(Cli, AtlasA1AgainstBruteForce) {
  auto r = exec("atlas", R"({"family":"A","rank":1,"grid":{"q_exp":[-2,-1,0,1,2],"torsion":["0","1/2"]}})");
  ASSERT_EQ(r.exit_code, 0);
  const Json& rows = r.envelope["result"]["rows"];
  ASSERT_EQ(rows.size(), 10u);
  oracle::Evaluator ev('A', 1);
  for (const auto& row : rows) {
    mpq_class qq(row["q_part"][0].get<std::string>()), tt(row["t_part"][0].get<std::string>());
    auto v = ev.decide({{qq}, {tt}});
    std::string expect = v.wall ? "wall" : v.r_order() > 1 ? "R-group" : "irreducible";
    EXPECT_EQ(row["class"], expect) << row.dump();
    bool is_wall_point = (qq == 1 || qq == -1) && tt == 0;
    EXPECT_EQ(row["class"] == "wall", is_wall_point);
    EXPECT_EQ(row["class"] == "R-group", qq == 0 && tt == mpq_class(1, 2));
  }
}

TEST(Cli, AtlasA2TorsionOnly) {
  auto r = exec("atlas", R"({"family":"A","rank":2,"grid":{"q_exp":[0],"torsion":["0","1/2","1/3"]}})");
  ASSERT_EQ(r.exit_code, 0);
  const Json& rows = r.envelope["result"]["rows"];
  ASSERT_EQ(rows.size(), 9u);
  oracle::Evaluator ev('A', 2);
  std::size_t rgroup_rows = 0;
  for (const auto& row : rows) {
    oracle::Character lam;
    for (int k = 0; k < 2; ++k) {
      lam.q.emplace_back(row["q_part"][k].get<std::string>());
      lam.t.emplace_back(row["t_part"][k].get<std::string>());
    }
    auto v = ev.decide(lam);
    EXPECT_EQ(row["class"] == "R-group", !v.wall && v.stab_order != v.stab0_order) << row.dump();
    rgroup_rows += row["class"] == "R-group";
  }
  EXPECT_GT(rgroup_rows, 0u);
}

TEST(Cli, AtlasEdgeCases) {
  auto empty = exec("atlas", R"({"family":"A","rank":2,"grid":{"q_exp":[],"torsion":["0"]}})");
  ASSERT_EQ(empty.exit_code, 0);
  EXPECT_TRUE(empty.envelope["result"]["rows"].empty());
  auto big = exec("atlas", R"({"family":"B","rank":3,"budget":5,"grid":{"q_exp":[0,1],"torsion":["0"]}})");
  EXPECT_EQ(big.exit_code, cli::rejection);
  auto levi = exec("atlas", R"({"family":"A","rank":2,"levi":[1],"grid":{"q_exp":[0],"torsion":["0"]}})");
  EXPECT_EQ(levi.exit_code, cli::rejection);
  auto csv = cli::render(exec("atlas", R"({"family":"A","rank":1,"grid":{"q_exp":[1],"torsion":["0"]}})").envelope, "csv");
  ASSERT_TRUE(csv);
  EXPECT_NE(csv->find("wall"), std::string::npos);
  EXPECT_FALSE(cli::render(exec("decompose", R"({"family":"A","rank":1})").envelope, "csv"));
}

TEST(Cli, ProductCountAndPredict) {
  auto pc = exec("product-count", R"({"family":"A","rank":3,
      "character":{"q_part":["1","5/7","1/3"]},"blocks":[[1],[3]],"factor_counts":[2,3]})");
  ASSERT_EQ(pc.exit_code, 0) << pc.envelope.dump(2);
  EXPECT_EQ(pc.envelope["result"]["total"], 6);
  auto cross = exec("product-count", R"({"family":"A","rank":3,
      "character":{"q_part":["0","1","0"],"t_part":["1/3","0","1/5"]},"blocks":[[1],[3]],"factor_counts":[2,3]})");
  EXPECT_EQ(cross.exit_code, cli::rejection);

  auto pr = exec("predict", R"({"family":"A","rank":2,"torus":"general-linear",
      "character":{"q_part":["0","1/3","5/2"]},
      "sigma":{"stab_pairs":[],"corank_irred":[{"root":[1,0],"value":true},{"root":[0,1],"value":true},
                                              {"root":[1,1],"value":true}]},
      "pairwise":[[true,true,true],[true,true,true],[true,true,true]]})");
  ASSERT_EQ(pr.exit_code, 0) << pr.envelope.dump(2);
  EXPECT_EQ(pr.envelope["result"]["predicted"], "irreducible");
  EXPECT_EQ(pr.envelope["result"]["theorem_verdict"], "irreducible");
  EXPECT_EQ(pr.envelope["result"]["agrees"], true);
}
