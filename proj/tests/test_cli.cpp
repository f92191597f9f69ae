#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "nil2/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = nil2::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Run run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  return run(std::move(args));
}

}  // namespace

TEST_CASE("closed on builtins") {
  auto r = run_json({"closed", "builtins", "--group", "cyclic(6)"});
  REQUIRE(r.code == 0);
  auto j = r.doc();
  CHECK(j["schema"] == "nil2-report/1");
  CHECK(j["command"] == "closed");
  CHECK(j["closure"]["verdict"] == "Closed");
  CHECK(j["closure"]["method"] == "cyclic");

  auto f = run_json({"closed", "builtins", "--group", "free_abelian(2)"}).doc();
  CHECK(f["closure"]["verdict"] == "NotClosed");
  CHECK(f["closure"]["certificate"]["n"] == 2);
  CHECK(f["closure"]["certificate"]["x"] == "x1");
  CHECK(f["closure"]["certificate"]["y"] == "x2");
}

TEST_CASE("dominion query") {
  auto j = run_json({"dominion", "builtins", "--group", "paper.zsquared", "--subgroup",
                     "x^2; y^2", "--contains", "[x,y]^2"})
               .doc();
  CHECK(j["query"]["in_dominion"] == true);
  CHECK(j["query"]["in_subgroup"] == false);
  CHECK(j["gap"]["free_rank"] == 0);
  CHECK(j["gap"]["invariant_factors"] == json::array({2}));
  CHECK(j["closed_in_group"] == false);
}

TEST_CASE("info, amalbase, roots and witness") {
  auto i = run_json({"info", "builtins", "--group", "paper.counterextofour"}).doc();
  CHECK(i["group"]["order"] == 64);
  CHECK(i["group"]["exponent"] == 4);
  CHECK(i["abelianization"]["invariant_factors"] == json::array({2, 2, 4}));
  CHECK(i["center_mod_commutator"]["invariant_factors"].size() <= 1);

  auto a = run_json({"amalbase", "builtins", "--group", "dihedral8"}).doc();
  CHECK(a["amalgamation_base"]["base"] == "yes");

  auto q = run_json({"roots", "builtins", "--group", "quaternion8", "--elements", "i; j",
                     "--orders", "2,2"})
               .doc();
  CHECK(q["possible"] == false);
  CHECK(q.contains("refutation"));
  auto z = run_json({"roots", "builtins", "--group", "cyclic(0)", "--elements", "x",
                     "--orders", "5"})
               .doc();
  CHECK(z["possible"] == true);

  auto w = run_json({"witness", "builtins", "--group", "free_abelian(2)", "--x", "x1", "--y",
                     "x2", "--n", "2"})
               .doc();
  CHECK(w["extension"]["embeds"] == "yes");
  CHECK(w["extension"]["in_dominion"] == true);
  CHECK(w["extension"]["in_group"] == false);
  CHECK(w["extension"]["certifies_nonclosure"] == true);
  CHECK(w["conditions"]["condtwo"].is_null());
}

TEST_CASE("certificates printed by closed feed back into witness") {
  for (const char* g : {"abelian(2,4)", "paper.counterextofour", "paper.generalized(3,2)",
                        "abelian(0,2)"}) {
    auto c = run_json({"closed", "builtins", "--group", g}).doc()["closure"];
    REQUIRE(c["verdict"] == "NotClosed");
    const auto& cert = c["certificate"];
    auto w = run_json({"witness", "builtins", "--group", g, "--x", cert["x"], "--y",
                       cert["y"], "--n", std::to_string(cert["n"].get<long>())})
                 .doc();
    INFO(g);
    CHECK(w["extension"]["certifies_nonclosure"] == true);
  }
}

TEST_CASE("group files on the command line") {
  const std::string path = "test_cli_groups.g";
  {
    std::ofstream out(path);
    out << "group D { gens: a b rels: a^4 b^2 [a,b]*a^-2 }\n"
        << "group Z2 = free_abelian(2)\n";
  }
  auto d = run_json({"info", path, "--group", "D"}).doc();
  CHECK(d["group"]["order"] == 8);
  CHECK(d["group"]["name"] == "D");
  auto z = run_json({"closed", path, "--group", "Z2"}).doc();
  CHECK(z["closure"]["verdict"] == "NotClosed");
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"closed", "builtins"}).code == 2);
  CHECK(run({"closed", "/nonexistent.g", "--group", "G"}).code == 2);
  CHECK(run({"closed", "builtins", "--group", "nosuch(1)"}).code == 2);
  CHECK(run({"closed", "builtins", "--group", "cyclic(2)", "--format", "xml"}).code == 2);

  auto bad = run({"dominion", "builtins", "--group", "paper.zsquared", "--subgroup", "x^2; q"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("--subgroup:1:6") != std::string::npos);

  const std::string path = "test_cli_bad.g";
  {
    std::ofstream out(path);
    out << "group A { gens: a\n  rels: a^ }\n";
  }
  auto pe = run({"info", path, "--group", "A"});
  CHECK(pe.code == 2);
  CHECK(pe.err.find(path + ":2:") != std::string::npos);
  std::remove(path.c_str());

  CHECK(run({"roots", "builtins", "--group", "cyclic(4)", "--elements", "x", "--orders",
             "0"}).code == 2);
  CHECK(run({"roots", "builtins", "--group", "cyclic(4)", "--elements", "x", "--orders",
             "2,3"}).code == 2);
  CHECK(run({"witness", "builtins", "--group", "cyclic(4)", "--x", "x", "--y", "x", "--n",
             "0"}).code == 2);

  // Unknown search results: 0 normally, 3 with --strict.
  auto u = run_json({"closed", "builtins", "--group", "paper.zpluscyclic(2,1)"});
  CHECK(u.code == 0);
  CHECK(u.doc()["closure"]["verdict"] == "Unknown");
  CHECK(u.doc()["closure"].contains("budget"));
  CHECK(run({"--strict", "closed", "builtins", "--group", "paper.zpluscyclic(2,1)"}).code == 3);
  CHECK(run({"closed", "builtins", "--group", "paper.zpluscyclic(2,1)", "--strict"}).code == 3);
  CHECK(run({"closed", "builtins", "--group", "cyclic(5)", "--strict"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("NIL2_BUDGET") {
  setenv("NIL2_BUDGET", "1", 1);
  auto j = run_json({"closed", "builtins", "--group", "paper.zpluscyclic(2,1)"}).doc();
  CHECK(j["closure"]["budget"]["radius"] == 1);
  setenv("NIL2_BUDGET", "junk", 1);
  CHECK(run({"closed", "builtins", "--group", "paper.zpluscyclic(2,1)"}).code == 2);
  unsetenv("NIL2_BUDGET");
}

TEST_CASE("json reports are deterministic and text reports carry timing") {
  const std::vector<std::string> args = {"closed", "builtins", "--group",
                                         "paper.counterextofour", "--format", "json"};
  auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  CHECK(a.out.find("time") == std::string::npos);
  auto t = run({"closed", "builtins", "--group", "paper.counterextofour"});
  CHECK(t.out.find("verdict: NotClosed") != std::string::npos);
  CHECK(t.out.find("time: ") != std::string::npos);
}

TEST_CASE("corpus") {
  auto r = run_json({"corpus"});
  CHECK(r.code == 0);
  auto j = r.doc();
  CHECK(j["passed"] == j["total"]);
  CHECK(j["total"].get<int>() >= 40);
  std::vector<std::string> names;
  for (const auto& c : j["checks"]) names.push_back(c["name"]);
  CHECK(std::is_sorted(names.begin(), names.end()));
  auto t = run({"corpus"});
  CHECK(t.code == 0);
  CHECK(t.out.find("FAIL") == std::string::npos);
}
