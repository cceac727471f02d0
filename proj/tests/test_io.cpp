#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "suprema/driver.hpp"
#include "support.hpp"

using namespace suprema;
using namespace suprema::test;
using suprema::io::json;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  return json::parse(in);
}

std::string fixture(const std::string& name) { return std::string(SUPREMA_FIXTURES) + "/" + name + ".json"; }

json minimal() {
  return json::parse(R"({
    "alphabet": {"symbols": ["a", "b"], "observable": ["a"]},
    "automata": {
      "plant_closed": {"states": ["s", "t"], "initial": "s", "accepting": ["s", "t"],
                       "transitions": [["s", "a", "t"], ["t", "b", "t"]]},
      "spec": {"words": ["a", "ab"]}
    },
    "solver": "normal"
  })");
}

TEST(Io, PartialTransitionsGoToSink) {
  auto f = io::load_problem(minimal());
  const Lang& l = f.problem.plant_closed;
  EXPECT_TRUE(l.accepts(l.alphabet().parse("abbb")));
  EXPECT_FALSE(l.accepts(l.alphabet().parse("b")));
  EXPECT_EQ(f.problem.plant_marked, l);
  EXPECT_EQ(listing(f.problem.spec), (Strings{"a", "ab"}));
  EXPECT_EQ(f.solver.name, "normal");
}

TEST(Io, RoundTripIsByteIdentical) {
  for (const char* name : {"controllable", "controllable_normal", "trace_closed", "mixed_controllable_normal",
                           "budget_one"}) {
    auto f = io::load_problem(read_json(fixture(name)));
    const std::string once = io::problem_to_json(f).dump(2);
    auto g = io::load_problem(json::parse(once));
    EXPECT_EQ(io::problem_to_json(g).dump(2), once) << name;
    EXPECT_EQ(g.problem.spec, f.problem.spec) << name;
  }
}

TEST(Io, ResultsAreDeterministic) {
  auto f = io::load_problem(read_json(fixture("controllable_normal")));
  EXPECT_EQ(io::result_to_json(io::solve(f), "x").dump(), io::result_to_json(io::solve(f), "x").dump());
}

TEST(Io, MalformedFilesAreRejected) {
  auto expect_bad = [](json j) { EXPECT_THROW(io::load_problem(j), InvalidInput) << j.dump(); };
  json dup = minimal();
  dup["automata"]["plant_closed"]["states"] = {"s", "s"};
  expect_bad(dup);
  json undeclared_symbol = minimal();
  undeclared_symbol["automata"]["plant_closed"]["transitions"].push_back({"s", "z", "t"});
  expect_bad(undeclared_symbol);
  json undeclared_state = minimal();
  undeclared_state["automata"]["plant_closed"]["transitions"].push_back({"s", "b", "nowhere"});
  expect_bad(undeclared_state);
  json nondet = minimal();
  nondet["automata"]["plant_closed"]["transitions"].push_back({"s", "a", "s"});
  expect_bad(nondet);
  json not_closed = minimal();
  not_closed["automata"]["plant_closed"]["accepting"] = {"t"};
  expect_bad(not_closed);
  json bad_solver = minimal();
  bad_solver["solver"] = "fastest";
  expect_bad(bad_solver);
  json no_alphabet = minimal();
  no_alphabet.erase("alphabet");
  expect_bad(no_alphabet);
  json bad_word = minimal();
  bad_word["automata"]["spec"]["words"] = {"ac"};
  expect_bad(bad_word);
  expect_bad(json::array());
}

TEST(Io, DotStyle) {
  auto s = Alphabet::plain({"a", "b"});
  std::string dot = io::to_dot(words(s, {"a", "b"}));
  EXPECT_NE(dot.find("__start [shape=point];"), std::string::npos);
  EXPECT_NE(dot.find("__start -> 0;"), std::string::npos);
  EXPECT_NE(dot.find("[shape=doublecircle]"), std::string::npos);
  EXPECT_NE(dot.find("[label=\"a,b\"]"), std::string::npos);
  std::string empty = io::to_dot(Lang::empty(s));
  EXPECT_EQ(empty.find("->"), empty.find("__start ->"));
  EXPECT_EQ(empty.find("__start ->"), std::string::npos);
}

TEST(Io, OracleQueryAgreesOnFixtures) {
  for (const char* name : {"controllable", "prefix_closed_controllable", "normal", "normal_empty",
                           "controllable_normal", "l_closed", "trace_closed_kept"}) {
    auto f = io::load_problem(read_json(fixture(name)));
    bool agrees = false;
    json j = io::run_oracle(f, 3, agrees);
    EXPECT_TRUE(agrees) << name;
    EXPECT_TRUE(j.contains("engine")) << name;
  }
}

// Command-line behaviour through the built executable.
struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + SUPREMA_CLI + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("synth " + fixture("controllable")).code, 0);
  EXPECT_EQ(cli("synth " + fixture("budget_one")).code, 3);
  EXPECT_EQ(cli("synth /nonexistent.json").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("synth " + fixture("controllable"), "SUPREMA_MAX_STATES=2").code, 4);
  EXPECT_EQ(cli("synth " + fixture("controllable"), "SUPREMA_MAX_ITER=1").code, 3);
}

TEST(Cli, CheckReportsWitness) {
  CliRun r = cli("check " + fixture("check_controllable") + " --property controllable --lang spec");
  EXPECT_EQ(r.code, 1);
  json j = json::parse(r.out);
  EXPECT_FALSE(j["holds"].get<bool>());
  EXPECT_EQ(j["witness"], "u");
  EXPECT_EQ(cli("check " + fixture("controllable") + " --property controllable --lang supremal").code, 0);
  EXPECT_EQ(cli("check " + fixture("controllable") + " --property sparkly").code, 2);
}

TEST(Cli, EnumOfEmptySpec) {
  CliRun r = cli("enum " + fixture("empty_spec") + " --lang spec --bound 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["words"].empty());
}

TEST(Cli, SynthOutputIsDeterministic) {
  CliRun a = cli("--emit both synth " + fixture("controllable_normal"));
  CliRun b = cli("--emit both synth " + fixture("controllable_normal"));
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("digraph"), std::string::npos);
}

TEST(Cli, BudgetExhaustionEmitsPartialChain) {
  CliRun r = cli("synth " + fixture("budget_one"));
  ASSERT_EQ(r.code, 3);
  json j = json::parse(r.out);
  EXPECT_FALSE(j["converged"].get<bool>());
  EXPECT_EQ(j["chain"].size(), 2u);
  EXPECT_TRUE(j.contains("error"));
}

TEST(Cli, AxiomReport) {
  CliRun n = cli("axioms " + fixture("normal") + " --operator normal --samples 20");
  EXPECT_EQ(n.code, 0);
  EXPECT_TRUE(json::parse(n.out)["verdicts"]["clopen"]["passed"].get<bool>());
  CliRun p = cli("axioms " + fixture("normal") + " --operator prefix --samples 20");
  EXPECT_EQ(p.code, 0);
  EXPECT_FALSE(json::parse(p.out)["verdicts"]["clopen"]["passed"].get<bool>());
}

}  // namespace
