// suprema: command-line front end for the supremal sublanguage solvers.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "suprema/driver.hpp"
#include "suprema/sampling.hpp"

using namespace suprema;
using suprema::io::json;

namespace {

enum Exit : int {
  kOk = 0,
  kViolation = 1,
  kMalformed = 2,
  kNonConvergence = 3,
  kStateBudget = 4,
  kInternal = 5,
};

struct Output {
  std::string emit = "json";
  std::string stem;

  void write(const json& record, const std::string& dot) const {
    const std::string text = record.dump(2) + "\n";
    const bool want_json = emit != "dot", want_dot = emit != "json" && !dot.empty();
    if (!stem.empty()) {
      if (want_json) std::ofstream(stem + ".json") << text;
      if (want_dot) std::ofstream(stem + ".dot") << dot;
      return;
    }
    if (want_json) std::cout << text;
    if (want_dot) std::cout << dot;
  }
};

std::optional<std::size_t> env_number(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0') throw InvalidInput(std::string(name) + " must be a natural number");
  return static_cast<std::size_t>(n);
}

io::ProblemFile load(const std::string& path, std::optional<std::size_t> max_iter) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  io::ProblemFile f = io::load_problem(doc);
  auto& opts = f.solver.options;
  if (auto env = env_number("SUPREMA_MAX_ITER")) {
    if (!f.solver.explicit_options.contains("max_iterations")) opts.max_iterations = *env;
    if (!f.solver.explicit_options.contains("max_inner_iterations")) opts.max_inner_iterations = *env;
  }
  if (max_iter) opts.max_iterations = opts.max_inner_iterations = *max_iter;
  return f;
}

const Lang& pick_lang(const SynthesisProblem& p, const std::string& which) {
  if (which == "spec") return p.spec;
  if (which == "plant_closed") return p.plant_closed;
  if (which == "plant_marked") return p.plant_marked;
  throw InvalidInput("unknown language '" + which + "'");
}

Lang selected(const io::ProblemFile& f, const std::string& which) {
  if (which == "supremal") return io::solve(f).supremal;
  return pick_lang(f.problem, which);
}

int synth(const io::ProblemFile& f, const Output& out) {
  try {
    SolverResult r = io::solve(f);
    out.write(io::result_to_json(r, f.solver.name), io::to_dot(r.supremal));
    return kOk;
  } catch (const NonConvergence& e) {
    json record = io::result_to_json(e.partial(), f.solver.name);
    record["error"] = e.what();
    out.write(record, io::to_dot(e.partial().supremal));
    std::cerr << "suprema: " << e.what() << "\n";
    return kNonConvergence;
  }
}

int check(const io::ProblemFile& f, const std::string& property, const std::string& which,
          std::optional<std::size_t> bound, const Output& out) {
  auto prop = parse_property(property);
  if (!prop) throw InvalidInput("unknown property '" + property + "'");
  Lang k = selected(f, which);
  const Alphabet& sigma = *f.problem.alphabet;
  json record{{"property", property}, {"lang", which}};
  bool holds;
  std::optional<Word> witness;
  if (bound) {
    if (auto n = k.max_length(); !k.is_finite() || n.value_or(0) > *bound)
      throw InvalidInput("the language does not fit within the bound");
    auto c = oracle::check_definition(enumerate_set(k, *bound), f.problem, *prop, *bound);
    holds = c.holds;
    witness = c.witness;
    record["bound"] = *bound;
  } else {
    auto c = check_property(k, f.problem, *prop);
    holds = c.holds;
    witness = c.witness;
  }
  record["holds"] = holds;
  if (witness) record["witness"] = sigma.format(*witness);
  out.write(record, "");
  return holds ? kOk : kViolation;
}

int axioms(const io::ProblemFile& f, const std::string& kind, std::size_t samples, std::uint64_t seed,
           std::size_t max_states, const Output& out) {
  ClosureOperator op = io::file_operator(f.problem, kind);
  sampling::Rng rng(seed);
  std::vector<Lang> singles;
  std::vector<std::pair<Lang, Lang>> pairs;
  for (std::size_t i = 0; i < samples; ++i) {
    singles.push_back(sampling::random_within(op.carrier(), max_states, rng));
    pairs.emplace_back(sampling::random_within(op.carrier(), max_states, rng),
                       sampling::random_within(op.carrier(), max_states, rng));
  }
  AxiomReport report = check_axioms(op, singles, pairs);
  AxiomReport clopen = check_clopen(op, singles);
  json verdicts = json::object();
  auto record_verdict = [&](const AxiomVerdict& v) {
    json entry{{"passed", v.passed}};
    if (!v.passed) {
      json ce = json::array();
      for (const Lang& l : v.counterexample) ce.push_back(io::lang_to_json(l));
      entry["counterexample"] = ce;
    }
    verdicts[to_string(v.axiom)] = entry;
  };
  for (const auto& v : report.verdicts) record_verdict(v);
  record_verdict(clopen.verdicts.front());
  json record{{"operator", kind},
              {"samples", samples},
              {"seed", seed},
              {"claimed_clopen", op.claimed_clopen()},
              {"verdicts", verdicts}};
  if (report.s3_equality) record["s3_equality"] = *report.s3_equality;
  out.write(record, "");
  const bool clopen_ok = !op.claimed_clopen() || clopen.passed();
  return report.passed() && clopen_ok ? kOk : kViolation;
}

int enumerate_cmd(const io::ProblemFile& f, const std::string& which, std::size_t bound, const Output& out) {
  Lang k = selected(f, which);
  json record{{"lang", which}, {"bound", bound},
              {"words", io::words_to_json(*f.problem.alphabet, enumerate(k, bound))}};
  out.write(record, "");
  return kOk;
}

int oracle_cmd(const io::ProblemFile& f, std::size_t bound, const Output& out) {
  bool agrees = true;
  json record = io::run_oracle(f, bound, agrees);
  out.write(record, "");
  return agrees ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supremal sublanguage synthesis over regular languages"};
  app.require_subcommand(1);
  Output out;
  std::optional<std::size_t> max_iter;
  app.add_option("--emit", out.emit, "Output format")
      ->check(CLI::IsMember({"json", "dot", "both"}))
      ->capture_default_str();
  app.add_option("--output", out.stem, "Write <stem>.json / <stem>.dot instead of stdout");
  app.add_option("--max-iter", max_iter, "Iteration budget (outer and inner)");

  std::string file, property, which = "spec", kind;
  std::size_t bound = 3, samples = 100, max_states = 6;
  std::optional<std::size_t> check_bound;
  std::uint64_t seed = 1;

  auto* synth_cmd = app.add_subcommand("synth", "Run the selected solver");
  synth_cmd->add_option("file", file, "Problem file")->required();

  auto* check_cmd = app.add_subcommand("check", "Check a property of one language");
  check_cmd->add_option("file", file, "Problem file")->required();
  check_cmd->add_option("--property", property, "normal, controllable, l_closed, prefix_closed, trace_closed, closure_normal")
      ->required();
  check_cmd->add_option("--lang", which, "spec, plant_closed, plant_marked or supremal")->capture_default_str();
  check_cmd->add_option("--bound", check_bound, "Use the word-level definition over Sigma^{<=n}");

  auto* axioms_cmd = app.add_subcommand("axioms", "Sampled closure-operator axiom report");
  axioms_cmd->add_option("file", file, "Problem file")->required();
  axioms_cmd->add_option("--operator", kind, "Operator name")->required();
  axioms_cmd->add_option("--samples", samples)->capture_default_str();
  axioms_cmd->add_option("--seed", seed)->capture_default_str();
  axioms_cmd->add_option("--max-states", max_states)->capture_default_str();

  auto* enum_cmd = app.add_subcommand("enum", "List the words of a language up to a length");
  enum_cmd->add_option("file", file, "Problem file")->required();
  enum_cmd->add_option("--lang", which)->capture_default_str();
  enum_cmd->add_option("--bound", bound)->required();

  auto* oracle_sub = app.add_subcommand("oracle", "Brute-force supremal over Sigma^{<=n}");
  oracle_sub->add_option("file", file, "Problem file")->required();
  oracle_sub->add_option("--bound", bound)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (auto n = env_number("SUPREMA_MAX_STATES")) set_state_budget(*n);
    io::ProblemFile f = load(file, max_iter);
    if (synth_cmd->parsed()) return synth(f, out);
    if (check_cmd->parsed()) return check(f, property, which, check_bound, out);
    if (axioms_cmd->parsed()) return axioms(f, kind, samples, seed, max_states, out);
    if (enum_cmd->parsed()) return enumerate_cmd(f, which, bound, out);
    if (oracle_sub->parsed()) return oracle_cmd(f, bound, out);
  } catch (const NonConvergence& e) {
    std::cerr << "suprema: " << e.what() << "\n";
    return kNonConvergence;
  } catch (const ResourceExhausted& e) {
    std::cerr << "suprema: " << e.what() << "\n";
    return kStateBudget;
  } catch (const InvalidInput& e) {
    std::cerr << "suprema: " << e.what() << "\n";
    return kMalformed;
  } catch (const InvalidConfiguration& e) {
    std::cerr << "suprema: " << e.what() << "\n";
    return kMalformed;
  } catch (const InternalInvariant& e) {
    std::cerr << "suprema: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
