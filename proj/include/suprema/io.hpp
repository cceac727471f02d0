#ifndef SUPREMA_IO_HPP
#define SUPREMA_IO_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "suprema/problem.hpp"
#include "suprema/solvers.hpp"

// JSON problem files, result records and DOT output.
//
// An automaton is written either as a state table
//   {"states": [...], "initial": s, "accepting": [...],
//    "transitions": [[from, symbol, to], ...]}
// (partial tables are completed with a non-accepting sink) or as a finite
// word list {"words": ["ab", "b", ""]}. Words use the alphabet's text form.

namespace suprema::io {

using nlohmann::json;

/// Names the solver and the operators it runs with.
struct SolverSpec {
  std::string name = "controllable";
  std::string op;                                        // single
  std::vector<std::string> operators;                    // system
  std::string outer;                                     // relaxed
  std::vector<std::string> inner;                        // relaxed
  std::vector<std::pair<std::string, std::string>> blocks;  // mixed: (outer, inner)
  SolverOptions options;
  std::map<std::string, bool> explicit_options;  // which options the file set
};

struct ProblemFile {
  SynthesisProblem problem;
  SolverSpec solver;
};

inline const char* const kSolverNames[] = {
    "normal", "l_closed", "prefix_closed_controllable", "controllable", "controllable_normal",
    "trace_closed", "single", "system", "relaxed", "mixed"};

namespace detail {

inline std::string state_name(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InvalidInput("state names must be strings or integers");
}

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InvalidInput(where + " must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace detail

inline Lang lang_from_json(const json& j, const AlphabetPtr& sigma, const std::string& where) {
  if (!j.is_object()) throw InvalidInput(where + ": automaton must be an object");
  if (j.contains("words")) {
    std::vector<Word> words;
    for (const auto& w : detail::string_list(j.at("words"), where + ".words"))
      words.push_back(sigma->parse(w));
    return Lang::of_words(sigma, std::span<const Word>(words));
  }
  const json& states = detail::field(j, "states", where);
  if (!states.is_array()) throw InvalidInput(where + ".states must be an array");
  std::map<std::string, suprema::detail::State> index;
  suprema::detail::Dfa d;
  d.symbols = sigma->size();
  for (const auto& s : states) {
    auto [it, fresh] = index.try_emplace(detail::state_name(s), static_cast<suprema::detail::State>(d.size()));
    if (!fresh) throw InvalidInput(where + ": duplicate state '" + it->first + "'");
    d.add_state(false);
  }
  auto lookup = [&](const json& s) {
    auto it = index.find(detail::state_name(s));
    if (it == index.end()) throw InvalidInput(where + ": undeclared state '" + detail::state_name(s) + "'");
    return it->second;
  };
  if (d.size() == 0) throw InvalidInput(where + ": an automaton needs at least one state");
  d.initial = lookup(detail::field(j, "initial", where));
  if (j.contains("accepting")) {
    if (!j.at("accepting").is_array()) throw InvalidInput(where + ".accepting must be an array");
    for (const auto& s : j.at("accepting")) d.accepting[lookup(s)] = 1;
  }
  if (j.contains("transitions")) {
    const json& ts = j.at("transitions");
    if (!ts.is_array()) throw InvalidInput(where + ".transitions must be an array");
    for (const auto& t : ts) {
      if (!t.is_array() || t.size() != 3 || !t[1].is_string())
        throw InvalidInput(where + ": transitions are [from, symbol, to] triples");
      auto from = lookup(t[0]);
      auto to = lookup(t[2]);
      Symbol a = sigma->symbol(t[1].get<std::string>());
      auto& slot = d.next(from, a);
      if (slot != suprema::detail::kNoState && slot != to)
        throw InvalidInput(where + ": nondeterministic transition on '" + sigma->name(a) + "'");
      slot = to;
    }
  }
  return Lang::from_dfa(sigma, std::move(d));
}

/// Canonical state table: states "0".."n-1" in canonical order, all
/// transitions listed.
inline json lang_to_json(const Lang& l) {
  json states = json::array(), accepting = json::array(), transitions = json::array();
  for (suprema::detail::State q = 0; q < l.state_count(); ++q) {
    states.push_back(std::to_string(q));
    if (l.accepting(q)) accepting.push_back(std::to_string(q));
    for (Symbol a = 0; a < l.alphabet().size(); ++a)
      transitions.push_back({std::to_string(q), l.alphabet().name(a), std::to_string(l.next(q, a))});
  }
  return json{{"states", states},
              {"initial", std::to_string(l.initial())},
              {"accepting", accepting},
              {"transitions", transitions}};
}

inline json words_to_json(const Alphabet& sigma, const std::vector<Word>& words) {
  json out = json::array();
  for (const Word& w : words) out.push_back(sigma.format(w));
  return out;
}

inline json alphabet_to_json(const Alphabet& sigma) {
  json obs = json::array(), unc = json::array();
  for (Symbol a = 0; a < sigma.size(); ++a) {
    if (sigma.observable(a)) obs.push_back(sigma.name(a));
    if (sigma.uncontrollable(a)) unc.push_back(sigma.name(a));
  }
  return json{{"symbols", sigma.names()}, {"observable", obs}, {"uncontrollable", unc}};
}

inline SolverSpec solver_from_json(const json& j) {
  SolverSpec s;
  if (j.is_null()) return s;
  if (j.is_string()) {
    s.name = j.get<std::string>();
  } else if (j.is_object()) {
    s.name = detail::field(j, "name", "solver").get<std::string>();
    if (j.contains("operator")) s.op = j.at("operator").get<std::string>();
    if (j.contains("operators")) s.operators = detail::string_list(j.at("operators"), "solver.operators");
    if (j.contains("outer")) s.outer = j.at("outer").get<std::string>();
    if (j.contains("inner")) s.inner = detail::string_list(j.at("inner"), "solver.inner");
    if (j.contains("blocks")) {
      for (const auto& b : j.at("blocks")) {
        if (!b.is_object()) throw InvalidInput("solver.blocks entries are objects");
        s.blocks.emplace_back(detail::field(b, "outer", "block").get<std::string>(),
                              detail::field(b, "inner", "block").get<std::string>());
      }
    }
    auto number = [&](const char* key, std::size_t& slot) {
      if (!j.contains(key)) return;
      if (!j.at(key).is_number_unsigned()) throw InvalidInput(std::string("solver.") + key + " must be a natural number");
      slot = j.at(key).get<std::size_t>();
      s.explicit_options[key] = true;
    };
    number("max_iterations", s.options.max_iterations);
    number("max_inner_iterations", s.options.max_inner_iterations);
    if (j.contains("cross_check")) {
      s.options.cross_check = j.at("cross_check").get<bool>();
      s.explicit_options["cross_check"] = true;
    }
  } else {
    throw InvalidInput("solver must be a name or an object");
  }
  bool known = false;
  for (const char* n : kSolverNames) known = known || s.name == n;
  if (!known) throw InvalidInput("unknown solver '" + s.name + "'");
  return s;
}

inline json solver_to_json(const SolverSpec& s) {
  json j{{"name", s.name}};
  if (!s.op.empty()) j["operator"] = s.op;
  if (!s.operators.empty()) j["operators"] = s.operators;
  if (!s.outer.empty()) j["outer"] = s.outer;
  if (!s.inner.empty()) j["inner"] = s.inner;
  if (!s.blocks.empty()) {
    json blocks = json::array();
    for (const auto& [o, i] : s.blocks) blocks.push_back({{"outer", o}, {"inner", i}});
    j["blocks"] = blocks;
  }
  if (s.explicit_options.contains("max_iterations")) j["max_iterations"] = s.options.max_iterations;
  if (s.explicit_options.contains("max_inner_iterations"))
    j["max_inner_iterations"] = s.options.max_inner_iterations;
  if (s.explicit_options.contains("cross_check")) j["cross_check"] = s.options.cross_check;
  return j;
}

/// Parses a problem document. Missing plant_closed means Sigma*; missing
/// plant_marked means plant_closed; missing spec means empty.
inline ProblemFile load_problem(const json& j) {
  try {
    if (!j.is_object()) throw InvalidInput("problem file must be a JSON object");
    const json& a = detail::field(j, "alphabet", "problem");
    auto names = detail::string_list(detail::field(a, "symbols", "alphabet"), "alphabet.symbols");
    auto obs = a.contains("observable") ? detail::string_list(a.at("observable"), "alphabet.observable")
                                        : names;
    auto unc = a.contains("uncontrollable")
                   ? detail::string_list(a.at("uncontrollable"), "alphabet.uncontrollable")
                   : std::vector<std::string>{};
    AlphabetPtr sigma = Alphabet::make(names, obs, unc);

    const json automata = j.contains("automata") ? j.at("automata") : json::object();
    if (!automata.is_object()) throw InvalidInput("automata must be an object");
    for (const auto& [key, value] : automata.items())
      if (key != "plant_closed" && key != "plant_marked" && key != "spec")
        throw InvalidInput("unknown automaton '" + key + "'");
    Lang closed = automata.contains("plant_closed")
                      ? lang_from_json(automata.at("plant_closed"), sigma, "plant_closed")
                      : Lang::universe(sigma);
    Lang marked = automata.contains("plant_marked")
                      ? lang_from_json(automata.at("plant_marked"), sigma, "plant_marked")
                      : closed;
    Lang spec = automata.contains("spec") ? lang_from_json(automata.at("spec"), sigma, "spec")
                                          : Lang::empty(sigma);

    std::optional<IndependenceRelation> rel;
    if (j.contains("independence")) {
      std::vector<std::pair<Symbol, Symbol>> pairs;
      for (const auto& p : j.at("independence")) {
        if (!p.is_array() || p.size() != 2) throw InvalidInput("independence entries are symbol pairs");
        pairs.emplace_back(sigma->symbol(p[0].get<std::string>()), sigma->symbol(p[1].get<std::string>()));
      }
      rel.emplace(sigma, pairs);
    }
    std::optional<std::size_t> bound;
    if (j.contains("bound")) {
      if (!j.at("bound").is_number_unsigned()) throw InvalidInput("bound must be a natural number");
      bound = j.at("bound").get<std::size_t>();
    }
    ProblemFile out{SynthesisProblem{sigma, closed, marked, spec, rel, bound},
                    solver_from_json(j.contains("solver") ? j.at("solver") : json())};
    out.problem.validate();
    return out;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed problem file: ") + e.what());
  }
}

inline json problem_to_json(const ProblemFile& f) {
  const SynthesisProblem& p = f.problem;
  json j{{"alphabet", alphabet_to_json(*p.alphabet)},
         {"automata",
          {{"plant_closed", lang_to_json(p.plant_closed)},
           {"plant_marked", lang_to_json(p.plant_marked)},
           {"spec", lang_to_json(p.spec)}}},
         {"solver", solver_to_json(f.solver)}};
  if (p.independence) {
    json pairs = json::array();
    for (auto [a, b] : p.independence->pairs()) pairs.push_back({p.alphabet->name(a), p.alphabet->name(b)});
    j["independence"] = pairs;
  }
  if (p.bound) j["bound"] = *p.bound;
  return j;
}

/// Members of a finite language, all of them.
inline std::vector<Word> finite_members(const Lang& l) {
  auto n = l.max_length();
  return n ? enumerate(l, *n) : std::vector<Word>{};
}

inline json result_to_json(const SolverResult& r, const std::string& solver) {
  json chain = json::array();
  for (const Lang& l : r.chain) chain.push_back(lang_to_json(l));
  json j{{"solver", solver},
         {"converged", r.converged},
         {"iterations", r.iterations},
         {"inner_iterations", r.inner_iterations},
         {"chain_length", r.chain.size()},
         {"chain_states", r.state_counts()},
         {"chain", chain},
         {"supremal", lang_to_json(r.supremal)},
         {"warnings", r.warnings}};
  if (r.supremal.is_finite()) j["members"] = words_to_json(r.supremal.alphabet(), finite_members(r.supremal));
  return j;
}

/// Graphviz rendering: accepting states are double circles, the initial
/// state is marked by an arrow from a point node, states that cannot reach
/// acceptance are omitted, parallel edges share one comma-separated label.
inline std::string to_dot(const Lang& l, const std::string& name = "supremal") {
  auto live = l.live_states();
  std::ostringstream out;
  out << "digraph " << name << " {\n"
      << "  rankdir=LR;\n"
      << "  node [shape=circle];\n"
      << "  __start [shape=point];\n";
  if (live[l.initial()]) out << "  __start -> " << l.initial() << ";\n";
  for (suprema::detail::State q = 0; q < l.state_count(); ++q) {
    if (!live[q]) continue;
    out << "  " << q << (l.accepting(q) ? " [shape=doublecircle];\n" : ";\n");
  }
  for (suprema::detail::State q = 0; q < l.state_count(); ++q) {
    if (!live[q]) continue;
    std::map<suprema::detail::State, std::string> labels;
    for (Symbol a = 0; a < l.alphabet().size(); ++a) {
      auto r = l.next(q, a);
      if (!live[r]) continue;
      auto& lab = labels[r];
      if (!lab.empty()) lab += ",";
      lab += l.alphabet().name(a);
    }
    for (const auto& [r, lab] : labels) out << "  " << q << " -> " << r << " [label=\"" << lab << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace suprema::io

#endif  // SUPREMA_IO_HPP
