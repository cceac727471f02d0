#ifndef SUPREMA_DRIVER_HPP
#define SUPREMA_DRIVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "suprema/io.hpp"
#include "suprema/oracle.hpp"
#include "suprema/solvers.hpp"

// Solver dispatch for problem files, plus the matching oracle query.

namespace suprema::io {

inline OperatorTag operator_tag(const std::string& name) {
  auto tag = parse_operator_tag(name);
  if (!tag) throw InvalidInput("unknown operator '" + name + "'");
  return *tag;
}

inline ClosureOperator file_operator(const SynthesisProblem& p, const std::string& name) {
  return make_operator_with_dual({operator_tag(name), p.params()});
}

inline std::vector<ClosureOperator> file_operators(const SynthesisProblem& p,
                                                   const std::vector<std::string>& names) {
  std::vector<ClosureOperator> out;
  for (const auto& n : names) out.push_back(file_operator(p, n));
  return out;
}

inline SolverResult solve(const ProblemFile& f) {
  const SynthesisProblem& p = f.problem;
  const SolverSpec& s = f.solver;
  const SolverOptions& o = s.options;
  if (s.name == "normal") return sup_normal(p, o);
  if (s.name == "l_closed") return sup_l_closed(p, o);
  if (s.name == "prefix_closed_controllable") return sup_prefix_closed_controllable(p, o);
  if (s.name == "controllable") return sup_controllable(p, o);
  if (s.name == "controllable_normal") return sup_controllable_normal(p, o);
  if (s.name == "trace_closed") return sup_trace_closed(p, o);

  p.validate();
  if (s.name == "single") {
    if (s.op.empty()) throw InvalidInput("single solver needs an 'operator'");
    return sup_single(p.spec, file_operator(p, s.op));
  }
  if (s.name == "system") return sup_system(p.spec, file_operators(p, s.operators), o);
  if (s.name == "relaxed") {
    if (s.outer.empty()) throw InvalidInput("relaxed solver needs an 'outer' operator");
    return sup_relaxed(p.spec, file_operator(p, s.outer), file_operators(p, s.inner), o);
  }
  if (s.name == "mixed") {
    std::vector<MixedBlock> blocks;
    for (const auto& [outer, inner] : s.blocks)
      blocks.push_back({file_operator(p, outer), file_operator(p, inner)});
    return sup_mixed(p.spec, blocks, o);
  }
  throw InvalidInput("unknown solver '" + s.name + "'");
}

/// Definitions whose common solutions the selected solver computes, and the
/// specification after the solver's normalization.
struct OracleQuery {
  std::vector<Property> properties;
  Lang spec;
};

namespace detail {

inline void add_properties(std::vector<Property>& out, OperatorTag tag) {
  auto add = [&](Property prop) {
    for (Property q : out)
      if (q == prop) return;
    out.push_back(prop);
  };
  switch (tag) {
    case OperatorTag::normal: add(Property::normal); return;
    case OperatorTag::l_closed: add(Property::l_closed); return;
    case OperatorTag::prefix: add(Property::prefix_closed); return;
    case OperatorTag::controllable_o:
      add(Property::prefix_closed);
      add(Property::controllable);
      return;
    case OperatorTag::trace_bounded: add(Property::trace_closed); return;
    case OperatorTag::identity: return;
    default:
      throw InvalidConfiguration("the oracle has no definition matching operator '" +
                                 std::string(to_string(tag)) + "'");
  }
}

}  // namespace detail

inline OracleQuery oracle_query(const ProblemFile& f) {
  const SynthesisProblem& p = f.problem;
  const std::string& name = f.solver.name;
  const Lang& e = p.spec;
  if (name == "normal") return {{Property::normal}, intersect(e, p.plant_marked)};
  if (name == "l_closed") return {{Property::l_closed}, intersect(e, p.plant_marked)};
  if (name == "prefix_closed_controllable")
    return {{Property::prefix_closed, Property::controllable}, intersect(e, p.plant_closed)};
  if (name == "controllable") return {{Property::controllable}, intersect(e, p.plant_closed)};
  if (name == "controllable_normal")
    return {{Property::controllable, Property::normal, Property::closure_normal},
            intersect(intersect(e, p.plant_marked), p.plant_closed)};
  if (name == "trace_closed") return {{Property::trace_closed}, e};
  OracleQuery q{{}, e};
  if (name == "single") {
    detail::add_properties(q.properties, operator_tag(f.solver.op));
  } else if (name == "system") {
    for (const auto& op : f.solver.operators) detail::add_properties(q.properties, operator_tag(op));
  } else {
    throw InvalidConfiguration("the oracle supports the named solvers, 'single' and 'system'");
  }
  return q;
}

/// Brute-force supremal over Sigma^{<=bound}. When the normalized
/// specification fits in the bound, the engine result is compared with it.
inline json run_oracle(const ProblemFile& f, std::size_t bound, bool& agrees) {
  OracleQuery q = oracle_query(f);
  const Alphabet& sigma = *f.problem.alphabet;
  WordSet candidates = enumerate_set(q.spec, bound);
  WordSet sup = oracle::brute_force_supremal(candidates, f.problem, q.properties, bound);
  json props = json::array();
  for (Property prop : q.properties) props.push_back(std::string(to_string(prop)));
  json j{{"bound", bound},
         {"properties", props},
         {"candidates", words_to_json(sigma, {candidates.begin(), candidates.end()})},
         {"supremal", words_to_json(sigma, {sup.begin(), sup.end()})}};
  agrees = true;
  auto longest = q.spec.max_length();
  if (q.spec.is_finite() && longest.value_or(0) <= bound) {
    SolverResult r = solve(f);
    WordSet engine = enumerate_set(r.supremal, bound);
    agrees = r.supremal.is_finite() && engine == sup;
    j["engine"] = words_to_json(sigma, {engine.begin(), engine.end()});
    j["agrees"] = agrees;
  }
  return j;
}

}  // namespace suprema::io

#endif  // SUPREMA_DRIVER_HPP
