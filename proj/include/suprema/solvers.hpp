#ifndef SUPREMA_SOLVERS_HPP
#define SUPREMA_SOLVERS_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "suprema/operators.hpp"
#include "suprema/problem.hpp"
#include "suprema/properties.hpp"
#include "suprema/topology.hpp"

namespace suprema {

struct SolverOptions {
  std::size_t max_iterations = 10'000;
  std::size_t max_inner_iterations = 10'000;
  /// Recompute closed forms along the generic schemes and compare.
  bool cross_check = true;
};

/// Supremal sublanguage with the descending chain that produced it. When
/// converged, the chain ends with two equal iterates.
struct SolverResult {
  Lang supremal;
  std::vector<Lang> chain;
  std::size_t iterations = 0;
  std::size_t inner_iterations = 0;
  bool converged = false;
  std::vector<std::string> warnings;

  std::vector<std::size_t> state_counts() const {
    std::vector<std::size_t> out;
    for (const Lang& l : chain) out.push_back(l.state_count());
    return out;
  }
};

/// Iteration budget exhausted. Carries the chain computed so far.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, SolverResult partial)
      : Error(what), partial_(std::move(partial)) {}
  const SolverResult& partial() const { return partial_; }

 private:
  SolverResult partial_;
};

/// One (outer, inner) pair of a mixed system; outer must carry a dual.
struct MixedBlock {
  ClosureOperator outer;
  ClosureOperator inner;
};

namespace detail {

/// K_{i+1} = step(K_i) from K_0 = start until two consecutive iterates are
/// equal. Each new iterate must be contained in the previous one.
template <typename Step>
SolverResult descend(const Lang& start, Step step, std::size_t budget, const char* scheme) {
  SolverResult r{start, {start}};
  for (std::size_t i = 0;; ++i) {
    const Lang& current = r.chain.back();
    if (i == budget) {
      r.supremal = current;
      throw NonConvergence(std::string(scheme) + ": no fixed point within " +
                               std::to_string(budget) + " iterations",
                           std::move(r));
    }
    Lang next = step(current);
    if (!subset_of(next, current))
      throw InternalInvariant(std::string(scheme) + ": iterate grew");
    r.iterations = i + 1;
    const bool fixed = next == current;
    r.chain.push_back(std::move(next));
    if (fixed) {
      r.converged = true;
      r.supremal = r.chain.back();
      return r;
    }
  }
}

/// Chain for a closed-form answer: E, K, K with K re-checked as fixed.
inline SolverResult closed_form(const Lang& e, const Lang& k, bool fixed, const char* what) {
  if (!fixed) throw InternalInvariant(std::string(what) + ": closed form is not a fixed point");
  return SolverResult{k, {e, k, k}, 1, 0, true, {}};
}

inline Lang restrict_to(const Lang& e, const Lang& m, const char* what,
                        std::vector<std::string>& warnings) {
  if (subset_of(e, m)) return e;
  warnings.push_back(std::string("specification intersected with ") + what);
  return intersect(e, m);
}

inline SolverResult trivial_empty(const Lang& e, std::vector<std::string> warnings) {
  return SolverResult{e, {e, e}, 1, 0, true, std::move(warnings)};
}

}  // namespace detail

/// Supremal open subset of e: its interior.
inline SolverResult sup_single(const Lang& e, const ClosureOperator& op) {
  Lang k = interior(op, e);
  return detail::closed_form(e, k, interior(op, k) == k, op.name().c_str());
}

/// sup_{i+1} = K_i^{o_1 ... o_n}: apply each interior in list order.
inline SolverResult sup_system(const Lang& e, std::span<const ClosureOperator> ops,
                               const SolverOptions& opts = {}) {
  for (const auto& op : ops) require_within_carrier(op, e);
  return detail::descend(
      e,
      [&](const Lang& k) {
        Lang out = k;
        for (const auto& op : ops) out = interior(op, out);
        return out;
      },
      opts.max_iterations, "system");
}

/// Largest K within e whose closure under `outer` is open for every inner
/// operator. Outer step K_{i+1} = K_i n X_i, where X_i is the fixed point of
/// L_{j+1} = L_j^{o_1 ... o_n o'} from L_0 = closure(outer, K_i) and o' is the
/// interior of outer's dual.
inline SolverResult sup_relaxed(const Lang& e, const ClosureOperator& outer,
                                std::span<const ClosureOperator> inner,
                                const SolverOptions& opts = {}) {
  if (outer.dual() == nullptr)
    throw InvalidConfiguration("sup_relaxed: " + outer.name() + " has no registered dual");
  const ClosureOperator& dual = *outer.dual();
  std::size_t inner_total = 0;
  auto result = detail::descend(
      e,
      [&](const Lang& k) {
        auto x = detail::descend(
            closure(outer, k),
            [&](const Lang& l) {
              Lang out = l;
              for (const auto& op : inner) out = interior(op, out);
              return interior(dual, out);
            },
            opts.max_inner_iterations, "relaxed (inner)");
        inner_total += x.iterations;
        return intersect(k, x.supremal);
      },
      opts.max_iterations, "relaxed");
  result.inner_iterations = inner_total;
  Lang closed = closure(outer, result.supremal);
  for (const auto& op : inner)
    if (!is_open(op, closed))
      throw InternalInvariant("sup_relaxed: result closure is not open for " + op.name());
  return result;
}

/// K_{j+1} = K_j^{d_1 ... d_n}, where K^{d_i} solves the single relaxed
/// equation of block i below K.
inline SolverResult sup_mixed(const Lang& e, std::span<const MixedBlock> blocks,
                              const SolverOptions& opts = {}) {
  for (const auto& b : blocks)
    if (b.outer.dual() == nullptr)
      throw InvalidConfiguration("sup_mixed: " + b.outer.name() + " has no registered dual");
  std::size_t inner_total = 0;
  auto result = detail::descend(
      e,
      [&](const Lang& k) {
        Lang out = k;
        for (const auto& b : blocks) {
          auto r = sup_relaxed(out, b.outer, std::span<const ClosureOperator>(&b.inner, 1), opts);
          inner_total += r.iterations + r.inner_iterations;
          out = r.supremal;
        }
        return out;
      },
      opts.max_iterations, "mixed");
  result.inner_iterations = inner_total;
  return result;
}

/// Supremal normal sublanguage, Lm \ P^-1 P(Lm \ E), cross-checked against
/// E \ P^-1 P(Lm \ E).
inline SolverResult sup_normal(const SynthesisProblem& p, const SolverOptions& = {}) {
  p.validate();
  std::vector<std::string> warnings;
  Lang e = detail::restrict_to(p.spec, p.plant_marked, "Lm(G)", warnings);
  if (e.is_empty()) return detail::trivial_empty(e, std::move(warnings));
  const Lang& lm = p.plant_marked;
  Lang blocked = observation_closure(difference(lm, e));
  Lang carrier_form = difference(lm, blocked);
  Lang observer_form = difference(e, blocked);
  if (!(carrier_form == observer_form))
    throw InternalInvariant("sup_normal: the two formula variants disagree");
  auto r = detail::closed_form(e, carrier_form,
                               is_open(p.op(OperatorTag::normal), carrier_form), "sup_normal");
  r.warnings = std::move(warnings);
  return r;
}

/// Supremal Lm(G)-closed sublanguage, Lm \ (Lm \ E) Sigma*.
inline SolverResult sup_l_closed(const SynthesisProblem& p, const SolverOptions& = {}) {
  p.validate();
  std::vector<std::string> warnings;
  Lang e = detail::restrict_to(p.spec, p.plant_marked, "Lm(G)", warnings);
  if (e.is_empty()) return detail::trivial_empty(e, std::move(warnings));
  const Lang& lm = p.plant_marked;
  Lang k = difference(lm, append_universe(difference(lm, e)));
  auto r = detail::closed_form(e, k, is_open(p.op(OperatorTag::l_closed), k), "sup_l_closed");
  r.warnings = std::move(warnings);
  return r;
}

/// Supremal prefix-closed controllable sublanguage of a prefix-closed E,
/// L \ ((L \ E)/Suc*) Sigma*. In cross-check mode also computed by the
/// two-equation scheme and by the interior of the optimized operator.
inline SolverResult sup_prefix_closed_controllable(const SynthesisProblem& p,
                                                   const SolverOptions& opts = {}) {
  p.validate();
  if (!(prefix_closure(p.spec) == p.spec))
    throw InvalidInput("sup_prefix_closed_controllable: specification is not prefix-closed");
  std::vector<std::string> warnings;
  Lang e = detail::restrict_to(p.spec, p.plant_closed, "L(G)", warnings);
  if (e.is_empty()) return detail::trivial_empty(e, std::move(warnings));
  const Lang& l = p.plant_closed;
  const SymbolSet unc = p.alphabet->uncontrollable_set();
  Lang escaping = append_universe(right_quotient_star(difference(l, e), unc));
  Lang k = difference(l, escaping);

  ClosureOperator c = p.op(OperatorTag::controllable_c);
  ClosureOperator pre = p.op(OperatorTag::prefix);
  if (opts.cross_check) {
    if (!(difference(e, escaping) == k))
      throw InternalInvariant("sup_prefix_closed_controllable: E-relative form disagrees");
    const ClosureOperator ops[] = {c, pre};
    if (!(sup_system(e, ops, opts).supremal == k))
      throw InternalInvariant("sup_prefix_closed_controllable: two-equation scheme disagrees");
    if (!(sup_single(e, p.op(OperatorTag::controllable_o)).supremal == k))
      throw InternalInvariant("sup_prefix_closed_controllable: optimized operator disagrees");
  }
  auto r = detail::closed_form(e, k, is_open(c, k) && is_open(pre, k),
                               "sup_prefix_closed_controllable");
  r.warnings = std::move(warnings);
  return r;
}

/// Supremal controllable sublanguage:
/// K_{i+1} = K_i \ ((L \ prefix(K_i))/Suc*) Sigma*, K_0 = E.
inline SolverResult sup_controllable(const SynthesisProblem& p, const SolverOptions& opts = {}) {
  p.validate();
  std::vector<std::string> warnings;
  Lang e = detail::restrict_to(p.spec, p.plant_closed, "L(G)", warnings);
  if (e.is_empty()) return detail::trivial_empty(e, std::move(warnings));
  const Lang& l = p.plant_closed;
  const SymbolSet unc = p.alphabet->uncontrollable_set();
  auto r = detail::descend(
      e,
      [&](const Lang& k) {
        Lang bad = right_quotient_star(difference(l, prefix_closure(k)), unc);
        return difference(k, append_universe(bad));
      },
      opts.max_iterations, "controllable");
  if (!check_property(r.supremal, p, Property::controllable).holds)
    throw InternalInvariant("sup_controllable: result is not controllable");
  r.warnings = std::move(warnings);
  return r;
}

/// Supremal controllable and normal sublanguage. Requires every controllable
/// symbol to be observable. Outer: K_{j+1} = Lm \ P^-1 P(Lm \ K_j^A); the
/// A-step iterates L_{i+1} = L_i \ P^-1 P((L \ prefix(L_i))/Suc*) Sigma* from
/// L_0 = K_j.
inline SolverResult sup_controllable_normal(const SynthesisProblem& p,
                                            const SolverOptions& opts = {}) {
  p.validate();
  if (!p.alphabet->controllable_observed())
    throw InvalidConfiguration(
        "sup_controllable_normal requires every controllable symbol to be observable");
  std::vector<std::string> warnings;
  Lang e = detail::restrict_to(p.spec, p.plant_marked, "Lm(G)", warnings);
  e = detail::restrict_to(e, p.plant_closed, "L(G)", warnings);
  if (e.is_empty()) return detail::trivial_empty(e, std::move(warnings));
  const Lang& l = p.plant_closed;
  const Lang& lm = p.plant_marked;
  const SymbolSet unc = p.alphabet->uncontrollable_set();
  std::size_t inner_total = 0;
  auto a_step = [&](const Lang& kj) {
    auto inner = detail::descend(
        kj,
        [&](const Lang& li) {
          Lang bad = observation_closure(right_quotient_star(difference(l, prefix_closure(li)), unc));
          return difference(li, append_universe(bad));
        },
        opts.max_inner_iterations, "controllable_normal (inner)");
    inner_total += inner.iterations;
    return inner.supremal;
  };
  auto r = detail::descend(
      e, [&](const Lang& kj) { return difference(lm, observation_closure(difference(lm, a_step(kj)))); },
      opts.max_iterations, "controllable_normal");
  r.inner_iterations = inner_total;
  for (Property prop : {Property::controllable, Property::normal, Property::closure_normal})
    if (!check_property(r.supremal, p, prop).holds)
      throw InternalInvariant("sup_controllable_normal: result violates " +
                              std::string(to_string(prop)));
  r.warnings = std::move(warnings);
  return r;
}

/// Supremal trace-closed subset of a finite word set, inside the finite
/// universe Sigma^{<=n}: Sigma^{<=n} \ [Sigma^{<=n} \ e]_I.
inline WordSet sup_trace_closed_bounded(const WordSet& e, const IndependenceRelation& rel,
                                        std::size_t n) {
  for (const Word& w : e)
    if (w.size() > n) throw InvalidInput("sup_trace_closed_bounded: word longer than the bound");
  WordSet outside;
  for (Word& w : enumerate(Lang::up_to_length(rel.alphabet_ptr(), n), n))
    if (!e.contains(w)) outside.insert(std::move(w));
  WordSet reached = trace_closure_bounded(outside, rel, n);
  WordSet out;
  for (const Word& w : e)
    if (!reached.contains(w)) out.insert(w);
  return out;
}

/// Language-level wrapper: the specification must be finite and within the
/// problem's bound.
inline SolverResult sup_trace_closed(const SynthesisProblem& p, const SolverOptions& = {}) {
  p.validate();
  if (!p.independence) throw InvalidConfiguration("trace solver needs an independence relation");
  if (!p.bound) throw InvalidConfiguration("trace solver needs a length bound");
  if (!p.spec.is_finite()) throw InvalidInput("trace solver needs a finite specification");
  if (auto m = p.spec.max_length(); m && *m > *p.bound)
    throw InvalidInput("specification has words longer than the bound");
  Lang k = Lang::of_words(p.alphabet,
                          sup_trace_closed_bounded(enumerate_set(p.spec, *p.bound), *p.independence,
                                                   *p.bound));
  return detail::closed_form(p.spec, k, is_open(p.op(OperatorTag::trace_bounded), k),
                             "sup_trace_closed");
}

}  // namespace suprema

#endif  // SUPREMA_SOLVERS_HPP
