#ifndef SUPREMA_OPERATORS_HPP
#define SUPREMA_OPERATORS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "suprema/independence.hpp"
#include "suprema/lang.hpp"
#include "suprema/topology.hpp"

namespace suprema {

/// The concrete closure operators. Notation: P is the observable projection,
/// Suc the uncontrollable symbols, G the plant.
enum class OperatorTag {
  normal,                 // K -> P^-1 P(K) n Lm(G),            carrier Lm(G)
  l_closed,               // K -> K Sigma* n Lm(G),             carrier Lm(G)
  prefix,                 // K -> K Sigma*,                     carrier Sigma*
  controllable_c,         // K -> K/Suc* n L(G),                carrier L(G)
  controllable_o,         // K -> (K/Suc*) Sigma* n L(G),       carrier L(G)
  controllable_normal_a,  // K -> P^-1 P(K/Suc*) n L(G),        carrier L(G)
  trace_bounded,          // K -> [K]_I,                        carrier Sigma^{<=n}
  prefix_closure,         // K -> prefixes of K,                carrier Sigma*
  prefix_closure_dual,    // K -> K Sigma*, dual of prefix_closure
  identity,               // K -> K,                            carrier given
};

inline constexpr std::pair<OperatorTag, std::string_view> kOperatorNames[] = {
    {OperatorTag::normal, "normal"},
    {OperatorTag::l_closed, "lclosed"},
    {OperatorTag::prefix, "prefix"},
    {OperatorTag::controllable_c, "controllable_c"},
    {OperatorTag::controllable_o, "controllable_o"},
    {OperatorTag::controllable_normal_a, "controllable_normal_a"},
    {OperatorTag::trace_bounded, "trace_bounded"},
    {OperatorTag::prefix_closure, "prefix_closure"},
    {OperatorTag::prefix_closure_dual, "prefix_closure_dual"},
    {OperatorTag::identity, "identity"},
};

inline std::string_view to_string(OperatorTag tag) {
  for (auto [t, n] : kOperatorNames)
    if (t == tag) return n;
  return "?";
}

inline std::optional<OperatorTag> parse_operator_tag(std::string_view name) {
  for (auto [t, n] : kOperatorNames)
    if (n == name) return t;
  return std::nullopt;
}

/// Parameters an operator may draw on; which ones are required depends on
/// the tag.
struct OperatorParams {
  AlphabetPtr alphabet;
  std::optional<Lang> plant_closed;
  std::optional<Lang> plant_marked;
  std::optional<IndependenceRelation> independence;
  std::optional<std::size_t> bound;
  /// Carrier for `identity`; defaults to Sigma*.
  std::optional<Lang> carrier;
};

struct OperatorKind {
  OperatorTag tag;
  OperatorParams params;
};

namespace detail {

inline const Lang& need(const std::optional<Lang>& l, OperatorTag tag, const char* what) {
  if (!l)
    throw InvalidConfiguration(std::string(to_string(tag)) + " operator requires " + what);
  return *l;
}

}  // namespace detail

inline ClosureOperator make_operator(const OperatorKind& kind) {
  const auto& p = kind.params;
  if (!p.alphabet) throw InvalidConfiguration("operator without alphabet");
  const AlphabetPtr sigma = p.alphabet;
  const std::string name(to_string(kind.tag));
  const SymbolSet unc = sigma->uncontrollable_set();

  switch (kind.tag) {
    case OperatorTag::normal: {
      Lang lm = detail::need(p.plant_marked, kind.tag, "the marked plant language");
      return ClosureOperator(
          name, lm, [lm](const Lang& k) { return intersect(observation_closure(k), lm); }, true);
    }
    case OperatorTag::l_closed: {
      Lang lm = detail::need(p.plant_marked, kind.tag, "the marked plant language");
      return ClosureOperator(name, lm,
                             [lm](const Lang& k) { return intersect(append_universe(k), lm); });
    }
    case OperatorTag::prefix:
    case OperatorTag::prefix_closure_dual:
      return ClosureOperator(name, Lang::universe(sigma),
                             [](const Lang& k) { return append_universe(k); });
    case OperatorTag::controllable_c: {
      Lang l = detail::need(p.plant_closed, kind.tag, "the closed plant language");
      return ClosureOperator(
          name, l, [l, unc](const Lang& k) { return intersect(right_quotient_star(k, unc), l); });
    }
    case OperatorTag::controllable_o: {
      Lang l = detail::need(p.plant_closed, kind.tag, "the closed plant language");
      return ClosureOperator(name, l, [l, unc](const Lang& k) {
        return intersect(append_universe(right_quotient_star(k, unc)), l);
      });
    }
    case OperatorTag::controllable_normal_a: {
      Lang l = detail::need(p.plant_closed, kind.tag, "the closed plant language");
      if (!sigma->controllable_observed())
        throw InvalidConfiguration(
            "controllable_normal_a requires every controllable symbol to be observable");
      return ClosureOperator(name, l, [l, unc](const Lang& k) {
        return intersect(observation_closure(right_quotient_star(k, unc)), l);
      });
    }
    case OperatorTag::trace_bounded: {
      if (!p.bound) throw InvalidConfiguration("trace_bounded requires a length bound");
      if (!p.independence)
        throw InvalidConfiguration("trace_bounded requires an independence relation");
      const std::size_t n = *p.bound;
      IndependenceRelation rel = *p.independence;
      return ClosureOperator(
          name, Lang::up_to_length(sigma, n),
          [sigma, rel, n](const Lang& k) {
            if (!k.is_finite())
              throw InvalidInput("trace closure is only computed on finite languages");
            return Lang::of_words(sigma, trace_closure_bounded(enumerate_set(k, n), rel, n));
          },
          true);
    }
    case OperatorTag::prefix_closure:
      return ClosureOperator(name, Lang::universe(sigma),
                             [](const Lang& k) { return prefix_closure(k); });
    case OperatorTag::identity: {
      Lang m = p.carrier ? *p.carrier : Lang::universe(sigma);
      return ClosureOperator(name, m, [](const Lang& k) { return k; }, true);
    }
  }
  throw InvalidConfiguration("unknown operator kind");
}

/// Attaches `dual`, whose open sets must be exactly op's closed sets. Both
/// must live on the same carrier.
inline ClosureOperator register_dual(const ClosureOperator& op, const ClosureOperator& dual) {
  if (!(op.carrier().alphabet() == dual.carrier().alphabet()) || !(op.carrier() == dual.carrier()))
    throw InvalidConfiguration("register_dual: " + op.name() + " and " + dual.name() +
                               " live on different carriers");
  return op.with_dual(dual);
}

/// The operator together with the dual the theory provides for it: the
/// prefix closure pairs with K -> K Sigma*, clopen operators are self-dual.
inline ClosureOperator make_operator_with_dual(const OperatorKind& kind) {
  ClosureOperator op = make_operator(kind);
  if (kind.tag == OperatorTag::prefix_closure)
    return register_dual(op, make_operator({OperatorTag::prefix_closure_dual, kind.params}));
  if (op.claimed_clopen()) return register_dual(op, op);
  return op;
}

}  // namespace suprema

#endif  // SUPREMA_OPERATORS_HPP
