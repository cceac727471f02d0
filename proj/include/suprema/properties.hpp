#ifndef SUPREMA_PROPERTIES_HPP
#define SUPREMA_PROPERTIES_HPP

#include <optional>
#include <string_view>

#include "suprema/problem.hpp"

namespace suprema {

/// The language equations a sublanguage K can be asked to satisfy.
enum class Property {
  normal,          // K = P^-1 P(K) n Lm(G)
  controllable,    // prefix(K) Suc* n L(G) = prefix(K)
  l_closed,        // K = prefix(K) n Lm(G)
  prefix_closed,   // K = prefix(K)
  trace_closed,    // K = [K]_I
  closure_normal,  // prefix(K) = P^-1 P(prefix(K)) n L(G)
};

inline constexpr std::pair<Property, std::string_view> kPropertyNames[] = {
    {Property::normal, "normal"},
    {Property::controllable, "controllable"},
    {Property::l_closed, "l_closed"},
    {Property::prefix_closed, "prefix_closed"},
    {Property::trace_closed, "trace_closed"},
    {Property::closure_normal, "closure_normal"},
};

inline std::string_view to_string(Property p) {
  for (auto [q, n] : kPropertyNames)
    if (q == p) return n;
  return "?";
}

inline std::optional<Property> parse_property(std::string_view name) {
  for (auto [q, n] : kPropertyNames)
    if (n == name) return q;
  return std::nullopt;
}

struct PropertyCheck {
  bool holds = true;
  /// Shortlex-least word on which the two sides of the equation differ.
  std::optional<Word> witness;
};

namespace detail {

inline PropertyCheck equation(const Lang& lhs, const Lang& rhs) {
  if (lhs == rhs) return {};
  Lang diff = union_of(difference(lhs, rhs), difference(rhs, lhs));
  return {false, shortest_member(diff)};
}

inline PropertyCheck contained(const Lang& k, const Lang& m) {
  if (subset_of(k, m)) return {};
  return {false, shortest_member(difference(k, m))};
}

}  // namespace detail

/// Decides a property exactly on automata. Trace-closedness needs a finite K.
inline PropertyCheck check_property(const Lang& k, const SynthesisProblem& p, Property prop) {
  require_same_alphabet(k, p.spec, "check_property");
  const Lang& l = p.plant_closed;
  const Lang& lm = p.plant_marked;
  switch (prop) {
    case Property::normal: {
      if (auto c = detail::contained(k, lm); !c.holds) return c;
      return detail::equation(k, intersect(observation_closure(k), lm));
    }
    case Property::controllable: {
      if (auto c = detail::contained(k, l); !c.holds) return c;
      Lang pre = prefix_closure(k);
      Lang ext = concat(pre, Lang::star_of(k.alphabet_ptr(), k.alphabet().uncontrollable_set()));
      return detail::equation(intersect(ext, l), pre);
    }
    case Property::l_closed: {
      if (auto c = detail::contained(k, lm); !c.holds) return c;
      return detail::equation(k, intersect(prefix_closure(k), lm));
    }
    case Property::prefix_closed: return detail::equation(k, prefix_closure(k));
    case Property::trace_closed: {
      if (!p.independence) throw InvalidConfiguration("trace_closed needs an independence relation");
      auto n = k.max_length();
      if (!k.is_finite()) throw InvalidInput("trace_closed is only decided for finite languages");
      std::size_t bound = n.value_or(0);
      Lang closed = Lang::of_words(k.alphabet_ptr(),
                                   trace_closure_bounded(enumerate_set(k, bound), *p.independence, bound));
      return detail::equation(k, closed);
    }
    case Property::closure_normal: {
      Lang pre = prefix_closure(k);
      if (auto c = detail::contained(pre, l); !c.holds) return c;
      return detail::equation(pre, intersect(observation_closure(pre), l));
    }
  }
  return {};
}

}  // namespace suprema

#endif  // SUPREMA_PROPERTIES_HPP
