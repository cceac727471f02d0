#ifndef SUPREMA_DETAIL_AUTOMATON_HPP
#define SUPREMA_DETAIL_AUTOMATON_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "suprema/alphabet.hpp"
#include "suprema/errors.hpp"

namespace suprema {

inline std::atomic<std::size_t>& state_budget_slot() {
  static std::atomic<std::size_t> budget{1'000'000};
  return budget;
}

/// Largest number of states any single construction may create.
inline std::size_t state_budget() { return state_budget_slot().load(); }
inline void set_state_budget(std::size_t n) { state_budget_slot().store(n); }

namespace detail {

using State = std::uint32_t;
inline constexpr State kNoState = std::numeric_limits<State>::max();

inline void charge_states(std::size_t count, const char* what) {
  if (count > state_budget())
    throw ResourceExhausted(std::string(what) + " exceeded the state budget of " +
                            std::to_string(state_budget()) + " states");
}

/// Deterministic recognizer. `delta` is row-major (state, symbol); missing
/// edges hold kNoState until `complete()` is applied.
struct Dfa {
  std::size_t symbols = 0;
  State initial = 0;
  std::vector<char> accepting;
  std::vector<State> delta;

  std::size_t size() const { return accepting.size(); }
  State next(State q, Symbol a) const { return delta[q * symbols + a]; }
  State& next(State q, Symbol a) { return delta[q * symbols + a]; }

  State add_state(bool acc) {
    accepting.push_back(acc ? 1 : 0);
    delta.resize(delta.size() + symbols, kNoState);
    return static_cast<State>(accepting.size() - 1);
  }

  friend bool operator==(const Dfa&, const Dfa&) = default;
};

/// Nondeterministic recognizer with epsilon moves.
struct Nfa {
  std::size_t symbols = 0;
  std::vector<State> initial;
  std::vector<char> accepting;
  std::vector<std::vector<std::pair<Symbol, State>>> edges;
  std::vector<std::vector<State>> epsilon;

  std::size_t size() const { return accepting.size(); }

  State add_state(bool acc) {
    accepting.push_back(acc ? 1 : 0);
    edges.emplace_back();
    epsilon.emplace_back();
    return static_cast<State>(accepting.size() - 1);
  }

  /// Copies every edge of `d` in with states shifted by the returned offset.
  State embed(const Dfa& d) {
    const State offset = static_cast<State>(size());
    for (State q = 0; q < d.size(); ++q) add_state(d.accepting[q]);
    for (State q = 0; q < d.size(); ++q)
      for (Symbol a = 0; a < d.symbols; ++a)
        if (d.next(q, a) != kNoState) edges[offset + q].emplace_back(a, offset + d.next(q, a));
    return offset;
  }
};

/// Redirects every missing edge to a fresh non-accepting sink.
inline Dfa complete(Dfa d) {
  State sink = kNoState;
  const std::size_t n = d.size();
  for (State q = 0; q < n; ++q)
    for (Symbol a = 0; a < d.symbols; ++a)
      if (d.next(q, a) == kNoState) {
        if (sink == kNoState) {
          sink = d.add_state(false);
          for (Symbol b = 0; b < d.symbols; ++b) d.next(sink, b) = sink;
        }
        d.next(q, a) = sink;
      }
  if (n == 0) {
    sink = d.add_state(false);
    for (Symbol b = 0; b < d.symbols; ++b) d.next(sink, b) = sink;
    d.initial = sink;
  }
  return d;
}

/// Breadth-first renumbering from the initial state, symbols in order.
/// Drops unreachable states. Input must be complete.
inline Dfa renumber(const Dfa& d) {
  std::vector<State> order(d.size(), kNoState);
  std::vector<State> seq;
  order[d.initial] = 0;
  seq.push_back(d.initial);
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (Symbol a = 0; a < d.symbols; ++a) {
      State r = d.next(seq[i], a);
      if (order[r] == kNoState) {
        order[r] = static_cast<State>(seq.size());
        seq.push_back(r);
      }
    }
  Dfa out;
  out.symbols = d.symbols;
  out.initial = 0;
  for (State q : seq) {
    State nq = out.add_state(d.accepting[q]);
    for (Symbol a = 0; a < d.symbols; ++a) out.next(nq, a) = order[d.next(q, a)];
  }
  return out;
}

/// Moore partition refinement on a complete, reachable DFA.
inline Dfa minimize(const Dfa& d) {
  const std::size_t n = d.size();
  std::vector<State> cls(n);
  std::size_t classes = 0;
  {
    bool any_acc = false, any_rej = false;
    for (State q = 0; q < n; ++q) (d.accepting[q] ? any_acc : any_rej) = true;
    for (State q = 0; q < n; ++q) cls[q] = (any_acc && any_rej && d.accepting[q]) ? 1 : 0;
    classes = (any_acc && any_rej) ? 2 : 1;
  }
  std::vector<State> key(d.symbols + 1);
  while (true) {
    std::map<std::vector<State>, State> ids;
    std::vector<State> next_cls(n);
    for (State q = 0; q < n; ++q) {
      key[0] = cls[q];
      for (Symbol a = 0; a < d.symbols; ++a) key[a + 1] = cls[d.next(q, a)];
      auto [it, fresh] = ids.try_emplace(key, static_cast<State>(ids.size()));
      next_cls[q] = it->second;
    }
    const bool stable = ids.size() == classes;
    cls = std::move(next_cls);
    classes = ids.size();
    if (stable) break;
  }
  Dfa out;
  out.symbols = d.symbols;
  std::vector<char> seen(classes, 0);
  out.accepting.assign(classes, 0);
  out.delta.assign(classes * d.symbols, kNoState);
  for (State q = 0; q < n; ++q) {
    State c = cls[q];
    if (seen[c]) continue;
    seen[c] = 1;
    out.accepting[c] = d.accepting[q];
    for (Symbol a = 0; a < d.symbols; ++a) out.next(c, a) = cls[d.next(q, a)];
  }
  out.initial = cls[d.initial];
  return out;
}

/// Complete, trimmed, minimal, breadth-first numbered. Two DFAs denote the
/// same language iff their canonical forms compare equal.
inline Dfa canonical(Dfa d) {
  d = complete(std::move(d));
  d = renumber(d);
  return renumber(minimize(d));
}

inline std::vector<State> epsilon_closure(const Nfa& n, std::vector<State> set) {
  std::vector<char> in(n.size(), 0);
  for (State q : set) in[q] = 1;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (State r : n.epsilon[set[i]])
      if (!in[r]) {
        in[r] = 1;
        set.push_back(r);
      }
  std::sort(set.begin(), set.end());
  return set;
}

/// Subset construction. Charges the state budget as subsets are discovered.
inline Dfa determinize(const Nfa& n) {
  Dfa out;
  out.symbols = n.symbols;
  std::map<std::vector<State>, State> ids;
  std::vector<std::vector<State>> subsets;
  auto intern = [&](std::vector<State> s) {
    auto [it, fresh] = ids.try_emplace(std::move(s), static_cast<State>(subsets.size()));
    if (fresh) {
      subsets.push_back(it->first);
      bool acc = std::any_of(it->first.begin(), it->first.end(),
                             [&](State q) { return n.accepting[q] != 0; });
      out.add_state(acc);
      charge_states(subsets.size(), "subset construction");
    }
    return it->second;
  };
  out.initial = intern(epsilon_closure(n, n.initial));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::vector<std::vector<State>> targets(n.symbols);
    for (State q : subsets[i])
      for (auto [a, r] : n.edges[q]) targets[a].push_back(r);
    for (Symbol a = 0; a < n.symbols; ++a) {
      auto& t = targets[a];
      std::sort(t.begin(), t.end());
      t.erase(std::unique(t.begin(), t.end()), t.end());
      State id = intern(epsilon_closure(n, std::move(t)));
      out.next(static_cast<State>(i), a) = id;
    }
  }
  return out;
}

/// Reachable part of the synchronous product of two complete DFAs over the
/// same symbols; acceptance decided by `accept(acc_a, acc_b)`.
template <typename Accept>
Dfa product(const Dfa& a, const Dfa& b, Accept accept) {
  Dfa out;
  out.symbols = a.symbols;
  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State p, State q) {
    auto [it, fresh] = ids.try_emplace({p, q}, static_cast<State>(pairs.size()));
    if (fresh) {
      pairs.emplace_back(p, q);
      out.add_state(accept(a.accepting[p] != 0, b.accepting[q] != 0));
      charge_states(pairs.size(), "product construction");
    }
    return it->second;
  };
  out.initial = intern(a.initial, b.initial);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (Symbol s = 0; s < a.symbols; ++s) {
      auto [p, q] = pairs[i];
      State id = intern(a.next(p, s), b.next(q, s));
      out.next(static_cast<State>(i), s) = id;
    }
  return out;
}

/// Whether some reachable product pair satisfies `hit`. No budget charge:
/// the visited set is bounded by |a|*|b| and nothing is materialized.
template <typename Hit>
bool product_reaches(const Dfa& a, const Dfa& b, Hit hit) {
  std::vector<char> seen(a.size() * b.size(), 0);
  std::queue<std::pair<State, State>> work;
  work.emplace(a.initial, b.initial);
  seen[a.initial * b.size() + b.initial] = 1;
  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop();
    if (hit(a.accepting[p] != 0, b.accepting[q] != 0)) return true;
    for (Symbol s = 0; s < a.symbols; ++s) {
      State np = a.next(p, s), nq = b.next(q, s);
      char& mark = seen[np * b.size() + nq];
      if (!mark) {
        mark = 1;
        work.emplace(np, nq);
      }
    }
  }
  return false;
}

/// States from which an accepting state is reachable using only symbols
/// for which `allowed` holds.
template <typename Allowed>
std::vector<char> coreachable(const Dfa& d, Allowed allowed) {
  std::vector<std::vector<State>> back(d.size());
  for (State q = 0; q < d.size(); ++q)
    for (Symbol a = 0; a < d.symbols; ++a)
      if (allowed(a)) back[d.next(q, a)].push_back(q);
  std::vector<char> mark(d.size(), 0);
  std::vector<State> work;
  for (State q = 0; q < d.size(); ++q)
    if (d.accepting[q]) {
      mark[q] = 1;
      work.push_back(q);
    }
  while (!work.empty()) {
    State q = work.back();
    work.pop_back();
    for (State p : back[q])
      if (!mark[p]) {
        mark[p] = 1;
        work.push_back(p);
      }
  }
  return mark;
}

}  // namespace detail
}  // namespace suprema

#endif  // SUPREMA_DETAIL_AUTOMATON_HPP
