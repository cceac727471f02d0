#ifndef SUPREMA_SAMPLING_HPP
#define SUPREMA_SAMPLING_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "suprema/lang.hpp"

// Random alphabets, languages and plants for property tests and sampled
// axiom checks.

namespace suprema::sampling {

using Rng = std::mt19937_64;

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// min_symbols..max_symbols symbols named a, b, c, ... with random
/// observable and uncontrollable flags. With `controllable_observed`, every
/// controllable symbol is made observable.
inline AlphabetPtr random_alphabet(Rng& rng, std::size_t max_symbols,
                                   bool controllable_observed = false, std::size_t min_symbols = 1) {
  const std::size_t n = pick(rng, min_symbols, max_symbols);
  std::vector<std::string> names, obs, unc;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s(1, static_cast<char>('a' + i));
    names.push_back(s);
    const bool u = coin(rng);
    if (u) unc.push_back(s);
    if (coin(rng, 0.6) || (controllable_observed && !u)) obs.push_back(s);
  }
  return Alphabet::make(names, obs, unc);
}

/// Random DFA with 1..max_states states, canonicalized. Each transition
/// exists with probability edge_p; missing ones lead to a rejecting sink.
inline Lang random_lang(const AlphabetPtr& sigma, std::size_t max_states, Rng& rng,
                        double accept_p = 0.4, double edge_p = 0.75) {
  const std::size_t n = pick(rng, 1, max_states);
  detail::Dfa d;
  d.symbols = sigma->size();
  for (std::size_t q = 0; q < n; ++q) d.add_state(coin(rng, accept_p));
  for (detail::State q = 0; q < n; ++q)
    for (Symbol a = 0; a < d.symbols; ++a)
      if (coin(rng, edge_p)) d.next(q, a) = static_cast<detail::State>(pick(rng, 0, n - 1));
  return Lang::from_dfa(sigma, std::move(d));
}

/// Random language inside `carrier`: the carrier recognizer runs in step
/// with a random complete DFA on 1..max_states states, each reachable
/// accepting pair stays accepting with probability accept_p and each edge
/// survives with probability edge_p (uncontrollable_edge_p for uncontrollable
/// symbols, edge_p when negative). With accept_p = 1 and a prefix-closed
/// carrier the result is prefix-closed and contains the empty word.
inline Lang random_within(const Lang& carrier, std::size_t max_states, Rng& rng, double accept_p = 0.5,
                          double edge_p = 1.0, double uncontrollable_edge_p = -1.0) {
  const Alphabet& sigma = carrier.alphabet();
  const detail::Dfa& c = carrier.dfa();
  const std::size_t n = pick(rng, 1, max_states);
  const std::size_t k = c.symbols;
  std::vector<detail::State> r(n * k);
  for (auto& t : r) t = static_cast<detail::State>(pick(rng, 0, n - 1));
  detail::Dfa d;
  d.symbols = k;
  std::map<std::pair<detail::State, detail::State>, detail::State> index;
  std::vector<std::pair<detail::State, detail::State>> queue;
  auto visit = [&](detail::State q, detail::State s) {
    auto [it, fresh] = index.try_emplace({q, s}, static_cast<detail::State>(d.size()));
    if (fresh) {
      d.add_state(c.accepting[q] && coin(rng, accept_p));
      queue.emplace_back(q, s);
    }
    return it->second;
  };
  visit(c.initial, 0);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [q, s] = queue[i];
    for (Symbol a = 0; a < k; ++a) {
      const detail::State cq = c.next(q, a);
      const double keep = sigma.uncontrollable(a) && uncontrollable_edge_p >= 0 ? uncontrollable_edge_p : edge_p;
      if (cq == detail::kNoState || !coin(rng, keep)) continue;
      const detail::State to = visit(cq, r[s * k + a]);
      d.next(static_cast<detail::State>(i), a) = to;
    }
  }
  return Lang::from_dfa(carrier.alphabet_ptr(), std::move(d));
}

/// Acyclic recognizer on 1..max_states states where edges only go forward,
/// so every member is shorter than max_states. Edges appear with
/// probability edge_p; missing ones go to the sink.
inline detail::Dfa random_acyclic(const AlphabetPtr& sigma, std::size_t max_states, Rng& rng,
                                  double edge_p = 0.5) {
  const std::size_t n = pick(rng, 1, max_states);
  detail::Dfa d;
  d.symbols = sigma->size();
  for (std::size_t q = 0; q < n; ++q) d.add_state(false);
  for (detail::State q = 0; q + 1 < n; ++q)
    for (Symbol a = 0; a < d.symbols; ++a)
      if (coin(rng, edge_p)) d.next(q, a) = static_cast<detail::State>(pick(rng, q + 1, n - 1));
  return d;
}

struct Plant {
  Lang closed;
  Lang marked;
};

/// Random generator on 1..max_states states with partial transitions. The
/// closed language accepts in every state (so it is prefix-closed and
/// contains the empty word); the marked one accepts in a random subset.
inline Plant random_plant(const AlphabetPtr& sigma, std::size_t max_states, Rng& rng,
                          double edge_p = 0.6) {
  const std::size_t n = pick(rng, 1, max_states);
  detail::Dfa d;
  d.symbols = sigma->size();
  for (std::size_t q = 0; q < n; ++q) d.add_state(true);
  for (detail::State q = 0; q < n; ++q)
    for (Symbol a = 0; a < d.symbols; ++a)
      if (coin(rng, edge_p)) d.next(q, a) = static_cast<detail::State>(pick(rng, 0, n - 1));
  detail::Dfa m = d;
  for (auto& acc : m.accepting) acc = coin(rng, 0.5) ? 1 : 0;
  return {Lang::from_dfa(sigma, std::move(d)), Lang::from_dfa(sigma, std::move(m))};
}

/// Random finite plant on at most max_states states: every reachable state
/// is in the closed language, a random subset of them is marked.
inline Plant random_finite_plant(const AlphabetPtr& sigma, std::size_t max_states, Rng& rng) {
  detail::Dfa d = random_acyclic(sigma, max_states, rng, 0.6);
  detail::Dfa m = d;
  for (auto& acc : d.accepting) acc = 1;
  for (auto& acc : m.accepting) acc = coin(rng, 0.6) ? 1 : 0;
  return {Lang::from_dfa(sigma, std::move(d)), Lang::from_dfa(sigma, std::move(m))};
}

/// Each word of `pool` kept with probability p, at most `cap` of them.
inline WordSet random_subset(const std::vector<Word>& pool, double p, std::size_t cap, Rng& rng) {
  WordSet out;
  for (const Word& w : pool) {
    if (out.size() >= cap) break;
    if (coin(rng, p)) out.insert(w);
  }
  return out;
}

}  // namespace suprema::sampling

#endif  // SUPREMA_SAMPLING_HPP
