#ifndef SUPREMA_ORACLE_HPP
#define SUPREMA_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "suprema/problem.hpp"
#include "suprema/properties.hpp"

// Brute-force checks over explicit word sets. Plant languages are consulted
// only through single membership runs (Lang::accepts); no automaton
// construction happens here.

namespace suprema::oracle {

/// Every word of length <= max_len, in shortlex order.
class BoundedUniverse {
 public:
  BoundedUniverse(AlphabetPtr alphabet, std::size_t max_len)
      : alphabet_(std::move(alphabet)), max_len_(max_len) {
    words_.push_back({});
    for (std::size_t begin = 0, len = 0; len < max_len; ++len) {
      const std::size_t end = words_.size();
      for (std::size_t i = begin; i < end; ++i)
        for (Symbol a = 0; a < alphabet_->size(); ++a) {
          Word w = words_[i];
          w.push_back(a);
          words_.push_back(std::move(w));
        }
      begin = end;
    }
  }

  const std::vector<Word>& words() const { return words_; }
  std::size_t max_len() const { return max_len_; }
  const Alphabet& alphabet() const { return *alphabet_; }

 private:
  AlphabetPtr alphabet_;
  std::size_t max_len_;
  std::vector<Word> words_;
};

inline Word observe(const Alphabet& sigma, const Word& w) {
  Word out;
  for (Symbol a : w)
    if (sigma.observable(a)) out.push_back(a);
  return out;
}

inline WordSet prefixes(const WordSet& k) {
  WordSet out;
  for (const Word& w : k)
    for (std::size_t n = 0; n <= w.size(); ++n) out.insert(Word(w.begin(), w.begin() + n));
  return out;
}

struct DefinitionCheck {
  bool holds = true;
  std::optional<Word> witness;
};

namespace detail {

inline DefinitionCheck fail(Word w) { return {false, std::move(w)}; }

/// K = P^-1 P(K) n M within the universe, K contained in M.
inline DefinitionCheck normal_in(const WordSet& k, const Lang& m, const BoundedUniverse& u) {
  const Alphabet& sigma = u.alphabet();
  for (const Word& w : k)
    if (!m.accepts(w)) return fail(w);
  WordSet seen;
  for (const Word& w : k) seen.insert(observe(sigma, w));
  for (const Word& w : u.words())
    if (m.accepts(w) && !k.contains(w) && seen.contains(observe(sigma, w))) return fail(w);
  return {};
}

}  // namespace detail

/// Decides `prop` for the explicit set k by enumeration over Sigma^{<=bound}.
/// Controllability looks one uncontrollable step past each prefix, which is
/// exact when L(G) fits inside the bound.
inline DefinitionCheck check_definition(const WordSet& k, const SynthesisProblem& p, Property prop,
                                        const BoundedUniverse& u) {
  const Alphabet& sigma = *p.alphabet;
  switch (prop) {
    case Property::normal: return detail::normal_in(k, p.plant_marked, u);
    case Property::closure_normal: return detail::normal_in(prefixes(k), p.plant_closed, u);
    case Property::controllable: {
      for (const Word& w : k)
        if (!p.plant_closed.accepts(w)) return detail::fail(w);
      WordSet pre = prefixes(k);
      for (const Word& s : pre)
        for (Symbol a = 0; a < sigma.size(); ++a) {
          if (!sigma.uncontrollable(a)) continue;
          Word t = s;
          t.push_back(a);
          if (p.plant_closed.accepts(t) && !pre.contains(t)) return detail::fail(t);
        }
      return {};
    }
    case Property::l_closed: {
      for (const Word& w : k)
        if (!p.plant_marked.accepts(w)) return detail::fail(w);
      for (const Word& w : prefixes(k))
        if (p.plant_marked.accepts(w) && !k.contains(w)) return detail::fail(w);
      return {};
    }
    case Property::prefix_closed: {
      for (const Word& w : prefixes(k))
        if (!k.contains(w)) return detail::fail(w);
      return {};
    }
    case Property::trace_closed: {
      if (!p.independence) throw InvalidConfiguration("trace_closed needs an independence relation");
      for (const Word& w : k)
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          if (!p.independence->independent(w[i], w[i + 1])) continue;
          Word v = w;
          std::swap(v[i], v[i + 1]);
          if (!k.contains(v)) return detail::fail(v);
        }
      return {};
    }
  }
  return {};
}

inline DefinitionCheck check_definition(const WordSet& k, const SynthesisProblem& p, Property prop,
                                        std::size_t bound) {
  return check_definition(k, p, prop, BoundedUniverse(p.alphabet, bound));
}

inline constexpr std::size_t kMaxOracleWords = 20;

/// Union of every subset of e satisfying all of `props`. That union is the
/// supremal element because each property family is closed under unions.
inline WordSet brute_force_supremal(const WordSet& e, const SynthesisProblem& p,
                                    std::span<const Property> props, std::size_t bound) {
  if (e.size() > kMaxOracleWords)
    throw InvalidInput("oracle: " + std::to_string(e.size()) + " words exceed the cap of " +
                       std::to_string(kMaxOracleWords));
  const BoundedUniverse universe(p.alphabet, bound);
  const std::vector<Word> members(e.begin(), e.end());
  const std::uint32_t n = static_cast<std::uint32_t>(members.size());
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::uint32_t acc = 0;
  for (std::uint32_t mask = full;; --mask) {
    if ((mask & ~acc) != 0) {
      WordSet k;
      for (std::uint32_t i = 0; i < n; ++i)
        if (mask >> i & 1u) k.insert(members[i]);
      bool ok = true;
      for (Property prop : props)
        if (!check_definition(k, p, prop, universe).holds) {
          ok = false;
          break;
        }
      if (ok) acc |= mask;
    }
    if (acc == full || mask == 0) break;
  }
  WordSet out;
  for (std::uint32_t i = 0; i < n; ++i)
    if (acc >> i & 1u) out.insert(members[i]);
  return out;
}

}  // namespace suprema::oracle

#endif  // SUPREMA_ORACLE_HPP
