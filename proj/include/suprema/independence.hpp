#ifndef SUPREMA_INDEPENDENCE_HPP
#define SUPREMA_INDEPENDENCE_HPP

#include <set>
#include <utility>
#include <vector>

#include "suprema/alphabet.hpp"
#include "suprema/errors.hpp"

namespace suprema {

/// Irreflexive, symmetric relation on symbols. Pairs are stored unordered.
class IndependenceRelation {
 public:
  IndependenceRelation(AlphabetPtr alphabet, const std::vector<std::pair<Symbol, Symbol>>& pairs)
      : alphabet_(std::move(alphabet)) {
    for (auto [a, b] : pairs) {
      if (a >= alphabet_->size() || b >= alphabet_->size())
        throw InvalidInput("independence pair uses a symbol outside the alphabet");
      if (a == b)
        throw InvalidInput("independence relation must be irreflexive: (" + alphabet_->name(a) +
                           ", " + alphabet_->name(a) + ")");
      pairs_.emplace(std::min(a, b), std::max(a, b));
    }
  }

  bool independent(Symbol a, Symbol b) const {
    return pairs_.contains({std::min(a, b), std::max(a, b)});
  }

  const std::set<std::pair<Symbol, Symbol>>& pairs() const { return pairs_; }
  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }

 private:
  AlphabetPtr alphabet_;
  std::set<std::pair<Symbol, Symbol>> pairs_;
};

/// Exact closure of a finite word set under swaps of adjacent independent
/// symbols. Swaps preserve length, so the result stays within max_len.
inline WordSet trace_closure_bounded(const WordSet& words, const IndependenceRelation& rel,
                                     std::size_t max_len) {
  for (const Word& w : words)
    if (w.size() > max_len) throw InvalidInput("trace closure: word longer than the bound");
  WordSet closed = words;
  std::vector<Word> frontier(words.begin(), words.end());
  while (!frontier.empty()) {
    Word w = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (!rel.independent(w[i], w[i + 1])) continue;
      Word v = w;
      std::swap(v[i], v[i + 1]);
      if (closed.insert(v).second) frontier.push_back(std::move(v));
    }
  }
  return closed;
}

}  // namespace suprema

#endif  // SUPREMA_INDEPENDENCE_HPP
