#ifndef SUPREMA_LANG_HPP
#define SUPREMA_LANG_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "suprema/alphabet.hpp"
#include "suprema/detail/automaton.hpp"
#include "suprema/errors.hpp"

namespace suprema {

/// A regular language over a declared alphabet, stored as its canonical
/// recognizer: complete, reachable, minimal, breadth-first numbered from the
/// initial state (state 0). Equal languages have equal representations.
class Lang {
 public:
  using State = detail::State;

  /// Canonicalizes an arbitrary (possibly partial) DFA over `alphabet`.
  static Lang from_dfa(AlphabetPtr alphabet, detail::Dfa dfa) {
    if (!alphabet) throw InvalidInput("language without alphabet");
    if (dfa.symbols != alphabet->size())
      throw InvalidInput("recognizer width does not match the alphabet");
    return Lang(std::move(alphabet), detail::canonical(std::move(dfa)));
  }

  static Lang empty(AlphabetPtr alphabet) { return from_dfa(alphabet, blank(*alphabet)); }

  static Lang epsilon(AlphabetPtr alphabet) {
    auto d = blank(*alphabet);
    d.add_state(true);
    return from_dfa(std::move(alphabet), std::move(d));
  }

  /// S* for a symbol subset S; with S = all symbols this is the universe.
  static Lang star_of(AlphabetPtr alphabet, const SymbolSet& symbols) {
    check_symbols(*alphabet, symbols);
    auto d = blank(*alphabet);
    auto q = d.add_state(true);
    for (Symbol a : symbols) d.next(q, a) = q;
    return from_dfa(std::move(alphabet), std::move(d));
  }

  static Lang universe(AlphabetPtr alphabet) {
    auto all = alphabet->all();
    return star_of(std::move(alphabet), all);
  }

  /// Words of length at most n.
  static Lang up_to_length(AlphabetPtr alphabet, std::size_t n) {
    auto d = blank(*alphabet);
    for (std::size_t i = 0; i <= n; ++i) d.add_state(true);
    for (State q = 0; q < n; ++q)
      for (Symbol a = 0; a < d.symbols; ++a) d.next(q, a) = q + 1;
    return from_dfa(std::move(alphabet), std::move(d));
  }

  /// Finite language given by its members.
  static Lang of_words(AlphabetPtr alphabet, std::span<const Word> words) {
    auto d = blank(*alphabet);
    d.add_state(false);
    for (const Word& w : words) {
      State q = 0;
      for (Symbol a : w) {
        if (a >= d.symbols) throw InvalidInput("word uses a symbol outside the alphabet");
        if (d.next(q, a) == detail::kNoState) {
          State r = d.add_state(false);
          d.next(q, a) = r;
        }
        q = d.next(q, a);
      }
      d.accepting[q] = 1;
    }
    return from_dfa(std::move(alphabet), std::move(d));
  }

  static Lang of_words(AlphabetPtr alphabet, const WordSet& words) {
    std::vector<Word> v(words.begin(), words.end());
    return of_words(std::move(alphabet), std::span<const Word>(v));
  }

  static Lang of_words(AlphabetPtr alphabet, std::initializer_list<std::string_view> words) {
    std::vector<Word> v;
    for (auto w : words) v.push_back(alphabet->parse(w));
    return of_words(std::move(alphabet), std::span<const Word>(v));
  }

  const Alphabet& alphabet() const { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
  const detail::Dfa& dfa() const { return dfa_; }

  std::size_t state_count() const { return dfa_.size(); }
  State initial() const { return dfa_.initial; }
  bool accepting(State q) const { return dfa_.accepting[q] != 0; }
  State next(State q, Symbol a) const { return dfa_.next(q, a); }

  bool accepts(const Word& w) const {
    State q = dfa_.initial;
    for (Symbol a : w) {
      if (a >= dfa_.symbols) return false;
      q = dfa_.next(q, a);
    }
    return accepting(q);
  }

  bool contains_epsilon() const { return accepting(dfa_.initial); }

  bool is_empty() const {
    for (State q = 0; q < state_count(); ++q)
      if (accepting(q)) return false;
    return true;
  }

  /// States that reach an accepting state.
  std::vector<char> live_states() const {
    return detail::coreachable(dfa_, [](Symbol) { return true; });
  }

  /// No cycle runs through a live state.
  bool is_finite() const {
    auto live = live_states();
    std::vector<char> color(state_count(), 0);  // 0 new, 1 on stack, 2 done
    std::vector<std::pair<State, Symbol>> stack;
    for (State root = 0; root < state_count(); ++root) {
      if (!live[root] || color[root]) continue;
      stack.emplace_back(root, 0);
      color[root] = 1;
      while (!stack.empty()) {
        auto& [q, a] = stack.back();
        if (a == dfa_.symbols) {
          color[q] = 2;
          stack.pop_back();
          continue;
        }
        State r = next(q, a++);
        if (!live[r]) continue;
        if (color[r] == 1) return false;
        if (color[r] == 0) {
          color[r] = 1;
          stack.emplace_back(r, 0);
        }
      }
    }
    return true;
  }

  /// Length of the longest member; nullopt when empty or infinite.
  std::optional<std::size_t> max_length() const {
    if (is_empty() || !is_finite()) return std::nullopt;
    auto live = live_states();
    std::vector<long> memo(state_count(), -2);
    auto depth = [&](auto&& self, State q) -> long {
      if (memo[q] != -2) return memo[q];
      long best = accepting(q) ? 0 : -1;
      for (Symbol a = 0; a < dfa_.symbols; ++a) {
        State r = next(q, a);
        if (!live[r]) continue;
        long d = self(self, r);
        if (d >= 0) best = std::max(best, d + 1);
      }
      return memo[q] = best;
    };
    return static_cast<std::size_t>(depth(depth, dfa_.initial));
  }

  friend bool operator==(const Lang& a, const Lang& b) {
    return *a.alphabet_ == *b.alphabet_ && a.dfa_ == b.dfa_;
  }

 private:
  Lang(AlphabetPtr alphabet, detail::Dfa dfa) : alphabet_(std::move(alphabet)), dfa_(std::move(dfa)) {}

  static detail::Dfa blank(const Alphabet& alphabet) {
    detail::Dfa d;
    d.symbols = alphabet.size();
    return d;
  }

  static void check_symbols(const Alphabet& alphabet, const SymbolSet& symbols) {
    for (Symbol a : symbols)
      if (a >= alphabet.size()) throw InvalidInput("symbol outside the alphabet");
  }

  AlphabetPtr alphabet_;
  detail::Dfa dfa_;
};

inline void require_same_alphabet(const Lang& a, const Lang& b, const char* op) {
  if (!(a.alphabet() == b.alphabet()))
    throw InvalidInput(std::string(op) + ": operands are over different alphabets");
}

enum class BoolOp { union_of, intersect, difference };

inline Lang boolean(BoolOp op, const Lang& a, const Lang& b) {
  require_same_alphabet(a, b, "boolean");
  auto accept = [op](bool x, bool y) {
    switch (op) {
      case BoolOp::union_of: return x || y;
      case BoolOp::intersect: return x && y;
      case BoolOp::difference: return x && !y;
    }
    return false;
  };
  return Lang::from_dfa(a.alphabet_ptr(), detail::product(a.dfa(), b.dfa(), accept));
}

inline Lang union_of(const Lang& a, const Lang& b) { return boolean(BoolOp::union_of, a, b); }
inline Lang intersect(const Lang& a, const Lang& b) { return boolean(BoolOp::intersect, a, b); }
inline Lang difference(const Lang& a, const Lang& b) { return boolean(BoolOp::difference, a, b); }

/// Complement relative to the universe of the alphabet.
inline Lang complement(const Lang& a) {
  auto d = a.dfa();
  for (auto& acc : d.accepting) acc = acc ? 0 : 1;
  return Lang::from_dfa(a.alphabet_ptr(), std::move(d));
}

inline Lang concat(const Lang& a, const Lang& b) {
  require_same_alphabet(a, b, "concat");
  detail::Nfa n;
  n.symbols = a.alphabet().size();
  auto off_a = n.embed(a.dfa());
  auto off_b = n.embed(b.dfa());
  for (detail::State q = 0; q < a.state_count(); ++q) {
    n.accepting[off_a + q] = 0;
    if (a.accepting(q)) n.epsilon[off_a + q].push_back(off_b + b.initial());
  }
  n.initial.push_back(off_a + a.initial());
  return Lang::from_dfa(a.alphabet_ptr(), detail::determinize(n));
}

inline Lang kleene_star(const Lang& a) {
  detail::Nfa n;
  n.symbols = a.alphabet().size();
  auto start = n.add_state(true);
  auto off = n.embed(a.dfa());
  n.epsilon[start].push_back(off + a.initial());
  for (detail::State q = 0; q < a.state_count(); ++q)
    if (a.accepting(q)) n.epsilon[off + q].push_back(start);
  n.initial.push_back(start);
  return Lang::from_dfa(a.alphabet_ptr(), detail::determinize(n));
}

/// K Sigma*: once a run reaches an accepting state every continuation is
/// accepted. Same language as concat(k, universe) without subset construction.
inline Lang append_universe(const Lang& k) {
  auto d = k.dfa();
  auto top = d.add_state(true);
  for (Symbol a = 0; a < d.symbols; ++a) d.next(top, a) = top;
  for (detail::State q = 0; q < top; ++q)
    if (d.accepting[q])
      for (Symbol a = 0; a < d.symbols; ++a) d.next(q, a) = top;
  return Lang::from_dfa(k.alphabet_ptr(), std::move(d));
}

inline Lang prefix_closure(const Lang& k) {
  auto d = k.dfa();
  d.accepting = k.live_states();
  return Lang::from_dfa(k.alphabet_ptr(), std::move(d));
}

/// k / suffixes*: words that extend into k by a word over `suffixes`.
inline Lang right_quotient_star(const Lang& k, const SymbolSet& suffixes) {
  for (Symbol a : suffixes)
    if (a >= k.alphabet().size()) throw InvalidInput("right quotient: unknown suffix symbol");
  auto d = k.dfa();
  d.accepting = detail::coreachable(k.dfa(), [&](Symbol a) { return suffixes.contains(a); });
  return Lang::from_dfa(k.alphabet_ptr(), std::move(d));
}

/// Natural projection onto `onto`: erase every other symbol. The result is
/// over the projected alphabet, which records k's alphabet as its origin.
inline Lang project(const Lang& k, const SymbolSet& onto) {
  AlphabetPtr target = k.alphabet().projected(onto);
  std::vector<detail::State> index(k.alphabet().size(), detail::kNoState);
  Symbol next_index = 0;
  for (Symbol a : onto) index[a] = next_index++;
  detail::Nfa n;
  n.symbols = target->size();
  for (detail::State q = 0; q < k.state_count(); ++q) n.add_state(k.accepting(q));
  for (detail::State q = 0; q < k.state_count(); ++q)
    for (Symbol a = 0; a < k.alphabet().size(); ++a) {
      detail::State r = k.next(q, a);
      if (index[a] == detail::kNoState) {
        if (r != q) n.epsilon[q].push_back(r);
      } else {
        n.edges[q].emplace_back(index[a], r);
      }
    }
  n.initial.push_back(k.initial());
  return Lang::from_dfa(std::move(target), detail::determinize(n));
}

/// Projection onto the observable symbols of k's alphabet.
inline Lang project(const Lang& k) { return project(k, k.alphabet().observable_set()); }

/// All words over `into` whose observable projection lies in kp. kp must be
/// over exactly the observable symbols of `into`.
inline Lang inverse_project(const Lang& kp, const AlphabetPtr& into) {
  const Alphabet& from = kp.alphabet();
  if (from.origin() != nullptr && !(*from.origin() == *into))
    throw InvalidInput("inverse projection: language was projected from a different alphabet");
  std::vector<std::string> expected;
  for (Symbol a : into->observable_set()) expected.push_back(into->name(a));
  if (from.names() != expected)
    throw InvalidInput("inverse projection: alphabet is not the observable part of the target");
  detail::Dfa d;
  d.symbols = into->size();
  for (detail::State q = 0; q < kp.state_count(); ++q) d.add_state(kp.accepting(q));
  d.initial = kp.initial();
  Symbol sub = 0;
  std::vector<detail::State> index(into->size(), detail::kNoState);
  for (Symbol a = 0; a < into->size(); ++a)
    if (into->observable(a)) index[a] = sub++;
  for (detail::State q = 0; q < kp.state_count(); ++q)
    for (Symbol a = 0; a < into->size(); ++a)
      d.next(q, a) = index[a] == detail::kNoState ? q : kp.next(q, index[a]);
  return Lang::from_dfa(into, std::move(d));
}

/// P^{-1} P (k) with respect to k's own observable symbols.
inline Lang observation_closure(const Lang& k) {
  return inverse_project(project(k), k.alphabet_ptr());
}

inline bool subset_of(const Lang& a, const Lang& b) {
  require_same_alphabet(a, b, "subset");
  return !detail::product_reaches(a.dfa(), b.dfa(), [](bool x, bool y) { return x && !y; });
}

enum class Ordering { equal, a_subset, b_subset, incomparable };

inline Ordering compare(const Lang& a, const Lang& b) {
  require_same_alphabet(a, b, "compare");
  bool ab = subset_of(a, b), ba = subset_of(b, a);
  if (ab && ba) return Ordering::equal;
  if (ab) return Ordering::a_subset;
  if (ba) return Ordering::b_subset;
  return Ordering::incomparable;
}

inline const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::equal: return "equal";
    case Ordering::a_subset: return "a_subset";
    case Ordering::b_subset: return "b_subset";
    case Ordering::incomparable: return "incomparable";
  }
  return "?";
}

/// Members of length <= max_len in length-then-lexicographic order.
inline std::vector<Word> enumerate(const Lang& k, std::size_t max_len) {
  std::vector<Word> out;
  auto live = k.live_states();
  std::vector<std::pair<Word, detail::State>> layer;
  if (live[k.initial()]) layer.emplace_back(Word{}, k.initial());
  for (std::size_t len = 0; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::pair<Word, detail::State>> next_layer;
    for (auto& [w, q] : layer) {
      if (k.accepting(q)) out.push_back(w);
      if (len == max_len) continue;
      for (Symbol a = 0; a < k.alphabet().size(); ++a) {
        auto r = k.next(q, a);
        if (!live[r]) continue;
        Word v = w;
        v.push_back(a);
        next_layer.emplace_back(std::move(v), r);
      }
    }
    layer = std::move(next_layer);
  }
  return out;
}

inline WordSet enumerate_set(const Lang& k, std::size_t max_len) {
  auto v = enumerate(k, max_len);
  return WordSet(v.begin(), v.end());
}

/// Shortlex-least member, if any.
inline std::optional<Word> shortest_member(const Lang& k) {
  const auto n = k.state_count();
  std::vector<std::pair<detail::State, Symbol>> parent(n, {detail::kNoState, 0});
  std::vector<char> seen(n, 0);
  std::vector<detail::State> queue{k.initial()};
  seen[k.initial()] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto q = queue[i];
    if (k.accepting(q)) {
      Word w;
      while (q != k.initial()) {
        w.push_back(parent[q].second);
        q = parent[q].first;
      }
      return Word(w.rbegin(), w.rend());
    }
    for (Symbol a = 0; a < k.alphabet().size(); ++a) {
      auto r = k.next(q, a);
      if (!seen[r]) {
        seen[r] = 1;
        parent[r] = {q, a};
        queue.push_back(r);
      }
    }
  }
  return std::nullopt;
}

}  // namespace suprema

#endif  // SUPREMA_LANG_HPP
