#ifndef SUPREMA_TESTS_SUPPORT_HPP
#define SUPREMA_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "suprema/suprema.hpp"

namespace suprema::test {

inline Lang words(const AlphabetPtr& sigma, std::initializer_list<std::string_view> ws) {
  return Lang::of_words(sigma, ws);
}

/// Members up to length n, formatted, in shortlex order.
inline std::vector<std::string> listing(const Lang& l, std::size_t n = 6) {
  std::vector<std::string> out;
  for (const Word& w : enumerate(l, n)) out.push_back(l.alphabet().format(w));
  return out;
}

inline std::vector<std::string> listing(const Alphabet& sigma, const WordSet& ws) {
  std::vector<std::string> out;
  for (const Word& w : ws) out.push_back(sigma.format(w));
  return out;
}

using Strings = std::vector<std::string>;

/// Word-level reference implementations, used as independent oracles for
/// automaton operations on finite languages.
namespace naive {

inline WordSet concat(const WordSet& a, const WordSet& b) {
  WordSet out;
  for (const Word& x : a)
    for (const Word& y : b) {
      Word w = x;
      w.insert(w.end(), y.begin(), y.end());
      out.insert(w);
    }
  return out;
}

inline WordSet prefixes(const WordSet& k) { return oracle::prefixes(k); }

/// Words w with w v in k for some v over `suffixes`.
inline WordSet quotient_star(const WordSet& k, const SymbolSet& suffixes) {
  WordSet out;
  for (const Word& w : k)
    for (std::size_t n = w.size() + 1; n-- > 0;) {
      out.insert(Word(w.begin(), w.begin() + n));
      if (n == 0 || !suffixes.contains(w[n - 1])) break;
    }
  return out;
}

inline WordSet project(const Alphabet& sigma, const WordSet& k) {
  WordSet out;
  for (const Word& w : k) out.insert(oracle::observe(sigma, w));
  return out;
}

}  // namespace naive

}  // namespace suprema::test

#endif  // SUPREMA_TESTS_SUPPORT_HPP
