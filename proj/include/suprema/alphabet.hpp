#ifndef SUPREMA_ALPHABET_HPP
#define SUPREMA_ALPHABET_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "suprema/errors.hpp"

namespace suprema {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;
using SymbolSet = std::set<Symbol>;

/// Length-then-lexicographic order on words (symbols compared by index).
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using WordSet = std::set<Word, ShortLex>;

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// A finite ordered symbol set with designated observable and uncontrollable
/// subsets. Symbols are addressed by their position in declaration order.
///
/// An alphabet produced by `projected()` remembers the alphabet it was cut
/// from, so projected languages can only be lifted back to where they came
/// from.
class Alphabet : public std::enable_shared_from_this<Alphabet> {
 public:
  struct Private {};

  Alphabet(Private, std::vector<std::string> names, std::vector<bool> observable,
           std::vector<bool> uncontrollable, AlphabetPtr origin)
      : names_(std::move(names)),
        observable_(std::move(observable)),
        uncontrollable_(std::move(uncontrollable)),
        origin_(std::move(origin)) {}

  static AlphabetPtr make(std::vector<std::string> names,
                          const std::vector<std::string>& observable,
                          const std::vector<std::string>& uncontrollable) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!valid_name(names[i])) throw InvalidInput("invalid symbol name '" + names[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (names[i] == names[j]) throw InvalidInput("duplicate symbol '" + names[i] + "'");
    }
    auto mark = [&](const std::vector<std::string>& subset, const char* what) {
      std::vector<bool> bits(names.size(), false);
      for (const auto& s : subset) {
        auto it = std::find(names.begin(), names.end(), s);
        if (it == names.end())
          throw InvalidInput(std::string(what) + " symbol '" + s + "' is not declared");
        bits[static_cast<std::size_t>(it - names.begin())] = true;
      }
      return bits;
    };
    auto obs = mark(observable, "observable");
    auto unc = mark(uncontrollable, "uncontrollable");
    return std::make_shared<const Alphabet>(Private{}, std::move(names), std::move(obs),
                                            std::move(unc), nullptr);
  }

  /// Fully observable, fully controllable alphabet.
  static AlphabetPtr plain(std::vector<std::string> names) {
    auto copy = names;
    return make(std::move(names), copy, {});
  }

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  const std::string& name(Symbol s) const { return names_.at(s); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Symbol> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<Symbol>(i);
    return std::nullopt;
  }

  Symbol symbol(std::string_view name) const {
    if (auto s = find(name)) return *s;
    throw InvalidInput("unknown symbol '" + std::string(name) + "'");
  }

  bool observable(Symbol s) const { return observable_.at(s); }
  bool uncontrollable(Symbol s) const { return uncontrollable_.at(s); }
  bool controllable(Symbol s) const { return !uncontrollable_.at(s); }

  SymbolSet all() const { return select([](Symbol) { return true; }); }
  SymbolSet observable_set() const {
    return select([this](Symbol s) { return observable(s); });
  }
  SymbolSet uncontrollable_set() const {
    return select([this](Symbol s) { return uncontrollable(s); });
  }
  SymbolSet controllable_set() const {
    return select([this](Symbol s) { return controllable(s); });
  }

  /// Every controllable symbol is observable.
  bool controllable_observed() const {
    for (Symbol s = 0; s < size(); ++s)
      if (controllable(s) && !observable(s)) return false;
    return true;
  }

  const Alphabet* origin() const { return origin_.get(); }

  /// Sub-alphabet keeping the symbols of `onto` in declaration order. Every
  /// kept symbol is observable; uncontrollability is inherited.
  AlphabetPtr projected(const SymbolSet& onto) const {
    std::vector<std::string> names;
    std::vector<bool> unc;
    for (Symbol s : onto) {
      if (s >= size()) throw InvalidInput("projection symbol out of range");
      names.push_back(names_[s]);
      unc.push_back(uncontrollable(s));
    }
    std::vector<bool> obs(names.size(), true);
    return std::make_shared<const Alphabet>(Private{}, std::move(names), std::move(obs),
                                            std::move(unc), shared_from_this());
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    if (&a == &b) return true;
    return a.names_ == b.names_ && a.observable_ == b.observable_ &&
           a.uncontrollable_ == b.uncontrollable_;
  }

  bool single_char_names() const {
    return std::all_of(names_.begin(), names_.end(),
                       [](const std::string& n) { return n.size() == 1; });
  }

  /// Text form of a word: plain concatenation when every symbol name is one
  /// character, otherwise names joined by '.'. The empty word is "".
  std::string format(const Word& w) const {
    std::string out;
    const bool compact = single_char_names();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!compact && i > 0) out += '.';
      out += name(w[i]);
    }
    return out;
  }

  Word parse(std::string_view text) const {
    Word w;
    if (text.empty()) return w;
    if (single_char_names() && text.find('.') == std::string_view::npos) {
      for (char c : text) w.push_back(symbol(std::string_view(&c, 1)));
      return w;
    }
    std::size_t start = 0;
    while (true) {
      auto dot = text.find('.', start);
      w.push_back(symbol(text.substr(start, dot - start)));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
    return w;
  }

  static bool valid_name(std::string_view n) {
    if (n.empty()) return false;
    return std::all_of(n.begin(), n.end(), [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
             c == '_';
    });
  }

 private:
  template <typename Pred>
  SymbolSet select(Pred pred) const {
    SymbolSet out;
    for (Symbol s = 0; s < size(); ++s)
      if (pred(s)) out.insert(s);
    return out;
  }

  std::vector<std::string> names_;
  std::vector<bool> observable_;
  std::vector<bool> uncontrollable_;
  AlphabetPtr origin_;
};

}  // namespace suprema

#endif  // SUPREMA_ALPHABET_HPP
