#include <algorithm>

#include <gtest/gtest.h>

#include "suprema/sampling.hpp"
#include "support.hpp"

using namespace suprema;
using namespace suprema::test;

namespace {

// Two words are trace-equivalent iff their projections onto every pair of
// dependent symbols coincide.
bool equivalent(const Word& v, const Word& w, const IndependenceRelation& rel, std::size_t symbols) {
  for (Symbol x = 0; x < symbols; ++x)
    for (Symbol y = x; y < symbols; ++y) {
      if (x != y && rel.independent(x, y)) continue;
      auto keep = [&](const Word& u) {
        Word out;
        for (Symbol s : u)
          if (s == x || s == y) out.push_back(s);
        return out;
      };
      if (keep(v) != keep(w)) return false;
    }
  return true;
}

WordSet class_of(const WordSet& k, const IndependenceRelation& rel, std::size_t n) {
  const auto& sigma = *rel.alphabet_ptr();
  WordSet out;
  for (const Word& w : enumerate(Lang::up_to_length(rel.alphabet_ptr(), n), n))
    for (const Word& v : k)
      if (equivalent(v, w, rel, sigma.size())) out.insert(w);
  return out;
}

TEST(Independence, RejectsReflexivePairs) {
  auto s = Alphabet::plain({"a", "b"});
  EXPECT_THROW(IndependenceRelation(s, {{0, 0}}), InvalidInput);
  EXPECT_THROW(IndependenceRelation(s, {{0, 5}}), InvalidInput);
  IndependenceRelation rel(s, {{1, 0}});
  EXPECT_TRUE(rel.independent(0, 1));
  EXPECT_TRUE(rel.independent(1, 0));
}

TEST(Independence, TwoSymbolSwap) {
  auto s = Alphabet::plain({"a", "b"});
  IndependenceRelation rel(s, {{0, 1}});
  EXPECT_EQ(listing(*s, trace_closure_bounded({s->parse("ab")}, rel, 2)), (Strings{"ab", "ba"}));
}

TEST(Independence, ThreeSymbolChain) {
  auto s = Alphabet::plain({"a", "b", "c"});
  IndependenceRelation rel(s, {{0, 1}, {1, 2}});
  WordSet k{s->parse("abc")};
  WordSet closed = trace_closure_bounded(k, rel, 3);
  EXPECT_EQ(closed, class_of(k, rel, 3));
  EXPECT_EQ(listing(*s, closed), (Strings{"abc", "acb", "bac"}));
}

TEST(Independence, RejectsOverlongWords) {
  auto s = Alphabet::plain({"a", "b"});
  IndependenceRelation rel(s, {{0, 1}});
  EXPECT_THROW(trace_closure_bounded({s->parse("aba")}, rel, 2), InvalidInput);
}

TEST(Independence, RandomClosuresMatchProjectionCharacterization) {
  sampling::Rng rng(3);
  for (int round = 0; round < 60; ++round) {
    auto s = sampling::random_alphabet(rng, 3);
    std::vector<std::pair<Symbol, Symbol>> pairs;
    for (Symbol a = 0; a < s->size(); ++a)
      for (Symbol b = a + 1; b < s->size(); ++b)
        if (sampling::coin(rng)) pairs.emplace_back(a, b);
    IndependenceRelation rel(s, pairs);
    auto pool = enumerate(Lang::up_to_length(s, 3), 3);
    WordSet k = sampling::random_subset(pool, 0.2, 6, rng);
    EXPECT_EQ(trace_closure_bounded(k, rel, 3), class_of(k, rel, 3));
  }
}

}  // namespace
