#include <gtest/gtest.h>

#include "suprema/sampling.hpp"
#include "support.hpp"

using namespace suprema;
using namespace suprema::test;

namespace {

TEST(Operators, NamesRoundTrip) {
  for (auto [tag, name] : kOperatorNames) {
    EXPECT_EQ(parse_operator_tag(name), tag);
    EXPECT_EQ(to_string(tag), name);
  }
  EXPECT_FALSE(parse_operator_tag("bogus").has_value());
}

TEST(Operators, ControllableQuotientOnSmallPlant) {
  auto s = Alphabet::make({"a", "u"}, {"a", "u"}, {"u"});
  Lang l = words(s, {"", "a", "u", "au"});
  auto c = make_operator({OperatorTag::controllable_c, {s, l}});
  Lang k = words(s, {"", "a"});
  // Oracle: suffix enumeration, then intersect with L(G) word by word.
  WordSet expected;
  for (const Word& w : naive::quotient_star({Word{}, s->parse("a")}, {s->symbol("u")}))
    if (l.accepts(w)) expected.insert(w);
  EXPECT_EQ(listing(c.apply(k)), listing(*s, expected));
  EXPECT_EQ(listing(c.apply(k)), (Strings{"", "a"}));
}

TEST(Operators, OptimizedControllableOnWorkedPlant) {
  auto s = Alphabet::make({"a", "b", "u"}, {"a", "b", "u"}, {"u"});
  Lang l = words(s, {"", "a", "b", "ab", "au"});
  auto o = make_operator({OperatorTag::controllable_o, {s, l}});
  Lang got = o.apply(words(s, {"au"}));
  WordSet quotient = naive::quotient_star({s->parse("au")}, {s->symbol("u")});
  WordSet expected;
  for (const Word& w : enumerate(l, 2))
    for (const Word& q : quotient)
      if (w.size() >= q.size() && std::equal(q.begin(), q.end(), w.begin())) expected.insert(w);
  EXPECT_EQ(listing(got), listing(*s, expected));
  EXPECT_EQ(listing(got), (Strings{"a", "ab", "au"}));
}

TEST(Operators, NormalityUnderFullObservationIsIdentity) {
  sampling::Rng rng(21);
  for (int i = 0; i < 20; ++i) {
    auto s = Alphabet::plain({"a", "b"});
    auto plant = sampling::random_plant(s, 4, rng);
    auto n = make_operator({OperatorTag::normal, {s, std::nullopt, plant.marked}});
    Lang k = sampling::random_within(plant.marked, 4, rng);
    EXPECT_EQ(n.apply(k), k);
  }
}

TEST(Operators, ConfigurationErrors) {
  auto hidden = Alphabet::make({"a", "b"}, {"a"}, {});
  Lang l = Lang::universe(hidden);
  EXPECT_THROW(make_operator({OperatorTag::controllable_normal_a, {hidden, l}}), InvalidConfiguration);
  EXPECT_THROW(make_operator({OperatorTag::trace_bounded, {hidden}}), InvalidConfiguration);
  EXPECT_THROW(make_operator({OperatorTag::normal, {hidden}}), InvalidConfiguration);
  EXPECT_THROW(make_operator({OperatorTag::controllable_c, {hidden}}), InvalidConfiguration);
}

TEST(Operators, TraceOperatorRejectsInfiniteArguments) {
  auto s = Alphabet::plain({"a", "b"});
  IndependenceRelation rel(s, {{0, 1}});
  OperatorParams params{s, std::nullopt, std::nullopt, rel, 2};
  auto t = make_operator({OperatorTag::trace_bounded, params});
  EXPECT_EQ(t.carrier(), Lang::up_to_length(s, 2));
  EXPECT_EQ(listing(t.apply(words(s, {"ab"}))), (Strings{"ab", "ba"}));
  EXPECT_THROW(t.apply(Lang::universe(s)), InvalidInput);
}

TEST(Operators, Duals) {
  auto s = Alphabet::make({"a", "u"}, {"a", "u"}, {"u"});
  Lang l = words(s, {"", "a", "u", "au"});
  OperatorParams params{s, l, l};
  auto pre = make_operator({OperatorTag::prefix_closure, params});
  auto dual = make_operator({OperatorTag::prefix_closure_dual, params});
  EXPECT_NE(register_dual(pre, dual).dual(), nullptr);
  auto n = make_operator({OperatorTag::normal, params});
  EXPECT_NE(register_dual(n, n).dual(), nullptr);
  auto c = make_operator({OperatorTag::controllable_c, params});
  EXPECT_THROW(register_dual(make_operator({OperatorTag::prefix, params}), c), InvalidConfiguration);

  EXPECT_NE(make_operator_with_dual({OperatorTag::prefix_closure, params}).dual(), nullptr);
  EXPECT_NE(make_operator_with_dual({OperatorTag::normal, params}).dual(), nullptr);
  EXPECT_EQ(make_operator_with_dual({OperatorTag::prefix, params}).dual(), nullptr);
}

TEST(Operators, PrefixPairDualEquivalence) {
  sampling::Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    auto s = sampling::random_alphabet(rng, 3);
    Lang x = i % 3 == 0 ? prefix_closure(sampling::random_lang(s, 5, rng)) : sampling::random_lang(s, 5, rng);
    Lang all = Lang::universe(s);
    const bool closed = prefix_closure(x) == x;
    const bool dual_open = difference(all, append_universe(difference(all, x))) == x;
    EXPECT_EQ(closed, dual_open);
  }
}

TEST(Operators, MonotoneOnNestedPairs) {
  sampling::Rng rng(19);
  for (int i = 0; i < 40; ++i) {
    auto s = sampling::random_alphabet(rng, 3, true);
    auto plant = sampling::random_plant(s, 4, rng);
    OperatorParams params{s, plant.closed, plant.marked};
    for (OperatorTag tag : {OperatorTag::normal, OperatorTag::l_closed, OperatorTag::prefix,
                            OperatorTag::controllable_c, OperatorTag::controllable_o,
                            OperatorTag::controllable_normal_a}) {
      auto op = make_operator({tag, params});
      Lang b = sampling::random_within(op.carrier(), 5, rng);
      Lang a = intersect(b, sampling::random_lang(s, 3, rng));
      EXPECT_TRUE(subset_of(op.apply(a), op.apply(b))) << op.name();
    }
  }
}

TEST(Operators, ObservationClosureOfQuotientIsQuotientStable) {
  sampling::Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    auto s = sampling::random_alphabet(rng, 3, true);
    auto plant = sampling::random_plant(s, 4, rng);
    Lang li = sampling::random_within(plant.closed, 4, rng);
    const SymbolSet unc = s->uncontrollable_set();
    Lang x = observation_closure(right_quotient_star(difference(plant.closed, prefix_closure(li)), unc));
    EXPECT_EQ(right_quotient_star(x, unc), x);
  }
}

}  // namespace
