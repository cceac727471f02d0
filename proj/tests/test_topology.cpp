#include <gtest/gtest.h>

#include "suprema/sampling.hpp"
#include "support.hpp"

using namespace suprema;
using namespace suprema::test;

namespace {

ClosureOperator drop_epsilon(const AlphabetPtr& s) {
  return ClosureOperator("drop_epsilon", Lang::universe(s),
                         [s](const Lang& k) { return difference(k, Lang::epsilon(s)); });
}

ClosureOperator identity_on(const Lang& m) {
  return ClosureOperator("identity", m, [](const Lang& k) { return k; }, true);
}

ClosureOperator normal_op(const AlphabetPtr& s, const Lang& lm) {
  return make_operator({OperatorTag::normal, {s, std::nullopt, lm}});
}

std::vector<Lang> samples_in(const Lang& carrier, std::size_t n, sampling::Rng& rng) {
  std::vector<Lang> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(sampling::random_within(carrier, 5, rng));
  return out;
}

TEST(Topology, ClosureAndInteriorOfNormality) {
  auto s = Alphabet::make({"a", "b"}, {"a"}, {});
  Lang lm = words(s, {"a", "b", "ab"});
  auto n = normal_op(s, lm);
  EXPECT_TRUE(interior(n, words(s, {"a"})).is_empty());
  EXPECT_EQ(listing(interior(n, words(s, {"a", "b"}))), (Strings{"b"}));
  EXPECT_EQ(interior(n, lm), lm);
  EXPECT_TRUE(closure(n, Lang::empty(s)).is_empty());
}

TEST(Topology, CarrierViolationIsRejected) {
  auto s = Alphabet::make({"a", "b"}, {"a"}, {});
  auto n = normal_op(s, words(s, {"a"}));
  EXPECT_THROW(closure(n, words(s, {"b"})), InvalidInput);
  EXPECT_THROW(interior(n, words(s, {"b"})), InvalidInput);
}

TEST(Topology, NonExtensiveOperatorFailsS1) {
  auto s = Alphabet::plain({"a"});
  auto op = drop_epsilon(s);
  std::vector<Lang> samples{words(s, {"a"}), Lang::epsilon(s)};
  std::vector<std::pair<Lang, Lang>> pairs{{words(s, {"a"}), Lang::epsilon(s)}};
  AxiomReport r = check_axioms(op, samples, pairs);
  const AxiomVerdict* s1 = r.find(Axiom::extensive);
  ASSERT_NE(s1, nullptr);
  EXPECT_FALSE(s1->passed);
  ASSERT_EQ(s1->counterexample.size(), 1u);
  EXPECT_EQ(s1->counterexample[0], Lang::epsilon(s));
  EXPECT_FALSE(replay(op, *s1));
  EXPECT_FALSE(r.passed());
}

TEST(Topology, IdentityPassesEverything) {
  sampling::Rng rng(5);
  auto s = Alphabet::plain({"a", "b"});
  auto op = identity_on(Lang::universe(s));
  auto samples = samples_in(Lang::universe(s), 20, rng);
  std::vector<std::pair<Lang, Lang>> pairs;
  for (std::size_t i = 0; i + 1 < samples.size(); i += 2) pairs.emplace_back(samples[i], samples[i + 1]);
  EXPECT_TRUE(check_axioms(op, samples, pairs).passed());
  EXPECT_TRUE(check_clopen(op, samples).passed());
}

TEST(Topology, InteriorProperties) {
  sampling::Rng rng(9);
  for (int round = 0; round < 40; ++round) {
    auto s = sampling::random_alphabet(rng, 3);
    auto plant = sampling::random_plant(s, 4, rng);
    const ClosureOperator ops[] = {
        normal_op(s, plant.marked),
        make_operator({OperatorTag::l_closed, {s, std::nullopt, plant.marked}}),
        make_operator({OperatorTag::prefix, {s}}),
        make_operator({OperatorTag::controllable_o, {s, plant.closed}}),
    };
    for (const auto& op : ops) {
      const Lang& m = op.carrier();
      Lang a = sampling::random_within(m, 5, rng);
      Lang b = sampling::random_within(m, 5, rng);
      Lang ia = interior(op, a), ib = interior(op, b);
      // Duality.
      EXPECT_EQ(difference(m, ia), closure(op, difference(m, a))) << op.name();
      // Contractive, idempotent, fixes the carrier.
      EXPECT_TRUE(subset_of(ia, a)) << op.name();
      EXPECT_EQ(interior(op, ia), ia) << op.name();
      EXPECT_EQ(interior(op, m), m) << op.name();
      // Super-intersection-distributive.
      EXPECT_TRUE(subset_of(intersect(ia, ib), interior(op, intersect(a, b)))) << op.name();
      // Unions of open sets are open.
      EXPECT_TRUE(is_open(op, union_of(ia, ib))) << op.name();
    }
  }
}

TEST(Topology, ClopenOperatorsAgreeOnOpenAndClosed) {
  sampling::Rng rng(13);
  for (int round = 0; round < 40; ++round) {
    auto s = sampling::random_alphabet(rng, 3);
    auto plant = sampling::random_plant(s, 4, rng);
    auto op = normal_op(s, plant.marked);
    Lang k = sampling::random_within(plant.marked, 4, rng);
    EXPECT_EQ(is_closed(op, k), is_open(op, k));
    Lang c = closure(op, k);
    EXPECT_TRUE(is_open(op, c));
  }
}

TEST(Topology, PrefixOperatorIsNotClopen) {
  auto s = Alphabet::plain({"a", "b"});
  auto p = make_operator({OperatorTag::prefix, {s}});
  EXPECT_EQ(closure(p, words(s, {"a"})), concat(words(s, {"a"}), Lang::universe(s)));
  std::vector<Lang> samples{Lang::empty(s), words(s, {"a"})};
  AxiomReport r = check_clopen(p, samples);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.verdicts[0].counterexample[0], words(s, {"a"}));
  EXPECT_FALSE(replay(p, r.verdicts[0]));
}

}  // namespace
