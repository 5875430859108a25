#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "support.hpp"

using namespace abcu;
using namespace abcu::testing;

namespace {

bool gadget_possible(const GadgetOutput& g) { return poscom_brute(g.profile, g.target, g.rule, g.k).answer; }

} // namespace

TEST(OneInThreeGadget, SingleClause) {
  const OneInThreeInstance inst{3, {{0, 1, 2}}};
  const auto g = build_cc_3va(inst);
  EXPECT_EQ(g.profile.voters(), 3 + 6);
  EXPECT_EQ(g.profile.candidates(), 3);
  EXPECT_EQ(classify(g.profile), ModelClass::three_va);
  EXPECT_EQ(g.k, 2);
  EXPECT_EQ(g.rule.spec(), "cc");
  EXPECT_EQ(g.profile.registry.names_of(g.target), (std::vector<std::string>{"w1", "w2"}));
  EXPECT_TRUE(solve_one_in_three_brute(inst));
  EXPECT_TRUE(gadget_possible(g));
}

TEST(OneInThreeGadget, NoClauses) {
  const OneInThreeInstance inst{4, {}};
  const auto g = build_cc_3va(inst);
  EXPECT_EQ(g.profile.voters(), 4 + 6);
  EXPECT_TRUE(gadget_possible(g));
}

TEST(OneInThreeGadget, Unsatisfiable) {
  // every 3-subset of four elements: one true element misses a clause, any
  // two true elements share one
  const OneInThreeInstance inst{4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  EXPECT_FALSE(solve_one_in_three_brute(inst));
  EXPECT_FALSE(gadget_possible(build_cc_3va(inst)));
}

TEST(X3cGadget, Cases) {
  const X3CInstance cover{6, {{0, 1, 2}, {3, 4, 5}}};
  const auto g1 = build_linear_x3c(cover, Score(1));
  EXPECT_EQ(classify(g1.profile), ModelClass::linear);
  EXPECT_EQ(g1.profile.registry.names_of(g1.target), (std::vector<std::string>{"c", "d"}));
  EXPECT_EQ(g1.rule.spec(), "table:0,1,2");
  EXPECT_TRUE(solve_x3c_brute(cover));
  EXPECT_TRUE(gadget_possible(g1));

  const X3CInstance overlap{6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}};
  EXPECT_FALSE(solve_x3c_brute(overlap));
  const auto g2 = build_linear_x3c(overlap, Score(2));
  EXPECT_EQ(g2.rule.spec(), "table:0,1,3");
  EXPECT_FALSE(gadget_possible(g2));
  EXPECT_TRUE(gadget_possible(build_linear_x3c(cover, Score(2))));
  EXPECT_FALSE(gadget_possible(build_linear_x3c(overlap, Score(1))));
}

TEST(X3cGadget, Divisibility) {
  const X3CInstance odd{3, {{0, 1, 2}}};
  for (const Score& x : {Score(1), Score(1, 2), Score(2)}) {
    try {
      (void)build_linear_x3c(odd, x);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::divisibility_violated);
    }
  }
  EXPECT_NO_THROW(build_linear_x3c(X3CInstance{6, {{0, 1, 2}}}, Score(2)));
  EXPECT_THROW(build_linear_x3c(X3CInstance{6, {{0, 1, 2}}}, Score(3, 2)), Error);
  EXPECT_THROW(build_linear_x3c(odd, Score(0)), Error);
}

TEST(Padding, Examples) {
  const auto same = pad_profile(e1(), 0);
  EXPECT_EQ(same.registry, e1().registry);
  EXPECT_EQ(same.ballots, e1().ballots);

  const auto padded = pad_profile(e1(), 1);
  EXPECT_EQ(padded.candidates(), 3);
  EXPECT_EQ(padded.registry.name(2), "d1");
  for (const auto& b : padded.ballots) EXPECT_TRUE(b.top().contains(2));
  EXPECT_EQ(classify(pad_profile(e2(), 2)), ModelClass::linear);
  EXPECT_EQ(padding_set(2, 2), (CandidateSet{2, 3}));

  // fresh names avoid collisions
  const auto clash = pad_profile(profile({"d1"}, {raw({"d1"}, {}, {})}), 1);
  EXPECT_EQ(clash.registry.name(1), "d1'");
}

TEST(Padding, PreservesCompletionCount) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_profile(rng, 4, 4, static_cast<Shape>(trial % 3), 3);
    EXPECT_EQ(count_completions(pad_profile(p, 1 + trial % 3)), count_completions(p));
  }
}

TEST(WeightRelation, Examples) {
  EXPECT_TRUE(verify_weight_relation(WeightFunction::cc(), WeightFunction::binary(2), Score(1), 1, 2));
  EXPECT_FALSE(verify_weight_relation(WeightFunction::cc(), WeightFunction::pav(), Score(1), 1, 2));
  EXPECT_TRUE(verify_weight_relation(WeightFunction::pav(), WeightFunction::pav(), Score(1), 0, 4));
  EXPECT_THROW(verify_weight_relation(WeightFunction::cc(), WeightFunction::table({Score(0), Score(1)}), Score(1), 1, 2),
               Error);
}

TEST(SourceSolvers, Examples) {
  EXPECT_TRUE(solve_x3c_brute(X3CInstance{3, {{0, 1, 2}}}));
  EXPECT_FALSE(solve_x3c_brute(X3CInstance{6, {{0, 1, 2}, {2, 3, 4}}}));
  EXPECT_TRUE(solve_one_in_three_brute(OneInThreeInstance{1, {}}));
  OneInThreeInstance big{21, {}};
  EXPECT_THROW(solve_one_in_three_brute(big), Error);
}

TEST(InstanceText, RoundTrip) {
  const auto inst = parse_x3c("# comment\n6\n1 2 3\n4 5 6 # tail\n");
  EXPECT_EQ(inst.universe, 6);
  ASSERT_EQ(inst.sets.size(), 2U);
  EXPECT_EQ(inst.sets[1], (Triple{3, 4, 5}));
  EXPECT_EQ(format_instance(inst), "6\n1 2 3\n4 5 6\n");
  EXPECT_EQ(parse_x3c(format_instance(inst)).sets, inst.sets);
  EXPECT_THROW(parse_x3c("6\n1 2\n"), Error);
  EXPECT_THROW(parse_x3c("5\n1 2 3\n"), Error);
  EXPECT_THROW(parse_one_in_three("3\n1 1 2\n"), Error);
  EXPECT_THROW(parse_one_in_three("x\n"), Error);
  EXPECT_EQ(parse_one_in_three("3\n1 2 3\n").clauses.size(), 1U);
}

TEST(ReductionProperties, SmallGadgetsMatchSources) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    OneInThreeInstance inst{3 + trial % 3, {}};
    const int clauses = trial % 4;
    for (int i = 0; i < clauses; ++i) {
      std::vector<int> xs(static_cast<std::size_t>(inst.elements));
      std::iota(xs.begin(), xs.end(), 0);
      std::shuffle(xs.begin(), xs.end(), rng);
      inst.clauses.push_back({xs[0], xs[1], xs[2]});
    }
    EXPECT_EQ(gadget_possible(build_cc_3va(inst)), solve_one_in_three_brute(inst));
  }
}
