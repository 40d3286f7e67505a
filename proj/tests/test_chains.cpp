#include <gtest/gtest.h>

#include <vector>

#include "support/oracles.hpp"
#include "wf/chains.hpp"
#include "wf/ordinal.hpp"
#include "wf/properties.hpp"

using namespace wf;

TEST(Chains, OrderNamesRoundTrip) {
  for (ChainOrder o : all_chain_orders()) EXPECT_EQ(parse_chain_order(to_string(o)), o);
  EXPECT_FALSE(parse_chain_order("int").has_value());
}

TEST(Chains, ParseNatList) {
  EXPECT_EQ(parse_nat_list(""), std::vector<Nat>{});
  EXPECT_EQ(parse_nat_list("3,1,0"), (std::vector<Nat>{3, 1, 0}));
  EXPECT_EQ(parse_nat_list(" 4 , 2 "), (std::vector<Nat>{4, 2}));
  EXPECT_THROW(parse_nat_list("1,"), ParseError);
  EXPECT_THROW(parse_nat_list("1 2"), ParseError);
  EXPECT_THROW(parse_nat_list("a"), ParseError);
  EXPECT_THROW(parse_nat("99999999999999999999999"), ParseError);
  EXPECT_THROW(parse_nat("5x"), ParseError);
}

TEST(Chains, NonDescendingPowerListIsInputError) {
  EXPECT_THROW(descending_nat_list({1, 1}), InputError);
  EXPECT_THROW(descending_nat_list({0, 2}), InputError);
  EXPECT_THROW(run_chain(ChainOrder::PowNat, "1,1", 0, 100), InputError);
  EXPECT_THROW(run_chain(ChainOrder::PowNat, "40", 0, 100), InputError);
  EXPECT_NO_THROW(descending_nat_list({2, 1}));
}

TEST(Chains, NatChainEndsAtZero) {
  auto c = run_chain(ChainOrder::Nat, "9", 0, 10000);
  EXPECT_FALSE(c.exhausted);
  EXPECT_LE(c.elements.size(), 10u);
  EXPECT_EQ(c.elements.front(), "9");
  EXPECT_EQ(c.elements.back(), "0");
  EXPECT_EQ(c.bound, Nat{10});
}

TEST(Chains, PowChainWithinBinaryRank) {
  auto c = run_chain(ChainOrder::PowNat, "3,1,0", 7, 10000);
  EXPECT_FALSE(c.exhausted);
  EXPECT_EQ(c.elements.front(), "[3, 1, 0]");
  EXPECT_EQ(c.elements.back(), "[]");
  EXPECT_LE(c.elements.size(), 16u);
  EXPECT_EQ(c.bound, Nat{12});
  EXPECT_TRUE(c.within_bound());
}

TEST(Chains, StepBudgetExhausts) {
  auto c = run_chain(ChainOrder::Nat, "5", 0, 2);
  EXPECT_TRUE(c.exhausted);
  EXPECT_EQ(c.elements.size(), 2u);
}

TEST(Chains, SameSeedSameChain) {
  for (Nat seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(run_chain(ChainOrder::Ord, "w^2 + w*3", seed, 10000).elements,
              run_chain(ChainOrder::Ord, "w^2 + w*3", seed, 10000).elements);
    EXPECT_EQ(run_chain(ChainOrder::MultisetNat, "4,2,2", seed, 10000).elements,
              run_chain(ChainOrder::MultisetNat, "4,2,2", seed, 10000).elements);
  }
}

TEST(Chains, MultisetChainsDescendAndRespectBound) {
  for (Nat seed = 0; seed < 30; ++seed) {
    auto c = run_chain(ChainOrder::MultisetNat, "3,1,1", seed, 10000);
    EXPECT_FALSE(c.exhausted);
    EXPECT_TRUE(c.within_bound()) << c.elements.size();
    EXPECT_EQ(c.elements.back(), "{}");
  }
  EXPECT_EQ(run_chain(ChainOrder::MultisetNat, "3,1,1", 0, 10).bound, Nat{27 + 3 + 3 + 1});
}

TEST(Chains, MultisetStepdownIsSubrelation) {
  auto step = multiset_stepdown();
  auto full = multiset_relation(nat_less());
  auto m = multiset_of(nat_less(), {3, 1, 1});
  auto preds = step.predecessors(m);
  // remove 3, 3 -> 0/00/1/11/2/22, remove 1, 1 -> 0/00
  EXPECT_EQ(preds.size(), 1u + 6u + 1u + 2u);
  for (auto& [y, e] : preds) {
    EXPECT_TRUE(full.relates(y, m));
    EXPECT_TRUE(step.relates(y, m));
    EXPECT_TRUE(oracle::dm_less(occurrences(y), occurrences(m)));
  }
  EXPECT_FALSE(step.relates(multiset_of(nat_less(), {2, 2, 2}), m));
  EXPECT_TRUE(full.relates(multiset_of(nat_less(), {2, 2, 2}), m));
}

TEST(Chains, OrdinalChainsWithinBound) {
  for (Nat seed = 0; seed < 30; ++seed) {
    auto c = run_chain(ChainOrder::Ord, "w^2 + w + 2", seed, 10000);
    EXPECT_FALSE(c.exhausted);
    EXPECT_TRUE(c.within_bound());
    EXPECT_EQ(c.elements.back(), "0");
    for (std::size_t i = 1; i < c.elements.size(); ++i) {
      EXPECT_TRUE(parse_ordinal(c.elements[i]) < parse_ordinal(c.elements[i - 1]));
    }
  }
  EXPECT_EQ(run_chain(ChainOrder::Ord, "w^2 + w + 2", 0, 10).bound, Nat{9 + 3 + 2 + 1});
  EXPECT_FALSE(run_chain(ChainOrder::Ord, "w^w", 0, 10000).bound.has_value());
}

TEST(Properties, EverySuitePasses) {
  for (Nat seed : {Nat{0}, Nat{1}}) {
    for (const auto& suite : run_property_suites(seed)) {
      EXPECT_FALSE(suite.results.empty());
      for (const auto& r : suite.results) EXPECT_TRUE(r.passed) << suite.name << ": " << r.name << ": " << r.detail;
    }
  }
}
