#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/steps.hpp"
#include "wf/combinators.hpp"
#include "wf/harness.hpp"
#include "wf/nat.hpp"

using namespace wf;
using gen::finite_relation;
using gen::nats;
using gen::random_dag;

namespace {

using IntRel = Relation<int, Unit>;

auto properly_divides() {
  return subrelation(
      nat_less(),
      [](Nat m, Nat n) -> std::optional<Unit> {
        if (m != 0 && m < n && n % m == 0) return Unit{};
        return std::nullopt;
      },
      [](Nat m, Nat n, const Unit&) { return NatLessEvidence::make(m, n); }, "divides");
}
}  // namespace

TEST(Subrelation, ProperDivision) {
  auto rel = properly_divides();
  EXPECT_TRUE(rel.decide(3, 6));
  EXPECT_FALSE(rel.decide(6, 6));
  EXPECT_FALSE(rel.decide(4, 6));
}

TEST(Subrelation, ExistentialDefinition) {
  // m << n iff succ(m + k) = n for some k; the witness k is the evidence.
  auto rel = subrelation(
      nat_less(),
      [](Nat m, Nat n) -> std::optional<Nat> {
        for (Nat k = 0; m + k < n; ++k) {
          if (m + k + 1 == n) return k;
        }
        return std::nullopt;
      },
      [](Nat m, Nat n, Nat) { return NatLessEvidence::make(m, n); }, "exists-k");
  EXPECT_EQ(rel.decide(2, 5), Nat{2});
  EXPECT_FALSE(rel.decide(5, 2));
  for (Nat m = 0; m < 12; ++m) {
    for (Nat n = 0; n < 12; ++n) EXPECT_EQ(rel.relates(m, n), m < n);
  }
}

TEST(Subrelation, RecursionEquation) {
  auto rel = enumerate_over(properly_divides(), nats(40));
  auto report = check_recursion_equation<Nat>(rel, steps::hop(rel), nats(40));
  EXPECT_TRUE(report.ok());
}

TEST(Subrelation, UnsoundEmbedIsFlagged) {
  ScopedEvidenceValidation on(true);
  auto bad = subrelation(
      nat_less(), [](Nat, Nat) -> std::optional<Unit> { return Unit{}; },
      [](Nat m, Nat n, const Unit&) { return NatLessEvidence::make(m, n); }, "bad");
  EXPECT_THROW(bad.decide(5, 2), EvidenceError);
}

TEST(InverseImage, ListLength) {
  auto rel = inverse_image<std::vector<int>>(nat_less(), [](const std::vector<int>& l) { return Nat(l.size()); });
  EXPECT_TRUE(rel.decide({5}, {1, 2}));
  EXPECT_FALSE(rel.decide({1, 2}, {3, 4}));
}

TEST(InverseImage, DecideIsBaseOnMeasure) {
  auto measure = [](Nat x) { return x / 3; };
  auto rel = inverse_image<Nat>(nat_less(), measure);
  for (Nat a = 0; a < 20; ++a) {
    for (Nat b = 0; b < 20; ++b) EXPECT_EQ(rel.relates(a, b), measure(a) < measure(b));
  }
}

TEST(InverseImage, RecursionEquation) {
  auto rel = enumerate_over(inverse_image<Nat>(nat_less(), [](Nat x) { return x / 3; }), nats(30));
  EXPECT_TRUE(check_recursion_equation<Nat>(rel, steps::hop(rel), nats(30)).ok());
}

TEST(TransitiveClosure, ChainThroughMiddle) {
  auto tc = transitive_closure(finite_relation({{0, 1}, {1, 2}}, 3));
  auto e = tc.decide(0, 2);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->nodes, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(e->length(), 2u);
  EXPECT_FALSE(tc.decide(0, 0));
  EXPECT_FALSE(tc.decide(2, 0));
}

TEST(TransitiveClosure, ShortestChainPreferred) {
  auto tc = transitive_closure(finite_relation({{0, 1}, {1, 2}, {0, 2}}, 3));
  EXPECT_EQ(tc.decide(0, 2)->length(), 1u);
}

TEST(TransitiveClosure, SuccessorClosureIsLess) {
  auto tc = transitive_closure(nat_successor());
  for (Nat m = 0; m <= 10; ++m) {
    for (Nat n = 0; n <= 10; ++n) EXPECT_EQ(tc.relates(m, n), m < n) << m << "," << n;
  }
}

TEST(TransitiveClosure, UndecidableWithoutEnumeration) {
  auto tc = transitive_closure(decidable_relation<Nat>([](Nat a, Nat b) { return a + 1 == b; }));
  EXPECT_TRUE(tc.decide(2, 3));
  EXPECT_THROW(tc.decide(1, 3), UndecidableError);
}

TEST(TransitiveClosure, AgreesWithBfsOnRandomRelations) {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(7));
    auto edges = random_dag(rng, n);
    auto tc = transitive_closure(finite_relation(edges, n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        auto e = tc.decide(a, b);
        ASSERT_EQ(e.has_value(), a != b && oracle::reachable_plus(edges, a, b));
        if (e) {
          EXPECT_EQ(e->lesser(), a);
          EXPECT_EQ(e->greater(), b);
        }
      }
    }
  }
}

TEST(TransitiveClosure, RecursionEquation) {
  Rng rng(5);
  auto edges = random_dag(rng, 7);
  auto tc = transitive_closure(finite_relation(edges, 7));
  std::vector<int> all{0, 1, 2, 3, 4, 5, 6};
  EXPECT_TRUE(check_recursion_equation<Nat>(tc, steps::summing(tc), all).ok());
}

TEST(Trcases, SplitsFinalLink) {
  auto one = single_link(0, 1, Unit{});
  EXPECT_TRUE(std::holds_alternative<Unit>(trcases(one)));

  ChainEvidence<int, Unit> two{{0, 1, 2}, {Unit{}, Unit{}}};
  auto split = std::get<ChainSplit<int, Unit>>(trcases(two));
  EXPECT_EQ(split.mid, 1);
  EXPECT_EQ(split.prefix.nodes, (std::vector<int>{0, 1}));
  auto rebuilt = extend(split.prefix, 2, split.last);
  EXPECT_EQ(rebuilt, two);
}

TEST(FinitePower, ExactLengths) {
  auto base = finite_relation({{0, 1}, {1, 2}}, 3);
  auto zero = finite_power_decide(base, 0, 1, 1);
  ASSERT_TRUE(zero);
  EXPECT_EQ(zero->length(), 0u);
  EXPECT_TRUE(finite_power_decide(base, 2, 0, 2));
  EXPECT_FALSE(finite_power_decide(base, 2, 0, 1));
  EXPECT_FALSE(finite_power_decide(base, 0, 0, 1));
}

TEST(FinitePower, AgreesWithPathOracle) {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    auto edges = random_dag(rng, 6);
    auto base = finite_relation(edges, 6);
    for (int n = 0; n < 5; ++n) {
      for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
          EXPECT_EQ(finite_power_decide(base, n, a, b).has_value(), oracle::path_of_length(edges, 6, n, a, b));
        }
      }
    }
  }
}

TEST(ReflTrans, Reachability) {
  auto base = finite_relation({{0, 1}}, 2);
  EXPECT_TRUE(refl_trans_reachable(base, 1, 1));
  EXPECT_TRUE(refl_trans_reachable(base, 0, 1));
  EXPECT_FALSE(refl_trans_reachable(base, 1, 0));

  Rng rng(99);
  auto edges = random_dag(rng, 6);
  auto rel = finite_relation(edges, 6);
  auto tc = transitive_closure(rel);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) EXPECT_EQ(refl_trans_reachable(rel, a, b), a == b || tc.relates(a, b));
  }
}

TEST(DisjointSum, DefiningEquations) {
  auto sum = disjoint_sum(nat_less(), nat_less());
  using S = Sum<Nat, Nat>;
  for (Nat x = 0; x < 5; ++x) {
    for (Nat y = 0; y < 5; ++y) {
      EXPECT_TRUE(sum.decide(S{Inl<Nat>{x}}, S{Inr<Nat>{y}}));
      EXPECT_FALSE(sum.decide(S{Inr<Nat>{y}}, S{Inl<Nat>{x}}));
    }
  }
  auto e = sum.decide(S{Inl<Nat>{2}}, S{Inl<Nat>{5}});
  ASSERT_TRUE(e);
  EXPECT_TRUE(std::holds_alternative<LeftLeft<NatLessEvidence>>(*e));
  EXPECT_TRUE(std::holds_alternative<RightRight<NatLessEvidence>>(*sum.decide(S{Inr<Nat>{1}}, S{Inr<Nat>{3}})));
}

TEST(DisjointSum, AgreesWithNaiveDefinition) {
  auto sum = disjoint_sum(enumerate_over(nat_less(), nats(4)), enumerate_over(nat_less(), nats(3)));
  auto all = sum.carrier();
  ASSERT_EQ(all.size(), 7u);
  for (const auto& a : all) {
    for (const auto& b : all) {
      bool naive;
      if (a.index() != b.index()) {
        naive = a.index() == 0;
      } else if (a.index() == 0) {
        naive = std::get<0>(a).value < std::get<0>(b).value;
      } else {
        naive = std::get<1>(a).value < std::get<1>(b).value;
      }
      EXPECT_EQ(sum.relates(a, b), naive);
    }
  }
}

TEST(DisjointSum, RecursionEquation) {
  auto sum = disjoint_sum(enumerate_over(nat_less(), nats(6)), enumerate_over(nat_less(), nats(6)));
  EXPECT_TRUE(check_recursion_equation<Nat>(sum, steps::hop(sum), sum.carrier()).ok());
}

TEST(LexSigma, Examples) {
  auto lex = lex_product(nat_less(), nat_less());
  auto first = lex.decide({1, 5}, {2, 0});
  ASSERT_TRUE(first);
  EXPECT_EQ(first->index(), 0u);
  auto second = lex.decide({1, 3}, {1, 4});
  ASSERT_TRUE(second);
  EXPECT_EQ(second->index(), 1u);
  EXPECT_FALSE(lex.decide({1, 4}, {1, 4}));
}

TEST(LexSigma, AgreesWithNaivePairOrder) {
  auto lex = lex_product(nat_less(), nat_less());
  for (Nat a = 0; a < 5; ++a) {
    for (Nat b = 0; b < 5; ++b) {
      for (Nat c = 0; c < 5; ++c) {
        for (Nat d = 0; d < 5; ++d) {
          EXPECT_EQ(lex.relates({a, b}, {c, d}), a < c || (a == c && b < d));
        }
      }
    }
  }
}

TEST(LexSigma, RecursionEquation) {
  auto lex = lex_product(enumerate_over(nat_less(), nats(5)), enumerate_over(nat_less(), nats(5)));
  ASSERT_EQ(lex.carrier().size(), 25u);
  EXPECT_TRUE(check_recursion_equation<Nat>(lex, steps::hop(lex), lex.carrier()).ok());
}

TEST(LexSigma, DependentFamily) {
  // B(x) = {0..x}, ordered by > within each fibre.
  auto family = [](const Nat& x) {
    auto greater = decidable_relation<Nat>([x](Nat a, Nat b) { return a <= x && b <= x && a > b; }, "gt");
    std::vector<Nat> fibre;
    for (Nat i = 0; i <= x; ++i) fibre.push_back(i);
    return enumerate_over(greater, fibre);
  };
  auto sigma = lex_sigma(nat_less(), family);
  EXPECT_TRUE(sigma.decide({2, 1}, {2, 0}));
  EXPECT_FALSE(sigma.decide({2, 0}, {2, 1}));
  EXPECT_TRUE(sigma.decide({1, 1}, {2, 2}));

  std::vector<std::pair<Nat, Nat>> all;
  for (Nat x = 0; x < 4; ++x) {
    for (Nat y = 0; y <= x; ++y) all.emplace_back(x, y);
  }
  auto rel = enumerate_over(sigma, all);
  EXPECT_TRUE(check_recursion_equation<Nat>(rel, steps::hop(rel), all).ok());
}

TEST(Transport, PullsBackEvidence) {
  // Naturals below 10 ordered by > through the measure 10 - x, evidence
  // re-encoded as the pair of measures.
  using Pair = std::pair<Nat, Nat>;
  auto rel = transport<Nat, Pair>(
      nat_less(), [](Nat x) { return Nat(10 - x); },
      [](const NatLessEvidence& e) { return Pair{e.lesser(), e.greater()}; },
      [](const Pair& p) { return NatLessEvidence::make(p.first, p.second); });
  EXPECT_TRUE(rel.decide(7, 3));
  EXPECT_FALSE(rel.decide(3, 7));
  auto all = nats(10);
  auto enumerated = enumerate_over(rel, all);
  EXPECT_TRUE(check_recursion_equation<Nat>(enumerated, steps::hop(enumerated), all).ok());
}
