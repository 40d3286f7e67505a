#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/steps.hpp"
#include "wf/harness.hpp"
#include "wf/nat.hpp"
#include "wf/power.hpp"

using namespace wf;
using gen::nats;

namespace {

using NL = std::vector<Nat>;
using PowNat = PowRelation<Nat, NatLessEvidence>;
using Z = DescendingList<Nat, NatLessEvidence>;

Z desc(const NL& l) { return *make_descending(nat_less(), l); }

NL random_list(Rng& rng, std::size_t max_len, Nat bound) {
  NL l(rng.below(max_len + 1));
  for (auto& x : l) x = rng.below(bound);
  return l;
}

NL random_descending(Rng& rng, Nat bound) {
  NL l;
  for (Nat i = bound; i-- > 0;) {
    if (rng.coin()) l.push_back(i);
  }
  return l;
}
}  // namespace

TEST(Descending, Certificates) {
  auto rel = nat_less();
  EXPECT_TRUE(is_descending(rel, NL{}));
  EXPECT_TRUE(is_descending(rel, NL{7}));
  auto d = is_descending(rel, NL{2, 1, 0});
  ASSERT_TRUE(d);
  EXPECT_EQ(d->links.size(), 2u);
  EXPECT_FALSE(is_descending(rel, NL{1, 1}));
  EXPECT_FALSE(is_descending(rel, NL{0, 1}));
}

TEST(ListLex, DefiningEquations) {
  auto rel = nat_less();
  auto nil_cons = list_lex_decide(rel, NL{}, NL{0});
  ASSERT_TRUE(nil_cons);
  EXPECT_EQ(nil_cons->to_string(), "nil");
  EXPECT_TRUE(std::holds_alternative<ShorterPrefix>(unfold(*nil_cons)));

  auto head = list_lex_decide(rel, NL{1, 0}, NL{2});
  ASSERT_TRUE(head);
  EXPECT_EQ(head->to_string(), "inl(lt)");
  EXPECT_FALSE(list_lex_decide(rel, NL{2}, NL{1, 0}));
  EXPECT_FALSE(list_lex_decide(rel, NL{}, NL{}));

  auto deep = list_lex_decide(rel, NL{3, 2}, NL{3, 2, 0});
  ASSERT_TRUE(deep);
  EXPECT_EQ(deep->to_string(), "inr(eq, inr(eq, nil))");
  EXPECT_TRUE(std::holds_alternative<HeadEqual<NatLessEvidence>>(unfold(*deep)));
}

TEST(ListLex, UnrestrictedOrderHasDescendingChain) {
  auto rel = nat_less();
  EXPECT_TRUE(list_lex_decide(rel, NL{0, 1}, NL{1}));
  EXPECT_TRUE(list_lex_decide(rel, NL{0, 0, 1}, NL{0, 1}));
  EXPECT_TRUE(list_lex_decide(rel, NL{0, 0, 0, 1}, NL{0, 0, 1}));
  EXPECT_FALSE(make_descending(rel, NL{0, 1}));
  EXPECT_FALSE(make_descending(rel, NL{0, 0, 1}));
}

TEST(ListLex, NothingBelowNil) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) EXPECT_FALSE(list_lex_decide(nat_less(), random_list(rng, 5, 4), NL{}));
}

TEST(Rlistrec, ComputationRules) {
  auto sum = [](const NL&, Nat x, Nat acc) { return acc + x; };
  EXPECT_EQ(rlistrec<Nat>(Nat{0}, sum, NL{1, 2, 3}), 6u);
  EXPECT_EQ(rlistrec<Nat>(Nat{42}, sum, NL{}), 42u);

  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    NL l = random_list(rng, 8, 10);
    auto rebuild = [](const NL& prefix, Nat x, NL acc) {
      EXPECT_EQ(prefix, acc);
      acc.push_back(x);
      return acc;
    };
    EXPECT_EQ(rlistrec<Nat>(NL{}, rebuild, l), l);
  }
}

TEST(Lists, FamiliarFacts) {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    NL a = random_list(rng, 6, 9), b = random_list(rng, 6, 9), c = random_list(rng, 6, 9);
    EXPECT_EQ(reversed(reversed(a)), a);
    EXPECT_EQ(append(append(a, b), c), append(a, append(b, c)));
    EXPECT_EQ(append(a, NL{}), a);
  }
}

TEST(Lemmas, Apls) {
  auto rel = nat_less();
  auto e = *list_lex_decide(rel, NL{0}, NL{1});
  auto out = apls(NL{0}, NL{}, NL{1}, e);
  EXPECT_TRUE(list_lex_decide(rel, NL{0}, NL{1}));
  EXPECT_EQ(out, e);

  auto e2 = *list_lex_decide(rel, NL{1, 0}, NL{2});
  EXPECT_EQ(apls(NL{1}, NL{0}, NL{2}, e2), *list_lex_decide(rel, NL{1}, NL{2}));

  auto e3 = *list_lex_decide(rel, NL{2}, NL{3});
  EXPECT_EQ(apls(NL{}, NL{2}, NL{3}, e3).to_string(), "nil");
}

TEST(Lemmas, Lsap) {
  auto rel = nat_less();
  auto e = *list_lex_decide(rel, NL{2, 0}, NL{2, 1});
  auto r = lsap(NL{2, 0}, NL{2}, NL{1}, e);
  auto* split = std::get_if<LsapSplit<Nat, NatLessEvidence>>(&r);
  ASSERT_NE(split, nullptr);
  EXPECT_EQ(split->rest, NL{0});
  EXPECT_EQ(split->below, *list_lex_decide(rel, NL{0}, NL{1}));

  auto e2 = *list_lex_decide(rel, NL{1}, NL{2, 5});
  EXPECT_TRUE(std::holds_alternative<LexListEvidence<NatLessEvidence>>(lsap(NL{1}, NL{2}, NL{5}, e2)));

  auto e3 = *list_lex_decide(rel, NL{4}, NL{4, 3});
  auto r3 = lsap(NL{4}, NL{4}, NL{3}, e3);
  auto& s3 = std::get<LsapSplit<Nat, NatLessEvidence>>(r3);
  EXPECT_TRUE(s3.rest.empty());
  EXPECT_EQ(s3.below.to_string(), "nil");
}

TEST(Lemmas, LsapAndAplsRevalidate) {
  auto rel = nat_less();
  Rng rng(31);
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    NL l1 = random_list(rng, 4, 4), l = random_list(rng, 3, 4), l2 = random_list(rng, 3, 4);
    auto whole = append(l, l2);
    if (auto e = list_lex_decide(rel, l1, whole)) {
      ++checked;
      auto r = lsap(l1, l, l2, *e);
      if (auto* left = std::get_if<LexListEvidence<NatLessEvidence>>(&r)) {
        EXPECT_EQ(list_lex_decide(rel, l1, l), *left);
      } else {
        auto& s = std::get<LsapSplit<Nat, NatLessEvidence>>(r);
        EXPECT_EQ(append(l, s.rest), l1);
        EXPECT_EQ(list_lex_decide(rel, s.rest, l2), s.below);
      }
    }
    auto joined = append(l1, l2);
    if (auto e = list_lex_decide(rel, joined, l)) {
      EXPECT_EQ(list_lex_decide(rel, l1, l), apls(l1, l2, l, *e));
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Lemmas, Descap) {
  auto rel = nat_less();
  auto d = *is_descending(rel, NL{2, 1, 0});
  auto [d1, d2] = descap(NL{2, 1}, NL{0}, d);
  EXPECT_EQ(d1, *is_descending(rel, NL{2, 1}));
  EXPECT_EQ(d2, *is_descending(rel, NL{0}));

  auto [e1, e2] = descap(NL{}, NL{2, 1, 0}, d);
  EXPECT_TRUE(e1.links.empty());
  EXPECT_EQ(e2, d);

  Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    NL l = random_descending(rng, 7);
    const std::size_t cut = rng.below(l.size() + 1);
    NL a(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(cut)), b(l.begin() + static_cast<std::ptrdiff_t>(cut), l.end());
    auto [x, y] = descap(a, b, *is_descending(rel, l));
    EXPECT_EQ(x, *is_descending(rel, a));
    EXPECT_EQ(y, *is_descending(rel, b));
  }
}

TEST(Lemmas, Endls) {
  auto rel = nat_less();
  auto tc = transitive_closure(rel);
  auto single = endls(NL{}, Nat{0}, Nat{1}, *is_descending(rel, NL{0}), *list_lex_decide(rel, NL{0}, NL{1}));
  EXPECT_EQ(single.nodes, (NL{0, 1}));

  auto two = endls(NL{2}, Nat{1}, Nat{3}, *is_descending(rel, NL{2, 1}), *list_lex_decide(rel, NL{2, 1}, NL{3}));
  EXPECT_EQ(two.lesser(), 1u);
  EXPECT_EQ(two.greater(), 3u);
  EXPECT_TRUE(tc.relates(two.lesser(), two.greater()));

  for (const auto& l : oracle::descending_lists(6)) {
    if (l.empty()) continue;
    NL l1(l.begin(), l.end() - 1);
    const Nat y = l.back();
    for (Nat x = 0; x < 6; ++x) {
      auto e = list_lex_decide(rel, l, NL{x});
      if (!e) continue;
      auto chain = endls(l1, y, x, *is_descending(rel, l), *e);
      EXPECT_EQ(chain.lesser(), y);
      EXPECT_EQ(chain.greater(), x);
      for (std::size_t i = 0; i < chain.length(); ++i) {
        EXPECT_TRUE(rel.relates(chain.nodes[i], chain.nodes[i + 1]));
      }
    }
  }
}

TEST(PowRelation, Examples) {
  auto pow = pow_relation(nat_less());
  EXPECT_TRUE(pow.decide(desc({1, 0}), desc({2})));
  EXPECT_FALSE(pow.decide(desc({}), desc({})));
  EXPECT_FALSE(pow.decide(desc({2}), desc({1, 0})));
}

TEST(PowRelation, BinaryRankOrderIsomorphism) {
  auto pow = pow_relation(nat_less());
  auto all = oracle::descending_lists(5, 4);
  for (const auto& a : all) {
    for (const auto& b : all) {
      EXPECT_EQ(pow.relates(desc(a), desc(b)), oracle::binary_rank(a) < oracle::binary_rank(b));
    }
  }
}

TEST(PowRelation, PredecessorsCoherent) {
  auto pow = pow_relation(nat_less());
  auto all = oracle::descending_lists(5);
  for (const auto& b : all) {
    auto preds = pow.predecessors(desc(b));
    std::size_t expected = 0;
    for (const auto& a : all) {
      if (oracle::binary_rank(a) < oracle::binary_rank(b)) ++expected;
    }
    EXPECT_EQ(preds.size(), expected);
    for (auto& [z, e] : preds) EXPECT_EQ(pow.decide(z, desc(b)), e);
  }
}

TEST(PowRelation, RecursionEquation) {
  auto pow = pow_relation(enumerate_over(nat_less(), nats(4)));
  auto carrier = pow.carrier();
  ASSERT_EQ(carrier.size(), 16u);
  EXPECT_TRUE(check_recursion_equation<Nat>(pow, steps::hop(pow), carrier).ok());
}

TEST(PowRelation, RecursionIsCourseOfValues) {
  // Sum of rec over all predecessors: 2^rank, checked through wfrec.
  auto pow = pow_relation(nat_less());
  auto doubling = [pow](const Z& z, const PowNat::Rec<Nat>& rec) -> Nat {
    Nat n = 1;
    for (auto& [y, e] : pow.predecessors(z)) n += rec(y, e);
    return n;
  };
  for (const auto& l : oracle::descending_lists(4)) {
    EXPECT_EQ(pow.wfrec<Nat>(doubling, desc(l)), Nat{1} << oracle::binary_rank(l));
  }
}

TEST(PowRelation, FuzzWithinRankBound) {
  auto pow = pow_relation(nat_less());
  for (Nat seed = 0; seed < 50; ++seed) {
    auto d = fuzz_descent(pow, desc({3, 2, 1, 0}), 10000, seed);
    ASSERT_TRUE(d.ok());
    EXPECT_LE(d.chain.size(), 16u);
    EXPECT_TRUE(d.chain.back().empty());
  }
}

TEST(PowNatRank, Values) {
  EXPECT_EQ(pow_nat_rank({}), 0u);
  EXPECT_EQ(pow_nat_rank({1, 0}), 3u);
  EXPECT_EQ(pow_nat_rank({2}), 4u);
  EXPECT_EQ(pow_nat_rank({63}), Nat{1} << 63);
  EXPECT_THROW(pow_nat_rank({64}), std::overflow_error);
}

TEST(PowRelation, RecursionUnderEvidenceValidation) {
  ScopedEvidenceValidation on(true);
  auto pow = pow_relation(enumerate_over(nat_less(), nats(4)));
  auto doubling = [pow](const Z& z, const PowNat::Rec<Nat>& rec) -> Nat {
    Nat n = 1;
    for (auto& [y, e] : pow.predecessors(z)) n += rec(y, e);
    return n;
  };
  for (const auto& z : pow.carrier()) EXPECT_EQ(pow.wfrec<Nat>(doubling, z), Nat{1} << pow_nat_rank(z.elements()));
}
