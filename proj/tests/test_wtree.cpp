#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/steps.hpp"
#include "wf/combinators.hpp"
#include "wf/harness.hpp"
#include "wf/nat.hpp"
#include "wf/wtree.hpp"

using namespace wf;
using gen::finite_relation;
using gen::random_tree;

namespace {

using T = WTree<int>;

// Independent recursive oracles.
Nat height(const T& w) {
  Nat h = 0;
  for (const auto& b : w.branches) h = std::max(h, height(b) + 1);
  return h;
}

Nat node_count(const T& w) {
  Nat n = 1;
  for (const auto& b : w.branches) n += node_count(b);
  return n;
}

std::vector<T> all_subtrees(const T& w) {
  std::vector<T> out{w};
  for (const auto& b : w.branches) {
    auto more = all_subtrees(b);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

auto height_step = [](const T& w, const WTreeRelation<int>::Rec<Nat>& rec) -> Nat {
  Nat h = 0;
  for (std::size_t i = 0; i < w.branches.size(); ++i) {
    h = std::max(h, rec(w.branches[i], *subtree_decide(w.branches[i], w)) + 1);
  }
  return h;
};
}  // namespace

TEST(Transrec, NodeCount) {
  auto count = [](int, const std::vector<T>&, const std::vector<Nat>& r) {
    Nat n = 1;
    for (Nat x : r) n += x;
    return n;
  };
  EXPECT_EQ(transrec<Nat>(count, sup(0, {leaf(1), leaf(2)})), 3u);
}

TEST(Transrec, LeafSeesNoBranches) {
  auto probe = [](int a, const std::vector<T>& f, const std::vector<int>& r) {
    EXPECT_TRUE(f.empty());
    EXPECT_TRUE(r.empty());
    return a * 10;
  };
  EXPECT_EQ(transrec<int>(probe, leaf(4)), 40);
}

TEST(Transrec, HeightMatchesOracle) {
  Rng rng(2);
  auto h = [](int, const std::vector<T>&, const std::vector<Nat>& r) {
    Nat m = 0;
    for (Nat x : r) m = std::max(m, x + 1);
    return m;
  };
  for (int i = 0; i < 100; ++i) {
    T w = random_tree(rng, 5);
    EXPECT_EQ(transrec<Nat>(h, w), height(w));
  }
}

TEST(Subtree, Decide) {
  T w = sup(0, {leaf(1)});
  auto e = subtree_decide(leaf(1), w);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->index, 0u);
  EXPECT_FALSE(subtree_decide(w, w));
  EXPECT_TRUE(subtree_decide(encode_nat(1), encode_nat(2)));
  EXPECT_EQ(subtree_decide(leaf(3), sup(0, {leaf(1), leaf(3), leaf(3)}))->index, 1u);
}

TEST(WTreeRelation, HeightViaWfrec) {
  Rng rng(7);
  auto rel = wtree_relation<int>();
  for (int i = 0; i < 100; ++i) {
    T w = random_tree(rng, 5);
    EXPECT_EQ(rel.wfrec<Nat>(height_step, w), height(w));
  }
}

TEST(WTreeRelation, RecursionEquation) {
  Rng rng(9);
  auto rel = wtree_relation<int>();
  std::vector<T> samples;
  for (int i = 0; i < 100; ++i) samples.push_back(random_tree(rng, 5));
  EXPECT_TRUE(check_recursion_equation<Nat>(rel, height_step, samples).ok());
  EXPECT_TRUE(check_recursion_equation<Nat>(rel, steps::summing(rel), samples).ok());
}

TEST(WTreeRelation, PredecessorsAreDistinctBranches) {
  auto rel = wtree_relation<int>();
  T w = sup(0, {leaf(1), leaf(1), leaf(2)});
  auto preds = rel.predecessors(w);
  ASSERT_EQ(preds.size(), 2u);
  EXPECT_EQ(preds[1].second.index, 2u);
}

TEST(WTreeRelation, ClosureReachesDeepLeaf) {
  Rng rng(13);
  auto tc = transitive_closure(wtree_relation<int>());
  for (int i = 0; i < 30; ++i) {
    T w = random_tree(rng, 4);
    auto subs = all_subtrees(w);
    for (std::size_t k = 1; k < subs.size(); ++k) {
      if (subs[k] == w) continue;
      EXPECT_TRUE(tc.relates(subs[k], w));
    }
    EXPECT_FALSE(tc.relates(w, w));
  }
  T deep = sup(0, {sup(1, {sup(2, {leaf(3)})})});
  auto chain = tc.decide(leaf(3), deep);
  ASSERT_TRUE(chain);
  EXPECT_EQ(chain->length(), 3u);
}

TEST(NatTree, Encoding) {
  EXPECT_EQ(encode_nat(0), leaf(NatLabel::Zero));
  EXPECT_EQ(node_count(T{}), 1u);
  for (Nat n = 0; n <= 100; ++n) EXPECT_EQ(decode_nat(encode_nat(n)), n);
  EXPECT_EQ(render(encode_nat(2)), "S(S(Z))");
  NatTree bad = sup(NatLabel::Succ, {leaf(NatLabel::Zero), leaf(NatLabel::Zero)});
  EXPECT_THROW(decode_nat(bad), std::invalid_argument);
}

TEST(NatTree, EncodeDecodeOnImage) {
  for (Nat n = 0; n <= 20; ++n) {
    NatTree w = encode_nat(n);
    EXPECT_EQ(encode_nat(decode_nat(w)), w);
  }
}

TEST(NatTree, ClosureIsLess) {
  auto tc = transitive_closure(wtree_relation<NatLabel>());
  for (Nat m = 0; m <= 6; ++m) {
    for (Nat n = 0; n <= 6; ++n) EXPECT_EQ(tc.relates(encode_nat(m), encode_nat(n)), m < n);
  }
}

TEST(Render, Golden) {
  EXPECT_EQ(render(leaf(5)), "5");
  EXPECT_EQ(render(sup(0, {leaf(1), sup(2, {leaf(3)})})), "0(1, 2(3))");
}

TEST(Wof, FiniteLess) {
  std::vector<Nat> carrier{0, 1, 2};
  auto rel = enumerate_over(nat_less(), carrier);
  EXPECT_EQ(wof(rel, Nat{0}), leaf(Nat{0}));
  EXPECT_EQ(aof(wof(rel, Nat{2})), 2u);
  auto w2 = wof(rel, Nat{2});
  ASSERT_EQ(w2.branches.size(), 2u);
  EXPECT_EQ(w2.branches[0], wof(rel, Nat{0}));
  EXPECT_EQ(w2.branches[1], wof(rel, Nat{1}));
  EXPECT_EQ(render(w2), "2(0, 1(0))");
}

TEST(Characterization, LessOnSix) {
  std::vector<Nat> carrier{0, 1, 2, 3, 4, 5};
  auto report = check_characterization(enumerate_over(nat_less(), carrier), carrier);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.pairs, 36u);
}

TEST(Characterization, LexProduct) {
  std::vector<Nat> three{0, 1, 2};
  auto lex = lex_product(enumerate_over(nat_less(), three), enumerate_over(nat_less(), three));
  auto report = check_characterization(lex, lex.carrier());
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.pairs, 81u);
}

TEST(Characterization, EmptyRelation) {
  std::vector<int> carrier{0, 1, 2};
  auto report = check_characterization(empty_relation<int>(carrier), carrier);
  EXPECT_TRUE(report.ok());
}

TEST(Characterization, RandomDags) {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    oracle::Edges edges;
    for (int a = 0; a < 6; ++a) {
      for (int b = a + 1; b < 6; ++b) {
        if (rng.below(2) == 0) edges.emplace_back(a, b);
      }
    }
    std::vector<int> carrier{0, 1, 2, 3, 4, 5};
    EXPECT_TRUE(check_characterization(finite_relation(edges, 6), carrier).ok());
  }
}
