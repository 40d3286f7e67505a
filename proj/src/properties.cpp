#include "wf/properties.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <exception>
#include <functional>
#include <set>
#include <utility>

#include "wf/chains.hpp"
#include "wf/combinators.hpp"
#include "wf/derived.hpp"
#include "wf/examples.hpp"
#include "wf/harness.hpp"
#include "wf/nat.hpp"
#include "wf/ordinal.hpp"
#include "wf/power.hpp"
#include "wf/rng.hpp"
#include "wf/wtree.hpp"

namespace wf {

bool PropertySuite::passed() const {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

namespace {

// A property returns an empty string on success, otherwise what failed.
using Property = std::function<std::string(Rng&)>;

std::vector<Nat> upto(Nat n) {
  std::vector<Nat> out;
  for (Nat i = 0; i < n; ++i) out.push_back(i);
  return out;
}

// Middle-predecessor step: one recursive call per level.
template <class A, class E>
auto hop(const Relation<A, E>& rel) {
  return [rel](const A& x, const typename Relation<A, E>::template Rec<Nat>& rec) -> Nat {
    auto preds = rel.predecessors(x);
    Nat s = 1 + preds.size() * 7;
    if (!preds.empty()) s = (s * 31 + rec(preds[preds.size() / 2].first, preds[preds.size() / 2].second)) % 1000003;
    return s;
  };
}

template <class A, class E>
std::string equation(const Relation<A, E>& rel, const std::vector<A>& carrier) {
  auto report = check_recursion_equation<Nat>(rel, hop(rel), carrier);
  if (!report.ok()) return std::to_string(report.failures.size()) + " recursion-equation failures";
  return {};
}

std::string expect(bool ok, const std::string& what) { return ok ? std::string{} : what; }

// ---------------------------------------------------------------------------

std::vector<std::pair<std::string, Property>> core_properties() {
  return {
      {"recursion equation on nat <",
       [](Rng&) { return equation(enumerate_over(nat_less(), upto(60)), upto(60)); }},
      {"predecessors agree with decide",
       [](Rng&) {
         auto rel = nat_less();
         for (Nat n = 0; n < 20; ++n) {
           auto preds = rel.predecessors(n);
           if (preds.size() != n) return std::string("wrong predecessor count at ") + std::to_string(n);
           for (auto& [m, e] : preds) {
             if (!rel.relates(m, n) || !(e == *rel.decide(m, n))) return std::string("incoherent evidence");
           }
         }
         return std::string{};
       }},
      {"irreflexive and asymmetric",
       [](Rng& rng) {
         auto rel = nat_less();
         for (int i = 0; i < 500; ++i) {
           Nat a = rng.below(100), b = rng.below(100);
           if (rel.relates(a, a) || (rel.relates(a, b) && rel.relates(b, a))) return std::string("order axiom fails");
         }
         return std::string{};
       }},
      {"descents from n stay within n + 1 steps",
       [](Rng& rng) {
         for (int i = 0; i < 50; ++i) {
           Nat n = rng.below(40);
           auto d = fuzz_descent(nat_less(), n, 10000, rng);
           if (!d.ok() || d.chain.size() > n + 1) return std::string("descent too long");
         }
         return std::string{};
       }},
  };
}

// Random DAG on `nodes` vertices: edges only from lower to higher labels.
std::vector<std::pair<int, int>> random_dag(Rng& rng, int nodes) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < nodes; ++a) {
    for (int b = a + 1; b < nodes; ++b) {
      if (rng.below(3) == 0) edges.emplace_back(a, b);
    }
  }
  return edges;
}

Relation<int, Unit> edge_relation(const std::vector<std::pair<int, int>>& edges, int nodes) {
  std::vector<int> carrier;
  for (int i = 0; i < nodes; ++i) carrier.push_back(i);
  auto rel = decidable_relation<int>(
      [edges](int a, int b) { return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end(); },
      "edges");
  return enumerate_over(rel, carrier);
}

bool reachable(const std::vector<std::pair<int, int>>& edges, int lesser, int greater) {
  std::set<int> seen;
  std::deque<int> todo{greater};
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop_front();
    for (auto [a, b] : edges) {
      if (b == v && seen.insert(a).second) todo.push_back(a);
    }
  }
  return seen.count(lesser) > 0;
}

std::vector<std::pair<std::string, Property>> combinator_properties() {
  return {
      {"transitive closure matches reachability",
       [](Rng& rng) {
         for (int t = 0; t < 20; ++t) {
           const int nodes = 2 + static_cast<int>(rng.below(7));
           auto edges = random_dag(rng, nodes);
           auto tc = transitive_closure(edge_relation(edges, nodes));
           for (int a = 0; a < nodes; ++a) {
             for (int b = 0; b < nodes; ++b) {
               if (tc.relates(a, b) != reachable(edges, a, b)) return std::string("closure disagrees with BFS");
             }
           }
         }
         return std::string{};
       }},
      {"lexicographic product matches pair comparison",
       [](Rng&) {
         auto lex = lex_product(enumerate_over(nat_less(), upto(4)), enumerate_over(nat_less(), upto(4)));
         for (const auto& p : lex.carrier()) {
           for (const auto& q : lex.carrier()) {
             if (lex.relates(p, q) != (p < q)) return std::string("lex disagrees");
           }
         }
         return equation(lex, lex.carrier());
       }},
      {"disjoint sum puts the left summand first",
       [](Rng&) {
         auto sum = disjoint_sum(enumerate_over(nat_less(), upto(4)), enumerate_over(nat_less(), upto(3)));
         for (const auto& p : sum.carrier()) {
           for (const auto& q : sum.carrier()) {
             const bool expected = p.index() != q.index() ? p.index() < q.index()
                                   : p.index() == 0        ? std::get<0>(p).value < std::get<0>(q).value
                                                           : std::get<1>(p).value < std::get<1>(q).value;
             if (sum.relates(p, q) != expected) return std::string("sum disagrees");
           }
         }
         return equation(sum, sum.carrier());
       }},
      {"inverse image follows the measure",
       [](Rng&) {
         auto rel = enumerate_over(inverse_image<Nat>(nat_less(), [](Nat x) { return x % 7; }), upto(30));
         for (Nat a = 0; a < 30; ++a) {
           for (Nat b = 0; b < 30; ++b) {
             if (rel.relates(a, b) != (a % 7 < b % 7)) return std::string("inverse image disagrees");
           }
         }
         return equation(rel, upto(30));
       }},
  };
}

std::vector<std::pair<std::string, Property>> power_properties() {
  return {
      {"power order is the binary-rank order",
       [](Rng&) {
         auto pow = pow_relation(nat_less());
         std::vector<DescendingList<Nat, NatLessEvidence>> lists;
         for (Nat mask = 0; mask < 32; ++mask) {
           std::vector<Nat> l;
           for (Nat i = 5; i-- > 0;) {
             if (mask & (Nat{1} << i)) l.push_back(i);
           }
           lists.push_back(*make_descending(nat_less(), l));
         }
         for (const auto& a : lists) {
           for (const auto& b : lists) {
             if (pow.relates(a, b) != (pow_nat_rank(a.elements()) < pow_nat_rank(b.elements()))) {
               return std::string("power order disagrees with binary rank");
             }
           }
         }
         return std::string{};
       }},
      {"recursion equation on Pow(nat <)",
       [](Rng&) {
         auto pow = pow_relation(enumerate_over(nat_less(), upto(4)));
         return equation(pow, pow.carrier());
       }},
  };
}

std::vector<std::pair<std::string, Property>> wtree_properties() {
  return {
      {"wof characterizes finite relations",
       [](Rng& rng) {
         auto less = enumerate_over(nat_less(), upto(6));
         if (!check_characterization(less, upto(6)).ok()) return std::string("fails on <");
         auto lex = lex_product(enumerate_over(nat_less(), upto(3)), enumerate_over(nat_less(), upto(3)));
         if (!check_characterization(lex, lex.carrier()).ok()) return std::string("fails on lex");
         auto edges = random_dag(rng, 6);
         std::vector<int> carrier{0, 1, 2, 3, 4, 5};
         return expect(check_characterization(edge_relation(edges, 6), carrier).ok(), "fails on a DAG");
       }},
      {"subtree closure on numerals is <",
       [](Rng&) {
         auto tc = transitive_closure(wtree_relation<NatLabel>());
         for (Nat m = 0; m <= 6; ++m) {
           for (Nat n = 0; n <= 6; ++n) {
             if (tc.relates(encode_nat(m), encode_nat(n)) != (m < n)) return std::string("disagrees with <");
           }
         }
         return std::string{};
       }},
  };
}

std::vector<std::vector<Nat>> bags(Nat bound, std::size_t max_size) {
  std::vector<std::vector<Nat>> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_size) continue;
    const Nat top = out[i].empty() ? bound : out[i].back() + 1;
    for (Nat x = 0; x < top; ++x) {
      auto b = out[i];
      b.push_back(x);
      out.push_back(b);
    }
  }
  return out;
}

std::vector<std::pair<std::string, Property>> derived_properties() {
  return {
      {"stepped lex: arity first, then components",
       [](Rng&) {
         auto rel = stepped_lex(nat_less());
         std::vector<SteppedTuple<Nat>> tuples{SteppedTuple<Nat>{}};
         for (std::size_t i = 0; i < tuples.size(); ++i) {
           if (tuples[i].arity() == 3) continue;
           for (Nat x = 0; x < 4; ++x) {
             auto c = tuples[i].components();
             c.push_back(x);
             tuples.emplace_back(c);
           }
         }
         for (const auto& a : tuples) {
           for (const auto& b : tuples) {
             const bool expected =
                 a.arity() != b.arity() ? a.arity() < b.arity() : a.components() < b.components();
             if (rel.relates(a, b) != expected) return std::string("stepped lex disagrees");
           }
         }
         return std::string{};
       }},
      {"multiset order is Dershowitz-Manna",
       [](Rng&) {
         auto rel = multiset_relation(nat_less());
         auto all = bags(4, 3);
         for (const auto& m : all) {
           for (const auto& n : all) {
             if (rel.relates(multiset_of(nat_less(), m), multiset_of(nat_less(), n)) != dm_oracle(m, n, nat_less())) {
               return std::string("multiset order disagrees with replacement search");
             }
           }
         }
         return std::string{};
       }},
      {"recursion equation on M(nat <)",
       [](Rng&) {
         std::vector<Multiset<Nat, NatLessEvidence>> carrier;
         for (const auto& b : bags(3, 3)) carrier.push_back(multiset_of(nat_less(), b));
         return equation(enumerate_over(multiset_relation(nat_less()), carrier), carrier);
       }},
  };
}

std::vector<std::pair<std::string, Property>> ordinal_properties() {
  return {
      {"compare is a strict total order",
       [](Rng& rng) {
         for (int i = 0; i < 300; ++i) {
           auto a = random_ordinal(rng, 3), b = random_ordinal(rng, 3), c = random_ordinal(rng, 3);
           if (compare(a, a) != Ordering::EQ) return std::string("not reflexively equal");
           if ((a < b) == (b < a) && !(a == b)) return std::string("trichotomy fails");
           if (a < b && b < c && !(a < c)) return std::string("not transitive");
         }
         return std::string{};
       }},
      {"compare matches coefficient vectors below w^w",
       [](Rng&) {
         std::vector<std::vector<Nat>> vecs;
         for (Nat code = 0; code < 256; ++code) vecs.push_back({code / 64, code / 16 % 4, code / 4 % 4, code % 4});
         auto build = [](const std::vector<Nat>& c) {
           std::vector<Term> terms;
           for (Nat i = 0; i < 4; ++i) {
             if (c[i] > 0) terms.push_back(Term{Ordinal::finite(3 - i), c[i]});
           }
           return Ordinal::from_cnf(terms);
         };
         for (const auto& a : vecs) {
           for (const auto& b : vecs) {
             if ((build(a) < build(b)) != (a < b)) return std::string("disagrees with coefficient vectors");
           }
         }
         return std::string{};
       }},
      {"compare agrees with nested multisets",
       [](Rng& rng) {
         auto rel = nested_multiset_relation(unit_relation());
         for (int i = 0; i < 300; ++i) {
           auto a = random_ordinal(rng, 3), b = random_ordinal(rng, 3);
           if ((a < b) != rel.relates(to_nested(a), to_nested(b))) return print(a) + " vs " + print(b);
           if (!(from_nested(to_nested(a)) == a)) return "round trip fails on " + print(a);
         }
         return std::string{};
       }},
      {"print and parse are inverse",
       [](Rng& rng) {
         for (int i = 0; i < 300; ++i) {
           auto a = random_ordinal(rng, 4);
           if (!(parse_ordinal(print(a)) == a)) return "round trip fails on " + print(a);
         }
         return std::string{};
       }},
      {"descents terminate",
       [](Rng& rng) {
         auto rel = ordinal_stepdown();
         for (int i = 0; i < 100; ++i) {
           auto d = fuzz_descent(rel, random_ordinal(rng, 2), 10000, rng);
           if (!d.ok()) return std::string("descent exhausted its budget");
         }
         return std::string{};
       }},
  };
}

std::vector<int> random_list(Rng& rng, std::size_t max_len) {
  std::vector<int> out(rng.below(max_len + 1));
  for (auto& x : out) x = static_cast<int>(rng.below(20));
  return out;
}

std::vector<std::pair<std::string, Property>> example_properties() {
  auto leq = [](int a, int b) { return a <= b; };
  return {
      {"quicksort returns the sorted permutation",
       [leq](Rng& rng) {
         for (int i = 0; i < 1000; ++i) {
           auto l = random_list(rng, 50);
           auto sorted = l;
           std::sort(sorted.begin(), sorted.end());
           if (quicksort(leq, l) != sorted) return std::string("quicksort result is wrong");
         }
         return std::string{};
       }},
      {"quicksort recursion equations",
       [leq](Rng& rng) {
         std::vector<std::vector<int>> samples;
         for (int i = 0; i < 100; ++i) samples.push_back(random_list(rng, 30));
         auto report = check_recursion_equation<std::vector<int>>(length_order<int>(), quicksort_step<int>(leq), samples);
         return expect(report.ok(), "unfolded equation fails");
       }},
      {"filter does not lengthen",
       [](Rng& rng) {
         for (int i = 0; i < 500; ++i) {
           auto l = random_list(rng, 30);
           const int cut = static_cast<int>(rng.below(20));
           if (length(filter([cut](int x) { return x < cut; }, l)) > length(l)) return std::string("filter grew a list");
         }
         return std::string{};
       }},
      {"fibonacci and ackermann",
       [](Rng&) {
         Nat a = 0, b = 1;
         for (Nat n = 0; n <= 20; ++n) {
           if (fib_cov(n) != a) return "fib_cov(" + std::to_string(n) + ") is wrong";
           b = a + b;
           a = b - a;
         }
         const Nat table[4][4] = {{1, 2, 3, 4}, {2, 3, 4, 5}, {3, 5, 7, 9}, {5, 13, 29, 61}};
         for (Nat m = 0; m < 4; ++m) {
           for (Nat n = 0; n < 4; ++n) {
             if (ackermann(m, n) != table[m][n]) return "ackermann(" + std::to_string(m) + ", " + std::to_string(n) + ")";
           }
         }
         return std::string{};
       }},
  };
}

std::vector<std::pair<std::string, Property>> cli_properties() {
  return {
      {"same seed gives the same chain",
       [](Rng& rng) {
         const std::vector<std::pair<ChainOrder, std::string>> starts{
             {ChainOrder::Nat, "30"}, {ChainOrder::PowNat, "4,2,1"}, {ChainOrder::MultisetNat, "3,1"}, {ChainOrder::Ord, "w^2*2 + 1"}};
         for (const auto& [order, start] : starts) {
           const Nat seed = rng();
           auto a = run_chain(order, start, seed, 10000);
           auto b = run_chain(order, start, seed, 10000);
           if (a.elements != b.elements) return "nondeterministic chain for " + to_string(order);
           if (a.exhausted || !a.within_bound()) return "chain for " + to_string(order) + " exceeds its bound";
         }
         return std::string{};
       }},
  };
}

}  // namespace

std::vector<PropertySuite> run_property_suites(Nat seed) {
  const std::vector<std::pair<std::string, std::vector<std::pair<std::string, Property>>>> suites{
      {"core", core_properties()},       {"combinators", combinator_properties()},
      {"power", power_properties()},     {"wtree", wtree_properties()},
      {"derived", derived_properties()}, {"ordinal", ordinal_properties()},
      {"examples", example_properties()}, {"cli", cli_properties()},
  };
  Rng root(seed);
  std::vector<PropertySuite> out;
  for (const auto& [suite, properties] : suites) {
    PropertySuite s{suite, {}};
    for (const auto& [name, property] : properties) {
      Rng rng = root.split();
      const auto t0 = std::chrono::steady_clock::now();
      PropertyResult r{name, false, {}, 0};
      try {
        r.detail = property(rng);
        r.passed = r.detail.empty();
      } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      s.results.push_back(std::move(r));
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace wf
