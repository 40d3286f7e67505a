#pragma once

// Orders assembled from the combinators: stepped lexicographic tuples,
// finite-function exponentiation B^A, multisets M(A) = Nat^A, nested
// multisets M*(A), and the unification ordering on expression pairs.

#include <algorithm>
#include <any>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wf/combinators.hpp"
#include "wf/core.hpp"
#include "wf/nat.hpp"
#include "wf/power.hpp"

namespace wf {

// ---------------------------------------------------------------------------
// Stepped lexicographic tuples: A^w = Sigma n. A^n, A^0 = T, A^(n+1) = A x A^n

template <class A>
class SteppedTuple {
 public:
  SteppedTuple() = default;
  explicit SteppedTuple(std::vector<A> components)
      : arity_(components.size()), components_(std::move(components)) {}
  SteppedTuple(Nat arity, std::vector<A> components) : arity_(arity), components_(std::move(components)) {
    if (components_.size() != arity_) throw std::invalid_argument("tuple arity does not match its components");
  }

  Nat arity() const noexcept { return arity_; }
  const std::vector<A>& components() const noexcept { return components_; }

  friend bool operator==(const SteppedTuple&, const SteppedTuple&) = default;

 private:
  Nat arity_ = 0;
  std::vector<A> components_;
};

/// The first `equal_prefix` components agree and the next one is smaller.
template <class E>
struct TupleLexEvidence {
  std::size_t equal_prefix = 0;
  E less;
  friend bool operator==(const TupleLexEvidence&, const TupleLexEvidence&) = default;
};

template <class A, class E>
using TupleLexRelation = Relation<std::vector<A>, TupleLexEvidence<E>>;

/// Lexicographic order on A^n, as n nested lexicographic products ending in
/// the empty relation on the one-element type.
template <class A, class E>
TupleLexRelation<A, E> tuple_lex(const Relation<A, E>& rel_a, Nat n) {
  using V = std::vector<A>;
  using Ev = TupleLexEvidence<E>;
  using R = TupleLexRelation<A, E>;
  if (n == 0) {
    typename R::Parts parts;
    parts.name = "unit";
    parts.decide = [](const V&, const V&) -> std::optional<Ev> { return std::nullopt; };
    parts.predecessors = [](const V&) { return std::vector<std::pair<V, Ev>>{}; };
    parts.carrier = [] { return std::vector<V>{V{}}; };
    parts.recursor = [](const typename R::AnyStep& step, const V& a) -> Value {
      return step(a, [](const V&, const Ev&) -> Value { throw EvidenceError("nothing lies below the empty tuple"); });
    };
    return R(std::move(parts));
  }
  using Inner = LexEvidence<E, Ev>;
  auto product = lex_product(rel_a, tuple_lex(rel_a, n - 1));
  return transport<V, Ev>(
      product,
      [n](const V& v) {
        if (v.size() != n) throw std::invalid_argument("tuple has the wrong arity");
        return std::pair<A, V>{v.front(), V(v.begin() + 1, v.end())};
      },
      [](const Inner& e) -> Ev {
        if (const auto* first = std::get_if<FirstLess<E>>(&e)) return Ev{0, first->evidence};
        const auto& rest = std::get<SecondLess<Ev>>(e).evidence;
        return Ev{rest.equal_prefix + 1, rest.less};
      },
      [](const Ev& e) -> Inner {
        // Rebuild the nested form one equality layer at a time.
        if (e.equal_prefix == 0) return Inner{FirstLess<E>{e.less}};
        return Inner{SecondLess<Ev>{Eq{}, Ev{e.equal_prefix - 1, e.less}}};
      },
      rel_a.name() + "^" + std::to_string(n));
}

template <class A, class E>
using SteppedLexRelation = Relation<SteppedTuple<A>, LexEvidence<NatLessEvidence, TupleLexEvidence<E>>>;

/// Shorter tuples first; equal arities compared lexicographically.
template <class A, class E>
SteppedLexRelation<A, E> stepped_lex(const Relation<A, E>& rel_a) {
  auto sigma = lex_sigma(nat_less(), [rel_a](Nat n) { return tuple_lex(rel_a, n); }, "stepped");
  return inverse_image<SteppedTuple<A>>(
      sigma, [](const SteppedTuple<A>& t) { return std::pair<Nat, std::vector<A>>{t.arity(), t.components()}; },
      "stepped(" + rel_a.name() + ")");
}

// ---------------------------------------------------------------------------
// Finite functions B^A: [<x1, y1>, ..., <xn, yn>] with x1 > ... > xn

template <class A, class B, class E>
class FiniteFunction {
 public:
  using Entry = std::pair<A, B>;

  FiniteFunction() = default;

  /// No validation; the certificate must witness descending keys.
  static FiniteFunction trusted(std::vector<Entry> entries, DescentCertificate<E> keys) {
    if (keys.links.size() + 1 != entries.size() && !(entries.empty() && keys.links.empty())) {
      throw EvidenceError("key certificate does not match the entry count");
    }
    FiniteFunction out;
    out.entries_ = std::move(entries);
    out.keys_ = std::move(keys);
    return out;
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const DescentCertificate<E>& key_certificate() const noexcept { return keys_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  std::vector<A> keys() const {
    std::vector<A> out;
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
  }

  friend bool operator==(const FiniteFunction& a, const FiniteFunction& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry> entries_;
  DescentCertificate<E> keys_;
};

/// Throws std::invalid_argument unless the keys strictly descend.
template <class A, class E, class B>
FiniteFunction<A, B, E> make_finite_function(const Relation<A, E>& rel_a, std::vector<std::pair<A, B>> entries) {
  std::vector<A> keys;
  for (const auto& [k, v] : entries) keys.push_back(k);
  auto d = is_descending(rel_a, keys);
  if (!d) throw std::invalid_argument("finite function keys must be strictly descending");
  return FiniteFunction<A, B, E>::trusted(std::move(entries), std::move(*d));
}

template <class EA, class EB>
using FinFunEvidence = LexListEvidence<LexEvidence<EA, EB>>;

template <class A, class B, class EA, class EB>
using FinFunRelation = Relation<FiniteFunction<A, B, EA>, FinFunEvidence<EA, EB>>;

/// Inverse image of Pow(A x B): descending keys give descending pairs.
template <class A, class EA, class B, class EB>
FinFunRelation<A, B, EA, EB> finfun_exp(const Relation<A, EA>& rel_a, const Relation<B, EB>& rel_b) {
  using F = FiniteFunction<A, B, EA>;
  using PairEv = LexEvidence<EA, EB>;
  using Pairs = DescendingList<std::pair<A, B>, PairEv>;
  auto pow = pow_relation(lex_product(rel_a, rel_b));
  auto to_pairs = [](const F& f) {
    DescentCertificate<PairEv> cert;
    for (const auto& e : f.key_certificate().links) cert.links.push_back(PairEv{FirstLess<EA>{e}});
    return Pairs::trusted(f.entries(), std::move(cert));
  };
  auto rel = inverse_image<F>(pow, to_pairs, rel_b.name() + "^" + rel_a.name());

  if (rel_a.has_carrier() && rel_b.has_carrier()) {
    typename FinFunRelation<A, B, EA, EB>::Parts parts = rel.parts();
    parts.carrier = [rel_a, rel_b] {
      std::vector<F> out;
      const auto values = rel_b.carrier();
      std::vector<std::vector<A>> key_lists{{}};
      for (const A& x : rel_a.carrier()) {
        std::vector<std::vector<A>> tails;
        std::vector<A> scratch;
        detail::descending_tails(rel_a, x, scratch, tails);
        for (auto& t : tails) key_lists.push_back(append(std::vector<A>{x}, t));
      }
      for (const auto& keys : key_lists) {
        auto d = is_descending(rel_a, keys);
        if (!d) continue;
        // Every assignment of values to the keys, odometer style.
        std::vector<std::size_t> pick(keys.size(), 0);
        for (;;) {
          std::vector<std::pair<A, B>> entries;
          for (std::size_t i = 0; i < keys.size(); ++i) entries.emplace_back(keys[i], values[pick[i]]);
          out.push_back(F::trusted(std::move(entries), *d));
          std::size_t i = 0;
          while (i < pick.size() && ++pick[i] == values.size()) pick[i++] = 0;
          if (i == pick.size()) break;
        }
      }
      return out;
    };
    return FinFunRelation<A, B, EA, EB>(std::move(parts));
  }
  return rel;
}

// ---------------------------------------------------------------------------
// Multisets M(A) = Nat^A with positive multiplicities

template <class A, class E>
using Multiset = FiniteFunction<A, Nat, E>;

template <class EA>
using MultisetEvidence = FinFunEvidence<EA, NatLessEvidence>;

template <class A, class E>
using MultisetRelation = Relation<Multiset<A, E>, MultisetEvidence<E>>;

template <class A, class E>
MultisetRelation<A, E> multiset_relation(const Relation<A, E>& rel_a) {
  auto rel = finfun_exp(rel_a, nat_less());
  typename MultisetRelation<A, E>::Parts parts = rel.parts();
  parts.name = "M(" + rel_a.name() + ")";
  return MultisetRelation<A, E>(std::move(parts));
}

/// Sorts descending under rel_a and merges duplicates. Throws
/// std::invalid_argument when two distinct elements are unrelated.
template <class A, class E>
Multiset<A, E> multiset_of(const Relation<A, E>& rel_a, const std::vector<A>& elements) {
  std::vector<std::pair<A, Nat>> entries;
  for (const A& x : elements) {
    std::size_t i = 0;
    bool merged = false;
    while (i < entries.size()) {
      if (entries[i].first == x) {
        ++entries[i].second;
        merged = true;
        break;
      }
      if (rel_a.relates(x, entries[i].first)) {
        ++i;
        continue;
      }
      if (!rel_a.relates(entries[i].first, x)) {
        throw std::invalid_argument("multiset elements must be pairwise related");
      }
      break;
    }
    if (!merged) entries.insert(entries.begin() + static_cast<std::ptrdiff_t>(i), {x, 1});
  }
  return make_finite_function(rel_a, std::move(entries));
}

/// Validating constructor from (element, multiplicity) entries.
template <class A, class E>
Multiset<A, E> make_multiset(const Relation<A, E>& rel_a, std::vector<std::pair<A, Nat>> entries) {
  for (const auto& [x, m] : entries) {
    if (m == 0) throw std::invalid_argument("multiset multiplicities must be positive");
  }
  return make_finite_function(rel_a, std::move(entries));
}

/// Each element repeated by its multiplicity, descending.
template <class A, class E>
std::vector<A> occurrences(const Multiset<A, E>& m) {
  std::vector<A> out;
  for (const auto& [x, k] : m.entries()) out.insert(out.end(), k, x);
  return out;
}

class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dershowitz-Manna by search: does n reach m through steps that replace one
/// occurrence by finitely many strictly smaller elements? Intermediate
/// multisets never need more than |m| + |n| elements. Throws
/// OracleBudgetExceeded after visiting `budget` multisets.
template <class A, class E>
bool dm_oracle(const std::vector<A>& m, const std::vector<A>& n, const Relation<A, E>& rel_a,
               std::size_t budget = 100000) {
  using Bag = std::vector<A>;
  auto same = [](const Bag& x, const Bag& y) { return x.size() == y.size() && std::is_permutation(x.begin(), x.end(), y.begin()); };
  const std::size_t cap = m.size() + n.size();
  std::vector<Bag> seen{n};
  std::vector<Bag> todo{n};
  while (!todo.empty()) {
    Bag cur = std::move(todo.back());
    todo.pop_back();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (std::find(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(i), cur[i]) != cur.begin() + static_cast<std::ptrdiff_t>(i)) continue;
      Bag rest = cur;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      std::vector<A> smaller;
      for (auto& [y, e] : rel_a.predecessors(cur[i])) smaller.push_back(y);
      // Replacements: multisets over `smaller` that keep the size within cap.
      std::vector<Bag> replacements{Bag{}};
      for (std::size_t r = 0; r < replacements.size(); ++r) {
        if (rest.size() + replacements[r].size() >= cap) continue;
        // Nondecreasing index order, so each multiset is built once.
        std::size_t from = 0;
        if (!replacements[r].empty()) {
          from = static_cast<std::size_t>(
              std::find(smaller.begin(), smaller.end(), replacements[r].back()) - smaller.begin());
        }
        for (std::size_t j = from; j < smaller.size(); ++j) replacements.push_back(snoc(replacements[r], smaller[j]));
      }
      for (const auto& rep : replacements) {
        Bag next = append(rest, rep);
        if (same(next, m)) return true;
        if (std::any_of(seen.begin(), seen.end(), [&](const Bag& b) { return same(b, next); })) continue;
        if (seen.size() >= budget) throw OracleBudgetExceeded("dm_oracle: search budget exhausted");
        seen.push_back(next);
        todo.push_back(std::move(next));
      }
    }
  }
  return false;
}

template <class A, class E>
bool dm_oracle(const Multiset<A, E>& m, const Multiset<A, E>& n, const Relation<A, E>& rel_a,
               std::size_t budget = 100000) {
  return dm_oracle(occurrences(m), occurrences(n), rel_a, budget);
}

// ---------------------------------------------------------------------------
// Nested multisets M*(A) = Sigma n. M^n(A), M^0 = A, M^(n+1) = M^n + M(M^n)

/// An atom of A or a finite bag of nested multisets, kept at its least
/// depth: atoms have depth 0, a bag is one deeper than its deepest member
/// (the empty bag has depth 1). Bag entries descend and carry positive
/// multiplicities.
template <class A>
class NestedMultiset {
 public:
  using Entry = std::pair<NestedMultiset, Nat>;

  static NestedMultiset atom(A a) {
    NestedMultiset out;
    out.node_ = std::make_shared<const Node>(std::in_place_index<0>, std::move(a));
    return out;
  }

  /// No validation; entries must already descend in the nested order.
  static NestedMultiset trusted_bag(std::vector<Entry> entries) {
    NestedMultiset out;
    out.depth_ = 1;
    for (const auto& [x, k] : entries) out.depth_ = std::max(out.depth_, x.depth() + 1);
    out.node_ = std::make_shared<const Node>(std::in_place_index<1>, std::move(entries));
    return out;
  }

  Nat depth() const noexcept { return depth_; }
  bool is_atom() const noexcept { return node_->index() == 0; }
  const A& atom_value() const { return std::get<0>(*node_); }
  const std::vector<Entry>& entries() const { return std::get<1>(*node_); }

  /// Total multiplicity of a bag.
  Nat size() const {
    Nat n = 0;
    for (const auto& [x, k] : entries()) n += k;
    return n;
  }

  friend bool operator==(const NestedMultiset& a, const NestedMultiset& b) {
    return a.depth_ == b.depth_ && (a.node_ == b.node_ || *a.node_ == *b.node_);
  }

 private:
  using Node = std::variant<A, std::vector<Entry>>;
  NestedMultiset() = default;

  Nat depth_ = 0;
  std::shared_ptr<const Node> node_;
};

/// Evidence at layer M^n: the layer's own evidence with the recursive type
/// erased. Layer 0 holds an EA; layer n + 1 holds the sum evidence over
/// M^n + M(M^n).
struct NestedEvidence {
  Nat layer = 0;
  std::any inner;
};

template <class A>
using NestedLayerRelation = Relation<NestedMultiset<A>, NestedEvidence>;

using NestedLayerSum = SumEvidence<NestedEvidence, MultisetEvidence<NestedEvidence>>;

/// The relation on M^n(A), with members of smaller depth entering through the
/// left injections.
template <class A, class E>
NestedLayerRelation<A> nested_layer(const Relation<A, E>& rel_a, Nat n) {
  using NM = NestedMultiset<A>;
  if (n == 0) {
    return transport<NM, NestedEvidence>(
        rel_a,
        [](const NM& x) -> const A& {
          if (!x.is_atom()) throw std::invalid_argument("layer 0 holds atoms only");
          return x.atom_value();
        },
        [](const E& e) { return NestedEvidence{0, std::any(e)}; },
        [](const NestedEvidence& e) { return std::any_cast<E>(e.inner); }, "M^0");
  }
  using Lower = NestedLayerRelation<A>;
  using Bag = Multiset<NM, NestedEvidence>;
  using S = Sum<NM, Bag>;
  using SEv = NestedLayerSum;
  Lower lower = nested_layer(rel_a, n - 1);
  auto sum = disjoint_sum(lower, multiset_relation(lower));
  return transport<NM, NestedEvidence>(
      sum,
      [lower, n](const NM& x) -> S {
        if (x.depth() < n) return S{Inl<NM>{x}};
        if (x.depth() > n) throw std::invalid_argument("nested multiset is deeper than its layer");
        std::vector<NM> keys;
        for (const auto& [y, k] : x.entries()) keys.push_back(y);
        auto d = is_descending(lower, keys);
        if (!d) throw EvidenceError("nested multiset entries do not descend");
        return S{Inr<Bag>{Bag::trusted(x.entries(), std::move(*d))}};
      },
      [n](const SEv& e) { return NestedEvidence{n, std::any(e)}; },
      [](const NestedEvidence& e) { return std::any_cast<SEv>(e.inner); }, "M^" + std::to_string(n));
}

template <class A>
using NestedMultisetRelation = Relation<NestedMultiset<A>, LexEvidence<NatLessEvidence, NestedEvidence>>;

/// Depth first, then the layer relation at the common depth.
template <class A, class E>
NestedMultisetRelation<A> nested_multiset_relation(const Relation<A, E>& rel_a) {
  using NM = NestedMultiset<A>;
  auto sigma = lex_sigma(nat_less(), [rel_a](Nat n) { return nested_layer(rel_a, n); }, "M*");
  return inverse_image<NM>(sigma, [](const NM& x) { return std::pair<Nat, NM>{x.depth(), x}; },
                           "M*(" + rel_a.name() + ")");
}

template <class A>
NestedMultiset<A> nm_atom(A a) {
  return NestedMultiset<A>::atom(std::move(a));
}

template <class A>
NestedMultiset<A> nm_singleton(const NestedMultiset<A>& x) {
  return NestedMultiset<A>::trusted_bag({{x, 1}});
}

template <class A>
NestedMultiset<A> nm_empty() {
  return NestedMultiset<A>::trusted_bag({});
}

namespace detail {

// Inserts (x, k) into descending entries, merging equal members.
template <class A>
void nm_insert(const NestedMultisetRelation<A>& rel, std::vector<typename NestedMultiset<A>::Entry>& entries,
               const NestedMultiset<A>& x, Nat k) {
  std::size_t i = 0;
  for (; i < entries.size(); ++i) {
    if (entries[i].first == x) {
      entries[i].second += k;
      return;
    }
    if (rel.relates(x, entries[i].first)) continue;
    if (!rel.relates(entries[i].first, x)) throw std::invalid_argument("nested multiset members must be pairwise related");
    break;
  }
  entries.insert(entries.begin() + static_cast<std::ptrdiff_t>(i), {x, k});
}

}  // namespace detail

/// Bag of the given members, sorted and merged.
template <class A, class E>
NestedMultiset<A> nm_bag(const Relation<A, E>& rel_a, const std::vector<NestedMultiset<A>>& members) {
  auto rel = nested_multiset_relation(rel_a);
  std::vector<typename NestedMultiset<A>::Entry> entries;
  for (const auto& x : members) detail::nm_insert(rel, entries, x, 1);
  return NestedMultiset<A>::trusted_bag(std::move(entries));
}

/// Multiset union of two bags; multiplicities add. Throws
/// std::invalid_argument for atoms or unrelated members.
template <class A, class E>
NestedMultiset<A> nm_union(const Relation<A, E>& rel_a, const NestedMultiset<A>& m1, const NestedMultiset<A>& m2) {
  if (m1.is_atom() || m2.is_atom()) throw std::invalid_argument("union is defined on bags only");
  auto rel = nested_multiset_relation(rel_a);
  auto entries = m1.entries();
  for (const auto& [x, k] : m2.entries()) detail::nm_insert(rel, entries, x, k);
  return NestedMultiset<A>::trusted_bag(std::move(entries));
}

// ---------------------------------------------------------------------------
// Unification ordering

/// <x', y'> < <x, y> when vars(x') u vars(y') is a proper subset of
/// vars(x) u vars(y), or the sets agree and x' < x. A subrelation of the
/// inverse image of Nat x substructure under <|vars(x) u vars(y)|, x>.
template <class X, class E, class Vars>
Relation<std::pair<X, X>, LexEvidence<NatLessEvidence, E>> unification_ordering(const Relation<X, E>& substructure,
                                                                              Vars vars) {
  using P = std::pair<X, X>;
  using Ev = LexEvidence<NatLessEvidence, E>;
  auto all_vars = [vars](const P& p) {
    auto s = vars(p.first);
    auto t = vars(p.second);
    s.insert(t.begin(), t.end());
    return s;
  };
  auto lex = lex_product(nat_less(), substructure);
  auto image = inverse_image<P>(
      lex, [all_vars](const P& p) { return std::pair<Nat, X>{all_vars(p).size(), p.first}; }, "un");
  return subrelation(
      image,
      [all_vars, substructure](const P& p2, const P& p) -> std::optional<Ev> {
        const auto v2 = all_vars(p2);
        const auto v = all_vars(p);
        if (v2 == v) {
          if (auto e = substructure.decide(p2.first, p.first)) return Ev{SecondLess<E>{Eq{}, std::move(*e)}};
          return std::nullopt;
        }
        if (v2.size() < v.size() && std::includes(v.begin(), v.end(), v2.begin(), v2.end())) {
          return Ev{FirstLess<NatLessEvidence>{NatLessEvidence::make(v2.size(), v.size())}};
        }
        return std::nullopt;
      },
      [](const P&, const P&, const Ev& e) { return e; }, "unification");
}

}  // namespace wf
