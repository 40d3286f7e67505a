#pragma once

// Relation transformers. Each one builds its recursor from the recursors of
// its inputs, so wfrec on a composite relation is never generic re-dispatch.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wf/core.hpp"

namespace wf {

// ---------------------------------------------------------------------------
// Subrelation

/// x' << x holds exactly when sub_decide succeeds; embed turns its evidence
/// into base evidence, and recursion runs on the base relation.
template <class A, class EB, class SubDecide, class Embed,
          class ES = typename std::invoke_result_t<SubDecide, const A&, const A&>::value_type>
Relation<A, ES> subrelation(const Relation<A, EB>& base, SubDecide sub_decide, Embed embed,
                            std::string name = "sub") {
  using R = Relation<A, ES>;
  using BaseR = Relation<A, EB>;
  typename R::Parts parts;
  parts.name = std::move(name);
  parts.decide = [base, sub_decide, embed](const A& x2, const A& x) -> std::optional<ES> {
    std::optional<ES> lt = sub_decide(x2, x);
    if (lt && evidence_validation() && !base.relates(x2, x)) {
      throw EvidenceError("subrelation of '" + base.name() + "' holds where the base fails");
    }
    return lt;
  };
  // s(x, ih) = step x (lambda x' lt. ih(x', f(x', x, lt)))
  parts.recursor = [base, embed](const typename R::AnyStep& step, const A& a) -> Value {
    typename BaseR::AnyStep s = [step, embed](const A& x, const typename BaseR::AnyRec& ih) -> Value {
      typename R::AnyRec t = [ih, embed, x](const A& x2, const ES& lt) -> Value {
        return ih(x2, embed(x2, x, lt));
      };
      return step(x, t);
    };
    return base.wfrec_any(s, a);
  };
  if (base.has_predecessors()) {
    parts.predecessors = [base, sub_decide](const A& x) {
      std::vector<std::pair<A, ES>> out;
      for (auto& [y, e] : base.predecessors(x)) {
        if (auto lt = sub_decide(y, x)) out.emplace_back(std::move(y), std::move(*lt));
      }
      return out;
    };
  }
  if (base.has_carrier()) parts.carrier = [base] { return base.carrier(); };
  return R(std::move(parts));
}

// ---------------------------------------------------------------------------
// Inverse image

/// x' <_A x  iff  measure(x') <_B measure(x).
template <class A, class B, class E, class Measure>
Relation<A, E> inverse_image(const Relation<B, E>& base, Measure measure,
                             std::string name = "inverse-image") {
  using R = Relation<A, E>;
  using BaseR = Relation<B, E>;
  // R(y): for every z with measure(z) = y, a value in P(z).
  using Below = std::function<Value(const A&)>;

  typename R::Parts parts;
  parts.name = std::move(name);
  parts.decide = [base, measure](const A& x2, const A& x) { return base.decide(measure(x2), measure(x)); };
  // t(y, ih)   = lambda x' ls. ih(f x', ls) x' eq
  // p(y) x e   = step x t(y, (y', ls) p(y'))
  // wf x       = p(f x) x eq
  parts.recursor = [base, measure](const typename R::AnyStep& step, const A& a) -> Value {
    typename BaseR::AnyStep s = [step, measure](const B&, const typename BaseR::AnyRec& ih) -> Value {
      Below at = [step, measure, ih](const A& z) -> Value {
        typename R::AnyRec t = [measure, ih](const A& x2, const E& ls) -> Value {
          return std::any_cast<Below>(ih(measure(x2), ls))(x2);
        };
        return step(z, t);
      };
      return Value(std::move(at));
    };
    return std::any_cast<Below>(base.wfrec_any(s, measure(a)))(a);
  };
  return R(std::move(parts));
}

/// Measure-based relation with explicit element type, deduced measure result.
template <class A, class B, class E, class Measure>
Relation<A, E> measure_relation(const Relation<B, E>& base, Measure measure, std::string name = "measure") {
  return inverse_image<A>(base, std::move(measure), std::move(name));
}

/// Move a relation onto another carrier and evidence representation:
/// a subrelation of the inverse image under `to`, whose evidence is
/// converted by `wrap` and converted back by `unwrap`.
template <class A, class EA, class B, class EB, class To, class Wrap, class Unwrap>
Relation<A, EA> transport(const Relation<B, EB>& rel, To to, Wrap wrap, Unwrap unwrap,
                          std::string name = "transport") {
  Relation<A, EB> pulled = inverse_image<A>(rel, std::move(to), name);
  return subrelation(
      pulled,
      [pulled, wrap](const A& x2, const A& x) -> std::optional<EA> {
        if (auto e = pulled.decide(x2, x)) return wrap(*e);
        return std::nullopt;
      },
      [unwrap](const A&, const A&, const EA& e) -> EB { return unwrap(e); }, std::move(name));
}

// ---------------------------------------------------------------------------
// Transitive closure

/// Descent chain nodes[0] < nodes[1] < ... < nodes[k], one base link per step.
/// A chain with zero links is the equality witness of a zeroth power.
template <class A, class E>
struct ChainEvidence {
  std::vector<A> nodes;
  std::vector<E> links;

  std::size_t length() const noexcept { return links.size(); }
  const A& lesser() const { return nodes.front(); }
  const A& greater() const { return nodes.back(); }

  friend bool operator==(const ChainEvidence&, const ChainEvidence&) = default;
};

template <class A, class E>
ChainEvidence<A, E> single_link(const A& lesser, const A& greater, E e) {
  return {{lesser, greater}, {std::move(e)}};
}

/// Appends one link y < x to a chain ending at y.
template <class A, class E>
ChainEvidence<A, E> extend(ChainEvidence<A, E> chain, const A& x, E link) {
  chain.nodes.push_back(x);
  chain.links.push_back(std::move(link));
  return chain;
}

template <class A, class E>
struct ChainSplit {
  A mid;
  ChainEvidence<A, E> prefix;  // lesser <+ mid
  E last;                      // mid < greater
};

/// x' <+ x  ->  x' < x  +  (sum y. x' <+ y  x  y < x)
template <class A, class E>
std::variant<E, ChainSplit<A, E>> trcases(const ChainEvidence<A, E>& chain) {
  if (chain.length() == 0) throw EvidenceError("trcases: empty chain");
  if (chain.length() == 1) return chain.links.front();
  ChainSplit<A, E> split{chain.nodes[chain.nodes.size() - 2], chain, chain.links.back()};
  split.prefix.nodes.pop_back();
  split.prefix.links.pop_back();
  return split;
}

/// All nodes reachable backwards from x with their shortest chains, in BFS
/// order (ties broken by enumeration order). x itself is excluded.
template <class A, class E>
std::vector<std::pair<A, ChainEvidence<A, E>>> closure_predecessors(const Relation<A, E>& base, const A& x,
                                                                     const A* target = nullptr) {
  std::vector<A> nodes{x};
  std::vector<std::size_t> parent{0};
  std::vector<std::optional<E>> link{std::nullopt};
  std::vector<std::pair<A, ChainEvidence<A, E>>> out;

  auto chain_of = [&](std::size_t i) {
    ChainEvidence<A, E> c;
    c.nodes.push_back(nodes[i]);
    while (i != 0) {
      c.links.push_back(*link[i]);
      i = parent[i];
      c.nodes.push_back(nodes[i]);
    }
    return c;
  };

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (auto& [y, e] : base.predecessors(nodes[head])) {
      if (std::find(nodes.begin(), nodes.end(), y) != nodes.end()) continue;
      nodes.push_back(y);
      parent.push_back(head);
      link.emplace_back(std::move(e));
      const std::size_t i = nodes.size() - 1;
      if (target != nullptr) {
        if (nodes[i] == *target) return {{nodes[i], chain_of(i)}};
      } else {
        out.emplace_back(nodes[i], chain_of(i));
      }
    }
  }
  return out;
}

template <class A, class E>
using ClosureRelation = Relation<A, ChainEvidence<A, E>>;

namespace detail {

// q(x) x' lt0 = step x' q(x')        if trcases(lt0) = inl(ls)
//             = q(y) x' lt           if trcases(lt0) = inr(<y, <lt, ls>>)
// wf x        = step x q(x)
template <class A, class E>
struct ClosureRecursion : std::enable_shared_from_this<ClosureRecursion<A, E>> {
  using Closure = ClosureRelation<A, E>;
  using Q = typename Closure::AnyRec;

  ClosureRecursion(Relation<A, E> b, typename Closure::AnyStep s) : base(std::move(b)), step(std::move(s)) {}

  Relation<A, E> base;
  typename Closure::AnyStep step;

  Q q(const A& x) const {
    auto self = this->shared_from_this();
    typename Relation<A, E>::AnyStep s = [self](const A&, const typename Relation<A, E>::AnyRec& ih) -> Value {
      Q below = [self, ih](const A& x2, const ChainEvidence<A, E>& lt0) -> Value {
        auto cases = trcases(lt0);
        if (std::holds_alternative<E>(cases)) return self->step(x2, self->q(x2));
        auto& split = std::get<ChainSplit<A, E>>(cases);
        return std::any_cast<Q>(ih(split.mid, split.last))(x2, split.prefix);
      };
      return Value(std::move(below));
    };
    return std::any_cast<Q>(base.wfrec_any(s, x));
  }

  Value wf(const A& x) const { return step(x, q(x)); }
};

}  // namespace detail

/// Irreflexive transitive closure. decide searches backwards over the base
/// predecessors for a shortest chain; without an enumeration it can only
/// confirm single steps.
template <class A, class E>
ClosureRelation<A, E> transitive_closure(const Relation<A, E>& base) {
  using R = ClosureRelation<A, E>;
  typename R::Parts parts;
  parts.name = base.name() + "+";
  parts.decide = [base](const A& x2, const A& x) -> std::optional<ChainEvidence<A, E>> {
    if (base.has_predecessors()) {
      auto found = closure_predecessors(base, x, &x2);
      if (found.empty()) return std::nullopt;
      return std::move(found.front().second);
    }
    if (auto e = base.decide(x2, x)) return single_link(x2, x, std::move(*e));
    throw UndecidableError("transitive closure of '" + base.name() +
                           "' is undecidable without predecessor enumeration");
  };
  parts.recursor = [base](const typename R::AnyStep& step, const A& a) -> Value {
    auto machine = std::make_shared<const detail::ClosureRecursion<A, E>>(base, step);
    return machine->wf(a);
  };
  if (base.has_predecessors()) {
    parts.predecessors = [base](const A& x) { return closure_predecessors(base, x); };
  }
  if (base.has_carrier()) parts.carrier = [base] { return base.carrier(); };
  return R(std::move(parts));
}

/// Chain of exactly n links from lesser up to greater; n = 0 is equality.
template <class A, class E>
std::optional<ChainEvidence<A, E>> finite_power_decide(const Relation<A, E>& base, Nat n, const A& lesser,
                                                       const A& greater) {
  // layer[k] holds the distinct nodes reachable backwards in exactly k steps,
  // each with one chain up to `greater`.
  std::vector<std::pair<A, ChainEvidence<A, E>>> layer{{greater, ChainEvidence<A, E>{{greater}, {}}}};
  for (Nat k = 0; k < n && !layer.empty(); ++k) {
    std::vector<std::pair<A, ChainEvidence<A, E>>> next;
    for (const auto& [node, chain] : layer) {
      for (auto& [y, e] : base.predecessors(node)) {
        auto seen = std::find_if(next.begin(), next.end(), [&](const auto& p) { return p.first == y; });
        if (seen != next.end()) continue;
        ChainEvidence<A, E> c;
        c.nodes.reserve(chain.nodes.size() + 1);
        c.nodes.push_back(y);
        c.nodes.insert(c.nodes.end(), chain.nodes.begin(), chain.nodes.end());
        c.links.push_back(std::move(e));
        c.links.insert(c.links.end(), chain.links.begin(), chain.links.end());
        next.emplace_back(std::move(y), std::move(c));
      }
    }
    layer = std::move(next);
  }
  for (auto& [node, chain] : layer) {
    if (node == lesser) return std::move(chain);
  }
  return std::nullopt;
}

/// Reflexive-transitive reachability. Not a well-founded relation.
template <class A, class E>
bool refl_trans_reachable(const Relation<A, E>& base, const A& lesser, const A& greater) {
  if (lesser == greater) return true;
  return !closure_predecessors(base, greater, &lesser).empty();
}

// ---------------------------------------------------------------------------
// Disjoint sum

template <class A>
struct Inl {
  A value;
  friend bool operator==(const Inl&, const Inl&) = default;
};
template <class B>
struct Inr {
  B value;
  friend bool operator==(const Inr&, const Inr&) = default;
};

template <class A, class B>
using Sum = std::variant<Inl<A>, Inr<B>>;

template <class B, class A>
Sum<A, B> inl(A x) {
  return Inl<A>{std::move(x)};
}
template <class A, class B>
Sum<A, B> inr(B y) {
  return Inr<B>{std::move(y)};
}

template <class EA>
struct LeftLeft {
  EA evidence;
  friend bool operator==(const LeftLeft&, const LeftLeft&) = default;
};
struct LeftRight {
  friend bool operator==(const LeftRight&, const LeftRight&) = default;
};
template <class EB>
struct RightRight {
  EB evidence;
  friend bool operator==(const RightRight&, const RightRight&) = default;
};

/// There is no right-below-left case.
template <class EA, class EB>
using SumEvidence = std::variant<LeftLeft<EA>, LeftRight, RightRight<EB>>;

/// A before B:
///   inl x' < inl x = x' <_A x     inl x < inr y = T
///   inr y < inl x  = F            inr y' < inr y = y' <_B y
template <class A, class EA, class B, class EB>
Relation<Sum<A, B>, SumEvidence<EA, EB>> disjoint_sum(const Relation<A, EA>& rel_a,
                                                      const Relation<B, EB>& rel_b) {
  using S = Sum<A, B>;
  using Ev = SumEvidence<EA, EB>;
  using R = Relation<S, Ev>;
  using RA = Relation<A, EA>;
  using RB = Relation<B, EB>;

  typename R::Parts parts;
  parts.name = rel_a.name() + "+" + rel_b.name();
  parts.decide = [rel_a, rel_b](const S& z2, const S& z) -> std::optional<Ev> {
    if (const auto* l2 = std::get_if<Inl<A>>(&z2)) {
      if (const auto* l = std::get_if<Inl<A>>(&z)) {
        if (auto e = rel_a.decide(l2->value, l->value)) return Ev{LeftLeft<EA>{std::move(*e)}};
        return std::nullopt;
      }
      return Ev{LeftRight{}};
    }
    if (const auto* r = std::get_if<Inr<B>>(&z)) {
      if (auto e = rel_b.decide(std::get<Inr<B>>(z2).value, r->value)) return Ev{RightRight<EB>{std::move(*e)}};
    }
    return std::nullopt;
  };

  // q(x, ihA) inl(x') ls = ihA(x', ls)     q(x, ihA) inr(y') ls = contr(ls)
  // p(x) = step inl(x) q(x, (x', ls) p(x'))
  // s(y, ihB) inl(x') ls = p(x')           s(y, ihB) inr(y') ls = ihB(y', ls)
  // r(y) = step inr(y) s(y, (y', ls) r(y'))
  parts.recursor = [rel_a, rel_b](const typename R::AnyStep& step, const S& z) -> Value {
    typename RA::AnyStep p1 = [step](const A& x, const typename RA::AnyRec& ih_a) -> Value {
      typename R::AnyRec q = [ih_a](const S& z2, const Ev& ls) -> Value {
        const auto* l2 = std::get_if<Inl<A>>(&z2);
        const auto* ll = std::get_if<LeftLeft<EA>>(&ls);
        if (l2 == nullptr || ll == nullptr) throw EvidenceError("disjoint sum: nothing lies below inl");
        return ih_a(l2->value, ll->evidence);
      };
      return step(S{Inl<A>{x}}, q);
    };
    if (const auto* l = std::get_if<Inl<A>>(&z)) return rel_a.wfrec_any(p1, l->value);

    typename RB::AnyStep r1 = [step, rel_a, p1](const B& y, const typename RB::AnyRec& ih_b) -> Value {
      typename R::AnyRec s = [rel_a, p1, ih_b](const S& z2, const Ev& ls) -> Value {
        if (const auto* l2 = std::get_if<Inl<A>>(&z2)) return rel_a.wfrec_any(p1, l2->value);
        const auto* rr = std::get_if<RightRight<EB>>(&ls);
        if (rr == nullptr) throw EvidenceError("disjoint sum: malformed right evidence");
        return ih_b(std::get<Inr<B>>(z2).value, rr->evidence);
      };
      return step(S{Inr<B>{y}}, s);
    };
    return rel_b.wfrec_any(r1, std::get<Inr<B>>(z).value);
  };

  if (rel_a.has_predecessors() && rel_b.has_predecessors() && rel_a.has_carrier()) {
    parts.predecessors = [rel_a, rel_b](const S& z) {
      std::vector<std::pair<S, Ev>> out;
      if (const auto* l = std::get_if<Inl<A>>(&z)) {
        for (auto& [x, e] : rel_a.predecessors(l->value)) out.emplace_back(S{Inl<A>{std::move(x)}}, Ev{LeftLeft<EA>{std::move(e)}});
        return out;
      }
      for (auto& x : rel_a.carrier()) out.emplace_back(S{Inl<A>{std::move(x)}}, Ev{LeftRight{}});
      for (auto& [y, e] : rel_b.predecessors(std::get<Inr<B>>(z).value)) {
        out.emplace_back(S{Inr<B>{std::move(y)}}, Ev{RightRight<EB>{std::move(e)}});
      }
      return out;
    };
  }
  if (rel_a.has_carrier() && rel_b.has_carrier()) {
    parts.carrier = [rel_a, rel_b] {
      std::vector<S> out;
      for (auto& x : rel_a.carrier()) out.push_back(Inl<A>{std::move(x)});
      for (auto& y : rel_b.carrier()) out.push_back(Inr<B>{std::move(y)});
      return out;
    };
  }
  return R(std::move(parts));
}

// ---------------------------------------------------------------------------
// Lexicographic sum of a family

template <class EA>
struct FirstLess {
  EA evidence;
  friend bool operator==(const FirstLess&, const FirstLess&) = default;
};
template <class EB>
struct SecondLess {
  Eq first_equal;
  EB evidence;
  friend bool operator==(const SecondLess&, const SecondLess&) = default;
};

/// <x', y'> < <x, y> = x' <_A x + (x' = x  x  y' <_B(x) y)
template <class EA, class EB>
using LexEvidence = std::variant<FirstLess<EA>, SecondLess<EB>>;

template <class A, class B, class EA, class EB>
using LexRelation = Relation<std::pair<A, B>, LexEvidence<EA, EB>>;

/// family(x) is the relation on B(x). Every member shares the carrier type B
/// and evidence type EB; elements of B outside B(x) are the caller's concern.
template <class A, class EA, class Family,
          class FamilyRel = std::invoke_result_t<Family, const A&>,
          class B = typename FamilyRel::element_type, class EB = typename FamilyRel::evidence_type>
LexRelation<A, B, EA, EB> lex_sigma(const Relation<A, EA>& rel_a, Family family,
                                    std::string name = "lex") {
  using Z = std::pair<A, B>;
  using Ev = LexEvidence<EA, EB>;
  using R = Relation<Z, Ev>;
  using RA = Relation<A, EA>;
  using RB = Relation<B, EB>;
  // p(x) in prod y in B(x). P(<x, y>)
  using Column = std::function<Value(const B&)>;

  typename R::Parts parts;
  parts.name = std::move(name);
  parts.decide = [rel_a, family](const Z& z2, const Z& z) -> std::optional<Ev> {
    if (auto e = rel_a.decide(z2.first, z.first)) return Ev{FirstLess<EA>{std::move(*e)}};
    if (z2.first == z.first) {
      if (auto e = family(z.first).decide(z2.second, z.second)) return Ev{SecondLess<EB>{Eq{}, std::move(*e)}};
    }
    return std::nullopt;
  };

  // r(x, ihA, y, ihB) <x', y'> inl(lsA)      = ihA(x', lsA) y'
  // r(x, ihA, y, ihB) <x', y'> inr(e, lsB)   = ihB(y', lsB)
  // q(x, ihA, y) = step <x, y> r(x, ihA, y, (y', ls) q(x, ihA, y'))
  // p(x) y       = q(x, p', y)
  // wf <x, y>    = p(x) y
  parts.recursor = [rel_a, family](const typename R::AnyStep& step, const Z& z) -> Value {
    typename RA::AnyStep p1 = [step, family](const A& x, const typename RA::AnyRec& ih_a) -> Value {
      RB rel_b = family(x);
      Column column = [step, rel_b, x, ih_a](const B& y) -> Value {
        typename RB::AnyStep q2 = [step, x, ih_a](const B& y1, const typename RB::AnyRec& ih_b) -> Value {
          typename R::AnyRec r = [ih_a, ih_b](const Z& z2, const Ev& ls) -> Value {
            if (const auto* first = std::get_if<FirstLess<EA>>(&ls)) {
              return std::any_cast<Column>(ih_a(z2.first, first->evidence))(z2.second);
            }
            return ih_b(z2.second, std::get<SecondLess<EB>>(ls).evidence);
          };
          return step(Z{x, y1}, r);
        };
        return rel_b.wfrec_any(q2, y);
      };
      return Value(std::move(column));
    };
    return std::any_cast<Column>(rel_a.wfrec_any(p1, z.first))(z.second);
  };
  return R(std::move(parts));
}

/// Non-dependent lexicographic product. Enumerable when A has predecessors
/// and B has a finite carrier.
template <class A, class EA, class B, class EB>
LexRelation<A, B, EA, EB> lex_product(const Relation<A, EA>& rel_a, const Relation<B, EB>& rel_b) {
  using Z = std::pair<A, B>;
  using Ev = LexEvidence<EA, EB>;
  auto lex = lex_sigma(rel_a, [rel_b](const A&) { return rel_b; }, rel_a.name() + "x" + rel_b.name());
  typename Relation<Z, Ev>::Parts parts = lex.parts();
  if (rel_a.has_predecessors() && rel_b.has_predecessors() && rel_b.has_carrier()) {
    parts.predecessors = [rel_a, rel_b](const Z& z) {
      std::vector<std::pair<Z, Ev>> out;
      const auto column = rel_b.carrier();
      for (auto& [x, e] : rel_a.predecessors(z.first)) {
        for (const auto& y : column) out.emplace_back(Z{x, y}, Ev{FirstLess<EA>{e}});
      }
      for (auto& [y, e] : rel_b.predecessors(z.second)) {
        out.emplace_back(Z{z.first, std::move(y)}, Ev{SecondLess<EB>{Eq{}, std::move(e)}});
      }
      return out;
    };
  }
  if (rel_a.has_carrier() && rel_b.has_carrier()) {
    parts.carrier = [rel_a, rel_b] {
      std::vector<Z> out;
      const auto column = rel_b.carrier();
      for (auto& x : rel_a.carrier()) {
        for (const auto& y : column) out.emplace_back(x, y);
      }
      return out;
    };
  }
  return Relation<Z, Ev>(std::move(parts));
}

}  // namespace wf
