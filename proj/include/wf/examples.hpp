#pragma once

// Worked examples: Quicksort by recursion on list length, Fibonacci by
// course-of-values recursion, Ackermann's function over the lexicographic
// product, and expressions with their substructure and unification orders.

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wf/combinators.hpp"
#include "wf/core.hpp"
#include "wf/derived.hpp"
#include "wf/nat.hpp"
#include "wf/power.hpp"
#include "wf/wtree.hpp"

namespace wf {

// ---------------------------------------------------------------------------
// Lists

/// listrec(c, d, nil) = c;  listrec(c, d, cons(x, l)) = d(x, l, listrec(c, d, l))
template <class T, class C, class D>
C listrec(C c, const D& d, const std::vector<T>& l) {
  C acc = std::move(c);
  for (std::size_t i = l.size(); i-- > 0;) {
    acc = d(l[i], std::vector<T>(l.begin() + static_cast<std::ptrdiff_t>(i) + 1, l.end()), std::move(acc));
  }
  return acc;
}

/// length = listrec(0, (x, l, u) succ(u))
template <class T>
Nat length(const std::vector<T>& l) {
  return listrec<T>(Nat{0}, [](const T&, const std::vector<T>&, Nat u) { return u + 1; }, l);
}

/// filter(pf, nil) = nil
/// filter(pf, cons(a, l)) = if pf(a) then cons(a, filter(pf, l)) else filter(pf, l)
template <class T, class Pred>
std::vector<T> filter(const Pred& pf, const std::vector<T>& l) {
  return listrec<T>(
      std::vector<T>{},
      [&pf](const T& a, const std::vector<T>&, std::vector<T> u) {
        if (pf(a)) u.insert(u.begin(), a);
        return u;
      },
      l);
}

template <class T>
using ListRelation = Relation<std::vector<T>, NatLessEvidence>;

/// l' < l  iff  length(l') < length(l).
template <class T>
ListRelation<T> length_order() {
  return inverse_image<std::vector<T>>(nat_less(), [](const std::vector<T>& l) { return length(l); }, "length");
}

/// Evidence that filter(pf, l) lies below cons(a, l).
template <class T, class Pred>
NatLessEvidence qless(const Pred& pf, const T&, const std::vector<T>& l) {
  return NatLessEvidence::make(length(filter(pf, l)), length(l) + 1);
}

/// The recursion step s of Quicksort; leq(b, a) says b sorts no later than a.
///   s(nil, ih)       = nil
///   s(cons(a, l), ih) = ih(filter(before(a), l), qless(...)) + cons(a, ih(filter(after(a), l), qless(...)))
template <class T, class Leq>
auto quicksort_step(Leq leq) {
  return [leq](const std::vector<T>& list, const typename ListRelation<T>::template Rec<std::vector<T>>& ih) {
    if (list.empty()) return std::vector<T>{};
    const T& a = list.front();
    const std::vector<T> l(list.begin() + 1, list.end());
    auto before = [&](const T& b) { return leq(b, a); };
    auto after = [&](const T& b) { return !leq(b, a); };
    std::vector<T> low = ih(filter(before, l), qless(before, a, l));
    std::vector<T> high = ih(filter(after, l), qless(after, a, l));
    high.insert(high.begin(), a);
    return append(std::move(low), high);
  };
}

/// quick = wfrec(s) over the length order.
template <class T, class Leq>
std::vector<T> quicksort(Leq leq, const std::vector<T>& l) {
  return length_order<T>().template wfrec<std::vector<T>>(quicksort_step<T>(std::move(leq)), l);
}

// ---------------------------------------------------------------------------
// Numbers

/// fib(n) = fib(n - 1) + fib(n - 2), each call carrying its own evidence.
Nat fib_cov(Nat n);

class ValueBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr Nat kDefaultAckermannBudget = 1'000'000;

using AckRelation = LexRelation<Nat, Nat, NatLessEvidence, NatLessEvidence>;

/// < x < on pairs of naturals.
AckRelation ackermann_order();

/// ack(0, n) = n + 1;  ack(m + 1, 0) = ack(m, 1);
/// ack(m + 1, n + 1) = ack(m, ack(m + 1, n)).
/// Throws ValueBudgetExceeded when an intermediate result passes max_value.
Nat ackermann(Nat m, Nat n, Nat max_value = kDefaultAckermannBudget);

// ---------------------------------------------------------------------------
// Expressions

struct Expr {
  bool is_variable = false;
  std::string name;
  std::vector<Expr> args;

  friend bool operator==(const Expr&, const Expr&) = default;
};

Expr var(std::string name);
Expr app(std::string head, std::vector<Expr> args = {});

std::set<std::string> vars(const Expr& e);

/// f(x, g(y)) style; applications without arguments print as the bare head.
std::string to_string(const Expr& e);

struct ExprLabel {
  bool is_variable = false;
  std::string name;
  friend bool operator==(const ExprLabel&, const ExprLabel&) = default;
};

WTree<ExprLabel> to_wtree(const Expr& e);
Expr from_wtree(const WTree<ExprLabel>& w);

using ExprRelation = Relation<Expr, SubtreeEvidence>;

/// Immediate subexpression: the inverse image of the W-tree subtree relation.
ExprRelation expr_substructure();

/// Proper subexpression: the transitive closure of expr_substructure.
ClosureRelation<Expr, SubtreeEvidence> expr_proper_substructure();

using ExprPairRelation = Relation<std::pair<Expr, Expr>, LexEvidence<NatLessEvidence, ChainEvidence<Expr, SubtreeEvidence>>>;

ExprPairRelation expr_unification_ordering();

}  // namespace wf
