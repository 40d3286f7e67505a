#pragma once

// Generic checks shared by every relation: the recursion equation, uniqueness
// of its solution on finite carriers, and seeded descent fuzzing.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "wf/core.hpp"
#include "wf/rng.hpp"

namespace wf {

template <class A>
struct EquationReport {
  std::size_t checked = 0;
  std::vector<A> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// For each sample a, compares wfrec(step, a) with
/// step(a, (x', e) -> wfrec(step, x')).
template <class P, class A, class E, class F>
EquationReport<A> check_recursion_equation(const Relation<A, E>& rel, const F& step,
                                           const std::vector<A>& samples) {
  EquationReport<A> report;
  for (const A& a : samples) {
    const P lhs = rel.template wfrec<P>(step, a);
    typename Relation<A, E>::template Rec<P> unfolded = [&](const A& y, const E&) -> P {
      return rel.template wfrec<P>(step, y);
    };
    const P rhs = step(a, unfolded);
    ++report.checked;
    if (!(lhs == rhs)) report.failures.push_back(a);
  }
  return report;
}

/// Thrown when a candidate satisfies the recursion equation everywhere yet
/// differs from wfrec somewhere. Never expected: the solution is unique.
class UniquenessViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// True iff candidate satisfies the recursion equation at every carrier
/// element. A passing candidate is then compared against wfrec pointwise.
template <class P, class A, class E, class F, class Candidate>
bool check_unique_solution(const Relation<A, E>& rel, const F& step, const std::vector<A>& carrier,
                           const Candidate& candidate) {
  typename Relation<A, E>::template Rec<P> through_candidate = [&](const A& y, const E&) -> P {
    return candidate(y);
  };
  for (const A& a : carrier) {
    if (!(P(candidate(a)) == step(a, through_candidate))) return false;
  }
  for (const A& a : carrier) {
    if (!(P(candidate(a)) == rel.template wfrec<P>(step, a))) {
      throw UniquenessViolation("recursion equation has two solutions on '" + rel.name() + "'");
    }
  }
  return true;
}

template <class A>
struct Descent {
  std::vector<A> chain;     // starts at the start element, strictly descending
  bool exhausted = false;   // chain length reached max_steps

  bool ok() const noexcept { return !exhausted; }
};

/// Walks down from start, choosing uniformly among predecessors, until an
/// element with no predecessors. Reports exhaustion once the chain holds
/// max_steps elements.
template <class A, class E>
Descent<A> fuzz_descent(const Relation<A, E>& rel, const A& start, std::size_t max_steps, Rng& rng) {
  Descent<A> out;
  out.chain.push_back(start);
  for (;;) {
    if (out.chain.size() >= max_steps) {
      out.exhausted = true;
      return out;
    }
    auto preds = rel.predecessors(out.chain.back());
    if (preds.empty()) return out;
    out.chain.push_back(std::move(preds[rng.below(preds.size())].first));
  }
}

template <class A, class E>
Descent<A> fuzz_descent(const Relation<A, E>& rel, const A& start, std::size_t max_steps, Nat seed) {
  Rng rng(seed);
  return fuzz_descent(rel, start, max_steps, rng);
}

}  // namespace wf
