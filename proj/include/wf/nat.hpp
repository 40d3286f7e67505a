#pragma once

// The less-than ordering on the natural numbers, defined by
//   m < 0       = empty
//   m < succ(n) = (m = n) + (m < n)
// and its course-of-values recursion operator.

#include <optional>
#include <string>
#include <variant>

#include "wf/core.hpp"

namespace wf {

/// Evidence for m < n. Unfolds one layer of the definition at a time:
/// inl(eq) when m = n - 1, otherwise inr(evidence for m < n - 1).
class NatLessEvidence {
 public:
  static std::optional<NatLessEvidence> decide(Nat m, Nat n) {
    if (m < n) return NatLessEvidence(m, n);
    return std::nullopt;
  }
  /// Throws std::invalid_argument unless m < n.
  static NatLessEvidence make(Nat m, Nat n);

  Nat lesser() const noexcept { return m_; }
  Nat greater() const noexcept { return n_; }

  /// Number of inr layers above the equality leaf: n - m - 1.
  Nat depth() const noexcept { return n_ - m_ - 1; }

  std::variant<Eq, NatLessEvidence> unfold() const;

  /// Rendering of the full unfolding, e.g. "inr(inr(inl(eq)))".
  std::string to_string() const;

  friend bool operator==(const NatLessEvidence&, const NatLessEvidence&) = default;

 private:
  NatLessEvidence(Nat m, Nat n) : m_(m), n_(n) {}
  Nat m_;
  Nat n_;
};

using NatRelation = Relation<Nat, NatLessEvidence>;

inline std::optional<NatLessEvidence> nat_less_decide(Nat m, Nat n) {
  return NatLessEvidence::decide(m, n);
}

/// < on Nat. Predecessors of n are 0..n-1; wfrec is nat_wfrec.
NatRelation nat_less();

/// Course-of-values recursion through the auxiliary function p:
///   p(0) m ls           = contr(ls)
///   p(succ n) m inl(eq) = step m p(n)
///   p(succ n) m inr(ls) = p(n) m ls
///   wf n                = step n p(n)
Value nat_wfrec_any(const NatRelation::AnyStep& step, Nat n);

template <class P, class F>
P nat_wfrec(F step, Nat n) {
  NatRelation::AnyStep erased = [step = std::move(step)](Nat x, const NatRelation::AnyRec& rec) -> Value {
    NatRelation::Rec<P> typed = [rec](Nat y, const NatLessEvidence& e) -> P {
      return std::any_cast<P>(rec(y, e));
    };
    return Value(std::in_place_type<P>, step(x, typed));
  };
  return std::any_cast<P>(nat_wfrec_any(erased, n));
}

/// Immediate-predecessor relation (n, n + 1). Not transitive; its transitive
/// closure is <.
Relation<Nat, Unit> nat_successor();

}  // namespace wf
