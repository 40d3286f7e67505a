#pragma once

// Well-founded relations packaged with evidence and a recursion operator.
//
// A Relation<A, E> bundles
//   - decide(x', x): evidence of type E that x' precedes x, or nothing;
//   - an optional predecessor enumerator and an optional finite carrier;
//   - a recursor implementing wfrec for every result type.
//
// wfrec is polymorphic in its result type P. Combinators build their own
// recursor out of the recursors of the relations they are made from, and P
// is erased to `Value` at that boundary so one recursor serves every P.

#include <any>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wf {

using Nat = std::uint64_t;
using Value = std::any;

/// Witness of an equality x' = x. Carries nothing: host equality already holds.
struct Eq {
  friend bool operator==(const Eq&, const Eq&) = default;
};

/// Inhabitant of the unit proposition.
struct Unit {
  friend bool operator==(const Unit&, const Unit&) = default;
};

/// Evidence type with no values. Used by relations that never hold.
class Absurd {
  Absurd() = default;

 public:
  friend bool operator==(const Absurd&, const Absurd&) = default;
};

class EvidenceError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DepthBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UndecidableError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Process-wide knobs.

bool evidence_validation() noexcept;
void set_evidence_validation(bool on) noexcept;

/// Maximum nesting of recursive calls made through wfrec. Initialized from
/// WFREC_DEPTH when set, otherwise 10000.
std::size_t depth_budget() noexcept;
void set_depth_budget(std::size_t budget) noexcept;

class ScopedEvidenceValidation {
 public:
  explicit ScopedEvidenceValidation(bool on) : previous_(evidence_validation()) {
    set_evidence_validation(on);
  }
  ~ScopedEvidenceValidation() { set_evidence_validation(previous_); }
  ScopedEvidenceValidation(const ScopedEvidenceValidation&) = delete;
  ScopedEvidenceValidation& operator=(const ScopedEvidenceValidation&) = delete;

 private:
  bool previous_;
};

namespace detail {

class DepthGuard {
 public:
  DepthGuard();
  ~DepthGuard();
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;
};

}  // namespace detail

// ---------------------------------------------------------------------------

template <class A, class E>
class Relation {
 public:
  using element_type = A;
  using evidence_type = E;

  using Decide = std::function<std::optional<E>(const A&, const A&)>;
  using Predecessors = std::function<std::vector<std::pair<A, E>>(const A&)>;
  using Carrier = std::function<std::vector<A>()>;

  using AnyRec = std::function<Value(const A&, const E&)>;
  using AnyStep = std::function<Value(const A&, const AnyRec&)>;
  using Recursor = std::function<Value(const AnyStep&, const A&)>;

  template <class P>
  using Rec = std::function<P(const A&, const E&)>;
  template <class P>
  using Step = std::function<P(const A&, const Rec<P>&)>;

  struct Parts {
    Decide decide;
    Recursor recursor;          // empty: direct host recursion
    Predecessors predecessors;  // empty: derived from carrier when present
    Carrier carrier;            // empty: carrier not enumerable
    std::string name;
  };

  explicit Relation(Parts parts) : parts_(std::make_shared<const Parts>(std::move(parts))) {
    if (!parts_->decide) throw std::invalid_argument("relation needs a decision procedure");
  }

  const std::string& name() const noexcept { return parts_->name; }

  std::optional<E> decide(const A& lesser, const A& greater) const {
    return parts_->decide(lesser, greater);
  }
  bool relates(const A& lesser, const A& greater) const {
    return decide(lesser, greater).has_value();
  }

  bool has_predecessors() const noexcept {
    return static_cast<bool>(parts_->predecessors) || static_cast<bool>(parts_->carrier);
  }
  std::vector<std::pair<A, E>> predecessors(const A& x) const {
    if (parts_->predecessors) return parts_->predecessors(x);
    if (parts_->carrier) {
      std::vector<std::pair<A, E>> out;
      for (auto& y : parts_->carrier()) {
        if (auto e = decide(y, x)) out.emplace_back(std::move(y), std::move(*e));
      }
      return out;
    }
    throw UndecidableError("relation '" + name() + "' has no predecessor enumeration");
  }

  bool has_carrier() const noexcept { return static_cast<bool>(parts_->carrier); }
  std::vector<A> carrier() const {
    if (!parts_->carrier) throw UndecidableError("relation '" + name() + "' has no finite carrier");
    return parts_->carrier();
  }

  /// The recursion operator with the result type erased.
  Value wfrec_any(const AnyStep& step, const A& a) const {
    AnyStep checked = guard(step);
    if (parts_->recursor) return parts_->recursor(checked, a);
    return direct(checked, a);
  }

  /// wfrec(step, a) = step(a, (x', e) -> wfrec(step, x')).
  template <class P, class F>
  P wfrec(F step, const A& a) const {
    AnyStep erased = [step = std::move(step)](const A& x, const AnyRec& rec) -> Value {
      Rec<P> typed = [rec](const A& y, const E& e) -> P { return std::any_cast<P>(rec(y, e)); };
      return Value(std::in_place_type<P>, step(x, typed));
    };
    return std::any_cast<P>(wfrec_any(erased, a));
  }

  const Parts& parts() const noexcept { return *parts_; }

 private:
  // Every recursive call handed to a step is depth-counted and, when
  // validation is on, checked against decide.
  AnyStep guard(const AnyStep& step) const {
    Relation self = *this;
    return [self, step](const A& x, const AnyRec& rec) -> Value {
      AnyRec checked = [self, x, rec](const A& y, const E& e) -> Value {
        if (evidence_validation() && !self.relates(y, x)) {
          throw EvidenceError("wfrec on '" + self.name() + "': recursive call without descent");
        }
        detail::DepthGuard depth;
        return rec(y, e);
      };
      return step(x, checked);
    };
  }

  Value direct(const AnyStep& step, const A& a) const {
    Relation self = *this;
    AnyRec rec = [self, step](const A& y, const E&) -> Value { return self.direct(step, y); };
    return step(a, rec);
  }

  std::shared_ptr<const Parts> parts_;
};

/// Generic re-dispatch: evaluates the recursion equation by host recursion,
/// ignoring the relation's own recursor.
template <class P, class A, class E, class F>
P direct_wfrec(const Relation<A, E>& rel, F step, const A& a) {
  typename Relation<A, E>::Parts parts = rel.parts();
  parts.recursor = {};
  return Relation<A, E>(std::move(parts)).template wfrec<P>(std::move(step), a);
}

template <class A>
Relation<A, Absurd> empty_relation(std::vector<A> carrier = {}) {
  using R = Relation<A, Absurd>;
  typename R::Parts parts;
  parts.name = "empty";
  parts.decide = [](const A&, const A&) -> std::optional<Absurd> { return std::nullopt; };
  parts.predecessors = [](const A&) { return std::vector<std::pair<A, Absurd>>{}; };
  if (!carrier.empty()) parts.carrier = [carrier] { return carrier; };
  // The step may never recurse: there is nothing to recurse on.
  parts.recursor = [](const typename R::AnyStep& step, const A& a) -> Value {
    return step(a, [](const A&, const Absurd&) -> Value {
      throw EvidenceError("empty relation: recursive call is impossible");
    });
  };
  return R(std::move(parts));
}

/// Relation given by a boolean test, evidence carrying no information.
template <class A, class Pred>
Relation<A, Unit> decidable_relation(Pred less, std::string name = "decidable") {
  typename Relation<A, Unit>::Parts parts;
  parts.name = std::move(name);
  parts.decide = [less = std::move(less)](const A& x, const A& y) -> std::optional<Unit> {
    if (less(x, y)) return Unit{};
    return std::nullopt;
  };
  return Relation<A, Unit>(std::move(parts));
}

/// Same relation, enumerated over a finite carrier.
template <class A, class E>
Relation<A, E> enumerate_over(const Relation<A, E>& rel, std::vector<A> carrier) {
  typename Relation<A, E>::Parts parts = rel.parts();
  parts.predecessors = {};
  parts.carrier = [carrier = std::move(carrier)] { return carrier; };
  return Relation<A, E>(std::move(parts));
}

template <class A, class E, class F>
Relation<A, E> with_predecessors(const Relation<A, E>& rel, F predecessors) {
  typename Relation<A, E>::Parts parts = rel.parts();
  parts.predecessors = std::move(predecessors);
  return Relation<A, E>(std::move(parts));
}

}  // namespace wf
