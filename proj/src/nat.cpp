#include "wf/nat.hpp"

#include <stdexcept>

namespace wf {

NatLessEvidence NatLessEvidence::make(Nat m, Nat n) {
  if (!(m < n)) {
    throw std::invalid_argument("no evidence for " + std::to_string(m) + " < " + std::to_string(n));
  }
  return NatLessEvidence(m, n);
}

std::variant<Eq, NatLessEvidence> NatLessEvidence::unfold() const {
  if (m_ + 1 == n_) return Eq{};
  return NatLessEvidence(m_, n_ - 1);
}

std::string NatLessEvidence::to_string() const {
  std::string out;
  for (Nat i = 0; i < depth(); ++i) out += "inr(";
  out += "inl(eq)";
  out.append(depth(), ')');
  return out;
}

namespace {

Value nat_p(const NatRelation::AnyStep& step, Nat n, Nat m, NatLessEvidence ls);

NatRelation::AnyRec nat_p_at(const NatRelation::AnyStep& step, Nat n) {
  return [step, n](Nat m, const NatLessEvidence& ls) { return nat_p(step, n, m, ls); };
}

// Structural recursion on n; the inr case is a tail call and runs as a loop.
Value nat_p(const NatRelation::AnyStep& step, Nat n, Nat m, NatLessEvidence ls) {
  for (;;) {
    if (n == 0 || ls.greater() != n || ls.lesser() != m) {
      throw EvidenceError("nat_wfrec: evidence does not certify " + std::to_string(m) + " < " +
                          std::to_string(n));
    }
    auto layer = ls.unfold();
    if (std::holds_alternative<Eq>(layer)) return step(m, nat_p_at(step, n - 1));
    ls = std::get<NatLessEvidence>(layer);
    --n;
  }
}

}  // namespace

Value nat_wfrec_any(const NatRelation::AnyStep& step, Nat n) {
  return step(n, nat_p_at(step, n));
}

NatRelation nat_less() {
  NatRelation::Parts parts;
  parts.name = "nat<";
  parts.decide = [](Nat m, Nat n) { return NatLessEvidence::decide(m, n); };
  parts.predecessors = [](Nat n) {
    std::vector<std::pair<Nat, NatLessEvidence>> out;
    out.reserve(n);
    for (Nat m = 0; m < n; ++m) out.emplace_back(m, NatLessEvidence::make(m, n));
    return out;
  };
  parts.recursor = [](const NatRelation::AnyStep& step, Nat n) { return nat_wfrec_any(step, n); };
  return NatRelation(std::move(parts));
}

Relation<Nat, Unit> nat_successor() {
  Relation<Nat, Unit>::Parts parts;
  parts.name = "nat-succ";
  parts.decide = [](Nat m, Nat n) -> std::optional<Unit> {
    if (m + 1 == n) return Unit{};
    return std::nullopt;
  };
  parts.predecessors = [](Nat n) {
    std::vector<std::pair<Nat, Unit>> out;
    if (n > 0) out.emplace_back(n - 1, Unit{});
    return out;
  };
  return Relation<Nat, Unit>(std::move(parts));
}

}  // namespace wf
