#include "wf/examples.hpp"

namespace wf {

Nat fib_cov(Nat n) {
  auto step = [](Nat k, const NatRelation::Rec<Nat>& rec) -> Nat {
    if (k < 2) return k;
    return rec(k - 1, NatLessEvidence::make(k - 1, k)) + rec(k - 2, NatLessEvidence::make(k - 2, k));
  };
  return nat_wfrec<Nat>(step, n);
}

AckRelation ackermann_order() { return lex_product(nat_less(), nat_less()); }

Nat ackermann(Nat m, Nat n, Nat max_value) {
  using Z = std::pair<Nat, Nat>;
  using Ev = AckRelation::evidence_type;
  auto step = [max_value](const Z& z, const AckRelation::Rec<Nat>& ack) -> Nat {
    const auto [a, b] = z;
    Nat out;
    if (a == 0) {
      out = b + 1;
    } else if (b == 0) {
      out = ack(Z{a - 1, 1}, Ev{FirstLess<NatLessEvidence>{NatLessEvidence::make(a - 1, a)}});
    } else {
      // Inner call: same first component, smaller second.
      const Nat inner = ack(Z{a, b - 1}, Ev{SecondLess<NatLessEvidence>{Eq{}, NatLessEvidence::make(b - 1, b)}});
      out = ack(Z{a - 1, inner}, Ev{FirstLess<NatLessEvidence>{NatLessEvidence::make(a - 1, a)}});
    }
    if (out > max_value) throw ValueBudgetExceeded("ackermann: value exceeds " + std::to_string(max_value));
    return out;
  };
  return ackermann_order().wfrec<Nat>(step, Z{m, n});
}

Expr var(std::string name) { return Expr{true, std::move(name), {}}; }

Expr app(std::string head, std::vector<Expr> args) { return Expr{false, std::move(head), std::move(args)}; }

std::set<std::string> vars(const Expr& e) {
  if (e.is_variable) return {e.name};
  std::set<std::string> out;
  for (const auto& a : e.args) {
    auto more = vars(a);
    out.insert(more.begin(), more.end());
  }
  return out;
}

std::string to_string(const Expr& e) {
  if (e.args.empty()) return e.name;
  std::string out = e.name + "(";
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(e.args[i]);
  }
  return out + ")";
}

WTree<ExprLabel> to_wtree(const Expr& e) {
  std::vector<WTree<ExprLabel>> branches;
  for (const auto& a : e.args) branches.push_back(to_wtree(a));
  return sup(ExprLabel{e.is_variable, e.name}, std::move(branches));
}

Expr from_wtree(const WTree<ExprLabel>& w) {
  if (w.label.is_variable && !w.branches.empty()) throw std::invalid_argument("a variable has no arguments");
  Expr e{w.label.is_variable, w.label.name, {}};
  for (const auto& b : w.branches) e.args.push_back(from_wtree(b));
  return e;
}

ExprRelation expr_substructure() {
  auto rel = inverse_image<Expr>(wtree_relation<ExprLabel>(), [](const Expr& e) { return to_wtree(e); }, "subexpr");
  return with_predecessors(rel, [](const Expr& e) {
    std::vector<std::pair<Expr, SubtreeEvidence>> out;
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      bool repeat = false;
      for (std::size_t j = 0; j < i && !repeat; ++j) repeat = e.args[j] == e.args[i];
      if (!repeat) out.emplace_back(e.args[i], SubtreeEvidence{i});
    }
    return out;
  });
}

ClosureRelation<Expr, SubtreeEvidence> expr_proper_substructure() { return transitive_closure(expr_substructure()); }

ExprPairRelation expr_unification_ordering() {
  return unification_ordering(expr_proper_substructure(), [](const Expr& e) { return vars(e); });
}

}  // namespace wf
