#pragma once

// Wellordering types as finitely-branching labelled trees sup(a, branches),
// the immediate-subtree relation, and the rank trees wof(a) that present
// every enumerable well-founded relation as an inverse image of it.

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "wf/core.hpp"

namespace wf {

template <class L>
struct WTree {
  L label;
  std::vector<WTree> branches;

  friend bool operator==(const WTree&, const WTree&) = default;
};

template <class L>
WTree<L> leaf(L label) {
  return WTree<L>{std::move(label), {}};
}

template <class L>
WTree<L> sup(L label, std::vector<WTree<L>> branches) {
  return WTree<L>{std::move(label), std::move(branches)};
}

/// transrec(c, sup(a, f)) = c(a, f, (y) transrec(c, f(y))), with every
/// branch result computed before the node's.
template <class C, class L, class Step>
C transrec(const Step& step, const WTree<L>& w) {
  std::vector<C> results;
  results.reserve(w.branches.size());
  for (const auto& b : w.branches) results.push_back(transrec<C>(step, b));
  return step(w.label, w.branches, results);
}

/// w' < sup(a, f): the first y with f(y) = w'.
struct SubtreeEvidence {
  std::size_t index = 0;
  friend bool operator==(const SubtreeEvidence&, const SubtreeEvidence&) = default;
};

template <class L>
std::optional<SubtreeEvidence> subtree_decide(const WTree<L>& w2, const WTree<L>& w) {
  for (std::size_t i = 0; i < w.branches.size(); ++i) {
    if (w.branches[i] == w2) return SubtreeEvidence{i};
  }
  return std::nullopt;
}

template <class L>
using WTreeRelation = Relation<WTree<L>, SubtreeEvidence>;

/// wf(sup(a, f)) = step(sup(a, f), (w', ls) wf(f(ls)))
template <class L>
WTreeRelation<L> wtree_relation() {
  using R = WTreeRelation<L>;
  typename R::Parts parts;
  parts.name = "subtree";
  parts.decide = [](const WTree<L>& w2, const WTree<L>& w) { return subtree_decide(w2, w); };
  parts.predecessors = [](const WTree<L>& w) {
    std::vector<std::pair<WTree<L>, SubtreeEvidence>> out;
    for (std::size_t i = 0; i < w.branches.size(); ++i) {
      bool repeat = false;
      for (std::size_t j = 0; j < i && !repeat; ++j) repeat = w.branches[j] == w.branches[i];
      if (!repeat) out.emplace_back(w.branches[i], SubtreeEvidence{i});
    }
    return out;
  };
  parts.recursor = [](const typename R::AnyStep& step, const WTree<L>& w) -> Value {
    auto node = [&step](const L& a, const std::vector<WTree<L>>& f, const std::vector<Value>& below) -> Value {
      typename R::AnyRec ih = [below](const WTree<L>&, const SubtreeEvidence& ls) -> Value {
        if (ls.index >= below.size()) throw EvidenceError("subtree evidence names a missing branch");
        return below[ls.index];
      };
      return step(WTree<L>{a, f}, ih);
    };
    return transrec<Value>(node, w);
  };
  return R(std::move(parts));
}

// ---------------------------------------------------------------------------
// Nat = W(Bool, cond(F, T)), with the two node kinds named.

enum class NatLabel { Zero, Succ };

using NatTree = WTree<NatLabel>;

NatTree encode_nat(Nat n);

/// Throws std::invalid_argument unless every node has the shape of an
/// encoded numeral: Zero with no branch, Succ with exactly one.
Nat decode_nat(const NatTree& w);

std::string to_string(NatLabel label);

// ---------------------------------------------------------------------------
// Rank trees

/// wof(a) = sup(a, (x', ls) wof(x')) over the predecessors of a.
template <class A, class E>
WTree<A> wof(const Relation<A, E>& rel, const A& a) {
  auto step = [&rel](const A& x, const typename Relation<A, E>::template Rec<WTree<A>>& ih) {
    std::vector<WTree<A>> branches;
    for (auto& [y, e] : rel.predecessors(x)) branches.push_back(ih(y, e));
    return sup(x, std::move(branches));
  };
  return rel.template wfrec<WTree<A>>(step, a);
}

template <class A>
const A& aof(const WTree<A>& w) {
  return w.label;
}

template <class A>
struct CharacterizationReport {
  std::size_t elements = 0;
  std::size_t pairs = 0;
  std::vector<A> label_failures;                 // aof(wof a) != a
  std::vector<std::pair<A, A>> disagreements;    // a' < a  xor  wof a' immediate subtree of wof a

  bool ok() const noexcept { return label_failures.empty() && disagreements.empty(); }
};

/// a' < a  iff  wof(a') is an immediate subtree of wof(a), over all pairs.
template <class A, class E>
CharacterizationReport<A> check_characterization(const Relation<A, E>& rel, const std::vector<A>& carrier) {
  CharacterizationReport<A> report;
  std::vector<WTree<A>> trees;
  trees.reserve(carrier.size());
  for (const A& a : carrier) {
    trees.push_back(wof(rel, a));
    ++report.elements;
    if (!(aof(trees.back()) == a)) report.label_failures.push_back(a);
  }
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    for (std::size_t j = 0; j < carrier.size(); ++j) {
      ++report.pairs;
      const bool below = rel.relates(carrier[i], carrier[j]);
      const bool subtree = subtree_decide(trees[i], trees[j]).has_value();
      if (below != subtree) report.disagreements.emplace_back(carrier[i], carrier[j]);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Rendering: label, then the branches in parentheses when there are any.

template <class L, class Format>
std::string render(const WTree<L>& w, const Format& format) {
  std::string out = format(w.label);
  if (w.branches.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < w.branches.size(); ++i) {
    if (i > 0) out += ", ";
    out += render(w.branches[i], format);
  }
  out += ')';
  return out;
}

template <class L>
std::string render(const WTree<L>& w) {
  return render(w, [](const L& label) {
    if constexpr (std::is_same_v<L, NatLabel>) {
      return to_string(label);
    } else {
      std::ostringstream os;
      os << label;
      return os.str();
    }
  });
}

}  // namespace wf
