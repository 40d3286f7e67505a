#include "wf/chains.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "wf/harness.hpp"
#include "wf/ordinal.hpp"
#include "wf/power.hpp"

namespace wf {

std::optional<ChainOrder> parse_chain_order(std::string_view name) {
  for (ChainOrder o : all_chain_orders()) {
    if (to_string(o) == name) return o;
  }
  return std::nullopt;
}

std::string to_string(ChainOrder order) {
  switch (order) {
    case ChainOrder::Nat: return "nat";
    case ChainOrder::PowNat: return "pow-nat";
    case ChainOrder::MultisetNat: return "multiset-nat";
    case ChainOrder::Ord: return "ord";
  }
  return "?";
}

const std::vector<ChainOrder>& all_chain_orders() {
  static const std::vector<ChainOrder> orders{ChainOrder::Nat, ChainOrder::PowNat, ChainOrder::MultisetNat,
                                              ChainOrder::Ord};
  return orders;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Reads one natural starting at pos, skipping surrounding blanks.
Nat read_nat(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && is_space(text[pos])) ++pos;
  if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
    throw ParseError(pos, "expected a number");
  }
  Nat n = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    const Nat digit = static_cast<Nat>(text[pos] - '0');
    if (n > (std::numeric_limits<Nat>::max() - digit) / 10) throw ParseError(pos, "number too large");
    n = n * 10 + digit;
    ++pos;
  }
  while (pos < text.size() && is_space(text[pos])) ++pos;
  return n;
}

// Saturating sum of weight^x over the terms (x, count); nullopt on overflow.
std::optional<Nat> weighted_sum(const std::vector<std::pair<Nat, Nat>>& terms, Nat weight) {
  Nat total = 0;
  for (auto [x, count] : terms) {
    Nat p = 1;
    for (Nat i = 0; i < x; ++i) {
      if (p > std::numeric_limits<Nat>::max() / weight) return std::nullopt;
      p *= weight;
    }
    if (count != 0 && p > std::numeric_limits<Nat>::max() / count) return std::nullopt;
    if (total > std::numeric_limits<Nat>::max() - p * count) return std::nullopt;
    total += p * count;
  }
  return total;
}

std::optional<Nat> plus_one(std::optional<Nat> n) {
  if (!n || *n == std::numeric_limits<Nat>::max()) return std::nullopt;
  return *n + 1;
}

std::string render_list(const std::vector<Nat>& l, char open, char close) {
  std::string out(1, open);
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(l[i]);
  }
  return out + close;
}

template <class A, class E, class Render>
Chain walk(ChainOrder order, const Relation<A, E>& rel, const A& start, Nat seed, std::size_t max_steps,
           const Render& render) {
  auto d = fuzz_descent(rel, start, max_steps, seed);
  Chain out;
  out.order = order;
  out.exhausted = d.exhausted;
  for (const auto& x : d.chain) out.elements.push_back(render(x));
  return out;
}

}  // namespace

std::vector<Nat> parse_nat_list(std::string_view text) {
  std::vector<Nat> out;
  std::size_t pos = 0;
  while (pos < text.size() && is_space(text[pos])) ++pos;
  if (pos == text.size()) return out;
  for (;;) {
    out.push_back(read_nat(text, pos));
    if (pos == text.size()) return out;
    if (text[pos] != ',') throw ParseError(pos, "expected ','");
    ++pos;
  }
}

Nat parse_nat(std::string_view text) {
  std::size_t pos = 0;
  const Nat n = read_nat(text, pos);
  if (pos != text.size()) throw ParseError(pos, "unexpected '" + std::string(1, text[pos]) + "'");
  return n;
}

DescendingList<Nat, NatLessEvidence> descending_nat_list(const std::vector<Nat>& l) {
  auto d = make_descending(nat_less(), l);
  if (!d) throw InputError("list " + render_list(l, '[', ']') + " is not strictly descending");
  return *d;
}

NatMultisetRelation multiset_stepdown(Nat branching) {
  using M = Multiset<Nat, NatLessEvidence>;
  using Ev = NatMultisetRelation::evidence_type;
  auto base = multiset_relation(nat_less());
  auto candidates = [branching](const M& m) {
    std::vector<M> out;
    for (const auto& [x, count] : m.entries()) {
      std::vector<Nat> rest = occurrences(m);
      rest.erase(std::find(rest.begin(), rest.end(), x));
      out.push_back(multiset_of(nat_less(), rest));
      for (Nat y = 0; y < x; ++y) {
        auto more = rest;
        for (Nat k = 1; k <= branching; ++k) {
          more.push_back(y);
          out.push_back(multiset_of(nat_less(), more));
        }
      }
    }
    return out;
  };
  auto sub = subrelation(
      base,
      [base, candidates](const M& y, const M& x) -> std::optional<Ev> {
        auto preds = candidates(x);
        if (std::find(preds.begin(), preds.end(), y) == preds.end()) return std::nullopt;
        return base.decide(y, x);
      },
      [](const M&, const M&, const Ev& e) { return e; }, "multiset-stepdown");
  return with_predecessors(sub, [base, candidates](const M& x) {
    std::vector<std::pair<M, Ev>> out;
    for (auto& y : candidates(x)) {
      auto e = base.decide(y, x);
      if (!e) throw EvidenceError("multiset stepdown left the ordering");
      out.emplace_back(std::move(y), std::move(*e));
    }
    return out;
  });
}

Chain run_chain(ChainOrder order, std::string_view start, Nat seed, std::size_t max_steps) {
  switch (order) {
    case ChainOrder::Nat: {
      const Nat n = parse_nat(start);
      Chain c = walk(order, nat_less(), n, seed, max_steps, [](Nat x) { return std::to_string(x); });
      c.bound = plus_one(n);
      return c;
    }
    case ChainOrder::PowNat: {
      auto l = descending_nat_list(parse_nat_list(start));
      if (!l.empty() && l.elements().front() > kMaxPowElement) {
        throw InputError("pow-nat elements above " + std::to_string(kMaxPowElement) + " are too large to enumerate");
      }
      Chain c = walk(order, pow_relation(nat_less()), l, seed, max_steps,
                     [](const auto& z) { return render_list(z.elements(), '[', ']'); });
      std::vector<std::pair<Nat, Nat>> terms;
      for (Nat x : l.elements()) terms.emplace_back(x, 1);
      c.bound = plus_one(weighted_sum(terms, 2));
      return c;
    }
    case ChainOrder::MultisetNat: {
      auto m = multiset_of(nat_less(), parse_nat_list(start));
      constexpr Nat kBranching = 2;
      Chain c = walk(order, multiset_stepdown(kBranching), m, seed, max_steps,
                     [](const auto& z) { return render_list(occurrences(z), '{', '}'); });
      c.bound = plus_one(weighted_sum(m.entries(), kBranching + 1));
      return c;
    }
    case ChainOrder::Ord: {
      Ordinal o = parse_ordinal(start);
      constexpr Nat kBranching = 2;
      Chain c = walk(order, ordinal_stepdown(kBranching), o, seed, max_steps,
                     [](const Ordinal& z) { return print(z); });
      // Below w^w every step lowers sum c * 3^e by at least one.
      std::vector<std::pair<Nat, Nat>> terms;
      bool finite_exponents = true;
      for (const Term& t : o.terms()) {
        if (depth(t.exponent) > 1) {
          finite_exponents = false;
          break;
        }
        terms.emplace_back(t.exponent.is_zero() ? 0 : t.exponent.terms()[0].coefficient, t.coefficient);
      }
      if (finite_exponents) c.bound = plus_one(weighted_sum(terms, kBranching + 1));
      return c;
    }
  }
  throw std::invalid_argument("unknown order");
}

}  // namespace wf
