#include "wf/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace wf {

Ordinal Ordinal::from_cnf(std::vector<Term> terms) {
  if (!is_cnf(terms)) throw std::invalid_argument("terms are not in Cantor normal form");
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

Ordinal Ordinal::finite(Nat n) {
  Ordinal out;
  if (n > 0) out.terms_.push_back(Term{Ordinal{}, n});
  return out;
}

Ordinal Ordinal::omega_power(Ordinal exponent, Nat coefficient) {
  Ordinal out;
  if (coefficient > 0) out.terms_.push_back(Term{std::move(exponent), coefficient});
  return out;
}

Ordinal Ordinal::omega() { return omega_power(finite(1)); }

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

bool operator==(const Term& a, const Term& b) {
  return a.coefficient == b.coefficient && a.exponent == b.exponent;
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::LT: return "LT";
    case Ordering::EQ: return "EQ";
    case Ordering::GT: return "GT";
  }
  return "?";
}

Ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (Ordering e = compare(x[i].exponent, y[i].exponent); e != Ordering::EQ) return e;
    if (x[i].coefficient != y[i].coefficient) return x[i].coefficient < y[i].coefficient ? Ordering::LT : Ordering::GT;
  }
  if (x.size() == y.size()) return Ordering::EQ;
  return x.size() < y.size() ? Ordering::LT : Ordering::GT;
}

bool operator<(const Ordinal& a, const Ordinal& b) { return compare(a, b) == Ordering::LT; }

bool is_cnf(const std::vector<Term>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0 || !is_cnf(terms[i].exponent.terms())) return false;
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) return false;
  }
  return true;
}

Ordinal normalize(const std::vector<Term>& raw) {
  std::vector<Term> out;
  for (const Term& t : raw) {
    if (t.coefficient == 0) continue;
    Ordinal e = normalize(t.exponent.terms());
    while (!out.empty() && out.back().exponent < e) out.pop_back();
    if (!out.empty() && out.back().exponent == e) {
      if (out.back().coefficient > std::numeric_limits<Nat>::max() - t.coefficient) {
        throw std::overflow_error("ordinal coefficient overflow");
      }
      out.back().coefficient += t.coefficient;
    } else {
      out.push_back(Term{std::move(e), t.coefficient});
    }
  }
  return Ordinal::from_cnf(std::move(out));
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  std::vector<Term> raw = a.terms();
  raw.insert(raw.end(), b.terms().begin(), b.terms().end());
  return normalize(raw);
}

Nat depth(const Ordinal& o) {
  Nat d = 0;
  for (const Term& t : o.terms()) d = std::max(d, depth(t.exponent) + 1);
  return d;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t depth_limit) : text_(text), limit_(depth_limit) {}

  Ordinal run() {
    std::vector<Term> raw = ordinal(0);
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return normalize(raw);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Nat nat() {
    if (!at_digit()) fail("expected a number");
    Nat n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const Nat digit = static_cast<Nat>(text_[pos_] - '0');
      if (n > (std::numeric_limits<Nat>::max() - digit) / 10) fail("number too large");
      n = n * 10 + digit;
      ++pos_;
    }
    return n;
  }

  std::vector<Term> ordinal(std::size_t level) {
    std::vector<Term> raw{term(level)};
    while (accept('+')) raw.push_back(term(level));
    return raw;
  }

  Term term(std::size_t level) {
    if (at_digit()) return Term{Ordinal{}, nat()};
    if (!accept('w')) fail(pos_ < text_.size() ? "expected 'w' or a number" : "unexpected end of input");
    Term t{Ordinal::finite(1), 1};
    if (accept('^')) t.exponent = atom(level + 1);
    if (accept('*')) t.coefficient = nat();
    return t;
  }

  Ordinal atom(std::size_t level) {
    if (level > limit_) fail("exponents nested deeper than " + std::to_string(limit_));
    if (at_digit()) return Ordinal::finite(nat());
    if (accept('w')) return Ordinal::omega();
    if (accept('(')) {
      std::vector<Term> raw = ordinal(level);
      if (!accept(')')) fail("expected ')'");
      return normalize(raw);
    }
    fail(pos_ < text_.size() ? "expected a number, 'w' or '('" : "unexpected end of input");
  }

  std::string_view text_;
  std::size_t limit_;
  std::size_t pos_ = 0;
};

bool is_one(const Ordinal& o) { return o == Ordinal::finite(1); }

std::string print_exponent(const Ordinal& e) {
  if (e.terms().size() == 1 && e.terms()[0].exponent.is_zero()) return std::to_string(e.terms()[0].coefficient);
  if (e == Ordinal::omega()) return "w";
  return "(" + print(e) + ")";
}

}  // namespace

Ordinal parse_ordinal(std::string_view text, std::size_t depth_limit) { return Parser(text, depth_limit).run(); }

std::string print(const Ordinal& o) {
  if (o.is_zero()) return "0";
  std::string out;
  for (const Term& t : o.terms()) {
    if (!out.empty()) out += " + ";
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += is_one(t.exponent) ? "w" : "w^" + print_exponent(t.exponent);
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Nested multisets

Relation<Unit, Absurd> unit_relation() { return empty_relation<Unit>({Unit{}}); }

UnitNested to_nested(const Ordinal& o) {
  if (o.is_zero()) return nm_atom(Unit{});
  std::vector<UnitNested::Entry> entries;
  for (const Term& t : o.terms()) entries.emplace_back(to_nested(t.exponent), t.coefficient);
  return UnitNested::trusted_bag(std::move(entries));
}

Ordinal from_nested(const UnitNested& m) {
  if (m.is_atom()) return Ordinal{};
  if (m.entries().empty()) throw std::invalid_argument("the empty bag denotes no ordinal");
  std::vector<Term> terms;
  for (const auto& [x, k] : m.entries()) terms.push_back(Term{from_nested(x), k});
  return Ordinal::from_cnf(std::move(terms));
}

OrdinalRelation ordinal_relation() {
  return inverse_image<Ordinal>(nested_multiset_relation(unit_relation()), [](const Ordinal& o) { return to_nested(o); },
                                "ord");
}

std::vector<Ordinal> stepdown_predecessors(const Ordinal& o, Nat branching) {
  if (o.is_zero()) return {};
  std::vector<Term> gamma = o.terms();
  const Ordinal e = gamma.back().exponent;
  if (--gamma.back().coefficient == 0) gamma.pop_back();
  std::vector<Ordinal> out{Ordinal::from_cnf(gamma)};
  if (e.is_zero()) return out;
  for (const Ordinal& e2 : stepdown_predecessors(e, branching)) {
    for (Nat k = 1; k <= branching; ++k) {
      auto terms = gamma;
      terms.push_back(Term{e2, k});
      out.push_back(Ordinal::from_cnf(std::move(terms)));
    }
  }
  return out;
}

OrdinalRelation ordinal_stepdown(Nat branching) {
  using Ev = OrdinalRelation::evidence_type;
  auto base = ordinal_relation();
  auto sub = subrelation(
      base,
      [base, branching](const Ordinal& y, const Ordinal& x) -> std::optional<Ev> {
        auto preds = stepdown_predecessors(x, branching);
        if (std::find(preds.begin(), preds.end(), y) == preds.end()) return std::nullopt;
        return base.decide(y, x);
      },
      [](const Ordinal&, const Ordinal&, const Ev& e) { return e; }, "ord-stepdown");
  return with_predecessors(sub, [base, branching](const Ordinal& x) {
    std::vector<std::pair<Ordinal, Ev>> out;
    for (auto& y : stepdown_predecessors(x, branching)) {
      auto e = base.decide(y, x);
      if (!e) throw EvidenceError("stepdown left the ordering");
      out.emplace_back(std::move(y), std::move(*e));
    }
    return out;
  });
}

Ordinal random_ordinal(Rng& rng, Nat max_depth, Nat max_coefficient, Nat max_terms) {
  if (max_depth == 0 || rng.below(5) == 0) return Ordinal{};
  std::vector<Term> raw;
  const Nat count = 1 + rng.below(max_terms);
  for (Nat i = 0; i < count; ++i) {
    raw.push_back(Term{random_ordinal(rng, max_depth - 1, max_coefficient, max_terms), 1 + rng.below(max_coefficient)});
  }
  std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return b.exponent < a.exponent; });
  // Keep the first term of each exponent so coefficients stay in range.
  std::vector<Term> terms;
  for (auto& t : raw) {
    if (terms.empty() || !(terms.back().exponent == t.exponent)) terms.push_back(std::move(t));
  }
  return Ordinal::from_cnf(std::move(terms));
}

}  // namespace wf
