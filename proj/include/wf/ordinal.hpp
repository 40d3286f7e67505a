#pragma once

// Ordinal notations below epsilon_0 in Cantor normal form
//   w^e1*c1 + ... + w^ek*ck,  e1 > ... > ek,  ci >= 1
// with a text grammar, comparison, normalization of raw sums, and the
// translation to nested multisets over the one-element type.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wf/combinators.hpp"
#include "wf/core.hpp"
#include "wf/derived.hpp"
#include "wf/nat.hpp"
#include "wf/rng.hpp"

namespace wf {

struct Term;

class Ordinal {
 public:
  Ordinal() = default;

  /// Throws std::invalid_argument unless the terms are already in CNF.
  static Ordinal from_cnf(std::vector<Term> terms);
  static Ordinal finite(Nat n);
  static Ordinal omega_power(Ordinal exponent, Nat coefficient = 1);
  static Ordinal omega();

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

struct Term {
  Ordinal exponent;
  Nat coefficient = 1;
};

bool operator==(const Term& a, const Term& b);

enum class Ordering { LT, EQ, GT };

std::string to_string(Ordering o);

/// Lexicographic on (exponent, coefficient) sequences, exponents recursively.
Ordering compare(const Ordinal& a, const Ordinal& b);

bool operator<(const Ordinal& a, const Ordinal& b);

/// Exponents strictly decreasing, coefficients positive, recursively.
bool is_cnf(const std::vector<Term>& terms);

/// Left-to-right ordinal addition of the raw terms: a term is absorbed by a
/// later term of larger exponent, equal adjacent exponents merge, zero
/// coefficients vanish. Exponents are normalized first.
Ordinal normalize(const std::vector<Term>& raw);

Ordinal add(const Ordinal& a, const Ordinal& b);

/// Nesting depth: 0 for zero, otherwise one more than the deepest exponent.
Nat depth(const Ordinal& o);

// ---------------------------------------------------------------------------
// Text form
//   ordinal := term ('+' term)*
//   term    := 'w' ('^' atom)? ('*' nat)? | nat
//   atom    := nat | 'w' | '(' ordinal ')'

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::invalid_argument("position " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline constexpr std::size_t kDefaultParseDepth = 64;

/// Parses and normalizes. Exponent nesting beyond depth_limit is an error.
Ordinal parse_ordinal(std::string_view text, std::size_t depth_limit = kDefaultParseDepth);

/// Canonical form: coefficient 1 omitted, w for w^1, bare coefficient for w^0.
std::string print(const Ordinal& o);

// ---------------------------------------------------------------------------
// Nested multisets over the one-element type: 0 is the atom, and
// w^e1*c1 + ... is the bag holding ci copies of the image of ei.

using UnitNested = NestedMultiset<Unit>;

Relation<Unit, Absurd> unit_relation();

UnitNested to_nested(const Ordinal& o);

/// Throws std::invalid_argument on an empty bag, which has no preimage.
Ordinal from_nested(const UnitNested& m);

using OrdinalRelation = Relation<Ordinal, LexEvidence<NatLessEvidence, NestedEvidence>>;

/// < on notations, as the inverse image of the nested multiset relation.
OrdinalRelation ordinal_relation();

/// Finitely-branching part of <: the last term w^e*c steps to
/// w^e*(c-1) + w^e'*k for each stepdown e' of e and k in 0..branching
/// (to w^e*(c-1) alone when e = 0).
OrdinalRelation ordinal_stepdown(Nat branching = 2);

std::vector<Ordinal> stepdown_predecessors(const Ordinal& o, Nat branching = 2);

/// Random CNF notation of at most the given depth.
Ordinal random_ordinal(Rng& rng, Nat max_depth, Nat max_coefficient = 3, Nat max_terms = 3);

}  // namespace wf
