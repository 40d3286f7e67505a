#pragma once

// Named orders for descent fuzzing, with start-value parsing, rendering and
// the rank bound each chain must respect.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wf/derived.hpp"
#include "wf/nat.hpp"

namespace wf {

enum class ChainOrder { Nat, PowNat, MultisetNat, Ord };

std::optional<ChainOrder> parse_chain_order(std::string_view name);
std::string to_string(ChainOrder order);
const std::vector<ChainOrder>& all_chain_orders();

/// Well-formed input that violates a data invariant, such as a power list
/// that does not descend.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Comma-separated naturals; the empty string is the empty list. Syntax
/// errors raise ParseError.
std::vector<Nat> parse_nat_list(std::string_view text);

Nat parse_nat(std::string_view text);

/// Throws InputError unless the list strictly descends.
DescendingList<Nat, NatLessEvidence> descending_nat_list(const std::vector<Nat>& l);

using NatMultisetRelation = MultisetRelation<Nat, NatLessEvidence>;

/// Finitely-branching part of the multiset order on naturals: one occurrence
/// of x is removed, or replaced by k copies of some y < x, 1 <= k <= branching.
NatMultisetRelation multiset_stepdown(Nat branching = 2);

struct Chain {
  ChainOrder order = ChainOrder::Nat;
  std::vector<std::string> elements;
  bool exhausted = false;
  /// Largest possible chain length from the start, when it fits in 64 bits.
  std::optional<Nat> bound;

  bool within_bound() const { return !bound || elements.size() <= *bound; }
};

/// Largest element accepted in a pow-nat start list; the predecessors of
/// [x, ...] number about 2^x.
inline constexpr Nat kMaxPowElement = 20;

/// Seeded random descent from the parsed start value.
Chain run_chain(ChainOrder order, std::string_view start, Nat seed, std::size_t max_steps);

}  // namespace wf
