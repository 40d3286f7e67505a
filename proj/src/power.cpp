#include "wf/power.hpp"

#include <stdexcept>
#include <string>

namespace wf {

Nat pow_nat_rank(const std::vector<Nat>& l) {
  Nat rank = 0;
  for (Nat x : l) {
    if (x >= 64) throw std::overflow_error("binary rank: exponent " + std::to_string(x) + " exceeds 63");
    const Nat bit = Nat{1} << x;
    if (rank > ~bit) throw std::overflow_error("binary rank exceeds 64 bits");
    rank += bit;
  }
  return rank;
}

}  // namespace wf
