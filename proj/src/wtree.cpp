#include "wf/wtree.hpp"

#include <stdexcept>
#include <string>

namespace wf {

NatTree encode_nat(Nat n) {
  NatTree w = leaf(NatLabel::Zero);
  for (Nat i = 0; i < n; ++i) w = sup(NatLabel::Succ, {std::move(w)});
  return w;
}

Nat decode_nat(const NatTree& w) {
  Nat n = 0;
  const NatTree* node = &w;
  for (;;) {
    const std::size_t k = node->branches.size();
    if (k >= 2) throw std::invalid_argument("decode_nat: node with " + std::to_string(k) + " branches");
    if ((node->label == NatLabel::Zero) != (k == 0)) {
      throw std::invalid_argument("decode_nat: label does not match branching");
    }
    if (k == 0) return n;
    ++n;
    node = &node->branches.front();
  }
}

std::string to_string(NatLabel label) { return label == NatLabel::Zero ? "Z" : "S"; }

}  // namespace wf
