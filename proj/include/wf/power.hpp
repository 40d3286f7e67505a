#pragma once

// Lexicographic exponentiation. Pow(A) holds the strictly descending lists
// over A, ordered lexicographically; its recursor is built from the
// recursor of the transitive closure of the base relation.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wf/combinators.hpp"
#include "wf/core.hpp"

namespace wf {

// ---------------------------------------------------------------------------
// Lists

template <class T>
std::vector<T> append(std::vector<T> l1, const std::vector<T>& l2) {
  l1.insert(l1.end(), l2.begin(), l2.end());
  return l1;
}

template <class T>
std::vector<T> snoc(std::vector<T> l, T x) {
  l.push_back(std::move(x));
  return l;
}

template <class T>
std::vector<T> reversed(std::vector<T> l) {
  std::reverse(l.begin(), l.end());
  return l;
}

/// Reverse list recursion:
///   rlistrec(c0, c1, nil)      = c0
///   rlistrec(c0, c1, l + [x])  = c1(l, x, rlistrec(c0, c1, l))
template <class T, class C, class Snoc>
C rlistrec(C c0, const Snoc& c1, const std::vector<T>& l) {
  C acc = std::move(c0);
  std::vector<T> prefix;
  prefix.reserve(l.size());
  for (const T& x : l) {
    acc = c1(static_cast<const std::vector<T>&>(prefix), x, std::move(acc));
    prefix.push_back(x);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Descent certificates

/// D(l): links[i] certifies l[i + 1] < l[i].
template <class E>
struct DescentCertificate {
  std::vector<E> links;
  friend bool operator==(const DescentCertificate&, const DescentCertificate&) = default;
};

template <class A, class E>
std::optional<DescentCertificate<E>> is_descending(const Relation<A, E>& rel, const std::vector<A>& l) {
  DescentCertificate<E> d;
  for (std::size_t i = 1; i < l.size(); ++i) {
    auto e = rel.decide(l[i], l[i - 1]);
    if (!e) return std::nullopt;
    d.links.push_back(std::move(*e));
  }
  return d;
}

/// An element <l, d> of Pow(A). Equality compares the lists only.
template <class A, class E>
class DescendingList {
 public:
  DescendingList() = default;

  /// No validation; for certificates produced by the lemmas below.
  static DescendingList trusted(std::vector<A> elements, DescentCertificate<E> cert) {
    if (cert.links.size() + 1 != elements.size() && !(elements.empty() && cert.links.empty())) {
      throw EvidenceError("descent certificate does not match list length");
    }
    DescendingList out;
    out.elements_ = std::move(elements);
    out.cert_ = std::move(cert);
    return out;
  }

  const std::vector<A>& elements() const noexcept { return elements_; }
  const DescentCertificate<E>& certificate() const noexcept { return cert_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  friend bool operator==(const DescendingList& a, const DescendingList& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<A> elements_;
  DescentCertificate<E> cert_;
};

template <class A, class E>
std::optional<DescendingList<A, E>> make_descending(const Relation<A, E>& rel, std::vector<A> l) {
  auto d = is_descending(rel, l);
  if (!d) return std::nullopt;
  return DescendingList<A, E>::trusted(std::move(l), std::move(*d));
}

/// Splits D(l1 + l) into D(l1) and D(l).
template <class E>
std::pair<DescentCertificate<E>, DescentCertificate<E>> descap(std::size_t l1_size, std::size_t l_size,
                                                               const DescentCertificate<E>& d) {
  const std::size_t total = l1_size + l_size;
  if (d.links.size() + 1 != total && !(total == 0 && d.links.empty())) {
    throw EvidenceError("descap: certificate does not match l1 + l");
  }
  // Links inside l1 end just before the l1/l seam; links inside l start after it.
  const std::size_t cut = l1_size == 0 ? 0 : l1_size - 1;
  const std::size_t start = l1_size == 0 ? 0 : std::min(l1_size, d.links.size());
  DescentCertificate<E> first;
  DescentCertificate<E> second;
  first.links.assign(d.links.begin(), d.links.begin() + static_cast<std::ptrdiff_t>(cut));
  second.links.assign(d.links.begin() + static_cast<std::ptrdiff_t>(start), d.links.end());
  return {std::move(first), std::move(second)};
}

template <class A, class E>
std::pair<DescentCertificate<E>, DescentCertificate<E>> descap(const std::vector<A>& l1, const std::vector<A>& l,
                                                               const DescentCertificate<E>& d) {
  return descap(l1.size(), l.size(), d);
}

// ---------------------------------------------------------------------------
// The list ordering
//   l' -> nil                 = F
//   nil -> cons(x, l)         = T
//   cons(x', l') -> cons(x, l) = x' < x + (x' = x  x  l' -> l)

struct ShorterPrefix {
  friend bool operator==(const ShorterPrefix&, const ShorterPrefix&) = default;
};

/// A run of `equal_heads` equality layers ending in either nil -> cons
/// (head_less empty) or a strict comparison of the next heads.
template <class E>
struct LexListEvidence {
  std::size_t equal_heads = 0;
  std::optional<E> head_less;

  friend bool operator==(const LexListEvidence&, const LexListEvidence&) = default;

  /// Position of the deciding comparison.
  std::size_t position() const noexcept { return equal_heads; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < equal_heads; ++i) out += "inr(eq, ";
    out += head_less ? "inl(lt)" : "nil";
    out.append(equal_heads, ')');
    return out;
  }
};

template <class E>
struct HeadEqual {
  Eq eq;
  LexListEvidence<E> tail;
};

/// One layer of the definition.
template <class E>
std::variant<ShorterPrefix, E, HeadEqual<E>> unfold(const LexListEvidence<E>& e) {
  if (e.equal_heads > 0) return HeadEqual<E>{Eq{}, LexListEvidence<E>{e.equal_heads - 1, e.head_less}};
  if (e.head_less) return *e.head_less;
  return ShorterPrefix{};
}

template <class A, class E>
std::optional<LexListEvidence<E>> list_lex_decide(const Relation<A, E>& rel, const std::vector<A>& l2,
                                                  const std::vector<A>& l) {
  for (std::size_t i = 0;; ++i) {
    if (i == l.size()) return std::nullopt;
    if (i == l2.size()) return LexListEvidence<E>{i, std::nullopt};
    if (auto e = rel.decide(l2[i], l[i])) return LexListEvidence<E>{i, std::move(*e)};
    if (!(l2[i] == l[i])) return std::nullopt;
  }
}

/// l' + l'' -> l  gives  l' -> l.
template <class E>
LexListEvidence<E> apls(std::size_t l1_size, const LexListEvidence<E>& e) {
  if (e.equal_heads < l1_size) return e;
  return LexListEvidence<E>{l1_size, std::nullopt};
}

template <class A, class E>
LexListEvidence<E> apls(const std::vector<A>& l1, const std::vector<A>& /*l2*/, const std::vector<A>& /*l*/,
                        const LexListEvidence<E>& e) {
  return apls(l1.size(), e);
}

template <class A, class E>
struct LsapSplit {
  std::vector<A> rest;       // l' = l + rest
  LexListEvidence<E> below;  // rest -> l2
};

/// l' -> l + l2  gives  l' -> l, or l' = l + l1 with l1 -> l2.
template <class A, class E>
std::variant<LexListEvidence<E>, LsapSplit<A, E>> lsap(const std::vector<A>& l2_full, const std::vector<A>& l,
                                                       const LexListEvidence<E>& e) {
  if (e.equal_heads < l.size()) return e;
  if (l2_full.size() < l.size()) throw EvidenceError("lsap: evidence inconsistent with lists");
  LsapSplit<A, E> split;
  split.rest.assign(l2_full.begin() + static_cast<std::ptrdiff_t>(l.size()), l2_full.end());
  split.below = LexListEvidence<E>{e.equal_heads - l.size(), e.head_less};
  return split;
}

template <class A, class E>
std::variant<LexListEvidence<E>, LsapSplit<A, E>> lsap(const std::vector<A>& l2_full, const std::vector<A>& l,
                                                       const std::vector<A>& /*l2*/, const LexListEvidence<E>& e) {
  return lsap(l2_full, l, e);
}

/// D(l1 + [y]) and l1 + [y] -> [x] give y <+ x: the head of l1 + [y] lies
/// below x, and the certificate walks down from the head to y.
template <class A, class E>
ChainEvidence<A, E> endls(const std::vector<A>& l1, const A& y, const A& x, const DescentCertificate<E>& d,
                          const LexListEvidence<E>& e) {
  if (e.equal_heads != 0 || !e.head_less) throw EvidenceError("endls: evidence is not a head comparison");
  if (d.links.size() != l1.size()) throw EvidenceError("endls: certificate does not match l1 + [y]");
  ChainEvidence<A, E> chain;
  chain.nodes.push_back(y);
  for (std::size_t i = l1.size(); i-- > 0;) {
    chain.links.push_back(d.links[i]);
    chain.nodes.push_back(l1[i]);
  }
  chain.links.push_back(*e.head_less);
  chain.nodes.push_back(x);
  return chain;
}

// ---------------------------------------------------------------------------
// The power relation

template <class A, class E>
using PowRelation = Relation<DescendingList<A, E>, LexListEvidence<E>>;

namespace detail {

template <class A, class E>
struct PowRecursion {
  using Z = DescendingList<A, E>;
  using List = std::vector<A>;
  using Cert = DescentCertificate<E>;
  using LL = LexListEvidence<E>;
  using Pow = PowRelation<A, E>;
  using Closure = ClosureRelation<A, E>;

  using QFn = typename Pow::AnyRec;                                 // Q(<l, d>)
  using PFn = std::function<QFn(const Cert&)>;                      // prod d in D(l). Q(<l, d>)
  using QX = std::function<PFn(const List&, const PFn&)>;           // q(x)
  using SFn = std::function<PFn(const LL&)>;                        // s(ih, l, u, d, x, l1)

  Closure closure;
  typename Pow::AnyStep step;

  // s(ih, l, u, d, x, nil) lx          = u
  // s(ih, l, u, d, x, l1 + [y]) lx d'  = ih(y, endls(l1, y, x, snd(descap(l, l1 + [y], d')), lx))
  //                                        (l + l1) (s(ih, l, u, d, x, l1) apls(l1, [y], [x], lx)) d'
  static SFn s(const typename Closure::AnyRec& ih, const List& l, const PFn& u, const A& x, const List& l1) {
    SFn s0 = [u](const LL&) { return u; };
    auto s1 = [ih, l, x](const List& prefix, const A& y, SFn v) -> SFn {
      return [ih, l, x, prefix, y, v](const LL& lx) -> PFn {
        return [ih, l, x, prefix, y, v, lx](const Cert& d2) -> QFn {
          List with_y = snoc(prefix, y);
          Cert d1 = descap(l.size(), with_y.size(), d2).second;
          auto ls = endls(prefix, y, x, d1, lx);
          PFn below = v(apls(prefix.size(), lx));
          QX qy = std::any_cast<QX>(ih(y, ls));
          return qy(append(l, prefix), below)(d2);
        };
      };
    };
    return rlistrec<A>(s0, s1, l1);
  }

  // q(x) l u d <l', d'> lx0 = u fst(descap(l, [x], d)) <l', d'> lx     if lsap(l', l, [x], lx0) = inl(lx)
  //                         = step <l + l1, d'> (s(q', l, u, d, x, l1) lx d')
  //                                                                    if lsap(...) = inr(<l1, <e, lx>>)
  QX q(const A& x) const {
    auto stepc = step;
    typename Closure::AnyStep q1 = [stepc](const A& x1, const typename Closure::AnyRec& ih) -> Value {
      QX out = [stepc, x1, ih](const List& l, const PFn& u) -> PFn {
        return [stepc, x1, ih, l, u](const Cert& d) -> QFn {
          return [stepc, x1, ih, l, u, d](const Z& z2, const LL& lx0) -> Value {
            auto cases = lsap(z2.elements(), l, lx0);
            if (auto* lx = std::get_if<LL>(&cases)) {
              return u(descap(l.size(), 1, d).first)(z2, *lx);
            }
            auto& split = std::get<LsapSplit<A, E>>(cases);
            QFn below = s(ih, l, u, x1, split.rest)(split.below)(z2.certificate());
            return stepc(z2, below);
          };
        };
      };
      return Value(std::move(out));
    };
    return std::any_cast<QX>(closure.wfrec_any(q1, x));
  }

  // p(nil) d z' ls   = contr(ls)
  // p(l + [x])       = q(x) l p(l)
  PFn p(const List& l) const {
    PFn p0 = [](const Cert&) -> QFn {
      return [](const Z&, const LL&) -> Value { throw EvidenceError("power relation: nothing lies below nil"); };
    };
    auto p1 = [this](const List& prefix, const A& x, PFn u) -> PFn { return q(x)(prefix, u); };
    return rlistrec<A>(p0, p1, l);
  }

  // wf <l, d> = step <l, d> (p(l) d)
  Value wf(const Z& z) const { return step(z, p(z.elements())(z.certificate())); }
};

// All descending lists t such that [y] + t is descending, in enumeration order.
template <class A, class E>
void descending_tails(const Relation<A, E>& rel, const A& y, std::vector<A>& prefix,
                      std::vector<std::vector<A>>& out) {
  out.push_back(prefix);
  for (auto& [z, e] : rel.predecessors(y)) {
    prefix.push_back(z);
    descending_tails(rel, z, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// <l', d'> < <l, d> = l' -> l.
template <class A, class E>
PowRelation<A, E> pow_relation(const Relation<A, E>& rel_a) {
  using Z = DescendingList<A, E>;
  using LL = LexListEvidence<E>;
  using R = PowRelation<A, E>;

  typename R::Parts parts;
  parts.name = "pow(" + rel_a.name() + ")";
  parts.decide = [rel_a](const Z& z2, const Z& z) { return list_lex_decide(rel_a, z2.elements(), z.elements()); };
  auto closure = transitive_closure(rel_a);
  parts.recursor = [closure](const typename R::AnyStep& step, const Z& z) -> Value {
    detail::PowRecursion<A, E> machine{closure, step};
    return machine.wf(z);
  };

  if (rel_a.has_predecessors()) {
    // l' -> l: either a proper prefix of l, or agreement up to k, a smaller
    // element at k, then any descending tail.
    parts.predecessors = [rel_a](const Z& z) {
      std::vector<std::pair<Z, LL>> out;
      const auto& l = z.elements();
      for (std::size_t k = 0; k < l.size(); ++k) {
        std::vector<A> prefix(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(k));
        for (auto& [y, e] : rel_a.predecessors(l[k])) {
          if (k > 0 && !rel_a.relates(y, l[k - 1])) continue;
          std::vector<std::vector<A>> tails;
          std::vector<A> scratch;
          detail::descending_tails(rel_a, y, scratch, tails);
          for (const auto& t : tails) {
            std::vector<A> cand = append(snoc(prefix, y), t);
            auto d = is_descending(rel_a, cand);
            if (!d) continue;
            out.emplace_back(Z::trusted(std::move(cand), std::move(*d)), LL{k, e});
          }
        }
      }
      for (std::size_t k = 0; k < l.size(); ++k) {
        std::vector<A> prefix(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(k));
        auto d = is_descending(rel_a, prefix);
        out.emplace_back(Z::trusted(std::move(prefix), std::move(*d)), LL{k, std::nullopt});
      }
      return out;
    };
  }
  if (rel_a.has_carrier()) {
    parts.carrier = [rel_a] {
      std::vector<Z> out;
      out.emplace_back();
      for (const A& x : rel_a.carrier()) {
        std::vector<std::vector<A>> tails;
        std::vector<A> scratch;
        detail::descending_tails(rel_a, x, scratch, tails);
        for (const auto& t : tails) {
          std::vector<A> cand = append(std::vector<A>{x}, t);
          auto d = is_descending(rel_a, cand);
          out.push_back(Z::trusted(std::move(cand), std::move(*d)));
        }
      }
      return out;
    };
  }
  return R(std::move(parts));
}

/// Sum of 2^x over the elements: the binary rank of a descending list of
/// naturals. Throws std::overflow_error beyond 64 bits.
Nat pow_nat_rank(const std::vector<Nat>& l);

}  // namespace wf
