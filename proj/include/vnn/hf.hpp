#pragma once

// Hereditarily finite sets with a canonical interned representation.
//
// Every set is stored exactly once: element vectors are sorted (by
// canonical_cmp) and deduplicated before interning, so extensional equality
// is pointer equality and all structural sharing is observationally
// invisible. Nodes are immutable; the intern table is mutex-guarded, so
// values can be built and shared across threads freely.
//
// Text format (bit-exact): braces, comma separator, no whitespace, elements
// in canonical order. E.g. ord(2) prints as {{},{{}}}.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vnn/errors.hpp"

namespace vnn {

class HfSet {
 public:
  struct Node {
    std::vector<HfSet> kids;  // canonical order, no duplicates
    unsigned rank;
    std::size_t hash;
  };

  HfSet();  // the empty set

  const std::vector<HfSet>& elements() const { return n_->kids; }
  std::size_t size() const { return n_->kids.size(); }
  bool empty() const { return n_->kids.empty(); }
  unsigned rank() const { return n_->rank; }
  std::size_t hash() const { return n_->hash; }
  const Node* node() const { return n_; }

  // Membership test (binary search over the canonical element order).
  bool contains(const HfSet& e) const;

  friend bool operator==(const HfSet& a, const HfSet& b) { return a.n_ == b.n_; }

 private:
  explicit HfSet(const Node* n) : n_(n) {}
  const Node* n_;
  friend HfSet mk_set(std::vector<HfSet>);
};

// Total order: by rank first, then lexicographically on the canonical
// element sequences (a proper prefix sorts first).
std::strong_ordering canonical_cmp(const HfSet& a, const HfSet& b);

inline bool operator<(const HfSet& a, const HfSet& b) {
  return canonical_cmp(a, b) < 0;
}

// Builds the set {elems...}; duplicates collapse, order is irrelevant.
HfSet mk_set(std::vector<HfSet> elems);

// x ∈ y
inline bool mem(const HfSet& x, const HfSet& y) { return y.contains(x); }

inline bool subset_of(const HfSet& x, const HfSet& y) {
  for (const auto& e : x.elements())
    if (!y.contains(e)) return false;
  return true;
}

HfSet singleton(const HfSet& x);
HfSet union2(const HfSet& x, const HfSet& y);
HfSet big_union(const HfSet& x);                 // ⋃x
HfSet intersect2(const HfSet& x, const HfSet& y);
HfSet set_minus(const HfSet& x, const HfSet& y);

// Powerset; |x| must be <= 16 (the result has 2^|x| elements).
HfSet powerset(const HfSet& x);

// {e ∈ x : keep(e)}
HfSet separation(const HfSet& x, const std::function<bool(const HfSet&)>& keep);

// Ordered pair {{x},{x,y}}; the degenerate (x,x) collapses to {{x}}.
HfSet kpair(const HfSet& x, const HfSet& y);
std::optional<std::pair<HfSet, HfSet>> kpair_decode(const HfSet& p);

// The historical variant {{{x},∅},{{y}}}.
HfSet wiener_pair(const HfSet& x, const HfSet& y);

// n-tuple (n >= 1) as the set of index-tagged pairs {(0,x0),...,(n-1,x(n-1))}
// with indices encoded as von Neumann naturals. Decoding is strict: every
// element must be a pair, the first components must be naturals covering
// 0..n-1 exactly once.
HfSet tuple_encode(const std::vector<HfSet>& xs);
std::optional<std::vector<HfSet>> tuple_decode(const HfSet& t);

HfSet succ_vn(const HfSet& x);       // x ∪ {x}
HfSet zermelo_succ(const HfSet& x);  // {x}

// Von Neumann natural n as an HfSet, and its strict inverse.
HfSet nat_to_hf(unsigned n);
std::optional<unsigned> hf_to_nat(const HfSet& x);

std::string print_hf(const HfSet& x);
// Number of characters print_hf would emit, capped at `cap` + 1.
std::size_t print_size(const HfSet& x, std::size_t cap);
// Inverse of print_hf, tolerant of nothing: strict braces/commas only.
HfSet parse_hf(const std::string& s);

// Elements of the cumulative stage R(n): R(0) = {}, R(n+1) = powerset(R(n)).
// |R(5)| = 65536 is the largest supported level.
std::vector<HfSet> r_level(unsigned n);

}  // namespace vnn

template <>
struct std::hash<vnn::HfSet> {
  std::size_t operator()(const vnn::HfSet& s) const noexcept { return s.hash(); }
};
