#pragma once

// Ordinal and numeral predicates over hereditarily finite sets.
//
// is_ordinal evaluates two classically equivalent definitions — "transitive
// set of transitive sets" and "transitive and totally ordered by membership"
// — and insists they agree. Zermelo-numeral classes:
//   Zm   every element is {} or the singleton of an element,
//   Zm'  Zm plus: every nonempty subset s has an element disjoint from s,
//   class C (is_sis_wo_member): every element is {} or a singleton of an
//   element, and the set carries a well-ordering that puts x before {x}.
// At this scale all three carve out exactly the downward-closed singleton
// chains {}, {{}}, {{{}}}, ...

#include <optional>
#include <vector>

#include "vnn/hf.hpp"

namespace vnn {

bool is_transitive(const HfSet& x);

// Throws std::logic_error if the two definitions ever disagree.
bool is_ordinal(const HfSet& x);

// A validated finite von Neumann ordinal together with its numeric value.
class Ord {
 public:
  static Ord from_nat(unsigned n);
  static std::optional<Ord> from_set(const HfSet& x);  // absent if not an ordinal
  const HfSet& value() const { return value_; }
  unsigned nat() const { return n_; }
 private:
  Ord(HfSet v, unsigned n) : value_(std::move(v)), n_(n) {}
  HfSet value_;
  unsigned n_;
};

inline HfSet ord(unsigned n) { return nat_to_hf(n); }

// Throws NotAnOrdinal if x is not a von Neumann natural.
unsigned ord_to_nat(const HfSet& x);

// Throws NotAnOrdinal unless is_ordinal(x). Always false at finite scale:
// every nonzero finite ordinal is the successor of its largest element.
bool is_limit_ord(const HfSet& x);

bool is_zm(const HfSet& x);

// Zm plus the subset-disjointness condition; the subset scan is capped at
// |x| <= 20 (only reached when x already passes the Zm shape check).
bool is_zm_prime(const HfSet& x);

// Union of the element-sets of every Zm' member of rank <= rank_bound
// (rank_bound <= 5). Only sets whose elements are all {} or singletons are
// enumerated — a necessary condition for Zm — which keeps the rank-5 case
// finite without changing the result.
HfSet zm_prime_union(unsigned rank_bound);

// Membership in the class ordered by "x before {x}": the shape clause first;
// when it holds, searches for a linear order compatible with every
// (y, {y}) constraint. The search is capped at |x| <= 8.
bool is_sis_wo_member(const HfSet& x);

// Whitehead/Russell-style finiteness: every collection of subsets of x that
// contains {} and is closed under adjoining any single element of x must
// contain x itself. Exhaustive over collections, so |x| <= 3.
bool is_wr_finite(const HfSet& x);

}  // namespace vnn
