#pragma once

// Graded tuples: a generalized von Neumann construction over a free
// term algebra.
//
// An (n+1)-tuple x = (x_0,…,x_n) is read as a graded set: the last entry
// x_n is its *type* (the code of an n-ary symbol) and x_k collects the
// elements of *grade* k. gel(x) is the union of the grades (the type is
// not an element), and y ∈′ x means y ∈ gel(x). Interpreting each n-ary
// symbol F as
//
//   F^V(x_0,…,x_{n-1}) = (gel(x_0) ∪ {x_0}, …, gel(x_{n-1}) ∪ {x_{n-1}}, code F)
//
// turns the whole HF universe into an algebra for the signature. For {1,s}
// the image of sⁿ(1) is the graded counterpart of the von Neumann numeral
// n; H_map builds that chain directly.
//
// in_DS / in_ONS / in_VNNS are the graded analogues of "hereditarily
// well-typed transitive set" / "ordinal" / "numeral": D_S asks for the
// tuple shape and grade-wise transitivity, hereditarily; ON_S adds that
// ∈′ directs every grade and is well-founded on gel(x); VNN_S removes
// limits (grades with no ∈′-maximal element). At HF scale all sets are
// finite, so well-foundedness is checked as acyclicity and limits never
// occur inside ON_S — but both checks are performed, not assumed.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vnn/hf.hpp"
#include "vnn/term.hpp"

namespace vnn {

struct GradedView {
  std::vector<HfSet> grades;  // x_0 … x_{n-1}
  HfSet type_code;            // x_n
};

// Decodes x as an (n+1)-tuple; absent if x is not a tuple.
std::optional<GradedView> graded_view(const HfSet& x);

// Union of the grades of x; {} if x is not a tuple (a 1-tuple has no
// grades, so its gel is {} too).
HfSet gel(const HfSet& x);

// y ∈_k x: x is an (n+1)-tuple, k < n, and y ∈ x_k.
bool in_k(const HfSet& y, const HfSet& x, unsigned k);
// y ∈′ x: y ∈ gel(x).
bool in_prime(const HfSet& y, const HfSet& x);
// The set {y : y ∈_k x}, i.e. x_k for k < n and {} otherwise.
HfSet pred_k_tuple(const HfSet& x, unsigned k);

// F^V applied to |args| = arity(f) values (see the display above).
// Throws ArityMismatch on an arity or symbol-index violation.
HfSet fV_apply(const Signature& sig, std::size_t f, const std::vector<HfSet>& args);

// Every y of grade k satisfies gel(y) ⊆ pred_k(x). Vacuously true when
// x is not a tuple or k is out of range.
bool is_k_transitive(const HfSet& x, unsigned k);

// x is a tuple typed by an n-ary symbol with all n grades nonempty, every
// graded element has that shape too, and both x and its graded elements
// are k-transitive for every grade k.
bool in_DS(const Signature& sig, const HfSet& x);

// in_DS plus: ∈′ directs each grade of x and of each graded element
// (every pair has an upper bound inside the grade, where u bounds y iff
// y = u or y ∈′ u), and ∈′ is acyclic on gel(x).
// Throws SizeExceeded when |transitive closure of x| > 10^4.
bool in_ONS(const Signature& sig, const HfSet& x);

// Some grade of x has no ∈′-maximal element. Throws NotATuple when x
// does not decode as a tuple. (The signature argument is part of the
// class-membership interface; the definition itself never consults it.)
bool is_limit_gen(const Signature& sig, const HfSet& x);

// in_ONS, x is not a limit, and no graded element of x is a limit.
bool in_VNNS(const Signature& sig, const HfSet& x);

// The homomorphic image of a term: fold fV_apply over the term tree.
HfSet term_to_V(const Signature& sig, const Term& t);

// The {1,s}-chain: H(0) = (code 1) and H(n) = ({H(0),…,H(n-1)}, code s),
// where code 1 = {} and code s = {{}} (symbol order of the {1,s}
// signature file). Satisfies H(n+1) = s^V(H(n)) and
// gel(H(n)) = {H(m) : m < n}. Throws SizeExceeded for n > 30.
HfSet H_map(unsigned n);

// Membership ladder for one value, with the first requirement that fails:
// "shape", "member-shape", "transitive", "member-transitive", "directed",
// "member-directed", "well-founded", "non-limit", "member-non-limit" —
// empty when the value is in VNN_S. Throws SizeExceeded like in_ONS.
struct Classification {
  bool in_ds = false;
  bool in_ons = false;
  bool in_vnns = false;
  std::string failed_clause;
};
Classification classify(const Signature& sig, const HfSet& x);

// For signatures with only nullary and unary symbols, gel(x) of every
// ON_S member is strictly totally ordered by ∈′ (irreflexive, exactly one
// of y ∈′ z / z ∈′ y for distinct elements, transitive). Pool members
// that are not in ON_S are reported separately: they miss the
// precondition, the claim is never evaluated on them.
// Throws InvalidShape if the signature has a symbol of arity ≥ 2.
struct TreesReport {
  bool ok = true;                           // the order claim, over `checked`
  std::size_t checked = 0;                  // pool members that met the precondition
  std::vector<std::string> precondition;    // members rejected before the claim ran
  std::vector<std::string> witnesses;       // order violations
};
TreesReport check_trees_claim(const Signature& sig, const std::vector<HfSet>& pool);

// Closes the pool under "graded element of", checks the ∈′ digraph on the
// closure for cycles, and checks gel(x) ⊆ ⋃⋃⋃x for each pool member.
// Whether the two-fold union ⋃⋃x already contains gel(x) is counted but
// not required (it holds only in degenerate cases).
struct InPrimeGlobalReport {
  bool ok = true;                     // acyclic and every triple-union containment holds
  std::size_t nodes = 0;              // size of the ∈′-closure explored
  std::size_t double_union_holds = 0; // pool members with gel(x) ⊆ ⋃⋃x
  std::vector<std::string> witnesses;
};
InPrimeGlobalReport check_in_prime_global(const std::vector<HfSet>& pool);

}  // namespace vnn
