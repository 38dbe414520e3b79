#pragma once

// Finite iterative structures: a carrier {0..size-1} with one distinguished
// element and one unary operation. Everything a pointed mono-unary algebra
// can do at desk scale lives here: induction and homomorphism checkers,
// recursive arithmetic realized by iteration, the good-prime iteration, a
// window check for the recursively defined strict order on naturals, and an
// evaluator for primitive-recursive operation descriptions.
//
// Convention note: the defining equations for +, ·, ^ are one-based (their
// recursion starts at the numeral 1 = succ(init)); the description evaluator
// and the zero-based exponentiation variant start at init. The choice is
// explicit per function, never a global.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vnn/errors.hpp"

namespace vnn {

struct IterStruct {
  std::size_t size = 0;            // carrier {0, ..., size-1}, size >= 1
  std::size_t init = 0;            // distinguished element
  std::vector<std::size_t> succ;   // total: succ[i] < size

  // Throws InvalidShape unless size >= 1, init < size, succ total in range.
  void validate() const;
};

// Z_n: carrier {0..n-1}, init 0, succ = +1 mod n. Requires n >= 1.
IterStruct mk_zn(std::size_t n);

// A path of `tail` elements whose last element lies on a cycle of length
// `cycle`: size = tail + cycle - 1, init 0, succ(i) = i+1, and the last
// element closes the cycle back to element tail-1. tail = 1 degenerates to
// Z_cycle; cycle = 1 is a self-loop at the top. Requires tail, cycle >= 1.
IterStruct mk_lasso(std::size_t tail, std::size_t cycle);

// True iff the closure of {init} under succ is the whole carrier
// (equivalently: no proper subuniverse contains init).
bool admits_induction(const IterStruct& a);

// Every map h with h(init_a) = init_b and h(succ_a(x)) = succ_b(h(x)).
// Propagation from init determines h on the orbit of init; remaining
// elements are searched with forward-propagation backtracking. When `a`
// admits induction the result has 0 or 1 entries.
// Requires size(a)*size(b) <= 10^6 (SizeExceeded).
std::vector<std::vector<std::size_t>> find_homs(const IterStruct& a,
                                                const IterStruct& b);

// True iff exactly one homomorphism a -> t exists for every t in targets.
// A bounded surrogate: genuine recursion admission quantifies over all
// structures, hence the explicit target list in the name.
bool admits_recursion_vs(const IterStruct& a,
                         const std::vector<IterStruct>& targets);

// A unary map defined on part of the carrier.
struct PartialMap {
  std::vector<std::optional<std::size_t>> at;  // one slot per element
  bool total() const;
  bool defined(std::size_t x) const { return x < at.size() && at[x].has_value(); }
};

// Realizations of the one-based recursion equations
//   m+1 = s(m),        m+(x+1) = s(m+x)
//   m*1 = m,           m*(x+1) = m*x + m
//   m^1 = m,           m^(x+1) = m^x * m
// by iterating from the numeral 1 = succ(init) along the carrier. The result
// is absent exactly when the iteration closes a cycle with two different
// values (the equations are unsatisfiable); otherwise the map's domain is
// the orbit of succ(init), truncated where a needed intermediate value falls
// outside an inner map's domain. Requires admits_induction(a) (InvalidShape),
// and m < size(a).
std::optional<PartialMap> rec_add(const IterStruct& a, std::size_t m);
std::optional<PartialMap> rec_mul(const IterStruct& a, std::size_t m);
std::optional<PartialMap> rec_exp(const IterStruct& a, std::size_t m);

// Zero-based exponentiation (m^0 = 1): anchored at init with value
// succ(init). On Z_n with n > 1 this is absent for m = 0, a regression
// guard; the one-based rec_exp is the construction the theorems quantify.
std::optional<PartialMap> rec_exp_henkin(const IterStruct& a, std::size_t m);

// { n <= bound : m^(n+1) ≡ m (mod n) for every m < n }, by fast modular
// exponentiation with early exit. Requires bound <= 10^5 (SizeExceeded).
std::vector<unsigned> exp_valid_set(unsigned bound);

struct GoodPrimesReport {
  // A_1 = {}, then one entry per pass of "adjoin every prime of the form
  // 1 + product(B) for B a subset of the current set", ending with the first
  // repeated stage (the fixed point).
  std::vector<std::vector<unsigned>> stages;
  std::vector<unsigned> fixed_point;
  // Composite candidates examined in the fixed-point pass, each with its
  // prime factorization (multiplicity preserved).
  std::vector<std::pair<unsigned long long, std::vector<unsigned long long>>>
      rejected;
  // Products of prefixes of the fixed point: 1, 2, 6, 42, 1806.
  std::vector<unsigned long long> valid_n;
};
GoodPrimesReport good_primes();

// The pair structure (N x B, (1,0), t) with t(x,y) = (x+1, y or [x = m]):
// iterating t from (1,0) must reproduce x |-> (x, [m < x]) on [1, x_max].
// `step` overrides t to demonstrate failure detection. Requires m >= 2 and
// x_max >= m+2 (InvalidShape).
using SkolemStep = std::function<std::pair<unsigned, bool>(unsigned x, bool y)>;
struct SkolemResult {
  bool ok;
  unsigned witness_x = 0;  // first x where the iterate disagrees (when !ok)
  std::string detail;      // human-readable mismatch description
};
SkolemResult skolem_lt_check(unsigned m, unsigned x_max,
                             const SkolemStep* step = nullptr);

// Primitive-recursive operation descriptions, zero-based:
//   PrimRecNode(base, step) evaluates phi(0, args) = base(args),
//   phi(y+1, args) = step(y, phi(y, args), args); the recursion argument is
//   the first one. Const ignores its context arity; Succ is unary; Proj(i)
//   requires i < context arity. Arity faults raise ArityMismatch at the
//   offending node; results are checked 64-bit (Overflow).
struct PrimRec;
using PrimRecPtr = std::shared_ptr<const PrimRec>;
struct PrimRec {
  enum class Kind { Const, Succ, Proj, Compose, Rec };
  Kind kind;
  std::uint64_t value = 0;         // Const
  std::size_t index = 0;           // Proj
  PrimRecPtr outer;                // Compose
  std::vector<PrimRecPtr> inner;   // Compose
  PrimRecPtr base, step;           // Rec
};
PrimRecPtr pr_const(std::uint64_t c);
PrimRecPtr pr_succ();
PrimRecPtr pr_proj(std::size_t i);
PrimRecPtr pr_compose(PrimRecPtr outer, std::vector<PrimRecPtr> inner);
PrimRecPtr pr_rec(PrimRecPtr base, PrimRecPtr step);
std::uint64_t godel_eval(const PrimRecPtr& d,
                         const std::vector<std::uint64_t>& args);

// For the strict total order listing the carrier ascending (a permutation):
// does x < succ(x) hold everywhere, and do the two theorem clauses hold
// together with that requirement? On a finite nonempty carrier `increasing`
// is always false: the order's maximum cannot sit below its successor.
// Requires size(a) <= 8 (SizeExceeded) and `order` a permutation
// (InvalidShape).
struct OrderConditions {
  bool increasing;                      // x < s(x) for all x
  std::vector<std::size_t> violations;  // every x with not(x < s(x))
  bool holds_a;  // increasing and well-ordered and non-init elements are successors
  bool holds_b;  // increasing and admits induction
};
OrderConditions thm_order_conditions(const IterStruct& a,
                                     const std::vector<std::size_t>& order);

// Every structure with carrier size 1..max_size crossed with every total
// order on its carrier. Requires max_size <= 5 (SizeExceeded).
struct OrderScan {
  std::size_t structures = 0;
  std::size_t pairs = 0;
  bool none_increasing = true;     // no pair satisfies x < s(x) everywhere
  bool max_always_violates = true; // the order maximum always witnesses it
};
OrderScan thm_order_scan(std::size_t max_size);

}  // namespace vnn
