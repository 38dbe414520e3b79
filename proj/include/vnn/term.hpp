#pragma once

// Free term algebra over a finite ranked signature, in prefix (Polish)
// notation.
//
// A signature is an ordered list of (name, arity) pairs; the position of a
// symbol is its index, and its set-theoretic code is the von Neumann natural
// of that index. Terms print as whitespace-separated prefix token strings
// ("s t 0", "+ 0 + 0 0") and parse back by the usual counting argument:
// reading left to right, a term is complete exactly when (#tokens read)
// exceeds (sum of arities read); no proper prefix of a term is a term.
//
// Signature file format: one "name arity" pair per line, '#' comments,
// declaration order assigns indices.
//
// Height ("hgt") of F(t0..t(n-1)) is max over hgt(tk)+1, and 0 for constants.
// pred(t) collects every proper subterm; pred_k(t) is the k-th argument's
// closed predecessor set pred(tk) ∪ {tk} (empty for k >= arity). The strict
// orders lt / lt_k are membership in pred / pred_k.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vnn/errors.hpp"
#include "vnn/hf.hpp"

namespace vnn {

class Signature {
 public:
  // Names must be nonempty, whitespace- and brace-free, pairwise distinct.
  explicit Signature(std::vector<std::pair<std::string, unsigned>> symbols);

  static Signature load(const std::string& path);
  static Signature parse(const std::string& text);

  std::size_t size() const { return syms_.size(); }
  const std::string& name(std::size_t i) const { return syms_[i].first; }
  unsigned arity(std::size_t i) const { return syms_[i].second; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  // Set-theoretic code of symbol i: the von Neumann natural i.
  HfSet code(std::size_t i) const { return nat_to_hf(static_cast<unsigned>(i)); }
  std::optional<std::size_t> symbol_of_code(const HfSet& c) const;

  // Without a nullary symbol the term set is empty; legal, but worth a flag.
  bool has_nullary() const;
  // True when every symbol name is a single character (enables the
  // no-whitespace "compact" round trip).
  bool single_char_names() const;

 private:
  std::vector<std::pair<std::string, unsigned>> syms_;
};

class Term {
 public:
  struct Node {
    unsigned sym;
    std::vector<Term> args;
  };

  Term(unsigned sym, std::vector<Term> args);

  unsigned sym() const { return n_->sym; }
  const std::vector<Term>& args() const { return n_->args; }

  std::size_t token_count() const;
  // Preorder symbol-index sequence; lexicographic comparison on it is a
  // total order on the terms of one signature (unique readability).
  void flatten(std::vector<unsigned>& out) const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator<(const Term& a, const Term& b);

 private:
  std::shared_ptr<const Node> n_;
};

// Checks the symbol exists and the argument count matches its arity.
Term build(const Signature& sig, std::size_t sym, std::vector<Term> args);

// Strict prefix parse: the whole token stream must be consumed.
// Throws UnknownToken / ArityUnderflow / TrailingTokens.
Term parse_term(const Signature& sig, const std::string& text);
std::string print_term(const Signature& sig, const Term& t);

// Single-character signatures only: parse/print without separators.
Term parse_term_compact(const Signature& sig, const std::string& text);
std::string print_term_compact(const Signature& sig, const Term& t);

unsigned hgt(const Term& t);

std::vector<Term> pred(const Term& t);                   // sorted, unique
std::vector<Term> pred_k(const Term& t, unsigned k);     // pred(tk) ∪ {tk}
bool lt(const Term& a, const Term& b);                   // a ∈ pred(b)
bool lt_k(const Term& a, const Term& b, unsigned k);     // a ∈ pred_k(b)

// All terms of height <= max_height, in height-then-lexicographic order
// (lexicographic on the preorder symbol sequence). Caps the count at 10^6.
std::vector<Term> enumerate_terms(const Signature& sig, unsigned max_height);

// An interpretation of the signature in strings; the default is prefix
// concatenation (the term algebra itself, up to printing).
using AlgebraEval =
    std::function<std::string(std::size_t sym, const std::vector<std::string>&)>;

struct ClauseResult {
  std::string clause;
  bool ok;
  std::string witness;  // nonempty iff !ok
};

struct FreenessReport {
  bool ok;
  std::size_t term_count;
  std::vector<ClauseResult> clauses;
  const ClauseResult* find(const std::string& clause) const;
};

// Exercises, over the height-bounded fragment:
//   injective        each operation is injective on fragment tuples
//   disjoint-ranges  values from distinct operations never collide
//   induction        the fragment has no proper subalgebra containing all
//                    its constants and closed under in-fragment application
//   prefix-free      no proper token prefix of a fragment term parses
//   order-i          lt(x,y) iff lt_k(x,y) for some k
//   order-ii         lt(x,y) and lt_k(y,z) imply lt_k(x,z)
//   order-iii        lt is well-founded: hgt strictly decreases into pred
//   order-iv         lt directs each pred_k (pairwise upper bounds inside)
//   order-v          tk is lt-maximal in pred_k(F t0...t(n-1))
// `eval` replaces the default string algebra for the injective and
// disjoint-ranges clauses (used to demonstrate detection of non-free
// interpretations); the remaining clauses concern the terms themselves.
FreenessReport check_free_fragment(const Signature& sig, unsigned max_height,
                                   const AlgebraEval* eval = nullptr);

}  // namespace vnn
