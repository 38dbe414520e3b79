#pragma once

// The CLI's command bodies, kept in the library so they stay unit-testable;
// the binary only parses flags and prints what these return.

#include <cstddef>
#include <string>

#include "vnn/hf.hpp"

namespace vnn {

// Evaluates the hf expression grammar: brace notation (whitespace allowed
// between tokens) plus the builders ord(n), kpair(e1,e2), succ(e), pow(e),
// union(e). ord is capped at 1000 (SizeExceeded beyond).
HfSet eval_hf_expr(const std::string& expr);

// "<canonical form>  rank=N  ordinal=yes|no"
std::string cmd_hf(const std::string& expr);

// Multi-line: the parsed term, its height, token count, and algebra image.
std::string cmd_term(const std::string& sigfile, const std::string& text,
                     bool compact = false);

// The brace form of the term's image under F^V.
std::string cmd_vnn_build(const std::string& sigfile, const std::string& text);

// D_S / ON_S / VNN_S membership plus the first failed clause, one per line.
// `set_text` accepts the same expression grammar as cmd_hf.
std::string cmd_vnn_classify(const std::string& sigfile, const std::string& set_text);

// The stage-by-stage prime hunt with its rejections and prefix products.
std::string cmd_goodprimes();

// "{1,2,6,42,1806}"-style listing of the exponent-identity moduli.
std::string cmd_expset(unsigned bound);

// Counts (and lists) the pointed successor-structure maps Z_n -> Z_m.
std::string cmd_homcount(std::size_t n, std::size_t m);

}  // namespace vnn
