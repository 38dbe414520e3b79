#include "vnn/cli_ops.hpp"

#include <cctype>
#include <sstream>

#include "vnn/errors.hpp"
#include "vnn/graded.hpp"
#include "vnn/iterative.hpp"
#include "vnn/ordinals.hpp"
#include "vnn/term.hpp"

namespace vnn {

namespace {

// Recursive-descent reader for the hf expression grammar. Tracks offsets
// so errors point into the original string.
struct HfExprParser {
  const std::string& s;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, i); }
  void expect(char c) {
    ws();
    if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }

  unsigned number() {
    ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("expected a number");
    unsigned long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<unsigned long>(s[i] - '0');
      if (v > 1000000) fail("number too large");
      ++i;
    }
    return static_cast<unsigned>(v);
  }

  HfSet expr() {
    ws();
    if (i >= s.size()) fail("expected a set expression");
    if (s[i] == '{') return brace();
    std::size_t start = i;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    std::string name = s.substr(start, i - start);
    if (name.empty()) fail("expected '{' or a builder name");
    if (name == "ord") {
      expect('(');
      unsigned n = number();
      if (n > 1000) {
        i = start;
        fail("ord is capped at 1000");
      }
      expect(')');
      return nat_to_hf(n);
    }
    if (name == "kpair") {
      expect('(');
      HfSet a = expr();
      expect(',');
      HfSet b = expr();
      expect(')');
      return kpair(a, b);
    }
    if (name == "succ" || name == "pow" || name == "union") {
      expect('(');
      HfSet a = expr();
      expect(')');
      if (name == "succ") return succ_vn(a);
      if (name == "pow") return powerset(a);
      return big_union(a);
    }
    i = start;
    fail("unknown builder '" + name + "'");
  }

  HfSet brace() {
    expect('{');
    ws();
    std::vector<HfSet> elems;
    if (i < s.size() && s[i] == '}') {
      ++i;
      return mk_set(std::move(elems));
    }
    while (true) {
      elems.push_back(expr());
      ws();
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    expect('}');
    return mk_set(std::move(elems));
  }
};

Signature load_sig(const std::string& sigfile) { return Signature::load(sigfile); }

}  // namespace

HfSet eval_hf_expr(const std::string& expr) {
  HfExprParser p{expr};
  HfSet v = p.expr();
  p.ws();
  if (p.i != expr.size()) throw TrailingTokens("trailing input", p.i);
  if (v.rank() > 1000)
    throw SizeExceeded("hf expression result exceeds rank 1000");
  return v;
}

std::string cmd_hf(const std::string& expr) {
  HfSet v = eval_hf_expr(expr);
  return print_hf(v) + "  rank=" + std::to_string(v.rank()) +
         "  ordinal=" + (is_ordinal(v) ? "yes" : "no");
}

std::string cmd_term(const std::string& sigfile, const std::string& text,
                     bool compact) {
  Signature sig = load_sig(sigfile);
  Term t = compact ? parse_term_compact(sig, text) : parse_term(sig, text);
  std::ostringstream os;
  os << "term: " << (compact ? print_term_compact(sig, t) : print_term(sig, t))
     << "\nheight: " << hgt(t) << "\ntokens: " << t.token_count()
     << "\nimage: " << print_hf(term_to_V(sig, t));
  return os.str();
}

std::string cmd_vnn_build(const std::string& sigfile, const std::string& text) {
  Signature sig = load_sig(sigfile);
  return print_hf(term_to_V(sig, parse_term(sig, text)));
}

std::string cmd_vnn_classify(const std::string& sigfile, const std::string& set_text) {
  Signature sig = load_sig(sigfile);
  HfSet x = eval_hf_expr(set_text);
  Classification c = classify(sig, x);
  std::ostringstream os;
  os << "D_S: " << (c.in_ds ? "yes" : "no") << "\nON_S: " << (c.in_ons ? "yes" : "no")
     << "\nVNN_S: " << (c.in_vnns ? "yes" : "no");
  if (!c.failed_clause.empty()) os << "\nfirst failed clause: " << c.failed_clause;
  return os.str();
}

std::string cmd_goodprimes() {
  GoodPrimesReport r = good_primes();
  std::ostringstream os;
  for (std::size_t i = 0; i < r.stages.size(); ++i) {
    os << "A" << (i + 1) << " = {";
    for (std::size_t j = 0; j < r.stages[i].size(); ++j)
      os << (j ? "," : "") << r.stages[i][j];
    os << "}\n";
  }
  os << "fixed point: {";
  for (std::size_t j = 0; j < r.fixed_point.size(); ++j)
    os << (j ? "," : "") << r.fixed_point[j];
  os << "}\n";
  for (const auto& [n, fs] : r.rejected) {
    os << "rejected " << n << " = ";
    for (std::size_t j = 0; j < fs.size(); ++j) os << (j ? "*" : "") << fs[j];
    os << "\n";
  }
  os << "valid n: {";
  for (std::size_t j = 0; j < r.valid_n.size(); ++j)
    os << (j ? "," : "") << r.valid_n[j];
  os << "}";
  return os.str();
}

std::string cmd_expset(unsigned bound) {
  std::vector<unsigned> s = exp_valid_set(bound);
  std::ostringstream os;
  os << "{";
  for (std::size_t j = 0; j < s.size(); ++j) os << (j ? "," : "") << s[j];
  os << "}";
  return os.str();
}

std::string cmd_homcount(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw InvalidShape("homcount: n and m must be positive");
  auto hs = find_homs(mk_zn(n), mk_zn(m));
  std::ostringstream os;
  os << "homs(Z_" << n << " -> Z_" << m << "): " << hs.size();
  for (const auto& h : hs) {
    os << "\n  [";
    for (std::size_t j = 0; j < h.size(); ++j) os << (j ? "," : "") << h[j];
    os << "]";
  }
  return os.str();
}

}  // namespace vnn
