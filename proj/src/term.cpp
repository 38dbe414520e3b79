#include "vnn/term.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace vnn {

Signature::Signature(std::vector<std::pair<std::string, unsigned>> symbols)
    : syms_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const auto& [name, arity] : syms_) {
    (void)arity;
    if (name.empty()) throw InvalidShape("signature: empty symbol name");
    for (char c : name)
      if (std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}')
        throw InvalidShape("signature: name '" + name + "' contains whitespace/brace");
    if (!seen.insert(name).second)
      throw InvalidShape("signature: duplicate symbol '" + name + "'");
  }
}

Signature Signature::parse(const std::string& text) {
  std::vector<std::pair<std::string, unsigned>> syms;
  std::stringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::stringstream ss(line);
    std::string name;
    if (!(ss >> name)) continue;  // blank
    long arity = -1;
    if (!(ss >> arity) || arity < 0)
      throw ParseError("signature line " + std::to_string(lineno) +
                           ": expected 'name arity'",
                       lineno);
    std::string extra;
    if (ss >> extra)
      throw ParseError("signature line " + std::to_string(lineno) +
                           ": trailing '" + extra + "'",
                       lineno);
    syms.emplace_back(name, static_cast<unsigned>(arity));
  }
  return Signature(std::move(syms));
}

Signature Signature::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open signature file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::optional<std::size_t> Signature::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < syms_.size(); ++i)
    if (syms_[i].first == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Signature::symbol_of_code(const HfSet& c) const {
  auto n = hf_to_nat(c);
  if (!n || *n >= syms_.size()) return std::nullopt;
  return static_cast<std::size_t>(*n);
}

bool Signature::has_nullary() const {
  for (const auto& [name, arity] : syms_) {
    (void)name;
    if (arity == 0) return true;
  }
  return false;
}

bool Signature::single_char_names() const {
  for (const auto& [name, arity] : syms_) {
    (void)arity;
    if (name.size() != 1) return false;
  }
  return true;
}

Term::Term(unsigned sym, std::vector<Term> args)
    : n_(std::make_shared<Node>(Node{sym, std::move(args)})) {}

std::size_t Term::token_count() const {
  std::size_t total = 1;
  for (const auto& a : args()) total += a.token_count();
  return total;
}

void Term::flatten(std::vector<unsigned>& out) const {
  out.push_back(sym());
  for (const auto& a : args()) a.flatten(out);
}

bool operator==(const Term& a, const Term& b) {
  if (a.n_ == b.n_) return true;
  if (a.sym() != b.sym()) return false;
  if (a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!(a.args()[i] == b.args()[i])) return false;
  return true;
}

bool operator<(const Term& a, const Term& b) {
  std::vector<unsigned> fa, fb;
  a.flatten(fa);
  b.flatten(fb);
  return fa < fb;
}

Term build(const Signature& sig, std::size_t sym, std::vector<Term> args) {
  if (sym >= sig.size())
    throw ArityMismatch("build: symbol index " + std::to_string(sym) +
                        " out of range");
  if (args.size() != sig.arity(sym))
    throw ArityMismatch("build: '" + sig.name(sym) + "' expects " +
                        std::to_string(sig.arity(sym)) + " arguments, got " +
                        std::to_string(args.size()));
  return Term(static_cast<unsigned>(sym), std::move(args));
}

namespace {

struct Token {
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    out.push_back({text.substr(start, i - start), start});
  }
  return out;
}

Term parse_tokens(const Signature& sig, const std::vector<Token>& toks,
                  std::size_t end_offset) {
  // Iterative prefix build: a stack of (symbol, collected args, wanted).
  struct Frame {
    std::size_t sym;
    std::vector<Term> args;
    unsigned wanted;
  };
  std::vector<Frame> stack;
  std::optional<Term> done;
  for (std::size_t ti = 0; ti < toks.size(); ++ti) {
    if (done)
      throw TrailingTokens("parse_term: complete term before token '" +
                               toks[ti].text + "' at offset " +
                               std::to_string(toks[ti].offset),
                           toks[ti].offset);
    auto ix = sig.index_of(toks[ti].text);
    if (!ix)
      throw UnknownToken("parse_term: unknown token '" + toks[ti].text +
                             "' at offset " + std::to_string(toks[ti].offset),
                         toks[ti].offset, ti);
    Term cur(static_cast<unsigned>(*ix), {});
    if (sig.arity(*ix) > 0) {
      stack.push_back({*ix, {}, sig.arity(*ix)});
      continue;
    }
    // fold completed frames upward
    while (true) {
      if (stack.empty()) {
        done = cur;
        break;
      }
      stack.back().args.push_back(cur);
      if (stack.back().args.size() < stack.back().wanted) break;
      Frame f = std::move(stack.back());
      stack.pop_back();
      cur = Term(static_cast<unsigned>(f.sym), std::move(f.args));
    }
  }
  if (!done)
    throw ArityUnderflow("parse_term: input ended mid-term at offset " +
                             std::to_string(end_offset),
                         end_offset);
  return *done;
}

}  // namespace

Term parse_term(const Signature& sig, const std::string& text) {
  auto toks = tokenize(text);
  return parse_tokens(sig, toks, text.size());
}

std::string print_term(const Signature& sig, const Term& t) {
  std::vector<unsigned> flat;
  t.flatten(flat);
  std::string out;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (i) out += ' ';
    out += sig.name(flat[i]);
  }
  return out;
}

Term parse_term_compact(const Signature& sig, const std::string& text) {
  if (!sig.single_char_names())
    throw InvalidShape("compact mode requires single-character symbol names");
  std::vector<Token> toks;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    toks.push_back({std::string(1, text[i]), i});
  }
  return parse_tokens(sig, toks, text.size());
}

std::string print_term_compact(const Signature& sig, const Term& t) {
  if (!sig.single_char_names())
    throw InvalidShape("compact mode requires single-character symbol names");
  std::vector<unsigned> flat;
  t.flatten(flat);
  std::string out;
  for (unsigned s : flat) out += sig.name(s);
  return out;
}

unsigned hgt(const Term& t) {
  unsigned h = 0;
  for (const auto& a : t.args()) h = std::max(h, hgt(a) + 1);
  return h;
}

std::vector<Term> pred(const Term& t) {
  std::set<std::vector<unsigned>> seen;
  std::vector<Term> out;
  std::function<void(const Term&)> add = [&](const Term& u) {
    std::vector<unsigned> key;
    u.flatten(key);
    if (seen.insert(key).second) out.push_back(u);
  };
  std::function<void(const Term&)> walk = [&](const Term& u) {
    for (const auto& a : u.args()) {
      add(a);
      walk(a);
    }
  };
  walk(t);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Term> pred_k(const Term& t, unsigned k) {
  if (k >= t.args().size()) return {};
  const Term& tk = t.args()[k];
  std::vector<Term> out = pred(tk);
  out.push_back(tk);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Term& a, const Term& b) { return a == b; }),
            out.end());
  return out;
}

namespace {
bool contains_term(const std::vector<Term>& v, const Term& t) {
  for (const auto& u : v)
    if (u == t) return true;
  return false;
}
}  // namespace

bool lt(const Term& a, const Term& b) { return contains_term(pred(b), a); }

bool lt_k(const Term& a, const Term& b, unsigned k) {
  return contains_term(pred_k(b, k), a);
}

std::vector<Term> enumerate_terms(const Signature& sig, unsigned max_height) {
  constexpr std::size_t kCap = 1000000;
  // levels[h] = terms of height exactly h
  std::vector<std::vector<Term>> levels;
  std::size_t total = 0;
  for (unsigned h = 0; h <= max_height; ++h) {
    std::vector<Term> level;
    if (h == 0) {
      for (std::size_t i = 0; i < sig.size(); ++i)
        if (sig.arity(i) == 0) {
          level.emplace_back(static_cast<unsigned>(i), std::vector<Term>{});
          ++total;
        }
    } else {
      // choose argument tuples from heights < h with max exactly h-1
      std::vector<Term> below;     // height <= h-2
      std::vector<Term> at_top;    // height == h-1
      for (unsigned g = 0; g + 2 <= h; ++g)
        below.insert(below.end(), levels[g].begin(), levels[g].end());
      at_top = levels[h - 1];
      std::vector<Term> pool = below;
      pool.insert(pool.end(), at_top.begin(), at_top.end());
      for (std::size_t i = 0; i < sig.size(); ++i) {
        unsigned n = sig.arity(i);
        if (n == 0 || pool.empty() || at_top.empty()) continue;
        // all pool^n tuples with at least one entry of height h-1
        std::vector<std::size_t> idx(n, 0);
        while (true) {
          bool tops = false;
          for (unsigned k = 0; k < n; ++k)
            if (idx[k] >= below.size()) tops = true;
          if (tops) {
            std::vector<Term> args;
            args.reserve(n);
            for (unsigned k = 0; k < n; ++k) args.push_back(pool[idx[k]]);
            level.emplace_back(static_cast<unsigned>(i), std::move(args));
            if (++total > kCap)
              throw SizeExceeded("enumerate_terms: more than 10^6 terms");
          }
          // odometer
          unsigned k = 0;
          for (; k < n; ++k) {
            if (++idx[k] < pool.size()) break;
            idx[k] = 0;
          }
          if (k == n) break;
        }
      }
    }
    levels.push_back(std::move(level));
  }
  std::vector<Term> out;
  for (auto& level : levels) {
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

const ClauseResult* FreenessReport::find(const std::string& clause) const {
  for (const auto& c : clauses)
    if (c.clause == clause) return &c;
  return nullptr;
}

FreenessReport check_free_fragment(const Signature& sig, unsigned max_height,
                                   const AlgebraEval* eval) {
  AlgebraEval dflt = [&sig](std::size_t sym, const std::vector<std::string>& vs) {
    std::string out = sig.name(sym);
    for (const auto& v : vs) out += " " + v;
    return out;
  };
  const AlgebraEval& ev = eval ? *eval : dflt;

  std::vector<Term> frag = enumerate_terms(sig, max_height);
  FreenessReport rep;
  rep.term_count = frag.size();
  auto clause = [&rep](std::string name, bool ok, std::string witness) {
    rep.clauses.push_back({std::move(name), ok, ok ? "" : std::move(witness)});
  };

  // value of each fragment term under ev
  std::map<std::vector<unsigned>, std::string> val;
  std::function<const std::string&(const Term&)> value = [&](const Term& t)
      -> const std::string& {
    std::vector<unsigned> key;
    t.flatten(key);
    auto it = val.find(key);
    if (it != val.end()) return it->second;
    std::vector<std::string> argv;
    for (const auto& a : t.args()) argv.push_back(value(a));
    return val.emplace(std::move(key), ev(t.sym(), argv)).first->second;
  };

  // --- injectivity & disjoint ranges, over every application with fragment
  // arguments (results may exceed the height bound; they are still values).
  {
    bool inj_ok = true, dis_ok = true;
    std::string inj_wit, dis_wit;
    // app value -> (sym, printed args)
    std::map<std::string, std::pair<std::size_t, std::string>> seen;
    auto args_desc = [&](const std::vector<Term>& args) {
      std::string d = "(";
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) d += ", ";
        d += print_term(sig, args[i]);
      }
      return d + ")";
    };
    std::vector<std::vector<Term>> tuples;
    for (std::size_t s = 0; s < sig.size(); ++s) {
      unsigned n = sig.arity(s);
      tuples.assign(1, {});
      for (unsigned k = 0; k < n; ++k) {
        std::vector<std::vector<Term>> grown;
        for (const auto& tp : tuples)
          for (const auto& cand : frag) {
            auto cp = tp;
            cp.push_back(cand);
            grown.push_back(std::move(cp));
          }
        tuples = std::move(grown);
      }
      for (const auto& tp : tuples) {
        std::vector<std::string> argv;
        for (const auto& a : tp) argv.push_back(value(a));
        std::string v = ev(s, argv);
        auto it = seen.find(v);
        if (it == seen.end()) {
          seen.emplace(v, std::make_pair(s, args_desc(tp)));
        } else if (it->second.first != s) {
          if (dis_ok) {
            dis_ok = false;
            dis_wit = "'" + sig.name(it->second.first) + "'" +
                      it->second.second + " and '" + sig.name(s) + "'" +
                      args_desc(tp) + " share the value \"" + v + "\"";
          }
        } else if (it->second.second != args_desc(tp)) {
          if (inj_ok) {
            inj_ok = false;
            inj_wit = "'" + sig.name(s) + "' maps " + it->second.second +
                      " and " + args_desc(tp) + " to the same value \"" + v + "\"";
          }
        }
      }
    }
    clause("injective", inj_ok, inj_wit);
    clause("disjoint-ranges", dis_ok, dis_wit);
  }

  // --- induction: generate from constants by in-fragment application; the
  // closure must be the whole fragment.
  {
    std::set<std::vector<unsigned>> closure;
    std::set<std::vector<unsigned>> fragset;
    for (const auto& t : frag) {
      std::vector<unsigned> k;
      t.flatten(k);
      fragset.insert(std::move(k));
    }
    std::vector<Term> work;
    for (const auto& t : frag)
      if (t.args().empty()) {
        std::vector<unsigned> k;
        t.flatten(k);
        if (closure.insert(k).second) work.push_back(t);
      }
    std::vector<Term> known = work;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t s = 0; s < sig.size(); ++s) {
        unsigned n = sig.arity(s);
        if (n == 0) continue;
        // tuples over `known`
        std::vector<std::size_t> idx(n, 0);
        if (known.empty()) break;
        while (true) {
          std::vector<Term> args;
          for (unsigned k = 0; k < n; ++k) args.push_back(known[idx[k]]);
          Term t(static_cast<unsigned>(s), std::move(args));
          std::vector<unsigned> key;
          t.flatten(key);
          if (fragset.count(key) && !closure.count(key)) {
            closure.insert(key);
            known.push_back(t);
            grew = true;
          }
          unsigned k = 0;
          for (; k < n; ++k) {
            if (++idx[k] < known.size()) break;
            idx[k] = 0;
          }
          if (k == n) break;
        }
      }
    }
    bool ok = closure.size() == fragset.size();
    std::string wit;
    if (!ok)
      for (const auto& t : frag) {
        std::vector<unsigned> k;
        t.flatten(k);
        if (!closure.count(k)) {
          wit = "fragment term '" + print_term(sig, t) + "' is not generated";
          break;
        }
      }
    clause("induction", ok, wit);
  }

  // --- prefix-freeness of the printed token sequences
  {
    bool ok = true;
    std::string wit;
    for (const auto& t : frag) {
      std::vector<unsigned> flat;
      t.flatten(flat);
      for (std::size_t cut = 1; cut < flat.size() && ok; ++cut) {
        std::string prefix;
        for (std::size_t i = 0; i < cut; ++i) {
          if (i) prefix += ' ';
          prefix += sig.name(flat[i]);
        }
        try {
          parse_term(sig, prefix);
          ok = false;
          wit = "proper prefix \"" + prefix + "\" of '" + print_term(sig, t) +
                "' parses as a term";
        } catch (const ParseError&) {
          // expected
        }
      }
      if (!ok) break;
    }
    clause("prefix-free", ok, wit);
  }

  // --- the five order clauses
  {
    // precompute pred sets
    std::vector<std::vector<Term>> preds;
    preds.reserve(frag.size());
    for (const auto& t : frag) preds.push_back(pred(t));
    auto in = [](const std::vector<Term>& v, const Term& x) {
      for (const auto& u : v)
        if (u == x) return true;
      return false;
    };

    bool ok_i = true, ok_ii = true, ok_iii = true, ok_iv = true, ok_v = true;
    std::string w_i, w_ii, w_iii, w_iv, w_v;

    for (std::size_t yi = 0; yi < frag.size(); ++yi) {
      const Term& y = frag[yi];
      unsigned n = static_cast<unsigned>(y.args().size());
      // (i): pred(y) = ⋃_k pred_k(y)
      std::vector<Term> unioned;
      for (unsigned k = 0; k < n; ++k) {
        auto pk = pred_k(y, k);
        unioned.insert(unioned.end(), pk.begin(), pk.end());
      }
      for (const auto& x : preds[yi])
        if (ok_i && !in(unioned, x)) {
          ok_i = false;
          w_i = "'" + print_term(sig, x) + "' below '" + print_term(sig, y) +
                "' but in no pred_k";
        }
      for (const auto& x : unioned)
        if (ok_i && !in(preds[yi], x)) {
          ok_i = false;
          w_i = "'" + print_term(sig, x) + "' in a pred_k of '" +
                print_term(sig, y) + "' but not below it";
        }
      // (iii): hgt strictly decreases
      for (const auto& x : preds[yi])
        if (ok_iii && hgt(x) >= hgt(y)) {
          ok_iii = false;
          w_iii = "hgt does not decrease from '" + print_term(sig, y) +
                  "' to '" + print_term(sig, x) + "'";
        }
      // (ii): lt ∘ lt_k ⊆ lt_k, and (iv)/(v) per argument slot
      for (unsigned k = 0; k < n; ++k) {
        auto pk = pred_k(y, k);
        for (const auto& mid : pk)
          for (const auto& x : pred(mid))
            if (ok_ii && !in(pk, x)) {
              ok_ii = false;
              w_ii = "'" + print_term(sig, x) + "' < '" + print_term(sig, mid) +
                     "' <_" + std::to_string(k) + " '" + print_term(sig, y) +
                     "' but not <_" + std::to_string(k);
            }
        // (iv) pairwise upper bounds
        for (std::size_t ai = 0; ai < pk.size() && ok_iv; ++ai)
          for (std::size_t bi = ai; bi < pk.size() && ok_iv; ++bi) {
            bool found = false;
            for (const auto& c : pk) {
              bool a_le = (pk[ai] == c) || lt(pk[ai], c);
              bool b_le = (pk[bi] == c) || lt(pk[bi], c);
              if (a_le && b_le) {
                found = true;
                break;
              }
            }
            if (!found) {
              ok_iv = false;
              w_iv = "pred_" + std::to_string(k) + "('" + print_term(sig, y) +
                     "') has no upper bound for '" + print_term(sig, pk[ai]) +
                     "' and '" + print_term(sig, pk[bi]) + "'";
            }
          }
        // (v) tk is maximal
        const Term& tk = y.args()[k];
        for (const auto& z : pk)
          if (ok_v && lt(tk, z)) {
            ok_v = false;
            w_v = "argument '" + print_term(sig, tk) + "' of '" +
                  print_term(sig, y) + "' is not maximal in pred_" +
                  std::to_string(k);
          }
      }
    }
    clause("order-i", ok_i, w_i);
    clause("order-ii", ok_ii, w_ii);
    clause("order-iii", ok_iii, w_iii);
    clause("order-iv", ok_iv, w_iv);
    clause("order-v", ok_v, w_v);
  }

  rep.ok = true;
  for (const auto& c : rep.clauses)
    if (!c.ok) rep.ok = false;
  return rep;
}

}  // namespace vnn
