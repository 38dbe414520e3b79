#include "vnn/graded.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "vnn/errors.hpp"

namespace vnn {

namespace {

constexpr std::size_t kTcCap = 10000;

// Witness strings stay readable even for deeply nested tuples.
std::string show(const HfSet& x) {
  std::string s = print_hf(x);
  if (s.size() > 160) {
    s.resize(157);
    s += "...";
  }
  return s;
}

void guard_tc(const HfSet& x) {
  std::unordered_set<HfSet> seen{x};
  std::vector<HfSet> stack{x};
  while (!stack.empty()) {
    HfSet t = stack.back();
    stack.pop_back();
    for (const HfSet& e : t.elements())
      if (seen.insert(e).second) {
        if (seen.size() > kTcCap)
          throw SizeExceeded("in_ONS: transitive closure larger than 10000");
        stack.push_back(e);
      }
  }
}

// u bounds y under ∈′ iff y = u or y ∈′ u.
bool bounds(const HfSet& y, const HfSet& u) { return y == u || in_prime(y, u); }

// Every pair of elements of s has an upper bound in s. For finite sets
// pairwise bounds extend to all finite subsets (induction on size, using
// that a bound of {a,b} and c has a bound again), so this is the full
// directedness condition.
bool directed(const HfSet& s) {
  const auto& el = s.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      bool found = false;
      for (const HfSet& u : el)
        if (bounds(el[i], u) && bounds(el[j], u)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

// ∈′ restricted to the elements of g has no cycle.
bool acyclic_on(const HfSet& g) {
  const auto& el = g.elements();
  std::unordered_map<HfSet, std::size_t> idx;
  for (std::size_t i = 0; i < el.size(); ++i) idx.emplace(el[i], i);
  // edge i -> j iff el[j] ∈′ el[i]
  std::vector<std::vector<std::size_t>> out(el.size());
  for (std::size_t i = 0; i < el.size(); ++i)
    for (const HfSet& y : gel(el[i]).elements()) {
      auto it = idx.find(y);
      if (it != idx.end()) out[i].push_back(it->second);
    }
  // 0 = unseen, 1 = on the current path, 2 = done
  std::vector<int> color(el.size(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // node, edge cursor
  for (std::size_t s = 0; s < el.size(); ++s) {
    if (color[s] != 0) continue;
    stack.assign(1, {s, 0});
    color[s] = 1;
    while (!stack.empty()) {
      auto& [v, cursor] = stack.back();
      if (cursor == out[v].size()) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      std::size_t w = out[v][cursor];
      ++cursor;
      if (color[w] == 1) return false;
      if (color[w] == 0) {
        color[w] = 1;
        stack.push_back({w, 0});
      }
    }
  }
  return true;
}

// The tuple-and-type requirement: x decodes as an (n+1)-tuple whose type
// is the code of an n-ary symbol and whose n grades are all nonempty.
bool well_shaped(const Signature& sig, const HfSet& x) {
  auto v = graded_view(x);
  if (!v) return false;
  auto f = sig.symbol_of_code(v->type_code);
  if (!f || sig.arity(*f) != v->grades.size()) return false;
  for (const HfSet& g : v->grades)
    if (g.empty()) return false;
  return true;
}

// First failed requirement among the four hereditary shape/transitivity
// clauses, or nullptr.
const char* ds_first_fail(const Signature& sig, const HfSet& x) {
  if (!well_shaped(sig, x)) return "shape";
  HfSet g = gel(x);
  for (const HfSet& y : g.elements())
    if (!well_shaped(sig, y)) return "member-shape";
  std::size_t n = graded_view(x)->grades.size();
  // One k ≥ n sentinel each: pred_k is {} there, so the checks are vacuous.
  for (unsigned k = 0; k <= n; ++k)
    if (!is_k_transitive(x, k)) return "transitive";
  for (const HfSet& y : g.elements()) {
    std::size_t m = graded_view(y)->grades.size();
    for (unsigned k = 0; k <= m; ++k)
      if (!is_k_transitive(y, k)) return "member-transitive";
  }
  return nullptr;
}

// First failed requirement among directedness and well-foundedness,
// or nullptr. Assumes ds_first_fail(sig, x) == nullptr.
const char* ons_first_fail(const Signature& sig, const HfSet& x) {
  (void)sig;
  auto v = graded_view(x);
  for (unsigned k = 0; k < v->grades.size(); ++k)
    if (!directed(pred_k_tuple(x, k))) return "directed";
  HfSet g = gel(x);
  for (const HfSet& y : g.elements()) {
    auto w = graded_view(y);
    for (unsigned k = 0; k < w->grades.size(); ++k)
      if (!directed(pred_k_tuple(y, k))) return "member-directed";
  }
  if (!acyclic_on(g)) return "well-founded";
  return nullptr;
}

}  // namespace

std::optional<GradedView> graded_view(const HfSet& x) {
  auto entries = tuple_decode(x);
  if (!entries) return std::nullopt;
  GradedView v;
  v.type_code = entries->back();
  entries->pop_back();
  v.grades = std::move(*entries);
  return v;
}

HfSet gel(const HfSet& x) {
  auto v = graded_view(x);
  if (!v) return HfSet{};
  HfSet u;
  for (const HfSet& g : v->grades) u = union2(u, g);
  return u;
}

bool in_k(const HfSet& y, const HfSet& x, unsigned k) {
  auto v = graded_view(x);
  return v && k < v->grades.size() && v->grades[k].contains(y);
}

bool in_prime(const HfSet& y, const HfSet& x) { return gel(x).contains(y); }

HfSet pred_k_tuple(const HfSet& x, unsigned k) {
  auto v = graded_view(x);
  if (!v || k >= v->grades.size()) return HfSet{};
  return v->grades[k];
}

HfSet fV_apply(const Signature& sig, std::size_t f, const std::vector<HfSet>& args) {
  if (f >= sig.size())
    throw ArityMismatch("fV_apply: symbol index out of range");
  if (args.size() != sig.arity(f))
    throw ArityMismatch("fV_apply: '" + sig.name(f) + "' takes " +
                        std::to_string(sig.arity(f)) + " arguments, got " +
                        std::to_string(args.size()));
  std::vector<HfSet> entries;
  entries.reserve(args.size() + 1);
  for (const HfSet& a : args) entries.push_back(union2(gel(a), singleton(a)));
  entries.push_back(sig.code(f));
  return tuple_encode(entries);
}

bool is_k_transitive(const HfSet& x, unsigned k) {
  HfSet p = pred_k_tuple(x, k);
  for (const HfSet& y : p.elements())
    if (!subset_of(gel(y), p)) return false;
  return true;
}

bool in_DS(const Signature& sig, const HfSet& x) {
  return ds_first_fail(sig, x) == nullptr;
}

bool in_ONS(const Signature& sig, const HfSet& x) {
  guard_tc(x);
  return ds_first_fail(sig, x) == nullptr && ons_first_fail(sig, x) == nullptr;
}

bool is_limit_gen(const Signature&, const HfSet& x) {
  auto v = graded_view(x);
  if (!v) throw NotATuple("is_limit_gen: not a tuple");
  for (const HfSet& grade : v->grades) {
    bool has_max = false;
    for (const HfSet& y : grade.elements()) {
      bool maximal = true;
      for (const HfSet& z : grade.elements())
        if (in_prime(y, z)) {
          maximal = false;
          break;
        }
      if (maximal) {
        has_max = true;
        break;
      }
    }
    if (!has_max) return true;  // an empty grade has no maximal element
  }
  return false;
}

bool in_VNNS(const Signature& sig, const HfSet& x) {
  return classify(sig, x).in_vnns;
}

HfSet term_to_V(const Signature& sig, const Term& t) {
  std::vector<HfSet> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(term_to_V(sig, a));
  return fV_apply(sig, t.sym(), args);
}

HfSet H_map(unsigned n) {
  if (n > 30) throw SizeExceeded("H_map: n > 30");
  std::vector<HfSet> h;
  h.push_back(tuple_encode({nat_to_hf(0)}));  // (code 1)
  for (unsigned m = 1; m <= n; ++m)
    h.push_back(tuple_encode({mk_set(h), nat_to_hf(1)}));
  return h[n];
}

Classification classify(const Signature& sig, const HfSet& x) {
  Classification c;
  if (const char* f = ds_first_fail(sig, x)) {
    c.failed_clause = f;
    return c;
  }
  c.in_ds = true;
  guard_tc(x);
  if (const char* f = ons_first_fail(sig, x)) {
    c.failed_clause = f;
    return c;
  }
  c.in_ons = true;
  if (is_limit_gen(sig, x)) {
    c.failed_clause = "non-limit";
    return c;
  }
  for (const HfSet& y : gel(x).elements())
    if (is_limit_gen(sig, y)) {
      c.failed_clause = "member-non-limit";
      return c;
    }
  c.in_vnns = true;
  return c;
}

TreesReport check_trees_claim(const Signature& sig, const std::vector<HfSet>& pool) {
  for (std::size_t i = 0; i < sig.size(); ++i)
    if (sig.arity(i) > 1)
      throw InvalidShape("check_trees_claim: signature must have only nullary and unary symbols");
  TreesReport rep;
  for (const HfSet& x : pool) {
    if (!in_ONS(sig, x)) {
      rep.precondition.push_back(show(x));
      continue;
    }
    ++rep.checked;
    const auto& el = gel(x).elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
      if (in_prime(el[i], el[i])) {
        rep.ok = false;
        rep.witnesses.push_back("reflexive: " + show(el[i]) + " ∈′ itself in gel(" + show(x) + ")");
      }
      for (std::size_t j = i + 1; j < el.size(); ++j) {
        bool ij = in_prime(el[i], el[j]);
        bool ji = in_prime(el[j], el[i]);
        if (ij == ji) {
          rep.ok = false;
          rep.witnesses.push_back(std::string(ij ? "two-cycle" : "incomparable") + ": " +
                                  show(el[i]) + " / " + show(el[j]) + " in gel(" + show(x) + ")");
        }
      }
    }
    for (const HfSet& a : el)
      for (const HfSet& b : el)
        for (const HfSet& c : el)
          if (in_prime(a, b) && in_prime(b, c) && !in_prime(a, c)) {
            rep.ok = false;
            rep.witnesses.push_back("not transitive: " + show(a) + " ∈′ " + show(b) +
                                    " ∈′ " + show(c) + " in gel(" + show(x) + ")");
          }
  }
  return rep;
}

InPrimeGlobalReport check_in_prime_global(const std::vector<HfSet>& pool) {
  InPrimeGlobalReport rep;

  // Close the pool under "graded element of".
  std::vector<HfSet> nodes;
  std::unordered_map<HfSet, std::size_t> idx;
  auto add = [&](const HfSet& v) {
    if (idx.emplace(v, nodes.size()).second) nodes.push_back(v);
  };
  for (const HfSet& x : pool) add(x);
  for (std::size_t qi = 0; qi < nodes.size(); ++qi) {
    HfSet g = gel(nodes[qi]);
    for (const HfSet& y : g.elements()) add(y);
  }
  rep.nodes = nodes.size();

  // Cycle check on the ∈′ digraph (edge x -> y for y ∈′ x).
  std::vector<int> color(nodes.size(), 0);  // 0 unseen, 1 on path, 2 done
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t s = 0; s < nodes.size() && rep.ok; ++s) {
    if (color[s] != 0) continue;
    stack.assign(1, {s, 0});
    color[s] = 1;
    while (!stack.empty()) {
      auto& [v, cursor] = stack.back();
      const auto& out = gel(nodes[v]).elements();
      if (cursor == out.size()) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      std::size_t w = idx.at(out[cursor]);
      ++cursor;
      if (color[w] == 1) {
        rep.ok = false;
        rep.witnesses.push_back("∈′ cycle through " + show(nodes[w]));
        stack.clear();
        break;
      }
      if (color[w] == 0) {
        color[w] = 1;
        stack.push_back({w, 0});
      }
    }
  }

  // gel(x) ⊆ ⋃⋃⋃x for each pool member; how often the two-fold union
  // already suffices is recorded alongside.
  for (const HfSet& x : pool) {
    HfSet g = gel(x);
    HfSet u2 = big_union(big_union(x));
    if (subset_of(g, u2)) ++rep.double_union_holds;
    if (!subset_of(g, big_union(u2))) {
      rep.ok = false;
      rep.witnesses.push_back("gel ⊄ ⋃⋃⋃x for " + show(x));
    }
  }
  return rep;
}

}  // namespace vnn
