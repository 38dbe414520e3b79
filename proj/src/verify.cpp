#include "vnn/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vnn/errors.hpp"
#include "vnn/graded.hpp"
#include "vnn/hf.hpp"
#include "vnn/iterative.hpp"
#include "vnn/ordinals.hpp"
#include "vnn/sb.hpp"
#include "vnn/term.hpp"

namespace vnn {

namespace {

using Witnesses = std::vector<std::string>;

template <typename C>
std::string join(const C& xs, const char* sep = ",") {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) os << sep;
    os << x;
    first = false;
  }
  return os.str();
}

std::string show(const HfSet& x) {
  std::string s = print_hf(x);
  if (s.size() > 160) {
    s.resize(157);
    s += "...";
  }
  return s;
}

// The two built-in test signatures, or the --sig file if one was given.
struct SigRun {
  Signature sig;
  unsigned height;
  std::string label;
};

std::vector<SigRun> sig_runs(const VerifyParams& p, unsigned h_unary,
                             unsigned h_binary) {
  std::vector<SigRun> out;
  if (p.sig) {
    out.push_back({Signature::load(*p.sig), p.height.value_or(h_binary), *p.sig});
  } else {
    out.push_back({Signature::parse("0 0\ns 1\nt 1\n"), p.height.value_or(h_unary),
                   "{0,s,t}"});
    out.push_back({Signature::parse("0 0\n+ 2\n"), p.height.value_or(h_binary),
                   "{0,+}"});
  }
  return out;
}

std::vector<HfSet> images(const Signature& sig, unsigned h) {
  std::vector<HfSet> out;
  for (const Term& t : enumerate_terms(sig, h)) out.push_back(term_to_V(sig, t));
  return out;
}

// Walks every tuple (a_0,…,a_{n-1}) over `base`, calling fn(args).
void each_arg_tuple(std::size_t n, const std::vector<HfSet>& base,
                    const std::function<void(const std::vector<HfSet>&)>& fn) {
  if (n > 0 && base.empty()) return;  // no argument tuples at all
  std::vector<std::size_t> pick(n, 0);
  std::vector<HfSet> args(n, HfSet{});
  while (true) {
    for (std::size_t k = 0; k < n; ++k) args[k] = base[pick[k]];
    fn(args);
    std::size_t k = 0;
    for (; k < n; ++k) {
      if (++pick[k] < base.size()) break;
      pick[k] = 0;
    }
    if (k == n) break;
  }
}

Term random_term(const Signature& sig, std::mt19937& rng, unsigned budget) {
  std::vector<std::size_t> choices;
  for (std::size_t i = 0; i < sig.size(); ++i)
    if (budget > 0 || sig.arity(i) == 0) choices.push_back(i);
  std::size_t f = choices[rng() % choices.size()];
  std::vector<Term> args;
  for (unsigned k = 0; k < sig.arity(f); ++k)
    args.push_back(random_term(sig, rng, budget - 1));
  return build(sig, f, std::move(args));
}

// --- number theory ---------------------------------------------------------

bool chk_expset(const VerifyParams& p, Witnesses& w) {
  unsigned bound = p.bound.value_or(5000);
  std::vector<unsigned> got = exp_valid_set(bound);
  std::vector<unsigned> want;
  for (unsigned n : {1u, 2u, 6u, 42u, 1806u})
    if (n <= bound) want.push_back(n);
  w.push_back("n <= " + std::to_string(bound) +
              " with m^(n+1) = m (mod n) for all m < n: {" + join(got) + "}");
  if (got != want) {
    w.push_back("expected {" + join(want) + "}");
    return false;
  }
  return true;
}

bool chk_goodprimes(const VerifyParams&, Witnesses& w) {
  GoodPrimesReport r = good_primes();
  bool ok = true;
  for (std::size_t i = 0; i < r.stages.size(); ++i)
    w.push_back("A" + std::to_string(i + 1) + " = {" + join(r.stages[i]) + "}");
  const std::vector<std::vector<unsigned>> stages_want = {
      {}, {2}, {2, 3}, {2, 3, 7}, {2, 3, 7, 43}, {2, 3, 7, 43}};
  if (r.stages != stages_want || r.fixed_point != std::vector<unsigned>{2, 3, 7, 43}) {
    w.push_back("stage sequence differs from {} -> {2} -> {2,3} -> {2,3,7} -> {2,3,7,43} -> fixed");
    ok = false;
  }
  const std::map<unsigned long long, std::vector<unsigned long long>> pinned = {
      {87, {3, 29}}, {259, {7, 37}}, {603, {3, 3, 67}}, {1807, {13, 139}}};
  std::size_t found = 0;
  for (const auto& [n, fs] : r.rejected) {
    auto it = pinned.find(n);
    if (it != pinned.end()) {
      w.push_back("rejected " + std::to_string(n) + " = " + join(fs, "*"));
      if (it->second == fs) ++found;
    }
  }
  if (found != pinned.size()) {
    w.push_back("missing one of the rejections 87, 259, 603, 1807");
    ok = false;
  }
  w.push_back("prefix products: {" + join(r.valid_n) + "}");
  if (r.valid_n != std::vector<unsigned long long>{1, 2, 6, 42, 1806}) ok = false;
  return ok;
}

bool chk_zn_homs(const VerifyParams& p, Witnesses& w) {
  unsigned bound = p.bound.value_or(12);
  bool ok = true;
  for (std::size_t n = 1; n <= bound; ++n)
    for (std::size_t m = 1; m <= bound; ++m) {
      std::size_t count = find_homs(mk_zn(n), mk_zn(m)).size();
      std::size_t want = (n % m == 0) ? 1 : 0;
      if (count != want) {
        ok = false;
        w.push_back("hom-count(Z_" + std::to_string(n) + " -> Z_" + std::to_string(m) +
                    ") = " + std::to_string(count) + ", expected " + std::to_string(want));
      }
    }
  w.push_back("hom-count(Z_n -> Z_m) = [m divides n] for 1 <= m,n <= " +
              std::to_string(bound));
  return ok;
}

// --- term algebra ----------------------------------------------------------

bool clauses_hold(const FreenessReport& fr, const std::vector<const char*>& names,
                  const std::string& label, Witnesses& w) {
  bool ok = true;
  for (const char* name : names) {
    const ClauseResult* c = fr.find(name);
    if (!c) {
      ok = false;
      w.push_back(label + ": clause '" + name + "' missing from the report");
    } else if (!c->ok) {
      ok = false;
      w.push_back(label + ": clause '" + name + "' fails: " + c->witness);
    }
  }
  return ok;
}

bool chk_rec_alg(const VerifyParams& p, Witnesses& w) {
  bool ok = true;
  auto runs = sig_runs(p, 4, 3);
  for (const SigRun& r : runs) {
    FreenessReport fr = check_free_fragment(r.sig, r.height);
    ok &= clauses_hold(fr, {"injective", "disjoint-ranges", "induction", "prefix-free"},
                       r.label, w);
    w.push_back(r.label + " height <= " + std::to_string(r.height) + ": " +
                std::to_string(fr.term_count) +
                " terms; injective, disjoint-ranges, induction, prefix-free hold");
  }
  std::mt19937 rng(7771);
  const unsigned trips = 10000;
  unsigned bad = 0;
  for (unsigned i = 0; i < trips; ++i) {
    const SigRun& r = runs[i % runs.size()];
    Term t = random_term(r.sig, rng, 8);
    std::string s = print_term(r.sig, t);
    if (!(parse_term(r.sig, s) == t)) {
      if (++bad <= 3) w.push_back("round trip failed for '" + s + "'");
      ok = false;
    }
  }
  w.push_back(std::to_string(trips) + " random print/parse round trips");
  return ok;
}

bool chk_ordergen(const VerifyParams& p, Witnesses& w) {
  bool ok = true;
  for (const SigRun& r : sig_runs(p, 4, 3)) {
    FreenessReport fr = check_free_fragment(r.sig, r.height);
    ok &= clauses_hold(fr, {"order-i", "order-ii", "order-iii", "order-iv", "order-v"},
                       r.label, w);
    w.push_back(r.label + " height <= " + std::to_string(r.height) + ": " +
                std::to_string(fr.term_count) + " terms; order clauses i-v hold");
  }
  return ok;
}

// --- the graded construction -----------------------------------------------

bool chk_valg(const VerifyParams& p, Witnesses& w) {
  bool ok = true;
  for (const SigRun& r : sig_runs(p, 2, 2)) {
    std::vector<HfSet> base = images(r.sig, r.height);
    std::map<const void*, std::pair<std::size_t, std::vector<const void*>>> seen;
    std::size_t apps = 0;
    for (std::size_t f = 0; f < r.sig.size(); ++f)
      each_arg_tuple(r.sig.arity(f), base, [&](const std::vector<HfSet>& args) {
        HfSet y = fV_apply(r.sig, f, args);
        ++apps;
        std::vector<const void*> key;
        for (const HfSet& a : args) key.push_back(a.node());
        auto [it, fresh] = seen.emplace(y.node(), std::make_pair(f, key));
        if (!fresh && (it->second.first != f || it->second.second != key)) {
          ok = false;
          w.push_back(r.label + ": F^V collision at " + show(y));
        }
      });
    w.push_back(r.label + ": " + std::to_string(apps) + " applications over " +
                std::to_string(base.size()) + " height<=" + std::to_string(r.height) +
                " images, injective with disjoint ranges");
  }
  return ok;
}

bool chk_uuu(const VerifyParams& p, Witnesses& w) {
  bool ok = true;
  for (const SigRun& r : sig_runs(p, 3, 3)) {
    std::vector<HfSet> pool = images(r.sig, r.height);
    InPrimeGlobalReport rep = check_in_prime_global(pool);
    if (!rep.ok) {
      ok = false;
      for (const std::string& s : rep.witnesses) w.push_back(r.label + ": " + s);
    }
    w.push_back(r.label + ": " + std::to_string(rep.nodes) +
                " closure nodes, no cycle; gel(x) inside the triple union for all " +
                std::to_string(pool.size()) + " images (double union suffices for " +
                std::to_string(rep.double_union_holds) + ")");
  }
  return ok;
}

bool chk_d1s_iso(const VerifyParams& p, Witnesses& w) {
  unsigned N = p.bound.value_or(20);
  const Signature sig = Signature::parse("1 0\ns 1\n");
  bool ok = true;
  std::vector<HfSet> h;
  for (unsigned n = 0; n <= N + 1; ++n) h.push_back(H_map(n));
  for (unsigned n = 0; n <= N; ++n) {
    if (!(h[n + 1] == fV_apply(sig, 1, {h[n]}))) {
      ok = false;
      w.push_back("H(" + std::to_string(n + 1) + ") != s^V(H(" + std::to_string(n) + "))");
    }
    std::vector<HfSet> below(h.begin(), h.begin() + n);
    if (!(gel(h[n]) == mk_set(below))) {
      ok = false;
      w.push_back("gel(H(" + std::to_string(n) + ")) != {H(m) : m < n}");
    }
    if (!in_DS(sig, h[n])) {
      ok = false;
      w.push_back("H(" + std::to_string(n) + ") not in D_S");
    }
  }
  for (unsigned m = 0; m <= N; ++m)
    for (unsigned n = 0; n <= N; ++n)
      if (in_prime(h[m], h[n]) != (m < n)) {
        ok = false;
        w.push_back("in_prime(H(" + std::to_string(m) + "), H(" + std::to_string(n) +
                    ")) != [m < n]");
      }
  w.push_back("H(0.." + std::to_string(N) +
              "): successor equation, gel ladder, D_S membership, and the ∈′ order all hold");

  // 50 single-change perturbations, all expected to fall out of D_S
  std::size_t tried = 0, failed = 0;
  for (unsigned n = 2; tried < 50; ++n) {
    std::vector<HfSet> grade;
    for (unsigned m = 0; m < n; ++m) grade.push_back(h[m]);
    std::vector<std::pair<std::string, HfSet>> variants;
    for (unsigned j = 0; j + 1 < n && tried + variants.size() < 50; ++j) {
      std::vector<HfSet> g;
      for (unsigned m = 0; m < n; ++m)
        if (m != j) g.push_back(h[m]);
      variants.push_back({"drop H(" + std::to_string(j) + ")",
                          tuple_encode({mk_set(g), sig.code(1)})});
    }
    std::vector<HfSet> over = grade;
    over.push_back(H_map(n + 1));
    variants.push_back({"adjoin H(n+1)", tuple_encode({mk_set(over), sig.code(1)})});
    std::vector<HfSet> alien = grade;
    alien.push_back(nat_to_hf(3));
    variants.push_back({"adjoin a non-tuple", tuple_encode({mk_set(alien), sig.code(1)})});
    variants.push_back({"retype", tuple_encode({mk_set(grade), nat_to_hf(5)})});
    for (const auto& [what, t] : variants) {
      if (tried == 50) break;
      ++tried;
      if (in_DS(sig, t)) {
        ok = false;
        w.push_back("perturbation '" + what + "' of H(" + std::to_string(n) +
                    ") stayed in D_S");
      } else {
        ++failed;
      }
    }
  }
  w.push_back(std::to_string(failed) + "/" + std::to_string(tried) +
              " perturbed tuples fall out of D_S");
  return ok;
}

bool chk_ons_subalg(const VerifyParams& p, Witnesses& w) {
  bool ok = true;
  for (const SigRun& r : sig_runs(p, 3, 3)) {
    std::vector<HfSet> pool = images(r.sig, r.height);
    for (const HfSet& x : pool)
      if (!in_ONS(r.sig, x)) {
        ok = false;
        w.push_back(r.label + ": image outside ON_S: " + show(x));
      }
    // closure: applying F^V to ON_S members stays inside ON_S
    unsigned hb = r.height > 0 ? r.height - 1 : 0;
    std::vector<HfSet> base = images(r.sig, hb);
    std::size_t apps = 0;
    for (std::size_t f = 0; f < r.sig.size(); ++f)
      each_arg_tuple(r.sig.arity(f), base, [&](const std::vector<HfSet>& args) {
        ++apps;
        HfSet y = fV_apply(r.sig, f, args);
        if (!in_ONS(r.sig, y)) {
          ok = false;
          w.push_back(r.label + ": F^V left ON_S at " + show(y));
        }
      });
    w.push_back(r.label + ": " + std::to_string(pool.size()) +
                " term images in ON_S; " + std::to_string(apps) +
                " F^V applications over height<=" + std::to_string(hb) +
                " images stay in ON_S");
  }
  return ok;
}

bool chk_vnn_char(const VerifyParams& p, Witnesses& w) {
  bool ok = true;
  for (const SigRun& r : sig_runs(p, 3, 3)) {
    std::vector<HfSet> pool = images(r.sig, r.height);
    for (const HfSet& x : pool)
      if (!in_VNNS(r.sig, x)) {
        ok = false;
        w.push_back(r.label + ": image outside VNN_S: " + show(x));
      }
    // bounded converse: candidates whose grades are nonempty sets of
    // height<=2 images; every ON_S non-limit among them is a term image
    std::vector<HfSet> base = images(r.sig, 2);
    if (base.size() > 12)
      throw SizeExceeded("vnn-char: 2^" + std::to_string(base.size()) +
                         " grade subsets is past the enumeration bound");
    std::set<const void*> img3;
    for (const HfSet& x : images(r.sig, 3)) img3.insert(x.node());
    std::vector<HfSet> subsets;
    for (unsigned mask = 1; mask < (1u << base.size()); ++mask) {
      std::vector<HfSet> el;
      for (unsigned b = 0; b < base.size(); ++b)
        if (mask & (1u << b)) el.push_back(base[b]);
      subsets.push_back(mk_set(el));
    }
    std::size_t candidates = 0, passers = 0;
    for (std::size_t f = 0; f < r.sig.size(); ++f)
      each_arg_tuple(r.sig.arity(f), subsets, [&](const std::vector<HfSet>& grades) {
        std::vector<HfSet> entries = grades;
        entries.push_back(r.sig.code(f));
        HfSet cand = tuple_encode(entries);
        ++candidates;
        if (in_VNNS(r.sig, cand)) {
          ++passers;
          if (!img3.count(cand.node())) {
            ok = false;
            w.push_back(r.label + ": ON_S non-limit value outside the term images: " +
                        show(cand));
          }
        }
      });
    w.push_back(r.label + ": " + std::to_string(pool.size()) +
                " term images in VNN_S; converse over " + std::to_string(candidates) +
                " candidate tuples: " + std::to_string(passers) +
                " pass, every one a term image");
  }
  // the classic negative witness
  const Signature abs = Signature::parse("a 0\nb 0\ns 1\n");
  HfSet av = fV_apply(abs, 0, {});
  HfSet bv = fV_apply(abs, 1, {});
  HfSet cx = tuple_encode({mk_set({av, bv}), abs.code(2)});
  Classification c = classify(abs, cx);
  if (c.in_ds && !c.in_ons && c.failed_clause == "directed") {
    w.push_back("({(a),(b)},s): in D_S, not in ON_S (fails 'directed'), not in VNN_S");
  } else {
    ok = false;
    w.push_back("({(a),(b)},s) misclassified: in_ds=" + std::to_string(c.in_ds) +
                " in_ons=" + std::to_string(c.in_ons) + " failed='" + c.failed_clause + "'");
  }
  return ok;
}

bool chk_trees(const VerifyParams& p, Witnesses& w) {
  std::vector<SigRun> runs;
  if (p.sig) {
    runs.push_back({Signature::load(*p.sig), p.height.value_or(4), *p.sig});
  } else {
    runs.push_back({Signature::parse("0 0\ns 1\nt 1\n"), p.height.value_or(4), "{0,s,t}"});
  }
  bool ok = true;
  for (const SigRun& r : runs) {
    TreesReport rep = check_trees_claim(r.sig, images(r.sig, r.height));
    if (!rep.ok || !rep.precondition.empty()) {
      ok = false;
      for (const std::string& s : rep.precondition)
        w.push_back(r.label + ": image missed the ON_S precondition: " + s);
      for (const std::string& s : rep.witnesses) w.push_back(r.label + ": " + s);
    }
    w.push_back(r.label + " height <= " + std::to_string(r.height) + ": gel of all " +
                std::to_string(rep.checked) + " images strictly totally ordered by ∈′");
  }
  return ok;
}

// --- foundations over R(5) --------------------------------------------------

std::vector<HfSet> zermelo_chain(unsigned count) {
  std::vector<HfSet> zs;
  HfSet z;
  for (unsigned k = 0; k < count; ++k) {
    zs.push_back(z);
    z = zermelo_succ(z);
  }
  return zs;
}

bool chk_zm_prime(const VerifyParams& p, Witnesses& w) {
  unsigned rb = p.bound.value_or(5);
  bool ok = true;
  // the pruned sweep over all Zm-shaped sets of rank <= rb
  HfSet u = zm_prime_union(rb);
  HfSet expect = mk_set(zermelo_chain(rb));
  w.push_back("union of Zm' members' elements, rank <= " + std::to_string(rb) + ": " +
              show(u));
  if (!(u == expect)) {
    ok = false;
    w.push_back("expected the Zermelo numerals " + show(expect));
  }
  // the literal sweep over every set in R(rb)
  std::vector<HfSet> pool = r_level(rb);
  std::size_t members = 0;
  std::vector<HfSet> elems;
  for (const HfSet& x : pool)
    if (is_zm_prime(x)) {
      ++members;
      for (const HfSet& e : x.elements()) elems.push_back(e);
    }
  HfSet u_pool = mk_set(std::move(elems));
  HfSet expect_pool = mk_set(zermelo_chain(rb >= 1 ? rb - 1 : 0));
  w.push_back("R(" + std::to_string(rb) + "): " + std::to_string(pool.size()) +
              " sets scanned, " + std::to_string(members) + " in Zm'");
  if (!(u_pool == expect_pool)) {
    ok = false;
    w.push_back("element union over R(" + std::to_string(rb) + ") is " + show(u_pool) +
                ", expected " + show(expect_pool));
  }
  return ok;
}

bool chk_sis_wo(const VerifyParams& p, Witnesses& w) {
  unsigned rb = p.bound.value_or(5);
  std::vector<HfSet> pool = r_level(rb);
  bool ok = true;
  std::size_t members = 0;
  for (const HfSet& x : pool) {
    bool zm = is_zm_prime(x);
    bool cls = is_sis_wo_member(x);
    if (zm) ++members;
    if (zm != cls) {
      ok = false;
      w.push_back("Zm' and the well-ordering class disagree at " + show(x));
    }
  }
  w.push_back("R(" + std::to_string(rb) + "): Zm' and the well-ordering class coincide on all " +
              std::to_string(pool.size()) + " sets (" + std::to_string(members) +
              " members)");
  return ok;
}

// --- recursion-flavoured checks ---------------------------------------------

bool chk_sb(const VerifyParams& p, Witnesses& w) {
  SbInstance inst = p.instance ? load_sb_instance(*p.instance)
                               : sb_doubling_instance(64);
  if (p.window) inst.window = *p.window;
  bool ok = true;
  auto d1 = sb_D_lfp(inst.A, inst.B, inst.f, inst.window);
  auto d2 = sb_D_union(inst.A, inst.B, inst.f,
                       static_cast<unsigned>(inst.window), inst.window);
  if (d1 != d2) {
    ok = false;
    w.push_back("lfp gives {" + join(d1) + "} but the staged union gives {" + join(d2) + "}");
  }
  w.push_back("D on [0," + std::to_string(inst.window) + "] = {" + join(d1) + "}");
  if (!p.instance) {
    // on the doubling instance D is the chain from B∖A = {1}, at any window
    std::vector<std::int64_t> chain;
    for (std::int64_t v = 1; v <= inst.window; v *= 2) chain.push_back(v);
    if (d1 != chain) {
      ok = false;
      w.push_back("expected {" + join(chain) + "}");
    }
  }
  auto g = sb_bijection(inst.A, inst.B, inst.f, inst.window);
  std::set<std::int64_t> image;
  for (const auto& [x, y] : g)
    if (!image.insert(y).second) {
      ok = false;
      w.push_back("g repeats the value " + std::to_string(y));
    }
  w.push_back("g is injective on [0," + std::to_string(inst.window) + "] (" +
              std::to_string(g.size()) + " points)");
  if (!p.instance) {
    std::string shown;
    for (auto [x, want] : std::initializer_list<std::pair<std::int64_t, std::int64_t>>{
             {1, 2}, {2, 4}, {6, 6}}) {
      if (x > inst.window) continue;  // point outside a shrunken window
      auto it = g.find(x);
      if (it == g.end() || it->second != want) {
        ok = false;
        w.push_back("g(" + std::to_string(x) + ") != " + std::to_string(want));
      }
      shown += (shown.empty() ? "" : ", ") + ("g(" + std::to_string(x) + ")=" +
                                              std::to_string(want));
    }
    if (!shown.empty()) w.push_back(shown);

    // random affine instances: both constructions of D agree
    std::mt19937 rng(90125);
    std::uniform_int_distribution<std::int64_t> pick_a(1, 5), pick_b(0, 10),
        pick_r(0, 20);
    int built = 0;
    while (built < 50) {
      std::int64_t a = pick_a(rng), b = pick_b(rng);
      auto f = co_affine(a, b);
      std::vector<std::int64_t> removed;
      for (int i = 0; i < 4; ++i) {
        std::int64_t v = pick_r(rng);
        auto pre = f.inverse_on_range(v);
        if (!pre.has_value() || *pre < 0) removed.push_back(v);
      }
      if (removed.empty()) continue;
      CoSet B = co_all();
      CoSet A = co_minus(co_all(), co_list(removed));
      std::int64_t window = 256;
      auto e1 = sb_D_lfp(A, B, f, window);
      auto e2 = sb_D_union(A, B, f, static_cast<unsigned>(window), window);
      if (e1 != e2) {
        ok = false;
        w.push_back("random instance f(x)=" + std::to_string(a) + "x+" +
                    std::to_string(b) + " minus {" + join(removed) +
                    "}: constructions disagree");
      }
      ++built;
    }
    w.push_back("50 random affine instances: lfp and staged union agree");
  }
  return ok;
}

bool chk_skolem(const VerifyParams& p, Witnesses& w) {
  unsigned bound = p.bound.value_or(10);
  bool ok = true;
  for (unsigned m = 2; m <= bound; ++m) {
    SkolemResult r = skolem_lt_check(m, 20);
    if (!r.ok) {
      ok = false;
      w.push_back("m = " + std::to_string(m) + ": " + r.detail);
    }
  }
  w.push_back("iterating t(x,y) = (x+1, y or [x=m]) reproduces (x, [m<x]) for 2 <= m <= " +
              std::to_string(bound) + ", x <= 20");
  return ok;
}

bool chk_thm_order(const VerifyParams& p, Witnesses& w) {
  std::size_t max_size = p.bound.value_or(4);
  OrderScan scan = thm_order_scan(max_size);
  bool ok = scan.none_increasing && scan.max_always_violates;
  w.push_back("all " + std::to_string(scan.structures) + " structures of size <= " +
              std::to_string(max_size) + " with all " + std::to_string(scan.pairs) +
              " total orders: none satisfies x < s(x) everywhere");
  if (!ok) w.push_back("an increasing order exists, or the order maximum failed to witness");
  w.push_back("the order maximum always violates x < s(x)");
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<std::size_t> natural(n);
    for (std::size_t i = 0; i < n; ++i) natural[i] = i;
    OrderConditions c = thm_order_conditions(mk_zn(n), natural);
    if (c.violations != std::vector<std::size_t>{n - 1}) {
      ok = false;
      w.push_back("Z_" + std::to_string(n) +
                  " with the natural order: violations at {" + join(c.violations) +
                  "}, expected exactly the wrap element " + std::to_string(n - 1));
    }
  }
  w.push_back("each Z_n (n <= 8) under the natural order fails exactly at the wrap element");
  return ok;
}

// --- dispatch ----------------------------------------------------------------

using Checker = bool (*)(const VerifyParams&, Witnesses&);

const std::vector<std::pair<std::string, Checker>>& checkers() {
  static const std::vector<std::pair<std::string, Checker>> table = {
      {"d1s-iso", chk_d1s_iso},
      {"goodprimes", chk_goodprimes},
      {"lemma-ordergen", chk_ordergen},
      {"ons-subalg", chk_ons_subalg},
      {"sb", chk_sb},
      {"sis-wo", chk_sis_wo},
      {"skolem", chk_skolem},
      {"thm-order", chk_thm_order},
      {"thm-rec-alg-fragment", chk_rec_alg},
      {"thm-uuu", chk_uuu},
      {"thm-valg", chk_valg},
      {"thm1-expset", chk_expset},
      {"trees", chk_trees},
      {"vnn-char", chk_vnn_char},
      {"zm-prime", chk_zm_prime},
      {"zn-homs", chk_zn_homs},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : checkers()) v.push_back(id);
    return v;
  }();
  return ids;
}

VerifyReport run_theorem(const std::string& id, const VerifyParams& params) {
  for (const auto& [name, fn] : checkers()) {
    if (name != id) continue;
    VerifyReport r;
    r.theorem_id = id;
    auto t0 = std::chrono::steady_clock::now();
    r.pass = fn(params, r.witnesses);
    r.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0)
            .count());
    if (!r.pass && r.witnesses.empty())
      r.witnesses.push_back("failed without a recorded witness");
    return r;
  }
  throw UnknownTheorem("unknown theorem id '" + id + "'");
}

std::vector<VerifyReport> run_all(const VerifyParams& params) {
  std::vector<VerifyReport> out;
  for (const std::string& id : theorem_ids()) out.push_back(run_theorem(id, params));
  return out;
}

std::string format_report(const VerifyReport& r, bool json) {
  if (json) {
    nlohmann::json j;
    j["theorem_id"] = r.theorem_id;
    j["status"] = r.pass ? "pass" : "fail";
    j["witnesses"] = r.witnesses;
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
  }
  std::string out = r.theorem_id + (r.pass ? " pass " : " fail ") +
                    std::to_string(r.elapsed_ms);
  for (const std::string& s : r.witnesses) out += "\n  " + s;
  return out;
}

}  // namespace vnn
