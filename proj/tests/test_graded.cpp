#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>
#include <vector>

#include "vnn/errors.hpp"
#include "vnn/graded.hpp"

using namespace vnn;

namespace {

const Signature& sig_st() {
  static Signature s = Signature::parse("0 0\ns 1\nt 1\n");
  return s;
}
const Signature& sig_plus() {
  static Signature s = Signature::parse("0 0\n+ 2\n");
  return s;
}
const Signature& sig_1s() {
  static Signature s = Signature::parse("1 0\ns 1\n");
  return s;
}
const Signature& sig_abs() {
  static Signature s = Signature::parse("a 0\nb 0\ns 1\n");
  return s;
}

std::vector<HfSet> images(const Signature& sig, unsigned h) {
  std::vector<HfSet> out;
  for (const Term& t : enumerate_terms(sig, h)) out.push_back(term_to_V(sig, t));
  return out;
}

}  // namespace

TEST_CASE("graded view, gel, graded membership") {
  HfSet a = nat_to_hf(1), b = nat_to_hf(2), f = nat_to_hf(7);
  HfSet x = tuple_encode({singleton(a), singleton(b), f});

  auto v = graded_view(x);
  REQUIRE(v.has_value());
  CHECK(v->grades == std::vector<HfSet>{singleton(a), singleton(b)});
  CHECK(v->type_code == f);

  CHECK(gel(x) == mk_set({a, b}));
  CHECK(in_prime(a, x));
  CHECK(in_prime(b, x));
  CHECK_FALSE(in_prime(f, x));  // the type is not an element
  CHECK(in_k(a, x, 0));
  CHECK_FALSE(in_k(a, x, 1));
  CHECK(in_k(b, x, 1));
  CHECK_FALSE(in_k(a, x, 3));  // k ≥ n
  CHECK(pred_k_tuple(x, 1) == singleton(b));
  CHECK(pred_k_tuple(x, 2) == HfSet{});

  // non-tuples
  CHECK_FALSE(graded_view(HfSet{}).has_value());
  CHECK_FALSE(graded_view(singleton(a)).has_value());
  CHECK(gel(HfSet{}) == HfSet{});
  CHECK_FALSE(in_prime(a, HfSet{}));
  CHECK(pred_k_tuple(HfSet{}, 0) == HfSet{});

  // 1-tuples have no grades
  HfSet one = tuple_encode({f});
  CHECK(graded_view(one).has_value());
  CHECK(graded_view(one)->grades.empty());
  CHECK(gel(one) == HfSet{});

  // gel(x) = ⋃_k pred_k_tuple(x, k) on assorted tuples
  for (const HfSet& t : images(sig_plus(), 2)) {
    HfSet u;
    for (unsigned k = 0; k < 4; ++k) u = union2(u, pred_k_tuple(t, k));
    CHECK(gel(t) == u);
  }
}

TEST_CASE("fV images and their freeness") {
  // nullary symbols map to 1-tuples of their codes
  HfSet one_v = fV_apply(sig_1s(), 0, {});
  CHECK(one_v == tuple_encode({sig_1s().code(0)}));
  CHECK(one_v == H_map(0));
  // s^V(1^V) = ({1^V}, code s)
  HfSet s1 = fV_apply(sig_1s(), 1, {one_v});
  CHECK(s1 == tuple_encode({singleton(one_v), sig_1s().code(1)}));
  CHECK(s1 == H_map(1));

  CHECK_THROWS_AS(fV_apply(sig_1s(), 1, {}), ArityMismatch);
  CHECK_THROWS_AS(fV_apply(sig_1s(), 0, {one_v}), ArityMismatch);
  CHECK_THROWS_AS(fV_apply(sig_1s(), 2, {}), ArityMismatch);

  // injectivity and disjoint ranges over all applications to height ≤ 2 images
  for (const Signature* p : {&sig_st(), &sig_plus()}) {
    const Signature& sig = *p;
    std::vector<HfSet> base = images(sig, 2);
    std::map<const void*, std::pair<std::size_t, std::vector<const void*>>> seen;
    std::size_t apps = 0;
    for (std::size_t f = 0; f < sig.size(); ++f) {
      unsigned n = sig.arity(f);
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        std::vector<HfSet> args;
        for (unsigned k = 0; k < n; ++k) args.push_back(base[pick[k]]);
        HfSet y = fV_apply(sig, f, args);
        ++apps;
        std::vector<const void*> key;
        for (const HfSet& a : args) key.push_back(a.node());
        auto [it, fresh] = seen.emplace(y.node(), std::make_pair(f, key));
        CHECK(fresh);  // not hit by another symbol (disjoint) or arg tuple (injective)
        if (!fresh) {
          CHECK(it->second.first == f);
          CHECK(it->second.second == key);
        }
        unsigned k = 0;
        for (; k < n; ++k) {
          if (++pick[k] < base.size()) break;
          pick[k] = 0;
        }
        if (k == n) break;
      }
    }
    CHECK(apps == (p == &sig_st() ? 15 : 26));
  }

  // distinct terms, distinct images
  std::set<const void*> distinct;
  auto terms = enumerate_terms(sig_st(), 3);
  CHECK(terms.size() == 15);
  for (const Term& t : terms) distinct.insert(term_to_V(sig_st(), t).node());
  CHECK(distinct.size() == 15);

  CHECK(term_to_V(sig_st(), parse_term(sig_st(), "0")) == tuple_encode({sig_st().code(0)}));
  CHECK(term_to_V(sig_1s(), parse_term(sig_1s(), "s s 1")) == H_map(2));
}

TEST_CASE("grade-wise transitivity") {
  HfSet one_tuple = tuple_encode({nat_to_hf(3)});
  for (unsigned k = 0; k < 4; ++k) CHECK(is_k_transitive(one_tuple, k));
  for (unsigned k = 0; k < 4; ++k) CHECK(is_k_transitive(HfSet{}, k));  // vacuous

  for (const HfSet& x : images(sig_plus(), 3))
    for (unsigned k = 0; k < 3; ++k) CHECK(is_k_transitive(x, k));

  // ({s^V(1^V)}, code s) skips 1^V: gel(s^V(1^V)) = {1^V} ⊄ {s^V(1^V)}
  HfSet skip = tuple_encode({singleton(H_map(1)), sig_1s().code(1)});
  CHECK_FALSE(is_k_transitive(skip, 0));
}

TEST_CASE("membership ladder: shape and transitivity clauses") {
  // the {1,s} chain sits in all three classes
  for (unsigned n = 0; n <= 10; ++n) {
    CHECK(in_DS(sig_1s(), H_map(n)));
    CHECK(in_ONS(sig_1s(), H_map(n)));
    CHECK(in_VNNS(sig_1s(), H_map(n)));
  }

  // empty grade under a unary type
  HfSet eg = tuple_encode({HfSet{}, sig_1s().code(1)});
  CHECK_FALSE(in_DS(sig_1s(), eg));
  CHECK(classify(sig_1s(), eg).failed_clause == "shape");

  // type code that is no symbol of the signature
  HfSet badtype = tuple_encode({singleton(H_map(0)), nat_to_hf(5)});
  CHECK(classify(sig_1s(), badtype).failed_clause == "shape");
  // arity/grade-count mismatch: nullary code on a 2-tuple
  HfSet badarity = tuple_encode({singleton(H_map(0)), sig_1s().code(0)});
  CHECK(classify(sig_1s(), badarity).failed_clause == "shape");
  // non-tuples
  CHECK(classify(sig_1s(), HfSet{}).failed_clause == "shape");

  // a non-tuple graded element
  HfSet ms = tuple_encode({mk_set({H_map(0), nat_to_hf(3)}), sig_1s().code(1)});
  CHECK(classify(sig_1s(), ms).failed_clause == "member-shape");

  // gel(H(1)) = {H(0)} is not inside the grade {H(1)}
  HfSet skip = tuple_encode({singleton(H_map(1)), sig_1s().code(1)});
  CHECK(classify(sig_1s(), skip).failed_clause == "transitive");

  // x transitive, but its graded element `skip` is not
  HfSet mt = tuple_encode({mk_set({H_map(0), H_map(1), skip}), sig_1s().code(1)});
  CHECK(classify(sig_1s(), mt).failed_clause == "member-transitive");
  CHECK_FALSE(in_DS(sig_1s(), mt));
}

TEST_CASE("membership ladder: directedness") {
  // ({(a),(b)}, s) has two incomparable grade elements
  HfSet av = fV_apply(sig_abs(), 0, {});
  HfSet bv = fV_apply(sig_abs(), 1, {});
  HfSet cx = tuple_encode({mk_set({av, bv}), sig_abs().code(2)});
  CHECK(in_DS(sig_abs(), cx));
  CHECK_FALSE(in_ONS(sig_abs(), cx));
  CHECK_FALSE(in_VNNS(sig_abs(), cx));
  Classification c = classify(sig_abs(), cx);
  CHECK(c.in_ds);
  CHECK_FALSE(c.in_ons);
  CHECK(c.failed_clause == "directed");

  // wrap it once more: the wrapper's own grade is directed (cx bounds
  // everything), but the graded element cx is not
  HfSet wrap = tuple_encode({mk_set({av, bv, cx}), sig_abs().code(2)});
  Classification w = classify(sig_abs(), wrap);
  CHECK(w.in_ds);
  CHECK(w.failed_clause == "member-directed");

  // 1-tuples of valid nullary codes are in ON_S outright
  CHECK(in_ONS(sig_abs(), av));
  CHECK(in_VNNS(sig_abs(), bv));
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(is_limit_gen(sig_1s(), HfSet{}), NotATuple);
  CHECK_THROWS_AS(is_limit_gen(sig_1s(), singleton(HfSet{})), NotATuple);

  // 1-tuples have no grades at all
  CHECK_FALSE(is_limit_gen(sig_1s(), H_map(0)));
  // fV images: x_k is the ∈′-maximum of grade k
  for (const HfSet& x : images(sig_st(), 3)) CHECK_FALSE(is_limit_gen(sig_st(), x));
  for (unsigned n = 0; n <= 10; ++n) CHECK_FALSE(is_limit_gen(sig_1s(), H_map(n)));

  // an empty grade has no maximal element, so the tuple counts as a limit
  // (such a tuple is already outside D_S by the shape clause)
  HfSet eg = tuple_encode({HfSet{}, sig_1s().code(1)});
  CHECK(is_limit_gen(sig_1s(), eg));
}

TEST_CASE("H chain") {
  const Signature& sig = sig_1s();
  // H(n+1) = s^V(H(n)); gel(H(n)) = {H(m) : m < n}
  std::vector<HfSet> h;
  for (unsigned n = 0; n <= 12; ++n) h.push_back(H_map(n));
  for (unsigned n = 0; n + 1 <= 12; ++n)
    CHECK(h[n + 1] == fV_apply(sig, 1, {h[n]}));
  for (unsigned n = 0; n <= 12; ++n) {
    std::vector<HfSet> below(h.begin(), h.begin() + n);
    CHECK(gel(h[n]) == mk_set(below));
  }
  // ∈′ between chain members is the numeric order
  for (unsigned m = 0; m <= 10; ++m)
    for (unsigned n = 0; n <= 10; ++n)
      CHECK(in_prime(h[m], h[n]) == (m < n));

  CHECK(H_map(30).rank() == 123);
  CHECK_THROWS_AS(H_map(31), SizeExceeded);
}

TEST_CASE("perturbed chain members fall out of D_S") {
  const Signature& sig = sig_1s();
  auto rebuilt = [&](std::vector<HfSet> grade) {
    return tuple_encode({mk_set(std::move(grade)), sig.code(1)});
  };
  for (unsigned n = 2; n <= 8; ++n) {
    std::vector<HfSet> grade;
    for (unsigned m = 0; m < n; ++m) grade.push_back(H_map(m));

    // delete an interior element: some gel(H(j+1)) loses H(j)
    for (unsigned j = 0; j + 1 < n; ++j) {
      std::vector<HfSet> g;
      for (unsigned m = 0; m < n; ++m)
        if (m != j) g.push_back(H_map(m));
      CHECK(classify(sig, rebuilt(g)).failed_clause == "transitive");
    }
    // add H(n+1): its gel mentions H(n), which the grade lacks
    {
      std::vector<HfSet> g = grade;
      g.push_back(H_map(n + 1));
      CHECK(classify(sig, rebuilt(g)).failed_clause == "transitive");
    }
    // add a non-tuple
    {
      std::vector<HfSet> g = grade;
      g.push_back(nat_to_hf(3));
      CHECK(classify(sig, rebuilt(g)).failed_clause == "member-shape");
    }
    // retype by a code outside the signature
    CHECK(classify(sig, tuple_encode({mk_set(grade), nat_to_hf(5)})).failed_clause ==
          "shape");
  }
}

TEST_CASE("closure lemmas on term-image pools") {
  for (const Signature* p : {&sig_st(), &sig_plus()}) {
    const Signature& sig = *p;
    for (const HfSet& x : images(sig, 3)) {
      REQUIRE(in_DS(sig, x));
      REQUIRE(in_ONS(sig, x));
      CHECK(in_VNNS(sig, x));
      HfSet g = gel(x);
      // graded elements stay in D_S and ON_S
      for (const HfSet& y : g.elements()) {
        CHECK(in_DS(sig, y));
        CHECK(in_ONS(sig, y));
      }
      // ∈′ is transitive on D_S members
      for (const HfSet& y : g.elements())
        for (const HfSet& z : gel(y).elements()) CHECK(in_prime(z, x));
    }
    // subalgebra: fV over ON_S members lands in ON_S
    std::vector<HfSet> base = images(sig, 2);
    for (std::size_t f = 0; f < sig.size(); ++f) {
      unsigned n = sig.arity(f);
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        std::vector<HfSet> args;
        for (unsigned k = 0; k < n; ++k) args.push_back(base[pick[k]]);
        CHECK(in_ONS(sig, fV_apply(sig, f, args)));
        unsigned k = 0;
        for (; k < n; ++k) {
          if (++pick[k] < base.size()) break;
          pick[k] = 0;
        }
        if (k == n) break;
      }
    }
  }
}

TEST_CASE("bounded converse: ON_S non-limits among candidate tuples are term images") {
  for (const Signature* p : {&sig_st(), &sig_plus()}) {
    const Signature& sig = *p;
    std::vector<HfSet> base = images(sig, 2);
    std::set<const void*> img3;
    for (const HfSet& x : images(sig, 3)) img3.insert(x.node());

    std::vector<HfSet> subsets;
    for (unsigned mask = 1; mask < (1u << base.size()); ++mask) {
      std::vector<HfSet> el;
      for (unsigned b = 0; b < base.size(); ++b)
        if (mask & (1u << b)) el.push_back(base[b]);
      subsets.push_back(mk_set(el));
    }
    std::size_t candidates = 0, passers = 0;
    for (std::size_t f = 0; f < sig.size(); ++f) {
      unsigned n = sig.arity(f);
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        std::vector<HfSet> entries;
        for (unsigned k = 0; k < n; ++k) entries.push_back(subsets[pick[k]]);
        entries.push_back(sig.code(f));
        HfSet cand = tuple_encode(entries);
        ++candidates;
        if (in_VNNS(sig, cand)) {
          ++passers;
          CHECK(img3.count(cand.node()) == 1);
        }
        unsigned k = 0;
        for (; k < n; ++k) {
          if (++pick[k] < subsets.size()) break;
          pick[k] = 0;
        }
        if (k == n) break;
      }
    }
    if (p == &sig_st()) {
      CHECK(candidates == 255);
      CHECK(passers == 15);
    } else {
      CHECK(candidates == 962);
      CHECK(passers == 26);
    }
  }
}

TEST_CASE("ON_S and VNN_S coincide on everything tested here") {
  std::vector<std::pair<const Signature*, HfSet>> tested;
  for (const HfSet& x : images(sig_st(), 3)) tested.push_back({&sig_st(), x});
  for (const HfSet& x : images(sig_plus(), 3)) tested.push_back({&sig_plus(), x});
  for (unsigned n = 0; n <= 10; ++n) tested.push_back({&sig_1s(), H_map(n)});
  HfSet av = fV_apply(sig_abs(), 0, {});
  HfSet bv = fV_apply(sig_abs(), 1, {});
  tested.push_back({&sig_abs(), tuple_encode({mk_set({av, bv}), sig_abs().code(2)})});
  tested.push_back({&sig_1s(), tuple_encode({singleton(H_map(1)), sig_1s().code(1)})});
  tested.push_back({&sig_1s(), HfSet{}});
  for (auto& [sig, x] : tested) CHECK(in_ONS(*sig, x) == in_VNNS(*sig, x));
}

TEST_CASE("gel of unary-signature ordinals is totally ordered") {
  auto rep = check_trees_claim(sig_st(), images(sig_st(), 4));
  CHECK(rep.ok);
  CHECK(rep.checked == 31);
  CHECK(rep.precondition.empty());
  CHECK(rep.witnesses.empty());

  std::vector<HfSet> hp;
  for (unsigned n = 0; n <= 10; ++n) hp.push_back(H_map(n));
  auto hrep = check_trees_claim(sig_1s(), hp);
  CHECK(hrep.ok);
  CHECK(hrep.checked == 11);

  // incomparable grade elements never reach the claim: such a tuple
  // already fails directedness, i.e. the ON_S precondition
  auto im = images(sig_st(), 1);  // 0, s 0, t 0
  HfSet bad = tuple_encode({mk_set({im[0], im[1], im[2]}), sig_st().code(1)});
  CHECK(in_DS(sig_st(), bad));
  auto brep = check_trees_claim(sig_st(), {bad});
  CHECK(brep.ok);
  CHECK(brep.checked == 0);
  CHECK(brep.precondition.size() == 1);
  CHECK(brep.witnesses.empty());

  auto erep = check_trees_claim(sig_1s(), {});
  CHECK(erep.ok);
  CHECK(erep.checked == 0);

  CHECK_THROWS_AS(check_trees_claim(sig_plus(), {}), InvalidShape);
}

TEST_CASE("global ∈′ digraph: acyclic, gel inside the triple union") {
  auto rep = check_in_prime_global(images(sig_plus(), 3));
  CHECK(rep.ok);
  CHECK(rep.nodes == 26);  // subterm images are already in the pool
  CHECK(rep.double_union_holds == 1);  // only the empty-gel image of "0"
  CHECK(rep.witnesses.empty());

  auto srep = check_in_prime_global(images(sig_st(), 4));
  CHECK(srep.ok);
  CHECK(srep.nodes == 31);
  CHECK(srep.double_union_holds == 1);

  auto hrep = check_in_prime_global({H_map(10)});
  CHECK(hrep.ok);
  CHECK(hrep.nodes == 11);  // the closure pulls in H(0..9)

  CHECK(check_in_prime_global({}).ok);
  CHECK(check_in_prime_global({}).nodes == 0);

  // the two-member containment of the proof sketch fails as soon as gel is
  // nonempty here, while the three-fold union always works
  HfSet plus00 = term_to_V(sig_plus(), parse_term(sig_plus(), "+ 0 0"));
  CHECK_FALSE(subset_of(gel(plus00), big_union(big_union(plus00))));
  CHECK(subset_of(gel(plus00), big_union(big_union(big_union(plus00)))));

  // random tuples with grades drawn from R(3): containment is unconditional
  std::mt19937 rng(20260816);
  std::vector<HfSet> pool;
  auto r3 = r_level(3);
  for (int i = 0; i < 100; ++i) {
    std::vector<HfSet> entries(1 + rng() % 4);
    for (HfSet& e : entries) e = r3[rng() % r3.size()];
    pool.push_back(tuple_encode(entries));
  }
  auto rrep = check_in_prime_global(pool);
  for (const HfSet& x : pool)
    CHECK(subset_of(gel(x), big_union(big_union(big_union(x)))));
  CHECK(rrep.ok);
}
