#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "vnn/hf.hpp"

using namespace vnn;

TEST_CASE("empty set and mk_set basics") {
  HfSet e;
  CHECK(e.size() == 0);
  CHECK(e.rank() == 0);
  CHECK(print_hf(e) == "{}");

  HfSet a = mk_set({e});
  HfSet b = mk_set({e, e});
  CHECK(a == b);  // duplicates collapse
  CHECK(print_hf(a) == "{{}}");

  HfSet two1 = mk_set({e, a});
  HfSet two2 = mk_set({a, e});
  CHECK(two1 == two2);  // order irrelevant
  CHECK(print_hf(two1) == "{{},{{}}}");
}

TEST_CASE("extensionality under random permutation and duplication") {
  std::mt19937 rng(12345);
  auto pool = r_level(4);  // 16 sets
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<HfSet> elems;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> count(0, 6);
    int n = count(rng);
    for (int i = 0; i < n; ++i) elems.push_back(pool[pick(rng)]);
    HfSet base = mk_set(elems);
    std::shuffle(elems.begin(), elems.end(), rng);
    elems.insert(elems.end(), elems.begin(), elems.end());  // duplicate everything
    CHECK(mk_set(elems) == base);
  }
}

TEST_CASE("membership and subset") {
  HfSet z = nat_to_hf(0), one = nat_to_hf(1), two = nat_to_hf(2), three = nat_to_hf(3);
  CHECK(mem(z, one));
  CHECK(mem(one, two));
  CHECK(mem(z, two));
  CHECK(!mem(two, two));
  CHECK(subset_of(two, three));
  CHECK(!subset_of(three, two));
  // order isomorphism on naturals: m < n iff mem(ord(m), ord(n))
  for (unsigned m = 0; m <= 20; ++m)
    for (unsigned n = 0; n <= 20; ++n)
      CHECK(mem(nat_to_hf(m), nat_to_hf(n)) == (m < n));
}

TEST_CASE("union, big union, intersection, difference") {
  HfSet a = parse_hf("{{},{{}}}");
  HfSet b = parse_hf("{{{}}}");
  CHECK(union2(a, b) == a);
  CHECK(big_union(mk_set({a, b})) == a);
  CHECK(intersect2(a, b) == b);
  CHECK(set_minus(a, b) == parse_hf("{{}}"));
  CHECK(big_union(HfSet()) == HfSet());
}

TEST_CASE("powerset") {
  HfSet two = nat_to_hf(2);
  HfSet p = powerset(two);
  CHECK(p.size() == 4);
  CHECK(mem(two, p));           // x ∈ P(x)
  CHECK(big_union(p) == two);   // ⋃P(x) = x
  // both identities over every element of R(4)
  for (const auto& x : r_level(4)) {
    HfSet px = powerset(x);
    CHECK(mem(x, px));
    CHECK(big_union(px) == x);
  }
  HfSet big = mk_set(r_level(4));  // 16 elements: at the bound
  CHECK(powerset(big).size() == 65536);
  HfSet toobig = powerset(big);
  CHECK_THROWS_AS(powerset(toobig), SizeExceeded);
}

TEST_CASE("separation") {
  HfSet three = nat_to_hf(3);
  HfSet odd = separation(three, [](const HfSet& e) { return e.size() == 1; });
  CHECK(odd == singleton(nat_to_hf(1)));
  CHECK(separation(three, [](const HfSet&) { return false; }) == HfSet());
}

TEST_CASE("kuratowski pair encode/decode") {
  HfSet e;
  CHECK(print_hf(kpair(e, e)) == "{{{}}}");  // degenerate (x,x) = {{x}}
  auto d = kpair_decode(kpair(e, e));
  REQUIRE(d.has_value());
  CHECK(d->first == e);
  CHECK(d->second == e);

  HfSet a = nat_to_hf(1), b = nat_to_hf(2);
  auto d2 = kpair_decode(kpair(a, b));
  REQUIRE(d2.has_value());
  CHECK(d2->first == a);
  CHECK(d2->second == b);

  // ord(2) = {{},{{}}} is not a pair
  CHECK(!kpair_decode(nat_to_hf(2)).has_value());
  CHECK(!kpair_decode(HfSet()).has_value());

  // rank example: (ord(0), ord(1))
  CHECK(kpair(nat_to_hf(0), nat_to_hf(1)).rank() == 3);
}

TEST_CASE("kuratowski injectivity over all of R(4), 256 pairs") {
  auto pool = r_level(4);
  for (const auto& x1 : pool)
    for (const auto& y1 : pool)
      for (const auto& x2 : pool)
        for (const auto& y2 : pool) {
          bool same_src = (x1 == x2 && y1 == y2);
          bool same_enc = (kpair(x1, y1) == kpair(x2, y2));
          CHECK(same_src == same_enc);
        }
}

TEST_CASE("wiener pair") {
  HfSet e;
  HfSet w = wiener_pair(e, e);
  // {{{x},∅},{{y}}} with x = y = ∅
  CHECK(w == parse_hf("{{{},{{}}},{{{}}}}"));
  // injectivity over R(3) x R(3)
  auto pool = r_level(3);
  for (const auto& x1 : pool)
    for (const auto& y1 : pool)
      for (const auto& x2 : pool)
        for (const auto& y2 : pool)
          CHECK((wiener_pair(x1, y1) == wiener_pair(x2, y2)) ==
                (x1 == x2 && y1 == y2));
  // the two pairings encode differently in general
  CHECK(wiener_pair(e, e) != kpair(e, e));
}

TEST_CASE("tuple encode/decode") {
  HfSet e;
  CHECK(tuple_encode({e}) == parse_hf("{{{{}}}}"));  // {kpair(ord(0),{})}
  CHECK_THROWS_AS(tuple_encode({}), ArityMismatch);

  // round trips over all sequences of length 1..4 drawn from R(3)
  auto pool = r_level(3);
  std::vector<std::vector<HfSet>> seqs;
  for (const auto& a : pool) {
    seqs.push_back({a});
    for (const auto& b : pool) {
      seqs.push_back({a, b});
      for (const auto& c : pool) seqs.push_back({a, b, c});
    }
  }
  for (const auto& s : seqs) {
    auto dec = tuple_decode(tuple_encode(s));
    REQUIRE(dec.has_value());
    CHECK(*dec == s);
  }

  // non-tuples decode to absent
  CHECK(!tuple_decode(HfSet()).has_value());
  CHECK(!tuple_decode(nat_to_hf(3)).has_value());
  // gap in indices: {(1,x)} without (0,_)
  CHECK(!tuple_decode(mk_set({kpair(nat_to_hf(1), e)})).has_value());
  // duplicate index: {(0,a),(0,b)}
  CHECK(!tuple_decode(mk_set({kpair(nat_to_hf(0), nat_to_hf(1)),
                              kpair(nat_to_hf(0), nat_to_hf(2))}))
             .has_value());
  // non-natural index
  CHECK(!tuple_decode(mk_set({kpair(singleton(singleton(e)), e)})).has_value());
}

TEST_CASE("successors and rank") {
  HfSet e;
  CHECK(succ_vn(e) == parse_hf("{{}}"));
  CHECK(succ_vn(succ_vn(e)) == parse_hf("{{},{{}}}"));
  CHECK(zermelo_succ(zermelo_succ(e)) == parse_hf("{{{}}}"));
  CHECK(zermelo_succ(e) == succ_vn(e));  // they agree at 1 only
  CHECK(zermelo_succ(succ_vn(e)) != succ_vn(succ_vn(e)));

  for (unsigned n = 0; n <= 20; ++n) CHECK(nat_to_hf(n).rank() == n);
  // rank of a Zermelo chain element grows by one per step
  HfSet z;
  for (unsigned n = 0; n <= 20; ++n) {
    CHECK(z.rank() == n);
    z = zermelo_succ(z);
  }
}

TEST_CASE("foundation at desk scale: rank strictly decreases into elements") {
  for (const auto& x : r_level(5))
    for (const auto& e : x.elements()) CHECK(e.rank() < x.rank());
}

TEST_CASE("hf_to_nat") {
  for (unsigned n = 0; n <= 12; ++n) {
    auto back = hf_to_nat(nat_to_hf(n));
    REQUIRE(back.has_value());
    CHECK(*back == n);
  }
  CHECK(!hf_to_nat(singleton(singleton(HfSet()))).has_value());
  CHECK(!hf_to_nat(kpair(HfSet(), nat_to_hf(1))).has_value());
}

TEST_CASE("canonical_cmp is a strict total order over R(4)") {
  auto pool = r_level(4);
  for (const auto& a : pool)
    for (const auto& b : pool) {
      auto ab = canonical_cmp(a, b);
      auto ba = canonical_cmp(b, a);
      CHECK((ab == std::strong_ordering::equal) == (a == b));
      if (ab == std::strong_ordering::less) CHECK(ba == std::strong_ordering::greater);
      if (ab == std::strong_ordering::greater) CHECK(ba == std::strong_ordering::less);
      for (const auto& c : pool) {
        if (canonical_cmp(a, b) < 0 && canonical_cmp(b, c) < 0)
          CHECK(canonical_cmp(a, c) < 0);
      }
    }
}

TEST_CASE("print format is canonical and stable") {
  CHECK(print_hf(nat_to_hf(3)) == "{{},{{}},{{},{{}}}}");
  // printing never emits spaces and always orders canonically
  HfSet shuffled = mk_set({nat_to_hf(2), HfSet(), nat_to_hf(1)});
  CHECK(print_hf(shuffled) == "{{},{{}},{{},{{}}}}");
  CHECK(print_size(nat_to_hf(3), 1000) == std::string("{{},{{}},{{},{{}}}}").size());
  CHECK(print_size(nat_to_hf(40), 10000) > 10000);  // capped, no blowup
}

TEST_CASE("parse/print round trip over R(4) and errors") {
  for (const auto& x : r_level(4)) CHECK(parse_hf(print_hf(x)) == x);

  CHECK_THROWS_AS(parse_hf(""), ParseError);
  CHECK_THROWS_AS(parse_hf("{"), ParseError);
  CHECK_THROWS_AS(parse_hf("}"), ParseError);
  CHECK_THROWS_AS(parse_hf("{}{}"), ParseError);
  CHECK_THROWS_AS(parse_hf("{,}"), ParseError);
  CHECK_THROWS_AS(parse_hf("{ }"), ParseError);  // strict: no whitespace
  try {
    parse_hf("{{}");
    CHECK(false);
  } catch (const ParseError& pe) {
    CHECK(pe.offset == 3);
  }
  try {
    parse_hf("{}x");
    CHECK(false);
  } catch (const ParseError& pe) {
    CHECK(pe.offset == 2);
  }
}

TEST_CASE("r_level sizes") {
  CHECK(r_level(0).size() == 0);
  CHECK(r_level(1).size() == 1);
  CHECK(r_level(2).size() == 2);
  CHECK(r_level(3).size() == 4);
  CHECK(r_level(4).size() == 16);
  CHECK(r_level(5).size() == 65536);
  CHECK_THROWS_AS(r_level(6), SizeExceeded);
}
