#include "vnn/hf.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace vnn {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  // boost-style combine
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

std::size_t hash_kids(const std::vector<HfSet>& kids) {
  std::size_t h = 0x5e7a11ull;
  for (const auto& k : kids) h = mix(h, k.hash());
  return h;
}

struct Intern {
  std::mutex mu;
  struct Hash {
    std::size_t operator()(const HfSet::Node* n) const { return n->hash; }
  };
  struct Eq {
    bool operator()(const HfSet::Node* a, const HfSet::Node* b) const {
      return a->kids == b->kids;  // element-wise pointer equality
    }
  };
  std::unordered_set<HfSet::Node*, Hash, Eq> table;
  std::deque<std::unique_ptr<HfSet::Node>> owned;  // nodes live for the process
  const HfSet::Node* empty;

  Intern() {
    auto n = std::make_unique<HfSet::Node>();
    n->rank = 0;
    n->hash = hash_kids(n->kids);
    empty = n.get();
    table.insert(n.get());
    owned.push_back(std::move(n));
  }

  // `kids` must already be sorted canonically and deduplicated.
  const HfSet::Node* intern(std::vector<HfSet> kids) {
    auto cand = std::make_unique<HfSet::Node>();
    cand->kids = std::move(kids);
    cand->hash = hash_kids(cand->kids);
    unsigned r = 0;
    for (const auto& k : cand->kids) r = std::max(r, k.rank() + 1);
    cand->rank = r;
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(cand.get());
    if (it != table.end()) return *it;
    const HfSet::Node* n = cand.get();
    table.insert(cand.get());
    owned.push_back(std::move(cand));
    return n;
  }
};

Intern& intern_table() {
  static Intern t;
  return t;
}

}  // namespace

HfSet::HfSet() : n_(intern_table().empty) {}

bool HfSet::contains(const HfSet& e) const {
  const auto& ks = n_->kids;
  auto it = std::lower_bound(
      ks.begin(), ks.end(), e,
      [](const HfSet& a, const HfSet& b) { return canonical_cmp(a, b) < 0; });
  return it != ks.end() && *it == e;
}

std::strong_ordering canonical_cmp(const HfSet& a, const HfSet& b) {
  if (a == b) return std::strong_ordering::equal;
  if (a.rank() != b.rank()) return a.rank() <=> b.rank();
  const auto& xa = a.elements();
  const auto& xb = b.elements();
  std::size_t n = std::min(xa.size(), xb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = canonical_cmp(xa[i], xb[i]);
    if (c != 0) return c;
  }
  return xa.size() <=> xb.size();
}

HfSet mk_set(std::vector<HfSet> elems) {
  std::sort(elems.begin(), elems.end(), [](const HfSet& a, const HfSet& b) {
    return canonical_cmp(a, b) < 0;
  });
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return HfSet(intern_table().intern(std::move(elems)));
}

HfSet singleton(const HfSet& x) { return mk_set({x}); }

HfSet union2(const HfSet& x, const HfSet& y) {
  std::vector<HfSet> out = x.elements();
  out.insert(out.end(), y.elements().begin(), y.elements().end());
  return mk_set(std::move(out));
}

HfSet big_union(const HfSet& x) {
  std::vector<HfSet> out;
  for (const auto& e : x.elements())
    out.insert(out.end(), e.elements().begin(), e.elements().end());
  return mk_set(std::move(out));
}

HfSet intersect2(const HfSet& x, const HfSet& y) {
  std::vector<HfSet> out;
  for (const auto& e : x.elements())
    if (y.contains(e)) out.push_back(e);
  return mk_set(std::move(out));
}

HfSet set_minus(const HfSet& x, const HfSet& y) {
  std::vector<HfSet> out;
  for (const auto& e : x.elements())
    if (!y.contains(e)) out.push_back(e);
  return mk_set(std::move(out));
}

HfSet powerset(const HfSet& x) {
  if (x.size() > 16)
    throw SizeExceeded("powerset: source has " + std::to_string(x.size()) +
                       " elements, limit is 16");
  const auto& ks = x.elements();
  std::vector<HfSet> subs;
  subs.reserve(std::size_t{1} << ks.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << ks.size()); ++mask) {
    std::vector<HfSet> pick;
    for (std::size_t i = 0; i < ks.size(); ++i)
      if (mask & (std::size_t{1} << i)) pick.push_back(ks[i]);
    subs.push_back(mk_set(std::move(pick)));
  }
  return mk_set(std::move(subs));
}

HfSet separation(const HfSet& x, const std::function<bool(const HfSet&)>& keep) {
  std::vector<HfSet> out;
  for (const auto& e : x.elements())
    if (keep(e)) out.push_back(e);
  return mk_set(std::move(out));
}

HfSet kpair(const HfSet& x, const HfSet& y) {
  return mk_set({singleton(x), mk_set({x, y})});
}

std::optional<std::pair<HfSet, HfSet>> kpair_decode(const HfSet& p) {
  if (p.size() == 1) {
    const HfSet& inner = p.elements()[0];
    if (inner.size() != 1) return std::nullopt;
    const HfSet& x = inner.elements()[0];
    return std::make_pair(x, x);  // {{x}} = (x,x)
  }
  if (p.size() != 2) return std::nullopt;
  const HfSet* single = nullptr;
  const HfSet* dual = nullptr;
  for (const auto& e : p.elements()) {
    if (e.size() == 1 && !single) single = &e;
    else if (e.size() == 2 && !dual) dual = &e;
    else return std::nullopt;
  }
  if (!single || !dual) return std::nullopt;
  const HfSet& x = single->elements()[0];
  if (!dual->contains(x)) return std::nullopt;
  const HfSet& a = dual->elements()[0];
  const HfSet& b = dual->elements()[1];
  return std::make_pair(x, a == x ? b : a);
}

HfSet wiener_pair(const HfSet& x, const HfSet& y) {
  return mk_set({mk_set({singleton(x), HfSet()}), singleton(singleton(y))});
}

HfSet tuple_encode(const std::vector<HfSet>& xs) {
  if (xs.empty())
    throw ArityMismatch("tuple_encode: the empty tuple has no set encoding");
  std::vector<HfSet> parts;
  parts.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    parts.push_back(kpair(nat_to_hf(static_cast<unsigned>(i)), xs[i]));
  return mk_set(std::move(parts));
}

std::optional<std::vector<HfSet>> tuple_decode(const HfSet& t) {
  if (t.empty()) return std::nullopt;
  std::vector<std::pair<unsigned, HfSet>> slots;
  for (const auto& e : t.elements()) {
    auto pr = kpair_decode(e);
    if (!pr) return std::nullopt;
    auto idx = hf_to_nat(pr->first);
    if (!idx) return std::nullopt;
    slots.emplace_back(*idx, pr->second);
  }
  std::sort(slots.begin(), slots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<HfSet> out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].first != i) return std::nullopt;  // gap or duplicate index
    out.push_back(slots[i].second);
  }
  return out;
}

HfSet succ_vn(const HfSet& x) { return union2(x, singleton(x)); }

HfSet zermelo_succ(const HfSet& x) { return singleton(x); }

HfSet nat_to_hf(unsigned n) {
  HfSet x;
  for (unsigned i = 0; i < n; ++i) x = succ_vn(x);
  return x;
}

std::optional<unsigned> hf_to_nat(const HfSet& x) {
  // x is a von Neumann natural iff its canonical elements are exactly
  // 0, 1, ..., |x|-1 (each the successor of the previous).
  HfSet expect;
  for (const auto& e : x.elements()) {
    if (!(e == expect)) return std::nullopt;
    expect = succ_vn(expect);
  }
  return static_cast<unsigned>(x.size());
}

std::string print_hf(const HfSet& x) {
  std::string out;
  struct Frame {
    const HfSet* s;
    std::size_t next;
  };
  std::vector<Frame> stack{{&x, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == 0) out += '{';
    if (f.next < f.s->size()) {
      if (f.next > 0) out += ',';
      const HfSet* kid = &f.s->elements()[f.next];
      ++f.next;
      stack.push_back({kid, 0});
    } else {
      out += '}';
      stack.pop_back();
    }
  }
  return out;
}

std::size_t print_size(const HfSet& x, std::size_t cap) {
  std::unordered_map<const HfSet::Node*, std::size_t> memo;
  std::function<std::size_t(const HfSet&)> go = [&](const HfSet& s) -> std::size_t {
    auto it = memo.find(s.node());
    if (it != memo.end()) return it->second;
    std::size_t total = 2;  // braces
    if (s.size() > 0) total += s.size() - 1;  // commas
    for (const auto& e : s.elements()) {
      total += go(e);
      if (total > cap) {
        total = cap + 1;
        break;
      }
    }
    memo[s.node()] = total;
    return total;
  };
  return go(x);
}

HfSet parse_hf(const std::string& s) {
  std::size_t i = 0;
  std::vector<std::vector<HfSet>> stack;  // open sets
  std::optional<HfSet> result;
  enum State { WANT_SET, AFTER_ELEM };
  State state = WANT_SET;

  auto fail = [&](const std::string& what) {
    throw ParseError("parse_hf: " + what + " at offset " + std::to_string(i), i);
  };
  auto close_top = [&]() {
    HfSet v = mk_set(std::move(stack.back()));
    stack.pop_back();
    ++i;
    if (stack.empty()) result = v;
    else {
      stack.back().push_back(v);
      state = AFTER_ELEM;
    }
  };

  while (!result) {
    if (i >= s.size()) fail("unexpected end of input");
    char c = s[i];
    if (state == WANT_SET) {
      if (c != '{') fail(std::string("expected '{', found '") + c + "'");
      stack.emplace_back();
      ++i;
      if (i < s.size() && s[i] == '}') close_top();
      // otherwise stay in WANT_SET to read the first element
    } else {  // AFTER_ELEM: a complete element sits in the enclosing set
      if (c == ',') {
        ++i;
        state = WANT_SET;
      } else if (c == '}') {
        close_top();
      } else {
        fail(std::string("expected ',' or '}', found '") + c + "'");
      }
    }
  }
  if (i != s.size())
    throw ParseError("parse_hf: trailing input at offset " + std::to_string(i), i);
  return *result;
}

std::vector<HfSet> r_level(unsigned n) {
  if (n > 5) throw SizeExceeded("r_level: level " + std::to_string(n) + " exceeds 5");
  std::vector<HfSet> cur;  // R(0) = {}
  for (unsigned lvl = 0; lvl < n; ++lvl) {
    std::vector<HfSet> next;
    next.reserve(std::size_t{1} << cur.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << cur.size()); ++mask) {
      std::vector<HfSet> pick;
      for (std::size_t i = 0; i < cur.size(); ++i)
        if (mask & (std::size_t{1} << i)) pick.push_back(cur[i]);
      next.push_back(mk_set(std::move(pick)));
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace vnn
