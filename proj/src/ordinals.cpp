#include "vnn/ordinals.hpp"

#include <stdexcept>
#include <unordered_map>

namespace vnn {

bool is_transitive(const HfSet& x) {
  for (const auto& e : x.elements())
    if (!subset_of(e, x)) return false;
  return true;
}

bool is_ordinal(const HfSet& x) {
  // Route 1: transitive set of transitive sets.
  bool route1 = is_transitive(x);
  if (route1) {
    for (const auto& e : x.elements())
      if (!is_transitive(e)) {
        route1 = false;
        break;
      }
  }
  // Route 2: transitive and totally ordered by membership.
  bool route2 = is_transitive(x);
  if (route2) {
    const auto& es = x.elements();
    for (std::size_t i = 0; i < es.size() && route2; ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j)
        if (!mem(es[i], es[j]) && !mem(es[j], es[i])) {
          route2 = false;
          break;
        }
  }
  if (route1 != route2)
    throw std::logic_error("is_ordinal: definition disagreement on " + print_hf(x));
  return route1;
}

Ord Ord::from_nat(unsigned n) { return Ord(nat_to_hf(n), n); }

std::optional<Ord> Ord::from_set(const HfSet& x) {
  auto n = hf_to_nat(x);
  if (!n) return std::nullopt;
  return Ord(x, *n);
}

unsigned ord_to_nat(const HfSet& x) {
  auto n = hf_to_nat(x);
  if (!n) throw NotAnOrdinal("ord_to_nat: " + print_hf(x) + " is not a natural");
  return *n;
}

bool is_limit_ord(const HfSet& x) {
  if (!is_ordinal(x)) throw NotAnOrdinal("is_limit_ord: not an ordinal");
  if (x.empty()) return false;
  for (const auto& y : x.elements())
    if (succ_vn(y) == x) return false;
  return true;
}

bool is_zm(const HfSet& x) {
  for (const auto& e : x.elements()) {
    if (e.empty()) continue;
    if (e.size() == 1 && x.contains(e.elements()[0])) continue;
    return false;
  }
  return true;
}

bool is_zm_prime(const HfSet& x) {
  if (!is_zm(x)) return false;
  if (x.size() > 20)
    throw SizeExceeded("is_zm_prime: subset scan over " + std::to_string(x.size()) +
                       " elements exceeds 20");
  const auto& es = x.elements();
  std::size_t n = es.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<HfSet> pick;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) pick.push_back(es[i]);
    HfSet s = mk_set(pick);
    bool found = false;
    for (const auto& e : pick)
      if (intersect2(e, s).empty()) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

namespace {

// All sets of rank <= bound whose elements are each {} or a singleton —
// the only candidates for Zm membership. Elements of such a set are drawn
// from {} plus singletons {y} with rank(y) <= bound - 2.
std::vector<HfSet> zm_candidates(unsigned bound) {
  std::vector<HfSet> atoms{HfSet()};
  if (bound >= 2)
    for (const auto& y : r_level(bound - 1)) atoms.push_back(singleton(y));
  std::vector<HfSet> out;
  out.reserve(std::size_t{1} << atoms.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
    std::vector<HfSet> pick;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (mask & (std::size_t{1} << i)) pick.push_back(atoms[i]);
    out.push_back(mk_set(std::move(pick)));
  }
  return out;
}

}  // namespace

HfSet zm_prime_union(unsigned rank_bound) {
  if (rank_bound > 5)
    throw SizeExceeded("zm_prime_union: rank bound " + std::to_string(rank_bound) +
                       " exceeds 5");
  std::vector<HfSet> members;
  for (const auto& x : zm_candidates(rank_bound)) {
    if (x.rank() > rank_bound) continue;
    if (is_zm_prime(x))
      for (const auto& e : x.elements()) members.push_back(e);
  }
  return mk_set(std::move(members));
}

bool is_sis_wo_member(const HfSet& x) {
  // Shape clause: every element is {} or a singleton of an element.
  for (const auto& e : x.elements()) {
    if (e.empty()) continue;
    if (e.size() == 1 && x.contains(e.elements()[0])) continue;
    return false;
  }
  if (x.size() > 8)
    throw SizeExceeded("is_sis_wo_member: order search over " +
                       std::to_string(x.size()) + " elements exceeds 8");
  // Order clause: a linear order with y < {y} whenever both are elements.
  // Since any linear order on a finite set is a well-ordering, this is the
  // existence of a topological order of the y -> {y} edges (Kahn's scheme:
  // the edges form a functional graph, so it suffices that they are acyclic).
  const auto& es = x.elements();
  std::size_t n = es.size();
  std::vector<int> next(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    HfSet sing = singleton(es[i]);
    for (std::size_t j = 0; j < n; ++j)
      if (es[j] == sing) next[i] = static_cast<int>(j);
  }
  for (std::size_t start = 0; start < n; ++start) {
    std::size_t steps = 0;
    for (int cur = next[start]; cur != -1; cur = next[cur]) {
      if (++steps > n) return false;  // cycle: no compatible order
    }
  }
  return true;
}

bool is_wr_finite(const HfSet& x) {
  if (x.size() > 3)
    throw SizeExceeded("is_wr_finite: 2^2^|x| collections with |x| = " +
                       std::to_string(x.size()) + " exceeds the |x| <= 3 cap");
  HfSet px = powerset(x);
  const auto& subs = px.elements();
  std::size_t p = subs.size();
  std::unordered_map<const HfSet::Node*, std::size_t> index;
  for (std::size_t i = 0; i < p; ++i) index[subs[i].node()] = i;
  std::size_t empty_ix = index.at(HfSet().node());
  std::size_t full_ix = index.at(x.node());

  for (std::size_t coll = 0; coll < (std::size_t{1} << p); ++coll) {
    if (!(coll & (std::size_t{1} << empty_ix))) continue;  // must contain {}
    bool closed = true;
    for (std::size_t i = 0; i < p && closed; ++i) {
      if (!(coll & (std::size_t{1} << i))) continue;
      for (const auto& c : x.elements()) {
        HfSet grown = union2(singleton(c), subs[i]);
        if (!(coll & (std::size_t{1} << index.at(grown.node())))) {
          closed = false;
          break;
        }
      }
    }
    if (closed && !(coll & (std::size_t{1} << full_ix))) return false;
  }
  return true;
}

}  // namespace vnn
