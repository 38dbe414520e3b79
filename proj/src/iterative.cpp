#include "vnn/iterative.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace vnn {

void IterStruct::validate() const {
  if (size == 0) throw InvalidShape("iterative structure: empty carrier");
  if (init >= size) throw InvalidShape("iterative structure: init out of carrier");
  if (succ.size() != size)
    throw InvalidShape("iterative structure: succ must be total");
  for (std::size_t v : succ)
    if (v >= size) throw InvalidShape("iterative structure: succ leaves carrier");
}

IterStruct mk_zn(std::size_t n) {
  if (n == 0) throw InvalidShape("mk_zn: n >= 1 required");
  IterStruct s;
  s.size = n;
  s.init = 0;
  s.succ.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.succ[i] = (i + 1) % n;
  return s;
}

IterStruct mk_lasso(std::size_t tail, std::size_t cycle) {
  if (tail == 0 || cycle == 0)
    throw InvalidShape("mk_lasso: tail >= 1 and cycle >= 1 required");
  IterStruct s;
  s.size = tail + cycle - 1;
  s.init = 0;
  s.succ.resize(s.size);
  for (std::size_t i = 0; i + 1 < s.size; ++i) s.succ[i] = i + 1;
  s.succ[s.size - 1] = tail - 1;  // close the cycle at the entry element
  return s;
}

bool admits_induction(const IterStruct& a) {
  a.validate();
  std::vector<bool> seen(a.size, false);
  std::size_t x = a.init, count = 0;
  while (!seen[x]) {
    seen[x] = true;
    ++count;
    x = a.succ[x];
  }
  return count == a.size;
}

std::vector<std::vector<std::size_t>> find_homs(const IterStruct& a,
                                                const IterStruct& b) {
  a.validate();
  b.validate();
  if (a.size * b.size > 1000000)
    throw SizeExceeded("find_homs: size product exceeds 10^6");

  std::vector<std::optional<std::size_t>> h(a.size);
  // Assign h[x0] = v0 and push the forced values down the successor chain
  // until an already-assigned element confirms or refutes the choice.
  auto assign_chain = [&](std::size_t x0, std::size_t v0,
                          std::vector<std::size_t>& trail) -> bool {
    if (h[x0]) return *h[x0] == v0;
    h[x0] = v0;
    trail.push_back(x0);
    std::size_t x = x0;
    while (true) {
      std::size_t nx = a.succ[x];
      std::size_t nv = b.succ[*h[x]];
      if (h[nx]) return *h[nx] == nv;
      h[nx] = nv;
      trail.push_back(nx);
      x = nx;
    }
  };

  std::vector<std::vector<std::size_t>> out;
  std::size_t explored = 0;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    std::size_t x = from;
    while (x < a.size && h[x]) ++x;
    if (x == a.size) {
      std::vector<std::size_t> hom(a.size);
      for (std::size_t i = 0; i < a.size; ++i) hom[i] = *h[i];
      out.push_back(std::move(hom));
      return;
    }
    for (std::size_t v = 0; v < b.size; ++v) {
      if (++explored > 1000000)
        throw SizeExceeded("find_homs: search budget exceeded");
      std::vector<std::size_t> trail;
      if (assign_chain(x, v, trail)) go(x + 1);
      for (std::size_t i : trail) h[i] = std::nullopt;
    }
  };

  std::vector<std::size_t> seed;
  if (assign_chain(a.init, b.init, seed)) go(0);
  return out;
}

bool admits_recursion_vs(const IterStruct& a,
                         const std::vector<IterStruct>& targets) {
  for (const auto& t : targets)
    if (find_homs(a, t).size() != 1) return false;
  return true;
}

bool PartialMap::total() const {
  for (const auto& v : at)
    if (!v) return false;
  return true;
}

namespace {

// Walk x0, succ(x0), ... assigning f(x0) = v0 and f(succ x) = step(f(x)).
// A revisited element must agree with its first value, else no f satisfies
// the equations on the orbit. A step with no value ends the walk early.
std::optional<PartialMap> realize(
    const IterStruct& a, std::size_t x0, std::size_t v0,
    const std::function<std::optional<std::size_t>(std::size_t)>& step) {
  PartialMap f;
  f.at.assign(a.size, std::nullopt);
  std::size_t x = x0, v = v0;
  while (true) {
    if (f.at[x]) {
      if (*f.at[x] != v) return std::nullopt;
      break;
    }
    f.at[x] = v;
    auto nv = step(v);
    if (!nv) break;
    x = a.succ[x];
    v = *nv;
  }
  return f;
}

void require_recursion_pre(const IterStruct& a, std::size_t m,
                           const char* who) {
  a.validate();
  if (!admits_induction(a))
    throw InvalidShape(std::string(who) + ": structure must admit induction");
  if (m >= a.size)
    throw InvalidShape(std::string(who) + ": m outside the carrier");
}

}  // namespace

std::optional<PartialMap> rec_add(const IterStruct& a, std::size_t m) {
  require_recursion_pre(a, m, "rec_add");
  std::size_t one = a.succ[a.init];
  return realize(a, one, a.succ[m],
                 [&a](std::size_t v) -> std::optional<std::size_t> {
                   return a.succ[v];
                 });
}

std::optional<PartialMap> rec_mul(const IterStruct& a, std::size_t m) {
  require_recursion_pre(a, m, "rec_mul");
  auto add = rec_add(a, m);
  if (!add) return std::nullopt;
  std::size_t one = a.succ[a.init];
  return realize(a, one, m, [&add](std::size_t v) { return add->at[v]; });
}

std::optional<PartialMap> rec_exp(const IterStruct& a, std::size_t m) {
  require_recursion_pre(a, m, "rec_exp");
  auto mul = rec_mul(a, m);
  if (!mul) return std::nullopt;
  std::size_t one = a.succ[a.init];
  return realize(a, one, m, [&mul](std::size_t v) { return mul->at[v]; });
}

std::optional<PartialMap> rec_exp_henkin(const IterStruct& a, std::size_t m) {
  require_recursion_pre(a, m, "rec_exp_henkin");
  auto mul = rec_mul(a, m);
  if (!mul) return std::nullopt;
  std::size_t one = a.succ[a.init];
  return realize(a, a.init, one, [&mul](std::size_t v) { return mul->at[v]; });
}

namespace {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t acc = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) acc = acc * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return acc;
}

}  // namespace

std::vector<unsigned> exp_valid_set(unsigned bound) {
  if (bound > 100000) throw SizeExceeded("exp_valid_set: bound exceeds 10^5");
  std::vector<unsigned> out;
  for (unsigned n = 1; n <= bound; ++n) {
    bool ok = true;
    for (unsigned m = 0; m < n && ok; ++m)
      if (powmod(m, n + 1u, n) != m) ok = false;
    if (ok) out.push_back(n);
  }
  return out;
}

namespace {

bool is_prime_u(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned long long> factorize_u(unsigned long long n) {
  std::vector<unsigned long long> fs;
  for (unsigned long long d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      fs.push_back(d);
      n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

GoodPrimesReport good_primes() {
  GoodPrimesReport rep;
  std::vector<unsigned> a;  // kept sorted
  rep.stages.push_back(a);
  while (true) {
    std::set<unsigned long long> cands;
    for (std::size_t mask = 0; mask < (std::size_t{1} << a.size()); ++mask) {
      unsigned long long prod = 1;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (mask >> i & 1) prod *= a[i];
      cands.insert(prod + 1);
    }
    std::vector<unsigned> fresh;
    std::vector<std::pair<unsigned long long, std::vector<unsigned long long>>>
        rejected;
    for (unsigned long long c : cands) {
      if (std::binary_search(a.begin(), a.end(), c)) continue;
      if (is_prime_u(c))
        fresh.push_back(static_cast<unsigned>(c));
      else
        rejected.emplace_back(c, factorize_u(c));
    }
    if (fresh.empty()) {
      rep.stages.push_back(a);  // the first repeated stage: the fixed point
      rep.rejected = std::move(rejected);
      break;
    }
    a.insert(a.end(), fresh.begin(), fresh.end());
    std::sort(a.begin(), a.end());
    rep.stages.push_back(a);
  }
  rep.fixed_point = a;
  unsigned long long prod = 1;
  rep.valid_n.push_back(1);
  for (unsigned p : a) {
    prod *= p;
    rep.valid_n.push_back(prod);
  }
  return rep;
}

SkolemResult skolem_lt_check(unsigned m, unsigned x_max,
                             const SkolemStep* step) {
  if (m < 2) throw InvalidShape("skolem_lt_check: m >= 2 required");
  if (x_max < m + 2)
    throw InvalidShape("skolem_lt_check: x_max >= m+2 required");
  SkolemStep dflt = [m](unsigned x, bool y) {
    return std::make_pair(x + 1, y || (x == m));
  };
  const SkolemStep& t = step ? *step : dflt;
  unsigned x = 1;
  bool y = false;
  for (unsigned i = 1; i <= x_max; ++i) {
    bool want = m < i;
    if (x != i || y != want) {
      SkolemResult r;
      r.ok = false;
      r.witness_x = i;
      r.detail = "at x=" + std::to_string(i) + " the iterate is (" +
                 std::to_string(x) + "," + (y ? "1" : "0") +
                 ") but the table says (" + std::to_string(i) + "," +
                 (want ? "1" : "0") + ")";
      return r;
    }
    auto [nx, ny] = t(x, y);
    x = nx;
    y = ny;
  }
  return {true, 0, ""};
}

PrimRecPtr pr_const(std::uint64_t c) {
  auto p = std::make_shared<PrimRec>();
  p->kind = PrimRec::Kind::Const;
  p->value = c;
  return p;
}

PrimRecPtr pr_succ() {
  auto p = std::make_shared<PrimRec>();
  p->kind = PrimRec::Kind::Succ;
  return p;
}

PrimRecPtr pr_proj(std::size_t i) {
  auto p = std::make_shared<PrimRec>();
  p->kind = PrimRec::Kind::Proj;
  p->index = i;
  return p;
}

PrimRecPtr pr_compose(PrimRecPtr outer, std::vector<PrimRecPtr> inner) {
  auto p = std::make_shared<PrimRec>();
  p->kind = PrimRec::Kind::Compose;
  p->outer = std::move(outer);
  p->inner = std::move(inner);
  return p;
}

PrimRecPtr pr_rec(PrimRecPtr base, PrimRecPtr step) {
  auto p = std::make_shared<PrimRec>();
  p->kind = PrimRec::Kind::Rec;
  p->base = std::move(base);
  p->step = std::move(step);
  return p;
}

namespace {

std::uint64_t pr_eval(const PrimRecPtr& d, const std::vector<std::uint64_t>& args,
                      std::uint64_t& budget) {
  if (!d) throw InvalidShape("godel_eval: empty description");
  if (budget == 0) throw SizeExceeded("godel_eval: step budget exhausted");
  --budget;
  switch (d->kind) {
    case PrimRec::Kind::Const:
      return d->value;
    case PrimRec::Kind::Succ:
      if (args.size() != 1)
        throw ArityMismatch("godel_eval: Succ expects 1 argument, got " +
                            std::to_string(args.size()));
      if (args[0] == UINT64_MAX)
        throw Overflow("godel_eval: successor exceeds 64 bits");
      return args[0] + 1;
    case PrimRec::Kind::Proj:
      if (d->index >= args.size())
        throw ArityMismatch("godel_eval: Proj(" + std::to_string(d->index) +
                            ") applied to " + std::to_string(args.size()) +
                            " argument(s)");
      return args[d->index];
    case PrimRec::Kind::Compose: {
      std::vector<std::uint64_t> mid;
      mid.reserve(d->inner.size());
      for (const auto& g : d->inner) mid.push_back(pr_eval(g, args, budget));
      return pr_eval(d->outer, mid, budget);
    }
    case PrimRec::Kind::Rec: {
      if (args.empty())
        throw ArityMismatch(
            "godel_eval: recursion needs its recursion argument");
      std::vector<std::uint64_t> rest(args.begin() + 1, args.end());
      std::uint64_t acc = pr_eval(d->base, rest, budget);
      std::vector<std::uint64_t> sargs(rest.size() + 2);
      std::copy(rest.begin(), rest.end(), sargs.begin() + 2);
      for (std::uint64_t y = 0; y < args[0]; ++y) {
        sargs[0] = y;
        sargs[1] = acc;
        acc = pr_eval(d->step, sargs, budget);
      }
      return acc;
    }
  }
  throw Error("godel_eval: unreachable");
}

}  // namespace

std::uint64_t godel_eval(const PrimRecPtr& d,
                         const std::vector<std::uint64_t>& args) {
  std::uint64_t budget = 10000000;
  return pr_eval(d, args, budget);
}

OrderConditions thm_order_conditions(const IterStruct& a,
                                     const std::vector<std::size_t>& order) {
  a.validate();
  if (a.size > 8)
    throw SizeExceeded("thm_order_conditions: carrier larger than 8");
  if (order.size() != a.size)
    throw InvalidShape("thm_order_conditions: order must list the carrier");
  std::vector<std::size_t> rank(a.size, 0);
  std::vector<bool> seen(a.size, false);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    std::size_t e = order[pos];
    if (e >= a.size || seen[e])
      throw InvalidShape("thm_order_conditions: order must be a permutation");
    seen[e] = true;
    rank[e] = pos;
  }
  OrderConditions out;
  for (std::size_t x = 0; x < a.size; ++x)
    if (rank[x] >= rank[a.succ[x]]) out.violations.push_back(x);
  out.increasing = out.violations.empty();
  // clause (a): with the requirement, plus well-ordering (automatic for a
  // finite total order) and "everything but init is a successor"
  std::vector<bool> image(a.size, false);
  for (std::size_t x = 0; x < a.size; ++x) image[a.succ[x]] = true;
  bool covered = true;
  for (std::size_t x = 0; x < a.size; ++x)
    if (x != a.init && !image[x]) covered = false;
  out.holds_a = out.increasing && covered;
  out.holds_b = out.increasing && admits_induction(a);
  return out;
}

OrderScan thm_order_scan(std::size_t max_size) {
  if (max_size > 5) throw SizeExceeded("thm_order_scan: max_size larger than 5");
  OrderScan sc;
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::vector<std::size_t> succ(n, 0);
    while (true) {
      for (std::size_t init = 0; init < n; ++init) {
        IterStruct s{n, init, succ};
        ++sc.structures;
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        do {
          ++sc.pairs;
          auto oc = thm_order_conditions(s, perm);
          if (oc.increasing) sc.none_increasing = false;
          if (std::find(oc.violations.begin(), oc.violations.end(),
                        perm.back()) == oc.violations.end())
            sc.max_always_violates = false;
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      std::size_t k = 0;
      for (; k < n; ++k) {
        if (++succ[k] < n) break;
        succ[k] = 0;
      }
      if (k == n) break;
    }
  }
  return sc;
}

}  // namespace vnn
