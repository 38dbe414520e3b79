#include "vnn/sb.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

namespace vnn {

CoSet co_all() { return {[](std::int64_t) { return true; }, 0}; }
CoSet co_even() { return {[](std::int64_t x) { return x % 2 == 0; }, 0}; }
CoSet co_odd() { return {[](std::int64_t x) { return x % 2 != 0; }, 0}; }
CoSet co_mult(std::int64_t k) {
  return {[k](std::int64_t x) { return k != 0 && x % k == 0; }, 0};
}
CoSet co_list(std::vector<std::int64_t> vs) {
  auto sorted = std::make_shared<std::vector<std::int64_t>>(std::move(vs));
  std::sort(sorted->begin(), sorted->end());
  return {[sorted](std::int64_t x) {
            return std::binary_search(sorted->begin(), sorted->end(), x);
          },
          0};
}
CoSet co_union(CoSet a, CoSet b) {
  return {[a, b](std::int64_t x) { return a.contains(x) || b.contains(x); },
          std::max(a.window_hint, b.window_hint)};
}
CoSet co_minus(CoSet a, CoSet b) {
  return {[a, b](std::int64_t x) { return a.contains(x) && !b.contains(x); },
          std::max(a.window_hint, b.window_hint)};
}

CoInjection co_affine(std::int64_t a, std::int64_t b) {
  if (a == 0) throw InvalidShape("co_affine: a = 0 is not injective");
  return {[a, b](std::int64_t x) { return a * x + b; },
          [a, b](std::int64_t y) -> std::optional<std::int64_t> {
            std::int64_t d = y - b;
            if (d % a != 0) return std::nullopt;
            return d / a;
          }};
}

namespace {

// Preconditions on the window, plus the stability check: no in-window value
// of f's range may have its (unique) preimage beyond the window, or
// window-local iteration would misclassify it.
void check_instance(const CoSet& A, const CoSet& B, const CoInjection& f,
                    std::int64_t window) {
  if (window < 0) throw InvalidShape("sb: negative window");
  for (std::int64_t x = 0; x <= window; ++x) {
    if (A.contains(x) && !B.contains(x))
      throw InvalidShape("sb: A is not a subset of B at " + std::to_string(x));
    if (B.contains(x) && !A.contains(f.apply(x)))
      throw InvalidShape("sb: f does not map B into A at " + std::to_string(x));
  }
  for (std::int64_t y = 0; y <= window; ++y) {
    auto pre = f.inverse_on_range(y);
    if (pre && *pre > window && B.contains(*pre))
      throw WindowUnstable("sb: " + std::to_string(y) +
                           " is reachable only from " + std::to_string(*pre) +
                           ", beyond the window");
  }
}

}  // namespace

std::vector<std::int64_t> sb_D_lfp(const CoSet& A, const CoSet& B,
                                   const CoInjection& f, std::int64_t window) {
  check_instance(A, B, f, window);
  std::set<std::int64_t> d;
  for (std::int64_t x = 0; x <= window; ++x)
    if (B.contains(x) && !A.contains(x)) d.insert(x);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::int64_t> next;
    for (std::int64_t x : d) {
      std::int64_t y = f.apply(x);
      if (y >= 0 && y <= window && !d.count(y)) next.push_back(y);
    }
    for (std::int64_t y : next) {
      d.insert(y);
      grew = true;
    }
  }
  return {d.begin(), d.end()};
}

std::vector<std::int64_t> sb_D_union(const CoSet& A, const CoSet& B,
                                     const CoInjection& f, unsigned depth,
                                     std::int64_t window) {
  check_instance(A, B, f, window);
  // fⁿ[S] ∩ [0,window] computed by forward images; stability guarantees the
  // window view is exact.
  std::set<std::int64_t> imgB, imgA, out;
  for (std::int64_t x = 0; x <= window; ++x) {
    if (B.contains(x)) imgB.insert(x);
    if (A.contains(x)) imgA.insert(x);
  }
  for (unsigned n = 0;; ++n) {
    for (std::int64_t x : imgB)
      if (!imgA.count(x)) out.insert(x);
    if (n == depth) break;
    auto step = [&](std::set<std::int64_t>& s) {
      std::set<std::int64_t> nxt;
      for (std::int64_t x : s) {
        std::int64_t y = f.apply(x);
        if (y >= 0 && y <= window) nxt.insert(y);
      }
      s = std::move(nxt);
    };
    step(imgB);
    step(imgA);
  }
  return {out.begin(), out.end()};
}

std::map<std::int64_t, std::int64_t> sb_bijection(const CoSet& A, const CoSet& B,
                                                  const CoInjection& f,
                                                  std::int64_t window) {
  auto dvec = sb_D_lfp(A, B, f, window);
  std::set<std::int64_t> d(dvec.begin(), dvec.end());
  std::map<std::int64_t, std::int64_t> g;
  for (std::int64_t x = 0; x <= window; ++x)
    if (B.contains(x)) g[x] = d.count(x) ? f.apply(x) : x;
  // g must be injective on its domain
  std::set<std::int64_t> seen;
  for (const auto& [x, y] : g) {
    if (!seen.insert(y).second)
      throw InvalidShape("sb_bijection: computed map is not injective at " +
                         std::to_string(x));
  }
  return g;
}

namespace {

CoSet parse_coset(const std::string& rhs, std::size_t line_off) {
  std::optional<CoSet> acc;
  std::stringstream alts(rhs);
  std::string alt;
  while (std::getline(alts, alt, '|')) {
    std::stringstream ss(alt);
    std::string head;
    if (!(ss >> head))
      throw ParseError("sb instance: empty set expression", line_off);
    CoSet cur;
    if (head == "all") cur = co_all();
    else if (head == "even") cur = co_even();
    else if (head == "odd") cur = co_odd();
    else if (head == "mult") {
      std::int64_t k;
      if (!(ss >> k)) throw ParseError("sb instance: mult needs a modulus", line_off);
      cur = co_mult(k);
    } else if (head == "list") {
      std::vector<std::int64_t> vs;
      std::int64_t v;
      while (ss >> v) vs.push_back(v);
      cur = co_list(std::move(vs));
    } else {
      throw ParseError("sb instance: unknown set '" + head + "'", line_off);
    }
    std::string extra;
    if (ss >> extra)
      throw ParseError("sb instance: trailing '" + extra + "'", line_off);
    acc = acc ? co_union(*acc, cur) : cur;
  }
  if (!acc) throw ParseError("sb instance: empty set expression", line_off);
  return *acc;
}

}  // namespace

SbInstance parse_sb_instance(const std::string& text) {
  std::optional<CoSet> A, B;
  std::optional<CoInjection> f;
  std::optional<std::int64_t> window;
  std::stringstream lines(text);
  std::string line;
  std::size_t off = 0;
  while (std::getline(lines, line)) {
    std::size_t line_off = off;
    off += line.size() + 1;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("sb instance: expected 'key: value'", line_off);
    std::string key = line.substr(0, colon);
    std::string rhs = line.substr(colon + 1);
    key.erase(std::remove_if(key.begin(), key.end(),
                             [](unsigned char c) { return std::isspace(c); }),
              key.end());
    if (key == "A") A = parse_coset(rhs, line_off);
    else if (key == "B") B = parse_coset(rhs, line_off);
    else if (key == "f") {
      std::stringstream ss(rhs);
      std::string kind;
      std::int64_t a, b;
      if (!(ss >> kind >> a >> b) || kind != "affine")
        throw ParseError("sb instance: f must be 'affine <a> <b>'", line_off);
      f = co_affine(a, b);
    } else if (key == "window") {
      std::int64_t w;
      std::stringstream ss(rhs);
      if (!(ss >> w)) throw ParseError("sb instance: bad window", line_off);
      window = w;
    } else {
      throw ParseError("sb instance: unknown key '" + key + "'", line_off);
    }
  }
  if (!A || !B || !f || !window)
    throw ParseError("sb instance: A, B, f, window are all required", off);
  return {*A, *B, *f, *window};
}

SbInstance load_sb_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open sb instance file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_sb_instance(ss.str());
}

SbInstance sb_doubling_instance(std::int64_t window) {
  return {co_even(), co_union(co_even(), co_list({1})), co_affine(2, 0), window};
}

}  // namespace vnn
