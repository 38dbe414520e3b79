#pragma once

// Injection-based back-and-forth bookkeeping over computable subsets of the
// integers, observed through a finite window [0, window].
//
// Given A ⊆ B and an injection f : B -> A, the set
//     D = least fixed point of X ↦ (B∖A) ∪ f[X]
// yields a bijection g : B -> A,
//     g(x) = f(x) if x ∈ D, else x.
// D can equivalently be computed as ⋃ₙ (fⁿ[B] ∖ fⁿ[A]). Both computations
// are window-bounded; if some in-window value is reachable only via points
// beyond the window, the result would be unreliable and WindowUnstable is
// thrown.
//
// Textual instance format (one key per line, '#' comments):
//     A: <pred> [| <pred> ...]
//     B: <pred> [| <pred> ...]
//     f: affine <a> <b>
//     window: <N>
// where <pred> is one of: all | even | odd | mult <k> | list <v1> <v2> ...
// Alternatives separated by '|' are united.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vnn/errors.hpp"

namespace vnn {

struct CoSet {
  std::function<bool(std::int64_t)> contains;
  std::int64_t window_hint = 0;
};

struct CoInjection {
  std::function<std::int64_t(std::int64_t)> apply;
  // Partial inverse: defined exactly on the range.
  std::function<std::optional<std::int64_t>(std::int64_t)> inverse_on_range;
};

CoSet co_all();
CoSet co_even();
CoSet co_odd();
CoSet co_mult(std::int64_t k);
CoSet co_list(std::vector<std::int64_t> vs);
CoSet co_union(CoSet a, CoSet b);
CoSet co_minus(CoSet a, CoSet b);

// f(x) = a*x + b, a != 0.
CoInjection co_affine(std::int64_t a, std::int64_t b);

// D restricted to [0, window], by Kleene iteration from B∖A.
std::vector<std::int64_t> sb_D_lfp(const CoSet& A, const CoSet& B,
                                   const CoInjection& f, std::int64_t window);

// D restricted to [0, window], as ⋃_{n<=depth} (fⁿ[B]∖fⁿ[A]).
std::vector<std::int64_t> sb_D_union(const CoSet& A, const CoSet& B,
                                     const CoInjection& f, unsigned depth,
                                     std::int64_t window);

// The bijection g on B ∩ [0, window], as an explicit map.
std::map<std::int64_t, std::int64_t> sb_bijection(const CoSet& A, const CoSet& B,
                                                  const CoInjection& f,
                                                  std::int64_t window);

struct SbInstance {
  CoSet A, B;
  CoInjection f;
  std::int64_t window;
};

SbInstance parse_sb_instance(const std::string& text);
SbInstance load_sb_instance(const std::string& path);

// The canonical doubling instance: A = even, B = even ∪ {1}, f(x) = 2x.
SbInstance sb_doubling_instance(std::int64_t window);

}  // namespace vnn
