#pragma once

// Desk-scale verification of the library's theorems. Each checker runs one
// claim at bounds small enough for seconds-not-hours wall time and reports
// pass/fail with human-readable witness lines: on failure the witnesses
// pinpoint the counterexample; on success they summarize what was covered.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vnn {

struct VerifyParams {
  std::optional<unsigned> bound;        // numeric search bound
  std::optional<std::string> sig;       // signature file, replaces the built-in pair
  std::optional<unsigned> height;       // term-fragment height
  std::optional<std::int64_t> window;   // integer window for sb
  std::optional<std::string> instance;  // sb instance file
};

struct VerifyReport {
  std::string theorem_id;
  bool pass = false;
  std::vector<std::string> witnesses;  // nonempty whenever pass is false
  std::uint64_t elapsed_ms = 0;
};

// All checker ids, lexicographically sorted.
const std::vector<std::string>& theorem_ids();

// Runs one checker. Throws UnknownTheorem for an id not in theorem_ids().
VerifyReport run_theorem(const std::string& id, const VerifyParams& params = {});

// Runs every checker at defaults, ordered by theorem id.
std::vector<VerifyReport> run_all(const VerifyParams& params = {});

// Plain: "<theorem_id> <pass|fail> <elapsed_ms>" plus two-space-indented
// witness lines. JSON: one object per report line.
std::string format_report(const VerifyReport& r, bool json);

}  // namespace vnn
