#pragma once

/**
 * @file laws.hpp
 * @brief Seeded property suites over every model.
 *
 * Each suite draws random values from a Gen seeded with the given seed and
 * checks a list of named laws exactly. A law records its case count, its
 * failure count and the first failing case verbatim (as JSON).
 *
 * Suites: semifield, decomposition, norms, attainment, quotient, convex,
 * characters, valuation, congruence, circle, fnorm. The fnorm suite is a
 * report, not a gate: its contraction law is known to fail (see the README).
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace char1 {

struct LawResult {
  std::string law;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_counterexample;
  bool passed() const { return failures == 0; }
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<LawResult> laws;

  bool passed() const;
  std::size_t total_cases() const;
  std::size_t total_failures() const;
  const LawResult* find(std::string_view law) const;
};

const std::vector<std::string>& suite_names();

/// `cases` overrides the suite's base case count (1000 or 500 depending on
/// the suite). Unknown names throw invariant_error.
SuiteResult run_suite(std::string_view name, std::uint64_t seed, std::optional<std::size_t> cases = {});

}  // namespace char1
