#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "rankone/detideal.hpp"

namespace rankone {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

/// One named verification with a machine-readable outcome. Failures always
/// carry a certificate in details (failing pair, facet index, mismatching
/// generators), never just a boolean.
struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  nlohmann::json details;
};

struct Report {
  std::string command;
  nlohmann::json inputs;
  std::vector<Check> checks;
  nlohmann::json artifacts;

  bool all_passed() const;
  bool any_failed() const;
  nlohmann::json json() const;
};

/// Default desk-scale budgets; the CLI can widen them via flag or the
/// RANKONE_MAX_N environment variable.
struct Budgets {
  int verify_nn = 4;      // Groebner-backed checks for the zero-diagonal case
  int verify_nplus = 4;   // Groebner-backed checks for the upper case
  int verify_omin = 2;    // full-minor completion
  int compat = 6;         // pure root combinatorics
  int complex_cluster = 5;
  int complex_order = 6;
};

/// Full compatibility-degree matrix in the table basis ordering.
Report compat_table_report(int n, const Budgets& budgets = {});

/// Degree and both compatibility predicates for one parsed pair.
Report compat_pair_report(int n, const std::string& a, const std::string& b,
                          const Budgets& budgets = {});

/// The composed verification cases "nn", "nplus", "omin". Over-budget
/// requests come back with every check skipped rather than an error.
Report verify_case_report(const std::string& kase, int n, int trials,
                          std::uint64_t seed, const Budgets& budgets = {});

/// Universal Groebner-basis verification for an arbitrary zero pattern under
/// the row-major labeling.
Report gb_report(const ZeroPattern& pattern, int trials, std::uint64_t seed);

/// Complex export: facets, f/h-vectors.
Report complex_report(const std::string& kind, int n,
                      const Budgets& budgets = {});

}  // namespace rankone
