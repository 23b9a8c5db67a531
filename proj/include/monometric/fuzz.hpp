#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "monometric/mc_functions.hpp"

namespace monometric {

enum class FuzzSuite { monotone, schwarz, ordering, classical };

FuzzSuite parse_suite(std::string_view name);
std::string_view suite_name(FuzzSuite suite);

/// Settings shared by every randomized run.
struct RunConfig {
  std::uint64_t seed = 7;
  std::size_t trials = 100;
  std::vector<int> dims{2, 3, 4};
  std::vector<MonotoneFunctionKind> kinds = standard_catalog();
  std::map<std::string, double> tolerances = default_tolerances();
  std::string output;  // empty means standard output

  /// contraction_rel, contraction_abs, schwarz_rel, ordering_rel, classical_rel.
  static std::map<std::string, double> default_tolerances();

  /// Throws Error(domain) on trials < 1, dims outside [2, 16], no kinds, or
  /// unknown tolerance names.
  void validate() const;
  double tol(const std::string& name) const;
};

struct FuzzReport {
  FuzzSuite suite = FuzzSuite::monotone;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
  std::size_t skips = 0;
  double worst_margin = 0.0;  // relative; negative beyond tolerance means failure
  std::map<std::string, double> tolerances;
  std::map<std::string, std::size_t> failures_by_kind;

  nlohmann::json to_json() const;
};

/// Runs `config.trials` seeded trials.  Per-trial seeds come from
/// derive_seed(seed, trial), so results do not depend on evaluation order.
///   monotone:  metric contraction under random Stinespring channels, per kind
///   schwarz:   operator Schwarz inequality for random channels and K
///   ordering:  sld <= kind <= rld on random (D, A), per kind
///   classical: Fisher contraction under classical stochastic channels
FuzzReport run_fuzz(FuzzSuite suite, const RunConfig& config);

}  // namespace monometric
