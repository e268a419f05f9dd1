#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliquecover/canonical.hpp"
#include "cliquecover/cost.hpp"
#include "cliquecover/rational.hpp"

namespace cliquecover {

/// Registered predicate names, in a fixed order.
const std::vector<std::string>& sweep_predicates();

struct SweepOptions {
  std::string predicate;
  int n_min = 1;
  int n_max = 5;
  /// Used by dmp_t, frac_le_int, chain_inequalities and symmetrization_monotone.
  int t = 2;
  /// Overrides the predicate's default cost vector when set.
  std::optional<CostVector> cost;
  Execution execution = Execution::kParallel;
  /// Worker threads for the parallel path; 0 keeps the OpenMP default.
  int jobs = 0;
};

struct SweepViolation {
  std::string graph6;
  int n = 0;
  Rational value;
  Rational bound;
  std::string detail;
};

/// Largest sigma - sigma* seen on graphs of one order.
struct GapRecord {
  int n = 0;
  Rational gap;
  std::string graph6;
};

struct SweepReport {
  std::string predicate;
  int n_min = 0;
  int n_max = 0;
  int t = 0;
  std::string cost_name;
  std::size_t tested = 0;
  std::vector<SweepViolation> violations;
  /// Graphs meeting the bound with equality.
  std::vector<std::string> extremal;
  std::vector<GapRecord> gaps;
  double wall_seconds = 0;

  bool ok() const { return violations.empty(); }
};

/// Checks the predicate on one representative of every isomorphism class
/// with n_min <= n <= n_max. Throws std::invalid_argument for an unknown
/// predicate or an out-of-range n.
SweepReport sweep(const SweepOptions& options);

}  // namespace cliquecover
