#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliquecover/cost.hpp"
#include "cliquecover/graph.hpp"
#include "cliquecover/lp.hpp"
#include "cliquecover/rational.hpp"

namespace cliquecover {

enum class Problem { kCover, kDecomposition, kPacking };

std::string_view to_string(Problem problem);
Problem parse_problem(std::string_view name);

/// Nonnegative weights on cliques of a host graph, for target size t.
struct CliqueWeighting {
  int t = 0;
  std::map<Clique, Rational> weights;

  /// Sum of c_{|K|} f(K); throws std::domain_error if an excluded size carries weight.
  Rational cost(const CostVector& c) const;
  /// Sum of weights (the packing objective).
  Rational total() const;
};

/// Candidate cliques and target t-cliques of one graph, with incidence lists.
/// Candidates are the cliques of size >= t whose size the cost vector allows.
struct CoverInstance {
  int t = 0;
  std::vector<Clique> targets;
  std::vector<Clique> candidates;
  std::vector<Rational> costs;
  std::vector<std::vector<int>> covers;       // candidate -> targets it contains
  std::vector<std::vector<int>> covered_by;   // target -> candidates containing it
};

CoverInstance build_cover_instance(const Graph& g, int t, const CostVector& c);

/// The exact LP behind a fractional optimum, kept for certificate checks.
struct LpRecord {
  LinearProgram program;
  LpSolution solution;
};

struct OptResult {
  Problem problem = Problem::kCover;
  bool fractional = false;
  int t = 0;
  std::string cost_name;
  Rational value;
  CliqueWeighting witness;
  /// Fractional: certificate checked. Integer: search ran to completion.
  bool certified = false;
  std::optional<LpRecord> lp;
  std::size_t nodes = 0;
};

/// Cover LP: one variable per candidate, one ">= 1" row per t-clique.
LinearProgram build_cover_lp(const CoverInstance& inst);
/// Decomposition LP: same with "= 1" rows.
LinearProgram build_decomposition_lp(const CoverInstance& inst);

OptResult fractional_cover_number(const Graph& g, int t, const CostVector& c);
OptResult fractional_decomposition_number(const Graph& g, int t, const CostVector& c);
OptResult integer_cover_number(const Graph& g, int t, const CostVector& c);
OptResult integer_decomposition_number(const Graph& g, int t, const CostVector& c);
OptResult fractional_packing_number(const Graph& g, int t);
OptResult integer_packing_number(const Graph& g, int t);

/// Dispatches on problem and integrality; packing ignores the cost vector.
OptResult optimize(const Graph& g, int t, const CostVector& c, Problem problem, bool fractional);

struct VerificationReport {
  bool ok = true;
  /// Cover/decomposition: offending t-cliques. Packing: offending edges.
  std::vector<Clique> violated;
};

/// Checks the constraint family of the given problem exactly. Throws
/// std::invalid_argument for a key that is not a clique of g, a key smaller
/// than t (or not exactly t for packing), or a negative weight.
VerificationReport verify_weighting(const Graph& g, int t, const CliqueWeighting& f, Problem problem);

/// sigma_t(sub, c) + c_t * |E(g) \ E(sub)| * n^(t-2); an upper bound on sigma_t(g, c).
Rational cover_bound_after_edge_removal(const Graph& g, const Graph& sub, int t, const CostVector& c);

}  // namespace cliquecover
