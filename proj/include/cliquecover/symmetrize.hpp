#pragma once

#include <optional>
#include <vector>

#include "cliquecover/cost.hpp"
#include "cliquecover/cover.hpp"
#include "cliquecover/graph.hpp"
#include "cliquecover/rational.hpp"

namespace cliquecover {

/// G(U -> V): every vertex of U takes the neighborhood of V. Throws
/// std::invalid_argument unless U and V are disjoint, nonempty, each a set of
/// pairwise clones, with no edge between them.
Graph symmetrize_classes(const Graph& g, VertexMask u, VertexMask v);

struct SymmetrizationStep {
  std::vector<int> first;   // clone class with the smaller representative
  std::vector<int> second;
  bool first_to_second = true;  // first takes the neighborhood of second
  Rational before;
  Rational after;
};

struct StepOutcome {
  Graph graph;
  SymmetrizationStep step;
};

/// Fractional cover or decomposition value; packing is rejected.
Rational symmetrization_value(const Graph& g, int t, const CostVector& c, Problem problem);

/// Merges the lexicographically first nonadjacent pair of clone classes in
/// whichever direction gives the larger fractional value. On a tie the
/// smaller class takes the larger one's neighborhood, and on equal sizes the
/// first class moves. nullopt when g is complete multipartite.
std::optional<StepOutcome> symmetrize_step(const Graph& g, int t, const CostVector& c, Problem problem);

struct SymmetrizationTrace {
  Graph initial;
  Rational initial_value;
  std::vector<SymmetrizationStep> steps;
  Graph final_graph;
  Rational final_value;
  PartSizes final_parts;
};

SymmetrizationTrace symmetrize_to_multipartite(const Graph& g, int t, const CostVector& c, Problem problem);

}  // namespace cliquecover
