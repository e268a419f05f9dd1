#pragma once

#include <string>
#include <vector>

#include "cliquecover/graph.hpp"

namespace cliquecover {

inline constexpr int kMaxCanonicalVertices = 10;
inline constexpr int kMaxEnumeratedVertices = 8;

enum class Execution { kSerial, kParallel };

/// Relabeling with the lexicographically smallest upper-triangle bit string
/// (graph6 column order) among labelings that respect a degree-refined
/// vertex ordering. Throws std::invalid_argument above kMaxCanonicalVertices.
Graph canonical_labeling(const Graph& g);
/// graph6 text of canonical_labeling(g); equal iff the graphs are isomorphic.
std::string canonical_form(const Graph& g);

/// One graph per isomorphism class on n vertices, canonically labeled and
/// sorted by canonical form. Throws std::invalid_argument when n is outside
/// [0, kMaxEnumeratedVertices].
std::vector<Graph> enumerate_graphs(int n, Execution execution = Execution::kParallel);

}  // namespace cliquecover
