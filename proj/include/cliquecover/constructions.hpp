#pragma once

#include <cstdint>
#include <vector>

#include "cliquecover/graph.hpp"

namespace cliquecover {

/// R-uniform hypergraph on vertices 0..N-1; each edge is sorted.
struct LinearHypergraph {
  int N = 0;
  int R = 0;
  std::vector<std::vector<int>> edges;
};

/// Throws std::invalid_argument if some edge is not R distinct vertices in range.
void validate_hypergraph(const LinearHypergraph& h);
/// Distinct edges share at most one vertex.
bool is_linear(const LinearHypergraph& h);
/// Every three pairwise-intersecting edges share a common vertex.
bool is_triangle_free(const LinearHypergraph& h);

/// K_{2,...,2} with n/2 parts; throws std::invalid_argument for odd or nonpositive n.
Graph gap_graph(int n);
/// floor(log2(n / t)); throws std::invalid_argument when n < 2t or t < 1.
int gap_lower_bound(int t, int n);

/// Scans all R-subsets of [N] in an order shuffled by `seed`, keeping each
/// one that leaves the hypergraph linear and triangle-free. Throws
/// std::invalid_argument unless N >= R >= 2 and C(N, R) <= 2,000,000.
LinearHypergraph greedy_linear_triangle_free(int N, int R, std::uint64_t seed);

/// Union of copies of `gadget`, one per hyperedge S, with gadget vertex i
/// placed on the i-th smallest vertex of S. Throws std::invalid_argument
/// when the gadget does not have R vertices.
Graph compose(const LinearHypergraph& h, const Graph& gadget);

/// R/(t+1) disjoint copies of K_{t+1}; throws std::invalid_argument unless
/// t >= 2, R >= 1 and (t+1) divides R.
Graph packing_gadget(int R, int t);

}  // namespace cliquecover
