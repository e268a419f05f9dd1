#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cliquecover {

using VertexMask = std::uint64_t;

/// Undirected simple graph on vertices 0..n-1, stored as one neighborhood
/// bitmask per vertex. Desk-scale only: at most 64 vertices.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);

  int order() const { return static_cast<int>(adj_.size()); }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
  VertexMask neighbors(int v) const { return adj_[v]; }
  VertexMask all_vertices() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  /// Replaces the neighborhood of v, keeping symmetry. mask must not contain v.
  void set_neighbors(int v, VertexMask mask);

  std::size_t edge_count() const;
  int degree(int v) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool is_clique(VertexMask vertices) const;
  /// Same vertex count and every edge of this graph is an edge of other.
  bool is_subgraph_of(const Graph& other) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexMask> adj_;
};

/// A clique of some host graph: strictly increasing vertex list.
struct Clique {
  std::vector<int> vertices;

  std::size_t size() const { return vertices.size(); }
  VertexMask mask() const;
  static Clique from_mask(VertexMask mask);

  friend bool operator==(const Clique&, const Clique&) = default;
  friend auto operator<=>(const Clique& a, const Clique& b) { return a.vertices <=> b.vertices; }
};

/// Part sizes of a complete multipartite graph; every entry >= 1.
struct PartSizes {
  std::vector<int> sizes;

  int parts() const { return static_cast<int>(sizes.size()); }
  int total() const;
};

int popcount(VertexMask mask);
std::vector<int> mask_to_vertices(VertexMask mask);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// T_{n,k}: complete k-partite, part sizes differ by at most one. Larger
/// parts come first and occupy consecutive vertex blocks.
Graph turan_graph(int n, int k);
/// Part sizes of T_{n,k} in the vertex-block order used by turan_graph.
PartSizes turan_parts(int n, int k);
Graph complete_multipartite(const PartSizes& parts);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
/// Graph induced by a relabeling: result has edge perm[u]perm[v] for every uv.
Graph relabel(const Graph& g, std::span<const int> perm);

/// All cliques with at least min_size vertices, lexicographic order.
std::vector<Clique> enumerate_cliques(const Graph& g, int min_size);
/// Cliques with between min_size and max_size vertices, lexicographic order.
std::vector<Clique> enumerate_cliques(const Graph& g, int min_size, int max_size);
/// Exactly the cliques of size t.
std::vector<Clique> enumerate_t_cliques(const Graph& g, int t);

/// Equivalence classes of N(u) = N(v), each sorted, ordered by smallest member.
std::vector<std::vector<int>> clone_classes(const Graph& g);

int clique_number(const Graph& g);

/// True when clone classes are pairwise completely joined (includes the
/// edgeless graph as a 1-partite graph and the empty graph).
bool is_complete_multipartite(const Graph& g);
/// Part sizes of a complete multipartite graph in clone-class order; throws
/// when g is not complete multipartite.
PartSizes multipartite_parts(const Graph& g);

/// G intersected with turan_graph(n, b) on the identity labeling.
Graph bounded_clique_subgraph(const Graph& g, int b);

}  // namespace cliquecover
