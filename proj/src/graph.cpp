#include "cliquecover/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

namespace cliquecover {

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                            std::to_string(g.order()));
}

VertexMask bit(int v) { return VertexMask{1} << v; }

}  // namespace

int popcount(VertexMask mask) { return std::popcount(mask); }

std::vector<int> mask_to_vertices(VertexMask mask) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph order must be in [0, 64], got " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n), 0);
}

VertexMask Graph::all_vertices() const {
  return order() == 64 ? ~VertexMask{0} : bit(order()) - 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

void Graph::set_neighbors(int v, VertexMask mask) {
  check_vertex(*this, v);
  if (mask & bit(v)) throw std::invalid_argument("neighborhood contains the vertex itself");
  if (mask & ~all_vertices()) throw std::invalid_argument("neighborhood outside vertex set");
  for (int u : mask_to_vertices(adj_[v])) adj_[u] &= ~bit(v);
  adj_[v] = mask;
  for (int u : mask_to_vertices(mask)) adj_[u] |= bit(v);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u)
    for (int v : mask_to_vertices(adj_[u] & ~((VertexMask{2} << u) - 1))) out.emplace_back(u, v);
  return out;
}

bool Graph::is_clique(VertexMask vertices) const {
  for (int v : mask_to_vertices(vertices))
    if (((adj_[v] | bit(v)) & vertices) != vertices) return false;
  return true;
}

bool Graph::is_subgraph_of(const Graph& other) const {
  if (order() != other.order()) return false;
  for (int v = 0; v < order(); ++v)
    if (adj_[v] & ~other.adj_[v]) return false;
  return true;
}

VertexMask Clique::mask() const {
  VertexMask m = 0;
  for (int v : vertices) m |= bit(v);
  return m;
}

Clique Clique::from_mask(VertexMask mask) { return Clique{mask_to_vertices(mask)}; }

int PartSizes::total() const {
  int s = 0;
  for (int x : sizes) s += x;
  return s;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

PartSizes turan_parts(int n, int k) {
  if (k < 1 || k > n)
    throw std::invalid_argument("turan_graph requires 1 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  PartSizes parts;
  for (int i = 0; i < k; ++i) parts.sizes.push_back(n / k + (i < n % k ? 1 : 0));
  return parts;
}

Graph turan_graph(int n, int k) { return complete_multipartite(turan_parts(n, k)); }

Graph complete_multipartite(const PartSizes& parts) {
  if (parts.sizes.empty()) throw std::invalid_argument("complete_multipartite: empty part list");
  for (int s : parts.sizes)
    if (s < 1) throw std::invalid_argument("complete_multipartite: part sizes must be >= 1");
  Graph g(parts.total());
  std::vector<int> part_of;
  for (int p = 0; p < parts.parts(); ++p) part_of.insert(part_of.end(), parts.sizes[p], p);
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
  return g;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw std::invalid_argument("relabel: permutation size mismatch");
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

namespace {

// Ordered DFS: extending only by larger vertices emits each clique once, and
// preorder with increasing children is lexicographic order.
void extend_cliques(const Graph& g, std::vector<int>& current, VertexMask candidates,
                    int min_size, int max_size, std::vector<Clique>& out) {
  while (candidates) {
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    current.push_back(v);
    int size = static_cast<int>(current.size());
    if (size >= min_size) out.push_back(Clique{current});
    if (size < max_size) extend_cliques(g, current, candidates & g.neighbors(v), min_size, max_size, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Clique> enumerate_cliques(const Graph& g, int min_size, int max_size) {
  if (min_size < 1) throw std::invalid_argument("enumerate_cliques: min_size must be >= 1");
  std::vector<Clique> out;
  std::vector<int> current;
  if (max_size < min_size) return out;
  extend_cliques(g, current, g.all_vertices(), min_size, max_size, out);
  return out;
}

std::vector<Clique> enumerate_cliques(const Graph& g, int min_size) {
  return enumerate_cliques(g, min_size, Graph::kMaxVertices);
}

std::vector<Clique> enumerate_t_cliques(const Graph& g, int t) { return enumerate_cliques(g, t, t); }

std::vector<std::vector<int>> clone_classes(const Graph& g) {
  std::vector<std::vector<int>> classes;
  std::map<VertexMask, std::size_t> index;
  for (int v = 0; v < g.order(); ++v) {
    auto [it, inserted] = index.try_emplace(g.neighbors(v), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

namespace {

void max_clique_search(const Graph& g, int size, VertexMask candidates, int& best) {
  if (!candidates) {
    best = std::max(best, size);
    return;
  }
  while (candidates) {
    if (size + std::popcount(candidates) <= best) return;
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    max_clique_search(g, size + 1, candidates & g.neighbors(v), best);
  }
}

}  // namespace

int clique_number(const Graph& g) {
  int best = 0;
  max_clique_search(g, 0, g.all_vertices(), best);
  return best;
}

bool is_complete_multipartite(const Graph& g) {
  auto classes = clone_classes(g);
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a + 1; b < classes.size(); ++b)
      if (!g.adjacent(classes[a].front(), classes[b].front())) return false;
  return true;
}

PartSizes multipartite_parts(const Graph& g) {
  if (!is_complete_multipartite(g)) throw std::invalid_argument("graph is not complete multipartite");
  PartSizes parts;
  for (const auto& c : clone_classes(g)) parts.sizes.push_back(static_cast<int>(c.size()));
  return parts;
}

Graph bounded_clique_subgraph(const Graph& g, int b) {
  if (b < 2) throw std::invalid_argument("bounded_clique_subgraph requires b >= 2");
  if (g.order() == 0) return g;
  Graph pattern = turan_graph(g.order(), std::min(b, g.order()));
  Graph out(g.order());
  for (auto [u, v] : g.edges())
    if (pattern.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

}  // namespace cliquecover
