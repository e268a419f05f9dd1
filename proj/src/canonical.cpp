#include "cliquecover/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "cliquecover/graph_io.hpp"

namespace cliquecover {

namespace {

// Ordered partition of the vertices, refined until every vertex's color and
// the multiset of its neighbors' colors agree within each cell.
std::vector<int> refined_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  std::size_t classes = 0;
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{color[v]};
      std::vector<int> around;
      for (int w : mask_to_vertices(g.neighbors(v))) around.push_back(color[w]);
      std::sort(around.begin(), around.end());
      s.insert(s.end(), around.begin(), around.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<int>> distinct;
    for (const auto& [s, v] : sig) distinct.push_back(s);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v].first) - distinct.begin());
    if (distinct.size() == classes) return color;
    classes = distinct.size();
  }
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {
    const auto color = refined_colors(g);
    std::vector<int> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
    for (int v : order) cell_of_position_.push_back(color[v]);
    color_ = color;
    perm_.assign(static_cast<std::size_t>(n_), -1);
    columns_.assign(static_cast<std::size_t>(n_), 0);
  }

  Graph run() {
    search(0, 0, false);
    Graph out(n_);
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < j; ++i)
        if ((best_columns_[j] >> i) & 1u) out.add_edge(i, j);
    return out;
  }

 private:
  // Returns <0, 0, >0 comparing column a against b as bit strings read from
  // position 0 upward, where a 0 bit sorts first.
  static int compare_column(VertexMask a, VertexMask b) {
    const VertexMask diff = a ^ b;
    if (!diff) return 0;
    const VertexMask low = diff & (~diff + 1);
    return (a & low) ? 1 : -1;
  }

  void search(int position, VertexMask used, bool below_best) {
    if (position == n_) {
      if (!found_ || below_best) {
        best_columns_ = columns_;
        found_ = true;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1u) continue;
      if (color_[v] != cell_of_position_[position]) continue;
      VertexMask column = 0;
      for (int i = 0; i < position; ++i)
        if (g_.adjacent(perm_[i], v)) column |= VertexMask{1} << i;
      bool below = below_best;
      if (found_ && !below) {
        const int cmp = compare_column(column, best_columns_[position]);
        if (cmp > 0) continue;
        below = cmp < 0;
      }
      perm_[position] = v;
      columns_[position] = column;
      search(position + 1, used | (VertexMask{1} << v), below);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<int> cell_of_position_;
  std::vector<int> perm_;
  std::vector<VertexMask> columns_;
  std::vector<VertexMask> best_columns_;
  bool found_ = false;
};

std::vector<Graph> extend_all(const std::vector<Graph>& smaller, int n, Execution execution) {
  const std::size_t per_graph = std::size_t{1} << (n - 1);
  const std::size_t total = smaller.size() * per_graph;
  std::vector<std::pair<std::string, Graph>> keyed(total);
  auto work = [&](std::size_t item) {
    const Graph& base = smaller[item / per_graph];
    const VertexMask neighborhood = static_cast<VertexMask>(item % per_graph);
    Graph g(n);
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    g.set_neighbors(n - 1, neighborhood);
    Graph c = canonical_labeling(g);
    keyed[item] = {emit_graph6(c), std::move(c)};
  };
  if (execution == Execution::kParallel) {
    const long long count = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 64)
    for (long long item = 0; item < count; ++item) work(static_cast<std::size_t>(item));
  } else {
    for (std::size_t item = 0; item < total; ++item) work(item);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (std::size_t i = 0; i < keyed.size(); ++i)
    if (i == 0 || keyed[i].first != keyed[i - 1].first) out.push_back(std::move(keyed[i].second));
  return out;
}

}  // namespace

Graph canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalVertices) throw std::invalid_argument("graph too large to canonicalize");
  return Canonicalizer(g).run();
}

std::string canonical_form(const Graph& g) { return emit_graph6(canonical_labeling(g)); }

std::vector<Graph> enumerate_graphs(int n, Execution execution) {
  if (n < 0 || n > kMaxEnumeratedVertices) throw std::invalid_argument("cannot enumerate graphs on that many vertices");
  std::vector<Graph> level{Graph(0)};
  for (int m = 1; m <= n; ++m) level = extend_all(level, m, execution);
  return level;
}

}  // namespace cliquecover
