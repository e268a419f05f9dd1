#include "cliquecover/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace cliquecover {

namespace {

int common(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

bool share_all_three(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c) {
  for (int v : a)
    if (std::binary_search(b.begin(), b.end(), v) && std::binary_search(c.begin(), c.end(), v)) return true;
  return false;
}

// Whether adding `e` keeps h linear and triangle-free, assuming h already is.
bool fits(const LinearHypergraph& h, const std::vector<int>& e) {
  std::vector<const std::vector<int>*> meeting;
  for (const auto& f : h.edges) {
    const int k = common(e, f);
    if (k > 1) return false;
    if (k == 1) meeting.push_back(&f);
  }
  for (std::size_t i = 0; i < meeting.size(); ++i)
    for (std::size_t j = i + 1; j < meeting.size(); ++j)
      if (common(*meeting[i], *meeting[j]) > 0 && !share_all_three(e, *meeting[i], *meeting[j])) return false;
  return true;
}

double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

void validate_hypergraph(const LinearHypergraph& h) {
  if (h.N < 0 || h.N > Graph::kMaxVertices) throw std::invalid_argument("hypergraph vertex count out of range");
  for (const auto& e : h.edges) {
    if (static_cast<int>(e.size()) != h.R) throw std::invalid_argument("hyperedge size differs from R");
    if (!std::is_sorted(e.begin(), e.end()) || std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("hyperedge vertices must be sorted and distinct");
    if (!e.empty() && (e.front() < 0 || e.back() >= h.N)) throw std::invalid_argument("hyperedge vertex out of range");
  }
}

bool is_linear(const LinearHypergraph& h) {
  for (std::size_t i = 0; i < h.edges.size(); ++i)
    for (std::size_t j = i + 1; j < h.edges.size(); ++j)
      if (common(h.edges[i], h.edges[j]) > 1) return false;
  return true;
}

bool is_triangle_free(const LinearHypergraph& h) {
  const auto& e = h.edges;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (common(e[i], e[j]) == 0) continue;
      for (std::size_t k = j + 1; k < e.size(); ++k)
        if (common(e[i], e[k]) > 0 && common(e[j], e[k]) > 0 && !share_all_three(e[i], e[j], e[k])) return false;
    }
  return true;
}

Graph gap_graph(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("gap graph needs a positive even vertex count");
  return complete_multipartite(PartSizes{std::vector<int>(static_cast<std::size_t>(n / 2), 2)});
}

int gap_lower_bound(int t, int n) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  if (n < 2 * t) throw std::invalid_argument("gap bound needs n >= 2t");
  int k = 0;
  while (static_cast<long long>(t) << (k + 1) <= n) ++k;
  return k;
}

LinearHypergraph greedy_linear_triangle_free(int N, int R, std::uint64_t seed) {
  if (R < 2 || N < R) throw std::invalid_argument("need N >= R >= 2");
  if (N > Graph::kMaxVertices) throw std::invalid_argument("too many vertices");
  if (binomial(N, R) > 2e6) throw std::invalid_argument("too many candidate R-sets to scan");
  std::vector<std::vector<int>> candidates;
  std::vector<int> pick(static_cast<std::size_t>(R));
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    candidates.push_back(pick);
    int i = R - 1;
    while (i >= 0 && pick[i] == N - R + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < R; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::mt19937_64 rng(seed);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  LinearHypergraph h{N, R, {}};
  for (auto& e : candidates)
    if (fits(h, e)) h.edges.push_back(std::move(e));
  return h;
}

Graph compose(const LinearHypergraph& h, const Graph& gadget) {
  validate_hypergraph(h);
  if (gadget.order() != h.R) throw std::invalid_argument("gadget must have exactly R vertices");
  Graph g(h.N);
  for (const auto& e : h.edges)
    for (auto [u, v] : gadget.edges()) g.add_edge(e[u], e[v]);
  return g;
}

Graph packing_gadget(int R, int t) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  if (R < 1 || R % (t + 1) != 0) throw std::invalid_argument("t+1 must divide R");
  Graph g(R);
  for (int base = 0; base < R; base += t + 1)
    for (int u = base; u < base + t + 1; ++u)
      for (int v = u + 1; v < base + t + 1; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace cliquecover
