#include <numeric>
#include <random>
#include <set>

#include "cliquecover/canonical.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cliquecover;
using cliquecover::testing::graph_from_code;

TEST_CASE("canonical forms separate isomorphism classes") {
  Graph a(3);
  a.add_edge(0, 1);
  a.add_edge(1, 2);
  Graph b(3);
  b.add_edge(0, 2);
  b.add_edge(2, 1);
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(canonical_form(cycle_graph(4)) != canonical_form(path_graph(4)));
  CHECK(canonical_form(Graph(0)) == canonical_form(Graph(0)));
  CHECK_THROWS_AS(canonical_form(Graph(11)), std::invalid_argument);

  std::set<std::string> keys;
  for (std::uint64_t code = 0; code < 1024; ++code) keys.insert(canonical_form(graph_from_code(5, code)));
  CHECK(keys.size() == 34);
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 10);
    Graph g = cliquecover::testing::random_graph(n, rng, 0.1 + 0.1 * static_cast<double>(rng() % 8));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = relabel(g, perm);
    CHECK(canonical_form(g) == canonical_form(h));
    Graph c = canonical_labeling(g);
    CHECK(c.edge_count() == g.edge_count());
    if (n <= 7) CHECK(cliquecover::testing::isomorphic(c, g));
  }
  // Regular graphs give the refinement nothing to work with.
  for (int n = 3; n <= 10; ++n) {
    Graph c = cycle_graph(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.rbegin(), perm.rend(), 0);
    std::swap(perm[0], perm[1]);
    CHECK(canonical_form(relabel(c, perm)) == canonical_form(c));
  }
  CHECK(canonical_form(disjoint_union(cycle_graph(3), cycle_graph(3))) != canonical_form(cycle_graph(6)));
}

TEST_CASE("graph enumeration counts") {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) {
    auto graphs = enumerate_graphs(n, Execution::kSerial);
    CHECK(graphs.size() == expected[n]);
    std::set<std::string> keys;
    for (const auto& g : graphs) {
      CHECK(g.order() == n);
      keys.insert(canonical_form(g));
    }
    CHECK(keys.size() == graphs.size());
  }
  auto serial = enumerate_graphs(6, Execution::kSerial);
  auto parallel = enumerate_graphs(6, Execution::kParallel);
  CHECK(serial == parallel);
  CHECK_THROWS_AS(enumerate_graphs(9), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs(-1), std::invalid_argument);
}
