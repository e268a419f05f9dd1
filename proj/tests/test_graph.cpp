#include <algorithm>
#include <random>

#include "cliquecover/graph.hpp"
#include "cliquecover/graph_io.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cliquecover;
using cliquecover::testing::count_t_cliques_by_subsets;
using cliquecover::testing::random_graph;

TEST_CASE("graph6 decodes hand-worked lines") {
  // 'D' = 68 -> n = 5; bits 000000 111100 set x(0,4), x(1,4), x(2,4), x(3,4).
  Graph star = parse_graph6("D?{");
  CHECK(star.order() == 5);
  CHECK(star.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(star.adjacent(v, 4));

  Graph single = parse_graph6("@");
  CHECK(single.order() == 1);
  CHECK(single.edge_count() == 0);

  Graph k2 = parse_graph6("A_");
  CHECK(k2 == complete_graph(2));
  CHECK(parse_graph6(">>graph6<<A_\n") == k2);
}

TEST_CASE("graph6 encodes hand-worked graphs") {
  CHECK(emit_graph6(complete_graph(2)) == "A_");
  CHECK(emit_graph6(Graph(1)) == "@");
  CHECK(emit_graph6(Graph(0)) == "?");
  CHECK_THROWS_AS(emit_graph6(Graph(63)), std::invalid_argument);
}

TEST_CASE("graph6 errors report byte offsets") {
  auto offset_of = [](std::string_view s) -> std::size_t {
    try {
      parse_graph6(s);
    } catch (const Graph6Error& e) {
      return e.offset();
    }
    return 999;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("A_x") == 2);    // trailing garbage
  CHECK(offset_of("D? ") == 2);    // byte 32 outside [63,126]
  CHECK(offset_of("D?") == 2);     // truncated
  CHECK(offset_of("A`") == 1);     // padding bit set
  CHECK(offset_of("~~??????") == 0);
  CHECK(offset_of("~??") == 3);    // truncated long prefix
}

TEST_CASE("graph6 round-trips random graphs") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 1000; ++iter) {
    int n = static_cast<int>(rng() % 11);
    Graph g = random_graph(n, rng, 0.4);
    auto line = emit_graph6(g);
    REQUIRE(parse_graph6(line) == g);
    CHECK(emit_graph6(parse_graph6(line)) == line);
  }
  // long-form prefix: 63 vertices
  Graph big(63);
  big.add_edge(0, 62);
  std::string line = "~??~";
  std::size_t bits = 63 * 62 / 2;
  std::string body((bits + 5) / 6, '?');
  // x(0,62) is bit index 61*62/2 = 1891
  std::size_t k = 62 * 61 / 2;
  body[k / 6] = static_cast<char>(63 + (1 << (5 - k % 6)));
  CHECK(parse_graph6(line + body) == big);
}

TEST_CASE("edge list and corpus parsing") {
  Graph g = parse_edge_list("# path\n0 1\n1 2\n");
  CHECK(g == path_graph(3));
  Graph h = parse_edge_list("5\n0 1\n");
  CHECK(h.order() == 5);
  CHECK(h.edge_count() == 1);
  CHECK_THROWS_AS(parse_edge_list("2\n0 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("0 x\n"), std::invalid_argument);

  auto corpus = parse_graph_corpus("A_\n@\n\n");
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0] == complete_graph(2));
  auto edge_corpus = parse_graph_corpus("0 1\n1 2\n2 0\n");
  REQUIRE(edge_corpus.size() == 1);
  CHECK(edge_corpus[0] == complete_graph(3));
}

TEST_CASE("Turan and multipartite constructions") {
  Graph c4 = turan_graph(4, 2);
  CHECK(c4.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

  Graph t63 = turan_graph(6, 3);
  CHECK(t63.edge_count() == 12);
  CHECK(enumerate_t_cliques(t63, 3).size() == 8);
  CHECK(count_t_cliques_by_subsets(t63, 3) == 8);
  CHECK(turan_graph(5, 5) == complete_graph(5));
  CHECK(complete_multipartite({{2, 2, 2}}) == t63);
  CHECK(complete_multipartite({{2, 4}}).edge_count() == 8);
  CHECK(complete_multipartite({{1, 1, 4}}).edge_count() == 1 + 4 + 4);

  CHECK_THROWS_AS(turan_graph(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(turan_graph(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(complete_multipartite({}), std::invalid_argument);

  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= n; ++k) {
      auto parts = turan_parts(n, k);
      auto [lo, hi] = std::minmax_element(parts.sizes.begin(), parts.sizes.end());
      CHECK(*hi - *lo <= 1);
      CHECK(clique_number(turan_graph(n, k)) == k);
    }
}

TEST_CASE("clique enumeration") {
  auto c5 = enumerate_cliques(cycle_graph(5), 2);
  CHECK(c5.size() == 5);
  for (const auto& c : c5) CHECK(c.size() == 2);

  // sum_{i>=2} C(4,i) = 6 + 4 + 1
  auto k4 = enumerate_cliques(complete_graph(4), 2);
  CHECK(k4.size() == 11);
  CHECK(std::is_sorted(k4.begin(), k4.end()));
  CHECK(k4.front().vertices == std::vector<int>{0, 1});
  CHECK(k4[1].vertices == std::vector<int>{0, 1, 2});

  CHECK(enumerate_cliques(Graph(3), 2).empty());
  CHECK(enumerate_t_cliques(complete_graph(4), 2).size() == 6);
  CHECK(enumerate_t_cliques(cycle_graph(5), 3).empty());
  CHECK(enumerate_cliques(complete_graph(4), 2, 3).size() == 10);
}

TEST_CASE("t-clique counts match subset scan") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, rng, 0.6);
    for (int t = 1; t <= n; ++t) {
      auto cliques = enumerate_t_cliques(g, t);
      REQUIRE(cliques.size() == count_t_cliques_by_subsets(g, t));
      for (const auto& c : cliques) CHECK(g.is_clique(c.mask()));
    }
  }
}

TEST_CASE("clone classes") {
  auto k24 = clone_classes(complete_multipartite({{2, 4}}));
  REQUIRE(k24.size() == 2);
  CHECK(k24[0].size() == 2);
  CHECK(k24[1].size() == 4);
  CHECK(clone_classes(complete_graph(3)).size() == 3);
  auto p3 = clone_classes(path_graph(3));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0] == std::vector<int>{0, 2});
  CHECK(p3[1] == std::vector<int>{1});

  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 200; ++iter) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 8), rng, 0.5);
    auto classes = clone_classes(g);
    std::vector<int> seen;
    for (const auto& cls : classes) {
      for (int u : cls) {
        seen.push_back(u);
        for (int v : cls) {
          if (u == v) continue;
          CHECK_FALSE(g.adjacent(u, v));
          CHECK(g.neighbors(u) == g.neighbors(v));
        }
      }
    }
    std::sort(seen.begin(), seen.end());
    CHECK(seen.size() == static_cast<std::size_t>(g.order()));
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  }
}

TEST_CASE("clique number and multipartite detection") {
  CHECK(clique_number(complete_graph(5)) == 5);
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(turan_graph(6, 3)) == 3);
  CHECK(clique_number(Graph(0)) == 0);
  CHECK(is_complete_multipartite(turan_graph(7, 3)));
  CHECK(is_complete_multipartite(Graph(4)));
  CHECK_FALSE(is_complete_multipartite(path_graph(4)));
  CHECK(multipartite_parts(complete_multipartite({{1, 1, 4}})).sizes == std::vector<int>{1, 1, 4});
}

TEST_CASE("bounded clique subgraph") {
  Graph k8 = complete_graph(8);
  Graph reduced = bounded_clique_subgraph(k8, 2);
  CHECK(reduced == turan_graph(8, 2));
  CHECK(k8.edge_count() - reduced.edge_count() == 12);
  CHECK(clique_number(reduced) <= 2);

  Graph c5 = cycle_graph(5);
  Graph c5b = bounded_clique_subgraph(c5, 4);
  // T_{5,4} misses only the pair {0,1}, which is an edge of C_5
  CHECK(c5.edge_count() - c5b.edge_count() == 1);
  CHECK(4 * (c5.edge_count() - c5b.edge_count()) <= 25);
  CHECK(bounded_clique_subgraph(Graph(0), 3) == Graph(0));
  CHECK(bounded_clique_subgraph(Graph(4), 3) == Graph(4));
  CHECK_THROWS_AS(bounded_clique_subgraph(c5, 1), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    int b = 2 + static_cast<int>(rng() % 3);
    int n = 1 + static_cast<int>(rng() % 16);
    Graph g = random_graph(n, rng, 0.8);
    Graph sub = bounded_clique_subgraph(g, b);
    CHECK(sub.is_subgraph_of(g));
    CHECK(clique_number(sub) <= b);
    if (n >= 4 * b) CHECK(static_cast<long>(b) * static_cast<long>(g.edge_count() - sub.edge_count()) <= n * n);
  }
}
