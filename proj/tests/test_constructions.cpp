#include <set>

#include "cliquecover/constructions.hpp"
#include "cliquecover/cover.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cliquecover;

namespace {

std::set<int> as_set(const std::vector<int>& e) { return {e.begin(), e.end()}; }

std::set<int> meet(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  for (int v : a)
    if (b.count(v)) out.insert(v);
  return out;
}

// Independent checks on std::set intersections.
bool oracle_linear(const LinearHypergraph& h) {
  for (std::size_t i = 0; i < h.edges.size(); ++i)
    for (std::size_t j = 0; j < h.edges.size(); ++j)
      if (i != j && meet(as_set(h.edges[i]), as_set(h.edges[j])).size() > 1) return false;
  return true;
}

bool oracle_triangle_free(const LinearHypergraph& h) {
  const std::size_t m = h.edges.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        if (i == j || j == k || i == k) continue;
        auto a = as_set(h.edges[i]), b = as_set(h.edges[j]), c = as_set(h.edges[k]);
        auto ab = meet(a, b), bc = meet(b, c), ac = meet(a, c);
        if (ab.empty() || bc.empty() || ac.empty()) continue;
        if (meet(ab, c).empty()) return false;
      }
  return true;
}

LinearHypergraph two_edges_disjoint(int R) {
  LinearHypergraph h{2 * R, R, {}};
  std::vector<int> a, b;
  for (int i = 0; i < R; ++i) {
    a.push_back(i);
    b.push_back(R + i);
  }
  h.edges = {a, b};
  return h;
}

}  // namespace

TEST_CASE("gap graphs") {
  CHECK(cliquecover::testing::isomorphic(gap_graph(4), cycle_graph(4)));
  CHECK(gap_graph(6) == turan_graph(6, 3));
  CHECK_THROWS_AS(gap_graph(5), std::invalid_argument);
  CHECK_THROWS_AS(gap_graph(0), std::invalid_argument);
  auto ones = CostVector::ones();
  for (int n : {4, 6, 8}) CHECK(fractional_cover_number(gap_graph(n), 2, ones).value == 4);
  CHECK(fractional_cover_number(gap_graph(6), 3, ones).value == 8);

  CHECK(gap_lower_bound(2, 8) == 2);
  CHECK(gap_lower_bound(2, 16) == 3);
  CHECK(gap_lower_bound(2, 4) == 1);
  CHECK(gap_lower_bound(3, 11) == 1);
  CHECK(gap_lower_bound(3, 12) == 2);
  CHECK_THROWS_AS(gap_lower_bound(2, 3), std::invalid_argument);
  for (int n = 4; n <= 10; n += 2)
    CHECK(integer_cover_number(gap_graph(n), 2, ones).value > gap_lower_bound(2, n));
}

TEST_CASE("hypergraph checkers") {
  LinearHypergraph h{6, 3, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}};
  CHECK(is_linear(h));
  CHECK_FALSE(is_triangle_free(h));
  CHECK(oracle_linear(h));
  CHECK_FALSE(oracle_triangle_free(h));
  LinearHypergraph star{7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}};
  CHECK(is_triangle_free(star));
  LinearHypergraph overlap{4, 3, {{0, 1, 2}, {1, 2, 3}}};
  CHECK_FALSE(is_linear(overlap));
  CHECK_THROWS_AS(validate_hypergraph(LinearHypergraph{3, 3, {{0, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_hypergraph(LinearHypergraph{3, 2, {{1, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_hypergraph(LinearHypergraph{3, 2, {{1, 3}}}), std::invalid_argument);
}

TEST_CASE("greedy linear triangle-free hypergraphs") {
  auto single = greedy_linear_triangle_free(4, 4, 9);
  REQUIRE(single.edges.size() == 1);
  CHECK(single.edges[0] == std::vector<int>{0, 1, 2, 3});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (auto [N, R] : {std::pair{8, 2}, {10, 2}, {9, 3}, {12, 3}, {13, 4}, {16, 4}}) {
      auto h = greedy_linear_triangle_free(N, R, seed);
      CHECK(h.N == N);
      CHECK(h.R == R);
      CHECK_FALSE(h.edges.empty());
      CHECK(oracle_linear(h));
      CHECK(oracle_triangle_free(h));
      CHECK(is_linear(h));
      CHECK(is_triangle_free(h));
      if (R == 2) CHECK(clique_number(compose(h, complete_graph(2))) <= 2);
    }
  }
  auto a = greedy_linear_triangle_free(12, 3, 5);
  auto b = greedy_linear_triangle_free(12, 3, 5);
  CHECK(a.edges == b.edges);
  CHECK_THROWS_AS(greedy_linear_triangle_free(3, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(greedy_linear_triangle_free(60, 8, 0), std::invalid_argument);
}

TEST_CASE("composition") {
  LinearHypergraph one{5, 3, {{1, 3, 4}}};
  Graph p3 = path_graph(3);
  Graph g = compose(one, p3);
  Graph expected(5);
  expected.add_edge(1, 3);
  expected.add_edge(3, 4);
  CHECK(g == expected);

  CHECK(compose(two_edges_disjoint(4), complete_graph(4)) ==
        disjoint_union(complete_graph(4), complete_graph(4)));
  CHECK_THROWS_AS(compose(one, complete_graph(4)), std::invalid_argument);

  auto ones = CostVector::ones();
  const Graph gadgets3[] = {complete_graph(3), path_graph(3)};
  const Graph gadgets4[] = {complete_graph(4), cycle_graph(4), packing_gadget(4, 3), gap_graph(4), path_graph(4)};
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    for (int R : {3, 4}) {
      auto h = greedy_linear_triangle_free(R == 3 ? 9 : 10, R, seed);
      const Rational m = static_cast<long>(h.edges.size());
      for (const Graph& gadget : R == 3 ? std::vector<Graph>(std::begin(gadgets3), std::end(gadgets3))
                                        : std::vector<Graph>(std::begin(gadgets4), std::end(gadgets4))) {
        Graph composed = compose(h, gadget);
        // Each edge and each clique lies inside exactly one placed copy.
        for (const auto& clique : enumerate_cliques(composed, 2)) {
          int hosts = 0;
          for (const auto& e : h.edges) {
            bool inside = true;
            for (int v : clique.vertices) inside = inside && std::binary_search(e.begin(), e.end(), v);
            hosts += inside ? 1 : 0;
          }
          CHECK(hosts == 1);
        }
        CHECK(composed.edge_count() == h.edges.size() * gadget.edge_count());
        CHECK(integer_cover_number(composed, 2, ones).value == m * integer_cover_number(gadget, 2, ones).value);
        CHECK(fractional_cover_number(composed, 2, ones).value ==
              m * fractional_cover_number(gadget, 2, ones).value);
        const int t = R == 4 ? 3 : 2;
        CHECK(integer_packing_number(composed, t).value == m * integer_packing_number(gadget, t).value);
        CHECK(fractional_packing_number(composed, t).value == m * fractional_packing_number(gadget, t).value);
      }
    }
  }
}

TEST_CASE("packing gadgets") {
  CHECK(packing_gadget(4, 3) == complete_graph(4));
  CHECK(packing_gadget(8, 3) == disjoint_union(complete_graph(4), complete_graph(4)));
  CHECK_THROWS_AS(packing_gadget(6, 3), std::invalid_argument);
  CHECK_THROWS_AS(packing_gadget(4, 1), std::invalid_argument);
  for (auto [R, t] : {std::pair{4, 3}, {8, 3}, {5, 4}}) {
    Graph g = packing_gadget(R, t);
    auto frac = fractional_packing_number(g, t).value;
    auto whole = integer_packing_number(g, t).value;
    CHECK(frac / whole == make_rational(t + 1, t - 1));
    CHECK(frac == make_rational(t + 1, t - 1) * make_rational(R, t + 1));
  }
}
