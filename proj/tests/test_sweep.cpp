#include "cliquecover/json_io.hpp"
#include "cliquecover/sweep.hpp"
#include "doctest.h"

using namespace cliquecover;

namespace {

SweepReport run(const std::string& predicate, int n_max, int t = 2, Execution execution = Execution::kParallel) {
  SweepOptions o;
  o.predicate = predicate;
  o.n_max = n_max;
  o.t = t;
  o.execution = execution;
  return sweep(o);
}

}  // namespace

TEST_CASE("bound predicates hold on small graphs") {
  auto egp = run("egp_cover", 5);
  CHECK(egp.ok());
  CHECK(egp.tested == 1 + 2 + 4 + 11 + 34);
  std::vector<std::string> turan;
  for (int n = 1; n <= 5; ++n) turan.push_back(canonical_form(turan_graph(n, std::min(2, n))));
  CHECK(egp.extremal == turan);

  CHECK(run("erdos_conjecture", 5).ok());
  CHECK(run("gyori_kostochka", 5).ok());
  CHECK(run("egp_decomp_edge_triangle", 5).ok());
  auto dmp = run("dmp_t3", 5);
  CHECK(dmp.ok());
  CHECK(dmp.t == 3);
  CHECK(run("dmp_t", 5, 4).ok());
  CHECK(run("symmetrization_monotone", 4).ok());
}

TEST_CASE("chain and gap predicates") {
  for (int t = 2; t <= 3; ++t) CHECK(run("chain_inequalities", 5, t).ok());
  auto gap = run("frac_le_int", 5);
  CHECK(gap.ok());
  REQUIRE(gap.gaps.size() == 5);
  for (const auto& g : gap.gaps) CHECK(sgn(g.gap) >= 0);
  CHECK(gap.gaps[0].gap == 0);
}

TEST_CASE("violations are reported") {
  SweepOptions o;
  o.predicate = "egp_cover";
  o.n_max = 4;
  o.cost = CostVector::linear_i();
  auto report = sweep(o);
  CHECK_FALSE(report.ok());
  CHECK(report.cost_name == "i");
  for (std::size_t i = 1; i < report.violations.size(); ++i) {
    const auto& a = report.violations[i - 1];
    const auto& b = report.violations[i];
    CHECK(std::tie(a.n, a.graph6) <= std::tie(b.n, b.graph6));
  }
  CHECK_THROWS_AS(run("no_such_check", 3), std::invalid_argument);
  CHECK_THROWS_AS(run("egp_cover", 9), std::invalid_argument);
  CHECK(sweep_predicates().size() == 9);
}

TEST_CASE("serial and parallel sweeps agree byte for byte") {
  for (const char* p : {"egp_cover", "chain_inequalities", "frac_le_int"}) {
    auto a = sweep_report_json(run(p, 5, 2, Execution::kSerial), false).dump();
    auto b = sweep_report_json(run(p, 5, 2, Execution::kParallel), false).dump();
    CHECK(a == b);
  }
}

TEST_CASE("json serialization") {
  CHECK(rational_json(make_rational(3, 6)).dump() == R"({"num":1,"den":2})");
  Rational big = pow(Rational(10), 30);
  auto j = rational_json(big);
  CHECK(j["num"].is_string());
  CHECK(rational_from_json(j) == big);
  CHECK(rational_from_json(Json{{"num", -4}, {"den", 6}}) == make_rational(-2, 3));
  CHECK_THROWS_AS(rational_from_json(Json{{"num", 1}, {"den", 0}}), std::invalid_argument);

  auto r = integer_cover_number(complete_graph(3), 2, CostVector::ones());
  auto rj = opt_result_json(r);
  CHECK(rj["mode"] == "cover");
  CHECK(rj["witness"].dump() == R"([[[0,1,2],{"num":1,"den":1}]])");
  CHECK(rj["certified"] == true);

  LinearHypergraph h{5, 3, {{0, 1, 2}, {2, 3, 4}}};
  CHECK(hypergraph_from_json(hypergraph_json(h)).edges == h.edges);
  CHECK_THROWS_AS(hypergraph_from_json(Json{{"N", 3}}), std::invalid_argument);
  CHECK_THROWS_AS(hypergraph_from_json(Json{{"N", 3}, {"R", 2}, {"edges", {{0, 5}}}}), std::invalid_argument);

  SubsetWeighting f;
  f.k = 2;
  f.weights[0b11] = make_rational(1, 4);
  CHECK(subset_weighting_json(f).dump() == R"([{"subset":[1,2],"value":{"num":1,"den":4}}])");

  auto trace = symmetrize_to_multipartite(path_graph(4), 2, CostVector::ones(), Problem::kCover);
  auto tj = trace_json(trace);
  CHECK(tj["steps"].size() == trace.steps.size());
  CHECK(tj["final_parts"].size() == trace.final_parts.sizes.size());
}
