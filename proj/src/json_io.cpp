#include "cliquecover/json_io.hpp"

#include <limits>
#include <stdexcept>

#include "cliquecover/graph_io.hpp"

namespace cliquecover {

namespace {

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

Json vertices_json(const std::vector<int>& vs) { return Json(vs); }

}  // namespace

Json rational_json(const Rational& q) {
  return Json{{"num", integer_json(q.get_num())}, {"den", integer_json(q.get_den())}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("rational must be an object with num and den");
  Rational q(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

Json opt_result_json(const OptResult& r) {
  Json witness = Json::array();
  for (const auto& [clique, w] : r.witness.weights) witness.push_back(Json::array({vertices_json(clique.vertices), rational_json(w)}));
  return Json{{"mode", std::string(to_string(r.problem))},
              {"fractional", r.fractional},
              {"t", r.t},
              {"cost_kind", r.cost_name},
              {"value", rational_json(r.value)},
              {"witness", witness},
              {"certified", r.certified}};
}

Json trace_json(const SymmetrizationTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps)
    steps.push_back(Json{{"merge", Json::array({vertices_json(s.first), vertices_json(s.second)})},
                         {"direction", s.first_to_second ? "first_to_second" : "second_to_first"},
                         {"before", rational_json(s.before)},
                         {"after", rational_json(s.after)}});
  return Json{{"initial_graph6", emit_graph6(trace.initial)},
              {"initial_value", rational_json(trace.initial_value)},
              {"steps", steps},
              {"final_graph6", emit_graph6(trace.final_graph)},
              {"final_value", rational_json(trace.final_value)},
              {"final_parts", trace.final_parts.sizes}};
}

Json sweep_report_json(const SweepReport& report, bool include_wall_time) {
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back(Json{{"graph6", v.graph6},
                              {"n", v.n},
                              {"value", rational_json(v.value)},
                              {"bound", rational_json(v.bound)},
                              {"detail", v.detail}});
  Json gaps = Json::array();
  std::string csv = "n,max_gap,graph6\n";
  for (const auto& g : report.gaps) {
    gaps.push_back(Json{{"n", g.n}, {"max_gap", rational_json(g.gap)}, {"graph6", g.graph6}});
    csv += std::to_string(g.n) + "," + to_string(g.gap) + "," + g.graph6 + "\n";
  }
  Json out{{"predicate", report.predicate},
           {"n_min", report.n_min},
           {"n_max", report.n_max},
           {"t", report.t},
           {"cost_kind", report.cost_name},
           {"tested", report.tested},
           {"violations", violations},
           {"extremal", report.extremal},
           {"gaps", gaps}};
  if (!report.gaps.empty()) out["gaps_csv"] = csv;
  if (include_wall_time) out["wall_seconds"] = report.wall_seconds;
  return out;
}

Json subset_weighting_json(const SubsetWeighting& f) {
  Json out = Json::array();
  for (const auto& [s, w] : f.weights) {
    std::vector<int> members;
    for (int i : subset_members(s)) members.push_back(i + 1);
    out.push_back(Json{{"subset", members}, {"value", rational_json(w)}});
  }
  return out;
}

Json lp_solution_json(const LpSolution& s) {
  Json out{{"status", std::string(to_string(s.status))}};
  if (s.status != LpStatus::kOptimal) return out;
  Json primal = Json::array(), dual = Json::array();
  for (const auto& v : s.primal) primal.push_back(rational_json(v));
  for (const auto& v : s.dual) dual.push_back(rational_json(v));
  out["value"] = rational_json(s.value);
  out["primal"] = primal;
  out["dual"] = dual;
  out["pivots"] = s.pivots;
  return out;
}

Json hypergraph_json(const LinearHypergraph& h) { return Json{{"N", h.N}, {"R", h.R}, {"edges", h.edges}}; }

LinearHypergraph hypergraph_from_json(const Json& j) {
  LinearHypergraph h;
  try {
    h.N = j.at("N").get<int>();
    h.R = j.at("R").get<int>();
    h.edges = j.at("edges").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed hypergraph JSON: ") + e.what());
  }
  for (auto& e : h.edges) std::sort(e.begin(), e.end());
  validate_hypergraph(h);
  return h;
}

}  // namespace cliquecover
