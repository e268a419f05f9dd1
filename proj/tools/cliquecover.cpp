#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cliquecover/canonical.hpp"
#include "cliquecover/constructions.hpp"
#include "cliquecover/cover.hpp"
#include "cliquecover/graph_io.hpp"
#include "cliquecover/json_io.hpp"
#include "cliquecover/lp.hpp"
#include "cliquecover/multipartite.hpp"
#include "cliquecover/sweep.hpp"
#include "cliquecover/symmetrize.hpp"

namespace cc = cliquecover;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct GraphSource {
  std::string graph6;
  std::string input;
};

struct Common {
  int t = 2;
  std::string cost = "ones";
  std::string json_out;
  GraphSource source;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<cc::Graph> load_graphs(const GraphSource& source) {
  if (!source.graph6.empty()) return {cc::parse_graph6(source.graph6)};
  std::string text;
  if (!source.input.empty() && source.input != "-") {
    text = read_file(source.input);
  } else {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  auto graphs = cc::parse_graph_corpus(text);
  if (graphs.empty()) throw std::invalid_argument("no graph in input");
  return graphs;
}

void emit(const cc::Json& j, const std::string& json_out) {
  if (json_out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(json_out);
  if (!out) throw std::invalid_argument("cannot write " + json_out);
  out << j.dump(2) << '\n';
}

void add_graph_options(CLI::App* app, GraphSource& source) {
  auto* g6 = app->add_option("--graph6", source.graph6, "Graph in graph6 format");
  app->add_option("--input", source.input, "File of graph6 lines or an edge list ('-' for stdin)")->excludes(g6);
}

void add_common(CLI::App* app, Common& common) {
  app->add_option("--t", common.t, "Target clique size")->check(CLI::PositiveNumber);
  app->add_option("--cost", common.cost, "ones, i, i-1, edge-triangle or file:PATH");
  app->add_option("--json-out", common.json_out, "Write JSON here instead of stdout");
}

cc::Json single_or_array(std::vector<cc::Json> items) {
  if (items.size() == 1) return std::move(items.front());
  cc::Json arr = cc::Json::array();
  for (auto& item : items) arr.push_back(std::move(item));
  return arr;
}

std::vector<cc::Rational> parse_rational_list(const std::string& text) {
  std::vector<cc::Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(cc::parse_rational(item));
  return out;
}

cc::PartSizes parse_parts(const std::string& text) {
  cc::PartSizes parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.sizes.push_back(std::stoi(item));
  return parts;
}

cc::Json rational_list_json(const std::vector<cc::Rational>& values) {
  cc::Json arr = cc::Json::array();
  for (const auto& v : values) arr.push_back(cc::rational_json(v));
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact clique cover, decomposition and packing numbers"};
  app.require_subcommand(1);

  Common common;

  auto* compute = app.add_subcommand("compute", "Optimize one graph or every graph of a corpus");
  std::string mode = "cover";
  bool fractional = false;
  compute->add_option("--mode", mode, "cover, decomp or packing")
      ->check(CLI::IsMember({"cover", "decomp", "decomposition", "packing"}));
  compute->add_flag("--frac", fractional, "Solve the LP relaxation");
  add_common(compute, common);
  add_graph_options(compute, common.source);

  auto* sweep_cmd = app.add_subcommand("sweep", "Check a predicate on every graph up to isomorphism");
  cc::SweepOptions sweep_options;
  bool serial = false;
  bool cost_given = false;
  sweep_cmd->add_option("--predicate", sweep_options.predicate, "Predicate name")
      ->required()
      ->check(CLI::IsMember(cc::sweep_predicates()));
  sweep_cmd->add_option("--nmin", sweep_options.n_min, "Smallest order");
  sweep_cmd->add_option("--nmax", sweep_options.n_max, "Largest order");
  sweep_cmd->add_option("--jobs", sweep_options.jobs, "Worker threads (0 = default)")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_flag("--serial", serial, "Run on one thread without OpenMP");
  sweep_cmd->add_flag("--no-time", "Omit wall_seconds from the report");
  add_common(sweep_cmd, common);
  sweep_cmd->get_option("--cost")->each([&](const std::string&) { cost_given = true; });

  auto* sym = app.add_subcommand("symmetrize", "Symmetrize to a complete multipartite graph");
  std::string sym_mode = "cover";
  sym->add_option("--mode", sym_mode, "cover or decomp")->check(CLI::IsMember({"cover", "decomp", "decomposition"}));
  add_common(sym, common);
  add_graph_options(sym, common.source);

  auto* construct = app.add_subcommand("construct", "Print a constructed graph as graph6");
  construct->require_subcommand(1);
  std::uint64_t seed = 1;
  int n = 0, k = 2, big_n = 0, r = 3;
  std::string parts_text, hypergraph_path, gadget;
  auto* c_gap = construct->add_subcommand("gap", "Two disjoint halves joined by a perfect matching complement");
  c_gap->add_option("--n", n, "Even order")->required();
  auto* c_turan = construct->add_subcommand("turan", "Turan graph T(n,k)");
  c_turan->add_option("--n", n)->required();
  c_turan->add_option("--k", k)->required();
  auto* c_multi = construct->add_subcommand("multipartite", "Complete multipartite graph");
  c_multi->add_option("--parts", parts_text, "Comma-separated part sizes")->required();
  auto* c_pack = construct->add_subcommand("packing", "Packing gadget");
  c_pack->add_option("--R", r)->required();
  c_pack->add_option("--t", common.t)->required();
  auto* c_hyper = construct->add_subcommand("hypergraph", "Seeded greedy linear triangle-free hypergraph (JSON)");
  c_hyper->add_option("--N", big_n)->required();
  c_hyper->add_option("--R", r)->required();
  c_hyper->add_option("--seed", seed);
  c_hyper->add_option("--json-out", common.json_out);
  auto* c_compose = construct->add_subcommand("compose", "Place a gadget on every hyperedge");
  c_compose->add_option("--hypergraph", hypergraph_path, "Hypergraph JSON file")->required();
  c_compose->add_option("--gadget", gadget, "Gadget graph6")->required();

  auto* lp_cmd = app.add_subcommand("lp", "Solve a subset LP or an LP text file");
  std::string program_name;
  std::string x_text;
  bool dump = false;
  lp_cmd->add_option("program", program_name, "cclp, cdlp, ccdual or cddual")
      ->check(CLI::IsMember({"cclp", "cdlp", "ccdual", "cddual"}));
  auto* x_opt = lp_cmd->add_option("--x", x_text, "Comma-separated part fractions");
  lp_cmd->add_option("--input", common.source.input, "LP text file")->excludes(x_opt);
  lp_cmd->add_flag("--dump", dump, "Print the LP text instead of solving");
  add_common(lp_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*compute) {
      auto problem = cc::parse_problem(mode);
      auto cost = cc::CostVector::from_spec(common.cost);
      std::vector<cc::Json> results;
      for (const auto& g : load_graphs(common.source)) {
        cc::Json j{{"graph6", cc::emit_graph6(g)}};
        j.update(cc::opt_result_json(cc::optimize(g, common.t, cost, problem, fractional)));
        results.push_back(std::move(j));
      }
      emit(single_or_array(std::move(results)), common.json_out);
      return 0;
    }
    if (*sweep_cmd) {
      sweep_options.t = common.t;
      if (cost_given) sweep_options.cost = cc::CostVector::from_spec(common.cost);
      sweep_options.execution = serial ? cc::Execution::kSerial : cc::Execution::kParallel;
      auto report = cc::sweep(sweep_options);
      emit(cc::sweep_report_json(report, sweep_cmd->count("--no-time") == 0), common.json_out);
      return report.ok() ? 0 : kExitViolation;
    }
    if (*sym) {
      auto problem = cc::parse_problem(sym_mode);
      auto cost = cc::CostVector::from_spec(common.cost);
      std::vector<cc::Json> results;
      for (const auto& g : load_graphs(common.source))
        results.push_back(cc::trace_json(cc::symmetrize_to_multipartite(g, common.t, cost, problem)));
      emit(single_or_array(std::move(results)), common.json_out);
      return 0;
    }
    if (*construct) {
      if (*c_hyper) {
        emit(cc::hypergraph_json(cc::greedy_linear_triangle_free(big_n, r, seed)), common.json_out);
        return 0;
      }
      cc::Graph g;
      if (*c_gap) g = cc::gap_graph(n);
      if (*c_turan) g = cc::turan_graph(n, k);
      if (*c_multi) g = cc::complete_multipartite(parse_parts(parts_text));
      if (*c_pack) g = cc::packing_gadget(r, common.t);
      if (*c_compose) {
        auto h = cc::hypergraph_from_json(cc::Json::parse(read_file(hypergraph_path)));
        g = cc::compose(h, cc::parse_graph6(gadget));
      }
      std::cout << cc::emit_graph6(g) << '\n';
      return 0;
    }
    if (*lp_cmd) {
      if (program_name.empty()) {
        if (common.source.input.empty()) throw CLI::ValidationError("lp", "a program name or --input is required");
        auto lp = cc::parse_lp_text(read_file(common.source.input));
        if (dump) {
          std::cout << cc::write_lp_text(lp);
          return 0;
        }
        auto solution = cc::solve_lp(lp);
        auto j = cc::lp_solution_json(solution);
        j["certified"] = solution.status == cc::LpStatus::kOptimal && cc::check_certificate(lp, solution).valid();
        emit(j, common.json_out);
        return 0;
      }
      if (x_text.empty()) throw CLI::ValidationError("lp", "--x is required with a program name");
      cc::FractionVector x(parse_rational_list(x_text));
      auto cost = cc::CostVector::from_spec(common.cost);
      cc::SubsetProgram program;
      if (program_name == "cclp") program = cc::build_cclp(x, common.t, cost);
      if (program_name == "cdlp") program = cc::build_cdlp(x, common.t, cost);
      if (program_name == "ccdual") program = cc::build_cc_dual(x, common.t, cost);
      if (program_name == "cddual") program = cc::build_cd_dual(x, common.t, cost);
      if (dump) {
        std::cout << cc::write_lp_text(program.program);
        return 0;
      }
      auto solution = cc::solve_lp(program.program);
      cc::Json j{{"program", program_name},
                 {"x", rational_list_json(x.values())},
                 {"t", common.t},
                 {"cost_kind", cost.name()},
                 {"status", std::string(cc::to_string(solution.status))}};
      if (solution.status == cc::LpStatus::kOptimal) {
        j["value"] = cc::rational_json(solution.value);
        j["weights"] = cc::subset_weighting_json(cc::weighting_from_solution(program, solution, x.k()));
        j["certified"] = cc::check_certificate(program.program, solution).valid();
      }
      emit(j, common.json_out);
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
