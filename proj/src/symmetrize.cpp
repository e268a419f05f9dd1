#include "cliquecover/symmetrize.hpp"

#include <stdexcept>

namespace cliquecover {

namespace {

bool pairwise_clones(const Graph& g, VertexMask s) {
  const auto members = mask_to_vertices(s);
  for (int v : members)
    if (g.neighbors(v) != g.neighbors(members.front())) return false;
  return true;
}

VertexMask to_mask(const std::vector<int>& vs) {
  VertexMask m = 0;
  for (int v : vs) m |= VertexMask{1} << v;
  return m;
}

std::optional<StepOutcome> step_from(const Graph& g, const Rational& before, int t, const CostVector& c,
                                     Problem problem) {
  const auto classes = clone_classes(g);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (g.adjacent(classes[i].front(), classes[j].front())) continue;
      const VertexMask a = to_mask(classes[i]);
      const VertexMask b = to_mask(classes[j]);
      Graph forward = symmetrize_classes(g, a, b);
      Graph backward = symmetrize_classes(g, b, a);
      Rational fv, bv;
#pragma omp parallel sections
      {
#pragma omp section
        fv = symmetrization_value(forward, t, c, problem);
#pragma omp section
        bv = symmetrization_value(backward, t, c, problem);
      }
      bool first_to_second;
      if (fv != bv)
        first_to_second = fv > bv;
      else
        first_to_second = classes[i].size() <= classes[j].size();
      StepOutcome out{first_to_second ? std::move(forward) : std::move(backward),
                      SymmetrizationStep{classes[i], classes[j], first_to_second, before, first_to_second ? fv : bv}};
      return out;
    }
  return std::nullopt;
}

}  // namespace

Graph symmetrize_classes(const Graph& g, VertexMask u, VertexMask v) {
  const VertexMask all = g.all_vertices();
  if (u == 0 || v == 0) throw std::invalid_argument("symmetrized classes must be nonempty");
  if ((u | v) & ~all) throw std::invalid_argument("class contains a vertex outside the graph");
  if (u & v) throw std::invalid_argument("symmetrized classes must be disjoint");
  if (!pairwise_clones(g, u) || !pairwise_clones(g, v))
    throw std::invalid_argument("symmetrized set is not a set of clones");
  for (int x : mask_to_vertices(u))
    if (g.neighbors(x) & v) throw std::invalid_argument("symmetrized classes are adjacent");
  Graph out = g;
  const VertexMask target = g.neighbors(mask_to_vertices(v).front());
  for (int x : mask_to_vertices(u)) out.set_neighbors(x, target);
  return out;
}

Rational symmetrization_value(const Graph& g, int t, const CostVector& c, Problem problem) {
  switch (problem) {
    case Problem::kCover: return fractional_cover_number(g, t, c).value;
    case Problem::kDecomposition: return fractional_decomposition_number(g, t, c).value;
    case Problem::kPacking: break;
  }
  throw std::invalid_argument("symmetrization applies to cover and decomposition only");
}

std::optional<StepOutcome> symmetrize_step(const Graph& g, int t, const CostVector& c, Problem problem) {
  return step_from(g, symmetrization_value(g, t, c, problem), t, c, problem);
}

SymmetrizationTrace symmetrize_to_multipartite(const Graph& g, int t, const CostVector& c, Problem problem) {
  SymmetrizationTrace trace;
  trace.initial = g;
  trace.initial_value = symmetrization_value(g, t, c, problem);
  Graph current = g;
  Rational value = trace.initial_value;
  while (auto next = step_from(current, value, t, c, problem)) {
    value = next->step.after;
    current = std::move(next->graph);
    trace.steps.push_back(std::move(next->step));
  }
  trace.final_graph = current;
  trace.final_value = value;
  trace.final_parts = multipartite_parts(current);
  return trace;
}

}  // namespace cliquecover
