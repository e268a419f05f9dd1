#include "cliquecover/cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace cliquecover {

std::string_view to_string(Problem problem) {
  switch (problem) {
    case Problem::kCover: return "cover";
    case Problem::kDecomposition: return "decomposition";
    case Problem::kPacking: return "packing";
  }
  return "unknown";
}

Problem parse_problem(std::string_view name) {
  if (name == "cover") return Problem::kCover;
  if (name == "decomp" || name == "decomposition") return Problem::kDecomposition;
  if (name == "packing" || name == "pack") return Problem::kPacking;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

Rational CliqueWeighting::cost(const CostVector& c) const {
  Rational total = 0;
  for (const auto& [clique, w] : weights)
    if (sgn(w) != 0) total += c.at(static_cast<int>(clique.size())) * w;
  return total;
}

Rational CliqueWeighting::total() const {
  Rational sum = 0;
  for (const auto& [clique, w] : weights) sum += w;
  return sum;
}

namespace {

void for_each_subset(const std::vector<int>& items, int size, const std::function<void(VertexMask)>& fn) {
  std::vector<int> pick(static_cast<std::size_t>(size));
  std::iota(pick.begin(), pick.end(), 0);
  const int n = static_cast<int>(items.size());
  if (size > n) return;
  for (;;) {
    VertexMask m = 0;
    for (int i : pick) m |= VertexMask{1} << items[i];
    fn(m);
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Fixed-width bitset over target indices.
class TargetSet {
 public:
  TargetSet() = default;
  explicit TargetSet(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  int count_common(const TargetSet& other) const {
    int c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & other.words_[k]);
    return c;
  }
  bool subset_of(const TargetSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }
  void subtract(const TargetSet& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
  }
  int first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return static_cast<int>(k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k])));
    return -1;
  }
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      auto w = words_[k];
      while (w) {
        fn(static_cast<int>(k * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

CliqueWeighting weighting_from_primal(const CoverInstance& inst, const std::vector<Clique>& variables,
                                      const std::vector<Rational>& primal) {
  CliqueWeighting w;
  w.t = inst.t;
  for (std::size_t j = 0; j < variables.size(); ++j)
    if (sgn(primal[j]) != 0) w.weights.emplace(variables[j], primal[j]);
  return w;
}

void require_coverable(const CoverInstance& inst) {
  for (std::size_t e = 0; e < inst.targets.size(); ++e)
    if (inst.covered_by[e].empty())
      throw std::domain_error("t-clique has no finite-cost clique containing it; no cover exists");
}

void require_t(int t, int minimum) {
  if (t < minimum) throw std::invalid_argument("t must be at least " + std::to_string(minimum));
}

OptResult solve_fractional(const Graph& g, int t, const CostVector& c, Problem problem) {
  require_t(t, 1);
  CoverInstance inst = build_cover_instance(g, t, c);
  require_coverable(inst);
  LinearProgram lp = problem == Problem::kCover ? build_cover_lp(inst) : build_decomposition_lp(inst);
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal)
    throw std::logic_error("cover LP returned status " + std::string(to_string(sol.status)));
  OptResult result;
  result.problem = problem;
  result.fractional = true;
  result.t = t;
  result.cost_name = c.name();
  result.value = sol.value;
  result.witness = weighting_from_primal(inst, inst.candidates, sol.primal);
  result.certified = check_certificate(lp, sol).valid() && verify_weighting(g, t, result.witness, problem).ok;
  result.nodes = sol.pivots;
  result.lp = LpRecord{std::move(lp), std::move(sol)};
  return result;
}

// Weighted set cover / exact cover by depth-first branch and bound.
class CoverSearch {
 public:
  CoverSearch(const CoverInstance& inst, bool exact, Rational root_bound)
      : inst_(inst), exact_(exact), root_bound_(std::move(root_bound)) {
    integral_ = std::all_of(inst.costs.begin(), inst.costs.end(),
                            [](const Rational& c) { return c.get_den() == 1; });
    if (integral_) root_bound_ = ceil(root_bound_);
    for (const auto& targets : inst.covers) {
      TargetSet s(inst.targets.size());
      for (int e : targets) s.set(static_cast<std::size_t>(e));
      sets_.push_back(std::move(s));
    }
  }

  void seed_incumbent(Rational cost, std::vector<int> chosen) {
    best_ = std::move(cost);
    best_set_ = std::move(chosen);
  }

  void run() {
    TargetSet all(inst_.targets.size());
    for (std::size_t e = 0; e < inst_.targets.size(); ++e) all.set(e);
    if (best_ && *best_ == root_bound_) return;
    search(all, Rational(0));
  }

  const std::optional<Rational>& best() const { return best_; }
  const std::vector<int>& best_set() const { return best_set_; }
  std::size_t nodes() const { return nodes_; }

 private:
  bool usable(int k, const TargetSet& uncovered) const {
    return !exact_ || sets_[k].subset_of(uncovered);
  }

  // Dual-feasible prices y_e = min over usable K containing e of c_K / |K ∩ U|.
  // Returns nullopt when some uncovered target has no usable clique.
  std::optional<Rational> lower_bound(const TargetSet& uncovered) const {
    Rational total = 0;
    bool feasible = true;
    uncovered.for_each([&](int e) {
      if (!feasible) return;
      std::optional<Rational> price;
      for (int k : inst_.covered_by[e]) {
        if (!usable(k, uncovered)) continue;
        Rational p = inst_.costs[k] / sets_[k].count_common(uncovered);
        if (!price || p < *price) price = std::move(p);
      }
      if (!price) {
        feasible = false;
        return;
      }
      total += *price;
    });
    if (!feasible) return std::nullopt;
    return integral_ ? ceil(total) : total;
  }

  int branching_target(const TargetSet& uncovered) const {
    if (exact_) return uncovered.first();
    int chosen = -1;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    uncovered.for_each([&](int e) {
      if (inst_.covered_by[e].size() < fewest) {
        fewest = inst_.covered_by[e].size();
        chosen = e;
      }
    });
    return chosen;
  }

  void search(const TargetSet& uncovered, const Rational& cost) {
    ++nodes_;
    if (best_ && *best_ == root_bound_) return;
    if (uncovered.none()) {
      if (!best_ || cost < *best_) {
        best_ = cost;
        best_set_ = chosen_;
      }
      return;
    }
    auto bound = lower_bound(uncovered);
    if (!bound) return;
    if (best_ && cost + *bound >= *best_) return;

    const int e = branching_target(uncovered);
    struct Option {
      int clique;
      Rational ratio;
    };
    std::vector<Option> options;
    for (int k : inst_.covered_by[e]) {
      if (!usable(k, uncovered)) continue;
      options.push_back({k, inst_.costs[k] / sets_[k].count_common(uncovered)});
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const Option& a, const Option& b) { return a.ratio < b.ratio; });
    for (const auto& opt : options) {
      TargetSet next = uncovered;
      next.subtract(sets_[opt.clique]);
      chosen_.push_back(opt.clique);
      search(next, cost + inst_.costs[opt.clique]);
      chosen_.pop_back();
    }
  }

  static Rational ceil(const Rational& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(r);
  }

  const CoverInstance& inst_;
  bool exact_;
  bool integral_ = false;
  Rational root_bound_;
  std::vector<TargetSet> sets_;
  std::optional<Rational> best_;
  std::vector<int> best_set_;
  std::vector<int> chosen_;
  std::size_t nodes_ = 0;
};

// Greedy by cost per newly covered target; used only as a starting incumbent.
std::pair<Rational, std::vector<int>> greedy_cover(const CoverInstance& inst) {
  std::vector<bool> covered(inst.targets.size(), false);
  std::size_t remaining = inst.targets.size();
  Rational cost = 0;
  std::vector<int> chosen;
  while (remaining > 0) {
    int best = -1;
    Rational best_ratio;
    for (std::size_t k = 0; k < inst.candidates.size(); ++k) {
      int fresh = 0;
      for (int e : inst.covers[k]) fresh += covered[e] ? 0 : 1;
      if (fresh == 0) continue;
      Rational ratio = inst.costs[k] / fresh;
      if (best < 0 || ratio < best_ratio) {
        best = static_cast<int>(k);
        best_ratio = std::move(ratio);
      }
    }
    chosen.push_back(best);
    cost += inst.costs[best];
    for (int e : inst.covers[best])
      if (!covered[e]) {
        covered[e] = true;
        --remaining;
      }
  }
  return {cost, chosen};
}

// Drops each candidate contained in a larger candidate of no greater cost.
// Valid for covers only: swapping in the superset keeps every target covered.
CoverInstance drop_dominated(const CoverInstance& inst) {
  CoverInstance out;
  out.t = inst.t;
  out.targets = inst.targets;
  out.covered_by.resize(inst.targets.size());
  for (std::size_t k = 0; k < inst.candidates.size(); ++k) {
    const VertexMask m = inst.candidates[k].mask();
    bool dominated = false;
    for (std::size_t j = 0; j < inst.candidates.size() && !dominated; ++j) {
      const VertexMask o = inst.candidates[j].mask();
      dominated = o != m && (o & m) == m && inst.costs[j] <= inst.costs[k];
    }
    if (dominated) continue;
    const int id = static_cast<int>(out.candidates.size());
    for (int e : inst.covers[k]) out.covered_by[e].push_back(id);
    out.candidates.push_back(inst.candidates[k]);
    out.costs.push_back(inst.costs[k]);
    out.covers.push_back(inst.covers[k]);
  }
  return out;
}

OptResult solve_integer(const Graph& g, int t, const CostVector& c, Problem problem) {
  require_t(t, 1);
  CoverInstance inst = build_cover_instance(g, t, c);
  require_coverable(inst);
  const bool exact = problem == Problem::kDecomposition;
  if (!exact) inst = drop_dominated(inst);
  OptResult relaxed = solve_fractional(g, t, c, problem);

  CoverSearch search(inst, exact, relaxed.value);
  if (!exact) {
    auto [cost, chosen] = greedy_cover(inst);
    search.seed_incumbent(std::move(cost), std::move(chosen));
  } else if (c.allows(t)) {
    std::vector<int> singles;
    Rational cost = 0;
    for (std::size_t k = 0; k < inst.candidates.size(); ++k)
      if (static_cast<int>(inst.candidates[k].size()) == t) {
        singles.push_back(static_cast<int>(k));
        cost += inst.costs[k];
      }
    search.seed_incumbent(std::move(cost), std::move(singles));
  }
  search.run();
  if (!search.best()) throw std::domain_error("no finite-cost decomposition exists");

  OptResult result;
  result.problem = problem;
  result.fractional = false;
  result.t = t;
  result.cost_name = c.name();
  result.value = *search.best();
  result.witness.t = t;
  for (int k : search.best_set()) result.witness.weights[inst.candidates[k]] = 1;
  result.certified = verify_weighting(g, t, result.witness, problem).ok && result.witness.cost(c) == result.value;
  result.nodes = search.nodes();
  return result;
}

struct PackingInstance {
  std::vector<Clique> copies;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> edges_of;  // copy -> edge indices
};

PackingInstance build_packing_instance(const Graph& g, int t) {
  PackingInstance inst;
  inst.copies = enumerate_t_cliques(g, t);
  inst.edges = g.edges();
  std::unordered_map<VertexMask, int> edge_index;
  for (std::size_t i = 0; i < inst.edges.size(); ++i)
    edge_index[(VertexMask{1} << inst.edges[i].first) | (VertexMask{1} << inst.edges[i].second)] =
        static_cast<int>(i);
  for (const auto& copy : inst.copies) {
    std::vector<int> ids;
    for_each_subset(copy.vertices, 2, [&](VertexMask m) { ids.push_back(edge_index.at(m)); });
    inst.edges_of.push_back(std::move(ids));
  }
  return inst;
}

LinearProgram build_packing_lp(const PackingInstance& inst) {
  LinearProgram lp(inst.copies.size(), Sense::kMaximize);
  for (auto& c : lp.objective) c = 1;
  std::vector<std::vector<int>> copies_on_edge(inst.edges.size());
  for (std::size_t k = 0; k < inst.copies.size(); ++k)
    for (int e : inst.edges_of[k]) copies_on_edge[e].push_back(static_cast<int>(k));
  for (const auto& copies : copies_on_edge) {
    if (copies.empty()) continue;
    std::vector<Rational> row(inst.copies.size());
    for (int k : copies) row[k] = 1;
    lp.add_constraint(std::move(row), Relation::kLessEqual, 1);
  }
  return lp;
}

}  // namespace

CoverInstance build_cover_instance(const Graph& g, int t, const CostVector& c) {
  require_t(t, 1);
  CoverInstance inst;
  inst.t = t;
  inst.targets = enumerate_t_cliques(g, t);
  std::unordered_map<VertexMask, int> index;
  for (std::size_t i = 0; i < inst.targets.size(); ++i) index[inst.targets[i].mask()] = static_cast<int>(i);
  inst.covered_by.resize(inst.targets.size());
  for (auto& clique : enumerate_cliques(g, t)) {
    auto cost = c.cost(static_cast<int>(clique.size()));
    if (!cost) continue;
    std::vector<int> covered;
    for_each_subset(clique.vertices, t, [&](VertexMask m) { covered.push_back(index.at(m)); });
    std::sort(covered.begin(), covered.end());
    const int k = static_cast<int>(inst.candidates.size());
    for (int e : covered) inst.covered_by[e].push_back(k);
    inst.candidates.push_back(std::move(clique));
    inst.costs.push_back(std::move(*cost));
    inst.covers.push_back(std::move(covered));
  }
  return inst;
}

namespace {

LinearProgram build_incidence_lp(const CoverInstance& inst, Relation relation) {
  LinearProgram lp(inst.candidates.size(), Sense::kMinimize);
  lp.objective = inst.costs;
  for (std::size_t e = 0; e < inst.targets.size(); ++e) {
    std::vector<Rational> row(inst.candidates.size());
    for (int k : inst.covered_by[e]) row[k] = 1;
    lp.add_constraint(std::move(row), relation, 1);
  }
  return lp;
}

}  // namespace

LinearProgram build_cover_lp(const CoverInstance& inst) { return build_incidence_lp(inst, Relation::kGreaterEqual); }

LinearProgram build_decomposition_lp(const CoverInstance& inst) {
  return build_incidence_lp(inst, Relation::kEqual);
}

OptResult fractional_cover_number(const Graph& g, int t, const CostVector& c) {
  return solve_fractional(g, t, c, Problem::kCover);
}

OptResult fractional_decomposition_number(const Graph& g, int t, const CostVector& c) {
  return solve_fractional(g, t, c, Problem::kDecomposition);
}

OptResult integer_cover_number(const Graph& g, int t, const CostVector& c) {
  return solve_integer(g, t, c, Problem::kCover);
}

OptResult integer_decomposition_number(const Graph& g, int t, const CostVector& c) {
  return solve_integer(g, t, c, Problem::kDecomposition);
}

OptResult fractional_packing_number(const Graph& g, int t) {
  require_t(t, 2);
  PackingInstance inst = build_packing_instance(g, t);
  LinearProgram lp = build_packing_lp(inst);
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) throw std::logic_error("packing LP did not reach an optimum");
  OptResult result;
  result.problem = Problem::kPacking;
  result.fractional = true;
  result.t = t;
  result.cost_name = "ones";
  result.value = sol.value;
  result.witness.t = t;
  for (std::size_t k = 0; k < inst.copies.size(); ++k)
    if (sgn(sol.primal[k]) != 0) result.witness.weights.emplace(inst.copies[k], sol.primal[k]);
  result.certified = check_certificate(lp, sol).valid() && verify_weighting(g, t, result.witness, Problem::kPacking).ok;
  result.nodes = sol.pivots;
  result.lp = LpRecord{std::move(lp), std::move(sol)};
  return result;
}

namespace {

// Maximum set of pairwise edge-disjoint t-cliques: include/exclude branching
// on the first remaining copy, bounded by the remaining count and by the
// floor of the fractional optimum at the root.
class PackingSearch {
 public:
  PackingSearch(const PackingInstance& inst, long root_cap) : inst_(inst), root_cap_(root_cap) {
    const std::size_t n = inst.copies.size();
    conflicts_.assign(n, TargetSet(n));
    std::vector<std::vector<int>> on_edge(inst.edges.size());
    for (std::size_t k = 0; k < n; ++k)
      for (int e : inst.edges_of[k]) on_edge[e].push_back(static_cast<int>(k));
    for (const auto& copies : on_edge)
      for (int a : copies)
        for (int b : copies) conflicts_[a].set(static_cast<std::size_t>(b));
  }

  void run() {
    TargetSet all(inst_.copies.size());
    for (std::size_t k = 0; k < inst_.copies.size(); ++k) all.set(k);
    search(all, static_cast<int>(inst_.copies.size()));
  }

  const std::vector<int>& best() const { return best_; }
  std::size_t nodes() const { return nodes_; }

 private:
  void search(const TargetSet& remaining, int remaining_count) {
    ++nodes_;
    if (static_cast<long>(best_.size()) >= root_cap_) return;
    if (chosen_.size() + static_cast<std::size_t>(remaining_count) <= best_.size()) return;
    if (remaining_count == 0) {
      best_ = chosen_;
      return;
    }
    const int k = remaining.first();
    TargetSet with = remaining;
    with.subtract(conflicts_[k]);
    chosen_.push_back(k);
    search(with, with.count_common(with));
    chosen_.pop_back();
    TargetSet without = remaining;
    without.reset(static_cast<std::size_t>(k));
    search(without, remaining_count - 1);
  }

  const PackingInstance& inst_;
  long root_cap_;
  std::vector<TargetSet> conflicts_;
  std::vector<int> best_;
  std::vector<int> chosen_;
  std::size_t nodes_ = 0;
};

}  // namespace

OptResult integer_packing_number(const Graph& g, int t) {
  require_t(t, 2);
  OptResult relaxed = fractional_packing_number(g, t);
  mpz_class cap;
  mpz_fdiv_q(cap.get_mpz_t(), relaxed.value.get_num_mpz_t(), relaxed.value.get_den_mpz_t());
  PackingInstance inst = build_packing_instance(g, t);
  PackingSearch search(inst, cap.get_si());
  search.run();

  OptResult result;
  result.problem = Problem::kPacking;
  result.fractional = false;
  result.t = t;
  result.cost_name = "ones";
  result.value = static_cast<long>(search.best().size());
  result.witness.t = t;
  for (int k : search.best()) result.witness.weights[inst.copies[k]] = 1;
  result.certified = verify_weighting(g, t, result.witness, Problem::kPacking).ok;
  result.nodes = search.nodes();
  return result;
}

OptResult optimize(const Graph& g, int t, const CostVector& c, Problem problem, bool fractional) {
  switch (problem) {
    case Problem::kCover: return fractional ? fractional_cover_number(g, t, c) : integer_cover_number(g, t, c);
    case Problem::kDecomposition:
      return fractional ? fractional_decomposition_number(g, t, c) : integer_decomposition_number(g, t, c);
    case Problem::kPacking: return fractional ? fractional_packing_number(g, t) : integer_packing_number(g, t);
  }
  throw std::invalid_argument("unknown problem");
}

VerificationReport verify_weighting(const Graph& g, int t, const CliqueWeighting& f, Problem problem) {
  for (const auto& [clique, w] : f.weights) {
    if (!std::is_sorted(clique.vertices.begin(), clique.vertices.end()) ||
        std::adjacent_find(clique.vertices.begin(), clique.vertices.end()) != clique.vertices.end())
      throw std::invalid_argument("clique key is not a strictly increasing vertex list");
    for (int v : clique.vertices)
      if (v < 0 || v >= g.order()) throw std::invalid_argument("clique key has a vertex outside the graph");
    if (!g.is_clique(clique.mask())) throw std::invalid_argument("clique key is not a clique of the graph");
    const int size = static_cast<int>(clique.size());
    if (problem == Problem::kPacking ? size != t : size < t)
      throw std::invalid_argument("clique key of size " + std::to_string(size) + " invalid for t = " +
                                  std::to_string(t));
    if (sgn(w) < 0) throw std::invalid_argument("negative clique weight");
  }

  VerificationReport report;
  if (problem == Problem::kPacking) {
    for (auto [u, v] : g.edges()) {
      VertexMask e = (VertexMask{1} << u) | (VertexMask{1} << v);
      Rational load = 0;
      for (const auto& [clique, w] : f.weights)
        if ((clique.mask() & e) == e) load += w;
      if (load > 1) report.violated.push_back(Clique{{u, v}});
    }
  } else {
    for (const auto& target : enumerate_t_cliques(g, t)) {
      VertexMask m = target.mask();
      Rational load = 0;
      for (const auto& [clique, w] : f.weights)
        if ((clique.mask() & m) == m) load += w;
      const bool ok = problem == Problem::kCover ? load >= 1 : load == 1;
      if (!ok) report.violated.push_back(target);
    }
  }
  report.ok = report.violated.empty();
  return report;
}

Rational cover_bound_after_edge_removal(const Graph& g, const Graph& sub, int t, const CostVector& c) {
  require_t(t, 2);
  if (!sub.is_subgraph_of(g)) throw std::invalid_argument("second graph is not a subgraph on the same vertex set");
  const long removed = static_cast<long>(g.edge_count() - sub.edge_count());
  Rational bound = integer_cover_number(sub, t, c).value;
  bound += c.at(t) * removed * pow(Rational(g.order()), static_cast<unsigned>(t - 2));
  return bound;
}

}  // namespace cliquecover
