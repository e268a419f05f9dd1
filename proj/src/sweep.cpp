#include "cliquecover/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <stdexcept>

#include "cliquecover/cover.hpp"
#include "cliquecover/graph_io.hpp"
#include "cliquecover/symmetrize.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cliquecover {

namespace {

struct Outcome {
  std::vector<SweepViolation> violations;
  bool extremal = false;
  std::optional<Rational> gap;
};

struct Context {
  int n;
  int t;
  const CostVector& cost;
  const std::string& key;
  const std::string& turan_key;  // T_{n, min(t, n)} for the predicate's t
};

using Check = std::function<Outcome(const Graph&, const Context&)>;

struct Predicate {
  std::string name;
  CostVector default_cost;
  std::optional<int> fixed_t;
  Check check;
};

Rational quarter_square(int n) { return static_cast<long>(n / 2) * static_cast<long>(n - n / 2); }

SweepViolation violation(const Context& ctx, const Rational& value, const Rational& bound, std::string detail) {
  return SweepViolation{ctx.key, ctx.n, value, bound, std::move(detail)};
}

// value <= bound; with `unique`, equality exactly at the Turán graph.
Outcome bounded(const Context& ctx, const Rational& value, const Rational& bound, bool unique) {
  Outcome out;
  if (value > bound) out.violations.push_back(violation(ctx, value, bound, "exceeds bound"));
  out.extremal = value == bound;
  if (unique) {
    const bool turan = ctx.key == ctx.turan_key;
    if (out.extremal && !turan) out.violations.push_back(violation(ctx, value, bound, "equality away from Turán graph"));
    if (!out.extremal && turan) out.violations.push_back(violation(ctx, value, bound, "Turán graph below bound"));
  }
  return out;
}

Rational turan_cover(int n, int t, const CostVector& c) {
  return integer_cover_number(turan_graph(n, std::min(t, n)), t, c).value;
}

const std::vector<Predicate>& registry() {
  static const std::vector<Predicate> predicates = {
      {"egp_cover", CostVector::ones(), 2,
       [](const Graph& g, const Context& ctx) {
         return bounded(ctx, integer_cover_number(g, 2, ctx.cost).value, quarter_square(ctx.n), true);
       }},
      {"egp_decomp_edge_triangle", CostVector::edge_triangle(), 2,
       [](const Graph& g, const Context& ctx) {
         return bounded(ctx, integer_decomposition_number(g, 2, ctx.cost).value, quarter_square(ctx.n), false);
       }},
      {"gyori_kostochka", CostVector::linear_i(), 2,
       [](const Graph& g, const Context& ctx) {
         return bounded(ctx, integer_decomposition_number(g, 2, ctx.cost).value, 2 * quarter_square(ctx.n), true);
       }},
      {"erdos_conjecture", CostVector::linear_i_minus_1(), 2,
       [](const Graph& g, const Context& ctx) {
         return bounded(ctx, integer_decomposition_number(g, 2, ctx.cost).value, quarter_square(ctx.n), false);
       }},
      {"dmp_t3", CostVector::ones(), 3,
       [](const Graph& g, const Context& ctx) {
         return bounded(ctx, integer_cover_number(g, 3, ctx.cost).value, turan_cover(ctx.n, 3, ctx.cost), ctx.n >= 3);
       }},
      {"dmp_t", CostVector::ones(), std::nullopt,
       [](const Graph& g, const Context& ctx) {
         if (ctx.n < ctx.t) return Outcome{};
         return bounded(ctx, integer_cover_number(g, ctx.t, ctx.cost).value, turan_cover(ctx.n, ctx.t, ctx.cost),
                        true);
       }},
      {"frac_le_int", CostVector::ones(), std::nullopt,
       [](const Graph& g, const Context& ctx) {
         Outcome out;
         const Rational frac = fractional_cover_number(g, ctx.t, ctx.cost).value;
         const Rational whole = integer_cover_number(g, ctx.t, ctx.cost).value;
         if (frac > whole) out.violations.push_back(violation(ctx, frac, whole, "fractional exceeds integer"));
         out.gap = whole - frac;
         return out;
       }},
      {"chain_inequalities", CostVector::ones(), std::nullopt,
       [](const Graph& g, const Context& ctx) {
         Outcome out;
         const Rational sf = fractional_cover_number(g, ctx.t, ctx.cost).value;
         const Rational df = fractional_decomposition_number(g, ctx.t, ctx.cost).value;
         const Rational si = integer_cover_number(g, ctx.t, ctx.cost).value;
         const Rational di = integer_decomposition_number(g, ctx.t, ctx.cost).value;
         auto need = [&](const Rational& lo, const Rational& hi, const char* what) {
           if (lo > hi) out.violations.push_back(violation(ctx, lo, hi, what));
         };
         need(sf, si, "fractional cover exceeds cover");
         need(si, di, "cover exceeds decomposition");
         need(sf, df, "fractional cover exceeds fractional decomposition");
         need(df, di, "fractional decomposition exceeds decomposition");
         out.gap = si - sf;
         return out;
       }},
      {"symmetrization_monotone", CostVector::ones(), std::nullopt,
       [](const Graph& g, const Context& ctx) {
         Outcome out;
         for (auto problem : {Problem::kCover, Problem::kDecomposition}) {
           const auto trace = symmetrize_to_multipartite(g, ctx.t, ctx.cost, problem);
           const std::string mode(to_string(problem));
           for (const auto& step : trace.steps)
             if (step.after < step.before)
               out.violations.push_back(violation(ctx, step.after, step.before, mode + ": value decreased"));
           if (!is_complete_multipartite(trace.final_graph))
             out.violations.push_back(violation(ctx, trace.final_value, trace.final_value, mode + ": not multipartite"));
           if (static_cast<int>(trace.steps.size()) > std::max(0, ctx.n - 1))
             out.violations.push_back(violation(ctx, static_cast<long>(trace.steps.size()), ctx.n - 1,
                                                mode + ": too many steps"));
         }
         return out;
       }},
  };
  return predicates;
}

const Predicate& find_predicate(std::string_view name) {
  for (const auto& p : registry())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown predicate '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& sweep_predicates() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& p : registry()) out.push_back(p.name);
    return out;
  }();
  return names;
}

SweepReport sweep(const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Predicate& predicate = find_predicate(options.predicate);
  if (options.n_min < 1 || options.n_max < options.n_min || options.n_max > kMaxEnumeratedVertices)
    throw std::invalid_argument("sweep range must satisfy 1 <= nmin <= nmax <= " +
                                std::to_string(kMaxEnumeratedVertices));
  const int t = predicate.fixed_t.value_or(options.t);
  if (t < 1) throw std::invalid_argument("t must be positive");
  const CostVector cost = options.cost.value_or(predicate.default_cost);

  SweepReport report;
  report.predicate = predicate.name;
  report.n_min = options.n_min;
  report.n_max = options.n_max;
  report.t = t;
  report.cost_name = cost.name();

  for (int n = options.n_min; n <= options.n_max; ++n) {
    const auto graphs = enumerate_graphs(n, options.execution);
    const std::string turan_key = canonical_form(turan_graph(n, std::min(t, n)));
    std::vector<std::string> keys(graphs.size());
    std::vector<Outcome> outcomes(graphs.size());
    std::exception_ptr failure;
    auto work = [&](std::size_t i) {
      try {
        keys[i] = emit_graph6(graphs[i]);
        outcomes[i] = predicate.check(graphs[i], Context{n, t, cost, keys[i], turan_key});
      } catch (...) {
#pragma omp critical(sweep_failure)
        if (!failure) failure = std::current_exception();
      }
    };
    if (options.execution == Execution::kParallel) {
#ifdef _OPENMP
      const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#else
      const int threads = 1;
#endif
      const long long count = static_cast<long long>(graphs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
      for (long long i = 0; i < count; ++i) work(static_cast<std::size_t>(i));
    } else {
      for (std::size_t i = 0; i < graphs.size(); ++i) work(i);
    }
    if (failure) std::rethrow_exception(failure);

    std::optional<GapRecord> gap;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      auto& o = outcomes[i];
      for (auto& v : o.violations) report.violations.push_back(std::move(v));
      if (o.extremal) report.extremal.push_back(keys[i]);
      if (o.gap && (!gap || *o.gap > gap->gap)) gap = GapRecord{n, *o.gap, keys[i]};
    }
    if (gap) report.gaps.push_back(*gap);
    report.tested += graphs.size();
  }
  // Graphs arrive sorted by canonical key within each n already.
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const SweepViolation& a, const SweepViolation& b) {
                     return std::tie(a.n, a.graph6) < std::tie(b.n, b.graph6);
                   });
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cliquecover
