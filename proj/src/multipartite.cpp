#include "cliquecover/multipartite.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace cliquecover {

std::vector<int> subset_members(SubsetMask s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

SubsetMask subset_from_members(const std::vector<int>& members) {
  SubsetMask s = 0;
  for (int i : members) {
    if (i < 0 || i >= kMaxParts) throw std::invalid_argument("part index out of range");
    s |= SubsetMask{1} << i;
  }
  return s;
}

FractionVector::FractionVector(std::vector<Rational> x) : x_(std::move(x)) {
  if (x_.empty()) throw std::invalid_argument("fraction vector is empty");
  if (x_.size() > static_cast<std::size_t>(kMaxParts)) throw std::invalid_argument("too many parts");
  Rational sum = 0;
  for (const auto& v : x_) {
    if (sgn(v) <= 0) throw std::invalid_argument("fraction vector entries must be positive");
    sum += v;
  }
  if (sum != 1) throw std::invalid_argument("fraction vector must sum to 1, got " + to_string(sum));
}

FractionVector FractionVector::from_parts(const PartSizes& parts) {
  const int n = parts.total();
  std::vector<Rational> x;
  for (int s : parts.sizes) x.push_back(make_rational(s, n));
  return FractionVector(std::move(x));
}

bool FractionVector::is_nonincreasing() const {
  return std::is_sorted(x_.begin(), x_.end(), std::greater<>());
}

Rational FractionVector::product(SubsetMask s) const {
  Rational p = 1;
  for (int i : subset_members(s)) p *= x_[static_cast<std::size_t>(i)];
  return p;
}

Rational SubsetWeighting::at(SubsetMask s) const {
  auto it = weights.find(s);
  return it == weights.end() ? Rational(0) : it->second;
}

Rational SubsetWeighting::cost(const CostVector& c) const {
  Rational total = 0;
  for (const auto& [s, w] : weights)
    if (sgn(w) != 0) total += c.at(std::popcount(s)) * w;
  return total;
}

namespace {

void check_t(const FractionVector& x, int t) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  if (t > x.k()) throw std::invalid_argument("t exceeds the number of parts");
}

std::vector<SubsetMask> subsets_of_size_at_least(int k, int t) {
  std::vector<SubsetMask> out;
  for (SubsetMask s = 0; s < (SubsetMask{1} << k); ++s)
    if (std::popcount(s) >= t) out.push_back(s);
  return out;
}

std::vector<SubsetMask> subsets_of_size(int k, int t) {
  std::vector<SubsetMask> out;
  for (SubsetMask s = 0; s < (SubsetMask{1} << k); ++s)
    if (std::popcount(s) == t) out.push_back(s);
  return out;
}

SubsetProgram build_primal(const FractionVector& x, int t, const CostVector& c, Relation relation) {
  check_t(x, t);
  SubsetProgram out;
  for (SubsetMask s : subsets_of_size_at_least(x.k(), t))
    if (c.allows(std::popcount(s))) out.columns.push_back(s);
  out.program = LinearProgram(out.columns.size(), Sense::kMinimize);
  for (std::size_t j = 0; j < out.columns.size(); ++j) out.program.objective[j] = c.at(std::popcount(out.columns[j]));
  for (SubsetMask target : subsets_of_size(x.k(), t)) {
    std::vector<Rational> row(out.columns.size());
    for (std::size_t j = 0; j < out.columns.size(); ++j)
      if ((out.columns[j] & target) == target) row[j] = 1;
    out.program.add_constraint(std::move(row), relation, x.product(target));
  }
  return out;
}

SubsetProgram build_dual(const FractionVector& x, int t, const CostVector& c, bool nonnegative) {
  check_t(x, t);
  SubsetProgram out;
  out.columns = subsets_of_size(x.k(), t);
  out.program = LinearProgram(out.columns.size(), Sense::kMaximize);
  for (std::size_t j = 0; j < out.columns.size(); ++j) {
    out.program.objective[j] = x.product(out.columns[j]);
    out.program.nonnegative[j] = nonnegative;
  }
  for (SubsetMask s : subsets_of_size_at_least(x.k(), t)) {
    auto cost = c.cost(std::popcount(s));
    if (!cost) continue;
    std::vector<Rational> row(out.columns.size());
    for (std::size_t j = 0; j < out.columns.size(); ++j)
      if ((out.columns[j] & s) == out.columns[j]) row[j] = 1;
    out.program.add_constraint(std::move(row), Relation::kLessEqual, *cost);
  }
  return out;
}

void require_nonincreasing(const FractionVector& x) {
  if (!x.is_nonincreasing()) throw std::invalid_argument("fraction vector must be sorted nonincreasing");
}

SubsetMask prefix(int j) { return (SubsetMask{1} << j) - 1; }

// Solution for arbitrary positive y (any order, any sum), indexed like y.
// Appends the weighting of every level to `levels` (base case first).
std::map<SubsetMask, Rational> decompose(const std::vector<Rational>& y, std::vector<SubsetWeighting>* levels) {
  const int k = static_cast<int>(y.size());
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return y[a] > y[b]; });
  std::vector<Rational> x;
  for (int i : order) x.push_back(y[i]);

  std::map<SubsetMask, Rational> f;
  if (k == 2) {
    f[0b11] = x[0] * x[1];
  } else {
    std::vector<Rational> merged(x.begin(), x.end() - 1);
    merged.back() += x.back();
    auto g = decompose(merged, levels);
    const int a = k - 3, b = k - 2, c = k - 1;  // 0-based k-2, k-1, k
    const SubsetMask bit_a = SubsetMask{1} << a, bit_b = SubsetMask{1} << b, bit_c = SubsetMask{1} << c;
    const Rational& xa = x[a];
    const Rational& xb = x[b];
    const Rational& xc = x[c];
    const Rational split_b = xb / (xb + xc);
    const Rational split_c = xc / (xb + xc);
    const Rational xi_factor = xb * xc / (xa * (xb + xc));
    auto add = [&f](SubsetMask s, const Rational& w) {
      if (sgn(w) != 0) f[s] += w;
    };
    // Each I below ranges over subsets of the first k-2 parts.
    for (SubsetMask i = 0; i < (SubsetMask{1} << (k - 2)); ++i) {
      auto value = [&g](SubsetMask s) {
        auto it = g.find(s);
        return it == g.end() ? Rational(0) : it->second;
      };
      Rational gi = value(i);
      Rational gib = value(i | bit_b);
      Rational xi = 0;
      if (i & bit_a) xi = xi_factor * value(i | bit_b);
      add(i, gi + xi);
      add(i | bit_b, split_b * gib - xi);
      add(i | bit_c, split_c * gib - xi);
      add(i | bit_b | bit_c, xi);
    }
  }
  // Weight on fewer than two parts lies in no constraint.
  for (auto it = f.begin(); it != f.end();)
    it = std::popcount(it->first) < 2 ? f.erase(it) : std::next(it);

  std::map<SubsetMask, Rational> back;
  for (const auto& [s, w] : f) {
    SubsetMask original = 0;
    for (int i : subset_members(s)) original |= SubsetMask{1} << order[i];
    back[original] += w;
  }
  if (levels) levels->push_back(SubsetWeighting{k, back});
  return back;
}

}  // namespace

SubsetProgram build_cclp(const FractionVector& x, int t, const CostVector& c) {
  return build_primal(x, t, c, Relation::kGreaterEqual);
}

SubsetProgram build_cdlp(const FractionVector& x, int t, const CostVector& c) {
  return build_primal(x, t, c, Relation::kEqual);
}

SubsetProgram build_cc_dual(const FractionVector& x, int t, const CostVector& c) { return build_dual(x, t, c, true); }

SubsetProgram build_cd_dual(const FractionVector& x, int t, const CostVector& c) { return build_dual(x, t, c, false); }

SubsetWeighting weighting_from_solution(const SubsetProgram& program, const LpSolution& solution, int k) {
  SubsetWeighting f;
  f.k = k;
  for (std::size_t j = 0; j < program.columns.size(); ++j)
    if (sgn(solution.primal[j]) != 0) f.weights[program.columns[j]] = solution.primal[j];
  return f;
}

bool satisfies_subset_program(const FractionVector& x, int t, const SubsetWeighting& f, bool equality) {
  check_t(x, t);
  for (const auto& [s, w] : f.weights)
    if (sgn(w) < 0 || s >= (SubsetMask{1} << x.k())) return false;
  for (SubsetMask target : subsets_of_size(x.k(), t)) {
    Rational load = 0;
    for (const auto& [s, w] : f.weights)
      if ((s & target) == target) load += w;
    const Rational need = x.product(target);
    if (equality ? load != need : load < need) return false;
  }
  return true;
}

SubsetWeighting greedy_cover_solution(const FractionVector& x, int t, const CostVector& c) {
  check_t(x, t);
  require_nonincreasing(x);
  if (!c.has_bounded_growth(t, x.k()))
    throw std::domain_error("cost vector violates c_{i+1} - c_i <= c_t for some i >= t");
  Rational head = 1;
  for (int i = 0; i < t - 1; ++i) head *= x[i];
  SubsetWeighting f;
  f.k = x.k();
  for (int j = t; j <= x.k(); ++j) {
    Rational next = j < x.k() ? x[j] : Rational(0);
    Rational w = (x[j - 1] - next) * head;
    if (sgn(w) != 0) f.weights[prefix(j)] = w;
  }
  return f;
}

Rational greedy_cover_bound(const FractionVector& x, int t, const CostVector& c) {
  check_t(x, t);
  Rational head = 1, sum = 0;
  for (int i = 0; i < t - 1; ++i) {
    head *= x[i];
    sum += x[i];
  }
  return c.at(t) * head * (1 - sum);
}

std::vector<SubsetWeighting> recursive_decomp_levels(const FractionVector& x, const CostVector& c) {
  if (x.k() < 2) throw std::invalid_argument("decomposition needs at least two parts");
  require_nonincreasing(x);
  if (!c.is_concave_from(3, x.k())) throw std::domain_error("cost vector violates 2c_i >= c_{i-1} + c_{i+1} for some i >= 3");
  std::vector<SubsetWeighting> levels;
  decompose(x.values(), &levels);
  return levels;
}

SubsetWeighting recursive_decomp_solution(const FractionVector& x, const CostVector& c) {
  return recursive_decomp_levels(x, c).back();
}

Rational recursive_decomp_bound(const FractionVector& x, const CostVector& c) {
  Rational best = 0;
  for (SubsetMask j = 0; j < (SubsetMask{1} << x.k()); ++j) {
    Rational in = 0;
    for (int i : subset_members(j)) in += x[i];
    Rational v = in * (1 - in);
    if (v > best) best = v;
  }
  return c.at(2) * best;
}

namespace {

std::vector<int> part_offsets(const PartSizes& parts) {
  std::vector<int> offsets{0};
  for (int s : parts.sizes) offsets.push_back(offsets.back() + s);
  return offsets;
}

}  // namespace

CliqueWeighting scale_to_graph(const PartSizes& parts, const SubsetWeighting& f, int t) {
  const int k = static_cast<int>(parts.sizes.size());
  const auto offsets = part_offsets(parts);
  const Rational scale = pow(Rational(parts.total()), static_cast<unsigned>(t));
  CliqueWeighting g;
  g.t = t;
  for (const auto& [s, w] : f.weights) {
    if (k > kMaxParts || s >= (SubsetMask{1} << k)) throw std::invalid_argument("subset key out of range");
    if (std::popcount(s) < t) throw std::invalid_argument("subset key has fewer than t parts");
    if (sgn(w) == 0) continue;
    const auto members = subset_members(s);
    Rational denom = 1;
    for (int i : members) denom *= parts.sizes[static_cast<std::size_t>(i)];
    const Rational each = scale * w / denom;
    // Odometer over one vertex per chosen part.
    std::vector<int> pick(members.size(), 0);
    for (;;) {
      Clique clique;
      for (std::size_t m = 0; m < members.size(); ++m) clique.vertices.push_back(offsets[members[m]] + pick[m]);
      g.weights[clique] = each;
      bool done = true;
      for (std::size_t m = members.size(); m-- > 0;) {
        if (++pick[m] < parts.sizes[static_cast<std::size_t>(members[m])]) {
          done = false;
          break;
        }
        pick[m] = 0;
      }
      if (done) break;
    }
  }
  return g;
}

SubsetWeighting unscale_from_graph(const PartSizes& parts, const CliqueWeighting& g, int t) {
  const auto offsets = part_offsets(parts);
  const int n = parts.total();
  const Rational scale = pow(Rational(n), static_cast<unsigned>(t));
  SubsetWeighting f;
  f.k = static_cast<int>(parts.sizes.size());
  for (const auto& [clique, w] : g.weights) {
    SubsetMask s = 0;
    for (int v : clique.vertices) {
      if (v < 0 || v >= n) throw std::invalid_argument("clique vertex outside the multipartite graph");
      const int part = static_cast<int>(std::upper_bound(offsets.begin(), offsets.end(), v) - offsets.begin()) - 1;
      const SubsetMask bit = SubsetMask{1} << part;
      if (s & bit) throw std::invalid_argument("clique has two vertices in one part");
      s |= bit;
    }
    if (sgn(w) != 0) f.weights[s] += w / scale;
  }
  return f;
}

}  // namespace cliquecover
