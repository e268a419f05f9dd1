#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cliquecover/cost.hpp"
#include "cliquecover/cover.hpp"
#include "cliquecover/graph.hpp"
#include "cliquecover/lp.hpp"
#include "cliquecover/rational.hpp"

namespace cliquecover {

/// Subset of part indices; bit i stands for part i (0-based).
using SubsetMask = std::uint32_t;

inline constexpr int kMaxParts = 20;

std::vector<int> subset_members(SubsetMask s);
SubsetMask subset_from_members(const std::vector<int>& members);

/// Positive rationals summing to exactly 1.
class FractionVector {
 public:
  /// Throws std::invalid_argument unless all entries are positive and sum to 1.
  explicit FractionVector(std::vector<Rational> x);
  /// x_i = |V_i| / n in the given order.
  static FractionVector from_parts(const PartSizes& parts);

  int k() const { return static_cast<int>(x_.size()); }
  const Rational& operator[](int i) const { return x_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& values() const { return x_; }
  bool is_nonincreasing() const;
  Rational product(SubsetMask s) const;

 private:
  std::vector<Rational> x_;
};

/// Nonnegative weights on subsets of the part indices.
struct SubsetWeighting {
  int k = 0;
  std::map<SubsetMask, Rational> weights;

  Rational at(SubsetMask s) const;
  Rational cost(const CostVector& c) const;
};

/// An LP over subsets together with the subset behind each column.
struct SubsetProgram {
  LinearProgram program;
  std::vector<SubsetMask> columns;
};

/// Covering program over f(I), |I| >= t, one ">= prod x_T" row per t-set T.
SubsetProgram build_cclp(const FractionVector& x, int t, const CostVector& c);
/// Same with equality rows.
SubsetProgram build_cdlp(const FractionVector& x, int t, const CostVector& c);
/// max sum g(T) prod x_T subject to sum_{T in I} g(T) <= c_|I|, g >= 0.
SubsetProgram build_cc_dual(const FractionVector& x, int t, const CostVector& c);
/// Same as build_cc_dual with g free.
SubsetProgram build_cd_dual(const FractionVector& x, int t, const CostVector& c);

SubsetWeighting weighting_from_solution(const SubsetProgram& program, const LpSolution& solution, int k);

/// True iff every t-set constraint holds exactly (">=" or "=").
bool satisfies_subset_program(const FractionVector& x, int t, const SubsetWeighting& f, bool equality);

/// Nested prefixes {1..j}, j >= t, weighted (x_j - x_{j+1}) prod_{i<t} x_i.
/// Throws std::invalid_argument if x is not nonincreasing or t is out of
/// range, std::domain_error if c_{i+1} - c_i <= c_t fails for t <= i < k.
SubsetWeighting greedy_cover_solution(const FractionVector& x, int t, const CostVector& c);
/// c_t (prod_{i<t} x_i)(1 - sum_{i<t} x_i).
Rational greedy_cover_bound(const FractionVector& x, int t, const CostVector& c);

/// Feasible t = 2 decomposition built by merging the two smallest parts,
/// solving the smaller instance, and splitting the merged part back.
/// Throws std::invalid_argument if x is not nonincreasing or k < 2, and
/// std::domain_error unless 2c_i >= c_{i-1} + c_{i+1} for 3 <= i < k.
SubsetWeighting recursive_decomp_solution(const FractionVector& x, const CostVector& c);
/// The solutions at every recursion level, from the two-part base case up to
/// x itself; each is indexed by the parts of its own level.
std::vector<SubsetWeighting> recursive_decomp_levels(const FractionVector& x, const CostVector& c);
/// c_2 max_J (sum_J x)(sum_{not J} x).
Rational recursive_decomp_bound(const FractionVector& x, const CostVector& c);

/// Spreads f(I) over the transversal cliques of pattern I in the complete
/// multipartite graph on parts: each gets n^t f(I) / prod_{i in I} |V_i|.
CliqueWeighting scale_to_graph(const PartSizes& parts, const SubsetWeighting& f, int t);
/// f(I) = n^-t * sum of g over cliques meeting exactly the parts in I.
SubsetWeighting unscale_from_graph(const PartSizes& parts, const CliqueWeighting& g, int t);

}  // namespace cliquecover
