#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "cliquecover/lp.hpp"
#include "doctest.h"

using namespace cliquecover;

namespace {

LinearProgram single_variable(Relation rel, long rhs) {
  LinearProgram lp(1);
  lp.objective[0] = 1;
  lp.add_constraint({Rational(1)}, rel, Rational(rhs));
  return lp;
}

// Floating-point oracle: for min c.x, A x >= b, x >= 0 with c > 0, solve the
// dual max b.y, A^T y <= c, y >= 0 by a dense tableau with Dantzig pricing.
double float_dual_value(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                        const std::vector<double>& c) {
  const std::size_t m = a.size();        // dual variables
  const std::size_t n = c.size();        // dual constraints
  const std::size_t cols = m + n + 1;
  std::vector<std::vector<double>> t(n + 1, std::vector<double>(cols, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) t[j][i] = a[i][j];
    t[j][m + j] = 1.0;
    t[j][cols - 1] = c[j];
  }
  for (std::size_t i = 0; i < m; ++i) t[n][i] = -b[i];
  for (int iter = 0; iter < 10000; ++iter) {
    std::size_t enter = cols;
    double most = -1e-12;
    for (std::size_t k = 0; k + 1 < cols; ++k)
      if (t[n][k] < most) {
        most = t[n][k];
        enter = k;
      }
    if (enter == cols) break;
    std::size_t leave = n;
    double best = 0;
    for (std::size_t r = 0; r < n; ++r)
      if (t[r][enter] > 1e-12) {
        double ratio = t[r][cols - 1] / t[r][enter];
        if (leave == n || ratio < best) {
          best = ratio;
          leave = r;
        }
      }
    REQUIRE(leave != n);
    double p = t[leave][enter];
    for (auto& v : t[leave]) v /= p;
    for (std::size_t r = 0; r <= n; ++r) {
      if (r == leave) continue;
      double f = t[r][enter];
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) t[r][k] -= f * t[leave][k];
    }
  }
  return t[n][cols - 1];
}

}  // namespace

TEST_CASE("single-variable programs") {
  auto sol = solve_lp(single_variable(Relation::kGreaterEqual, 3));
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.value == 3);
  CHECK(sol.primal[0] == 3);
  CHECK(sol.dual[0] == 1);
  CHECK(check_certificate(single_variable(Relation::kGreaterEqual, 3), sol));

  LinearProgram infeasible(1);
  infeasible.add_constraint({Rational(1)}, Relation::kGreaterEqual, 1);
  infeasible.add_constraint({Rational(1)}, Relation::kLessEqual, 0);
  CHECK(solve_lp(infeasible).status == LpStatus::kInfeasible);

  LinearProgram unbounded(1, Sense::kMaximize);
  unbounded.objective[0] = 1;
  unbounded.add_constraint({Rational(1)}, Relation::kGreaterEqual, 1);
  CHECK(solve_lp(unbounded).status == LpStatus::kUnbounded);

  LinearProgram free_var(1);
  free_var.objective[0] = 1;
  free_var.nonnegative[0] = false;
  free_var.add_constraint({Rational(1)}, Relation::kGreaterEqual, -5);
  auto fsol = solve_lp(free_var);
  REQUIRE(fsol.status == LpStatus::kOptimal);
  CHECK(fsol.value == -5);
  CHECK(check_certificate(free_var, fsol));
}

TEST_CASE("dimension mismatch is rejected") {
  LinearProgram lp(2);
  CHECK_THROWS_AS(lp.add_constraint({Rational(1)}, Relation::kEqual, 1), std::invalid_argument);
  lp.constraints.push_back(Constraint{{Rational(1)}, Relation::kEqual, 1});
  CHECK_THROWS_AS(solve_lp(lp), std::invalid_argument);
}

TEST_CASE("two-variable cover program and its certificate") {
  // min f1 + f2 + f12  s.t. f1 + f12 >= 1/2, f2 + f12 >= 1/4
  LinearProgram lp(3);
  lp.objective = {1, 1, 1};
  lp.add_constraint({1, 0, 1}, Relation::kGreaterEqual, make_rational(1, 2));
  lp.add_constraint({0, 1, 1}, Relation::kGreaterEqual, make_rational(1, 4));
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.value == make_rational(1, 2));
  CHECK(check_certificate(lp, sol));

  auto perturbed = sol;
  perturbed.primal[0] += 1;
  auto report = check_certificate(lp, perturbed);
  CHECK_FALSE(report.valid());

  auto bad_dual = sol;
  bad_dual.dual[0] = -1;
  CHECK(check_certificate(lp, bad_dual).failure == CertificateFailure::kDualSign);

  LpSolution not_optimal;
  CHECK(check_certificate(lp, not_optimal).failure == CertificateFailure::kNotOptimal);
}

TEST_CASE("handcrafted certificate for a one-edge cover program") {
  // variable f({1,2}); constraint f({1,2}) >= 1/4
  LinearProgram lp(1);
  lp.objective = {1};
  lp.add_constraint({Rational(1)}, Relation::kGreaterEqual, make_rational(1, 4));
  LpSolution handmade;
  handmade.status = LpStatus::kOptimal;
  handmade.value = make_rational(1, 4);
  handmade.primal = {make_rational(1, 4)};
  handmade.dual = {Rational(1)};
  CHECK(check_certificate(lp, handmade));
}

TEST_CASE("equality and redundant rows") {
  // x + y = 2, 2x + 2y = 4 (redundant), x - y <= 0 ; min x + 2y -> x = y = 1
  LinearProgram lp(2);
  lp.objective = {1, 2};
  lp.add_constraint({1, 1}, Relation::kEqual, 2);
  lp.add_constraint({2, 2}, Relation::kEqual, 4);
  lp.add_constraint({1, -1}, Relation::kLessEqual, 0);
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.value == 3);
  CHECK(check_certificate(lp, sol));
}

TEST_CASE("maximization certificates") {
  // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6, x <= 3
  LinearProgram lp(2, Sense::kMaximize);
  lp.objective = {3, 2};
  lp.add_constraint({1, 1}, Relation::kLessEqual, 4);
  lp.add_constraint({1, 3}, Relation::kLessEqual, 6);
  lp.add_constraint({1, 0}, Relation::kLessEqual, 3);
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.value == 11);
  CHECK(check_certificate(lp, sol));
  for (const auto& y : sol.dual) CHECK(sgn(y) >= 0);
}

TEST_CASE("agreement with a floating-point oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coef(0, 9);
  std::uniform_int_distribution<int> positive(1, 9);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + rng() % 20;
    const std::size_t m = 1 + rng() % 12;
    LinearProgram lp(n);
    std::vector<std::vector<double>> a(m, std::vector<double>(n));
    std::vector<double> b(m), c(n);
    for (std::size_t j = 0; j < n; ++j) {
      int v = positive(rng);
      lp.objective[j] = v;
      c[j] = v;
    }
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> row(n);
      for (std::size_t j = 0; j < n; ++j) {
        int v = coef(rng);
        row[j] = v;
        a[i][j] = v;
      }
      if (std::all_of(row.begin(), row.end(), [](const Rational& r) { return sgn(r) == 0; })) {
        row[0] = 1;
        a[i][0] = 1;
      }
      int rhs = positive(rng);
      b[i] = rhs;
      lp.add_constraint(std::move(row), Relation::kGreaterEqual, rhs);
    }
    auto sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::kOptimal);
    REQUIRE(check_certificate(lp, sol));
    double expected = float_dual_value(a, b, c);
    double got = sol.value.get_d();
    CHECK(std::abs(got - expected) <= 1e-6 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("optimal value is invariant under column permutation") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 50; ++iter) {
    const std::size_t n = 2 + rng() % 8;
    const std::size_t m = 1 + rng() % 6;
    LinearProgram lp(n);
    for (std::size_t j = 0; j < n; ++j) lp.objective[j] = 1 + static_cast<long>(rng() % 5);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<long>(rng() % 4);
      row[rng() % n] += 1;
      lp.add_constraint(std::move(row), i % 3 == 0 ? Relation::kEqual : Relation::kGreaterEqual,
                        1 + static_cast<long>(rng() % 4));
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    LinearProgram permuted(n);
    for (std::size_t j = 0; j < n; ++j) permuted.objective[j] = lp.objective[perm[j]];
    for (const auto& con : lp.constraints) {
      std::vector<Rational> row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = con.coefficients[perm[j]];
      permuted.add_constraint(std::move(row), con.relation, con.rhs);
    }
    auto a = solve_lp(lp);
    auto b = solve_lp(permuted);
    REQUIRE(a.status == b.status);
    if (a.status == LpStatus::kOptimal) {
      CHECK(a.value == b.value);
      CHECK(check_certificate(lp, a));
      CHECK(check_certificate(permuted, b));
    }
  }
}

TEST_CASE("LP text dump round-trips") {
  LinearProgram lp(2, Sense::kMaximize);
  lp.objective = {make_rational(1, 2), 3};
  lp.nonnegative[1] = false;
  lp.add_constraint({1, -1}, Relation::kLessEqual, make_rational(7, 3));
  lp.add_constraint({0, 1}, Relation::kEqual, 2);
  auto text = write_lp_text(lp);
  auto back = parse_lp_text(text);
  CHECK(write_lp_text(back) == text);
  CHECK(solve_lp(back).value == solve_lp(lp).value);
  CHECK_THROWS_AS(parse_lp_text("1 2 >= 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lp_text("minimize 1\n1 ~ 3\n"), std::invalid_argument);
}
