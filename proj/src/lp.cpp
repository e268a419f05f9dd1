#include "cliquecover/lp.hpp"

#include <sstream>
#include <stdexcept>

namespace cliquecover {

void LinearProgram::add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
  if (coefficients.size() != variable_count())
    throw std::invalid_argument("constraint has " + std::to_string(coefficients.size()) +
                                " coefficients, program has " + std::to_string(variable_count()) +
                                " variables");
  constraints.push_back(Constraint{std::move(coefficients), relation, std::move(rhs)});
}

void LinearProgram::validate() const {
  if (nonnegative.size() != variable_count())
    throw std::invalid_argument("nonnegativity flags do not match variable count");
  for (std::size_t i = 0; i < constraints.size(); ++i)
    if (constraints[i].coefficients.size() != variable_count())
      throw std::invalid_argument("constraint " + std::to_string(i) + " has wrong length");
}

std::string_view to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

struct Entry {
  std::size_t row;
  Rational value;
};
using SparseColumn = std::vector<Entry>;

enum class ColumnKind { kStructural, kSlack, kArtificial };

// min cost.x  s.t.  A x = rhs, x >= 0, rhs >= 0.
struct StandardForm {
  std::size_t rows = 0;
  std::vector<SparseColumn> columns;
  std::vector<ColumnKind> kind;
  std::vector<Rational> cost;
  std::vector<Rational> rhs;
  std::vector<bool> flipped;
  std::vector<std::size_t> variable;  // structural column -> original variable
  std::vector<int> sign;              // structural column -> +1 / -1 (free split)
  std::vector<std::size_t> initial_basis;

  std::size_t add_column(SparseColumn col, ColumnKind k, Rational c) {
    columns.push_back(std::move(col));
    kind.push_back(k);
    cost.push_back(std::move(c));
    variable.push_back(0);
    sign.push_back(0);
    return columns.size() - 1;
  }
};

StandardForm to_standard_form(const LinearProgram& lp) {
  StandardForm sf;
  sf.rows = lp.constraints.size();
  const Rational objective_sign = lp.sense == Sense::kMinimize ? 1 : -1;

  sf.flipped.resize(sf.rows);
  std::vector<Relation> relation(sf.rows);
  for (std::size_t i = 0; i < sf.rows; ++i) {
    const auto& con = lp.constraints[i];
    sf.flipped[i] = sgn(con.rhs) < 0;
    sf.rhs.push_back(sf.flipped[i] ? Rational(-con.rhs) : con.rhs);
    relation[i] = con.relation;
    if (sf.flipped[i] && con.relation != Relation::kEqual)
      relation[i] = con.relation == Relation::kGreaterEqual ? Relation::kLessEqual : Relation::kGreaterEqual;
  }

  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    for (int s : {1, -1}) {
      if (s == -1 && lp.nonnegative[j]) continue;
      SparseColumn col;
      for (std::size_t i = 0; i < sf.rows; ++i) {
        const Rational& a = lp.constraints[i].coefficients[j];
        if (sgn(a) == 0) continue;
        Rational v = a;
        if (sf.flipped[i] != (s == -1)) v = -v;
        col.push_back(Entry{i, std::move(v)});
      }
      Rational c = lp.objective[j] * objective_sign;
      if (s == -1) c = -c;
      auto idx = sf.add_column(std::move(col), ColumnKind::kStructural, std::move(c));
      sf.variable[idx] = j;
      sf.sign[idx] = s;
    }
  }

  sf.initial_basis.assign(sf.rows, 0);
  std::vector<bool> has_basis(sf.rows, false);
  for (std::size_t i = 0; i < sf.rows; ++i) {
    if (relation[i] == Relation::kEqual) continue;
    const bool slack_is_basic = relation[i] == Relation::kLessEqual;
    auto idx = sf.add_column({Entry{i, Rational(slack_is_basic ? 1 : -1)}}, ColumnKind::kSlack, 0);
    if (slack_is_basic) {
      sf.initial_basis[i] = idx;
      has_basis[i] = true;
    }
  }
  for (std::size_t i = 0; i < sf.rows; ++i) {
    if (has_basis[i]) continue;
    sf.initial_basis[i] = sf.add_column({Entry{i, Rational(1)}}, ColumnKind::kArtificial, 0);
  }
  return sf;
}

class RevisedSimplex {
 public:
  explicit RevisedSimplex(const StandardForm& sf)
      : sf_(sf), basis_(sf.initial_basis), xb_(sf.rhs), in_basis_(sf.columns.size(), false) {
    const std::size_t m = sf.rows;
    binv_.assign(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i) {
      binv_[i][i] = 1;
      in_basis_[basis_[i]] = true;
    }
  }

  enum class Outcome { kOptimal, kUnbounded };

  Outcome run(const std::vector<Rational>& cost, bool allow_artificial) {
    const std::size_t m = sf_.rows;
    std::vector<Rational> y(m);
    std::vector<Rational> d(m);
    for (;;) {
      dual_prices(cost, y);
      std::size_t entering = sf_.columns.size();
      for (std::size_t j = 0; j < sf_.columns.size(); ++j) {
        if (in_basis_[j]) continue;
        if (!allow_artificial && sf_.kind[j] == ColumnKind::kArtificial) continue;
        if (sgn(reduced_cost(cost, y, j)) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == sf_.columns.size()) return Outcome::kOptimal;

      ftran(entering, d);
      std::size_t leaving = m;
      Rational best_ratio;
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(d[i]) <= 0) continue;
        Rational ratio = xb_[i] / d[i];
        if (leaving == m || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == m) return Outcome::kUnbounded;
      pivot(entering, leaving, d);
    }
  }

  /// Replaces basic artificial columns by structural or slack columns where
  /// possible. Rows that stay artificial are redundant and sit at zero.
  void drive_out_artificials() {
    const std::size_t m = sf_.rows;
    std::vector<Rational> d(m);
    for (std::size_t r = 0; r < m; ++r) {
      if (sf_.kind[basis_[r]] != ColumnKind::kArtificial) continue;
      for (std::size_t j = 0; j < sf_.columns.size(); ++j) {
        if (in_basis_[j] || sf_.kind[j] == ColumnKind::kArtificial) continue;
        Rational alpha = 0;
        for (const auto& e : sf_.columns[j]) alpha += binv_[r][e.row] * e.value;
        if (sgn(alpha) == 0) continue;
        ftran(j, d);
        pivot(j, r, d);
        break;
      }
    }
  }

  void dual_prices(const std::vector<Rational>& cost, std::vector<Rational>& y) const {
    const std::size_t m = sf_.rows;
    for (auto& v : y) v = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(binv_[i][k]) != 0) y[k] += cb * binv_[i][k];
    }
  }

  Rational column_value(std::size_t j) const {
    for (std::size_t i = 0; i < sf_.rows; ++i)
      if (basis_[i] == j) return xb_[i];
    return 0;
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational total = 0;
    for (std::size_t i = 0; i < sf_.rows; ++i) total += cost[basis_[i]] * xb_[i];
    return total;
  }

  std::size_t pivots() const { return pivots_; }

 private:
  Rational reduced_cost(const std::vector<Rational>& cost, const std::vector<Rational>& y,
                        std::size_t j) const {
    Rational r = cost[j];
    for (const auto& e : sf_.columns[j]) r -= y[e.row] * e.value;
    return r;
  }

  void ftran(std::size_t j, std::vector<Rational>& d) const {
    const std::size_t m = sf_.rows;
    for (std::size_t i = 0; i < m; ++i) {
      d[i] = 0;
      for (const auto& e : sf_.columns[j]) d[i] += binv_[i][e.row] * e.value;
    }
  }

  void pivot(std::size_t entering, std::size_t row, const std::vector<Rational>& d) {
    const std::size_t m = sf_.rows;
    const Rational p = d[row];
    for (auto& v : binv_[row]) v /= p;
    xb_[row] /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || sgn(d[i]) == 0) continue;
      const Rational factor = d[i];
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(binv_[row][k]) != 0) binv_[i][k] -= factor * binv_[row][k];
      xb_[i] -= factor * xb_[row];
    }
    in_basis_[basis_[row]] = false;
    in_basis_[entering] = true;
    basis_[row] = entering;
    ++pivots_;
  }

  const StandardForm& sf_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> xb_;
  std::vector<bool> in_basis_;
  std::vector<std::vector<Rational>> binv_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  lp.validate();
  const StandardForm sf = to_standard_form(lp);
  RevisedSimplex simplex(sf);
  LpSolution sol;

  std::vector<Rational> phase1_cost(sf.columns.size());
  bool needs_phase1 = false;
  for (std::size_t j = 0; j < sf.columns.size(); ++j) {
    if (sf.kind[j] == ColumnKind::kArtificial) {
      phase1_cost[j] = 1;
      needs_phase1 = true;
    }
  }
  if (needs_phase1) {
    simplex.run(phase1_cost, true);
    if (sgn(simplex.objective(phase1_cost)) > 0) {
      sol.status = LpStatus::kInfeasible;
      sol.pivots = simplex.pivots();
      return sol;
    }
    simplex.drive_out_artificials();
  }

  auto outcome = simplex.run(sf.cost, false);
  sol.pivots = simplex.pivots();
  if (outcome == RevisedSimplex::Outcome::kUnbounded) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }

  sol.status = LpStatus::kOptimal;
  sol.primal.assign(lp.variable_count(), Rational(0));
  for (std::size_t j = 0; j < sf.columns.size(); ++j) {
    if (sf.kind[j] != ColumnKind::kStructural) continue;
    Rational v = simplex.column_value(j);
    if (sgn(v) == 0) continue;
    if (sf.sign[j] > 0)
      sol.primal[sf.variable[j]] += v;
    else
      sol.primal[sf.variable[j]] -= v;
  }

  std::vector<Rational> y(sf.rows);
  simplex.dual_prices(sf.cost, y);
  const bool maximize = lp.sense == Sense::kMaximize;
  sol.dual.resize(sf.rows);
  for (std::size_t i = 0; i < sf.rows; ++i) {
    Rational v = sf.flipped[i] ? Rational(-y[i]) : y[i];
    sol.dual[i] = maximize ? Rational(-v) : v;
  }
  sol.value = 0;
  for (std::size_t j = 0; j < lp.variable_count(); ++j) sol.value += lp.objective[j] * sol.primal[j];
  return sol;
}

CertificateReport check_certificate(const LinearProgram& lp, const LpSolution& sol) {
  auto fail = [](CertificateFailure f, std::string detail) { return CertificateReport{f, std::move(detail)}; };
  if (sol.status != LpStatus::kOptimal) return fail(CertificateFailure::kNotOptimal, "solution is not optimal");
  const std::size_t n = lp.variable_count();
  const std::size_t m = lp.constraints.size();
  if (sol.primal.size() != n || sol.dual.size() != m || lp.nonnegative.size() != n)
    return fail(CertificateFailure::kDimension, "primal/dual vector length mismatch");

  for (std::size_t j = 0; j < n; ++j)
    if (lp.nonnegative[j] && sgn(sol.primal[j]) < 0)
      return fail(CertificateFailure::kPrimalInfeasible, "variable " + std::to_string(j) + " is negative");
  for (std::size_t i = 0; i < m; ++i) {
    const auto& con = lp.constraints[i];
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j) lhs += con.coefficients[j] * sol.primal[j];
    const bool ok = con.relation == Relation::kEqual          ? lhs == con.rhs
                    : con.relation == Relation::kGreaterEqual ? lhs >= con.rhs
                                                              : lhs <= con.rhs;
    if (!ok) return fail(CertificateFailure::kPrimalInfeasible, "constraint " + std::to_string(i) + " violated");
  }

  const int orientation = lp.sense == Sense::kMinimize ? 1 : -1;
  for (std::size_t i = 0; i < m; ++i) {
    const int s = sgn(sol.dual[i]) * orientation;
    const auto rel = lp.constraints[i].relation;
    if ((rel == Relation::kGreaterEqual && s < 0) || (rel == Relation::kLessEqual && s > 0))
      return fail(CertificateFailure::kDualSign, "dual multiplier " + std::to_string(i) + " has wrong sign");
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational reduced = lp.objective[j];
    for (std::size_t i = 0; i < m; ++i) reduced -= sol.dual[i] * lp.constraints[i].coefficients[j];
    const int s = sgn(reduced) * orientation;
    if ((lp.nonnegative[j] && s < 0) || (!lp.nonnegative[j] && s != 0))
      return fail(CertificateFailure::kDualInfeasible, "reduced cost of variable " + std::to_string(j));
  }

  Rational primal_obj = 0;
  for (std::size_t j = 0; j < n; ++j) primal_obj += lp.objective[j] * sol.primal[j];
  if (primal_obj != sol.value) return fail(CertificateFailure::kObjectiveMismatch, "reported value differs from c.x");
  Rational dual_obj = 0;
  for (std::size_t i = 0; i < m; ++i) dual_obj += lp.constraints[i].rhs * sol.dual[i];
  if (dual_obj != primal_obj)
    return fail(CertificateFailure::kDualityGap, "c.x = " + to_string(primal_obj) + " but b.y = " + to_string(dual_obj));
  return {};
}

std::string write_lp_text(const LinearProgram& lp) {
  std::ostringstream out;
  out << (lp.sense == Sense::kMinimize ? "minimize" : "maximize");
  for (const auto& c : lp.objective) out << ' ' << to_string(c);
  out << '\n';
  for (const auto& con : lp.constraints) {
    for (const auto& a : con.coefficients) out << to_string(a) << ' ';
    out << (con.relation == Relation::kGreaterEqual ? ">=" : con.relation == Relation::kEqual ? "=" : "<=");
    out << ' ' << to_string(con.rhs) << '\n';
  }
  for (std::size_t j = 0; j < lp.variable_count(); ++j)
    if (!lp.nonnegative[j]) out << "free " << j << '\n';
  return out.str();
}

LinearProgram parse_lp_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  LinearProgram lp;
  bool have_objective = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty() || words.front().front() == '#') continue;
    auto where = [&] { return "LP text line " + std::to_string(line_no) + ": "; };
    if (!have_objective) {
      if (words.front() != "minimize" && words.front() != "maximize")
        throw std::invalid_argument(where() + "expected 'minimize' or 'maximize'");
      const std::size_t n = words.size() - 1;
      lp = LinearProgram(n, words.front() == "minimize" ? Sense::kMinimize : Sense::kMaximize);
      for (std::size_t j = 0; j < n; ++j) lp.objective[j] = parse_rational(words[j + 1]);
      have_objective = true;
      continue;
    }
    if (words.front() == "free") {
      if (words.size() != 2) throw std::invalid_argument(where() + "expected 'free <index>'");
      auto j = std::stoul(words[1]);
      if (j >= lp.variable_count()) throw std::invalid_argument(where() + "free index out of range");
      lp.nonnegative[j] = false;
      continue;
    }
    if (words.size() != lp.variable_count() + 2)
      throw std::invalid_argument(where() + "constraint has wrong number of fields");
    std::vector<Rational> coef;
    for (std::size_t j = 0; j < lp.variable_count(); ++j) coef.push_back(parse_rational(words[j]));
    const auto& rel = words[lp.variable_count()];
    Relation relation;
    if (rel == ">=") relation = Relation::kGreaterEqual;
    else if (rel == "<=") relation = Relation::kLessEqual;
    else if (rel == "=") relation = Relation::kEqual;
    else throw std::invalid_argument(where() + "unknown relation '" + rel + "'");
    lp.add_constraint(std::move(coef), relation, parse_rational(words.back()));
  }
  if (!have_objective) throw std::invalid_argument("LP text has no objective line");
  return lp;
}

}  // namespace cliquecover
