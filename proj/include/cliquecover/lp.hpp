#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cliquecover/rational.hpp"

namespace cliquecover {

enum class Relation { kGreaterEqual, kEqual, kLessEqual };
enum class Sense { kMinimize, kMaximize };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kGreaterEqual;
  Rational rhs;
};

/// Dense LP over exact rationals. Variables default to nonnegative.
struct LinearProgram {
  Sense sense = Sense::kMinimize;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<bool> nonnegative;

  explicit LinearProgram(std::size_t variables = 0, Sense s = Sense::kMinimize)
      : sense(s), objective(variables), nonnegative(variables, true) {}

  std::size_t variable_count() const { return objective.size(); }
  /// Appends a constraint; coefficients must have variable_count() entries.
  void add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs);
  /// Throws std::invalid_argument on any dimension mismatch.
  void validate() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view to_string(LpStatus status);

/// Primal/dual pair. Dual multipliers follow the Lagrangian sign convention
/// of the program's sense: for a minimization, y >= 0 on ">=" rows and
/// y <= 0 on "<=" rows (reversed for maximization); "=" rows are free.
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
  std::size_t pivots = 0;
};

/// Two-phase revised simplex with Bland's rule. Exact; deterministic.
LpSolution solve_lp(const LinearProgram& lp);

enum class CertificateFailure {
  kNone,
  kNotOptimal,
  kDimension,
  kPrimalInfeasible,
  kDualSign,
  kDualInfeasible,
  kObjectiveMismatch,
  kDualityGap,
};

struct CertificateReport {
  CertificateFailure failure = CertificateFailure::kNone;
  std::string detail;

  bool valid() const { return failure == CertificateFailure::kNone; }
  explicit operator bool() const { return valid(); }
};

/// Verifies primal feasibility, dual feasibility and exact equality of the
/// primal objective, the reported value and the dual objective.
CertificateReport check_certificate(const LinearProgram& lp, const LpSolution& sol);

/// Debug dump: "minimize|maximize c...", one "a... >=|=|<= b" line per
/// constraint, then "free j" for each unrestricted variable.
std::string write_lp_text(const LinearProgram& lp);
LinearProgram parse_lp_text(std::string_view text);

}  // namespace cliquecover
