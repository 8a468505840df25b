#ifndef MW_LP_HPP
#define MW_LP_HPP

#include <optional>
#include <variant>
#include <vector>

#include "mw/rational.hpp"

namespace mw {

enum class Sense { Minimize, Maximize };
enum class Relation { GreaterEqual, Equal, LessEqual };

struct LinearConstraint {
  QVector row;
  Relation relation;
  Rational rhs;
};

/// Exact linear program. Variables are free unless flagged in `nonnegative`
/// (an empty flag vector means every variable is free).
struct LinearProgram {
  explicit LinearProgram(Index num_vars) : num_vars(num_vars), objective(QVector::Zero(num_vars)) {}

  Index num_vars;
  QVector objective;
  Sense sense = Sense::Minimize;
  std::vector<LinearConstraint> constraints;
  std::vector<bool> nonnegative;

  void add(QVector row, Relation rel, Rational rhs) {
    constraints.push_back({std::move(row), rel, std::move(rhs)});
  }
  bool is_nonnegative(Index j) const {
    return !nonnegative.empty() && nonnegative[static_cast<std::size_t>(j)];
  }
};

struct LpOptimal {
  Rational value;
  QVector point;
  /// One multiplier per constraint: b.y == value and A^T y matches the
  /// objective on free variables (bounded by it on nonnegative ones).
  QVector dual;
};

struct LpUnbounded {
  /// Recession direction of the feasible region along which the objective
  /// strictly improves.
  QVector ray;
};

struct LpInfeasible {};

using LpResult = std::variant<LpOptimal, LpUnbounded, LpInfeasible>;

/// Two-phase primal simplex with Bland's rule. Deterministic and exact.
LpResult lp_solve(const LinearProgram& lp);

/// A feasible point of the constraint system, if any (objective ignored).
std::optional<QVector> lp_feasible_point(const LinearProgram& lp);

/// Exact re-evaluation of every constraint at `x`.
bool lp_satisfies(const LinearProgram& lp, const QVector& x);

/// A ray is a valid improving direction if it keeps every constraint's
/// homogeneous part satisfied, respects nonnegativity and strictly improves
/// the objective.
bool lp_is_improving_ray(const LinearProgram& lp, const QVector& ray);

}  // namespace mw

#endif  // MW_LP_HPP
