#include "mw/lp.hpp"

#include <stdexcept>

#include "mw/linalg.hpp"

namespace mw {

namespace {

// Dense tableau in standard form: min c.x, A x = b, x >= 0, b >= 0.
class Tableau {
 public:
  Tableau(QMatrix a, QVector b, std::vector<Index> basis)
      : rows_(a.rows()), cols_(a.cols()), t_(a.rows(), a.cols() + 1), basis_(std::move(basis)) {
    t_.leftCols(cols_) = a;
    t_.col(cols_) = b;
  }

  Index rows() const { return rows_; }
  const std::vector<Index>& basis() const { return basis_; }
  const Rational& at(Index r, Index c) const { return t_(r, c); }
  const Rational& rhs(Index r) const { return t_(r, cols_); }

  // Runs Bland's rule on cost vector c, restricted to columns < active_cols.
  // Returns the entering column on unboundedness, -1 on optimality.
  Index optimize(const QVector& c, Index active_cols) {
    for (;;) {
      const QVector d = reduced_costs(c);
      Index enter = -1;
      for (Index j = 0; j < active_cols; ++j)
        if (d(j) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return -1;
      Index leave = -1;
      Rational best;
      for (Index r = 0; r < rows_; ++r) {
        if (t_(r, enter) <= 0) continue;
        Rational ratio = rhs(r) / t_(r, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(r)] <
                                  basis_[static_cast<std::size_t>(leave)])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return enter;
      pivot(leave, enter);
    }
  }

  QVector reduced_costs(const QVector& c) const {
    QVector d = c;
    for (Index r = 0; r < rows_; ++r) {
      const Rational& cb = c(basis_[static_cast<std::size_t>(r)]);
      if (cb == 0) continue;
      for (Index j = 0; j < cols_; ++j)
        if (t_(r, j) != 0) d(j) -= cb * t_(r, j);
    }
    return d;
  }

  Rational objective(const QVector& c) const {
    Rational v = 0;
    for (Index r = 0; r < rows_; ++r) v += c(basis_[static_cast<std::size_t>(r)]) * rhs(r);
    return v;
  }

  QVector solution() const {
    QVector x = QVector::Zero(cols_);
    for (Index r = 0; r < rows_; ++r) x(basis_[static_cast<std::size_t>(r)]) = rhs(r);
    return x;
  }

  void pivot(Index pr, Index pc) {
    const Rational inv = Rational(1) / t_(pr, pc);
    for (Index k = 0; k <= cols_; ++k)
      if (t_(pr, k) != 0) t_(pr, k) *= inv;
    for (Index r = 0; r < rows_; ++r) {
      if (r == pr || t_(r, pc) == 0) continue;
      const Rational f = t_(r, pc);
      for (Index k = 0; k <= cols_; ++k)
        if (t_(pr, k) != 0) t_(r, k) -= f * t_(pr, k);
    }
    basis_[static_cast<std::size_t>(pr)] = pc;
  }

  void drop_row(Index r) {
    QMatrix next(rows_ - 1, cols_ + 1);
    next.topRows(r) = t_.topRows(r);
    next.bottomRows(rows_ - 1 - r) = t_.bottomRows(rows_ - 1 - r);
    t_ = std::move(next);
    basis_.erase(basis_.begin() + r);
    --rows_;
  }

 private:
  Index rows_;
  Index cols_;
  QMatrix t_;
  std::vector<Index> basis_;
};

struct StandardForm {
  QMatrix a;
  QVector b;
  QVector cost;              // phase-2 costs (minimization) over all columns
  std::vector<Index> basis;  // initial basis (slacks or artificials)
  Index structural = 0;      // columns before artificials
  std::vector<Index> pos_col, neg_col;  // per original variable; neg_col -1 if nonnegative
  std::vector<Rational> row_sign;       // +1 or -1 applied to each constraint
};

StandardForm to_standard_form(const LinearProgram& lp) {
  StandardForm sf;
  const Index m = static_cast<Index>(lp.constraints.size());
  Index col = 0;
  for (Index j = 0; j < lp.num_vars; ++j) {
    sf.pos_col.push_back(col++);
    sf.neg_col.push_back(lp.is_nonnegative(j) ? -1 : col++);
  }
  std::vector<Index> slack_col(static_cast<std::size_t>(m), -1);
  for (Index i = 0; i < m; ++i)
    if (lp.constraints[static_cast<std::size_t>(i)].relation != Relation::Equal)
      slack_col[static_cast<std::size_t>(i)] = col++;
  sf.structural = col;

  // Row signs make b >= 0; rows whose slack then has coefficient +1 start
  // with the slack basic, all others get an artificial.
  std::vector<Index> art_col(static_cast<std::size_t>(m), -1);
  Index total = col;
  for (Index i = 0; i < m; ++i) {
    const auto& c = lp.constraints[static_cast<std::size_t>(i)];
    const Rational sign = c.rhs < 0 ? Rational(-1) : Rational(1);
    sf.row_sign.push_back(sign);
    const Rational slack_coef = c.relation == Relation::LessEqual      ? sign
                                : c.relation == Relation::GreaterEqual ? -sign
                                                                       : Rational(0);
    if (slack_coef == 1)
      sf.basis.push_back(slack_col[static_cast<std::size_t>(i)]);
    else {
      art_col[static_cast<std::size_t>(i)] = total;
      sf.basis.push_back(total++);
    }
  }

  sf.a = QMatrix::Zero(m, total);
  sf.b = QVector::Zero(m);
  for (Index i = 0; i < m; ++i) {
    const auto& c = lp.constraints[static_cast<std::size_t>(i)];
    if (c.row.size() != lp.num_vars) throw std::invalid_argument("lp_solve: constraint width");
    const Rational& s = sf.row_sign[static_cast<std::size_t>(i)];
    for (Index j = 0; j < lp.num_vars; ++j) {
      if (c.row(j) == 0) continue;
      sf.a(i, sf.pos_col[static_cast<std::size_t>(j)]) = s * c.row(j);
      if (sf.neg_col[static_cast<std::size_t>(j)] >= 0)
        sf.a(i, sf.neg_col[static_cast<std::size_t>(j)]) = -s * c.row(j);
    }
    if (slack_col[static_cast<std::size_t>(i)] >= 0)
      sf.a(i, slack_col[static_cast<std::size_t>(i)]) =
          c.relation == Relation::LessEqual ? s : -s;
    if (art_col[static_cast<std::size_t>(i)] >= 0) sf.a(i, art_col[static_cast<std::size_t>(i)]) = 1;
    sf.b(i) = s * c.rhs;
  }

  sf.cost = QVector::Zero(total);
  const Rational obj_sign = lp.sense == Sense::Minimize ? Rational(1) : Rational(-1);
  for (Index j = 0; j < lp.num_vars; ++j) {
    sf.cost(sf.pos_col[static_cast<std::size_t>(j)]) = obj_sign * lp.objective(j);
    if (sf.neg_col[static_cast<std::size_t>(j)] >= 0)
      sf.cost(sf.neg_col[static_cast<std::size_t>(j)]) = -obj_sign * lp.objective(j);
  }
  return sf;
}

QVector to_original(const StandardForm& sf, const QVector& x) {
  QVector out(static_cast<Index>(sf.pos_col.size()));
  for (std::size_t j = 0; j < sf.pos_col.size(); ++j) {
    out(static_cast<Index>(j)) = x(sf.pos_col[j]);
    if (sf.neg_col[j] >= 0) out(static_cast<Index>(j)) -= x(sf.neg_col[j]);
  }
  return out;
}

}  // namespace

LpResult lp_solve(const LinearProgram& lp) {
  if (lp.objective.size() != lp.num_vars) throw std::invalid_argument("lp_solve: objective width");
  StandardForm sf = to_standard_form(lp);
  const Index total = sf.a.cols();
  Tableau tab(sf.a, sf.b, sf.basis);

  // Original row index for every tableau row; rows may be dropped below.
  std::vector<Index> row_origin(static_cast<std::size_t>(sf.a.rows()));
  for (std::size_t i = 0; i < row_origin.size(); ++i) row_origin[i] = static_cast<Index>(i);

  if (total > sf.structural) {
    QVector phase1 = QVector::Zero(total);
    for (Index j = sf.structural; j < total; ++j) phase1(j) = 1;
    tab.optimize(phase1, total);  // bounded below by 0
    if (tab.objective(phase1) > 0) return LpInfeasible{};
    for (Index r = 0; r < tab.rows();) {
      if (tab.basis()[static_cast<std::size_t>(r)] < sf.structural) {
        ++r;
        continue;
      }
      Index col = -1;
      for (Index j = 0; j < sf.structural; ++j)
        if (tab.at(r, j) != 0) {
          col = j;
          break;
        }
      if (col >= 0) {
        tab.pivot(r, col);
        ++r;
      } else {
        tab.drop_row(r);
        row_origin.erase(row_origin.begin() + r);
      }
    }
  }

  const Index enter = tab.optimize(sf.cost, sf.structural);
  if (enter >= 0) {
    QVector dir = QVector::Zero(total);
    dir(enter) = 1;
    for (Index r = 0; r < tab.rows(); ++r) dir(tab.basis()[static_cast<std::size_t>(r)]) = -tab.at(r, enter);
    return LpUnbounded{to_original(sf, dir)};
  }

  LpOptimal opt;
  opt.point = to_original(sf, tab.solution());
  opt.value = 0;
  for (Index j = 0; j < lp.num_vars; ++j) opt.value += lp.objective(j) * opt.point(j);

  // Duals from the final basis: B^T y = c_B in the standard form.
  const Index m = tab.rows();
  QMatrix bt(m, m);
  QVector cb(m);
  for (Index r = 0; r < m; ++r) {
    const Index bcol = tab.basis()[static_cast<std::size_t>(r)];
    cb(r) = sf.cost(bcol);
    for (Index k = 0; k < m; ++k) bt(r, k) = sf.a(row_origin[static_cast<std::size_t>(k)], bcol);
  }
  opt.dual = QVector::Zero(static_cast<Index>(lp.constraints.size()));
  if (m > 0) {
    const auto y = solve_linear(bt, cb);
    const Rational obj_sign = lp.sense == Sense::Minimize ? Rational(1) : Rational(-1);
    for (Index k = 0; k < m; ++k) {
      const Index orig = row_origin[static_cast<std::size_t>(k)];
      opt.dual(orig) = obj_sign * sf.row_sign[static_cast<std::size_t>(orig)] * y->particular(k);
    }
  }
  return opt;
}

std::optional<QVector> lp_feasible_point(const LinearProgram& lp) {
  LinearProgram feas = lp;
  feas.objective = QVector::Zero(lp.num_vars);
  feas.sense = Sense::Minimize;
  auto res = lp_solve(feas);
  if (auto* opt = std::get_if<LpOptimal>(&res)) return opt->point;
  return std::nullopt;
}

bool lp_satisfies(const LinearProgram& lp, const QVector& x) {
  if (x.size() != lp.num_vars) return false;
  for (Index j = 0; j < lp.num_vars; ++j)
    if (lp.is_nonnegative(j) && x(j) < 0) return false;
  for (const auto& c : lp.constraints) {
    const Rational lhs = c.row.dot(x);
    switch (c.relation) {
      case Relation::GreaterEqual:
        if (lhs < c.rhs) return false;
        break;
      case Relation::LessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

bool lp_is_improving_ray(const LinearProgram& lp, const QVector& ray) {
  if (ray.size() != lp.num_vars) return false;
  for (Index j = 0; j < lp.num_vars; ++j)
    if (lp.is_nonnegative(j) && ray(j) < 0) return false;
  for (const auto& c : lp.constraints) {
    const Rational lhs = c.row.dot(ray);
    if ((c.relation == Relation::GreaterEqual && lhs < 0) ||
        (c.relation == Relation::LessEqual && lhs > 0) ||
        (c.relation == Relation::Equal && lhs != 0))
      return false;
  }
  const Rational gain = lp.objective.dot(ray);
  return lp.sense == Sense::Minimize ? gain < 0 : gain > 0;
}

}  // namespace mw
