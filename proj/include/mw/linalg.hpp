#ifndef MW_LINALG_HPP
#define MW_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mw/rational.hpp"

/*
 * Exact linear algebra over an arbitrary field scalar. Every routine does
 * Gauss-Jordan elimination with the first nonzero entry as pivot; no pivot
 * magnitudes are compared, so results are exact whenever Scalar is.
 */
namespace mw {

template <typename Scalar>
struct Rref {
  MatrixX<Scalar> reduced;
  std::vector<Index> pivots;
};

template <typename Derived>
Rref<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Rref<Scalar> out{m.eval(), {}};
  MatrixX<Scalar>& a = out.reduced;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index pick = row;
    while (pick < a.rows() && a(pick, col) == 0) ++pick;
    if (pick == a.rows()) continue;
    a.row(pick).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Index k = col; k < a.cols(); ++k) a(row, k) *= inv;
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Scalar f = a(r, col);
      for (Index k = col; k < a.cols(); ++k) a(r, k) -= f * a(row, k);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

/// Basis of {x : m x = 0}, one vector per free column (free entry set to 1).
template <typename Derived>
std::vector<VectorX<typename Derived::Scalar>> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto r = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<VectorX<Scalar>> basis;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorX<Scalar> v = VectorX<Scalar>::Zero(m.cols());
    v(free) = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
      v(r.pivots[k]) = -r.reduced(static_cast<Index>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename Scalar>
struct LinearSolution {
  VectorX<Scalar> particular;
  std::vector<VectorX<Scalar>> nullspace_basis;
};

/// Solves a x = b. Returns nullopt when the system is inconsistent.
template <typename DerivedA, typename DerivedB>
std::optional<LinearSolution<typename DerivedA::Scalar>> solve_linear(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: rows(A) != dim(b)");
  MatrixX<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  LinearSolution<Scalar> sol{VectorX<Scalar>::Zero(a.cols()), nullspace(a)};
  for (std::size_t k = 0; k < r.pivots.size(); ++k)
    sol.particular(r.pivots[k]) = r.reduced(static_cast<Index>(k), a.cols());
  return sol;
}

/// Inverse of a square matrix; throws std::domain_error when singular.
template <typename Derived>
MatrixX<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: matrix is not square");
  MatrixX<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = MatrixX<Scalar>::Identity(n, n);
  auto r = rref(aug);
  if (static_cast<Index>(r.pivots.size()) < n || (n > 0 && r.pivots[static_cast<std::size_t>(n - 1)] >= n))
    throw std::domain_error("inverse: matrix is singular");
  return r.reduced.rightCols(n);
}

enum class ComplementOrder { Forward, Backward };

/// Greedy extension of span(basis) to the whole space by standard basis
/// vectors, scanned in the given index order. Returns only the added e_k.
template <typename Scalar>
std::vector<VectorX<Scalar>> complement_basis(const std::vector<VectorX<Scalar>>& basis, Index n,
                                              ComplementOrder order = ComplementOrder::Forward) {
  std::vector<VectorX<Scalar>> current = basis;
  auto rank_of = [n](const std::vector<VectorX<Scalar>>& vs) {
    MatrixX<Scalar> m(static_cast<Index>(vs.size()), n);
    for (Index i = 0; i < m.rows(); ++i) m.row(i) = vs[static_cast<std::size_t>(i)].transpose();
    return rank(m);
  };
  Index r = rank_of(current);
  std::vector<VectorX<Scalar>> added;
  for (Index step = 0; step < n && r < n; ++step) {
    const Index k = order == ComplementOrder::Forward ? step : n - 1 - step;
    VectorX<Scalar> e = VectorX<Scalar>::Zero(n);
    e(k) = 1;
    current.push_back(e);
    const Index r2 = rank_of(current);
    if (r2 > r) {
      added.push_back(std::move(e));
      r = r2;
    } else {
      current.pop_back();
    }
  }
  return added;
}

/// True iff v lies in the span of the given vectors.
template <typename Scalar>
bool in_span(const std::vector<VectorX<Scalar>>& basis, const VectorX<Scalar>& v) {
  if (basis.empty()) {
    for (Index i = 0; i < v.size(); ++i)
      if (v(i) != 0) return false;
    return true;
  }
  MatrixX<Scalar> a(v.size(), static_cast<Index>(basis.size()));
  for (Index j = 0; j < a.cols(); ++j) a.col(j) = basis[static_cast<std::size_t>(j)];
  return solve_linear(a, v).has_value();
}

/// Orthogonal projection of v onto the orthogonal complement of span(basis).
/// Uses the standard dot product, which is exact over the rationals.
template <typename Scalar>
VectorX<Scalar> reduce_modulo_span(const std::vector<VectorX<Scalar>>& basis,
                                   const VectorX<Scalar>& v) {
  if (basis.empty()) return v;
  MatrixX<Scalar> b(v.size(), static_cast<Index>(basis.size()));
  for (Index j = 0; j < b.cols(); ++j) b.col(j) = basis[static_cast<std::size_t>(j)];
  const MatrixX<Scalar> gram = b.transpose() * b;
  const VectorX<Scalar> rhs = b.transpose() * v;
  auto sol = solve_linear(gram, rhs);
  // Gram systems are always consistent.
  return v - b * sol->particular;
}

}  // namespace mw

#endif  // MW_LINALG_HPP
