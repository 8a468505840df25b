#ifndef MW_RATIONAL_HPP
#define MW_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace mw {

/// Exact rational scalar. GMP keeps every value gcd-reduced with a positive
/// denominator, so equality is structural.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using QVector = VectorX<Rational>;
using QMatrix = MatrixX<Rational>;
using Index = Eigen::Index;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q" (q != 0). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const QVector& v);

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

inline QVector unit_vector(Index n, Index k) {
  QVector e = QVector::Zero(n);
  e(k) = 1;
  return e;
}

/// Positive rescaling to coprime integer entries. Zero stays zero.
QVector primitive(const QVector& v);

/// Lexicographic order on entries; shorter vectors first.
bool lex_less(const QVector& a, const QVector& b);

/// Builds a matrix whose rows are the given vectors (all of length `cols`).
QMatrix stack_rows(const std::vector<QVector>& rows, Index cols);

}  // namespace mw

#endif  // MW_RATIONAL_HPP
