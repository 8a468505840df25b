#ifndef MW_RIESZ_HPP
#define MW_RIESZ_HPP

#include <optional>
#include <span>
#include <vector>

#include "mw/linalg.hpp"
#include "mw/multi_order.hpp"
#include "mw/rational.hpp"
#include "mw/wedge.hpp"

namespace mw {

/// A linear map Q^n -> Q^m stored as its m x n matrix.
using LinearOperator = QMatrix;

/// T(W) is contained in V, checked on the generators of W.
bool op_is_positive(const LinearOperator& t, const Wedge& w, const Wedge& v);

/// Basis of {T : T g in D(cap V_j) for every generator g of sum W_i}, the
/// lineality space of the operator wedge cap L_{W_i, V_j}.
std::vector<LinearOperator> op_wedge_lineality(const std::vector<Wedge>& ws,
                                               const std::vector<Wedge>& vs);

/// The operator wedge is a cone iff sum W_i is generating and cap V_j is a
/// cone. Throws Error(ZeroSpace) when the domain or codomain is {0}.
bool op_wedge_is_cone(const std::vector<Wedge>& ws, const std::vector<Wedge>& vs);

struct GeneratorValue {
  QVector generator;
  QVector value;
};

/**
 * Extends a map given on generators of `domain` to a linear operator.
 *
 * A maximal linearly independent subset of the given generators is picked in
 * input order, the operator is solved for on it and set to zero on
 * complement_basis(that subset, order), and the result is checked against
 * every given pair. The given generators must span span(domain); when the
 * domain wedge is generating the complement is empty and the extension is
 * unique.
 *
 * Throws Error(InconsistentValues) when no linear map restricts to the given
 * values.
 */
LinearOperator extend_additive(const Wedge& domain, std::span<const GeneratorValue> values,
                               Index codomain_dim,
                               ComplementOrder order = ComplementOrder::Forward);

/// Data of one Riesz decomposition question: sum xs == sum ys, y_j in W_j,
/// every x_i in sum_j W_j.
struct RdpInstance {
  std::vector<Wedge> wedges;
  std::vector<QVector> xs;
  std::vector<QVector> ys;
};

/// z[i][j] in W_j with row sums x_i and column sums y_j.
using Decomposition = std::vector<std::vector<QVector>>;

/// Throws Error(InvalidInstance) unless the instance invariants hold.
void validate_instance(const RdpInstance& inst);

bool is_valid_decomposition(const RdpInstance& inst, const Decomposition& z);

/// Exact LP feasibility in the z_ij. nullopt means no decomposition exists.
std::optional<Decomposition> rdp_check(const RdpInstance& inst);

struct RdpCounterexample {
  std::size_t trial = 0;
  RdpInstance instance;
};

/// Random refuter of the (m, n)-Riesz decomposition property over the given
/// wedges: samples y_j in W_j and m vectors x_i in sum W_j with the same total,
/// and returns the first instance rdp_check rejects. Deterministic per seed.
std::optional<RdpCounterexample> rdp_search(const std::vector<Wedge>& wedges, std::size_t m,
                                            std::size_t n, const SearchOptions& options = {});

/// W_s = {f in Q^size : f(s) >= 0}.
Wedge coordinate_wedge(Index size, Index s);
/// V_s = {lambda e_s : lambda >= 0}.
Wedge coordinate_ray(Index size, Index s);

/// Instance over the coordinate wedges W_{s_j} of Q^size.
RdpInstance coordinate_instance(Index size, std::span<const Index> js, std::vector<QVector> xs,
                                std::vector<QVector> ys);

/// Closed-form decomposition for coordinate-wedge instances. If all s_j
/// coincide, the s-coordinate is split by the scalar (northwest-corner)
/// decomposition and the other coordinates freely; otherwise two columns
/// with different s carry the first rows and the last row absorbs the rest.
Decomposition fs_decompose(Index size, std::span<const Index> js, const std::vector<QVector>& xs,
                           const std::vector<QVector>& ys);

/// P_D projects onto D(V) along the complement U chosen by complement_basis;
/// P_U = I - P_D.
struct ProjectionPair {
  LinearOperator p_d;
  LinearOperator p_u;
};

ProjectionPair projections(const Wedge& v, ComplementOrder order = ComplementOrder::Forward);

/// Some S with S - T_i (W_i, V)-positive for all i, if one exists.
std::optional<LinearOperator> op_multi_bounded_above(const std::vector<LinearOperator>& ts,
                                                     const std::vector<Wedge>& ws,
                                                     const Wedge& v);

/**
 * msup over V of { sum T_i y_i : y_i in W_i, sum y_i = x }.
 *
 * One exact LP per halfspace normal b of V gives s_b = sup b.(sum T_i y_i);
 * the result is the z with b.z = s_b for every b, reduced modulo D(V).
 *
 * Throws NotInSumWedge, NotMultiBoundedAbove, or EmptyMultiSupremum when the
 * upper bounds of the value set are not a translate of V.
 */
MultiSupSet rk_value(const std::vector<LinearOperator>& ts, const std::vector<Wedge>& ws,
                     const Wedge& v, const QVector& x);

struct OperatorMSupResult {
  LinearOperator representative;
  std::vector<LinearOperator> lineality_ops;
};

/**
 * Multi-supremum of (T_i, L_{W_i,V}) by the Riesz-Kantorovich formula.
 *
 * R(g) = P_U(rk_value(g).witness) on the generators of sum W_i and of every
 * W_i, extended linearly with R = 0 on the complement of span(sum W_i). The
 * full multi-supremum set is representative + span(lineality_ops).
 *
 * The decomposition hypothesis cannot be checked a priori, so the result is
 * certified instead: additivity on the generators and R - T_i positive for
 * all i. Failing either throws Error(RdpViolated).
 */
OperatorMSupResult op_msup(const std::vector<LinearOperator>& ts, const std::vector<Wedge>& ws,
                           const Wedge& v);

/// op_msup with codomain Q and V = Q+, for functionals given as vectors.
OperatorMSupResult functional_msup(const std::vector<QVector>& phis, const std::vector<Wedge>& ws);

/// -op_msup(-T_i). Throws NotMultiBoundedBelow instead of ...Above.
OperatorMSupResult op_minf(const std::vector<LinearOperator>& ts, const std::vector<Wedge>& ws,
                           const Wedge& v);

}  // namespace mw

#endif  // MW_RIESZ_HPP
