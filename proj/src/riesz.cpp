#include "mw/riesz.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mw/error.hpp"
#include "mw/lp.hpp"
#include "sampling.hpp"

namespace mw {

namespace {

const std::vector<QVector>& normals_of(const Wedge& w) {
  const auto* raw = w.input_halfspaces();
  return raw ? *raw : w.halfspaces();
}

void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

QVector sum_of(const std::vector<QVector>& vs, Index n) {
  QVector s = QVector::Zero(n);
  for (const auto& v : vs) s += v;
  return s;
}

// Shared shape check for (T_i, W_i) families into V. Returns the domain dim.
Index check_family(const std::vector<LinearOperator>& ts, const std::vector<Wedge>& ws,
                   const Wedge& v, const char* what) {
  if (ts.empty()) throw std::invalid_argument(std::string(what) + ": empty family");
  require(ts.size() == ws.size(), ErrorCode::DimensionMismatch,
          std::string(what) + ": operator and wedge counts differ");
  const Index n = ws.front().dim();
  for (std::size_t i = 0; i < ts.size(); ++i)
    require(ws[i].dim() == n && ts[i].cols() == n && ts[i].rows() == v.dim(),
            ErrorCode::DimensionMismatch, std::string(what) + ": operator shape mismatch");
  return n;
}

// Variables are the entries of an m x n matrix in row-major order.
QVector outer_row(const QVector& h, const QVector& g) {
  const Index m = h.size(), n = g.size();
  QVector row(m * n);
  for (Index p = 0; p < m; ++p)
    for (Index q = 0; q < n; ++q) row(p * n + q) = h(p) * g(q);
  return row;
}

LinearOperator unflatten(const QVector& x, Index m, Index n) {
  LinearOperator t(m, n);
  for (Index p = 0; p < m; ++p)
    for (Index q = 0; q < n; ++q) t(p, q) = x(p * n + q);
  return t;
}

// The value of msup_V { sum T_i y_i : y_i in W_i, sum y_i = x } without the
// precondition checks.
MultiSupSet rk_value_unchecked(const std::vector<LinearOperator>& ts, const std::vector<Wedge>& ws,
                               const Wedge& v, const QVector& x) {
  const Index n = x.size();
  const auto k = static_cast<Index>(ts.size());
  LinearProgram base(k * n);
  base.sense = Sense::Maximize;
  for (Index i = 0; i < k; ++i)
    for (const auto& a : normals_of(ws[static_cast<std::size_t>(i)])) {
      QVector row = QVector::Zero(k * n);
      row.segment(i * n, n) = a;
      base.add(std::move(row), Relation::GreaterEqual, 0);
    }
  for (Index c = 0; c < n; ++c) {
    QVector row = QVector::Zero(k * n);
    for (Index i = 0; i < k; ++i) row(i * n + c) = 1;
    base.add(std::move(row), Relation::Equal, x(c));
  }

  const auto& bs = v.halfspaces();
  QVector sup(static_cast<Index>(bs.size()));
  for (std::size_t r = 0; r < bs.size(); ++r) {
    LinearProgram lp = base;
    lp.objective = QVector(k * n);
    for (Index i = 0; i < k; ++i)
      lp.objective.segment(i * n, n) = ts[static_cast<std::size_t>(i)].transpose() * bs[r];
    const auto res = lp_solve(lp);
    if (std::holds_alternative<LpUnbounded>(res))
      throw Error(ErrorCode::NotMultiBoundedAbove, "rk_value: value set unbounded along a normal");
    const auto* opt = std::get_if<LpOptimal>(&res);
    if (!opt) throw Error(ErrorCode::NotInSumWedge, "rk_value: no decomposition of x");
    sup(static_cast<Index>(r)) = opt->value;
  }

  const QMatrix b = stack_rows(bs, v.dim());
  const auto sol = solve_linear(b, sup);
  if (!sol)
    throw Error(ErrorCode::EmptyMultiSupremum,
                "rk_value: upper bounds of the value set are not a translate of V");
  MultiSupSet out{QVector(), lineality(v)};
  out.witness = reduce_modulo_span(out.lineality_basis, sol->particular);
  return out;
}

// Scalar Riesz decomposition of nonnegative a, b with equal sums.
std::vector<std::vector<Rational>> northwest_corner(std::vector<Rational> a, std::vector<Rational> b) {
  std::vector<std::vector<Rational>> z(a.size(), std::vector<Rational>(b.size(), Rational(0)));
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const Rational t = std::min(a[i], b[j]);
    z[i][j] = t;
    a[i] -= t;
    b[j] -= t;
    if (a[i] == 0)
      ++i;
    else
      ++j;
  }
  return z;
}

}  // namespace

bool op_is_positive(const LinearOperator& t, const Wedge& w, const Wedge& v) {
  require(t.cols() == w.dim() && t.rows() == v.dim(), ErrorCode::DimensionMismatch,
          "op_is_positive: operator shape mismatch");
  for (const auto& g : w.generators())
    if (!member(v, QVector(t * g))) return false;
  return true;
}

std::vector<LinearOperator> op_wedge_lineality(const std::vector<Wedge>& ws,
                                               const std::vector<Wedge>& vs) {
  if (ws.empty() || vs.empty()) throw std::invalid_argument("op_wedge_lineality: empty list");
  const Wedge sum = wedge_sum(ws);
  const Wedge meet = intersect(vs);
  const Index n = sum.dim(), m = meet.dim();
  std::vector<LinearOperator> out;
  if (n == 0 || m == 0) return out;

  std::vector<QVector> rows;
  for (const auto& g : sum.generators())
    for (const auto& h : meet.halfspaces()) rows.push_back(outer_row(h, g));
  if (rows.empty()) {
    for (Index e = 0; e < m * n; ++e) out.push_back(unflatten(unit_vector(m * n, e), m, n));
    return out;
  }
  for (const auto& x : nullspace(stack_rows(rows, m * n))) out.push_back(unflatten(x, m, n));
  return out;
}

bool op_wedge_is_cone(const std::vector<Wedge>& ws, const std::vector<Wedge>& vs) {
  if (ws.empty() || vs.empty()) throw std::invalid_argument("op_wedge_is_cone: empty list");
  const Wedge sum = wedge_sum(ws);
  const Wedge meet = intersect(vs);
  require(sum.dim() > 0 && meet.dim() > 0, ErrorCode::ZeroSpace,
          "op_wedge_is_cone: domain or codomain is the zero space");
  return is_generating(sum) && is_cone(meet);
}

LinearOperator extend_additive(const Wedge& domain, std::span<const GeneratorValue> values,
                               Index codomain_dim, ComplementOrder order) {
  const Index n = domain.dim();
  std::vector<QVector> given;
  for (const auto& gv : values) {
    require(gv.generator.size() == n && gv.value.size() == codomain_dim,
            ErrorCode::DimensionMismatch, "extend_additive: size mismatch");
    if (!member(domain, gv.generator))
      throw std::invalid_argument("extend_additive: generator outside the domain wedge");
    given.push_back(gv.generator);
  }
  const auto& gens = domain.generators();
  if (rank(stack_rows(given, n)) != rank(stack_rows(gens, n)))
    throw std::invalid_argument("extend_additive: values do not cover the domain wedge");

  std::vector<QVector> basis;
  std::vector<QVector> images;
  for (const auto& gv : values) {
    basis.push_back(gv.generator);
    if (rank(stack_rows(basis, n)) == static_cast<Index>(basis.size())) {
      images.push_back(gv.value);
    } else {
      basis.pop_back();
    }
  }
  const std::size_t k = basis.size();
  for (auto& u : complement_basis(basis, n, order)) basis.push_back(std::move(u));

  QMatrix b(n, n);
  QMatrix vals = QMatrix::Zero(codomain_dim, n);
  for (Index c = 0; c < n; ++c) {
    b.col(c) = basis[static_cast<std::size_t>(c)];
    if (static_cast<std::size_t>(c) < k) vals.col(c) = images[static_cast<std::size_t>(c)];
  }
  LinearOperator t = vals * inverse(b);
  for (const auto& gv : values)
    if (QVector(t * gv.generator) != gv.value)
      throw Error(ErrorCode::InconsistentValues,
                  "extend_additive: values are not the restriction of a linear map");
  return t;
}

void validate_instance(const RdpInstance& inst) {
  const auto fail = [](const std::string& why) {
    throw Error(ErrorCode::InvalidInstance, "rdp instance: " + why);
  };
  if (inst.wedges.empty() || inst.xs.empty()) fail("no wedges or no xs");
  if (inst.wedges.size() != inst.ys.size()) fail("one y per wedge required");
  const Index d = inst.wedges.front().dim();
  for (const auto& w : inst.wedges)
    if (w.dim() != d) fail("mixed wedge dimensions");
  for (const auto& x : inst.xs)
    if (x.size() != d) fail("x of wrong dimension");
  for (const auto& y : inst.ys)
    if (y.size() != d) fail("y of wrong dimension");
  if (sum_of(inst.xs, d) != sum_of(inst.ys, d)) fail("sum of xs differs from sum of ys");
  for (std::size_t j = 0; j < inst.ys.size(); ++j)
    if (!member(inst.wedges[j], inst.ys[j])) fail("y_j outside W_j");
  const Wedge sum = wedge_sum(inst.wedges);
  for (const auto& x : inst.xs)
    if (!member(sum, x)) fail("x_i outside the sum of the wedges");
}

bool is_valid_decomposition(const RdpInstance& inst, const Decomposition& z) {
  const std::size_t rows = inst.xs.size(), cols = inst.ys.size();
  if (z.size() != rows) return false;
  const Index d = inst.wedges.front().dim();
  std::vector<QVector> col_sums(cols, QVector::Zero(d));
  for (std::size_t i = 0; i < rows; ++i) {
    if (z[i].size() != cols) return false;
    QVector row_sum = QVector::Zero(d);
    for (std::size_t j = 0; j < cols; ++j) {
      if (z[i][j].size() != d || !member(inst.wedges[j], z[i][j])) return false;
      row_sum += z[i][j];
      col_sums[j] += z[i][j];
    }
    if (row_sum != inst.xs[i]) return false;
  }
  for (std::size_t j = 0; j < cols; ++j)
    if (col_sums[j] != inst.ys[j]) return false;
  return true;
}

std::optional<Decomposition> rdp_check(const RdpInstance& inst) {
  validate_instance(inst);
  const auto rows = static_cast<Index>(inst.xs.size());
  const auto cols = static_cast<Index>(inst.ys.size());
  const Index d = inst.wedges.front().dim();
  const auto var = [&](Index i, Index j) { return (i * cols + j) * d; };
  const Index nv = rows * cols * d;

  LinearProgram lp(nv);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      for (const auto& a : normals_of(inst.wedges[static_cast<std::size_t>(j)])) {
        QVector row = QVector::Zero(nv);
        row.segment(var(i, j), d) = a;
        lp.add(std::move(row), Relation::GreaterEqual, 0);
      }
  for (Index c = 0; c < d; ++c) {
    for (Index i = 0; i < rows; ++i) {
      QVector row = QVector::Zero(nv);
      for (Index j = 0; j < cols; ++j) row(var(i, j) + c) = 1;
      lp.add(std::move(row), Relation::Equal, inst.xs[static_cast<std::size_t>(i)](c));
    }
    for (Index j = 0; j < cols; ++j) {
      QVector row = QVector::Zero(nv);
      for (Index i = 0; i < rows; ++i) row(var(i, j) + c) = 1;
      lp.add(std::move(row), Relation::Equal, inst.ys[static_cast<std::size_t>(j)](c));
    }
  }
  const auto point = lp_feasible_point(lp);
  if (!point) return std::nullopt;
  Decomposition z(static_cast<std::size_t>(rows), std::vector<QVector>(static_cast<std::size_t>(cols)));
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = point->segment(var(i, j), d);
  return z;
}

std::optional<RdpCounterexample> rdp_search(const std::vector<Wedge>& wedges, std::size_t m,
                                            std::size_t n, const SearchOptions& options) {
  if (wedges.empty() || m == 0 || n == 0) return std::nullopt;
  const Index d = wedges.front().dim();
  detail::Sampler sampler(options.seed);
  const auto combination = [&](const std::vector<QVector>& gens) {
    QVector v = QVector::Zero(d);
    for (const auto& g : gens) v += sampler.perturbed(0, options.bound, options.max_den) * g;
    return v;
  };

  for (std::size_t trial = 0; trial < options.budget; ++trial) {
    RdpInstance inst;
    for (std::size_t j = 0; j < n; ++j) {
      const auto idx =
          static_cast<std::size_t>(sampler.integer(0, static_cast<long>(wedges.size()) - 1));
      inst.wedges.push_back(wedges[idx]);
      inst.ys.push_back(combination(wedges[idx].generators()));
    }
    const Wedge sum = wedge_sum(inst.wedges);
    const QVector total = sum_of(inst.ys, d);

    // x_1..x_{m-1} random in the sum wedge; x_m takes the rest. Shrink the
    // free parts until the rest lands in the sum wedge too.
    std::vector<QVector> free;
    for (std::size_t i = 0; i + 1 < m; ++i) free.push_back(combination(sum.generators()));
    bool placed = false;
    for (int attempt = 0; attempt < 8 && !placed; ++attempt) {
      QVector rest = total - sum_of(free, d);
      if (member(sum, rest)) {
        inst.xs = free;
        inst.xs.push_back(std::move(rest));
        placed = true;
      } else {
        for (auto& x : free) x /= 2;
      }
    }
    if (!placed) continue;
    if (!rdp_check(inst)) return RdpCounterexample{trial, std::move(inst)};
  }
  return std::nullopt;
}

Wedge coordinate_wedge(Index size, Index s) {
  return Wedge::from_halfspaces(size, {unit_vector(size, s)});
}

Wedge coordinate_ray(Index size, Index s) {
  return Wedge::from_generators(size, {unit_vector(size, s)});
}

RdpInstance coordinate_instance(Index size, std::span<const Index> js, std::vector<QVector> xs,
                                std::vector<QVector> ys) {
  RdpInstance inst;
  for (Index s : js) {
    require(s >= 0 && s < size, ErrorCode::InvalidInstance, "coordinate index out of range");
    inst.wedges.push_back(coordinate_wedge(size, s));
  }
  inst.xs = std::move(xs);
  inst.ys = std::move(ys);
  return inst;
}

Decomposition fs_decompose(Index size, std::span<const Index> js, const std::vector<QVector>& xs,
                           const std::vector<QVector>& ys) {
  const RdpInstance inst = coordinate_instance(size, js, xs, ys);
  validate_instance(inst);
  const std::size_t rows = xs.size(), cols = ys.size();
  Decomposition z(rows, std::vector<QVector>(cols, QVector::Zero(size)));

  if (rows == 1) {
    for (std::size_t j = 0; j < cols; ++j) z[0][j] = ys[j];
    return z;
  }
  if (cols == 1) {
    for (std::size_t i = 0; i < rows; ++i) z[i][0] = xs[i];
    return z;
  }

  const std::size_t last = rows - 1;
  const auto fill_last_row = [&] {
    for (std::size_t j = 0; j < cols; ++j) {
      z[last][j] = ys[j];
      for (std::size_t i = 0; i < last; ++i) z[last][j] -= z[i][j];
    }
  };

  const auto other = std::find_if(js.begin(), js.end(), [&](Index s) { return s != js.front(); });
  if (other == js.end()) {
    const Index s = js.front();
    std::vector<Rational> a, b;
    for (const auto& x : xs) a.push_back(x(s));
    for (const auto& y : ys) b.push_back(y(s));
    const auto split = northwest_corner(std::move(a), std::move(b));
    for (std::size_t i = 0; i < last; ++i) z[i][0] = xs[i];
    fill_last_row();
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) z[i][j](s) = split[i][j];
    return z;
  }

  const std::size_t j1 = 0;
  const auto j2 = static_cast<std::size_t>(other - js.begin());
  const Index s1 = js[j1];
  for (std::size_t i = 0; i < last; ++i) {
    z[i][j1] = xs[i];
    z[i][j1](s1) = 0;
    z[i][j2](s1) = xs[i](s1);
  }
  fill_last_row();
  return z;
}

ProjectionPair projections(const Wedge& v, ComplementOrder order) {
  const Index m = v.dim();
  std::vector<QVector> basis = lineality(v);
  const Index k = static_cast<Index>(basis.size());
  for (auto& u : complement_basis(basis, m, order)) basis.push_back(std::move(u));
  QMatrix b(m, m);
  for (Index c = 0; c < m; ++c) b.col(c) = basis[static_cast<std::size_t>(c)];
  QMatrix keep = QMatrix::Zero(m, m);
  for (Index c = 0; c < k; ++c) keep(c, c) = 1;
  ProjectionPair out;
  out.p_d = m == 0 ? QMatrix(0, 0) : QMatrix(b * keep * inverse(b));
  out.p_u = QMatrix::Identity(m, m) - out.p_d;
  return out;
}

std::optional<LinearOperator> op_multi_bounded_above(const std::vector<LinearOperator>& ts,
                                                     const std::vector<Wedge>& ws,
                                                     const Wedge& v) {
  const Index n = check_family(ts, ws, v, "op_multi_bounded_above");
  const Index m = v.dim();
  LinearProgram lp(m * n);
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (const auto& g : ws[i].generators()) {
      const QVector tg = ts[i] * g;
      for (const auto& h : v.halfspaces()) lp.add(outer_row(h, g), Relation::GreaterEqual, h.dot(tg));
    }
  const auto s = lp_feasible_point(lp);
  if (!s) return std::nullopt;
  return unflatten(*s, m, n);
}

MultiSupSet rk_value(const std::vector<LinearOperator>& ts, const std::vector<Wedge>& ws,
                     const Wedge& v, const QVector& x) {
  const Index n = check_family(ts, ws, v, "rk_value");
  require(x.size() == n, ErrorCode::DimensionMismatch, "rk_value: x of wrong dimension");
  require(member(wedge_sum(ws), x), ErrorCode::NotInSumWedge, "rk_value: x outside sum of W_i");
  require(op_multi_bounded_above(ts, ws, v).has_value(), ErrorCode::NotMultiBoundedAbove,
          "rk_value: family is not multi-bounded above");
  return rk_value_unchecked(ts, ws, v, x);
}

OperatorMSupResult op_msup(const std::vector<LinearOperator>& ts, const std::vector<Wedge>& ws,
                           const Wedge& v) {
  check_family(ts, ws, v, "op_msup");
  require(op_multi_bounded_above(ts, ws, v).has_value(), ErrorCode::NotMultiBoundedAbove,
          "op_msup: family is not multi-bounded above");

  const Wedge sum = wedge_sum(ws);
  std::vector<QVector> points = sum.generators();
  for (const auto& w : ws)
    for (const auto& g : w.generators())
      if (std::find(points.begin(), points.end(), g) == points.end()) points.push_back(g);

  const ProjectionPair proj = projections(v);
  std::vector<GeneratorValue> values;
  for (const auto& g : points)
    values.push_back({g, QVector(proj.p_u * rk_value_unchecked(ts, ws, v, g).witness)});

  OperatorMSupResult out;
  try {
    out.representative = extend_additive(sum, values, v.dim());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InconsistentValues) throw;
    throw Error(ErrorCode::RdpViolated, "op_msup: generator values are not additive");
  }
  for (std::size_t i = 0; i < ts.size(); ++i)
    require(op_is_positive(out.representative - ts[i], ws[i], v), ErrorCode::RdpViolated,
            "op_msup: result is not an upper bound");
  out.lineality_ops = op_wedge_lineality(ws, {v});
  return out;
}

OperatorMSupResult functional_msup(const std::vector<QVector>& phis, const std::vector<Wedge>& ws) {
  std::vector<LinearOperator> ts;
  for (const auto& phi : phis) ts.push_back(phi.transpose());
  return op_msup(ts, ws, Wedge::from_generators(1, {unit_vector(1, 0)}));
}

OperatorMSupResult op_minf(const std::vector<LinearOperator>& ts, const std::vector<Wedge>& ws,
                           const Wedge& v) {
  std::vector<LinearOperator> neg;
  for (const auto& t : ts) neg.push_back(-t);
  OperatorMSupResult out;
  try {
    out = op_msup(neg, ws, v);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotMultiBoundedAbove) throw;
    throw Error(ErrorCode::NotMultiBoundedBelow, "op_minf: family is not multi-bounded below");
  }
  out.representative = -out.representative;
  return out;
}

}  // namespace mw
