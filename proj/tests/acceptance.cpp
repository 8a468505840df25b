// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every comparison is exact; runtime limits are part of the verdict.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "mw/error.hpp"
#include "mw/linalg.hpp"
#include "mw/lp.hpp"
#include "mw/multi_order.hpp"
#include "mw/riesz.hpp"
#include "mw/wedge.hpp"
#include "oracles.hpp"
#include "rk_oracle.hpp"

using namespace mw;
using namespace mwtest;

namespace {

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;
  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

Wedge halfplane(long a, long b) { return Wedge::from_halfspaces(2, {QVector{{a, b}}}); }
const Wedge quadrant = Wedge::from_generators(2, {unit_vector(2, 0), unit_vector(2, 1)});
const Wedge diagonal = Wedge::from_generators(2, {QVector::Ones(2)});

void halfplanes(Tally& t) {
  const std::vector<Wedge> ws{halfplane(1, 0), halfplane(0, 1), halfplane(1, 1)};
  const QVector o = QVector::Zero(2);
  t.check(!msup({{o, ws[0]}, {o, ws[1]}, {QVector::Ones(2), ws[2]}}), "triple msup not empty");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const auto s = msup({{o, ws[i]}, {o, ws[j]}});
      t.check(s && is_proper(*s), "pairwise msup not proper");
    }
  const SearchOptions so{.seed = 0, .budget = 1000};
  t.check(multilattice_search(ws, 3, so).has_value(), "k=3 search found nothing");
  t.check(!multilattice_search(ws, 2, so), "k=2 search found a counterexample");
}

void quadrant_diagonal(Tally& t) {
  const std::vector<Wedge> ws{quadrant, diagonal};
  const RdpInstance inst{ws, {QVector{{2, 0}}, QVector{{0, 1}}}, {QVector{{1, 0}}, QVector{{1, 1}}}};
  t.check(!rdp_check(inst), "fixed instance decomposes");
  const SearchOptions so{.seed = 0, .budget = 500};
  const auto found = rdp_search(ws, 2, 2, so);
  t.check(found.has_value(), "rdp_search found nothing");
  if (found) {
    validate_instance(found->instance);
    t.check(!rdp_check(found->instance), "rdp_search instance decomposes");
  }
  const SearchOptions lo{.seed = 0, .budget = 1000};
  for (std::size_t k = 2; k <= 5; ++k)
    t.check(!multilattice_search(ws, k, lo), "lattice search found a counterexample at k=" + std::to_string(k));
}

void coordinate_wedges(Tally& t) {
  constexpr Index size = 5;
  for (Index s = 0; s < size; ++s)
    t.check(wedge_equal(dual_wedge(coordinate_wedge(size, s)), coordinate_ray(size, s)),
            "dual of W_s is not the ray");

  Gen g(3013);
  for (int k = 0; k < 200; ++k) {
    const auto c = random_coordinate_instance(g, size, static_cast<std::size_t>(g.integer(1, 4)),
                                              static_cast<std::size_t>(g.integer(1, 4)));
    const RdpInstance inst = coordinate_instance(size, c.js, c.xs, c.ys);
    validate_instance(inst);
    const auto z = fs_decompose(size, c.js, c.xs, c.ys);
    t.check(is_valid_decomposition(inst, z), "fs_decompose invalid");
    t.check(rdp_check(inst).has_value(), "rdp_check rejects a decomposable instance");
  }

  // Bounded families come from psi - mu e_s; unconstrained ones are filtered
  // through the multi-boundedness test.
  const Wedge qplus = Wedge::from_generators(1, {QVector::Ones(1)});
  int families = 0;
  while (families < 100) {
    std::vector<QVector> phis;
    std::vector<Wedge> ws;
    const QVector psi = g.vector(size, 3, 2);
    const bool built = families % 2 == 0;
    for (Index i = g.integer(1, 4); i > 0; --i) {
      const Index s = g.integer(0, size - 1);
      phis.push_back(built ? QVector(psi - g.nonneg(3, 2) * unit_vector(size, s)) : g.vector(size, 2));
      ws.push_back(coordinate_wedge(size, s));
    }
    std::vector<QMatrix> ts;
    for (const auto& p : phis) ts.push_back(p.transpose());
    if (!op_multi_bounded_above(ts, ws, qplus)) {
      t.check(!built, "constructed family not multi-bounded");
      continue;
    }
    ++families;
    const auto r = functional_msup(phis, ws);
    t.check(r.lineality_ops.empty(), "functional msup not proper");
    for (std::size_t i = 0; i < phis.size(); ++i)
      t.check(member(dual_wedge(ws[i]), QVector((r.representative - ts[i]).transpose())),
              "functional msup not an upper bound");
  }
}

void rk_equivalence(Tally& t) {
  Gen g(4004);
  int assembled = 0;
  for (int k = 0; k < 500; ++k) {
    const Index n = g.integer(1, 3), m = g.integer(1, 2);
    // Three summands in dimension three give 9-variable vertex enumerations;
    // keep them to a fraction of the run.
    const Index arity = g.integer(1, n == 3 && k % 5 != 0 ? 2 : 3);
    const auto inst = random_rk_instance(g, n, m, arity, k % 2 == 0);
    const Wedge sum = wedge_sum(inst.ws);
    QVector x = QVector::Zero(n);
    for (const auto& gen : sum.generators()) x += g.nonneg(3, 3) * gen;
    const auto want = rk_oracle(inst.ts, inst.ws, inst.v, x);
    t.check(want.has_value(), "oracle msup empty");
    if (!want) continue;
    t.check(rk_value(inst.ts, inst.ws, inst.v, x).witness == want->witness, "rk_value differs from oracle");

    const auto op = rk_oracle_operator(inst.ts, inst.ws, inst.v);
    if (op) {
      ++assembled;
      t.check(op_msup(inst.ts, inst.ws, inst.v).representative == *op, "op_msup differs from oracle operator");
    } else {
      bool violated = false;
      try {
        op_msup(inst.ts, inst.ws, inst.v);
      } catch (const Error& e) {
        violated = e.code() == ErrorCode::RdpViolated;
      }
      t.check(violated, "nonadditive oracle values but op_msup succeeded");
    }
  }
  t.check(assembled >= 250, "too few additive instances: " + std::to_string(assembled));
}

// Entry (p, c) of the classical supremum: max sum_i (T_i y_i)_p over
// y_i >= 0 with sum y_i = e_c.
Rational classical_entry(const std::vector<QMatrix>& ts, Index p, Index c) {
  const auto k = static_cast<Index>(ts.size());
  LinearProgram lp(3 * k);
  lp.sense = Sense::Maximize;
  lp.nonnegative.assign(static_cast<std::size_t>(3 * k), true);
  for (Index i = 0; i < k; ++i) lp.objective.segment(3 * i, 3) = ts[static_cast<std::size_t>(i)].row(p).transpose();
  for (Index r = 0; r < 3; ++r) {
    QVector row = QVector::Zero(3 * k);
    for (Index i = 0; i < k; ++i) row(3 * i + r) = 1;
    lp.add(row, Relation::Equal, r == c ? 1 : 0);
  }
  return std::get<LpOptimal>(lp_solve(lp)).value;
}

void classical(Tally& t) {
  Gen g(5005);
  const Wedge orthant = Wedge::from_generators(3, {unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)});
  for (int k = 0; k < 100; ++k) {
    std::vector<QMatrix> ts;
    for (Index i = g.integer(1, 4); i > 0; --i) ts.push_back(g.matrix(3, 3, 5, 3));
    const std::vector<Wedge> ws(ts.size(), orthant);
    const auto r = op_msup(ts, ws, orthant);
    QMatrix lp_sup(3, 3), max_sup(3, 3);
    for (Index p = 0; p < 3; ++p)
      for (Index c = 0; c < 3; ++c) {
        lp_sup(p, c) = classical_entry(ts, p, c);
        max_sup(p, c) = ts.front()(p, c);
        for (const auto& a : ts) max_sup(p, c) = std::max(max_sup(p, c), a(p, c));
      }
    t.check(r.representative == lp_sup, "op_msup differs from the LP oracle");
    t.check(lp_sup == max_sup, "LP oracle differs from the entrywise max");
    t.check(r.lineality_ops.empty(), "classical msup not proper");
  }
}

void properties(Tally& t) {
  Gen g(6006);

  // Shift, scale and minf identities over 1000 multi-bounded families.
  for (int k = 0; k < 1000;) {
    const Index n = g.integer(1, 4);
    Family f;
    for (Index i = g.integer(1, 3); i > 0; --i) f.push_back({g.vector(n, 4, 3), g.wedge(n, 2)});
    if (!multi_bounded_above(f)) {
      bool raised = false;
      try {
        msup(f);
      } catch (const Error& e) {
        raised = e.code() == ErrorCode::NotMultiBoundedAbove;
      }
      t.check(raised, "unbounded family accepted");
      continue;
    }
    ++k;
    const QVector y = g.vector(n, 3, 2);
    const Rational lambda = Rational(g.integer(1, 6)) / g.integer(1, 3);
    Family shifted, scaled, neg;
    for (const auto& p : f) {
      shifted.push_back({QVector(p.apex + y), p.wedge});
      scaled.push_back({QVector(lambda * p.apex), p.wedge});
      neg.push_back({QVector(-p.apex), p.wedge});
    }
    const auto s = msup(f);
    const auto s_shift = msup(shifted), s_scale = msup(scaled);
    const auto i_neg = minf(neg), i_direct = direct_minf(neg);
    t.check(s.has_value() == s_shift.has_value() && s.has_value() == s_scale.has_value() &&
                s.has_value() == i_neg.has_value() && s.has_value() == i_direct.has_value(),
            "msup identities disagree on emptiness");
    if (!s) continue;
    t.check(same_set(*s_shift, {QVector(s->witness + y), s->lineality_basis}), "shift identity");
    t.check(same_set(*s_scale, {QVector(lambda * s->witness), s->lineality_basis}), "scale identity");
    t.check(same_set(*i_direct, {QVector(-s->witness), s->lineality_basis}), "minf identity");
    t.check(same_set(*i_neg, *i_direct), "minf differs from the direct oracle");
  }

  for (int k = 0; k < 1000; ++k) {
    const Wedge w = g.wedge(g.integer(1, 4), 3);
    t.check(wedge_equal(dual_wedge(dual_wedge(w)), w), "bidual identity");
  }

  for (int k = 0; k < 1000; ++k) {
    const Index n = g.integer(1, 4), m = g.integer(1, 4);
    std::vector<Wedge> ws, vs;
    for (Index i = g.integer(1, 2); i > 0; --i) ws.push_back(g.wedge(n, 2));
    for (Index j = g.integer(1, 2); j > 0; --j) vs.push_back(g.wedge(m, 2));
    const auto lin = op_wedge_lineality(ws, vs);
    t.check(op_wedge_is_cone(ws, vs) == lin.empty(), "cone criterion vs lineality");
    t.check(op_wedge_is_cone(ws, vs) == (is_generating(wedge_sum(ws)) && is_cone(intersect(vs))),
            "cone criterion vs generating sum and cone intersection");
    const Wedge sum = wedge_sum(ws);
    for (const auto& l : lin)
      for (const auto& gen : sum.generators())
        t.check(member(lineality_wedge(intersect(vs)), QVector(l * gen)), "lineality operator escapes D(V)");
  }

  for (int k = 0; k < 1000;) {
    const Index n = g.integer(1, 4), m = g.integer(1, 3);
    const Wedge w = g.wedge(n, 2);
    if (!is_generating(w)) continue;
    ++k;
    const QMatrix truth = g.matrix(m, n, 3, 2);
    std::vector<GeneratorValue> vals;
    for (const auto& gen : w.generators()) vals.push_back({gen, QVector(truth * gen)});
    t.check(extend_additive(w, vals, m, ComplementOrder::Forward) == truth, "forward complement");
    t.check(extend_additive(w, vals, m, ComplementOrder::Backward) == truth, "backward complement");
  }

  for (int k = 0; k < 1000; ++k) {
    const Index m = g.integer(1, 4);
    const Wedge v = g.wedge(m, 2);
    const auto p = projections(v, g.coin() ? ComplementOrder::Forward : ComplementOrder::Backward);
    const auto d = lineality(v);
    t.check(QMatrix(p.p_d + p.p_u) == QMatrix::Identity(m, m), "p_d + p_u");
    t.check(QMatrix(p.p_d * p.p_d) == p.p_d && QMatrix(p.p_u * p.p_u) == p.p_u, "idempotence");
    t.check(rank(p.p_d) == static_cast<Index>(d.size()), "rank of p_d");
    const QVector a = g.vector(m, 5, 3);
    t.check(in_span(d, QVector(a - p.p_u * a)), "x - P_U x outside D(V)");
    QVector b = a;
    for (const auto& l : d) b += g.rational(3, 2) * l;
    t.check(QVector(p.p_u * a) == QVector(p.p_u * b), "P_U not constant on D(V) cosets");
  }

  // Every W_i is one simplicial cone, a copy of the orthant, so the
  // decomposition property holds; a sampled instance confirms it.
  for (int k = 0; k < 1000; ++k) {
    const Index n = g.integer(1, 3), m = g.integer(1, 2), arity = g.integer(1, 3);
    auto inst = random_rk_instance(g, n, m, arity, true);
    if (m == 2 && k % 2 == 1) inst.v = Wedge::from_halfspaces(2, {g.nonzero_vector(2, 2)});
    const auto gens = inst.ws.front().generators();
    const auto sample = [&] {
      QVector x = QVector::Zero(n);
      for (const auto& gen : gens) x += g.nonneg(3, 2) * gen;
      return x;
    };
    if (k % 10 == 0) {
      const QVector y1 = sample(), y2 = sample(), x1 = sample();
      const RdpInstance r{{inst.ws.front(), inst.ws.front()}, {x1, QVector(y1 + y2 - x1)}, {y1, y2}};
      if (member(inst.ws.front(), r.xs[1])) t.check(rdp_check(r).has_value(), "shared simplicial space fails RDP");
    }
    const auto p = projections(inst.v);
    const auto rk = [&](const QVector& x) {
      return QVector(p.p_u * rk_value(inst.ts, inst.ws, inst.v, x).witness);
    };
    const QVector x1 = sample(), x2 = sample();
    t.check(rk(QVector(x1 + x2)) == QVector(rk(x1) + rk(x2)), "rk_value not additive");
  }
}

void lp_self_check(Tally& t) {
  Gen g(7007);
  int optimal = 0, infeasible = 0;
  for (int k = 0; optimal < 500 && k < 3000; ++k) {
    const Index n = g.integer(1, 4);
    const Index rows = g.integer(1, 5);
    QMatrix a(rows + 2 * n, n);
    QVector b(rows + 2 * n);
    a.topRows(rows) = g.matrix(rows, n, 4);
    b.head(rows) = g.vector(rows, 6, 2);
    // Box |x_j| <= B keeps every instance bounded.
    for (Index j = 0; j < n; ++j) {
      const Rational box = g.integer(1, 6);
      a.row(rows + 2 * j) = unit_vector(n, j).transpose();
      a.row(rows + 2 * j + 1) = -unit_vector(n, j).transpose();
      b(rows + 2 * j) = -box;
      b(rows + 2 * j + 1) = -box;
    }
    const QVector c = g.vector(n, 5);
    const auto sense = g.coin() ? Sense::Minimize : Sense::Maximize;
    const LinearProgram lp = lp_from_rows(a, b, c, sense);
    const auto res = lp_solve(lp);
    const auto oracle = brute_force_min(a, b, sense == Sense::Minimize ? c : QVector(-c));
    if (std::holds_alternative<LpInfeasible>(res)) {
      ++infeasible;
      t.check(!oracle, "infeasible but enumeration found a point");
      continue;
    }
    const auto* opt = std::get_if<LpOptimal>(&res);
    t.check(opt && oracle, "bounded LP not optimal");
    if (!opt || !oracle) continue;
    ++optimal;
    t.check(lp_satisfies(lp, opt->point) && c.dot(opt->point) == opt->value, "optimal point inconsistent");
    t.check(opt->value == (sense == Sense::Minimize ? *oracle : Rational(-*oracle)), "optimal value differs");
  }
  t.check(optimal >= 500, "only " + std::to_string(optimal) + " optimal LPs");

  int unbounded = 0;
  for (int k = 0; k < 400; ++k) {
    const Index n = g.integer(1, 4);
    const Index rows = g.integer(1, n + 2);
    const QMatrix a = g.matrix(rows, n, 4);
    const LinearProgram lp = lp_from_rows(a, g.vector(rows, 6, 2), g.vector(n, 5),
                                          g.coin() ? Sense::Minimize : Sense::Maximize);
    const auto res = lp_solve(lp);
    if (const auto* un = std::get_if<LpUnbounded>(&res)) {
      ++unbounded;
      t.check(lp_is_improving_ray(lp, un->ray), "unverified unbounded ray");
      t.check(lp_feasible_point(lp).has_value(), "unbounded result on an empty region");
    }
  }
  t.check(unbounded >= 50, "only " + std::to_string(unbounded) + " unbounded LPs");
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0 = no runtime limit
  std::function<void(Tally&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "halfplanes W1,W2,W3: msup identities and lattice search", 5, halfplanes},
      {2, "quadrant and diagonal: decomposition failure", 0, quadrant_diagonal},
      {3, "coordinate wedges of Q^5: duals, decompositions, functionals", 30, coordinate_wedges},
      {4, "rk_value and op_msup against vertex enumeration", 60, rk_equivalence},
      {5, "classical operators on Q^3 against per-coordinate LPs", 0, classical},
      {6, "property suites", 0, properties},
      {7, "simplex against basic-point enumeration", 0, lp_self_check},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0) t.check(secs < c.limit_s, "over the runtime limit");
    const bool pass = t.failures == 0;
    failed += pass ? 0 : 1;
    std::string line = std::string(pass ? "PASS" : "FAIL") + " criterion " + std::to_string(c.id) + ": " +
                       c.name + " (" + std::to_string(t.checks) + " checks, ";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", secs);
    line += buf;
    if (c.limit_s > 0) line += ", limit " + std::to_string(static_cast<int>(c.limit_s)) + " s";
    line += ")";
    if (!pass) line += " first failure: " + t.first;
    std::puts(line.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
