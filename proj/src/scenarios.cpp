#include "mw/scenarios.hpp"

#include <algorithm>

#include "mw/error.hpp"
#include "mw/lp.hpp"
#include "sampling.hpp"

namespace mw {

namespace {

const Wedge& half_x() {
  static const Wedge w = Wedge::from_halfspaces(2, {unit_vector(2, 0)});
  return w;
}
const Wedge& half_y() {
  static const Wedge w = Wedge::from_halfspaces(2, {unit_vector(2, 1)});
  return w;
}
const Wedge& half_sum() {
  static const Wedge w = Wedge::from_halfspaces(2, {QVector::Ones(2)});
  return w;
}
const Wedge& quadrant() {
  static const Wedge w = Wedge::from_generators(2, {unit_vector(2, 0), unit_vector(2, 1)});
  return w;
}
const Wedge& diagonal() {
  static const Wedge w = Wedge::from_generators(2, {QVector::Ones(2)});
  return w;
}

Json search_to_json(const std::optional<LatticeCounterexample>& c, std::size_t k) {
  Json out{{"k", k}, {"found", c.has_value()}, {"apexes", Json::array()}};
  if (c) {
    out["apexes"] = vectors_to_json(c->apexes);
    out["wedge_indices"] = c->wedge_indices;
    out["trial"] = c->trial;
  }
  return out;
}

// Vertices of {u : a.u >= a.x_i for every normal a of W_i}, by solving every
// square subsystem. Only meant for the tiny planar region of ex2.7.
Json upper_bound_region(const Family& f) {
  const Index n = f.front().apex.size();
  std::vector<QVector> normals;
  std::vector<Rational> rhs;
  Json constraints = Json::array();
  for (const auto& p : f)
    for (const auto& a : p.wedge.halfspaces()) {
      normals.push_back(a);
      rhs.push_back(a.dot(p.apex));
      constraints.push_back({{"normal", vector_to_json(a)}, {"rhs", rational_to_json(rhs.back())}});
    }
  std::vector<QVector> vertices;
  const auto m = static_cast<Index>(normals.size());
  for (Index i = 0; i < m; ++i)
    for (Index j = i + 1; j < m && n == 2; ++j) {
      QMatrix a(2, 2);
      a.row(0) = normals[static_cast<std::size_t>(i)].transpose();
      a.row(1) = normals[static_cast<std::size_t>(j)].transpose();
      const QVector b{{rhs[static_cast<std::size_t>(i)], rhs[static_cast<std::size_t>(j)]}};
      const auto sol = solve_linear(a, b);
      if (!sol || !sol->nullspace_basis.empty()) continue;
      bool inside = true;
      for (Index r = 0; r < m; ++r)
        inside = inside && normals[static_cast<std::size_t>(r)].dot(sol->particular) >=
                               rhs[static_cast<std::size_t>(r)];
      if (inside && std::find(vertices.begin(), vertices.end(), sol->particular) == vertices.end())
        vertices.push_back(sol->particular);
    }
  std::sort(vertices.begin(), vertices.end(), lex_less);
  return {{"constraints", constraints}, {"vertices", vectors_to_json(vertices)}};
}

Json ex27(const ScenarioOptions& options) {
  const std::vector<Wedge> ws{half_x(), half_y(), half_sum()};
  const QVector origin = QVector::Zero(2);
  bool ok = true;

  Json pairs = Json::array();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const auto s = msup({{origin, ws[i]}, {origin, ws[j]}});
      Json p{{"wedges", {i + 1, j + 1}}};
      if (s) {
        p["result"] = is_proper(*s) ? "proper" : "improper";
        p["witness"] = vector_to_json(s->witness);
      } else {
        p["result"] = "empty";
      }
      ok = ok && s && is_proper(*s);
      pairs.push_back(p);
    }

  const Family triple{{origin, ws[0]}, {origin, ws[1]}, {QVector::Ones(2), ws[2]}};
  const auto s3 = msup(triple);
  ok = ok && !s3;

  const SearchOptions so{.seed = options.seed, .budget = options.budget};
  const auto k2 = multilattice_search(ws, 2, so);
  const auto k3 = multilattice_search(ws, 3, so);
  ok = ok && !k2 && k3;

  Json wedges = Json::object();
  for (std::size_t i = 0; i < 3; ++i) wedges["W" + std::to_string(i + 1)] = wedge_to_json(ws[i]);
  return {{"name", "ex2.7"},
          {"wedges", wedges},
          {"pairwise", pairs},
          {"triple",
           {{"family", family_to_json(triple)},
            {"result", s3 ? "nonempty" : "empty"},
            {"upper_bound_region", upper_bound_region(triple)}}},
          {"lattice_search", {search_to_json(k2, 2), search_to_json(k3, 3)}},
          {"reproduced", ok}};
}

Json ex37(const ScenarioOptions& options) {
  const std::vector<Wedge> ws{quadrant(), diagonal()};
  const RdpInstance inst{ws, {QVector{{2, 0}}, QVector{{0, 1}}}, {QVector{{1, 0}}, QVector{{1, 1}}}};
  const bool infeasible = !rdp_check(inst);

  const SearchOptions so{.seed = options.seed, .budget = options.budget};
  const auto found = rdp_search(ws, 2, 2, so);
  Json search{{"found", found.has_value()}};
  if (found) {
    search["trial"] = found->trial;
    search["instance"] = rdp_instance_to_json(found->instance);
  }

  bool lattice_ok = true;
  Json lattice = Json::array();
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto c = multilattice_search(ws, k, so);
    lattice_ok = lattice_ok && !c;
    lattice.push_back(search_to_json(c, k));
  }
  return {{"name", "ex3.7"},
          {"wedges", {{"W1", wedge_to_json(ws[0])}, {"W2", wedge_to_json(ws[1])}}},
          {"instance", rdp_instance_to_json(inst)},
          {"rdp_check", infeasible ? "infeasible" : "decomposition"},
          {"rdp_search", search},
          {"lattice_search", lattice},
          {"reproduced", infeasible && found.has_value() && lattice_ok}};
}

Json ex313(const ScenarioOptions& options) {
  constexpr Index size = 5;
  detail::Sampler sampler(options.seed);

  Json duals = Json::array();
  bool duals_ok = true;
  for (Index s = 0; s < size; ++s) {
    const bool eq = wedge_equal(dual_wedge(coordinate_wedge(size, s)), coordinate_ray(size, s));
    duals_ok = duals_ok && eq;
    duals.push_back({{"s", s}, {"dual_is_ray", eq}});
  }

  constexpr int fs_instances = 200;
  int fs_valid = 0;
  for (int t = 0; t < fs_instances; ++t) {
    const auto m = static_cast<std::size_t>(sampler.integer(1, 4));
    const auto n = static_cast<std::size_t>(sampler.integer(1, 4));
    std::vector<Index> js;
    std::vector<QVector> ys, xs;
    QVector total = QVector::Zero(size);
    for (std::size_t j = 0; j < n; ++j) {
      js.push_back(sampler.integer(0, size - 1));
      QVector y = sampler.point(size, 4, 4);
      y(js.back()) = sampler.perturbed(0, 4, 4);
      total += y;
      ys.push_back(std::move(y));
    }
    const bool same = std::all_of(js.begin(), js.end(), [&](Index s) { return s == js.front(); });
    Rational left = total(js.front());
    QVector rest = total;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      QVector x = sampler.point(size, 4, 4);
      if (same) {
        x(js.front()) = left * sampler.integer(0, 4) / 4;
        left -= x(js.front());
      }
      rest -= x;
      xs.push_back(std::move(x));
    }
    xs.push_back(std::move(rest));
    const auto z = fs_decompose(size, js, xs, ys);
    if (is_valid_decomposition(coordinate_instance(size, js, xs, ys), z)) ++fs_valid;
  }

  // Families phi_i = psi - mu_i e_{s_i} (mu_i >= 0) are multi-bounded above.
  constexpr int families = 50;
  int proper = 0;
  for (int t = 0; t < families; ++t) {
    const QVector psi = sampler.point(size, 3, 2);
    std::vector<QVector> phis;
    std::vector<Wedge> ws;
    for (long i = sampler.integer(1, 4); i > 0; --i) {
      const Index s = sampler.integer(0, size - 1);
      phis.push_back(psi - sampler.perturbed(0, 3, 2) * unit_vector(size, s));
      ws.push_back(coordinate_wedge(size, s));
    }
    const auto r = functional_msup(phis, ws);
    if (r.lineality_ops.empty()) ++proper;
  }

  return {{"name", "ex3.13"},
          {"size", size},
          {"duals", duals},
          {"fs_decompose", {{"instances", fs_instances}, {"valid", fs_valid}}},
          {"functional_msup", {{"families", families}, {"proper", proper}}},
          {"reproduced", duals_ok && fs_valid == fs_instances && proper == families}};
}

}  // namespace

std::vector<ScenarioInfo> scenarios() {
  return {{"ex2.7", "halfplanes x>=0, y>=0, x+y>=0 in Q^2; pairwise msups proper, a translated triple has none"},
          {"ex3.7", "quadrant and diagonal ray in Q^2; decomposition fails for x=(2,0),(0,1), y=(1,0),(1,1)"},
          {"ex3.13", "coordinate wedges f(s)>=0 of Q^5; closed-form decompositions, proper functional msups"}};
}

Json run_scenario(const std::string& name, const ScenarioOptions& options) {
  if (name == "ex2.7") return ex27(options);
  if (name == "ex3.7") return ex37(options);
  if (name == "ex3.13") return ex313(options);
  throw FormatError("unknown example \"" + name + "\"");
}

}  // namespace mw
