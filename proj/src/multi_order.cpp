#include "mw/multi_order.hpp"

#include <stdexcept>

#include "mw/error.hpp"
#include "mw/linalg.hpp"
#include "mw/lp.hpp"
#include "sampling.hpp"

namespace mw {

namespace {

Index family_dim(const Family& family, const char* what) {
  if (family.empty()) throw std::invalid_argument(std::string(what) + ": empty family");
  const Index n = family.front().apex.size();
  for (const auto& p : family)
    if (p.apex.size() != n || p.wedge.dim() != n)
      throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": mixed dimensions");
  return n;
}

const std::vector<QVector>& normals_of(const Wedge& w) {
  const auto* raw = w.input_halfspaces();
  return raw ? *raw : w.halfspaces();
}

// {u : a.(u - x_i) >= 0 for every normal a of W_i}.
LinearProgram upper_bound_system(const Family& family, Index n) {
  LinearProgram lp(n);
  for (const auto& p : family)
    for (const auto& a : normals_of(p.wedge)) lp.add(a, Relation::GreaterEqual, a.dot(p.apex));
  return lp;
}

Family negated(const Family& family) {
  Family out;
  out.reserve(family.size());
  for (const auto& p : family) out.push_back({QVector(-p.apex), p.wedge});
  return out;
}

}  // namespace

bool is_multi_upper_bound(const QVector& u, const Family& family) {
  for (const auto& p : family)
    if (!member(p.wedge, QVector(u - p.apex))) return false;
  return true;
}

bool is_multi_lower_bound(const QVector& u, const Family& family) {
  for (const auto& p : family)
    if (!member(p.wedge, QVector(p.apex - u))) return false;
  return true;
}

std::optional<QVector> multi_bounded_above(const Family& family) {
  const Index n = family_dim(family, "multi_bounded_above");
  return lp_feasible_point(upper_bound_system(family, n));
}

std::optional<QVector> multi_bounded_below(const Family& family) {
  auto u = multi_bounded_above(negated(family));
  if (u) *u = -*u;
  return u;
}

std::optional<MultiSupSet> msup(const Family& family) {
  const Index n = family_dim(family, "msup");
  LinearProgram system = upper_bound_system(family, n);
  if (!lp_feasible_point(system))
    throw Error(ErrorCode::NotMultiBoundedAbove, "msup: family is not multi-bounded above");

  std::vector<Wedge> wedges;
  for (const auto& p : family) wedges.push_back(p.wedge);
  const Wedge meet = intersect(wedges);

  LinearProgram attain = system;
  for (const auto& b : meet.halfspaces()) {
    LinearProgram lp = system;
    lp.objective = b;
    const auto res = lp_solve(lp);
    const auto* opt = std::get_if<LpOptimal>(&res);
    if (!opt) throw std::logic_error("msup: normal of the recession cone unbounded below");
    attain.add(b, Relation::Equal, opt->value);
  }
  const auto z = lp_feasible_point(attain);
  if (!z) return std::nullopt;
  MultiSupSet out{QVector(), lineality(meet)};
  out.witness = reduce_modulo_span(out.lineality_basis, *z);
  return out;
}

std::optional<MultiSupSet> minf(const Family& family) {
  std::optional<MultiSupSet> s;
  try {
    s = msup(negated(family));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotMultiBoundedAbove) throw;
    throw Error(ErrorCode::NotMultiBoundedBelow, "minf: family is not multi-bounded below");
  }
  if (s) s->witness = -s->witness;
  return s;
}

bool is_proper(const MultiSupSet& s) { return s.lineality_basis.empty(); }

bool set_contains(const MultiSupSet& s, const QVector& z) {
  return z.size() == s.witness.size() && in_span(s.lineality_basis, QVector(z - s.witness));
}

bool same_set(const MultiSupSet& a, const MultiSupSet& b) {
  if (a.witness.size() != b.witness.size()) return false;
  if (a.lineality_basis.size() != b.lineality_basis.size()) return false;
  for (const auto& v : b.lineality_basis)
    if (!in_span(a.lineality_basis, v)) return false;
  return set_contains(a, b.witness);
}

std::optional<LatticeCounterexample> multilattice_search(const std::vector<Wedge>& wedges,
                                                         std::size_t k,
                                                         const SearchOptions& options) {
  if (wedges.empty() || k == 0) return std::nullopt;
  const Index n = wedges.front().dim();
  detail::Sampler sampler(options.seed);
  for (std::size_t trial = 0; trial < options.budget; ++trial) {
    LatticeCounterexample cand;
    cand.trial = trial;
    Family family;
    for (std::size_t i = 0; i < k; ++i) {
      const auto idx =
          static_cast<std::size_t>(sampler.integer(0, static_cast<long>(wedges.size()) - 1));
      QVector apex = sampler.point(n, options.bound, options.max_den);
      cand.wedge_indices.push_back(idx);
      cand.apexes.push_back(apex);
      family.push_back({std::move(apex), wedges[idx]});
    }
    if (!multi_bounded_above(family)) continue;
    if (!msup(family)) return cand;
  }
  return std::nullopt;
}

}  // namespace mw
