#include "mw/wedge.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "mw/error.hpp"
#include "mw/linalg.hpp"

namespace mw {

namespace {

struct Ray {
  QVector v;
  std::vector<bool> active;  // zero set over processed constraints
};

Index rank_of_rows(const std::vector<QVector>& rows, const std::vector<bool>& mask, Index dim) {
  std::vector<QVector> picked;
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (mask[k]) picked.push_back(rows[k]);
  if (picked.empty()) return 0;
  return rank(stack_rows(picked, dim));
}

// Double description with explicit lineality. The cone after k constraints is
// span(lin) + cone(rays); rays are kept modulo lin and are always extreme.
struct DoubleDescription {
  Index dim;
  std::vector<QVector> lin;
  std::vector<Ray> rays;
  std::vector<QVector> processed;

  explicit DoubleDescription(Index n) : dim(n) {
    for (Index k = 0; k < n; ++k) lin.push_back(unit_vector(n, k));
  }

  void add(const QVector& a) {
    if (is_zero(a)) return;
    auto pivot = std::find_if(lin.begin(), lin.end(), [&](const QVector& l) { return a.dot(l) != 0; });
    if (pivot != lin.end()) {
      QVector l0 = *pivot;
      lin.erase(pivot);
      Rational al0 = a.dot(l0);
      if (al0 < 0) {
        l0 = -l0;
        al0 = -al0;
      }
      for (auto& l : lin) l = primitive(QVector(l - (a.dot(l) / al0) * l0));
      for (auto& r : rays) {
        r.v = primitive(QVector(r.v - (a.dot(r.v) / al0) * l0));
        r.active.push_back(true);
      }
      std::vector<bool> act(processed.size(), true);
      act.push_back(false);
      rays.push_back({primitive(l0), std::move(act)});
      processed.push_back(a);
      return;
    }

    const Index pointed_dim = dim - static_cast<Index>(lin.size());
    std::vector<const Ray*> pos, neg;
    std::vector<Ray> next;
    for (const auto& r : rays) {
      const Rational s = a.dot(r.v);
      if (s > 0)
        pos.push_back(&r);
      else if (s < 0)
        neg.push_back(&r);
      Ray copy = r;
      copy.active.push_back(s == 0);
      if (s >= 0) next.push_back(std::move(copy));
    }
    for (const Ray* p : pos) {
      for (const Ray* q : neg) {
        std::vector<bool> common(processed.size());
        for (std::size_t k = 0; k < processed.size(); ++k) common[k] = p->active[k] && q->active[k];
        if (rank_of_rows(processed, common, dim) != pointed_dim - 2) continue;
        QVector v = a.dot(p->v) * q->v - a.dot(q->v) * p->v;
        common.push_back(true);
        next.push_back({primitive(v), std::move(common)});
      }
    }
    rays = std::move(next);
    processed.push_back(a);
  }
};

void sort_unique(std::vector<QVector>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end(),
                       [](const QVector& x, const QVector& y) { return x == y; }),
           vs.end());
}

// Canonical lineality basis: RREF rows of the spanning set, made primitive.
std::vector<QVector> canonical_subspace(const std::vector<QVector>& span, Index dim) {
  if (span.empty()) return {};
  const auto r = rref(stack_rows(span, dim));
  std::vector<QVector> out;
  for (std::size_t k = 0; k < r.pivots.size(); ++k)
    out.push_back(primitive(QVector(r.reduced.row(static_cast<Index>(k)).transpose())));
  return out;
}

void check_dims(Index dim, const std::vector<QVector>& vs, const char* what) {
  for (const auto& v : vs)
    if (v.size() != dim)
      throw Error(ErrorCode::DimensionMismatch,
                  std::string(what) + ": vector of length " + std::to_string(v.size()) +
                      " in dimension " + std::to_string(dim));
}

}  // namespace

std::vector<QVector> hrep_to_vrep(Index dim, const std::vector<QVector>& halfspaces) {
  check_dims(dim, halfspaces, "hrep_to_vrep");
  DoubleDescription dd(dim);
  for (const auto& a : halfspaces) dd.add(a);

  std::vector<QVector> lin = canonical_subspace(dd.lin, dim);
  std::vector<QVector> out;
  for (const auto& l : lin) {
    out.push_back(l);
    out.push_back(-l);
  }
  for (const auto& r : dd.rays) out.push_back(primitive(reduce_modulo_span(lin, r.v)));
  sort_unique(out);
  return out;
}

std::vector<QVector> vrep_to_hrep(Index dim, const std::vector<QVector>& generators) {
  // The halfspace normals of cone(G) are exactly the generators of its dual
  // {a : a.g >= 0 for all g}.
  check_dims(dim, generators, "vrep_to_hrep");
  return hrep_to_vrep(dim, generators);
}

struct Wedge::Data {
  Index dim = 0;
  std::optional<std::vector<QVector>> input_gens;
  std::optional<std::vector<QVector>> input_halfs;

  mutable std::mutex mu;
  mutable std::optional<std::vector<QVector>> gens;
  mutable std::optional<std::vector<QVector>> halfs;

  void ensure() const {
    std::lock_guard<std::mutex> lock(mu);
    if (gens && halfs) return;
    if (input_halfs) {
      gens = hrep_to_vrep(dim, *input_halfs);
      halfs = vrep_to_hrep(dim, *gens);
    } else {
      halfs = vrep_to_hrep(dim, *input_gens);
      gens = hrep_to_vrep(dim, *halfs);
    }
  }
};

Wedge Wedge::from_generators(Index dim, std::vector<QVector> generators) {
  check_dims(dim, generators, "Wedge::from_generators");
  auto d = std::make_shared<Data>();
  d->dim = dim;
  d->input_gens = std::move(generators);
  return Wedge(std::move(d));
}

Wedge Wedge::from_halfspaces(Index dim, std::vector<QVector> normals) {
  check_dims(dim, normals, "Wedge::from_halfspaces");
  auto d = std::make_shared<Data>();
  d->dim = dim;
  d->input_halfs = std::move(normals);
  return Wedge(std::move(d));
}

Index Wedge::dim() const { return data_->dim; }

const std::vector<QVector>& Wedge::generators() const {
  data_->ensure();
  return *data_->gens;
}

const std::vector<QVector>& Wedge::halfspaces() const {
  data_->ensure();
  return *data_->halfs;
}

const std::vector<QVector>* Wedge::input_generators() const {
  return data_->input_gens ? &*data_->input_gens : nullptr;
}

const std::vector<QVector>* Wedge::input_halfspaces() const {
  return data_->input_halfs ? &*data_->input_halfs : nullptr;
}

bool member(const Wedge& w, const QVector& x) {
  if (x.size() != w.dim())
    throw Error(ErrorCode::DimensionMismatch, "member: point dimension differs from wedge");
  // Prefer raw input normals: no conversion needed.
  const auto* normals = w.input_halfspaces();
  const auto& hs = normals ? *normals : w.halfspaces();
  return std::all_of(hs.begin(), hs.end(), [&](const QVector& a) { return a.dot(x) >= 0; });
}

namespace {

Index common_dim(const std::vector<Wedge>& ws, const char* what) {
  if (ws.empty()) throw std::invalid_argument(std::string(what) + ": empty wedge list");
  const Index n = ws.front().dim();
  for (const auto& w : ws)
    if (w.dim() != n)
      throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": wedges differ in dimension");
  return n;
}

}  // namespace

Wedge wedge_sum(const std::vector<Wedge>& ws) {
  const Index n = common_dim(ws, "wedge_sum");
  std::vector<QVector> gens;
  for (const auto& w : ws) {
    const auto& g = w.generators();
    gens.insert(gens.end(), g.begin(), g.end());
  }
  return Wedge::from_generators(n, std::move(gens));
}

Wedge intersect(const std::vector<Wedge>& ws) {
  const Index n = common_dim(ws, "intersect");
  std::vector<QVector> halfs;
  for (const auto& w : ws) {
    const auto* raw = w.input_halfspaces();
    const auto& h = raw ? *raw : w.halfspaces();
    halfs.insert(halfs.end(), h.begin(), h.end());
  }
  return Wedge::from_halfspaces(n, std::move(halfs));
}

std::vector<QVector> lineality(const Wedge& w) {
  const auto& hs = w.halfspaces();
  return canonical_subspace(nullspace(stack_rows(hs, w.dim())), w.dim());
}

Wedge pointed_part(const Wedge& w) {
  const auto lin = lineality(w);
  std::vector<QVector> rays;
  for (const auto& g : w.generators())
    if (!in_span(lin, g)) rays.push_back(g);
  return Wedge::from_generators(w.dim(), std::move(rays));
}

Wedge lineality_wedge(const Wedge& w) {
  std::vector<QVector> gens;
  for (const auto& l : lineality(w)) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return Wedge::from_generators(w.dim(), std::move(gens));
}

bool is_cone(const Wedge& w) { return lineality(w).empty(); }

bool is_generating(const Wedge& w) {
  const auto& g = w.generators();
  if (g.empty()) return w.dim() == 0;
  return rank(stack_rows(g, w.dim())) == w.dim();
}

Wedge dual_wedge(const Wedge& w) { return Wedge::from_halfspaces(w.dim(), w.generators()); }

bool contains(const Wedge& outer, const Wedge& inner) {
  if (outer.dim() != inner.dim()) return false;
  const auto& g = inner.generators();
  return std::all_of(g.begin(), g.end(), [&](const QVector& x) { return member(outer, x); });
}

bool wedge_equal(const Wedge& a, const Wedge& b) { return contains(a, b) && contains(b, a); }

}  // namespace mw
