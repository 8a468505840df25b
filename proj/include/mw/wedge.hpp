#ifndef MW_WEDGE_HPP
#define MW_WEDGE_HPP

#include <memory>
#include <vector>

#include "mw/rational.hpp"

namespace mw {

/// Halfspace normals {a} of the cone generated by `generators`, i.e.
/// cone(G) = {x : a.x >= 0 for all a}. An empty generator list denotes {0}.
/// Output is canonical: non-redundant, primitive integer rays, sorted.
std::vector<QVector> vrep_to_hrep(Index dim, const std::vector<QVector>& generators);

/// Generators of {x : a.x >= 0 for all a}. An empty normal list denotes the
/// whole space. Lines come out as two opposite rays. Canonical as above.
std::vector<QVector> hrep_to_vrep(Index dim, const std::vector<QVector>& halfspaces);

/**
 * Polyhedral wedge (convex cone, possibly containing lines) in Q^n.
 *
 * Constructed from either representation; the other one is derived on first
 * use and cached behind a mutex, so a Wedge can be shared across threads.
 * Copies share the cache. The accessors always return the canonical form, so
 * two wedges built from different inputs describing the same set report
 * identical generators and halfspaces.
 */
class Wedge {
 public:
  static Wedge from_generators(Index dim, std::vector<QVector> generators);
  static Wedge from_halfspaces(Index dim, std::vector<QVector> normals);
  static Wedge whole_space(Index dim) { return from_halfspaces(dim, {}); }
  static Wedge zero(Index dim) { return from_generators(dim, {}); }

  Index dim() const;
  const std::vector<QVector>& generators() const;
  const std::vector<QVector>& halfspaces() const;

  /// The representation(s) the wedge was constructed from, unnormalized.
  const std::vector<QVector>* input_generators() const;
  const std::vector<QVector>* input_halfspaces() const;

 private:
  struct Data;
  explicit Wedge(std::shared_ptr<Data> data) : data_(std::move(data)) {}
  std::shared_ptr<Data> data_;
};

bool member(const Wedge& w, const QVector& x);

/// Smallest wedge containing every input: union of generator lists.
/// Both operations require a nonempty list of wedges of one dimension.
Wedge wedge_sum(const std::vector<Wedge>& ws);

/// Union of halfspace lists.
Wedge intersect(const std::vector<Wedge>& ws);

/// Basis of D(W) = W cap -W, in reduced row echelon order with primitive
/// integer entries.
std::vector<QVector> lineality(const Wedge& w);

/// W cap (D(W))^perp: W with its lines removed. W == lineality span + this.
Wedge pointed_part(const Wedge& w);

/// The subspace D(W) as a wedge.
Wedge lineality_wedge(const Wedge& w);

bool is_cone(const Wedge& w);
bool is_generating(const Wedge& w);

/// W' = {a : a.x >= 0 for all x in W}, identifying Q^n with its dual.
Wedge dual_wedge(const Wedge& w);

/// True iff every generator of `inner` belongs to `outer`.
bool contains(const Wedge& outer, const Wedge& inner);

bool wedge_equal(const Wedge& a, const Wedge& b);

}  // namespace mw

#endif  // MW_WEDGE_HPP
