#ifndef MW_MULTI_ORDER_HPP
#define MW_MULTI_ORDER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mw/rational.hpp"
#include "mw/wedge.hpp"

namespace mw {

/// The pair (x_i, W_i), i.e. the translate x_i + W_i.
struct TranslatedWedge {
  QVector apex;
  Wedge wedge;
};

using Family = std::vector<TranslatedWedge>;

/// The affine set witness + span(lineality_basis) of all multi-suprema (or
/// multi-infima). The witness is reduced modulo the lineality space, so equal
/// sets have equal representations.
struct MultiSupSet {
  QVector witness;
  std::vector<QVector> lineality_basis;
};

/// u - x_i in W_i for every i.
bool is_multi_upper_bound(const QVector& u, const Family& family);
/// x_i - u in W_i for every i.
bool is_multi_lower_bound(const QVector& u, const Family& family);

/// A point of the intersection of the translates x_i + W_i, if nonempty.
std::optional<QVector> multi_bounded_above(const Family& family);
std::optional<QVector> multi_bounded_below(const Family& family);

/**
 * All multi-suprema of the family, or nullopt when the set is empty.
 *
 * With P the intersection of the x_i + W_i and C the intersection of the
 * W_i, z is a multi-supremum iff P == z + C. For every halfspace normal b of
 * C we minimize b.u over P (bounded, since C is the recession cone of P) and
 * then look for a z in P attaining all those minima at once.
 *
 * Throws Error(NotMultiBoundedAbove) when P is empty.
 */
std::optional<MultiSupSet> msup(const Family& family);

/// minf(x_i, W_i) = -msup(-x_i, W_i). Throws Error(NotMultiBoundedBelow).
std::optional<MultiSupSet> minf(const Family& family);

bool is_proper(const MultiSupSet& s);

/// z lies in the set.
bool set_contains(const MultiSupSet& s, const QVector& z);

/// Set equality: same lineality span and witnesses differing by it.
bool same_set(const MultiSupSet& a, const MultiSupSet& b);

struct SearchOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 1000;
  /// Integer part of sampled coordinates lies in [-bound, bound].
  long bound = 5;
  /// Fractional perturbations have denominators in [1, max_den].
  long max_den = 4;
};

struct LatticeCounterexample {
  std::size_t trial = 0;
  std::vector<std::size_t> wedge_indices;
  std::vector<QVector> apexes;
};

/// Refutes the k-multi-lattice property by random search: each trial picks k
/// wedges (with repetition) and k apexes, skips families that are not
/// multi-bounded above and stops at the first family with empty msup.
/// Deterministic for a given seed.
std::optional<LatticeCounterexample> multilattice_search(const std::vector<Wedge>& wedges,
                                                         std::size_t k,
                                                         const SearchOptions& options = {});

}  // namespace mw

#endif  // MW_MULTI_ORDER_HPP
