#include <doctest.h>

#include "mw/error.hpp"
#include "mw/linalg.hpp"
#include "mw/lp.hpp"
#include "mw/multi_order.hpp"
#include "oracles.hpp"

using namespace mw;
using namespace mwtest;

namespace {

const Wedge w1 = Wedge::from_halfspaces(2, {vec({1, 0})});
const Wedge w2 = Wedge::from_halfspaces(2, {vec({0, 1})});
const Wedge w3 = Wedge::from_halfspaces(2, {vec({1, 1})});
const Wedge quadrant = Wedge::from_generators(2, {vec({1, 0}), vec({0, 1})});
const Wedge diagonal = Wedge::from_generators(2, {vec({1, 1})});

const QVector origin = vec({0, 0});

Family ex27_triple() { return {{origin, w1}, {origin, w2}, {vec({1, 1}), w3}}; }

Family random_family(Gen& g, Index n, Index size) {
  Family f;
  for (Index i = 0; i < size; ++i) f.push_back({g.vector(n, 4, 3), g.wedge(n, 2)});
  return f;
}

}  // namespace

TEST_CASE("is_multi_upper_bound examples") {
  CHECK(is_multi_upper_bound(vec({2, 2}), ex27_triple()));
  CHECK(is_multi_upper_bound(vec({3, -1}), {{vec({3, -1}), w3}}));
  CHECK_FALSE(is_multi_upper_bound(origin, ex27_triple()));
}

TEST_CASE("multi_bounded_above examples") {
  auto single = multi_bounded_above({{vec({1, 2}), quadrant}});
  REQUIRE(single);
  CHECK(is_multi_upper_bound(*single, {{vec({1, 2}), quadrant}}));

  const Wedge right = Wedge::from_halfspaces(2, {vec({1, 0})});
  const Wedge left = Wedge::from_halfspaces(2, {vec({-1, 0})});
  // x >= 0 and x <= -1 cannot hold together.
  CHECK_FALSE(multi_bounded_above({{origin, right}, {vec({-1, 0}), left}}));
  // x >= 0 and x <= 1 can.
  auto u = multi_bounded_above({{origin, right}, {vec({1, 0}), left}});
  REQUIRE(u);
  CHECK((*u)(0) >= 0);
  CHECK((*u)(0) <= 1);

  const Wedge r1 = Wedge::from_halfspaces(1, {vec({1})});
  const Wedge l1 = Wedge::from_halfspaces(1, {vec({-1})});
  CHECK_FALSE(multi_bounded_above({{vec({1}), r1}, {vec({-1}), l1}}));
}

TEST_CASE("msup examples") {
  CHECK_FALSE(msup(ex27_triple()));

  auto pair = msup({{origin, w1}, {origin, w2}});
  REQUIRE(pair);
  CHECK(pair->witness == origin);
  CHECK(is_proper(*pair));

  auto single = msup({{vec({3, -1}), w1}});
  REQUIRE(single);
  CHECK(single->lineality_basis == lineality(w1));
  CHECK(set_contains(*single, vec({3, -1})));
  CHECK(set_contains(*single, vec({3, 7})));
  CHECK_FALSE(set_contains(*single, vec({4, -1})));
  CHECK_FALSE(is_proper(*single));

  auto cone = msup({{vec({1, 5}), quadrant}});
  REQUIRE(cone);
  CHECK(cone->witness == vec({1, 5}));
  CHECK(is_proper(*cone));

  const Wedge right = Wedge::from_halfspaces(2, {vec({1, 0})});
  const Wedge left = Wedge::from_halfspaces(2, {vec({-1, 0})});
  try {
    msup({{origin, right}, {vec({-1, 0}), left}});
    FAIL("expected NotMultiBoundedAbove");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMultiBoundedAbove);
  }
}

TEST_CASE("every pairwise msup of the three halfplanes is proper") {
  const std::vector<Wedge> ws{w1, w2, w3};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      auto s = msup({{origin, ws[i]}, {origin, ws[j]}});
      REQUIRE(s);
      CHECK(s->witness == origin);
      CHECK(is_proper(*s));
    }
}

TEST_CASE("minf examples mirror msup") {
  Family mirrored;
  for (const auto& p : ex27_triple()) mirrored.push_back({QVector(-p.apex), p.wedge});
  CHECK_FALSE(minf(mirrored));

  auto pair = minf({{origin, w1}, {origin, w2}});
  REQUIRE(pair);
  CHECK(pair->witness == origin);
  CHECK(is_proper(*pair));

  auto single = minf({{vec({3, -1}), w1}});
  REQUIRE(single);
  CHECK(set_contains(*single, vec({3, -1})));

  const Wedge right = Wedge::from_halfspaces(2, {vec({1, 0})});
  const Wedge left = Wedge::from_halfspaces(2, {vec({-1, 0})});
  try {
    minf({{origin, left}, {vec({-1, 0}), right}});
    FAIL("expected NotMultiBoundedBelow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMultiBoundedBelow);
  }
}

TEST_CASE("multilattice_search examples") {
  const std::vector<Wedge> ex27{w1, w2, w3};
  auto found = multilattice_search(ex27, 3, {.seed = 0, .budget = 1000});
  REQUIRE(found);
  Family f;
  for (std::size_t i = 0; i < 3; ++i) f.push_back({found->apexes[i], ex27[found->wedge_indices[i]]});
  CHECK(multi_bounded_above(f));
  CHECK_FALSE(msup(f));

  CHECK_FALSE(multilattice_search(ex27, 2, {.seed = 0, .budget = 1000}));
  const std::vector<Wedge> ex37{quadrant, diagonal};
  CHECK_FALSE(multilattice_search(ex37, 5, {.seed = 0, .budget = 1000}));
}

TEST_CASE("multilattice_search is deterministic per seed") {
  const std::vector<Wedge> ex27{w1, w2, w3};
  auto a = multilattice_search(ex27, 3, {.seed = 9, .budget = 1000});
  auto b = multilattice_search(ex27, 3, {.seed = 9, .budget = 1000});
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->trial == b->trial);
  CHECK(a->apexes == b->apexes);
}

TEST_CASE("families closed under intersection stay multi-lattices at higher arity") {
  const std::vector<Wedge> closed2{w1, w2, quadrant};
  std::vector<Wedge> closed3;
  // All coordinate faces {x_s >= 0 for s in A}, A nonempty, in Q^3.
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<QVector> hs;
    for (Index s = 0; s < 3; ++s)
      if (mask & (1 << s)) hs.push_back(unit_vector(3, s));
    closed3.push_back(Wedge::from_halfspaces(3, hs));
  }
  for (const std::vector<Wedge>* ws : std::initializer_list<const std::vector<Wedge>*>{&closed2, &closed3}) {
    REQUIRE_FALSE(multilattice_search(*ws, 2, {.seed = 1, .budget = 200}));
    for (std::size_t k = 3; k <= 6; ++k) CHECK_FALSE(multilattice_search(*ws, k, {.seed = k, .budget = 100}));
  }
}

TEST_CASE("msup set identities and soundness on random families") {
  Gen g(77);
  int nonempty = 0, empty = 0, unbounded = 0;
  for (int t = 0; t < 300; ++t) {
    const Index n = g.integer(1, 3);
    const Family f = random_family(g, n, g.integer(1, 3));
    std::optional<MultiSupSet> s;
    try {
      s = msup(f);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotMultiBoundedAbove);
      CHECK_FALSE(multi_bounded_above(f));
      ++unbounded;
      continue;
    }
    if (auto u = multi_bounded_above(f)) CHECK(is_multi_upper_bound(*u, f));

    const QVector y = g.vector(n, 3, 2);
    const Rational lambda = Rational(g.integer(1, 6)) / g.integer(1, 3);
    Family shifted, scaled, neg;
    for (const auto& p : f) {
      shifted.push_back({QVector(p.apex + y), p.wedge});
      scaled.push_back({QVector(lambda * p.apex), p.wedge});
      neg.push_back({QVector(-p.apex), p.wedge});
    }
    const auto s_shift = msup(shifted);
    const auto s_scale = msup(scaled);
    const auto i_direct = direct_minf(neg);
    const auto i_neg = minf(neg);
    CHECK(s.has_value() == s_shift.has_value());
    CHECK(s.has_value() == s_scale.has_value());
    CHECK(s.has_value() == i_direct.has_value());
    CHECK(s.has_value() == i_neg.has_value());
    if (!s) {
      ++empty;
      continue;
    }
    ++nonempty;
    CHECK(same_set(*s_shift, {QVector(s->witness + y), s->lineality_basis}));
    CHECK(same_set(*s_scale, {QVector(lambda * s->witness), s->lineality_basis}));
    CHECK(same_set(*i_direct, {QVector(-s->witness), s->lineality_basis}));
    CHECK(same_set(*i_neg, *i_direct));

    // Soundness: the witness is an upper bound below every sampled upper bound.
    CHECK(is_multi_upper_bound(s->witness, f));
    int accepted = 0;
    for (int k = 0; k < 400 && accepted < 100; ++k) {
      const QVector u = s->witness + g.vector(n, 4, 2);
      if (!is_multi_upper_bound(u, f)) continue;
      ++accepted;
      for (const auto& p : f) CHECK(member(p.wedge, QVector(u - s->witness)));
    }
    // Lineality directions stay inside the multi-supremum set.
    for (const auto& l : s->lineality_basis)
      CHECK(is_multi_upper_bound(QVector(s->witness + l), f));
  }
  CHECK(nonempty > 50);
  CHECK(empty > 5);
  CHECK(unbounded > 5);
}
