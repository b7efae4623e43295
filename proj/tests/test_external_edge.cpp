#include <doctest.h>

#include "qcg/errors.hpp"
#include "qcg/external_edge.hpp"
#include "qcg/representation.hpp"
#include "support.hpp"

using namespace qcg;
using test::load;
using test::space_of;
using test::wv;

namespace {

CycleMask mask_of(const WeightSpace& space, std::vector<std::string> ids) {
  return space.basis().coordinates(Cycle::from_edge_ids(space.graph(), ids));
}

}  // namespace

TEST_CASE("external targets") {
  const auto theta = load("theta").graph;
  CHECK(external_target(theta, Level(2), wv({1, 1, 0}), Cycle::from_edge_ids(theta, {"e1", "e2"})).is_one());

  const auto dumbbell = load("dumbbell").graph;
  const auto a = Cycle::from_edge_ids(dumbbell, {"a"});
  CHECK(external_target(dumbbell, Level(4), wv({2, 2, 2}), a) == CircleValue::minus_one());
  CHECK(external_target(dumbbell, Level(4), wv({2, 2, 0}), a).is_one());
  CHECK_THROWS_AS(external_target(dumbbell, Level(4), wv({0, 0, 0}), a), NotFixed);
  CHECK_THROWS_AS(external_target(dumbbell, Level(4), wv({2, 2, 2}), Cycle::zero(dumbbell)), ZeroCycle);

  const auto gamma1 = load("gamma1").graph;
  CHECK(external_target(gamma1, Level(4), wv({2, 2}), Cycle::from_edge_ids(gamma1, {"f2"})) ==
        CircleValue::minus_one());
}

TEST_CASE("fixed pairs carry integer weights on external edges") {
  for (int k = 2; k <= 4; k += 2) {
    for (const auto& space : test::suite_spaces(k)) {
      for (CycleMask l = 1; l < space->basis().group_order(); ++l) {
        const auto ex = external_edges(space->graph(), space->basis().element(l));
        for (std::size_t w = 0; w < space->size(); ++w) {
          if (!space->fixes(l, w)) continue;
          for (auto e : ex) CHECK(space->weight(w)[e] % 2 == 0);
        }
      }
    }
  }
}

TEST_CASE("parity identity on every orbit") {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& space : test::suite_spaces(k)) {
      for (std::size_t o = 0; o < space->orbits().size(); ++o) {
        const auto report = check_parity_identity(*space, o);
        CAPTURE(report.counterexample);
        CHECK(report.ok);
      }
    }
  }
}

TEST_CASE("external cocycle on the dumbbell at level 4") {
  const auto space = space_of("dumbbell", 4);
  const auto ext = construct_external_cocycle(space);
  CHECK(is_twisted_cocycle(ext));
  CHECK(satisfies_external_condition(ext));
  const auto w = *space->index_of(wv({2, 2, 2}));
  CHECK(ext.evaluate(mask_of(*space, {"a"}), w) == CircleValue::minus_one());
  CHECK(ext.evaluate(mask_of(*space, {"b"}), w) == CircleValue::minus_one());
  CHECK_FALSE(satisfies_external_condition(CocycleTable::trivial(space)));
}

TEST_CASE("odd levels and theta give trivial classes") {
  for (int k : {1, 3, 5}) {
    const auto space = space_of("dumbbell", k);
    const auto ext = construct_external_cocycle(space);
    CHECK(ext == CocycleTable::trivial(space));
    CHECK(satisfies_external_condition(CocycleTable::trivial(space)));
  }
  const auto theta = space_of("theta", 2);
  CHECK(is_coboundary(construct_external_cocycle(theta)));
}

TEST_CASE("standard Gamma(n) cocycles") {
  const auto g1 = space_of("gamma1", 4, {2});
  const auto standard = standard_gamma_n_cocycle(g1);
  const auto j0 = *g1->index_of(wv({2, 2}));
  for (std::size_t w = 0; w < g1->size(); ++w) {
    CHECK(standard.at(0, w) == (w == j0 ? CircleValue::minus_one() : CircleValue::one()));
  }
  CHECK(cohomology_invariant(standard) == cohomology_invariant(construct_external_cocycle(g1)));
  CHECK_FALSE(reps_isomorphic(standard, CocycleTable::trivial(g1)));

  const auto g1_zero = space_of("gamma1", 4, {0});
  CHECK(standard_gamma_n_cocycle(g1_zero) == CocycleTable::trivial(g1_zero));

  const auto g2_odd = space_of("gamma2", 2, {1, 1});
  CHECK_FALSE(g2_odd->index_of(wv({1, 1, 1, 1})).has_value());
  CHECK(standard_gamma_n_cocycle(g2_odd) == CocycleTable::trivial(g2_odd));

  const auto g2 = space_of("gamma2", 4, {2, 0});
  const auto j0_2 = g2->index_of(wv({2, 0, 2, 2}));
  REQUIRE(j0_2.has_value());
  CHECK(standard_gamma_n_cocycle(g2).at(0, *j0_2) == CircleValue::minus_one());

  CHECK_THROWS_AS(standard_gamma_n_cocycle(space_of("theta", 2)), NotGammaN);
}

TEST_CASE("standard cocycles match the external class on all boundaries") {
  for (const std::string name : {"gamma1", "gamma2", "gamma3"}) {
    for (int k = 1; k <= 6; ++k) {
      const auto n = load(name).graph.boundary().size();
      for (const auto& b : test::all_boundaries(n, k)) {
        const auto space = space_of(name, k, b);
        CAPTURE(name);
        CAPTURE(k);
        CHECK(cohomology_invariant(standard_gamma_n_cocycle(space)) ==
              cohomology_invariant(construct_external_cocycle(space)));
      }
    }
  }
}
