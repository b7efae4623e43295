#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "qcg/cohomology.hpp"
#include "qcg/errors.hpp"
#include "qcg/external_edge.hpp"
#include "qcg/sampling.hpp"
#include "support.hpp"

using namespace qcg;
using test::space_of;
using test::wv;

namespace {

/// Enumerates every sign-valued table on basis x weights, keeps the
/// cocycles and counts their distinct invariants.
std::size_t literal_class_count(const WeightSpacePtr& space) {
  const auto entries = space->genus() * space->size();
  REQUIRE(entries <= 22);
  std::set<std::vector<std::vector<CircleValue>>> classes;
  std::vector<CircleValue> values(entries);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << entries); ++s) {
    for (std::size_t i = 0; i < entries; ++i) values[i] = CircleValue::sign((s >> i) & 1U);
    const CocycleTable t(space, values);
    if (is_twisted_cocycle(t)) classes.insert(cohomology_invariant(t).characters);
  }
  return classes.size();
}

CycleMask mask_of(const WeightSpace& space, std::vector<std::string> ids) {
  return space.basis().coordinates(Cycle::from_edge_ids(space.graph(), ids));
}

}  // namespace

TEST_CASE("trivial and coboundary tables are cocycles") {
  const auto space = space_of("theta", 2);
  CHECK(is_twisted_cocycle(CocycleTable::trivial(space)));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) CHECK(is_twisted_cocycle(coboundary_of(random_cochain(space, rng))));
}

TEST_CASE("order-four values off fixed points form a cocycle") {
  const auto space = space_of("gamma1", 4, {0});
  const auto a = *space->index_of(wv({0, 0}));
  const auto b = *space->index_of(wv({0, 4}));
  REQUIRE(space->act_basis(0, a) == b);
  std::vector<CircleValue> values(space->size());
  values[a] = CircleValue(1, 4);
  values[b] = CircleValue(3, 4);
  const CocycleTable t(space, values);
  CHECK(is_twisted_cocycle(t));
  values[b] = CircleValue(1, 4);
  CHECK_FALSE(is_twisted_cocycle(CocycleTable(space, values)));
}

TEST_CASE("tables must be complete") {
  const auto space = space_of("theta", 2);
  CHECK_THROWS_AS(CocycleTable(space, std::vector<CircleValue>(3)), IncompleteTable);
  CHECK_THROWS_AS(ZeroCochain(space, std::vector<CircleValue>(3)), IncompleteTable);
}

TEST_CASE("coboundary on theta") {
  const auto space = space_of("theta", 2);
  std::vector<CircleValue> c(space->size());
  const auto zero = *space->index_of(wv({0, 0, 0}));
  const auto moved = *space->index_of(wv({2, 2, 0}));
  c[zero] = CircleValue::minus_one();
  const auto dc = coboundary_of(ZeroCochain(space, c));
  const auto l = mask_of(*space, {"e1", "e2"});
  for (std::size_t w = 0; w < space->size(); ++w) {
    CAPTURE(format_weight(space->weight(w)));
    const bool expect_minus = w == zero || w == moved;
    CHECK(dc.evaluate(l, w) == (expect_minus ? CircleValue::minus_one() : CircleValue::one()));
  }
  CHECK(coboundary_of(ZeroCochain::constant(space)) == CocycleTable::trivial(space));

  const auto chain = cobounding_chain(dc);
  CHECK(coboundary_of(chain) == dc);
  CHECK(chain[moved] / chain[zero] == CircleValue::minus_one());
  CHECK(cobounding_chain(CocycleTable::trivial(space)) == ZeroCochain::constant(space));
}

TEST_CASE("coboundaries are trivial on fixed pairs") {
  const auto space = space_of("dumbbell", 4);
  std::mt19937_64 rng(5);
  const auto dc = coboundary_of(random_cochain(space, rng));
  for (CycleMask l = 0; l < space->basis().group_order(); ++l) {
    for (std::size_t w = 0; w < space->size(); ++w) {
      if (space->fixes(l, w)) CHECK(dc.evaluate(l, w).is_one());
    }
  }
  CHECK(is_coboundary(dc));
  CHECK(cohomology_invariant(dc).is_trivial());
}

TEST_CASE("external cocycle on the dumbbell is not a coboundary") {
  const auto space = space_of("dumbbell", 4);
  const auto ext = construct_external_cocycle(space);
  CHECK_FALSE(is_coboundary(ext));
  CHECK_THROWS_AS(cobounding_chain(ext), NotACoboundary);
  const auto inv = cohomology_invariant(ext);
  const auto w = *space->index_of(wv({2, 2, 2}));
  const auto o = space->orbit_of(w);
  const auto& orbit = space->orbits()[o];
  for (std::size_t s = 0; s < inv.characters[o].size(); ++s) {
    const auto l = orbit.stabilizer_element(s);
    const bool has_a = (l & mask_of(*space, {"a"})) != 0;
    const bool has_b = (l & mask_of(*space, {"b"})) != 0;
    CHECK(inv.characters[o][s] == CircleValue::sign(has_a + has_b));
  }
}

TEST_CASE("non-cocycles are rejected") {
  const auto space = space_of("gamma1", 4, {0});
  std::vector<CircleValue> values(space->size());
  values[0] = CircleValue::minus_one();
  const CocycleTable bad(space, values);
  CHECK_FALSE(is_twisted_cocycle(bad));
  CHECK_THROWS_AS(is_coboundary(bad), NotACocycle);
  CHECK_THROWS_AS(cohomology_invariant(bad), NotACocycle);
}

TEST_CASE("lifting characters on theta") {
  const auto space = space_of("theta", 2);
  std::vector<std::vector<bool>> negated;
  for (const auto& o : space->orbits()) negated.emplace_back(o.stabilizer_dim(), true);
  const auto inv = invariant_from_signs(space, negated);
  const auto t = cocycle_from_characters(inv);
  CHECK(is_twisted_cocycle(t));
  CHECK(cohomology_invariant(t) == inv);
  for (const auto& value : t.values()) CHECK(value.is_sign());
  CHECK(cocycle_from_characters(cohomology_invariant(CocycleTable::trivial(space))) == CocycleTable::trivial(space));
}

TEST_CASE("lifting a single character on the dumbbell") {
  const auto space = space_of("dumbbell", 4);
  const auto w = *space->index_of(wv({2, 2, 2}));
  const auto o = space->orbit_of(w);
  const auto& orbit = space->orbits()[o];
  const auto a = mask_of(*space, {"a"});
  const auto b = mask_of(*space, {"b"});
  std::vector<std::vector<bool>> negated;
  for (const auto& orb : space->orbits()) negated.emplace_back(orb.stabilizer_dim(), false);
  for (std::size_t i = 0; i < orbit.stabilizer_dim(); ++i) negated[o][i] = orbit.stabilizer[i] == a;
  const auto t = cocycle_from_characters(invariant_from_signs(space, negated));
  for (auto m : orbit.members) {
    CHECK(t.evaluate(a, m) == CircleValue::minus_one());
    CHECK(t.evaluate(b, m).is_one());
    CHECK(t.evaluate(a ^ b, m) == CircleValue::minus_one());
  }
}

TEST_CASE("non-homomorphic characters are rejected") {
  const auto space = space_of("dumbbell", 4);
  auto inv = cohomology_invariant(CocycleTable::trivial(space));
  const auto o = space->orbit_of(*space->index_of(wv({2, 2, 2})));
  inv.characters[o][3] = CircleValue::minus_one();
  CHECK_THROWS_AS(cocycle_from_characters(inv), NotAHomomorphism);
}

TEST_CASE("cohomology group orders") {
  CHECK(cohomology_group_order(*space_of("theta", 2)).decimal() == "8");
  CHECK(cohomology_group_order(*space_of("tree3", 2)).decimal() == "1");
  CHECK(cohomology_group_order(*space_of("dumbbell", 3)).decimal() == "1");
  CHECK(TwoGroupOrder{70}.decimal() == "1180591620717411303424");
}

TEST_CASE("brute-force class counts") {
  const auto theta = test::load("theta");
  CHECK(brute_force_class_count(theta.graph, Level(2), {}).decimal() == "8");
  CHECK(brute_force_class_count(test::load("tree3").graph, Level(3), {1, 1, 2}).decimal() == "1");
  CHECK(brute_force_class_count(test::load("gamma1").graph, Level(4), {2}).decimal() == "2");
  CHECK_THROWS_AS(brute_force_class_count(theta.graph, Level(2), {}, 10), CapExceeded);
}

TEST_CASE("literal enumeration of sign tables agrees with the structure count") {
  for (const auto& [name, k, boundary] : std::vector<std::tuple<std::string, int, std::vector<int>>>{
           {"theta", 2, {}}, {"gamma1", 4, {2}}, {"gamma2", 2, {1, 1}}, {"gamma2", 4, {2, 0}},
           {"dumbbell", 2, {}}, {"gamma3", 2, {0, 0, 0}}}) {
    CAPTURE(name);
    CAPTURE(k);
    const auto space = space_of(name, k, boundary);
    CHECK(std::to_string(literal_class_count(space)) == cohomology_group_order(*space).decimal());
  }
}

TEST_CASE("cocycle serialization round trip") {
  const auto space = space_of("dumbbell", 4);
  std::mt19937_64 rng(9);
  const auto t = construct_external_cocycle(space) * coboundary_of(random_cochain(space, rng));
  std::stringstream text;
  write_cocycle(text, t);
  CHECK(read_cocycle(text, space) == t);

  std::stringstream partial("cocycle a 0 1/2\n");
  CHECK_THROWS_AS(read_cocycle(partial, space), IncompleteTable);
  std::stringstream malformed("cocycle a zero 1/2\n");
  CHECK_THROWS_AS(read_cocycle(malformed, space), InputError);
}
