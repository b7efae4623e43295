#include "qcg/external_edge.hpp"

#include <numeric>

#include "qcg/cut.hpp"
#include "qcg/errors.hpp"

namespace qcg {

namespace {

/// Sum of doubled weights over the external edges of element; 0 for element 0.
int external_sum(const WeightSpace& space, std::size_t weight, CycleMask element) {
  if (element == 0) return 0;
  const auto& w = space.weight(weight);
  int sum = 0;
  for (auto e : external_edges(space.graph(), space.basis().element(element))) sum += w[e];
  return sum;
}

std::string describe(const WeightSpace& space, std::size_t weight, CycleMask element) {
  return "lambda=" + format_cycle(space.graph(), space.basis().element(element)) + " j=(" +
         format_weight(space.weight(weight)) + ")";
}

}  // namespace

CircleValue external_target(const Graph& graph, Level level, const WeightVector& w, const Cycle& cycle) {
  if (cycle.is_zero()) throw ZeroCycle("external target needs a nonzero cycle");
  if (act(cycle, w, level) != w) throw NotFixed("cycle does not fix the weight");
  int sum = 0;
  for (auto e : external_edges(graph, cycle)) sum += w[e];
  // exp(pi i * sum/2) with sum doubled.
  return {sum, 4};
}

CircleValue external_target(const WeightSpace& space, std::size_t weight, CycleMask element) {
  return external_target(space.graph(), space.level(), space.weight(weight), space.basis().element(element));
}

ParityReport check_parity_identity(const WeightSpace& space, std::size_t orbit_index) {
  const auto& orbit = space.orbits()[orbit_index];
  const auto rep = orbit.representative;
  const std::size_t elements = std::size_t{1} << orbit.stabilizer_dim();
  for (std::size_t s = 0; s < elements; ++s) {
    const auto l1 = orbit.stabilizer_element(s);
    for (std::size_t r = s; r < elements; ++r) {
      const auto l2 = orbit.stabilizer_element(r);
      const int defect = external_sum(space, rep, l1 ^ l2) - external_sum(space, rep, l1) -
                         external_sum(space, rep, l2);
      if (defect % 4 != 0) {
        return {false, "parity identity fails for " + describe(space, rep, l1) + " and lambda'=" +
                           format_cycle(space.graph(), space.basis().element(l2))};
      }
    }
  }
  for (auto m : orbit.members) {
    for (std::size_t s = 1; s < elements; ++s) {
      const auto l = orbit.stabilizer_element(s);
      if (!space.fixes(l, m)) return {false, "stabilizer element does not fix " + describe(space, m, l)};
      if (external_target(space, m, l) != external_target(space, rep, l)) {
        return {false, "external target differs across the orbit at " + describe(space, m, l)};
      }
    }
  }
  return {};
}

CocycleTable construct_external_cocycle(WeightSpacePtr space) {
  CohomologyInvariant inv{space, {}};
  for (std::size_t o = 0; o < space->orbits().size(); ++o) {
    const auto report = check_parity_identity(*space, o);
    if (!report.ok) throw ParityFailure(report.counterexample);
    const auto& orbit = space->orbits()[o];
    std::vector<CircleValue> chars(std::size_t{1} << orbit.stabilizer_dim());
    for (std::size_t s = 1; s < chars.size(); ++s) {
      chars[s] = external_target(*space, orbit.representative, orbit.stabilizer_element(s));
    }
    inv.characters.push_back(std::move(chars));
  }
  return cocycle_from_characters(inv);
}

bool satisfies_external_condition(const CocycleTable& t) {
  if (!is_twisted_cocycle(t)) throw NotACocycle("table violates the twisted cocycle relations");
  const auto& space = t.space();
  const CycleMask order = space.basis().group_order();
  for (std::size_t w = 0; w < space.size(); ++w) {
    for (CycleMask l = 1; l < order; ++l) {
      if (space.fixes(l, w) && t.evaluate(l, w) != external_target(space, w, l)) return false;
    }
  }
  return true;
}

CocycleTable standard_gamma_n_cocycle(WeightSpacePtr space) {
  const auto gamma = recognize_gamma_n(space->graph());
  if (!gamma) throw NotGammaN("graph is not a cycle with legs attached");
  auto table = CocycleTable::trivial(space);
  const int k = space->level().k();
  if (k % 2 != 0) return table;

  const auto& graph = space->graph();
  WeightVector j0{std::vector<int>(graph.edge_count(), k / 2)};
  for (std::size_t p = 0; p < graph.boundary().size(); ++p) {
    j0.doubled[graph.incidence(graph.boundary()[p]).front()] = space->boundary()[p];
  }
  const auto index = space->index_of(j0);
  if (!index) return table;

  const auto& bnd = space->boundary();
  const int total = std::accumulate(bnd.begin(), bnd.end(), 0);
  auto values = table.values();
  values[*index] = CircleValue(total, 4);
  return {space, std::move(values)};
}

}  // namespace qcg
