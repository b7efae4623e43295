// Acceptance suite: one PASS/FAIL line per criterion. A criterion fails on a
// wrong result or when it exceeds its time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qcg/errors.hpp"
#include "qcg/external_edge.hpp"
#include "qcg/factorization.hpp"
#include "qcg/representation.hpp"
#include "qcg/sampling.hpp"
#include "support.hpp"

using namespace qcg;

namespace {

struct Instance {
  std::string name;
  WeightSpacePtr space;
};

std::string label(const Instance& inst) {
  std::string b;
  for (auto x : inst.space->boundary()) b += (b.empty() ? "" : ",") + std::to_string(x);
  return inst.name + " k=" + std::to_string(inst.space->level().k()) + " j'=(" + b + ")";
}

/// Every suite graph at levels 1..6 with every boundary assignment that
/// leaves a nonempty weight space.
std::vector<Instance> suite(int max_k = 6, const std::vector<std::string>& names = test::suite_graphs()) {
  std::vector<Instance> out;
  for (const auto& name : names) {
    const auto graph = test::load(name).graph;
    for (int k = 1; k <= max_k; ++k) {
      for (const auto& b : test::all_boundaries(graph.boundary().size(), k)) {
        auto space = WeightSpace::create(graph, Level(k), b);
        if (space->size() > 0) out.push_back({name, std::move(space)});
      }
    }
  }
  return out;
}

/// One instance per graph and level: the boundary from the data file,
/// clipped to the level.
std::vector<Instance> primary_suite(int max_k = 6, const std::vector<std::string>& names = test::suite_graphs()) {
  std::vector<Instance> out;
  for (const auto& name : names) {
    const auto file = test::load(name);
    for (int k = 1; k <= max_k; ++k) {
      auto b = file.boundary_weights;
      for (auto& x : b) x = std::min(x, k);
      auto space = WeightSpace::create(file.graph, Level(k), b);
      if (space->size() > 0) out.push_back({name, std::move(space)});
    }
  }
  return out;
}

std::size_t non_leg_edges(const Graph& g) {
  std::size_t n = 0;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) n += g.is_leg(e) ? 0 : 1;
  return n;
}

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string failure;

  void fail(const std::string& why) {
    if (ok) failure = why;
    ok = false;
  }
};

bool run_criterion(int number, const std::string& title, double limit_seconds,
                   const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.fail(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= limit_seconds) outcome.fail("time budget exceeded");
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", seconds, limit_seconds);
  std::cout << (outcome.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " ("
            << outcome.detail << "; " << timing << ")";
  if (!outcome.ok) std::cout << " -- " << outcome.failure;
  std::cout << std::endl;
  return outcome.ok;
}

/// Sign-valued cocycles of a genus-one space: one free sign per orbit.
std::vector<CocycleTable> sign_cocycles_genus_one(const WeightSpacePtr& space, std::mt19937_64& rng) {
  const auto orbits = space->orbits().size();
  const std::uint64_t limit = 1U << 16;
  std::vector<std::uint64_t> choices;
  if (orbits < 16) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << orbits); ++s) choices.push_back(s);
  } else {
    for (std::uint64_t i = 0; i < limit; ++i) choices.push_back(rng());
  }
  std::vector<CocycleTable> out;
  for (auto s : choices) {
    std::vector<CircleValue> values(space->size());
    for (std::size_t w = 0; w < space->size(); ++w) {
      const auto o = space->orbit_of(w) % 64;
      values[w] = CircleValue::sign((s >> o) & 1U);
    }
    out.emplace_back(space, std::move(values));
  }
  return out;
}

/// Sign character tuple with bits of `code` over all stabilizer basis vectors.
CohomologyInvariant invariant_from_code(const WeightSpacePtr& space, std::uint64_t code) {
  std::vector<std::vector<bool>> negated;
  std::size_t bit = 0;
  for (const auto& o : space->orbits()) {
    negated.emplace_back();
    for (std::size_t i = 0; i < o.stabilizer_dim(); ++i) negated.back().push_back((code >> bit++) & 1U);
  }
  return invariant_from_signs(space, negated);
}

ZeroCochain random_sign_cochain(const WeightSpacePtr& space, std::mt19937_64& rng) {
  std::vector<CircleValue> values(space->size());
  for (auto& v : values) v = CircleValue::sign(rng() & 1U);
  return {space, values};
}

}  // namespace

int main() {
  std::cout << "acceptance suite" << std::endl;
  const auto instances = suite();
  const auto primary = primary_suite();
  bool all = true;

  all &= run_criterion(1, "flip action preserves admissibility", 5, [&] {
    Outcome out;
    std::size_t checks = 0;
    for (const auto& inst : instances) {
      const auto& s = *inst.space;
      for (std::size_t w = 0; w < s.size(); ++w) {
        for (CycleMask l = 0; l < s.basis().group_order(); ++l) {
          ++checks;
          if (!check_admissible(s.graph(), s.level(), act(s.basis().element(l), s.weight(w), s.level()),
                                s.boundary())) {
            out.fail(label(inst) + " weight " + format_weight(s.weight(w)));
          }
        }
      }
    }
    out.detail = std::to_string(instances.size()) + " instances, " + std::to_string(checks) + " pairs";
    return out;
  });

  all &= run_criterion(2, "brute-force class count equals the stabilizer product", 60, [&] {
    Outcome out;
    std::size_t compared = 0;
    for (const auto& inst : instances) {
      const auto& s = *inst.space;
      if ((s.basis().group_order() * s.size()) > 1'000'000) continue;
      ++compared;
      const auto brute = brute_force_class_count(s.graph(), s.level(), s.boundary());
      if (!(brute == cohomology_group_order(s))) out.fail(label(inst) + " brute " + brute.decimal());
    }
    const auto theta = test::space_of("theta", 2);
    const auto value = brute_force_class_count(theta->graph(), theta->level(), {}).decimal();
    if (value != "8") out.fail("theta k=2 gives " + value);
    out.detail = std::to_string(compared) + " instances, theta k=2 -> " + value;
    return out;
  });

  all &= run_criterion(3, "coboundary criterion", 30, [&] {
    Outcome out;
    std::mt19937_64 rng(3);
    std::size_t cochains = 0, nontrivial = 0;
    for (const auto& inst : primary) {
      const auto& space = inst.space;
      for (int i = 0; i < 1000; ++i) {
        const auto dc = coboundary_of(random_cochain(space, rng));
        ++cochains;
        if (!is_coboundary(dc) || coboundary_of(cobounding_chain(dc)) != dc) out.fail(label(inst) + " coboundary");
      }
      if (cohomology_group_order(*space).log2 == 0) continue;
      for (int i = 0; i < 1000;) {
        const auto inv = random_invariant(space, rng);
        if (inv.is_trivial()) continue;
        ++i;
        ++nontrivial;
        if (is_coboundary(cocycle_from_characters(inv))) out.fail(label(inst) + " nontrivial class");
      }
    }
    out.detail = std::to_string(cochains) + " coboundaries, " + std::to_string(nontrivial) + " nontrivial cocycles";
    return out;
  });

  all &= run_criterion(4, "external edge cocycles exist", 10, [&] {
    Outcome out;
    std::size_t orbits = 0;
    for (const auto& inst : instances) {
      for (std::size_t o = 0; o < inst.space->orbits().size(); ++o) {
        ++orbits;
        const auto report = check_parity_identity(*inst.space, o);
        if (!report.ok) out.fail(label(inst) + " " + report.counterexample);
      }
      const auto ext = construct_external_cocycle(inst.space);
      if (!is_twisted_cocycle(ext) || !satisfies_external_condition(ext)) out.fail(label(inst) + " construction");
    }
    out.detail = std::to_string(orbits) + " orbits";
    return out;
  });

  all &= run_criterion(5, "odd levels are trivial", 5, [&] {
    Outcome out;
    std::size_t count = 0;
    for (const auto& inst : instances) {
      if (inst.space->level().k() % 2 == 0) continue;
      ++count;
      for (const auto& o : inst.space->orbits()) {
        if (o.stabilizer_dim() != 0) out.fail(label(inst) + " stabilizer");
      }
      if (cohomology_group_order(*inst.space).log2 != 0) out.fail(label(inst) + " order");
      if (!cohomology_invariant(construct_external_cocycle(inst.space)).is_trivial()) out.fail(label(inst) + " class");
    }
    out.detail = std::to_string(count) + " odd-level instances";
    return out;
  });

  all &= run_criterion(6, "intertwiner law", 30, [&] {
    Outcome out;
    std::mt19937_64 rng(6);
    std::size_t pairs = 0;
    for (const auto& inst : primary) {
      const auto& space = inst.space;
      for (int i = 0; i < 200; ++i) {
        const auto t1 = cocycle_from_characters(random_invariant(space, rng)) * coboundary_of(random_cochain(space, rng));
        const auto t2 = t1 * coboundary_of(random_cochain(space, rng));
        ++pairs;
        if (!verify_intertwiner(t1, t2, cobounding_chain(t2 * t1.inverse()))) out.fail(label(inst));
      }
    }
    out.detail = std::to_string(pairs) + " cohomologous pairs";
    return out;
  });

  const auto gamma_instances = suite(6, {"gamma1", "gamma2", "gamma3"});

  all &= run_criterion(7, "Gamma(n) representations are isomorphic iff classes agree", 60, [&] {
    Outcome out;
    std::mt19937_64 rng(7);
    std::size_t comparisons = 0;
    for (const auto& inst : gamma_instances) {
      const auto family = sign_cocycles_genus_one(inst.space, rng);
      std::vector<CocycleTable> references = {CocycleTable::trivial(inst.space),
                                              construct_external_cocycle(inst.space)};
      for (std::size_t i = 0; i < family.size() && i < 4; ++i) references.push_back(family[family.size() - 1 - i]);
      std::vector<CohomologyInvariant> ref_inv;
      for (const auto& r : references) ref_inv.push_back(cohomology_invariant(r));
      for (const auto& t : family) {
        if (!is_twisted_cocycle(t)) out.fail(label(inst) + " family member is not a cocycle");
        const auto inv = cohomology_invariant(t);
        for (std::size_t r = 0; r < references.size(); ++r) {
          ++comparisons;
          if (reps_isomorphic(t, references[r]) != (inv == ref_inv[r])) out.fail(label(inst));
        }
      }
    }
    out.detail = std::to_string(gamma_instances.size()) + " instances, " + std::to_string(comparisons) + " comparisons";
    return out;
  });

  all &= run_criterion(8, "standard Gamma(n) cocycle is the external class", 5, [&] {
    Outcome out;
    for (const auto& inst : gamma_instances) {
      if (!(cohomology_invariant(standard_gamma_n_cocycle(inst.space)) ==
            cohomology_invariant(construct_external_cocycle(inst.space)))) {
        out.fail(label(inst));
      }
    }
    const auto g1 = test::space_of("gamma1", 4, {2});
    const auto value = standard_gamma_n_cocycle(g1).at(0, *g1->index_of(test::wv({2, 2})));
    const auto shown = "Gamma(1) k=4 j'=1 value exp(2 pi i " + value.to_string() + ")";
    if (value != CircleValue::minus_one()) out.fail(shown);
    out.detail = std::to_string(gamma_instances.size()) + " instances, " + shown;
    return out;
  });

  all &= run_criterion(9, "functoriality and characterization", 120, [&] {
    Outcome out;
    std::size_t count = 0, mutated = 0;
    for (const auto& inst : instances) {
      if (inst.space->level().k() > 4 || non_leg_edges(inst.space->graph()) > 3) continue;
      ++count;
      const auto f = verify_functoriality(inst.space);
      if (!f.ok) out.fail(label(inst) + " functoriality: " + f.witness);
      const auto c = verify_characterization(inst.space, 4096, 4);
      if (!c.ok) out.fail(label(inst) + " characterization: " + c.witness);
      const auto& orbits = inst.space->orbits();
      for (std::size_t o = 0; o < orbits.size(); ++o) {
        if (orbits[o].stabilizer_dim() == 0) continue;
        const auto bad = construct_external_cocycle(inst.space) *
                         cocycle_from_characters(elementary_invariant(inst.space, o, 0));
        const auto report = check_gamma_n_restrictions(bad);
        ++mutated;
        if (report.ok || report.witness.empty()) out.fail(label(inst) + " mutated cocycle accepted");
        break;
      }
    }
    out.detail = std::to_string(count) + " instances, " + std::to_string(mutated) + " mutated cocycles rejected";
    return out;
  });

  all &= run_criterion(10, "equivalence under factorization equals cohomology", 120, [&] {
    Outcome out;
    std::mt19937_64 rng(10);
    std::size_t pairs = 0;
    for (const auto& inst : suite(4, {"theta", "dumbbell"})) {
      const auto& space = inst.space;
      const auto log2 = cohomology_group_order(*space).log2;
      const auto ext = construct_external_cocycle(space);
      const auto ext_inv = cohomology_invariant(ext);
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << log2); ++code) {
        const auto t = cocycle_from_characters(invariant_from_code(space, code)) *
                       coboundary_of(random_sign_cochain(space, rng));
        const auto twin = t * coboundary_of(random_sign_cochain(space, rng));
        const auto t_inv = cohomology_invariant(t);
        pairs += 2;
        if (!equivalent_under_factorization(t, twin).ok) out.fail(label(inst) + " cohomologous pair separated");
        if (equivalent_under_factorization(t, ext).ok != (t_inv == ext_inv)) {
          out.fail(label(inst) + " class code " + std::to_string(code));
        }
      }
    }
    out.detail = std::to_string(pairs) + " pairs";
    return out;
  });

  all &= run_criterion(11, "weight counts match the trigonometric dimension formula", 5, [&] {
    Outcome out;
    std::ostringstream detail;
    for (const auto& name : {"theta", "dumbbell", "theta_handle"}) {
      const auto graph = test::load(name).graph;
      for (int k = 1; k <= 6; ++k) {
        const auto count = enumerate_admissible(graph, Level(k), {}).size();
        const auto expected = oracle::verlinde_dimension(static_cast<int>(graph.genus()), k);
        if (static_cast<long long>(count) != expected) {
          out.fail(std::string(name) + " k=" + std::to_string(k) + ": " + std::to_string(count) + " vs " +
                   std::to_string(expected));
        }
      }
    }
    const auto theta = enumerate_admissible(test::load("theta").graph, Level(2), {}).size();
    if (theta != 10) out.fail("theta k=2 gives " + std::to_string(theta));
    out.detail = "theta, dumbbell, theta_handle at k=1..6; theta k=2 -> " + std::to_string(theta);
    return out;
  });

  std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
  return all ? 0 : 1;
}
