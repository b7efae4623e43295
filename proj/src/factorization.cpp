#include "qcg/factorization.hpp"

#include <algorithm>
#include <random>

#include "qcg/errors.hpp"
#include "qcg/external_edge.hpp"
#include "qcg/representation.hpp"
#include "qcg/sampling.hpp"

namespace qcg {

namespace {

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string weight_text(const WeightVector& w) { return "(" + join_ints(w.doubled) + ")"; }

Part make_part(const CutGraph& cut, const Graph& original, const std::vector<bool>& chosen, bool want) {
  std::vector<EdgeIndex> edges;
  const auto& comps = cut.graph.components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (chosen[c] == want) edges.insert(edges.end(), comps[c].begin(), comps[c].end());
  }
  std::sort(edges.begin(), edges.end());
  Part part;
  part.graph = cut.graph.subgraph(edges);
  part.source = edges;
  const auto original_boundary = original.boundary().size();
  for (auto w : part.graph.boundary()) {
    const auto v = cut.graph.find_vertex(part.graph.vertex_id(w));
    const auto p = *cut.graph.boundary_position(*v);
    if (p < original_boundary) {
      part.slots.push_back({false, p});
    } else {
      part.slots.push_back({true, (p - original_boundary) / 2});
    }
  }
  return part;
}

}  // namespace

Decomposition::Decomposition(const Graph& graph, const std::set<EdgeIndex>& cut,
                             const std::vector<bool>& first_components)
    : original_(graph), cut_set_(cut), cut_(cut_edges(graph, cut)), first_components_(first_components) {
  if (first_components_.size() != cut_.graph.components().size()) {
    throw InputError("bipartition needs one flag per component of the cut graph");
  }
  first_ = make_part(cut_, original_, first_components_, true);
  second_ = make_part(cut_, original_, first_components_, false);
  placement_.assign(original_.edge_count(), {false, 0});
  for (int side = 0; side < 2; ++side) {
    const Part& part = side == 0 ? first_ : second_;
    for (EdgeIndex i = 0; i < part.source.size(); ++i) {
      const auto ce = part.source[i];
      if (!cut_.half_of[ce]) placement_[cut_.origin[ce]] = {side == 0, i};
    }
  }
}

Decomposition Decomposition::isolate_cycle(const Graph& graph, const Cycle& cycle) {
  const auto cut = isolating_cut(graph, cycle);
  const auto cg = cut_edges(graph, cut);
  std::vector<bool> chosen(cg.graph.components().size(), false);
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    for (auto ce : cg.graph.components()[c]) {
      if (!cg.half_of[ce] && cycle.contains(cg.origin[ce])) chosen[c] = true;
    }
  }
  return {graph, cut, chosen};
}

std::string Decomposition::describe() const {
  std::string cut = "{";
  for (const auto& p : cut_.pairs) {
    if (cut.size() > 1) cut += ',';
    cut += original_.edge(p.original).id;
  }
  std::string first = "{";
  for (const auto& e : first_.graph.edges()) {
    if (first.size() > 1) first += ',';
    first += e.id;
  }
  return "cut=" + cut + "} first=" + first + "}";
}

std::vector<int> Decomposition::cut_weights(const WeightVector& w) const {
  std::vector<int> out;
  for (const auto& p : cut_.pairs) out.push_back(w[p.original]);
  return out;
}

WeightVector Decomposition::restrict_weight(const Part& part, const WeightVector& w) const {
  WeightVector out;
  for (auto ce : part.source) out.doubled.push_back(w[cut_.origin[ce]]);
  return out;
}

std::vector<int> Decomposition::part_boundary(const Part& part, const std::vector<int>& boundary,
                                              const std::vector<int>& cut_weights) const {
  std::vector<int> out;
  for (const auto& slot : part.slots) out.push_back(slot.from_cut ? cut_weights.at(slot.index) : boundary.at(slot.index));
  return out;
}

WeightVector Decomposition::glue_weight(const std::vector<int>& cut_weights, const WeightVector& first,
                                        const WeightVector& second) const {
  WeightVector out{std::vector<int>(original_.edge_count(), 0)};
  for (std::size_t p = 0; p < cut_.pairs.size(); ++p) out.doubled[cut_.pairs[p].original] = cut_weights.at(p);
  for (EdgeIndex e = 0; e < original_.edge_count(); ++e) {
    if (cut_set_.contains(e)) continue;
    const auto [in_first, i] = placement_[e];
    out.doubled[e] = in_first ? first[i] : second[i];
  }
  return out;
}

Cycle Decomposition::transport(const Cycle& first_cycle) const {
  f2::Bits support(original_.edge_count());
  for (auto i : first_cycle.edges()) {
    const auto ce = first_.source[i];
    if (cut_.half_of[ce]) throw NotACycle("cycle runs through a cut leg");
    support.set(cut_.origin[ce]);
  }
  return {original_, std::move(support)};
}

std::map<std::vector<int>, WeightSplit> decompose_weights(const WeightSpace& space, const Decomposition& dec) {
  const int k = space.level().k();
  const auto cuts = dec.cut_graph().pairs.size();
  std::map<std::vector<int>, WeightSplit> out;
  std::vector<int> cutw(cuts, 0);
  while (true) {
    auto a = enumerate_admissible(dec.first().graph, space.level(),
                                  dec.part_boundary(dec.first(), space.boundary(), cutw));
    if (!a.empty()) {
      auto b = enumerate_admissible(dec.second().graph, space.level(),
                                    dec.part_boundary(dec.second(), space.boundary(), cutw));
      if (!b.empty()) out.emplace(cutw, WeightSplit{std::move(a), std::move(b)});
    }
    std::size_t i = 0;
    while (i < cuts && cutw[i] == k) cutw[i++] = 0;
    if (i == cuts) break;
    ++cutw[i];
  }
  return out;
}

std::vector<GluingPoint> gluing_points(const WeightSpace& space, const Decomposition& dec) {
  std::set<GluingPoint> points;
  for (const auto& w : space.weights()) points.insert({dec.cut_weights(w), dec.restrict_weight(dec.second(), w)});
  return {points.begin(), points.end()};
}

WeightSpacePtr first_space(const WeightSpace& space, const Decomposition& dec, const std::vector<int>& cut_weights) {
  return WeightSpace::create(dec.first().graph, space.level(),
                             dec.part_boundary(dec.first(), space.boundary(), cut_weights));
}

CocycleTable restrict_cocycle(const CocycleTable& t, const Decomposition& dec, const GluingPoint& point) {
  return restrict_cocycle(t, dec, point, first_space(t.space(), dec, point.cut_weights));
}

CocycleTable restrict_cocycle(const CocycleTable& t, const Decomposition& dec, const GluingPoint& point,
                              WeightSpacePtr first) {
  const auto& space = t.space();
  if (point.cut_weights.size() != dec.cut_graph().pairs.size()) {
    throw WeightMismatch("expected one cut weight per cut edge");
  }
  const auto second_boundary = dec.part_boundary(dec.second(), space.boundary(), point.cut_weights);
  if (point.second.size() != dec.second().graph.edge_count() ||
      !check_admissible(dec.second().graph, space.level(), point.second, second_boundary)) {
    throw WeightMismatch("second-part weight is not admissible for the given cut weights");
  }
  if (first->boundary() != dec.part_boundary(dec.first(), space.boundary(), point.cut_weights)) {
    throw WeightMismatch("first-part weight space was built for other cut weights");
  }
  const auto g1 = first->genus();
  std::vector<CycleMask> masks;
  for (std::size_t b = 0; b < g1; ++b) {
    masks.push_back(space.basis().coordinates(dec.transport(first->basis().cycle(b))));
  }
  std::vector<CircleValue> values(g1 * first->size());
  for (std::size_t w = 0; w < first->size(); ++w) {
    const auto glued = space.index_of(dec.glue_weight(point.cut_weights, first->weight(w), point.second));
    if (!glued) throw WeightMismatch("glued weight is not admissible");
    for (std::size_t b = 0; b < g1; ++b) values[b * first->size() + w] = t.evaluate(masks[b], *glued);
  }
  return {std::move(first), std::move(values)};
}

void for_each_decomposition(const Graph& graph, std::size_t cap,
                            const std::function<void(const Decomposition&)>& visit) {
  std::vector<EdgeIndex> cuttable;
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    if (!graph.is_leg(e)) cuttable.push_back(e);
  }
  if (cuttable.size() >= 63 || (std::uint64_t{1} << cuttable.size()) > cap) {
    throw CapExceeded(std::to_string(cuttable.size()) + " internal edges exceed the decomposition cap of " +
                      std::to_string(cap) + " cut subsets");
  }
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << cuttable.size()); ++subset) {
    std::set<EdgeIndex> cut;
    for (std::size_t i = 0; i < cuttable.size(); ++i) {
      if ((subset >> i) & 1U) cut.insert(cuttable[i]);
    }
    const auto components = cut_edges(graph, cut).graph.components().size();
    for (std::uint64_t group = 0; group < (std::uint64_t{1} << components); ++group) {
      std::vector<bool> chosen(components);
      for (std::size_t c = 0; c < components; ++c) chosen[c] = (group >> c) & 1U;
      visit(Decomposition(graph, cut, chosen));
    }
  }
}

namespace {

std::string point_text(const GluingPoint& p) {
  return "j''=(" + join_ints(p.cut_weights) + ") second=" + weight_text(p.second);
}

/// Caches first-part weight spaces by cut weights within one decomposition.
class FirstSpaces {
 public:
  FirstSpaces(const WeightSpace& space, const Decomposition& dec) : space_(space), dec_(dec) {}
  const WeightSpacePtr& get(const std::vector<int>& cut_weights) {
    auto it = cache_.find(cut_weights);
    if (it == cache_.end()) it = cache_.emplace(cut_weights, first_space(space_, dec_, cut_weights)).first;
    return it->second;
  }

 private:
  const WeightSpace& space_;
  const Decomposition& dec_;
  std::map<std::vector<int>, WeightSpacePtr> cache_;
};

void record(VerificationReport& report, bool ok, const std::string& line, const std::string& witness) {
  report.lines.push_back((ok ? "PASS " : "FAIL ") + line);
  if (!ok && report.ok) {
    report.ok = false;
    report.witness = witness;
  }
}

}  // namespace

VerificationReport equivalent_under_factorization(const CocycleTable& t1, const CocycleTable& t2, std::size_t cap) {
  const auto& space = t1.space();
  if (t1.space_ptr() != t2.space_ptr() &&
      (space.weights() != t2.space().weights() || space.basis().cycles() != t2.space().basis().cycles())) {
    throw InputError("cocycles live on different weight spaces");
  }
  VerificationReport report;
  for_each_decomposition(space.graph(), cap, [&](const Decomposition& dec) {
    ++report.decompositions;
    FirstSpaces spaces(space, dec);
    std::string witness;
    const auto points = gluing_points(space, dec);
    for (const auto& point : points) {
      const auto& first = spaces.get(point.cut_weights);
      const auto r1 = restrict_cocycle(t1, dec, point, first);
      const auto r2 = restrict_cocycle(t2, dec, point, first);
      const CycleMask order = first->basis().group_order();
      for (CycleMask l = 0; l < order && witness.empty(); ++l) {
        if (character(r1, l) != character(r2, l)) {
          witness = dec.describe() + " " + point_text(point) + " lambda=" +
                    format_cycle(space.graph(), dec.transport(first->basis().element(l))) + " traces " +
                    std::to_string(character(r1, l)) + " vs " + std::to_string(character(r2, l));
        }
      }
      if (!witness.empty()) break;
    }
    record(report, witness.empty(), dec.describe() + " points=" + std::to_string(points.size()), witness);
  });
  return report;
}

VerificationReport verify_functoriality(WeightSpacePtr space, std::size_t cap) {
  const auto ext = construct_external_cocycle(space);
  VerificationReport report;
  for_each_decomposition(space->graph(), cap, [&](const Decomposition& dec) {
    ++report.decompositions;
    FirstSpaces spaces(*space, dec);
    std::map<std::vector<int>, CohomologyInvariant> expected;
    std::string witness;
    const auto points = gluing_points(*space, dec);
    for (const auto& point : points) {
      const auto& first = spaces.get(point.cut_weights);
      auto it = expected.find(point.cut_weights);
      if (it == expected.end()) {
        it = expected.emplace(point.cut_weights, cohomology_invariant(construct_external_cocycle(first))).first;
      }
      if (cohomology_invariant(restrict_cocycle(ext, dec, point, first)) != it->second) {
        witness = dec.describe() + " " + point_text(point);
        break;
      }
    }
    record(report, witness.empty(), dec.describe() + " points=" + std::to_string(points.size()), witness);
  });
  return report;
}

VerificationReport check_gamma_n_restrictions(const CocycleTable& t, std::size_t cap) {
  const auto& space = t.space();
  const auto& graph = space.graph();
  const CycleMask order = space.basis().group_order();
  if (order - 1 > cap) throw CapExceeded("too many cycles for the characterization check");
  VerificationReport report;
  std::set<std::pair<std::set<EdgeIndex>, std::vector<bool>>> seen;
  for (CycleMask l = 1; l < order; ++l) {
    const auto cycle = space.basis().element(l);
    const auto isolated = Decomposition::isolate_cycle(graph, cycle);
    const auto& chosen = isolated.first_components();
    for (std::size_t c = 0; c < chosen.size(); ++c) {
      if (!chosen[c]) continue;
      std::vector<bool> single(chosen.size(), false);
      single[c] = true;
      if (!seen.emplace(isolated.cut(), single).second) continue;
      const Decomposition dec(graph, isolated.cut(), single);
      ++report.decompositions;
      if (!recognize_gamma_n(dec.first().graph)) throw Error("isolated piece is not a Gamma(n) graph");
      FirstSpaces spaces(space, dec);
      std::string witness;
      for (const auto& point : gluing_points(space, dec)) {
        const auto& piece = spaces.get(point.cut_weights);
        const auto restricted = restrict_cocycle(t, dec, point, piece);
        const auto standard = standard_gamma_n_cocycle(piece);
        if (cohomology_invariant(restricted) == cohomology_invariant(standard)) continue;
        for (std::size_t w = 0; w < piece->size(); ++w) {
          if (piece->fixes(1, w) && restricted.evaluate(1, w) != standard.evaluate(1, w)) {
            const auto glued = dec.glue_weight(point.cut_weights, piece->weight(w), point.second);
            witness = "lambda=" + format_cycle(graph, dec.transport(piece->basis().cycle(0))) + " j=" +
                      weight_text(glued) + " value " + restricted.evaluate(1, w).to_string() + " expected " +
                      standard.evaluate(1, w).to_string();
            break;
          }
        }
        break;
      }
      record(report, witness.empty(), "lambda=" + format_cycle(graph, cycle) + " " + dec.describe(), witness);
    }
  }
  return report;
}

VerificationReport verify_characterization(WeightSpacePtr space, std::size_t cap, std::size_t family_size,
                                           std::uint64_t seed) {
  const auto ext = construct_external_cocycle(space);
  const auto ext_class = cohomology_invariant(ext);
  auto report = check_gamma_n_restrictions(ext, cap);
  std::mt19937_64 rng(seed);

  auto probe = [&](const std::string& label, const CocycleTable& member) {
    const auto restrictions = check_gamma_n_restrictions(member, cap);
    const bool cohomologous = cohomology_invariant(member) == ext_class;
    const bool ok = restrictions.ok == cohomologous;
    record(report, ok,
           label + ": restrictions " + (restrictions.ok ? "match" : "differ") + ", class " +
               (cohomologous ? "equal" : "different"),
           label + ": " + (restrictions.ok ? std::string("restrictions match but class differs")
                                           : "class equal but restriction fails at " + restrictions.witness));
  };

  for (std::size_t i = 0; i < family_size; ++i) {
    probe("coboundary-twist " + std::to_string(i), ext * coboundary_of(random_cochain(space, rng)));
  }
  for (std::size_t o = 0; o < space->orbits().size(); ++o) {
    for (std::size_t i = 0; i < space->orbits()[o].stabilizer_dim(); ++i) {
      probe("sign-flip orbit " + std::to_string(o) + " generator " + std::to_string(i),
            ext * cocycle_from_characters(elementary_invariant(space, o, i)));
    }
  }
  for (std::size_t i = 0; i < family_size; ++i) {
    probe("random-class " + std::to_string(i), ext * cocycle_from_characters(random_invariant(space, rng)) *
                                                   coboundary_of(random_cochain(space, rng)));
  }
  return report;
}

}  // namespace qcg
