#include "qcg/cut.hpp"

#include "qcg/errors.hpp"

namespace qcg {

CutGraph cut_edges(const Graph& graph, const std::set<EdgeIndex>& cut) {
  for (auto e : cut) {
    if (e >= graph.edge_count()) throw InputError("cut edge index out of range");
    if (graph.is_leg(e)) throw CutLeafEdge("edge '" + graph.edge(e).id + "' touches a univalent vertex");
  }
  RawGraph raw;
  CutGraph out;
  std::vector<std::optional<std::size_t>> pair_of(graph.edge_count());
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    const auto& edge = graph.edge(e);
    const auto& a = graph.vertex_id(edge.a);
    const auto& b = graph.vertex_id(edge.b);
    if (!cut.contains(e)) {
      raw.edges.push_back({edge.id, a, b});
      out.origin.push_back(e);
      out.half_of.emplace_back();
      continue;
    }
    for (const char* side : {"|a", "|b"}) {
      if (graph.find_vertex(edge.id + side)) {
        throw InputError("vertex id '" + edge.id + side + "' collides with a generated cut vertex");
      }
    }
    const auto pair = out.pairs.size();
    CutPair p;
    p.original = e;
    p.half_a = raw.edges.size();
    raw.edges.push_back({edge.id + "|a", a, edge.id + "|a"});
    p.half_b = raw.edges.size();
    raw.edges.push_back({edge.id + "|b", b, edge.id + "|b"});
    out.origin.insert(out.origin.end(), {e, e});
    out.half_of.insert(out.half_of.end(), {pair, pair});
    out.pairs.push_back(p);
  }
  for (auto w : graph.boundary()) raw.boundary.push_back(graph.vertex_id(w));
  for (const auto& p : out.pairs) {
    raw.boundary.push_back(raw.edges[p.half_a].b);
    raw.boundary.push_back(raw.edges[p.half_b].b);
  }
  out.graph = Graph::validate(raw);
  return out;
}

Graph glue(const CutGraph& cut) {
  const auto& g = cut.graph;
  RawGraph raw;
  std::vector<bool> is_half_vertex(g.vertex_count(), false);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (cut.half_of[e]) {
      const auto& p = cut.pairs[*cut.half_of[e]];
      if (e == p.half_b) continue;
      const auto& ha = g.edge(p.half_a);
      const auto& hb = g.edge(p.half_b);
      // Each half runs from its attachment vertex to its fresh leg vertex.
      is_half_vertex[ha.b] = is_half_vertex[hb.b] = true;
      auto id = ha.id.substr(0, ha.id.size() - 2);
      raw.edges.push_back({id, g.vertex_id(ha.a), g.vertex_id(hb.a)});
    } else {
      const auto& edge = g.edge(e);
      raw.edges.push_back({edge.id, g.vertex_id(edge.a), g.vertex_id(edge.b)});
    }
  }
  for (auto w : g.boundary()) {
    if (!is_half_vertex[w]) raw.boundary.push_back(g.vertex_id(w));
  }
  return Graph::validate(raw);
}

std::set<EdgeIndex> isolating_cut(const Graph& graph, const Cycle& cycle) {
  std::set<EdgeIndex> cut;
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    const auto cls = classify_edge(graph, cycle, e);
    if ((cls == EdgeClass::external || cls == EdgeClass::internal) && !graph.is_leg(e)) cut.insert(e);
  }
  return cut;
}

std::optional<GammaN> recognize_gamma_n(const Graph& graph) {
  if (graph.components().size() != 1 || graph.genus() != 1) return std::nullopt;
  const HomologyBasis basis(graph);
  const auto& generator = basis.cycle(0);
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    if (!generator.contains(e) && !graph.is_leg(e)) return std::nullopt;
  }
  return GammaN{graph.boundary().size(), generator};
}

}  // namespace qcg
