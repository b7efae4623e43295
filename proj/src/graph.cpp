#include "qcg/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "qcg/errors.hpp"

namespace qcg {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Graph Graph::validate(const RawGraph& raw) {
  Graph g;
  auto intern = [&g](const std::string& id) {
    auto [it, fresh] = g.vertex_lookup_.try_emplace(id, g.vertex_ids_.size());
    if (fresh) {
      g.vertex_ids_.push_back(id);
      g.incidence_.emplace_back();
    }
    return it->second;
  };

  for (const auto& re : raw.edges) {
    if (!g.edge_lookup_.try_emplace(re.id, g.edges_.size()).second) {
      throw InputError("duplicate edge id '" + re.id + "'");
    }
    const EdgeIndex e = g.edges_.size();
    Edge edge{re.id, intern(re.a), intern(re.b)};
    g.incidence_[edge.a].push_back(e);
    g.incidence_[edge.b].push_back(e);
    g.edges_.push_back(std::move(edge));
  }

  for (VertexIndex v = 0; v < g.vertex_ids_.size(); ++v) {
    const auto d = g.degree(v);
    if (d != 1 && d != 3) {
      throw DegreeError("vertex '" + g.vertex_ids_[v] + "' has degree " + std::to_string(d));
    }
  }

  std::vector<bool> declared(g.vertex_ids_.size(), false);
  for (const auto& id : raw.boundary) {
    auto it = g.vertex_lookup_.find(id);
    if (it == g.vertex_lookup_.end()) {
      throw BoundaryMismatch("boundary vertex '" + id + "' is not incident to any edge");
    }
    if (declared[it->second]) throw InputError("boundary vertex '" + id + "' declared twice");
    if (g.degree(it->second) != 1) {
      throw BoundaryMismatch("boundary vertex '" + id + "' has degree " +
                             std::to_string(g.degree(it->second)));
    }
    declared[it->second] = true;
    g.boundary_.push_back(it->second);
  }
  for (VertexIndex v = 0; v < g.vertex_ids_.size(); ++v) {
    if (g.degree(v) == 1 && !declared[v]) {
      throw BoundaryMismatch("univalent vertex '" + g.vertex_ids_[v] + "' is not declared as boundary");
    }
  }

  DisjointSets sets(g.vertex_ids_.size());
  for (const auto& e : g.edges_) sets.unite(e.a, e.b);
  std::vector<std::size_t> root_to_component(g.vertex_ids_.size(), SIZE_MAX);
  g.edge_component_.resize(g.edges_.size());
  for (EdgeIndex e = 0; e < g.edges_.size(); ++e) {
    const auto root = sets.find(g.edges_[e].a);
    if (root_to_component[root] == SIZE_MAX) {
      root_to_component[root] = g.components_.size();
      g.components_.emplace_back();
    }
    g.edge_component_[e] = root_to_component[root];
    g.components_[root_to_component[root]].push_back(e);
  }
  g.genus_ = g.edges_.size() + g.components_.size() - g.vertex_ids_.size();

  for (const auto& comp : g.components_) {
    std::vector<VertexIndex> verts;
    for (auto e : comp) {
      verts.push_back(g.edges_[e].a);
      verts.push_back(g.edges_[e].b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const auto n = static_cast<long>(std::count_if(verts.begin(), verts.end(),
                                                   [&](VertexIndex v) { return g.degree(v) == 1; }));
    const auto trivalent = static_cast<long>(verts.size()) - n;
    const auto edges = static_cast<long>(comp.size());
    const long betti = edges - static_cast<long>(verts.size()) + 1;
    if (trivalent == 0) {
      g.warnings_.push_back("degenerate component: edge '" + g.edges_[comp.front()].id +
                            "' joins two univalent vertices");
    } else if ((n >= 1 || betti >= 2) &&
               (edges != 3 * betti - 3 + 2 * n || trivalent != 2 * betti - 2 + n)) {
      g.warnings_.push_back("component of edge '" + g.edges_[comp.front()].id +
                            "' violates the unitrivalent edge/vertex count identity");
    }
  }
  return g;
}

std::optional<EdgeIndex> Graph::find_edge(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexIndex> Graph::find_vertex(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Graph::boundary_position(VertexIndex v) const {
  auto it = std::find(boundary_.begin(), boundary_.end(), v);
  if (it == boundary_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - boundary_.begin());
}

bool Graph::is_leg(EdgeIndex e) const {
  return is_univalent(edges_[e].a) || is_univalent(edges_[e].b);
}

Graph Graph::subgraph(const std::vector<EdgeIndex>& edges) const {
  std::vector<EdgeIndex> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  RawGraph raw;
  std::vector<bool> used(vertex_ids_.size(), false);
  for (auto e : sorted) {
    const auto& edge = edges_[e];
    raw.edges.push_back({edge.id, vertex_ids_[edge.a], vertex_ids_[edge.b]});
    used[edge.a] = used[edge.b] = true;
  }
  for (auto w : boundary_) {
    if (used[w]) raw.boundary.push_back(vertex_ids_[w]);
  }
  return validate(raw);
}

RawGraph Graph::to_raw() const {
  RawGraph raw;
  for (const auto& e : edges_) raw.edges.push_back({e.id, vertex_ids_[e.a], vertex_ids_[e.b]});
  for (auto w : boundary_) raw.boundary.push_back(vertex_ids_[w]);
  return raw;
}

GraphFile parse_graph(std::istream& in) {
  RawGraph raw;
  std::vector<int> weights;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    auto fail = [&](const std::string& what) {
      throw InputError("line " + std::to_string(line_no) + ": " + what);
    };
    if (keyword == "edge") {
      RawEdge e;
      if (!(fields >> e.id >> e.a >> e.b)) fail("expected 'edge <id> <vertex> <vertex>'");
      raw.edges.push_back(std::move(e));
    } else if (keyword == "boundary") {
      std::string vertex;
      int weight = 0;
      if (!(fields >> vertex >> weight)) fail("expected 'boundary <vertex> <doubled-weight>'");
      raw.boundary.push_back(std::move(vertex));
      weights.push_back(weight);
    } else {
      fail("unknown keyword '" + keyword + "'");
    }
    std::string extra;
    if (fields >> extra) fail("trailing token '" + extra + "'");
  }
  return {Graph::validate(raw), std::move(weights)};
}

GraphFile parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

GraphFile load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& graph, const std::vector<int>& boundary_weights) {
  for (const auto& e : graph.edges()) {
    out << "edge " << e.id << ' ' << graph.vertex_id(e.a) << ' ' << graph.vertex_id(e.b) << '\n';
  }
  for (std::size_t i = 0; i < graph.boundary().size(); ++i) {
    out << "boundary " << graph.vertex_id(graph.boundary()[i]) << ' '
        << (i < boundary_weights.size() ? boundary_weights[i] : 0) << '\n';
  }
}

}  // namespace qcg
