#ifndef QCG_GRAPH_HPP
#define QCG_GRAPH_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace qcg {

using EdgeIndex = std::size_t;
using VertexIndex = std::size_t;

struct RawEdge {
  std::string id;
  std::string a;
  std::string b;
};

/// Unvalidated graph description, as read from a file or built by hand.
struct RawGraph {
  std::vector<RawEdge> edges;
  std::vector<std::string> boundary;
};

struct Edge {
  std::string id;
  VertexIndex a = 0;
  VertexIndex b = 0;

  bool is_loop() const { return a == b; }
  VertexIndex other(VertexIndex v) const { return v == a ? b : a; }
};

/// Immutable unitrivalent multigraph. Loops and parallel edges are allowed;
/// a loop contributes 2 to the degree of its vertex. Edge indices follow the
/// order in which edges were declared.
class Graph {
 public:
  Graph() = default;

  /// Validates raw and builds the graph. Throws InputError on duplicate ids,
  /// DegreeError on a vertex of degree 2 or at least 4, BoundaryMismatch when
  /// the declared boundary is not exactly the set of degree-1 vertices.
  static Graph validate(const RawGraph& raw);

  std::size_t edge_count() const { return edges_.size(); }
  std::size_t vertex_count() const { return vertex_ids_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  const std::string& vertex_id(VertexIndex v) const { return vertex_ids_[v]; }

  std::optional<EdgeIndex> find_edge(const std::string& id) const;
  std::optional<VertexIndex> find_vertex(const std::string& id) const;

  /// Univalent vertices in declaration order (w_1, ..., w_n).
  const std::vector<VertexIndex>& boundary() const { return boundary_; }
  /// Position of v in boundary(), if v is univalent.
  std::optional<std::size_t> boundary_position(VertexIndex v) const;

  std::size_t degree(VertexIndex v) const { return incidence_[v].size(); }
  bool is_univalent(VertexIndex v) const { return degree(v) == 1; }
  /// Edge endpoints at v; a loop appears twice.
  const std::vector<EdgeIndex>& incidence(VertexIndex v) const { return incidence_[v]; }

  /// An edge touching a univalent vertex.
  bool is_leg(EdgeIndex e) const;

  /// Connected components as sorted edge lists, ordered by their lowest edge.
  const std::vector<std::vector<EdgeIndex>>& components() const { return components_; }
  std::size_t component_of_edge(EdgeIndex e) const { return edge_component_[e]; }

  /// First Betti number E - V + #components.
  std::size_t genus() const { return genus_; }

  /// Non-fatal observations made during validation (degenerate components).
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Sub-graph on the given edges, keeping declaration order and the relative
  /// order of boundary vertices.
  Graph subgraph(const std::vector<EdgeIndex>& edges) const;

  RawGraph to_raw() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::string> vertex_ids_;
  std::vector<std::vector<EdgeIndex>> incidence_;
  std::vector<VertexIndex> boundary_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::vector<std::vector<EdgeIndex>> components_;
  std::vector<std::size_t> edge_component_;
  std::size_t genus_ = 0;
  std::vector<std::string> warnings_;
};

/// A graph file: the graph plus doubled boundary weights aligned with
/// Graph::boundary().
struct GraphFile {
  Graph graph;
  std::vector<int> boundary_weights;
};

/// Parses the line format
///   edge <edge-id> <vertex-id> <vertex-id>
///   boundary <vertex-id> <doubled-weight>
/// with '#' comments. Throws InputError on malformed lines.
GraphFile parse_graph(std::istream& in);
GraphFile parse_graph_string(const std::string& text);
GraphFile load_graph(const std::string& path);

void write_graph(std::ostream& out, const Graph& graph, const std::vector<int>& boundary_weights);

}  // namespace qcg

#endif  // QCG_GRAPH_HPP
