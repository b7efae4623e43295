#include "qcg/cycles.hpp"

#include <numeric>
#include <queue>

#include "qcg/errors.hpp"

namespace qcg {

namespace {

bool even_at_every_vertex(const Graph& graph, const f2::Bits& support) {
  std::vector<unsigned> parity(graph.vertex_count(), 0);
  for (auto e : support.ones()) {
    parity[graph.edge(e).a] ^= 1U;
    parity[graph.edge(e).b] ^= 1U;
  }
  for (auto p : parity) {
    if (p != 0) return false;
  }
  return true;
}

}  // namespace

Cycle::Cycle(const Graph& graph, f2::Bits support) : support_(std::move(support)) {
  if (support_.size() != graph.edge_count()) throw NotACycle("cycle support has the wrong width");
  if (!even_at_every_vertex(graph, support_)) throw NotACycle("support has odd degree at a vertex");
}

Cycle Cycle::zero(const Graph& graph) { return Cycle(f2::Bits(graph.edge_count())); }

Cycle Cycle::from_edge_ids(const Graph& graph, const std::vector<std::string>& ids) {
  f2::Bits support(graph.edge_count());
  for (const auto& id : ids) {
    auto e = graph.find_edge(id);
    if (!e) throw InputError("unknown edge id '" + id + "'");
    support.flip(*e);
  }
  return Cycle(graph, std::move(support));
}

std::string format_cycle(const Graph& graph, const Cycle& cycle) {
  if (cycle.is_zero()) return "0";
  std::string out;
  for (auto e : cycle.edges()) {
    if (!out.empty()) out += ',';
    out += graph.edge(e).id;
  }
  return out;
}

HomologyBasis::HomologyBasis(const Graph& graph)
    : tree_(graph.edge_count(), false), edge_count_(graph.edge_count()), zero_(Cycle::zero(graph)) {
  const auto n = graph.vertex_count();
  std::vector<std::size_t> parent_set(n);
  std::iota(parent_set.begin(), parent_set.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent_set[x] != x) x = parent_set[x] = parent_set[parent_set[x]];
    return x;
  };
  for (EdgeIndex e = graph.edge_count(); e-- > 0;) {
    const auto& edge = graph.edge(e);
    const auto ra = find(edge.a);
    const auto rb = find(edge.b);
    if (ra != rb) {
      parent_set[ra] = rb;
      tree_[e] = true;
    }
  }

  // Root every tree and record parent edges for path recovery.
  std::vector<std::size_t> depth(n, SIZE_MAX);
  std::vector<EdgeIndex> up_edge(n, SIZE_MAX);
  for (VertexIndex root = 0; root < n; ++root) {
    if (depth[root] != SIZE_MAX) continue;
    depth[root] = 0;
    std::queue<VertexIndex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop();
      for (auto e : graph.incidence(v)) {
        if (!tree_[e]) continue;
        const auto w = graph.edge(e).other(v);
        if (depth[w] != SIZE_MAX) continue;
        depth[w] = depth[v] + 1;
        up_edge[w] = e;
        queue.push(w);
      }
    }
  }

  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    if (tree_[e]) continue;
    f2::Bits support(graph.edge_count());
    support.set(e);
    auto u = graph.edge(e).a;
    auto v = graph.edge(e).b;
    while (u != v) {
      if (depth[u] < depth[v]) std::swap(u, v);
      support.flip(up_edge[u]);
      u = graph.edge(up_edge[u]).other(u);
    }
    cycles_.emplace_back(graph, std::move(support));
    pivots_.push_back(e);
  }
  if (cycles_.size() >= 64) throw RangeError("first Betti number above 63 is not supported");
}

CycleMask HomologyBasis::coordinates(const Cycle& cycle) const {
  if (cycle.support().size() != edge_count_) throw NotACycle("cycle belongs to another graph");
  CycleMask mask = 0;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    if (cycle.contains(pivots_[i])) mask |= CycleMask{1} << i;
  }
  return mask;
}

Cycle HomologyBasis::element(CycleMask mask) const {
  Cycle out = zero_;
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    if ((mask >> i) & 1U) out += cycles_[i];
  }
  return out;
}

std::vector<Cycle> cycle_basis(const Graph& graph) { return HomologyBasis(graph).cycles(); }

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::on_cycle: return "on-cycle";
    case EdgeClass::external: return "external";
    case EdgeClass::internal: return "internal";
    case EdgeClass::off: return "off";
  }
  return "?";
}

std::vector<bool> vertices_on(const Graph& graph, const Cycle& cycle) {
  std::vector<bool> on(graph.vertex_count(), false);
  for (auto e : cycle.edges()) on[graph.edge(e).a] = on[graph.edge(e).b] = true;
  return on;
}

EdgeClass classify_edge(const Graph& graph, const Cycle& cycle, EdgeIndex edge) {
  if (cycle.is_zero()) throw ZeroCycle("edge classification is undefined for the zero cycle");
  if (cycle.contains(edge)) return EdgeClass::on_cycle;
  const auto on = vertices_on(graph, cycle);
  const auto& e = graph.edge(edge);
  const int touching = static_cast<int>(on[e.a]) + static_cast<int>(on[e.b]);
  if (e.is_loop()) return on[e.a] ? EdgeClass::internal : EdgeClass::off;
  if (touching == 2) return EdgeClass::internal;
  if (touching == 1) return EdgeClass::external;
  return EdgeClass::off;
}

std::vector<EdgeIndex> external_edges(const Graph& graph, const Cycle& cycle) {
  if (cycle.is_zero()) throw ZeroCycle("external edges are undefined for the zero cycle");
  const auto on = vertices_on(graph, cycle);
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    const auto& edge = graph.edge(e);
    if (!cycle.contains(e) && !edge.is_loop() && on[edge.a] != on[edge.b]) out.push_back(e);
  }
  return out;
}

}  // namespace qcg
