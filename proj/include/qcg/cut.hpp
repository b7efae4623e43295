#ifndef QCG_CUT_HPP
#define QCG_CUT_HPP

#include <optional>
#include <set>
#include <vector>

#include "qcg/cycles.hpp"
#include "qcg/graph.hpp"

namespace qcg {

/// One cut edge f = (u, v): in the cut graph it becomes two legs, half_a
/// hanging off u and half_b hanging off v, each ending at a fresh univalent
/// vertex.
struct CutPair {
  EdgeIndex original = 0;
  EdgeIndex half_a = 0;
  EdgeIndex half_b = 0;
};

/// Graph obtained by cutting edges. Edge ids of the halves are "<f>|a" and
/// "<f>|b"; their new univalent vertices carry the same ids. The boundary is
/// the original boundary followed by the new legs (cut order, side a first).
struct CutGraph {
  Graph graph;
  std::vector<CutPair> pairs;
  /// Cut-graph edge -> original edge (for halves, the edge that was cut).
  std::vector<EdgeIndex> origin;
  /// Cut-graph edge -> index into pairs, for halves only.
  std::vector<std::optional<std::size_t>> half_of;
};

/// Cuts the given edges. Throws CutLeafEdge if an edge touches a univalent vertex.
CutGraph cut_edges(const Graph& graph, const std::set<EdgeIndex>& cut);

/// Re-identifies paired boundary vertices of a cut graph.
Graph glue(const CutGraph& cut);

/// Edges of the original graph that isolate_cycle cuts: the non-leg
/// external and internal edges of cycle.
std::set<EdgeIndex> isolating_cut(const Graph& graph, const Cycle& cycle);

struct GammaN {
  std::size_t n = 0;
  Cycle generator;
};

/// Recognizes Gamma(n): a connected graph with first Betti number 1 whose
/// edges off the cycle are all legs. Returns nullopt otherwise.
std::optional<GammaN> recognize_gamma_n(const Graph& graph);

}  // namespace qcg

#endif  // QCG_CUT_HPP
