#ifndef QCG_CYCLES_HPP
#define QCG_CYCLES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qcg/f2.hpp"
#include "qcg/graph.hpp"

namespace qcg {

/// Element of H1(graph; Z2), stored as its edge support.
class Cycle {
 public:
  Cycle() = default;
  /// Throws NotACycle when some vertex meets the support an odd number of times.
  Cycle(const Graph& graph, f2::Bits support);
  static Cycle zero(const Graph& graph);
  static Cycle from_edge_ids(const Graph& graph, const std::vector<std::string>& ids);

  const f2::Bits& support() const { return support_; }
  bool contains(EdgeIndex e) const { return support_.test(e); }
  bool is_zero() const { return support_.none(); }
  std::vector<EdgeIndex> edges() const { return support_.ones(); }

  Cycle& operator+=(const Cycle& other) {
    support_ ^= other.support_;
    return *this;
  }
  friend Cycle operator+(Cycle lhs, const Cycle& rhs) { return lhs += rhs; }
  bool operator==(const Cycle& other) const = default;
  auto operator<=>(const Cycle& other) const { return support_ <=> other.support_; }

 private:
  explicit Cycle(f2::Bits support) : support_(std::move(support)) {}
  f2::Bits support_;
};

/// Comma-separated edge ids of the support, e.g. "e1,e3"; "0" for the zero cycle.
std::string format_cycle(const Graph& graph, const Cycle& cycle);

/// Element of H1 written in coordinates over a HomologyBasis (bit i = basis cycle i).
using CycleMask = std::uint64_t;

/// Fundamental-cycle basis of H1(graph; Z2). The spanning forest is grown
/// from the highest edge index down, and each non-tree edge, taken in
/// ascending order, closes one basis cycle. Every basis cycle contains
/// exactly one non-tree edge, so coordinates are read off the support.
class HomologyBasis {
 public:
  HomologyBasis() = default;
  explicit HomologyBasis(const Graph& graph);

  std::size_t rank() const { return cycles_.size(); }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  const Cycle& cycle(std::size_t i) const { return cycles_[i]; }
  /// The non-tree edge of basis cycle i.
  EdgeIndex pivot(std::size_t i) const { return pivots_[i]; }
  bool is_tree_edge(EdgeIndex e) const { return tree_[e]; }

  CycleMask coordinates(const Cycle& cycle) const;
  Cycle element(CycleMask mask) const;
  std::size_t group_order() const { return std::size_t{1} << rank(); }

 private:
  std::vector<Cycle> cycles_;
  std::vector<EdgeIndex> pivots_;
  std::vector<bool> tree_;
  std::size_t edge_count_ = 0;
  Cycle zero_;
};

/// Cycle basis of the graph (fundamental cycles, see HomologyBasis).
std::vector<Cycle> cycle_basis(const Graph& graph);

enum class EdgeClass { on_cycle, external, internal, off };

const char* to_string(EdgeClass c);

/// Vertices met by the support of cycle.
std::vector<bool> vertices_on(const Graph& graph, const Cycle& cycle);

/// Position of an edge relative to a nonzero cycle: on the cycle, external
/// (exactly one endpoint on it), internal (both endpoints on it) or off.
/// Throws ZeroCycle for the zero cycle.
EdgeClass classify_edge(const Graph& graph, const Cycle& cycle, EdgeIndex edge);

/// All external edges of cycle, ascending.
std::vector<EdgeIndex> external_edges(const Graph& graph, const Cycle& cycle);

}  // namespace qcg

#endif  // QCG_CYCLES_HPP
