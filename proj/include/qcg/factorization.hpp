#ifndef QCG_FACTORIZATION_HPP
#define QCG_FACTORIZATION_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcg/cohomology.hpp"
#include "qcg/cut.hpp"

namespace qcg {

/// One side of a decomposition.
struct Part {
  Graph graph;
  /// Part edge -> cut-graph edge.
  std::vector<EdgeIndex> source;
  /// Part boundary slot -> where its weight comes from: an index into the
  /// original boundary, or (from_cut) an index into the cut pairs.
  struct Slot {
    bool from_cut = false;
    std::size_t index = 0;
  };
  std::vector<Slot> slots;
};

/// (Gamma; j') cut along internal edges, components grouped into a first
/// part Gamma_1 and a second part Gamma_2 (either may be empty).
class Decomposition {
 public:
  /// first_components selects, per component of the cut graph, membership of Gamma_1.
  Decomposition(const Graph& graph, const std::set<EdgeIndex>& cut, const std::vector<bool>& first_components);

  /// Cut the non-leg external and internal edges of cycle; Gamma_1 is the
  /// union of components meeting the cycle.
  static Decomposition isolate_cycle(const Graph& graph, const Cycle& cycle);

  const Graph& original() const { return original_; }
  const CutGraph& cut_graph() const { return cut_; }
  const std::set<EdgeIndex>& cut() const { return cut_set_; }
  const Part& first() const { return first_; }
  const Part& second() const { return second_; }
  const std::vector<bool>& first_components() const { return first_components_; }

  /// Human-readable "cut={...} first={...}".
  std::string describe() const;

  /// Doubled weights of the cut edges, in CutGraph::pairs order.
  std::vector<int> cut_weights(const WeightVector& w) const;
  /// Restriction of a weight of the original graph to a part.
  WeightVector restrict_weight(const Part& part, const WeightVector& w) const;
  /// Boundary of a part given j' of the original graph and the cut weights.
  std::vector<int> part_boundary(const Part& part, const std::vector<int>& boundary,
                                 const std::vector<int>& cut_weights) const;
  /// Reassembles a weight of the original graph.
  WeightVector glue_weight(const std::vector<int>& cut_weights, const WeightVector& first,
                           const WeightVector& second) const;
  /// A cycle of the first part, as a cycle of the original graph.
  Cycle transport(const Cycle& first_cycle) const;

 private:
  Graph original_;
  std::set<EdgeIndex> cut_set_;
  CutGraph cut_;
  std::vector<bool> first_components_;
  Part first_;
  Part second_;
  /// Original non-cut edge -> (in first part?, part edge index).
  std::vector<std::pair<bool, EdgeIndex>> placement_;
};

/// The data fixing an inclusion iota: the cut weights j'' and a weight of Gamma_2.
struct GluingPoint {
  std::vector<int> cut_weights;
  WeightVector second;
  auto operator<=>(const GluingPoint&) const = default;
};

using WeightSplit = std::pair<std::vector<WeightVector>, std::vector<WeightVector>>;

/// For every j'' in [0, k]^cut with both sides nonempty:
/// (QCG(Gamma_1; j'_1, j''), QCG(Gamma_2; j'_2, j'')).
std::map<std::vector<int>, WeightSplit> decompose_weights(const WeightSpace& space, const Decomposition& dec);

/// Gluing points realized by admissible weights of the original graph, sorted.
std::vector<GluingPoint> gluing_points(const WeightSpace& space, const Decomposition& dec);

/// QCG(Gamma_1; j'_1, j'') as a weight space.
WeightSpacePtr first_space(const WeightSpace& space, const Decomposition& dec, const std::vector<int>& cut_weights);

/// iota*: (iota* t)_{w1}(l1) = t_{glue(w1, point)}(l1 viewed in Gamma).
/// Throws WeightMismatch when point.second is not an admissible weight of
/// Gamma_2 for the given cut weights.
CocycleTable restrict_cocycle(const CocycleTable& t, const Decomposition& dec, const GluingPoint& point);
CocycleTable restrict_cocycle(const CocycleTable& t, const Decomposition& dec, const GluingPoint& point,
                              WeightSpacePtr first);

/// Calls visit on every decomposition: all subsets of non-leg edges, all
/// groupings of the resulting components. Throws CapExceeded when the number
/// of cut subsets exceeds cap.
void for_each_decomposition(const Graph& graph, std::size_t cap,
                            const std::function<void(const Decomposition&)>& visit);

struct VerificationReport {
  bool ok = true;
  std::vector<std::string> lines;  ///< one PASS/FAIL line per decomposition or check
  std::string witness;             ///< first failure, empty when ok
  std::size_t decompositions = 0;
};

/// For every decomposition and gluing point, the restricted representations
/// of t1 and t2 are isomorphic.
VerificationReport equivalent_under_factorization(const CocycleTable& t1, const CocycleTable& t2,
                                                  std::size_t cap = 4096);

/// For every decomposition and gluing point, the restricted external class
/// equals the external class of Gamma_1.
VerificationReport verify_functoriality(WeightSpacePtr space, std::size_t cap = 4096);

/// For every nonzero cycle l and every Gamma(n') piece of isolate_cycle(l):
/// the restriction of t is cohomologous to the standard Gamma(n') cocycle.
/// The witness names the offending cycle and weight of Gamma.
VerificationReport check_gamma_n_restrictions(const CocycleTable& t, std::size_t cap = 4096);

/// (a) the external cocycle passes check_gamma_n_restrictions; (b) across a
/// family of perturbed cocycles, passing the check coincides with being
/// cohomologous to the external cocycle.
VerificationReport verify_characterization(WeightSpacePtr space, std::size_t cap = 4096,
                                           std::size_t family_size = 16, std::uint64_t seed = 1);

}  // namespace qcg

#endif  // QCG_FACTORIZATION_HPP
