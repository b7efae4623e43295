#ifndef QCG_WEIGHTS_HPP
#define QCG_WEIGHTS_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcg/cycles.hpp"
#include "qcg/graph.hpp"

namespace qcg {

/// The level k >= 1.
class Level {
 public:
  explicit Level(int k);
  int k() const { return k_; }
  bool is_even() const { return k_ % 2 == 0; }
  bool operator==(const Level&) const = default;

 private:
  int k_;
};

/// Edge labels stored doubled: doubled[l] = 2 j_l, in [0, k].
struct WeightVector {
  std::vector<int> doubled;

  std::size_t size() const { return doubled.size(); }
  int operator[](std::size_t i) const { return doubled[i]; }
  bool operator==(const WeightVector&) const = default;
  auto operator<=>(const WeightVector&) const = default;
};

struct WeightVectorHash {
  std::size_t operator()(const WeightVector& w) const;
};

/// Tab-separated doubled entries.
std::string format_weight(const WeightVector& w);

/// Level-k admissibility of w with leg entries matching the doubled boundary
/// weights (aligned with graph.boundary()). At each trivalent vertex with
/// doubled triple (a, b, c): a+b+c even, |a-b| <= c <= a+b, a+b+c <= 2k. A loop
/// enters its vertex's triple twice. Throws RangeError for entries outside [0, k].
bool check_admissible(const Graph& graph, Level level, const WeightVector& w,
                      const std::vector<int>& boundary);

/// All admissible weights, lexicographically sorted.
std::vector<WeightVector> enumerate_admissible(const Graph& graph, Level level,
                                               const std::vector<int>& boundary);

/// Flip action: doubled[l] -> k - doubled[l] on the support of cycle.
WeightVector act(const Cycle& cycle, const WeightVector& w, Level level);

/// H1-orbit of admissible weights. Indices refer to WeightSpace::weights().
struct Orbit {
  std::size_t representative = 0;    ///< lexicographically least member
  std::vector<std::size_t> members;  ///< ascending
  std::vector<CycleMask> stabilizer; ///< reduced basis of the stabilizer, as coordinates

  std::size_t stabilizer_dim() const { return stabilizer.size(); }
  /// Stabilizer element selected by the bits of subset over the stabilizer basis.
  CycleMask stabilizer_element(std::size_t subset) const;
};

/// The admissible weights of (graph; boundary) at a level, with the H1
/// action tabulated on a homology basis and the orbit decomposition.
class WeightSpace {
 public:
  static std::shared_ptr<const WeightSpace> create(Graph graph, Level level, std::vector<int> boundary);

  const Graph& graph() const { return graph_; }
  Level level() const { return level_; }
  const std::vector<int>& boundary() const { return boundary_; }
  const HomologyBasis& basis() const { return basis_; }
  std::size_t genus() const { return basis_.rank(); }

  std::size_t size() const { return weights_.size(); }
  const std::vector<WeightVector>& weights() const { return weights_; }
  const WeightVector& weight(std::size_t i) const { return weights_[i]; }
  std::optional<std::size_t> index_of(const WeightVector& w) const;

  /// Index of basis cycle i applied to weight w.
  std::size_t act_basis(std::size_t i, std::size_t w) const { return basis_action_[i][w]; }
  std::size_t act(CycleMask mask, std::size_t w) const;
  bool fixes(CycleMask mask, std::size_t w) const { return act(mask, w) == w; }

  const std::vector<Orbit>& orbits() const { return orbits_; }
  std::size_t orbit_of(std::size_t w) const { return orbit_of_[w]; }

  /// Stabilizer basis of weight w, by linear algebra on the support condition
  /// doubled[l] = k/2.
  std::vector<CycleMask> stabilizer_of(std::size_t w) const;

 private:
  WeightSpace(Graph graph, Level level, std::vector<int> boundary);

  Graph graph_;
  Level level_;
  std::vector<int> boundary_;
  HomologyBasis basis_;
  std::vector<WeightVector> weights_;
  std::unordered_map<WeightVector, std::size_t, WeightVectorHash> index_;
  std::vector<std::vector<std::size_t>> basis_action_;
  std::vector<Orbit> orbits_;
  std::vector<std::size_t> orbit_of_;
};

using WeightSpacePtr = std::shared_ptr<const WeightSpace>;

}  // namespace qcg

#endif  // QCG_WEIGHTS_HPP
