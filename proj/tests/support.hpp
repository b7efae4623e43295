#ifndef QCG_TESTS_SUPPORT_HPP
#define QCG_TESTS_SUPPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "qcg/graph.hpp"
#include "qcg/weights.hpp"

namespace qcg::test {

inline std::string data_path(const std::string& name) { return std::string(QCG_TEST_DATA) + "/" + name + ".g"; }

inline GraphFile load(const std::string& name) { return load_graph(data_path(name)); }

inline WeightSpacePtr space_of(const std::string& name, int k) {
  auto file = load(name);
  return WeightSpace::create(file.graph, Level(k), file.boundary_weights);
}

inline WeightSpacePtr space_of(const std::string& name, int k, std::vector<int> boundary) {
  return WeightSpace::create(load(name).graph, Level(k), std::move(boundary));
}

inline WeightVector wv(std::vector<int> doubled) { return WeightVector{std::move(doubled)}; }

/// Suite graphs named by their data file.
inline const std::vector<std::string>& suite_graphs() {
  static const std::vector<std::string> names = {"tree3", "gamma1", "gamma2", "gamma3",
                                                 "theta", "dumbbell", "theta_handle", "fig1"};
  return names;
}

/// Every boundary assignment in [0, k]^n.
inline std::vector<std::vector<int>> all_boundaries(std::size_t n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> b(n, 0);
  while (true) {
    out.push_back(b);
    std::size_t i = 0;
    while (i < n && b[i] == k) b[i++] = 0;
    if (i == n) break;
    ++b[i];
  }
  return out;
}

/// Weight spaces of every suite graph at level k, one per boundary assignment.
inline std::vector<WeightSpacePtr> suite_spaces(int k) {
  std::vector<WeightSpacePtr> out;
  for (const auto& name : suite_graphs()) {
    const auto graph = load(name).graph;
    for (auto& b : all_boundaries(graph.boundary().size(), k)) out.push_back(WeightSpace::create(graph, Level(k), b));
  }
  return out;
}

}  // namespace qcg::test

#endif  // QCG_TESTS_SUPPORT_HPP
