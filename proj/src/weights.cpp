#include "qcg/weights.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <queue>

#include "qcg/errors.hpp"

namespace qcg {

Level::Level(int k) : k_(k) {
  if (k < 1) throw RangeError("level must be a positive integer, got " + std::to_string(k));
}

std::size_t WeightVectorHash::operator()(const WeightVector& w) const {
  std::size_t h = w.doubled.size();
  for (int x : w.doubled) h = h * 1000003U ^ static_cast<std::size_t>(x);
  return h;
}

std::string format_weight(const WeightVector& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out += '\t';
    out += std::to_string(w[i]);
  }
  return out;
}

namespace {

bool triple_ok(int a, int b, int c, int k) {
  const int sum = a + b + c;
  return sum % 2 == 0 && std::abs(a - b) <= c && c <= a + b && sum <= 2 * k;
}

bool vertex_ok(const Graph& graph, VertexIndex v, const std::vector<int>& doubled, int k) {
  const auto& inc = graph.incidence(v);
  return triple_ok(doubled[inc[0]], doubled[inc[1]], doubled[inc[2]], k);
}

void check_boundary(const Graph& graph, Level level, const std::vector<int>& boundary) {
  if (boundary.size() != graph.boundary().size()) {
    throw InputError("expected " + std::to_string(graph.boundary().size()) + " boundary weights, got " +
                     std::to_string(boundary.size()));
  }
  for (int b : boundary) {
    if (b < 0 || b > level.k()) {
      throw RangeError("boundary weight " + std::to_string(b) + " outside [0, " +
                       std::to_string(level.k()) + "]");
    }
  }
}

}  // namespace

bool check_admissible(const Graph& graph, Level level, const WeightVector& w,
                      const std::vector<int>& boundary) {
  check_boundary(graph, level, boundary);
  if (w.size() != graph.edge_count()) throw InputError("weight vector has the wrong length");
  for (int x : w.doubled) {
    if (x < 0 || x > level.k()) {
      throw RangeError("weight entry " + std::to_string(x) + " outside [0, " + std::to_string(level.k()) + "]");
    }
  }
  for (std::size_t p = 0; p < graph.boundary().size(); ++p) {
    const auto e = graph.incidence(graph.boundary()[p]).front();
    if (w[e] != boundary[p]) return false;
  }
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    if (graph.degree(v) == 3 && !vertex_ok(graph, v, w.doubled, level.k())) return false;
  }
  return true;
}

std::vector<WeightVector> enumerate_admissible(const Graph& graph, Level level,
                                               const std::vector<int>& boundary) {
  check_boundary(graph, level, boundary);
  if (std::accumulate(boundary.begin(), boundary.end(), 0) % 2 != 0) return {};

  const int k = level.k();
  std::vector<int> current(graph.edge_count(), -1);
  for (std::size_t p = 0; p < graph.boundary().size(); ++p) {
    const auto e = graph.incidence(graph.boundary()[p]).front();
    if (current[e] != -1 && current[e] != boundary[p]) return {};
    current[e] = boundary[p];
  }

  // Free edges in breadth-first order so that vertex checks fire early.
  std::vector<EdgeIndex> order;
  std::vector<bool> ordered(graph.edge_count(), false);
  std::vector<bool> seen(graph.vertex_count(), false);
  for (VertexIndex root = 0; root < graph.vertex_count(); ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<VertexIndex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop();
      for (auto e : graph.incidence(v)) {
        if (current[e] == -1 && !ordered[e]) {
          ordered[e] = true;
          order.push_back(e);
        }
        const auto w = graph.edge(e).other(v);
        if (!seen[w]) {
          seen[w] = true;
          queue.push(w);
        }
      }
    }
  }
  std::vector<std::size_t> position(graph.edge_count(), SIZE_MAX);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  std::vector<std::vector<VertexIndex>> checks(order.size());
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    if (graph.degree(v) != 3) continue;
    std::size_t last = SIZE_MAX;
    for (auto e : graph.incidence(v)) {
      if (position[e] != SIZE_MAX) last = last == SIZE_MAX ? position[e] : std::max(last, position[e]);
    }
    if (last == SIZE_MAX) {
      if (!vertex_ok(graph, v, current, k)) return {};
    } else {
      checks[last].push_back(v);
    }
  }

  std::vector<WeightVector> out;
  std::function<void(std::size_t)> descend = [&](std::size_t depth) {
    if (depth == order.size()) {
      out.push_back(WeightVector{current});
      return;
    }
    const auto e = order[depth];
    for (int x = 0; x <= k; ++x) {
      current[e] = x;
      bool ok = true;
      for (auto v : checks[depth]) {
        if (!vertex_ok(graph, v, current, k)) {
          ok = false;
          break;
        }
      }
      if (ok) descend(depth + 1);
    }
    current[e] = -1;
  };
  descend(0);
  std::sort(out.begin(), out.end());
  return out;
}

WeightVector act(const Cycle& cycle, const WeightVector& w, Level level) {
  WeightVector out = w;
  for (auto e : cycle.edges()) out.doubled[e] = level.k() - out.doubled[e];
  return out;
}

CycleMask Orbit::stabilizer_element(std::size_t subset) const {
  CycleMask m = 0;
  for (std::size_t i = 0; i < stabilizer.size(); ++i) {
    if ((subset >> i) & 1U) m ^= stabilizer[i];
  }
  return m;
}

std::shared_ptr<const WeightSpace> WeightSpace::create(Graph graph, Level level, std::vector<int> boundary) {
  return std::shared_ptr<const WeightSpace>(new WeightSpace(std::move(graph), level, std::move(boundary)));
}

WeightSpace::WeightSpace(Graph graph, Level level, std::vector<int> boundary)
    : graph_(std::move(graph)), level_(level), boundary_(std::move(boundary)), basis_(graph_) {
  weights_ = enumerate_admissible(graph_, level_, boundary_);
  index_.reserve(weights_.size());
  for (std::size_t i = 0; i < weights_.size(); ++i) index_.emplace(weights_[i], i);

  basis_action_.resize(basis_.rank());
  for (std::size_t b = 0; b < basis_.rank(); ++b) {
    basis_action_[b].resize(weights_.size());
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      auto it = index_.find(qcg::act(basis_.cycle(b), weights_[i], level_));
      if (it == index_.end()) throw Error("flip action left the admissible set");
      basis_action_[b][i] = it->second;
    }
  }

  orbit_of_.assign(weights_.size(), SIZE_MAX);
  for (std::size_t seed = 0; seed < weights_.size(); ++seed) {
    if (orbit_of_[seed] != SIZE_MAX) continue;
    Orbit orbit;
    orbit.representative = seed;
    const auto id = orbits_.size();
    orbit_of_[seed] = id;
    std::queue<std::size_t> queue;
    queue.push(seed);
    while (!queue.empty()) {
      const auto w = queue.front();
      queue.pop();
      orbit.members.push_back(w);
      for (std::size_t b = 0; b < basis_.rank(); ++b) {
        const auto next = basis_action_[b][w];
        if (orbit_of_[next] == SIZE_MAX) {
          orbit_of_[next] = id;
          queue.push(next);
        }
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.stabilizer = stabilizer_of(seed);
    orbits_.push_back(std::move(orbit));
  }
}

std::optional<std::size_t> WeightSpace::index_of(const WeightVector& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeightSpace::act(CycleMask mask, std::size_t w) const {
  for (std::size_t b = 0; mask != 0; ++b, mask >>= 1) {
    if (mask & 1U) w = basis_action_[b][w];
  }
  return w;
}

std::vector<CycleMask> WeightSpace::stabilizer_of(std::size_t w) const {
  // lambda fixes w iff every edge of its support carries doubled weight k/2.
  const auto& weight = weights_[w];
  std::vector<f2::Bits> images;
  for (const auto& c : basis_.cycles()) {
    f2::Bits moved(graph_.edge_count());
    for (auto e : c.edges()) {
      if (2 * weight[e] != level_.k()) moved.set(e);
    }
    images.push_back(std::move(moved));
  }
  std::vector<CycleMask> out;
  for (const auto& v : f2::kernel(images, graph_.edge_count())) {
    CycleMask m = 0;
    for (auto i : v.ones()) m |= CycleMask{1} << i;
    out.push_back(m);
  }
  return out;
}

}  // namespace qcg
