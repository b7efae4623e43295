#include "qcg/cohomology.hpp"

#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>

#include "qcg/errors.hpp"
#include "qcg/f2.hpp"

namespace qcg {

ZeroCochain::ZeroCochain(WeightSpacePtr space, std::vector<CircleValue> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_->size()) throw IncompleteTable("0-cochain must be total on the admissible set");
}

ZeroCochain ZeroCochain::constant(WeightSpacePtr space, CircleValue value) {
  const auto n = space->size();
  return {std::move(space), std::vector<CircleValue>(n, value)};
}

ZeroCochain ZeroCochain::operator*(const ZeroCochain& other) const {
  std::vector<CircleValue> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] * other.values_[i];
  return {space_, std::move(out)};
}

ZeroCochain ZeroCochain::inverse() const {
  std::vector<CircleValue> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i].inverse();
  return {space_, std::move(out)};
}

CocycleTable::CocycleTable(WeightSpacePtr space, std::vector<CircleValue> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_->genus() * space_->size()) {
    throw IncompleteTable("cocycle table needs " + std::to_string(space_->genus() * space_->size()) +
                          " entries, got " + std::to_string(values_.size()));
  }
}

CocycleTable CocycleTable::trivial(WeightSpacePtr space) {
  const auto n = space->genus() * space->size();
  return {std::move(space), std::vector<CircleValue>(n)};
}

CircleValue CocycleTable::evaluate(CycleMask element, std::size_t weight) const {
  CircleValue value;
  for (std::size_t b = 0; element != 0; ++b, element >>= 1) {
    if (element & 1U) {
      value *= at(b, weight);
      weight = space_->act_basis(b, weight);
    }
  }
  return value;
}

CocycleTable CocycleTable::operator*(const CocycleTable& other) const {
  std::vector<CircleValue> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] * other.values_[i];
  return {space_, std::move(out)};
}

CocycleTable CocycleTable::inverse() const {
  std::vector<CircleValue> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i].inverse();
  return {space_, std::move(out)};
}

bool CohomologyInvariant::is_trivial() const {
  for (const auto& chars : characters) {
    for (const auto& v : chars) {
      if (!v.is_one()) return false;
    }
  }
  return true;
}

std::string TwoGroupOrder::decimal() const {
  std::vector<int> digits{1};  // little-endian base 10
  for (std::size_t i = 0; i < log2; ++i) {
    int carry = 0;
    for (auto& d : digits) {
      d = d * 2 + carry;
      carry = d / 10;
      d %= 10;
    }
    if (carry != 0) digits.push_back(carry);
  }
  std::string out;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) out += static_cast<char>('0' + *it);
  return out;
}

bool is_twisted_cocycle(const CocycleTable& t) {
  const auto& space = t.space();
  const auto g = space.genus();
  for (std::size_t w = 0; w < space.size(); ++w) {
    for (std::size_t b = 0; b < g; ++b) {
      const auto bw = space.act_basis(b, w);
      if (t.at(b, bw) != t.at(b, w).inverse()) return false;
      for (std::size_t c = b + 1; c < g; ++c) {
        const auto cw = space.act_basis(c, w);
        if (t.at(c, bw) * t.at(b, w) != t.at(b, cw) * t.at(c, w)) return false;
      }
    }
  }
  return true;
}

CocycleTable coboundary_of(const ZeroCochain& c) {
  const auto& space = c.space();
  std::vector<CircleValue> values(space.genus() * space.size());
  for (std::size_t b = 0; b < space.genus(); ++b) {
    for (std::size_t w = 0; w < space.size(); ++w) {
      values[b * space.size() + w] = c[space.act_basis(b, w)] / c[w];
    }
  }
  return {c.space_ptr(), std::move(values)};
}

namespace {

void require_cocycle(const CocycleTable& t) {
  if (!is_twisted_cocycle(t)) throw NotACocycle("table violates the twisted cocycle relations");
}

}  // namespace

bool is_coboundary(const CocycleTable& t) {
  require_cocycle(t);
  // The group is abelian, so every member of an orbit has the stabilizer
  // of its representative; these are exactly the fixed pairs.
  for (const auto& orbit : t.space().orbits()) {
    const std::size_t elements = std::size_t{1} << orbit.stabilizer_dim();
    for (auto w : orbit.members) {
      for (std::size_t s = 1; s < elements; ++s) {
        if (!t.evaluate(orbit.stabilizer_element(s), w).is_one()) return false;
      }
    }
  }
  return true;
}

ZeroCochain cobounding_chain(const CocycleTable& t) {
  const auto& space = t.space();
  std::vector<CircleValue> values(space.size());
  std::vector<bool> done(space.size(), false);
  for (const auto& orbit : space.orbits()) {
    const auto rep = orbit.representative;
    std::queue<std::size_t> queue;
    queue.push(rep);
    done[rep] = true;
    while (!queue.empty()) {
      const auto w = queue.front();
      queue.pop();
      for (std::size_t b = 0; b < space.genus(); ++b) {
        const auto next = space.act_basis(b, w);
        if (!done[next]) {
          done[next] = true;
          values[next] = values[w] * t.at(b, w);
          queue.push(next);
        }
      }
    }
  }
  ZeroCochain chain(t.space_ptr(), std::move(values));
  if (coboundary_of(chain) == t) return chain;
  require_cocycle(t);
  throw NotACoboundary("cocycle is nontrivial on a fixed pair");
}

CohomologyInvariant cohomology_invariant(const CocycleTable& t) {
  require_cocycle(t);
  CohomologyInvariant inv{t.space_ptr(), {}};
  for (const auto& orbit : t.space().orbits()) {
    std::vector<CircleValue> chars(std::size_t{1} << orbit.stabilizer_dim());
    for (std::size_t s = 0; s < chars.size(); ++s) {
      chars[s] = t.evaluate(orbit.stabilizer_element(s), orbit.representative);
    }
    inv.characters.push_back(std::move(chars));
  }
  return inv;
}

CocycleTable cocycle_from_characters(const CohomologyInvariant& inv) {
  const auto& space = *inv.space;
  const auto g = space.genus();
  if (inv.characters.size() != space.orbits().size()) {
    throw NotAHomomorphism("invariant has " + std::to_string(inv.characters.size()) + " orbits, expected " +
                           std::to_string(space.orbits().size()));
  }
  // lift[o][b]: value of the lifted character of orbit o on basis cycle b.
  std::vector<std::vector<CircleValue>> lift(space.orbits().size(), std::vector<CircleValue>(g));
  for (std::size_t o = 0; o < space.orbits().size(); ++o) {
    const auto& orbit = space.orbits()[o];
    const auto& chars = inv.characters[o];
    const auto d = orbit.stabilizer_dim();
    if (chars.size() != (std::size_t{1} << d)) {
      throw NotAHomomorphism("orbit " + std::to_string(o) + ": character table has the wrong size");
    }
    for (std::size_t s = 0; s < chars.size(); ++s) {
      for (std::size_t r = 0; r < chars.size(); ++r) {
        if (chars[s ^ r] != chars[s] * chars[r]) {
          throw NotAHomomorphism("orbit " + std::to_string(o) + ": character is not a homomorphism");
        }
      }
    }
    // Extend the stabilizer basis by unit vectors, lowest index first; the
    // lift is trivial on the added vectors.
    f2::EliminationBasis extended(g);
    auto to_bits = [g](CycleMask m) {
      f2::Bits bits(g);
      for (std::size_t i = 0; i < g; ++i) {
        if ((m >> i) & 1U) bits.set(i);
      }
      return bits;
    };
    for (auto m : orbit.stabilizer) extended.insert(to_bits(m));
    for (std::size_t i = 0; i < g; ++i) extended.insert(f2::Bits::unit(g, i));
    for (std::size_t b = 0; b < g; ++b) {
      const auto combo = extended.express(f2::Bits::unit(g, b));
      std::size_t subset = 0;
      for (auto slot : combo->ones()) {
        if (slot < d) subset |= std::size_t{1} << slot;
      }
      lift[o][b] = chars[subset];
    }
  }
  std::vector<CircleValue> values(g * space.size());
  for (std::size_t b = 0; b < g; ++b) {
    for (std::size_t w = 0; w < space.size(); ++w) values[b * space.size() + w] = lift[space.orbit_of(w)][b];
  }
  return {inv.space, std::move(values)};
}

TwoGroupOrder cohomology_group_order(const WeightSpace& space) {
  TwoGroupOrder order;
  for (const auto& orbit : space.orbits()) order.log2 += orbit.stabilizer_dim();
  return order;
}

TwoGroupOrder brute_force_class_count(const Graph& graph, Level level, const std::vector<int>& boundary,
                                      std::size_t cap) {
  const HomologyBasis basis(graph);
  const auto g = basis.rank();
  const auto weights = enumerate_admissible(graph, level, boundary);
  if (g >= 32 || (std::size_t{1} << g) * weights.size() > cap) {
    throw CapExceeded("2^g * |QCG| exceeds the oracle cap of " + std::to_string(cap));
  }
  std::unordered_map<WeightVector, std::size_t, WeightVectorHash> index;
  for (std::size_t i = 0; i < weights.size(); ++i) index.emplace(weights[i], i);
  std::vector<std::vector<std::size_t>> flip(g, std::vector<std::size_t>(weights.size()));
  for (std::size_t b = 0; b < g; ++b) {
    for (std::size_t w = 0; w < weights.size(); ++w) {
      flip[b][w] = index.at(act(basis.cycle(b), weights[w], level));
    }
  }

  // Components of the flip graph.
  std::vector<std::size_t> parent(weights.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t b = 0; b < g; ++b) {
    for (std::size_t w = 0; w < weights.size(); ++w) parent[find(w)] = find(flip[b][w]);
  }
  std::unordered_map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t w = 0; w < weights.size(); ++w) components[find(w)].push_back(w);

  TwoGroupOrder order;
  for (const auto& [root, members] : components) {
    const auto m = members.size();
    std::unordered_map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < m; ++i) local.emplace(members[i], i);
    const auto width = g * m;
    auto var = [&](std::size_t b, std::size_t w) { return b * m + local.at(w); };

    f2::EliminationBasis relations(width);
    for (auto w : members) {
      for (std::size_t b = 0; b < g; ++b) {
        f2::Bits square(width);
        square.flip(var(b, flip[b][w]));
        square.flip(var(b, w));
        relations.insert(square);
        for (std::size_t c = b + 1; c < g; ++c) {
          f2::Bits commute(width);
          commute.flip(var(c, flip[b][w]));
          commute.flip(var(b, w));
          commute.flip(var(b, flip[c][w]));
          commute.flip(var(c, w));
          relations.insert(commute);
        }
      }
    }
    const auto dim_cocycles = width - relations.rank();

    f2::EliminationBasis coboundaries(width);
    for (auto u : members) {
      f2::Bits image(width);
      for (auto w : members) {
        for (std::size_t b = 0; b < g; ++b) {
          if (flip[b][w] == u) image.flip(var(b, w));
          if (w == u) image.flip(var(b, w));
        }
      }
      coboundaries.insert(image);
    }
    order.log2 += dim_cocycles - coboundaries.rank();
  }
  return order;
}

void write_cocycle(std::ostream& out, const CocycleTable& t) {
  const auto& space = t.space();
  for (std::size_t b = 0; b < space.genus(); ++b) {
    const auto cycle = format_cycle(space.graph(), space.basis().cycle(b));
    for (std::size_t w = 0; w < space.size(); ++w) {
      out << "cocycle " << cycle << ' ' << w << ' ' << t.at(b, w) << '\n';
    }
  }
}

CocycleTable read_cocycle(std::istream& in, WeightSpacePtr space) {
  const auto g = space->genus();
  const auto n = space->size();
  std::vector<std::optional<CircleValue>> entries(g * n);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string keyword, cycle_text, value_text;
    std::size_t w = 0;
    if (!(fields >> keyword)) continue;
    if (keyword != "cocycle" || !(fields >> cycle_text >> w >> value_text)) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'cocycle <edges> <index> <p>/<q>'");
    }
    std::vector<std::string> ids;
    std::istringstream id_stream(cycle_text);
    for (std::string id; std::getline(id_stream, id, ',');) ids.push_back(id);
    const auto mask = space->basis().coordinates(Cycle::from_edge_ids(space->graph(), ids));
    if (mask == 0 || (mask & (mask - 1)) != 0 || space->basis().element(mask) != Cycle::from_edge_ids(space->graph(), ids)) {
      throw InputError("line " + std::to_string(line_no) + ": '" + cycle_text + "' is not a basis cycle");
    }
    if (w >= n) throw InputError("line " + std::to_string(line_no) + ": weight index out of range");
    std::size_t b = 0;
    while (((mask >> b) & 1U) == 0) ++b;
    entries[b * n + w] = CircleValue::parse(value_text);
  }
  std::vector<CircleValue> values;
  values.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i]) {
      throw IncompleteTable("missing entry for basis cycle " + std::to_string(i / (n == 0 ? 1 : n)) +
                            ", weight " + std::to_string(n == 0 ? 0 : i % n));
    }
    values.push_back(*entries[i]);
  }
  return {std::move(space), std::move(values)};
}

}  // namespace qcg
