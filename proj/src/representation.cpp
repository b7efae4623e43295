#include "qcg/representation.hpp"

#include <numeric>
#include <ostream>

#include "qcg/errors.hpp"

namespace qcg {

MonomialMatrix MonomialMatrix::identity(std::size_t n) {
  MonomialMatrix m;
  m.target.resize(n);
  std::iota(m.target.begin(), m.target.end(), 0);
  m.scale.assign(n, CircleValue::one());
  return m;
}

MonomialMatrix MonomialMatrix::diagonal(const ZeroCochain& c) {
  auto m = identity(c.values().size());
  m.scale = c.values();
  return m;
}

bool MonomialMatrix::is_permutation() const {
  std::vector<bool> hit(target.size(), false);
  for (auto t : target) {
    if (t >= target.size() || hit[t]) return false;
    hit[t] = true;
  }
  return true;
}

std::int64_t MonomialMatrix::trace() const {
  std::int64_t sum = 0;
  for (std::size_t w = 0; w < target.size(); ++w) {
    if (target[w] != w) continue;
    if (scale[w].is_one()) {
      ++sum;
    } else if (scale[w] == CircleValue::minus_one()) {
      --sum;
    } else {
      throw NotACocycle("fixed-pair value " + scale[w].to_string() + " is not a sign");
    }
  }
  return sum;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& rhs) const {
  if (rhs.dimension() != dimension()) throw InputError("monomial matrix dimensions differ");
  MonomialMatrix out;
  out.target.resize(dimension());
  out.scale.resize(dimension());
  for (std::size_t w = 0; w < dimension(); ++w) {
    const auto mid = rhs.target[w];
    out.target[w] = target[mid];
    out.scale[w] = rhs.scale[w] * scale[mid];
  }
  return out;
}

void write_matrix(std::ostream& out, const MonomialMatrix& m) {
  for (std::size_t w = 0; w < m.dimension(); ++w) {
    out << w << " → " << m.target[w] << ", " << m.scale[w] << '\n';
  }
}

namespace {

MonomialMatrix unchecked_rep_matrix(const CocycleTable& t, CycleMask element) {
  const auto& space = t.space();
  MonomialMatrix m;
  m.target.resize(space.size());
  m.scale.resize(space.size());
  for (std::size_t w = 0; w < space.size(); ++w) {
    m.target[w] = space.act(element, w);
    m.scale[w] = t.evaluate(element, w);
  }
  return m;
}

}  // namespace

MonomialMatrix rep_matrix(const CocycleTable& t, CycleMask element) {
  if (!is_twisted_cocycle(t)) throw NotACocycle("table violates the twisted cocycle relations");
  return unchecked_rep_matrix(t, element);
}

std::int64_t character(const CocycleTable& t, CycleMask element) {
  const auto& space = t.space();
  MonomialMatrix fixed;
  for (std::size_t w = 0; w < space.size(); ++w) {
    if (space.fixes(element, w)) {
      fixed.target.push_back(fixed.target.size());
      fixed.scale.push_back(t.evaluate(element, w));
    }
  }
  return fixed.trace();
}

bool verify_intertwiner(const CocycleTable& t1, const CocycleTable& t2, const ZeroCochain& c) {
  if (!is_twisted_cocycle(t1) || !is_twisted_cocycle(t2)) return false;
  const auto phi = MonomialMatrix::diagonal(c);
  const auto phi_inverse = MonomialMatrix::diagonal(c.inverse());
  if (phi * phi_inverse != MonomialMatrix::identity(phi.dimension())) return false;
  for (std::size_t b = 0; b < t1.space().genus(); ++b) {
    const CycleMask l = CycleMask{1} << b;
    if (phi * unchecked_rep_matrix(t1, l) != unchecked_rep_matrix(t2, l) * phi) return false;
  }
  return true;
}

bool reps_isomorphic(const CocycleTable& t1, const CocycleTable& t2) {
  if (t1.space().size() != t2.space().size() || t1.space().genus() != t2.space().genus()) return false;
  const CycleMask order = t1.space().basis().group_order();
  for (CycleMask l = 0; l < order; ++l) {
    if (character(t1, l) != character(t2, l)) return false;
  }
  return true;
}

}  // namespace qcg
