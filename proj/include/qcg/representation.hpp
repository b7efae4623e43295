#ifndef QCG_REPRESENTATION_HPP
#define QCG_REPRESENTATION_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qcg/cohomology.hpp"

namespace qcg {

/// Monomial matrix on the basis |w> of admissible weights:
/// M|w> = scale[w] |target[w]>.
struct MonomialMatrix {
  std::vector<std::size_t> target;
  std::vector<CircleValue> scale;

  static MonomialMatrix identity(std::size_t n);
  static MonomialMatrix diagonal(const ZeroCochain& c);

  std::size_t dimension() const { return target.size(); }
  bool is_permutation() const;
  /// Exact trace. Throws NotACocycle if a diagonal entry is not +-1.
  std::int64_t trace() const;

  /// Matrix product (this * rhs): first rhs, then this.
  MonomialMatrix operator*(const MonomialMatrix& rhs) const;
  bool operator==(const MonomialMatrix&) const = default;
};

/// Rows "index → target, p/q".
void write_matrix(std::ostream& out, const MonomialMatrix& m);

/// rho(delta)(l)|w> = delta_w(l) |l.w>. Throws NotACocycle.
MonomialMatrix rep_matrix(const CocycleTable& t, CycleMask element);

/// Trace of rho(delta)(l): the sum of delta_w(l) over weights fixed by l.
std::int64_t character(const CocycleTable& t, CycleMask element);

/// phi_c rho(t1)(l) == rho(t2)(l) phi_c for every basis cycle l, where
/// phi_c|w> = c_w|w>; holds when t2 = t1 * coboundary_of(c). Also checks that
/// phi_c composed with phi_{c^-1} is the identity. False when either table is not
/// a cocycle.
bool verify_intertwiner(const CocycleTable& t1, const CocycleTable& t2, const ZeroCochain& c);

/// Character equality on all of H1.
bool reps_isomorphic(const CocycleTable& t1, const CocycleTable& t2);

}  // namespace qcg

#endif  // QCG_REPRESENTATION_HPP
