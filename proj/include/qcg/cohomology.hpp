#ifndef QCG_COHOMOLOGY_HPP
#define QCG_COHOMOLOGY_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcg/circle.hpp"
#include "qcg/weights.hpp"

namespace qcg {

/// A 0-cochain c = (c_j) in A = (Q/Z)^QCG.
class ZeroCochain {
 public:
  ZeroCochain(WeightSpacePtr space, std::vector<CircleValue> values);
  static ZeroCochain constant(WeightSpacePtr space, CircleValue value = CircleValue::one());

  const WeightSpace& space() const { return *space_; }
  const WeightSpacePtr& space_ptr() const { return space_; }
  const std::vector<CircleValue>& values() const { return values_; }
  const CircleValue& operator[](std::size_t w) const { return values_[w]; }

  ZeroCochain operator*(const ZeroCochain& other) const;
  ZeroCochain inverse() const;
  bool operator==(const ZeroCochain& other) const { return values_ == other.values_; }

 private:
  WeightSpacePtr space_;
  std::vector<CircleValue> values_;
};

/// A twisted 1-cochain delta stored on the homology basis: at(b, w) is
/// delta_w(basis cycle b). Other group elements are reached through
///   delta_w(l + l') = delta_w(l) * delta_{l.w}(l').
class CocycleTable {
 public:
  /// values is indexed [basis * size + weight]. Throws IncompleteTable when
  /// the length does not match.
  CocycleTable(WeightSpacePtr space, std::vector<CircleValue> values);
  static CocycleTable trivial(WeightSpacePtr space);

  const WeightSpace& space() const { return *space_; }
  const WeightSpacePtr& space_ptr() const { return space_; }
  const std::vector<CircleValue>& values() const { return values_; }

  const CircleValue& at(std::size_t basis, std::size_t weight) const {
    return values_[basis * space_->size() + weight];
  }
  CircleValue evaluate(CycleMask element, std::size_t weight) const;

  CocycleTable operator*(const CocycleTable& other) const;
  CocycleTable inverse() const;
  bool operator==(const CocycleTable& other) const { return values_ == other.values_; }

 private:
  WeightSpacePtr space_;
  std::vector<CircleValue> values_;
};

/// Per-orbit restriction of a cocycle to the stabilizer of the orbit
/// representative: characters[o][s] is the value at Orbit::stabilizer_element(s).
struct CohomologyInvariant {
  WeightSpacePtr space;
  std::vector<std::vector<CircleValue>> characters;

  bool is_trivial() const;
  bool operator==(const CohomologyInvariant& other) const { return characters == other.characters; }
};

/// Order of a cohomology group that is a product of copies of Z2, kept as an
/// exponent so that it never overflows.
struct TwoGroupOrder {
  std::size_t log2 = 0;
  std::string decimal() const;
  bool operator==(const TwoGroupOrder&) const = default;
};

/// Checks the defining relations of Z2^g on basis pairs:
///   delta_{l.w}(l') delta_w(l) = delta_{l'.w}(l) delta_w(l'),
///   delta_{l.w}(l) delta_w(l) = 1.
bool is_twisted_cocycle(const CocycleTable& t);

/// (dc)_w(l) = c_{l.w} / c_w.
CocycleTable coboundary_of(const ZeroCochain& c);

/// True iff delta_w(l) = 1 for every fixed pair l.w = w, with l
/// ranging over the stabilizer of w. Throws NotACocycle.
bool is_coboundary(const CocycleTable& t);

/// c with coboundary_of(c) == t: c = 1 on each orbit representative and
/// c_{l.rep} = delta_rep(l), built along a spanning tree of each orbit and
/// then checked. Throws NotACocycle or NotACoboundary.
ZeroCochain cobounding_chain(const CocycleTable& t);

/// Throws NotACocycle.
CohomologyInvariant cohomology_invariant(const CocycleTable& t);

/// Lifts per-orbit stabilizer characters to a cocycle constant along orbits.
/// Throws NotAHomomorphism.
CocycleTable cocycle_from_characters(const CohomologyInvariant& inv);

/// Product over orbits of 2^(stabilizer dimension).
TwoGroupOrder cohomology_group_order(const WeightSpace& space);

/// Independent count of cohomology classes of sign-valued cocycles: over each
/// connected component of the flip graph, dim Z1 - dim B1 computed by F2
/// elimination on the raw cocycle equations and coboundary images. Uses
/// neither orbits nor stabilizers. Throws CapExceeded when 2^g * |QCG| > cap.
TwoGroupOrder brute_force_class_count(const Graph& graph, Level level, const std::vector<int>& boundary,
                                      std::size_t cap = 1'000'000);

/// Serialization: one line per entry,
///   cocycle <basis cycle edge ids> <weight index> <p>/<q>
void write_cocycle(std::ostream& out, const CocycleTable& t);
/// Reads the lines written by write_cocycle; throws IncompleteTable when an
/// entry is missing and InputError on malformed lines.
CocycleTable read_cocycle(std::istream& in, WeightSpacePtr space);

}  // namespace qcg

#endif  // QCG_COHOMOLOGY_HPP
