#ifndef QCG_EXTERNAL_EDGE_HPP
#define QCG_EXTERNAL_EDGE_HPP

#include <string>
#include <vector>

#include "qcg/circle.hpp"
#include "qcg/cohomology.hpp"

namespace qcg {

/// exp(pi i * sum of j_l over the external edges of cycle), for a nonzero
/// cycle fixing w. Throws ZeroCycle or NotFixed.
CircleValue external_target(const Graph& graph, Level level, const WeightVector& w, const Cycle& cycle);
CircleValue external_target(const WeightSpace& space, std::size_t weight, CycleMask element);

struct ParityReport {
  bool ok = true;
  /// Empty when ok; otherwise the first failing pair and the reason.
  std::string counterexample;
};

/// For every pair l1, l2 in the stabilizer of the orbit representative:
///   sum_{Ex(l1+l2)} j == sum_{Ex(l1)} j + sum_{Ex(l2)} j  (mod 2),
/// with Ex(0) empty. Also checks that external_target(m, l) agrees with its
/// value at the representative for every orbit member m.
ParityReport check_parity_identity(const WeightSpace& space, std::size_t orbit);

/// Builds an external edge cocycle: stabilizer characters from
/// external_target at each orbit representative, lifted with
/// cocycle_from_characters. Throws ParityFailure if some orbit fails the
/// parity identity.
CocycleTable construct_external_cocycle(WeightSpacePtr space);

/// delta_w(l) == external_target(w, l) on every fixed pair with l != 0.
/// Throws NotACocycle.
bool satisfies_external_condition(const CocycleTable& t);

/// For a Gamma(n) graph with boundary j': the generator evaluates to
/// exp(pi i (j'_1 + ... + j'_n)) at j0 = (j', k/4, ..., k/4) and to 1
/// elsewhere. All-trivial when j0 is not admissible. Throws NotGammaN.
CocycleTable standard_gamma_n_cocycle(WeightSpacePtr space);

}  // namespace qcg

#endif  // QCG_EXTERNAL_EDGE_HPP
