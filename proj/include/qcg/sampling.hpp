#ifndef QCG_SAMPLING_HPP
#define QCG_SAMPLING_HPP

#include <random>

#include "qcg/cohomology.hpp"

namespace qcg {

/// Random torsion 0-cochain with value orders dividing some q in [1, max_order].
ZeroCochain random_cochain(WeightSpacePtr space, std::mt19937_64& rng, int max_order = 12);

/// Random sign characters: each orbit's character is fixed by independent
/// signs on its stabilizer basis.
CohomologyInvariant random_invariant(WeightSpacePtr space, std::mt19937_64& rng);

/// Character of orbit o that is -1 exactly on elements involving stabilizer
/// basis vector i, trivial on every other orbit.
CohomologyInvariant elementary_invariant(WeightSpacePtr space, std::size_t orbit, std::size_t basis_vector);

/// Sign characters; negated[o][i] marks stabilizer basis vector i of orbit o
/// as sent to -1.
CohomologyInvariant invariant_from_signs(WeightSpacePtr space, const std::vector<std::vector<bool>>& negated);

}  // namespace qcg

#endif  // QCG_SAMPLING_HPP
