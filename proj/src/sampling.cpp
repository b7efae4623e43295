#include "qcg/sampling.hpp"

#include "qcg/errors.hpp"

namespace qcg {

ZeroCochain random_cochain(WeightSpacePtr space, std::mt19937_64& rng, int max_order) {
  std::uniform_int_distribution<int> order(1, max_order);
  std::vector<CircleValue> values;
  values.reserve(space->size());
  for (std::size_t w = 0; w < space->size(); ++w) {
    const int q = order(rng);
    values.emplace_back(std::uniform_int_distribution<int>(0, q - 1)(rng), q);
  }
  return {std::move(space), std::move(values)};
}

CohomologyInvariant invariant_from_signs(WeightSpacePtr space, const std::vector<std::vector<bool>>& negated) {
  CohomologyInvariant inv{space, {}};
  const auto& orbits = space->orbits();
  if (negated.size() != orbits.size()) throw InputError("one sign list per orbit expected");
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const auto d = orbits[o].stabilizer_dim();
    if (negated[o].size() != d) throw InputError("one sign per stabilizer basis vector expected");
    std::vector<CircleValue> chars(std::size_t{1} << d);
    for (std::size_t s = 0; s < chars.size(); ++s) {
      int parity = 0;
      for (std::size_t i = 0; i < d; ++i) {
        if (((s >> i) & 1U) && negated[o][i]) parity ^= 1;
      }
      chars[s] = CircleValue::sign(parity);
    }
    inv.characters.push_back(std::move(chars));
  }
  return inv;
}

CohomologyInvariant random_invariant(WeightSpacePtr space, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::vector<bool>> negated;
  for (const auto& orbit : space->orbits()) {
    std::vector<bool> signs(orbit.stabilizer_dim());
    for (std::size_t i = 0; i < signs.size(); ++i) signs[i] = coin(rng);
    negated.push_back(std::move(signs));
  }
  return invariant_from_signs(std::move(space), negated);
}

CohomologyInvariant elementary_invariant(WeightSpacePtr space, std::size_t orbit, std::size_t basis_vector) {
  std::vector<std::vector<bool>> negated;
  for (const auto& o : space->orbits()) negated.emplace_back(o.stabilizer_dim(), false);
  negated.at(orbit).at(basis_vector) = true;
  return invariant_from_signs(std::move(space), negated);
}

}  // namespace qcg
