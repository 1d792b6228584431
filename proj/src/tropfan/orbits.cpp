#include "tordeg/tropfan/orbits.hpp"

#include "tordeg/poly/ideal_ops.hpp"

namespace tordeg {

std::vector<std::vector<size_t>> label_orbits(TropicalFan& fan, const PlueckerRing& pr) {
  std::vector<std::string> keys;
  for (const auto& c : fan.cones) keys.push_back(c.key);
  auto orbits = orbit_decomposition(keys, symmetry_group(pr.n), [&](size_t i, const SignedSymmetry& g) {
    return canonical_text(apply_symmetry(g, pr, fan.cones[i].initial));
  });
  for (size_t o = 0; o < orbits.size(); ++o)
    for (size_t i : orbits[o]) fan.cones[i].orbit = static_cast<int>(o);
  return orbits;
}

std::optional<size_t> find_cone_by_initial_ideal(const TropicalFan& fan, const Ideal& initial) {
  for (size_t i = 0; i < fan.cones.size(); ++i)
    if (ideals_equal(fan.cones[i].initial, initial)) return i;
  return std::nullopt;
}

}  // namespace tordeg
