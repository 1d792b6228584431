#pragma once

#include <vector>

#include "tordeg/flag/plucker.hpp"
#include "tordeg/tropfan/tropical.hpp"

namespace tordeg {

// Orbits of the signed symmetry group on the maximal cones of a fan of I_n, acting on initial
// ideals. Sets MaximalCone::orbit to the orbit index and returns the orbits in the order of
// orbit_decomposition.
std::vector<std::vector<size_t>> label_orbits(TropicalFan& fan, const PlueckerRing& pr);

// Index of the cone whose initial ideal equals the given ideal, if any.
std::optional<size_t> find_cone_by_initial_ideal(const TropicalFan& fan, const Ideal& initial);

}  // namespace tordeg
