#pragma once

#include <cstdint>
#include <vector>

#include "morphdet/decomposition.hpp"
#include "morphdet/homology.hpp"

namespace morphdet {

/// 0 -> tau(n) -> middle -> n -> 0, non-split and almost split.
struct ArSequence {
  Ses ses;
};

ArSequence ar_sequence(const Rep& n, std::uint64_t seed = 0);
/// Inclusion rad n -> n for projective n, else the surjection of ar_sequence(n).
RepMorphism minimal_right_almost_split(const Rep& n, std::uint64_t seed = 0);

/// rad(u, n) inside HomSpace(u, n) coordinates: maps h with g h in rad End(u)
/// for every g: n -> u.
Subspace radical_maps(const HomSpace& h);

/// Every radical map from a universe member into the right term lifts
/// through the surjection.
bool verify_almost_split(const ArSequence& seq, const std::vector<Rep>& universe);

}  // namespace morphdet
