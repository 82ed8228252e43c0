#pragma once

#include "torickit/fan.hpp"
#include "torickit/lattice.hpp"

#include <utility>
#include <vector>

namespace torickit {

/// A finite toric morphism X(source, fan) -> X(ambient, fan). Both lattices are
/// stored in global Z^n coordinates; the fan's rays live in the same real space.
struct Isogeny {
  Fan fan;
  SublatticeBasis ambient;
  SublatticeBasis source;
  Integer degree; ///< [ambient : source]
};

struct IsogenyChain {
  std::vector<Isogeny> steps;
  Integer composite_index = 1;
};

Isogeny identity_isogeny(const Fan &fan);
Isogeny identity_isogeny(const Fan &fan, const SublatticeBasis &lattice);

/// Validates that source is a full-rank sublattice of ambient; throws
/// "InfiniteIndex" or "NotASublattice".
Isogeny make_isogeny(const Fan &fan, const SublatticeBasis &source);
Isogeny make_isogeny(const Fan &fan, const SublatticeBasis &ambient, const SublatticeBasis &source);

/// Exponent of ambient/source: least r with r * ambient inside source.
Integer isogeny_exponent(const Isogeny &iso);

/// Isogeny whose source is r * ambient inside the old source.
Isogeny reverse_isogeny(const Isogeny &iso);

/// N' = Z<primitive generators of sigma> + W inside `ambient`, with W a
/// complement of the saturated span of sigma.
Isogeny smoothing_isogeny(const Fan &fan, const RaySet &sigma);
Isogeny smoothing_isogeny(const Fan &fan, const RaySet &sigma, const SublatticeBasis &ambient);

/// The fan's rays written in coordinates of `lattice`, primitivized there.
Fan fan_in_lattice(const Fan &fan, const SublatticeBasis &lattice);

Fan pullback_fan(const Isogeny &iso);

/// Orbits of the target paired with orbits of the source, cone by cone.
std::vector<std::pair<OrbitDescriptor, OrbitDescriptor>> orbit_bijection(const Isogeny &iso);

IsogenyChain make_chain(std::vector<Isogeny> steps);
/// Throws "EmptyChain" or "NotComposable".
Isogeny compose(const IsogenyChain &chain);

} // namespace torickit
