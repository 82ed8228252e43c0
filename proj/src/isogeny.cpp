#include "torickit/isogeny.hpp"

#include "torickit/errors.hpp"

#include <algorithm>

namespace torickit {

namespace {

// source basis rows in the coordinates of ambient
IntegerMatrix relative_basis(const SublatticeBasis &ambient, const SublatticeBasis &source) {
  std::vector<IntVector> rows;
  for (const auto &g : source.basis().row_vectors())
    rows.push_back(sublattice_coordinates(g, ambient));
  return IntegerMatrix::from_rows(rows, ambient.ambient_rank());
}

SublatticeBasis from_relative(const SublatticeBasis &ambient, const IntegerMatrix &coords) {
  return SublatticeBasis(ambient.ambient_rank(), coords * ambient.basis());
}

} // namespace

Isogeny identity_isogeny(const Fan &fan) { return identity_isogeny(fan, SublatticeBasis::standard(fan.rank)); }

Isogeny identity_isogeny(const Fan &fan, const SublatticeBasis &lattice) { return {fan, lattice, lattice, Integer(1)}; }

Isogeny make_isogeny(const Fan &fan, const SublatticeBasis &source) {
  return make_isogeny(fan, SublatticeBasis::standard(fan.rank), source);
}

Isogeny make_isogeny(const Fan &fan, const SublatticeBasis &ambient, const SublatticeBasis &source) {
  if (ambient.ambient_rank() != fan.rank || source.ambient_rank() != fan.rank)
    throw ToricError("DimensionMismatch", "lattice rank differs from fan rank");
  if (!ambient.full_rank() || !source.full_rank())
    throw ToricError("InfiniteIndex", "isogeny lattices must have full rank");
  for (const auto &g : source.basis().row_vectors())
    if (!member_of_sublattice(g, ambient))
      throw ToricError("NotASublattice", "generator " + format_vector(g) + " is outside the target lattice");
  Integer degree = sublattice_index(source) / sublattice_index(ambient);
  return {fan, ambient, source, degree};
}

Integer isogeny_exponent(const Isogeny &iso) {
  return exponent_bound(SublatticeBasis(iso.fan.rank, relative_basis(iso.ambient, iso.source)));
}

Isogeny reverse_isogeny(const Isogeny &iso) {
  Integer r = isogeny_exponent(iso);
  return make_isogeny(iso.fan, iso.source, iso.ambient.scaled(r));
}

Fan fan_in_lattice(const Fan &fan, const SublatticeBasis &lattice) {
  Fan out = fan;
  for (auto &ray : out.rays)
    ray = primitive_integer_multiple(rational_coordinates(ray, lattice));
  return out;
}

Isogeny smoothing_isogeny(const Fan &fan, const RaySet &sigma) {
  return smoothing_isogeny(fan, sigma, SublatticeBasis::standard(fan.rank));
}

Isogeny smoothing_isogeny(const Fan &fan, const RaySet &sigma, const SublatticeBasis &ambient) {
  if (!fan_has_cone(fan, sigma))
    throw ToricError("NotACone", format_ray_set(sigma) + " is not a cone of the fan");
  if (!is_simplicial(fan))
    throw ToricError("NotSimplicial", "smoothing needs a simplicial fan");
  Fan local = fan_in_lattice(fan, ambient);
  if (is_smooth_cone(local.cone(sigma)))
    return identity_isogeny(fan, ambient);

  std::vector<IntVector> gens;
  for (std::size_t i : sigma)
    gens.push_back(local.rays[i]);
  IntegerMatrix g = IntegerMatrix::from_rows(gens, fan.rank);
  SaturationSplit split = saturation_with_complement(g);
  std::vector<IntVector> rows = gens;
  for (const auto &w : split.complement.row_vectors())
    rows.push_back(w);
  SublatticeBasis source = from_relative(ambient, IntegerMatrix::from_rows(rows, fan.rank));
  return make_isogeny(fan, ambient, source);
}

Fan pullback_fan(const Isogeny &iso) { return fan_in_lattice(iso.fan, iso.source); }

std::vector<std::pair<OrbitDescriptor, OrbitDescriptor>> orbit_bijection(const Isogeny &iso) {
  auto target = list_orbits(fan_in_lattice(iso.fan, iso.ambient));
  auto source = list_orbits(pullback_fan(iso));
  std::vector<std::pair<OrbitDescriptor, OrbitDescriptor>> out;
  for (const auto &t : target) {
    auto it = std::find_if(source.begin(), source.end(), [&](const OrbitDescriptor &s) { return s.cone == t.cone; });
    if (it == source.end())
      throw ToricError("Internal", "orbit " + format_ray_set(t.cone) + " has no partner");
    out.emplace_back(t, *it);
  }
  return out;
}

IsogenyChain make_chain(std::vector<Isogeny> steps) {
  IsogenyChain chain;
  chain.steps = std::move(steps);
  for (const auto &s : chain.steps)
    chain.composite_index *= s.degree;
  return chain;
}

Isogeny compose(const IsogenyChain &chain) {
  if (chain.steps.empty())
    throw ToricError("EmptyChain", "nothing to compose");
  for (std::size_t i = 1; i < chain.steps.size(); ++i) {
    const Isogeny &prev = chain.steps[i - 1];
    const Isogeny &next = chain.steps[i];
    if (!(next.ambient == prev.source) || !(next.fan == prev.fan))
      throw ToricError("NotComposable", "step " + std::to_string(i) + " does not start where step " +
                                            std::to_string(i - 1) + " ends");
  }
  Isogeny out = make_isogeny(chain.steps.front().fan, chain.steps.front().ambient, chain.steps.back().source);
  return out;
}

} // namespace torickit
