#pragma once

#include "torickit/numeric.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace torickit {

/// Sorted set of indices into a fan's global ray list.
using RaySet = std::vector<std::size_t>;

/// A rational polyhedral cone given by its ray generators in Z^rank.
struct Cone {
  std::size_t rank = 0;
  std::vector<IntVector> rays;
};

/// A fan: a global list of primitive rays plus the maximal cones as ray-index
/// sets. Lower-dimensional cones are derived on demand.
struct Fan {
  std::size_t rank = 0;
  std::vector<IntVector> rays;
  std::vector<RaySet> max_cones;

  Cone cone(const RaySet &indices) const;

  friend bool operator==(const Fan &, const Fan &) = default;
};

struct OrbitDescriptor {
  RaySet cone;
  std::size_t orbit_dim = 0;
  bool is_singular = false;

  friend bool operator==(const OrbitDescriptor &, const OrbitDescriptor &) = default;
};

struct FanViolation {
  std::string kind; ///< e.g. "NonPrimitiveRay", "NotFaceIntersection"
  std::string detail;
};

struct ValidationReport {
  std::vector<FanViolation> violations;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate_fan(const Fan &fan);
/// Throws "InvalidFan" naming the first violation.
void require_valid_fan(const Fan &fan);

std::size_t cone_dimension(const Cone &cone);
bool is_simplicial_cone(const Cone &cone);
bool is_smooth_cone(const Cone &cone);
Integer cone_multiplicity(const Cone &cone);

/// Sub-sets of `cone`'s rays (as positions into cone.rays) that span faces,
/// including the empty face when the cone is strongly convex.
bool is_face(const Cone &cone, const std::vector<std::size_t> &positions);

/// Faces of a cone of the fan, as global ray-index sets (the cone itself and
/// the zero cone included).
std::vector<RaySet> cone_faces(const Fan &fan, const RaySet &cone);
std::vector<RaySet> cone_facets(const Fan &fan, const RaySet &cone);

/// Every cone of the fan, sorted and unique (the zero cone included).
std::vector<RaySet> all_cones(const Fan &fan);
bool fan_has_cone(const Fan &fan, const RaySet &cone);

bool is_complete(const Fan &fan);
bool is_simplicial(const Fan &fan);
bool is_smooth(const Fan &fan);
bool in_support(const Fan &fan, const IntVector &v);

/// Pairs of maximal cones sharing a codimension-one face.
struct Wall {
  std::size_t first;  ///< index into max_cones
  std::size_t second; ///< index into max_cones
  RaySet face;
};
std::vector<Wall> walls(const Fan &fan);

std::vector<OrbitDescriptor> list_orbits(const Fan &fan);
std::vector<OrbitDescriptor> codim2_orbits(const Fan &fan);
std::vector<RaySet> primitive_collections(const Fan &fan);

std::string format_ray_set(const RaySet &s);

} // namespace torickit
