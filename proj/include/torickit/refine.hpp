#pragma once

#include "torickit/citation.hpp"
#include "torickit/fan.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace torickit {

enum class StepKind { Stellar, Triangulation };

struct SubdivisionStep {
  StepKind kind = StepKind::Stellar;
  std::optional<IntVector> new_ray;
  std::vector<RaySet> before; ///< maximal cones removed
  std::vector<RaySet> after;  ///< maximal cones inserted

  friend bool operator==(const SubdivisionStep &, const SubdivisionStep &) = default;
};

struct Refinement {
  Fan fan;
  std::vector<SubdivisionStep> steps;
};

struct MarkedResolution {
  Fan fan;
  std::vector<SubdivisionStep> steps;
  /// Each marked cone with the index of the ray whose divisor lies over it.
  std::vector<std::pair<RaySet, std::size_t>> exceptional;
  std::vector<Citation> citations;
};

/// Star subdivision at a primitive vector v of the support. If v is already a
/// ray the fan is returned unchanged with an empty step.
std::pair<Fan, SubdivisionStep> stellar_subdivision(const Fan &fan, const IntVector &v);

/// Re-applies a recorded step.
Fan apply_step(const Fan &fan, const SubdivisionStep &step);

/// Placing triangulation (rays taken in index order) of every non-simplicial
/// maximal cone. No rays are added.
Refinement qfactorialize(const Fan &fan);

/// Nonzero lattice points sum l_i r_i with all l_i in [0,1), paired with l.
std::vector<std::pair<RatVector, IntVector>> parallelepiped_points(const std::vector<IntVector> &rays);

/// Repeated stellar subdivision of the worst cone until every cone is smooth.
Refinement resolve_to_smooth(const Fan &fan);

/// Marked cones must be full-dimensional maximal cones ("NotFixedPoint").
MarkedResolution resolve_marked(const Fan &fan, const std::vector<RaySet> &marked);

} // namespace torickit
