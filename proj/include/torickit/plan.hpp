#pragma once

#include "torickit/citation.hpp"
#include "torickit/curve.hpp"
#include "torickit/isogeny.hpp"
#include "torickit/refine.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace torickit {

/// "verified" steps are carried out and re-checkable; "cited" ones are relied upon.
struct PlanStep {
  std::string id;
  std::string kind;
  std::string summary;
  std::optional<std::string> citation;

  friend bool operator==(const PlanStep &, const PlanStep &) = default;
};

/// One induction stage: the orbit being made avoidable, the smoothing isogeny
/// used for it (index into the chain, absent when its cone is already smooth)
/// and the closed set Z of the orbits still to come.
struct OrbitStage {
  OrbitDescriptor orbit;
  std::optional<std::size_t> isogeny;
  std::vector<RaySet> z;

  friend bool operator==(const OrbitStage &, const OrbitStage &) = default;
};

struct AvoidancePlan {
  Fan input;
  PointSpec p;
  PointSpec q;
  bool s_invariant = true;
  Refinement qfactorialization;
  std::vector<OrbitDescriptor> orbits;
  IsogenyChain chain;
  std::vector<OrbitStage> stages;
  std::vector<PlanStep> steps;
  std::vector<Citation> citations;
};

/// Loci whose generators are all monomials are torus invariant.
bool is_invariant(const std::vector<Locus> &s);

/// Throws "PointsNotDistinct" for P = Q and "NotComplete" / "InvalidFan" for bad fans.
AvoidancePlan main_lemma_plan(const Fan &fan, const PointSpec &p, const PointSpec &q, const std::vector<Locus> &s);

struct PlanReplay {
  bool qfactorialization_reproduced = false;
  bool simplicial = false;
  bool chain_smooths_cones = false;
  bool orbit_order = false;
  bool citations_complete = false;
  bool ok() const {
    return qfactorialization_reproduced && simplicial && chain_smooths_cones && orbit_order && citations_complete;
  }
};

PlanReplay replay(const AvoidancePlan &plan);

struct PointClass {
  std::size_t point = 0;
  RaySet cone;
  bool smooth = true;
  bool marked = false;

  friend bool operator==(const PointClass &, const PointClass &) = default;
};

struct BranchSlot {
  std::size_t point = 0;
  std::string parameter;
  bool on_resolution = false;

  friend bool operator==(const BranchSlot &, const BranchSlot &) = default;
};

struct MainTheoremPlan {
  Fan input;
  std::vector<PointSpec> points;
  std::vector<Locus> s;
  std::uint64_t seed = 0;
  std::vector<PointClass> classes;
  std::optional<MarkedResolution> resolution;
  std::vector<BranchSlot> branches;
  std::vector<ParamPoint> params;
  std::optional<CoxCurve> curve;
  std::optional<AvoidanceReport> curve_report;
  std::vector<PlanStep> steps;
  std::vector<Citation> citations;
};

/// (1:0), (0:1), (1:1), (1:2), ...
std::vector<ParamPoint> standard_parameters(std::size_t r);

/// Throws "ToroidalizationOutOfScope" for a singular point that is not torus fixed.
MainTheoremPlan main_theorem_plan(const Fan &fan, const std::vector<PointSpec> &points, const std::vector<Locus> &s,
                                  std::uint64_t seed);

} // namespace torickit
