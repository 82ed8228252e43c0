#pragma once

#include "torickit/fan.hpp"
#include "torickit/lattice.hpp"
#include "torickit/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace torickit {

/// Presentation of the class group Z^rays / image(M). The free part pairs a
/// divisor with a basis of the ray relation lattice; torsion parts are SNF
/// rows read modulo their elementary divisor.
struct ClassGrading {
  IntegerMatrix relations;
  std::vector<IntVector> torsion_rows;
  IntVector torsion_orders;

  std::size_t free_rank() const { return relations.rows(); }
  /// Class of sum a_i D_i: free coordinates followed by torsion residues.
  IntVector degree(const IntVector &divisor) const;
  IntVector ray_degree(std::size_t ray) const;
};

ClassGrading class_grading(const Fan &fan);

/// Positive primitive relation among the rays of a Picard-rank-one fan.
IntVector wp_cover_weights(const Fan &fan);

/// Fan of the weighted projective space with the given weights; ray i is the
/// image of the i-th basis vector in Z^(n+1) / Z q.
Fan weighted_projective_fan(const IntVector &weights);

struct PointSpec {
  RatVector cox_coords;
  RaySet vanishing_pattern;

  friend bool operator==(const PointSpec &, const PointSpec &) = default;
};

/// Builds a point and checks that it lies outside the irrelevant locus;
/// throws "InvalidPoint".
PointSpec make_point(const Fan &fan, RatVector coords);
bool points_equal(const Fan &fan, const PointSpec &a, const PointSpec &b);

struct CoxCurve {
  Fan target;
  std::vector<BinaryForm> forms;
  /// Coordinates of the form-degree vector in the relation basis.
  IntVector degree_class;

  friend bool operator==(const CoxCurve &, const CoxCurve &) = default;
};

/// Nominal degree of the form on each ray (also defined for zero forms).
IntVector form_degrees(const CoxCurve &c);

struct CurveValidation {
  bool valid = true;
  std::vector<std::string> diagnostics;
};

CurveValidation validate_curve(const CoxCurve &c);
PointSpec evaluate_curve(const CoxCurve &c, const ParamPoint &param);

/// Interpolating curve of class d with F(params[i]) = points[i] exactly.
/// Needs d >= 1 and d + 1 >= #points ("DegreeTooSmall").
CoxCurve interpolate_through_points(const Fan &fan, const std::vector<PointSpec> &points,
                                    const std::vector<ParamPoint> &params, unsigned d, std::uint64_t seed);

/// Polynomial in Cox coordinates: exponent vector per term.
struct CoxTerm {
  std::vector<unsigned> exponents;
  Rational coefficient;

  friend bool operator==(const CoxTerm &, const CoxTerm &) = default;
};
using CoxPolynomial = std::vector<CoxTerm>;

struct Locus {
  std::string id;
  std::vector<CoxPolynomial> generators;

  friend bool operator==(const Locus &, const Locus &) = default;
};

/// V(x_i : i in cone), the closure of the orbit of the cone.
Locus orbit_locus(const Fan &fan, const RaySet &cone);
/// Zero set of linear forms sum_j rows[k][j] x_j.
Locus linear_locus(std::string id, const std::vector<RatVector> &rows);

struct Witness {
  std::string locus;
  /// Set for linear factors; otherwise `factor` is an irreducible factor of higher degree.
  std::optional<ParamPoint> param;
  BinaryForm factor;
  unsigned multiplicity = 1;
  /// The whole curve lies in the locus.
  bool whole_curve = false;
  bool allowed = false;

  friend bool operator==(const Witness &, const Witness &) = default;
};

struct AllowedPoint {
  ParamPoint param;
  PointSpec point;
};

struct AvoidanceReport {
  bool disjoint = true;
  std::vector<Witness> witnesses;

  std::vector<Witness> allowed_hits() const;
  friend bool operator==(const AvoidanceReport &, const AvoidanceReport &) = default;
};

BinaryForm pullback(const CoxCurve &c, const CoxPolynomial &p);
/// Throws "Inhomogeneous" for generators that are not homogeneous in the class grading.
AvoidanceReport avoidance_verify(const CoxCurve &c, const std::vector<Locus> &loci,
                                 const std::vector<AllowedPoint> &allowed = {});

/// Throws "CodimensionTooSmall" for a linear locus of codimension below two,
/// "AvoidanceRetryExceeded" when the attempt budget runs out.
CoxCurve interpolate_avoiding(const Fan &fan, const std::vector<PointSpec> &points,
                              const std::vector<ParamPoint> &params, const std::vector<Locus> &loci, unsigned d,
                              std::uint64_t seed);

inline constexpr unsigned kAttemptBudget = 8;

/// Reinterprets a curve on the weighted projective cover as a curve on a
/// rank-one target with the same weights; throws "GradingMismatch".
CoxCurve pushforward_rank_one(const CoxCurve &c, const Fan &target);

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace torickit
