#pragma once

#include "torickit/fan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torickit {

/// sum_i d_i D_i, one coefficient per ray of the fan.
struct InvariantDivisor {
  RatVector coefficients;

  friend bool operator==(const InvariantDivisor &, const InvariantDivisor &) = default;
};

InvariantDivisor operator+(const InvariantDivisor &a, const InvariantDivisor &b);
InvariantDivisor operator-(const InvariantDivisor &a, const InvariantDivisor &b);
InvariantDivisor operator*(const Rational &s, const InvariantDivisor &d);

/// Local data: <m_sigma, e_i> = -d_i on the rays of each maximal cone.
struct CartierData {
  std::vector<RaySet> cones;
  std::vector<RatVector> m;
  bool integral = false; ///< every m_sigma integral, i.e. D is Cartier
};

/// Inequalities <m, e_i> + d_i >= 0.
struct DivisorPolytope {
  std::vector<IntVector> normals;
  RatVector offsets;
};

struct ScaledInteriorPoint {
  Integer k;
  IntVector u;
};

struct FTCertificate {
  Integer k;
  InvariantDivisor ample;    ///< k * L
  IntVector u;
  InvariantDivisor d_prime;  ///< div chi^u + k L, effective with full support
  Rational epsilon;
  InvariantDivisor boundary; ///< Sigma - epsilon * D'
};

struct KltReport {
  bool klt = false;
  std::optional<std::size_t> offending_ray;
};

struct FTVerification {
  bool klt = false;
  bool anti_log_canonical_ample = false;
  bool linearly_equivalent = false;
  bool ok() const { return klt && anti_log_canonical_ample && linearly_equivalent; }
};

InvariantDivisor canonical_divisor(const Fan &fan);
/// Sigma = sum of all invariant prime divisors.
InvariantDivisor boundary_sum(const Fan &fan);
InvariantDivisor div_chi(const Fan &fan, const IntVector &u);
InvariantDivisor div_chi(const Fan &fan, const RatVector &u);

std::optional<CartierData> try_cartier_data(const Fan &fan, const InvariantDivisor &d);
/// Throws "NotQCartier" naming the first cone without a solution.
CartierData cartier_data(const Fan &fan, const InvariantDivisor &d);
bool is_q_cartier(const Fan &fan, const InvariantDivisor &d);

/// Strict convexity of the support function across every wall. Requires a
/// complete fan ("NotComplete") and a Q-Cartier divisor ("NotQCartier").
bool is_ample(const Fan &fan, const InvariantDivisor &d);

DivisorPolytope divisor_polytope(const Fan &fan, const InvariantDivisor &d);
/// Vertices of a bounded polytope; empty when there are none.
std::vector<RatVector> polytope_vertices(const DivisorPolytope &p);
/// Smallest k <= bound with an interior lattice point of k * P, then the
/// lexicographically smallest such point. Throws "NoInteriorPoint".
ScaledInteriorPoint interior_point_with_scaling(const DivisorPolytope &p);
std::size_t interior_search_bound(std::size_t rank);

/// Throws "NotAmple".
FTCertificate ft_certificate(const Fan &fan, const InvariantDivisor &l);
FTVerification verify_ft_certificate(const Fan &fan, const FTCertificate &cert);

/// Throws "NotEffective" on a negative coefficient and "NotQCartier" when
/// K + boundary is not Q-Cartier.
KltReport klt_check(const Fan &fan, const InvariantDivisor &boundary);

/// Q-linear equivalence: d1 - d2 = div chi^u for a rational u.
bool linear_equivalence(const Fan &fan, const InvariantDivisor &d1, const InvariantDivisor &d2);

/// Pullback of a Q-Cartier divisor along a refinement of `coarse` (same support,
/// rays of `coarse` kept by value).
InvariantDivisor pullback_divisor(const Fan &coarse, const Fan &fine, const InvariantDivisor &d);

} // namespace torickit
