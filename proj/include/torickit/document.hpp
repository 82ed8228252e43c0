#pragma once

#include "torickit/curve.hpp"
#include "torickit/divisor.hpp"
#include "torickit/fan.hpp"
#include "torickit/isogeny.hpp"
#include "torickit/plan.hpp"
#include "torickit/refine.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace torickit {

using Json = nlohmann::json;

inline constexpr const char *kToolkitVersion = "torickit 0.1.0";

/// kind is one of fan, divisor, isogeny, curve, ideal, certificate, plan, report.
struct Document {
  std::string kind;
  Json payload;
};

const std::vector<std::string> &document_kinds();

/// Canonical form: sorted keys, no whitespace.
std::string emit(const Document &doc);

/// Parses an envelope {"kind","version","payload"}. When `expected_kind` is
/// given a bare payload is accepted too. Errors: "ParseError" (with line and
/// column), "MalformedDocument", "WrongKind", "UnsupportedVersion".
Document parse_document(std::string_view text, const std::optional<std::string> &expected_kind = std::nullopt);

Json encode(const Fan &fan);
Fan decode_fan(const Json &j);

Json encode(const InvariantDivisor &d);
InvariantDivisor decode_divisor(const Json &j);

Json encode(const Isogeny &iso);
Isogeny decode_isogeny(const Json &j);

Json encode(const PointSpec &p);
PointSpec decode_point(const Json &j);

Json encode(const BinaryForm &f);
BinaryForm decode_form(const Json &j);

Json encode(const CoxCurve &c);
CoxCurve decode_curve(const Json &j);

/// Ideal documents: loci whose generators are lists of monomial terms over
/// variables x0, x1, ... named after the rays.
Json encode_ideal(const std::vector<Locus> &loci, std::size_t variables);
std::vector<Locus> decode_ideal(const Json &j);

struct CertificateRecord {
  Fan fan;
  InvariantDivisor l;
  FTCertificate certificate;
  FTVerification checks;
};
Json encode(const CertificateRecord &c);
CertificateRecord decode_certificate(const Json &j);

Json encode(const AvoidancePlan &plan);
AvoidancePlan decode_main_lemma_plan(const Json &j);
Json encode(const MainTheoremPlan &plan);
MainTheoremPlan decode_main_theorem_plan(const Json &j);

/// Reports carry a "type": validation, orbits, refinement, marked-resolution,
/// avoidance or curve-validation.
Json encode(const ValidationReport &r);
ValidationReport decode_validation_report(const Json &j);
Json encode_orbits(const std::vector<OrbitDescriptor> &orbits);
std::vector<OrbitDescriptor> decode_orbits(const Json &j);
Json encode(const Refinement &r);
Refinement decode_refinement(const Json &j);
Json encode(const MarkedResolution &r);
MarkedResolution decode_marked_resolution(const Json &j);
Json encode(const AvoidanceReport &r);
AvoidanceReport decode_avoidance_report(const Json &j);
Json encode(const CurveValidation &r);
CurveValidation decode_curve_validation(const Json &j);

} // namespace torickit
