#include "torickit/curve.hpp"

#include "torickit/errors.hpp"
#include "torickit/linalg.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace torickit {

namespace {

Rational rational_power(const Rational &base, const Integer &exponent) {
  Rational b = exponent < 0 ? Rational(1) / base : base;
  unsigned long e = Integer(abs(exponent)).get_ui();
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

bool contained_in_some_cone(const Fan &fan, const RaySet &pattern) {
  return std::any_of(fan.max_cones.begin(), fan.max_cones.end(), [&](const RaySet &c) {
    return std::includes(c.begin(), c.end(), pattern.begin(), pattern.end());
  });
}

// linear form vanishing at p
BinaryForm vanishing_form(const ParamPoint &p) {
  if (p.s == 0)
    return BinaryForm(1, {1, 0});
  return BinaryForm(1, {-p.t, 1});
}

// linear form equal to 1 at the normalized representative of p
BinaryForm unit_form(const ParamPoint &p) {
  if (p.s == 0)
    return BinaryForm(1, {0, 1});
  return BinaryForm(1, {1, 0});
}

Integer relation_sign(const Fan &fan) {
  ClassGrading g = class_grading(fan);
  return g.relations(0, 0) > 0 ? Integer(1) : Integer(-1);
}

void check_interpolation_input(const Fan &fan, const std::vector<PointSpec> &points,
                               const std::vector<ParamPoint> &params, unsigned d) {
  if (points.size() != params.size())
    throw ToricError("DimensionMismatch", std::to_string(points.size()) + " points but " +
                                              std::to_string(params.size()) + " parameters");
  if (d == 0 || d + 1 < points.size())
    throw ToricError("DegreeTooSmall", "degree " + std::to_string(d) + " cannot pass through " +
                                           std::to_string(points.size()) + " points");
  for (const auto &p : points)
    make_point(fan, p.cox_coords);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points_equal(fan, points[i], points[j]))
        throw ToricError("PointsNotDistinct", "points " + std::to_string(i) + " and " + std::to_string(j) +
                                                  " coincide");
      if (params[i] == params[j])
        throw ToricError("ParamsNotDistinct", "parameters " + std::to_string(i) + " and " + std::to_string(j) +
                                                  " coincide");
    }
}

// F_j = G_j + sum_i (P_ij - G_j(t_i)) l_i with G_j drawn at random.
CoxCurve draw_interpolant(const Fan &fan, const IntVector &weights, const std::vector<PointSpec> &points,
                          const std::vector<ParamPoint> &params, unsigned d, std::uint64_t seed, long bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-bound, bound);
  const std::size_t r = points.size();
  CoxCurve c;
  c.target = fan;
  c.degree_class = {Integer(static_cast<long>(d)) * relation_sign(fan)};
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const unsigned deg = d * static_cast<unsigned>(weights[j].get_ui());
    RatVector g(deg + 1);
    for (auto &x : g)
      x = Rational(coef(rng));
    BinaryForm form(deg, g);
    BinaryForm base = form;
    for (std::size_t i = 0; i < r; ++i) {
      BinaryForm l = BinaryForm::constant(1);
      for (std::size_t k = 0; k < r; ++k)
        if (k != i)
          l = l * vanishing_form(params[k]);
      l = l * pow(unit_form(params[i]), deg - static_cast<unsigned>(r - 1));
      Rational scale = (points[i].cox_coords[j] - base.evaluate(params[i])) / l.evaluate(params[i]);
      form = form + scale * l;
    }
    c.forms.push_back(form);
  }
  return c;
}

std::string describe(const AvoidanceReport &report) {
  std::ostringstream os;
  for (const auto &w : report.witnesses) {
    if (w.allowed)
      continue;
    os << " " << w.locus << "@";
    if (w.whole_curve)
      os << "curve";
    else if (w.param)
      os << to_string(*w.param);
    else
      os << "[" << to_string(w.factor) << "]";
  }
  return os.str();
}

} // namespace

IntVector ClassGrading::degree(const IntVector &divisor) const {
  IntVector out;
  for (std::size_t k = 0; k < relations.rows(); ++k)
    out.push_back(dot(relations.row(k), divisor));
  for (std::size_t k = 0; k < torsion_rows.size(); ++k) {
    Integer v = dot(torsion_rows[k], divisor) % torsion_orders[k];
    if (v < 0)
      v += torsion_orders[k];
    out.push_back(v);
  }
  return out;
}

IntVector ClassGrading::ray_degree(std::size_t ray) const {
  std::size_t n = relations.cols();
  if (n == 0 && !torsion_rows.empty())
    n = torsion_rows.front().size();
  IntVector e(n, Integer(0));
  e.at(ray) = 1;
  return degree(e);
}

ClassGrading class_grading(const Fan &fan) {
  if (fan.rays.empty())
    throw ToricError("EmptyFan", "the fan has no rays");
  IntegerMatrix a = IntegerMatrix::from_rows(fan.rays, fan.rank);
  ClassGrading g;
  g.relations = left_kernel(a);
  if (g.relations.rows() == 0)
    g.relations = IntegerMatrix(0, fan.rays.size());
  SnfResult s = smith_normal_form(a);
  for (std::size_t j = 0; j < s.diagonal.size(); ++j) {
    if (s.diagonal[j] <= 1)
      continue;
    IntVector row = s.left.row(j);
    for (auto &x : row) {
      x %= s.diagonal[j];
      if (x < 0)
        x += s.diagonal[j];
    }
    g.torsion_rows.push_back(row);
    g.torsion_orders.push_back(s.diagonal[j]);
  }
  return g;
}

IntVector wp_cover_weights(const Fan &fan) {
  if (fan.rays.size() != fan.rank + 1)
    throw ToricError("NotPicardOne", "expected " + std::to_string(fan.rank + 1) + " rays, found " +
                                         std::to_string(fan.rays.size()));
  ClassGrading g = class_grading(fan);
  if (g.relations.rows() != 1)
    throw ToricError("NotPicardOne", "the rays satisfy more than one relation");
  IntVector q = g.relations.row(0);
  if (q[0] < 0)
    for (auto &x : q)
      x = -x;
  if (std::any_of(q.begin(), q.end(), [](const Integer &x) { return x <= 0; }))
    throw ToricError("NotPicardOne", "the ray relation " + format_vector(q) + " is not positive");
  return q;
}

Fan weighted_projective_fan(const IntVector &weights) {
  const std::size_t n = weights.size();
  if (n < 2)
    throw ToricError("InvalidWeights", "need at least two weights");
  Integer g = 0;
  for (const auto &w : weights) {
    if (w <= 0)
      throw ToricError("InvalidWeights", "weights must be positive");
    g = gcd(g, w);
  }
  if (g != 1)
    throw ToricError("InvalidWeights", "weights must be coprime");
  SaturationSplit split = saturation_with_complement(IntegerMatrix::from_rows({weights}, n));
  std::vector<IntVector> rows = {weights};
  for (const auto &w : split.complement.row_vectors())
    rows.push_back(w);
  IntegerMatrix inv = unimodular_inverse(IntegerMatrix::from_rows(rows, n));
  Fan fan;
  fan.rank = n - 1;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector row = inv.row(i);
    IntVector ray(row.begin() + 1, row.end());
    if (primitive_vector(ray) != ray)
      throw ToricError("NotWellFormed", "ray " + std::to_string(i) + " is not primitive");
    fan.rays.push_back(ray);
  }
  for (std::size_t skip = n; skip-- > 0;) {
    RaySet cone;
    for (std::size_t i = 0; i < n; ++i)
      if (i != skip)
        cone.push_back(i);
    fan.max_cones.push_back(cone);
  }
  return fan;
}

PointSpec make_point(const Fan &fan, RatVector coords) {
  if (coords.size() != fan.rays.size())
    throw ToricError("InvalidPoint", "expected " + std::to_string(fan.rays.size()) + " Cox coordinates, got " +
                                         std::to_string(coords.size()));
  PointSpec p;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] == 0)
      p.vanishing_pattern.push_back(i);
  if (!contained_in_some_cone(fan, p.vanishing_pattern))
    throw ToricError("InvalidPoint", "coordinates vanishing on " + format_ray_set(p.vanishing_pattern) +
                                         " lie in the irrelevant locus");
  p.cox_coords = std::move(coords);
  return p;
}

bool points_equal(const Fan &fan, const PointSpec &a, const PointSpec &b) {
  PointSpec pa = make_point(fan, a.cox_coords), pb = make_point(fan, b.cox_coords);
  if (pa.vanishing_pattern != pb.vanishing_pattern)
    return false;
  const RaySet &zero = pa.vanishing_pattern;
  // characters m with <m, e_j> = 0 on the vanishing pattern
  std::vector<IntVector> chars;
  if (zero.empty()) {
    chars = IntegerMatrix::identity(fan.rank).row_vectors();
  } else {
    IntegerMatrix c(fan.rank, zero.size());
    for (std::size_t k = 0; k < fan.rank; ++k)
      for (std::size_t col = 0; col < zero.size(); ++col)
        c(k, col) = fan.rays[zero[col]][k];
    chars = left_kernel(c).row_vectors();
  }
  for (const auto &m : chars) {
    Rational prod = 1;
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
      if (std::binary_search(zero.begin(), zero.end(), i))
        continue;
      prod *= rational_power(pb.cox_coords[i] / pa.cox_coords[i], dot(m, fan.rays[i]));
    }
    if (prod != 1)
      return false;
  }
  return true;
}

IntVector form_degrees(const CoxCurve &c) {
  ClassGrading g = class_grading(c.target);
  if (c.degree_class.size() != g.free_rank())
    throw ToricError("DimensionMismatch", "degree class has " + std::to_string(c.degree_class.size()) +
                                              " entries, the class group has free rank " +
                                              std::to_string(g.free_rank()));
  return c.degree_class * g.relations;
}

CurveValidation validate_curve(const CoxCurve &c) {
  CurveValidation out;
  auto fail = [&](std::string msg) {
    out.valid = false;
    out.diagnostics.push_back(std::move(msg));
  };
  if (c.forms.size() != c.target.rays.size()) {
    fail("expected " + std::to_string(c.target.rays.size()) + " forms, got " + std::to_string(c.forms.size()));
    return out;
  }
  IntVector degrees;
  try {
    degrees = form_degrees(c);
  } catch (const ToricError &e) {
    fail(e.what());
    return out;
  }
  for (std::size_t i = 0; i < c.forms.size(); ++i) {
    if (c.forms[i].is_zero())
      continue;
    if (degrees[i] != static_cast<unsigned long>(*c.forms[i].degree()))
      fail("form " + std::to_string(i) + " has degree " + std::to_string(*c.forms[i].degree()) + ", expected " +
           to_string(degrees[i]));
  }
  if (!is_simplicial(c.target)) {
    fail("target fan is not simplicial");
    return out;
  }
  for (const auto &pc : primitive_collections(c.target)) {
    std::vector<BinaryForm> members;
    for (std::size_t i : pc)
      members.push_back(c.forms[i]);
    BinaryForm g = gcd(members);
    if (g.is_zero())
      fail("primitive collection " + format_ray_set(pc) + ": all forms vanish identically");
    else if (*g.degree() > 0)
      fail("primitive collection " + format_ray_set(pc) + ": common factor " + to_string(g));
  }
  return out;
}

PointSpec evaluate_curve(const CoxCurve &c, const ParamPoint &param) {
  PointSpec p;
  for (std::size_t i = 0; i < c.forms.size(); ++i) {
    p.cox_coords.push_back(c.forms[i].evaluate(param));
    if (p.cox_coords.back() == 0)
      p.vanishing_pattern.push_back(i);
  }
  return p;
}

CoxCurve interpolate_through_points(const Fan &fan, const std::vector<PointSpec> &points,
                                    const std::vector<ParamPoint> &params, unsigned d, std::uint64_t seed) {
  IntVector weights = wp_cover_weights(fan);
  check_interpolation_input(fan, points, params, d);
  long bound = 10L * (d + 1);
  for (unsigned attempt = 0; attempt < kAttemptBudget; ++attempt, bound *= 2) {
    CoxCurve c = draw_interpolant(fan, weights, points, params, d, derive_seed(seed, attempt), bound);
    if (!validate_curve(c).valid)
      continue;
    bool through = true;
    for (std::size_t i = 0; i < points.size() && through; ++i)
      through = points_equal(fan, evaluate_curve(c, params[i]), points[i]);
    if (through)
      return c;
  }
  throw ToricError("InterpolationFailed", "no valid interpolant within " + std::to_string(kAttemptBudget) +
                                              " attempts");
}

Locus orbit_locus(const Fan &fan, const RaySet &cone) {
  Locus l;
  l.id = "V" + format_ray_set(cone);
  for (std::size_t i : cone) {
    std::vector<unsigned> e(fan.rays.size(), 0);
    e.at(i) = 1;
    l.generators.push_back({CoxTerm{e, 1}});
  }
  return l;
}

Locus linear_locus(std::string id, const std::vector<RatVector> &rows) {
  Locus l;
  l.id = std::move(id);
  for (const auto &row : rows) {
    CoxPolynomial p;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0)
        continue;
      std::vector<unsigned> e(row.size(), 0);
      e[j] = 1;
      p.push_back({e, row[j]});
    }
    l.generators.push_back(p);
  }
  return l;
}

std::vector<Witness> AvoidanceReport::allowed_hits() const {
  std::vector<Witness> out;
  for (const auto &w : witnesses)
    if (w.allowed)
      out.push_back(w);
  return out;
}

BinaryForm pullback(const CoxCurve &c, const CoxPolynomial &p) {
  BinaryForm out;
  for (const auto &term : p) {
    if (term.exponents.size() != c.forms.size())
      throw ToricError("DimensionMismatch", "monomial has " + std::to_string(term.exponents.size()) +
                                                " exponents for " + std::to_string(c.forms.size()) + " coordinates");
    BinaryForm t = BinaryForm::constant(term.coefficient);
    for (std::size_t i = 0; i < term.exponents.size() && !t.is_zero(); ++i)
      if (term.exponents[i] > 0)
        t = t * pow(c.forms[i], term.exponents[i]);
    out = out + t;
  }
  return out;
}

AvoidanceReport avoidance_verify(const CoxCurve &c, const std::vector<Locus> &loci,
                                 const std::vector<AllowedPoint> &allowed) {
  ClassGrading grading = class_grading(c.target);
  for (const auto &locus : loci)
    for (const auto &gen : locus.generators) {
      std::optional<IntVector> cls;
      for (const auto &term : gen) {
        if (term.exponents.size() != c.target.rays.size())
          throw ToricError("DimensionMismatch", "monomial of " + locus.id + " has the wrong number of exponents");
        IntVector e(term.exponents.begin(), term.exponents.end());
        IntVector d = grading.degree(e);
        if (cls && *cls != d)
          throw ToricError("Inhomogeneous", "a generator of " + locus.id + " is not homogeneous");
        cls = d;
      }
    }

  AvoidanceReport report;
  for (const auto &locus : loci) {
    std::vector<BinaryForm> pulled;
    for (const auto &gen : locus.generators)
      pulled.push_back(pullback(c, gen));
    BinaryForm g = gcd(pulled);
    if (g.is_zero()) {
      Witness w;
      w.locus = locus.id;
      w.whole_curve = true;
      report.witnesses.push_back(w);
      continue;
    }
    for (const auto &[factor, mult] : factor(g)) {
      Witness w;
      w.locus = locus.id;
      w.factor = factor;
      w.multiplicity = mult;
      if (factor.degree() == 1u) {
        w.param = linear_root(factor);
        PointSpec image = evaluate_curve(c, *w.param);
        for (const auto &a : allowed)
          if (a.param == *w.param && points_equal(c.target, image, a.point))
            w.allowed = true;
      }
      report.witnesses.push_back(w);
    }
  }
  report.disjoint = std::all_of(report.witnesses.begin(), report.witnesses.end(),
                                [](const Witness &w) { return w.allowed; });
  return report;
}

CoxCurve interpolate_avoiding(const Fan &fan, const std::vector<PointSpec> &points,
                              const std::vector<ParamPoint> &params, const std::vector<Locus> &loci, unsigned d,
                              std::uint64_t seed) {
  IntVector weights = wp_cover_weights(fan);
  check_interpolation_input(fan, points, params, d);
  for (const auto &locus : loci) {
    bool linear = !locus.generators.empty();
    std::vector<RatVector> rows;
    for (const auto &gen : locus.generators) {
      RatVector row(fan.rays.size(), Rational(0));
      for (const auto &term : gen) {
        unsigned total = 0;
        for (std::size_t j = 0; j < term.exponents.size(); ++j) {
          total += term.exponents[j];
          if (term.exponents[j] == 1)
            row.at(j) += term.coefficient;
        }
        linear = linear && total == 1;
      }
      rows.push_back(row);
    }
    if (linear && linalg::rank(rows) < 2)
      throw ToricError("CodimensionTooSmall", locus.id + " has codimension " +
                                                  std::to_string(linalg::rank(rows)));
  }
  std::vector<AllowedPoint> allowed;
  for (std::size_t i = 0; i < points.size(); ++i)
    allowed.push_back({params[i], points[i]});

  AvoidanceReport last;
  long bound = 10L * (d + 1);
  for (unsigned attempt = 0; attempt < kAttemptBudget; ++attempt, bound *= 2) {
    CoxCurve c = draw_interpolant(fan, weights, points, params, d, derive_seed(seed, attempt), bound);
    if (!validate_curve(c).valid)
      continue;
    last = avoidance_verify(c, loci, allowed);
    if (last.disjoint)
      return c;
  }
  throw ToricError("AvoidanceRetryExceeded", "no avoiding curve within " + std::to_string(kAttemptBudget) +
                                                 " attempts; last report meets" + describe(last));
}

CoxCurve pushforward_rank_one(const CoxCurve &c, const Fan &target) {
  IntVector cover_weights, target_weights;
  try {
    cover_weights = wp_cover_weights(c.target);
    target_weights = wp_cover_weights(target);
  } catch (const ToricError &e) {
    throw ToricError("GradingMismatch", e.what());
  }
  if (cover_weights != target_weights)
    throw ToricError("GradingMismatch", "cover weights " + format_vector(cover_weights) + " differ from target weights " +
                                            format_vector(target_weights));
  IntVector degrees = form_degrees(c);
  CoxCurve out;
  out.target = target;
  out.forms = c.forms;
  out.degree_class = {degrees[0] / class_grading(target).relations(0, 0)};
  CurveValidation v = validate_curve(out);
  if (!v.valid)
    throw ToricError("InvalidCurve", v.diagnostics.front());
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

} // namespace torickit
