#include "support/corpus.hpp"
#include "torickit/curve.hpp"
#include "torickit/errors.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace torickit;
using namespace torickit::testing;

namespace {

std::string code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const ToricError &e) {
    return e.code();
  }
  return "";
}

IntVector iv(std::initializer_list<long long> xs) { return to_integers(std::vector<long long>(xs)); }
RatVector rv(std::initializer_list<long long> xs) { return to_rationals(iv(xs)); }
BinaryForm bf(unsigned d, std::initializer_list<long long> xs) { return BinaryForm::from_integers(d, std::vector<long long>(xs)); }
BinaryForm S() { return bf(1, {1, 0}); }
BinaryForm T() { return bf(1, {0, 1}); }

// P^2 / mu_3: same weights as P^2, torsion of order 3
Fan p2_mod_3() { return make_fan(2, {{2, -1}, {-1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}); }

CoxCurve curve(const Fan &f, std::vector<BinaryForm> forms, std::initializer_list<long long> cls) {
  return CoxCurve{f, std::move(forms), iv(cls)};
}

Rational eval_poly(const CoxPolynomial &p, const RatVector &x) {
  Rational acc = 0;
  for (const auto &t : p) {
    Rational m = t.coefficient;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (unsigned k = 0; k < t.exponents[i]; ++k)
        m *= x[i];
    acc += m;
  }
  return acc;
}

bool in_locus(const Locus &l, const RatVector &x) {
  for (const auto &g : l.generators)
    if (eval_poly(g, x) != 0)
      return false;
  return true;
}

std::vector<ParamPoint> height_20_params() {
  std::vector<ParamPoint> out = {ParamPoint(0, 1)};
  for (long q = 1; q <= 20; ++q)
    for (long p = -20; p <= 20; ++p)
      if (std::gcd(p, q) == 1)
        out.emplace_back(1, Rational(p, q));
  return out;
}

std::vector<ParamPoint> standard_params(std::size_t r) {
  std::vector<ParamPoint> out = {ParamPoint(1, 0), ParamPoint(0, 1)};
  for (long k = 1; out.size() < r; ++k)
    out.emplace_back(1, k);
  out.resize(r);
  return out;
}

RatVector random_coords(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_int_distribution<long> c(-3, 3);
  for (;;) {
    RatVector x(n);
    bool nonzero = false;
    for (auto &v : x) {
      v = c(rng);
      nonzero = nonzero || v != 0;
    }
    if (nonzero)
      return x;
  }
}

} // namespace

TEST(ClassGrading, Examples) {
  ClassGrading p2 = class_grading(projective_plane());
  EXPECT_EQ(p2.free_rank(), 1u);
  EXPECT_TRUE(p2.torsion_orders.empty());
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_EQ(p2.ray_degree(i), iv({1}));

  ClassGrading q = class_grading(p1_times_p1());
  EXPECT_EQ(q.free_rank(), 2u);
  EXPECT_EQ(q.ray_degree(0), iv({1, 0}));
  EXPECT_EQ(q.ray_degree(1), iv({1, 0}));
  EXPECT_EQ(q.ray_degree(2), iv({0, 1}));
  EXPECT_EQ(q.ray_degree(3), iv({0, 1}));

  ClassGrading w = class_grading(weighted_p121());
  EXPECT_EQ(w.ray_degree(0), iv({1}));
  EXPECT_EQ(w.ray_degree(1), iv({2}));
  EXPECT_EQ(w.ray_degree(2), iv({1}));

  ClassGrading t = class_grading(p2_mod_3());
  EXPECT_EQ(t.torsion_orders, iv({3}));
  EXPECT_EQ(t.degree(iv({2, -1, -1})), iv({0, 0}));
}

// relations of every ray matrix have degree zero, and classes of principal divisors vanish
TEST(ClassGrading, PrincipalDivisorsHaveClassZeroProperty) {
  for (const auto &nf : complete_corpus()) {
    ClassGrading g = class_grading(nf.fan);
    EXPECT_EQ(g.free_rank(), nf.fan.rays.size() - nf.fan.rank) << nf.name;
    for (std::size_t k = 0; k < nf.fan.rank; ++k) {
      IntVector div;
      for (const auto &r : nf.fan.rays)
        div.push_back(r[k]);
      IntVector zero(g.free_rank() + g.torsion_orders.size(), Integer(0));
      EXPECT_EQ(g.degree(div), zero) << nf.name;
    }
  }
}

TEST(WpCoverWeights, Examples) {
  EXPECT_EQ(wp_cover_weights(projective_plane()), iv({1, 1, 1}));
  EXPECT_EQ(wp_cover_weights(weighted_p121()), iv({1, 2, 1}));
  EXPECT_EQ(wp_cover_weights(make_fan(2, {{1, 0}, {0, 1}, {-2, -3}}, {{0, 1}, {1, 2}, {0, 2}})), iv({2, 3, 1}));
  EXPECT_EQ(code_of([] { wp_cover_weights(p1_times_p1()); }), "NotPicardOne");
}

TEST(WpCoverWeights, WeightedFanRoundTripProperty) {
  for (auto w : {iv({1, 1}), iv({1, 2, 1}), iv({2, 3, 1}), iv({1, 1, 2, 1}), iv({1, 2, 3}), iv({3, 5, 7, 1})}) {
    Fan f = weighted_projective_fan(w);
    EXPECT_TRUE(validate_fan(f).valid());
    EXPECT_TRUE(is_complete(f));
    EXPECT_EQ(wp_cover_weights(f), w);
  }
  EXPECT_EQ(code_of([] { weighted_projective_fan(iv({2, 4})); }), "InvalidWeights");
}

TEST(ValidateCurve, Examples) {
  Fan p2 = projective_plane();
  EXPECT_TRUE(validate_curve(curve(p2, {S(), T(), BinaryForm()}, {1})).valid);
  CurveValidation bad = validate_curve(curve(p2, {S(), S(), BinaryForm()}, {1}));
  EXPECT_FALSE(bad.valid);
  ASSERT_EQ(bad.diagnostics.size(), 1u);
  EXPECT_NE(bad.diagnostics[0].find("common factor s"), std::string::npos);
  Fan q = p1_times_p1();
  EXPECT_TRUE(validate_curve(curve(q, {S(), T(), BinaryForm::constant(1), BinaryForm::constant(1)}, {1, 0})).valid);
  EXPECT_FALSE(validate_curve(curve(p2, {S(), T(), S() * T()}, {1})).valid);
  EXPECT_FALSE(validate_curve(curve(p2, {S(), T()}, {1})).valid);
}

TEST(EvaluateCurve, Examples) {
  Fan p2 = projective_plane();
  PointSpec a = evaluate_curve(curve(p2, {S(), T(), BinaryForm()}, {1}), ParamPoint(1, 0));
  EXPECT_EQ(a.cox_coords, rv({1, 0, 0}));
  EXPECT_EQ(a.vanishing_pattern, (RaySet{1, 2}));
  PointSpec b = evaluate_curve(curve(projective_line(), {S(), T()}, {1}), ParamPoint(1, 1));
  EXPECT_EQ(b.cox_coords, rv({1, 1}));
  PointSpec c = evaluate_curve(curve(p2, {bf(2, {1, 0, 0}), bf(2, {0, 1, 0}), bf(2, {0, 0, 1})}, {2}), ParamPoint(1, 2));
  EXPECT_EQ(c.cox_coords, rv({1, 2, 4}));
}

TEST(PointsEqual, Examples) {
  Fan p2 = projective_plane();
  EXPECT_TRUE(points_equal(p2, make_point(p2, rv({1, 1, 1})), make_point(p2, rv({2, 2, 2}))));
  EXPECT_FALSE(points_equal(p2, make_point(p2, rv({1, 1, 1})), make_point(p2, rv({1, 2, 1}))));
  Fan w = weighted_p121();
  EXPECT_TRUE(points_equal(w, make_point(w, rv({1, 1, 1})), make_point(w, rv({2, 4, 2}))));
  EXPECT_FALSE(points_equal(w, make_point(w, rv({1, 1, 1})), make_point(w, rv({2, 2, 2}))));
  EXPECT_EQ(code_of([&] { make_point(p2, rv({0, 0, 0})); }), "InvalidPoint");
  EXPECT_EQ(code_of([&] { make_point(p2, rv({1, 0})); }), "InvalidPoint");
}

// on P^n the relation is proportionality (cross-multiplication oracle)
TEST(PointsEqual, ProjectiveSpaceOracleProperty) {
  std::mt19937_64 rng(21);
  for (std::size_t n : {1u, 2u, 3u}) {
    Fan f = projective_space(n);
    for (int trial = 0; trial < 150; ++trial) {
      RatVector x = random_coords(rng, n + 1);
      RatVector y = trial % 3 == 0 ? x : random_coords(rng, n + 1);
      if (trial % 3 == 0)
        for (auto &v : y)
          v *= Rational(trial % 7 + 1, 3);
      bool proportional = true;
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j)
          proportional = proportional && x[i] * y[j] == x[j] * y[i];
      EXPECT_EQ(points_equal(f, make_point(f, x), make_point(f, y)), proportional);
    }
  }
}

// the weighted action by rational lambda is always detected
TEST(PointsEqual, WeightedActionProperty) {
  std::mt19937_64 rng(8);
  for (const Fan &f : {weighted_p121(), weighted_plane(2, 3), weighted_space_1121(), p2_mod_3()}) {
    IntVector q = wp_cover_weights(f);
    for (int trial = 0; trial < 60; ++trial) {
      RatVector x = random_coords(rng, q.size());
      Rational lambda(static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 4) + 1);
      if (rng() % 2)
        lambda = -lambda;
      RatVector y = x;
      for (std::size_t i = 0; i < q.size(); ++i)
        for (long k = 0; k < q[i].get_si(); ++k)
          y[i] *= lambda;
      EXPECT_TRUE(points_equal(f, make_point(f, x), make_point(f, y)));
    }
  }
}

TEST(Interpolation, Examples) {
  Fan p2 = projective_plane();
  CoxCurve line = interpolate_through_points(p2, {make_point(p2, rv({1, 0, 0})), make_point(p2, rv({0, 1, 0}))},
                                             {ParamPoint(1, 0), ParamPoint(0, 1)}, 1, 7);
  EXPECT_EQ(line.forms, (std::vector<BinaryForm>{S(), T(), BinaryForm()}));

  std::vector<PointSpec> three = {make_point(p2, rv({1, 0, 0})), make_point(p2, rv({0, 1, 0})),
                                  make_point(p2, rv({0, 0, 1}))};
  std::vector<ParamPoint> params = {ParamPoint(1, 0), ParamPoint(0, 1), ParamPoint(1, 1)};
  CoxCurve conic = interpolate_through_points(p2, three, params, 2, 7);
  EXPECT_TRUE(validate_curve(conic).valid);
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_TRUE(points_equal(p2, evaluate_curve(conic, params[i]), three[i]));

  Fan w = weighted_p121();
  CoxCurve wc = interpolate_through_points(w, {make_point(w, rv({1, 0, 0})), make_point(w, rv({0, 0, 1}))},
                                           {ParamPoint(1, 0), ParamPoint(0, 1)}, 1, 7);
  EXPECT_EQ(wc.forms[0], S());
  EXPECT_EQ(wc.forms[2], T());
  ASSERT_EQ(wc.forms[1].degree(), 2u);
  EXPECT_EQ(wc.forms[1].coefficient(0), 0);
  EXPECT_EQ(wc.forms[1].coefficient(2), 0);
}

TEST(Interpolation, Errors) {
  Fan p2 = projective_plane();
  auto a = make_point(p2, rv({1, 0, 0})), b = make_point(p2, rv({0, 1, 0}));
  EXPECT_EQ(code_of([&] { interpolate_through_points(p2, {a, b}, {ParamPoint(1, 0), ParamPoint(0, 1)}, 1, 1); }), "");
  EXPECT_EQ(code_of([&] { interpolate_through_points(p2, {a, b}, {ParamPoint(1, 0), ParamPoint(0, 1)}, 0, 1); }),
            "DegreeTooSmall");
  auto c = make_point(p2, rv({0, 0, 1})), e = make_point(p2, rv({1, 1, 1}));
  EXPECT_EQ(code_of([&] { interpolate_through_points(p2, {a, b, c, e}, standard_params(4), 2, 1); }), "DegreeTooSmall");
  auto a2 = make_point(p2, rv({3, 0, 0}));
  EXPECT_EQ(code_of([&] { interpolate_through_points(p2, {a, a2}, {ParamPoint(1, 0), ParamPoint(0, 1)}, 2, 1); }),
            "PointsNotDistinct");
  EXPECT_EQ(code_of([&] { interpolate_through_points(p2, {a, b}, {ParamPoint(1, 0), ParamPoint(2, 0)}, 2, 1); }),
            "ParamsNotDistinct");
  EXPECT_EQ(code_of([&] { interpolate_through_points(p1_times_p1(), {}, {}, 1, 1); }), "NotPicardOne");
}

// 200 seeded runs: pass-through, validity and the degree law d * q_j
TEST(Interpolation, CorrectnessAndDegreeLawProperty) {
  std::vector<Fan> targets = {projective_line(),    projective_plane(),  weighted_p121(),      weighted_plane(2, 3),
                              projective_space(3), weighted_space_1121(), p2_mod_3()};
  std::mt19937_64 rng(99);
  int runs = 0;
  for (std::uint64_t seed = 0; runs < 200; ++seed) {
    const Fan &f = targets[seed % targets.size()];
    IntVector q = wp_cover_weights(f);
    std::size_t r = rng() % 4;
    std::vector<PointSpec> pts;
    while (pts.size() < r) {
      PointSpec p = make_point(f, random_coords(rng, q.size()));
      bool fresh = std::none_of(pts.begin(), pts.end(), [&](const PointSpec &o) { return points_equal(f, o, p); });
      if (fresh)
        pts.push_back(p);
    }
    unsigned d = static_cast<unsigned>(std::max<std::size_t>(1, r) + rng() % 2);
    auto params = standard_params(r);
    CoxCurve c = interpolate_through_points(f, pts, params, d, seed);
    ++runs;
    EXPECT_TRUE(validate_curve(c).valid);
    for (std::size_t i = 0; i < r; ++i)
      EXPECT_TRUE(points_equal(f, evaluate_curve(c, params[i]), pts[i]));
    for (std::size_t j = 0; j < q.size(); ++j)
      if (!c.forms[j].is_zero())
        EXPECT_EQ(Integer(static_cast<unsigned long>(*c.forms[j].degree())), Integer(static_cast<unsigned long>(d)) * q[j]);
    EXPECT_EQ(c, interpolate_through_points(f, pts, params, d, seed));
  }
}

TEST(Avoidance, Examples) {
  Fan p2 = projective_plane();
  CoxCurve line = curve(p2, {S(), T(), BinaryForm()}, {1});
  AvoidanceReport r1 = avoidance_verify(line, {orbit_locus(p2, {0, 1})});
  EXPECT_TRUE(r1.disjoint);
  EXPECT_TRUE(r1.witnesses.empty());

  Locus pt = orbit_locus(p2, {1, 2});
  AvoidanceReport r2 = avoidance_verify(line, {pt});
  EXPECT_FALSE(r2.disjoint);
  ASSERT_EQ(r2.witnesses.size(), 1u);
  EXPECT_EQ(r2.witnesses[0].param, ParamPoint(1, 0));

  AvoidanceReport r3 = avoidance_verify(line, {pt}, {{ParamPoint(1, 0), make_point(p2, rv({1, 0, 0}))}});
  EXPECT_TRUE(r3.disjoint);
  EXPECT_EQ(r3.allowed_hits().size(), 1u);

  AvoidanceReport r4 = avoidance_verify(line, {pt}, {{ParamPoint(1, 0), make_point(p2, rv({0, 1, 0}))}});
  EXPECT_FALSE(r4.disjoint);

  Locus whole = orbit_locus(p2, {2});
  AvoidanceReport r5 = avoidance_verify(line, {whole});
  ASSERT_EQ(r5.witnesses.size(), 1u);
  EXPECT_TRUE(r5.witnesses[0].whole_curve);

  // x^2 + y^2 on a line meets in an irreducible quadratic factor
  Locus conic{"conic", {{CoxTerm{{2, 0, 0}, 1}, CoxTerm{{0, 2, 0}, 1}}, {CoxTerm{{0, 0, 1}, 1}}}};
  AvoidanceReport r6 = avoidance_verify(line, {conic});
  ASSERT_EQ(r6.witnesses.size(), 1u);
  EXPECT_FALSE(r6.witnesses[0].param.has_value());
  EXPECT_EQ(r6.witnesses[0].factor.degree(), 2u);

  Locus inhom{"bad", {{CoxTerm{{1, 0, 0}, 1}, CoxTerm{{0, 2, 0}, 1}}}};
  EXPECT_EQ(code_of([&] { avoidance_verify(line, {inhom}); }), "Inhomogeneous");
}

TEST(InterpolateAvoiding, Examples) {
  Fan p3 = projective_space(3);
  std::vector<PointSpec> two = {make_point(p3, rv({1, 0, 0, 0})), make_point(p3, rv({0, 1, 0, 0}))};
  Locus line = linear_locus("line", {rv({1, 1, 0, 0}), rv({0, 0, 1, -1})});
  auto params = standard_params(2);
  CoxCurve c = interpolate_avoiding(p3, two, params, {line}, 2, 3);
  EXPECT_TRUE(avoidance_verify(c, {line}).disjoint);
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_TRUE(points_equal(p3, evaluate_curve(c, params[i]), two[i]));

  Fan p2 = projective_plane();
  auto p = make_point(p2, rv({1, 1, 1}));
  CoxCurve l = interpolate_avoiding(p2, {p}, standard_params(1), {orbit_locus(p2, {0, 1})}, 1, 5);
  EXPECT_TRUE(avoidance_verify(l, {orbit_locus(p2, {0, 1})}).disjoint);

  auto q = make_point(p2, rv({0, 0, 1}));
  Locus s = orbit_locus(p2, {0, 1});
  CoxCurve m = interpolate_avoiding(p2, {q}, standard_params(1), {s}, 1, 5);
  AvoidanceReport rep = avoidance_verify(m, {s}, {{standard_params(1)[0], q}});
  EXPECT_TRUE(rep.disjoint);
  EXPECT_EQ(rep.allowed_hits().size(), 1u);

  EXPECT_EQ(code_of([&] { interpolate_avoiding(p2, {p}, standard_params(1), {linear_locus("h", {rv({1, 0, 0})})}, 1, 5); }),
            "CodimensionTooSmall");
  // the curve is forced through S at a point that is not allowed
  EXPECT_EQ(code_of([&] {
              interpolate_avoiding(p2, {make_point(p2, rv({0, 1, 1})), make_point(p2, rv({0, 1, -1}))},
                                   standard_params(2), {orbit_locus(p2, {0, 1})}, 2, 5);
            }),
            "");
}

// soundness by sampling parameters of height <= 20, completeness on witnesses
TEST(Avoidance, SoundnessAndCompletenessProperty) {
  std::mt19937_64 rng(17);
  auto samples = height_20_params();
  for (int trial = 0; trial < 12; ++trial) {
    Fan f = trial % 2 ? projective_plane() : projective_space(3);
    std::size_t n = f.rays.size();
    std::size_t r = rng() % 3;
    std::vector<PointSpec> pts;
    while (pts.size() < r) {
      PointSpec p = make_point(f, random_coords(rng, n));
      if (std::none_of(pts.begin(), pts.end(), [&](const PointSpec &o) { return points_equal(f, o, p); }))
        pts.push_back(p);
    }
    auto params = standard_params(r);
    CoxCurve c = interpolate_through_points(f, pts, params, static_cast<unsigned>(std::max<std::size_t>(r, 1)), trial);
    std::vector<Locus> loci = {orbit_locus(f, {0, 1})};
    if (n == 4)
      loci.push_back(linear_locus("line", {random_coords(rng, n), random_coords(rng, n)}));
    else
      loci.push_back(linear_locus("pt", {random_coords(rng, n), random_coords(rng, n)}));
    std::vector<AllowedPoint> allowed;
    for (std::size_t i = 0; i < r; ++i)
      allowed.push_back({params[i], pts[i]});
    AvoidanceReport rep = avoidance_verify(c, loci, allowed);
    for (const auto &w : rep.witnesses) {
      if (!w.param)
        continue;
      const Locus &l = *std::find_if(loci.begin(), loci.end(), [&](const Locus &x) { return x.id == w.locus; });
      EXPECT_TRUE(in_locus(l, evaluate_curve(c, *w.param).cox_coords));
    }
    for (const auto &t : samples) {
      for (const auto &l : loci) {
        if (!in_locus(l, evaluate_curve(c, t).cox_coords))
          continue;
        bool reported = std::any_of(rep.witnesses.begin(), rep.witnesses.end(),
                                    [&](const Witness &w) { return w.locus == l.id && (w.whole_curve || w.param == t); });
        EXPECT_TRUE(reported);
        if (rep.disjoint)
          EXPECT_TRUE(std::any_of(allowed.begin(), allowed.end(), [&](const AllowedPoint &a) { return a.param == t; }));
      }
    }
  }
}

TEST(Pushforward, Examples) {
  Fan p2 = projective_plane();
  CoxCurve line = curve(p2, {S(), T(), bf(1, {1, 1})}, {1});
  CoxCurve down = pushforward_rank_one(line, p2_mod_3());
  EXPECT_EQ(down.forms, line.forms);
  EXPECT_TRUE(validate_curve(down).valid);
  EXPECT_EQ(pushforward_rank_one(line, p2), line);
  Fan w = weighted_p121();
  CoxCurve wc = curve(w, {S(), bf(2, {0, 1, 0}), T()}, {1});
  EXPECT_EQ(pushforward_rank_one(wc, w), wc);
  EXPECT_EQ(pushforward_rank_one(wc, weighted_projective_fan(iv({1, 2, 1}))).forms, wc.forms);
  EXPECT_EQ(code_of([&] { pushforward_rank_one(wc, p2); }), "GradingMismatch");
  EXPECT_EQ(code_of([&] { pushforward_rank_one(line, p1_times_p1()); }), "GradingMismatch");
}

// target and weighted cover give the same forms for the same seed
TEST(Pushforward, ReductionCoherenceProperty) {
  std::mt19937_64 rng(4);
  std::vector<Fan> targets = {p2_mod_3(), weighted_p121(), weighted_plane(2, 3), weighted_space_1121()};
  for (int trial = 0; trial < 24; ++trial) {
    const Fan &target = targets[trial % targets.size()];
    Fan cover = weighted_projective_fan(wp_cover_weights(target));
    std::size_t n = target.rays.size();
    std::size_t r = 1 + rng() % 2;
    std::vector<RatVector> coords;
    while (coords.size() < r) {
      RatVector x = random_coords(rng, n);
      bool fresh = std::none_of(coords.begin(), coords.end(), [&](const RatVector &o) {
        return points_equal(target, make_point(target, o), make_point(target, x));
      });
      if (fresh && std::all_of(x.begin(), x.end(), [](const Rational &v) { return v != 0; }))
        coords.push_back(x);
    }
    std::vector<PointSpec> on_target, on_cover;
    for (const auto &x : coords) {
      on_target.push_back(make_point(target, x));
      on_cover.push_back(make_point(cover, x));
    }
    RaySet cone = target.max_cones[0];
    auto params = standard_params(r);
    CoxCurve a = interpolate_avoiding(target, on_target, params, {orbit_locus(target, cone)}, static_cast<unsigned>(r), trial);
    CoxCurve b = interpolate_avoiding(cover, on_cover, params, {orbit_locus(cover, cone)}, static_cast<unsigned>(r), trial);
    EXPECT_EQ(a.forms, b.forms);
    EXPECT_EQ(pushforward_rank_one(b, target), a);
  }
}
