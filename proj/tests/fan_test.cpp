#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "torickit/errors.hpp"
#include "torickit/fan.hpp"
#include "torickit/lattice.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace torickit;
using namespace torickit::testing;

namespace {

Cone cone2(std::initializer_list<std::vector<long long>> rays, std::size_t rank = 2) {
  Cone c;
  c.rank = rank;
  for (const auto &r : rays)
    c.rays.push_back(to_integers(r));
  return c;
}

bool has_violation(const ValidationReport &r, const std::string &kind) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const FanViolation &v) { return v.kind == kind; });
}

} // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(validate_fan(projective_plane()).valid());

  Fan overlap = make_fan(2, {{1, 0}, {0, 1}, {1, 1}, {-1, 1}}, {{0, 1}, {2, 3}});
  EXPECT_TRUE(has_violation(validate_fan(overlap), "NotFaceIntersection"));

  Fan nonprim = make_fan(2, {{1, 0}, {2, 0}}, {{0}, {1}});
  auto r = validate_fan(nonprim);
  ASSERT_TRUE(has_violation(r, "NonPrimitiveRay"));
  EXPECT_EQ(r.violations.front().detail, "at index 1");
}

TEST(Validate, OtherViolations) {
  EXPECT_TRUE(has_violation(validate_fan(make_fan(2, {{1, 0}, {-1, 0}}, {{0, 1}})), "NotStronglyConvex"));
  EXPECT_TRUE(has_violation(validate_fan(make_fan(2, {{1, 0}, {1, 1}, {0, 1}}, {{0, 1, 2}})), "RedundantRay"));
  EXPECT_TRUE(has_violation(validate_fan(make_fan(2, {{1, 0}, {0, 1}}, {{0, 5}})), "BadConeIndex"));
  EXPECT_TRUE(has_violation(validate_fan(make_fan(2, {{1, 0}, {1, 0}}, {{0}, {1}})), "DuplicateRay"));
  EXPECT_TRUE(has_violation(validate_fan(make_fan(2, {{1, 0, 0}}, {{0}})), "RankMismatch"));
  EXPECT_THROW(require_valid_fan(make_fan(2, {{2, 0}}, {{0}})), ToricError);
}

TEST(Validate, CorpusIsValid) {
  for (const auto &[name, fan] : complete_corpus())
    EXPECT_TRUE(validate_fan(fan).valid()) << name;
}

TEST(Complete, Examples) {
  EXPECT_TRUE(is_complete(projective_plane()));
  EXPECT_FALSE(is_complete(make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}})));
  Fan cube = cube_fan();
  EXPECT_TRUE(is_complete(cube));
  EXPECT_EQ(walls(cube).size(), 12u);
  try {
    is_complete(make_fan(2, {{2, 0}}, {{0}}));
    FAIL();
  } catch (const ToricError &e) {
    EXPECT_EQ(e.code(), "InvalidFan");
  }
}

TEST(Complete, CorpusAndRemovedCones) {
  for (const auto &[name, fan] : complete_corpus()) {
    EXPECT_TRUE(is_complete(fan)) << name;
    Fan partial = fan;
    partial.max_cones.pop_back();
    // the ray set may become partially unused; only completeness matters
    if (validate_fan(partial).valid())
      EXPECT_FALSE(is_complete(partial)) << name;
  }
}

TEST(Smoothness, Examples) {
  EXPECT_TRUE(is_smooth_cone(cone2({{1, 0}, {0, 1}})));
  Cone c = cone2({{1, 0}, {-1, -2}});
  EXPECT_TRUE(is_simplicial_cone(c));
  EXPECT_FALSE(is_smooth_cone(c));
  Cone square = cone2({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}}, 3);
  EXPECT_FALSE(is_simplicial_cone(square));
  EXPECT_EQ(cone_dimension(square), 3u);
  EXPECT_FALSE(is_simplicial(cube_fan()));
  EXPECT_TRUE(is_simplicial(weighted_p121()));
  EXPECT_FALSE(is_smooth(weighted_p121()));
  EXPECT_TRUE(is_smooth(hexagon()));
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(cone_multiplicity(cone2({{1, 0}, {0, 1}})), 1);
  EXPECT_EQ(cone_multiplicity(cone2({{1, 0}, {-1, -2}})), 2);
  EXPECT_EQ(cone_multiplicity(cone2({{1, 0}, {1, 4}})), 4);
  EXPECT_EQ(parallelepiped_point_count({{1, 0}, {-1, -2}}), 2);
  EXPECT_EQ(parallelepiped_point_count({{1, 0}, {1, 4}}), 4);
  try {
    cone_multiplicity(cone2({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}}, 3));
    FAIL();
  } catch (const ToricError &e) {
    EXPECT_EQ(e.code(), "NotSimplicial");
  }
}

TEST(Multiplicity, RandomConesMatchParallelepipedCount) {
  std::mt19937_64 rng(314);
  std::uniform_int_distribution<long long> d(-5, 5);
  std::uniform_int_distribution<std::size_t> rank_d(2, 3);
  int checked = 0;
  while (checked < 250) {
    std::size_t n = rank_d(rng);
    std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    SmallMat rays;
    Cone c;
    c.rank = n;
    bool bad = false;
    for (std::size_t i = 0; i < k; ++i) {
      SmallVec v(n);
      for (auto &x : v)
        x = d(rng);
      IntVector w = to_integers(v);
      if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) {
        bad = true;
        break;
      }
      w = primitive_vector(w);
      for (std::size_t j = 0; j < n; ++j)
        v[j] = w[j].get_si();
      rays.push_back(v);
      c.rays.push_back(w);
    }
    if (bad || cone_dimension(c) != k)
      continue;
    ++checked;
    Integer m = cone_multiplicity(c);
    EXPECT_EQ(m, Integer(static_cast<long>(parallelepiped_point_count(rays))));
    EXPECT_EQ(is_smooth_cone(c), m == 1);
  }
}

TEST(Orbits, ProjectivePlane) {
  auto orbits = list_orbits(projective_plane());
  ASSERT_EQ(orbits.size(), 7u);
  std::vector<std::size_t> dims;
  for (const auto &o : orbits)
    dims.push_back(o.orbit_dim);
  EXPECT_EQ(dims, (std::vector<std::size_t>{2, 1, 1, 1, 0, 0, 0}));
  EXPECT_TRUE(orbits[0].cone.empty());
  EXPECT_EQ(orbits[1].cone, (RaySet{0}));
  EXPECT_EQ(orbits[4].cone, (RaySet{0, 1}));
}

TEST(Orbits, WeightedPlaneHasOneSingularPoint) {
  auto orbits = list_orbits(weighted_p121());
  ASSERT_EQ(orbits.size(), 7u);
  int singular = 0;
  for (const auto &o : orbits) {
    if (o.is_singular) {
      ++singular;
      EXPECT_EQ(o.orbit_dim, 0u);
      EXPECT_EQ(o.cone, (RaySet{0, 2}));
    }
  }
  EXPECT_EQ(singular, 1);
}

TEST(Orbits, ZeroFan) {
  Fan torus;
  torus.rank = 3;
  auto orbits = list_orbits(torus);
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].orbit_dim, 3u);
  EXPECT_TRUE(codim2_orbits(torus).empty());
}

TEST(Orbits, DualityAndStarClosedSuffixes) {
  for (const auto &[name, fan] : complete_corpus()) {
    auto orbits = list_orbits(fan);
    auto cones = all_cones(fan);
    EXPECT_EQ(orbits.size(), cones.size()) << name;
    for (const auto &o : orbits) {
      EXPECT_EQ(o.orbit_dim + cone_dimension(fan.cone(o.cone)), fan.rank);
      EXPECT_EQ(o.is_singular, !is_smooth_cone(fan.cone(o.cone)));
    }
    for (std::size_t s = 0; s < orbits.size(); ++s) {
      for (std::size_t i = s; i < orbits.size(); ++i)
        for (const auto &c : cones) {
          bool superface = std::includes(c.begin(), c.end(), orbits[i].cone.begin(), orbits[i].cone.end());
          if (!superface)
            continue;
          bool in_suffix = false;
          for (std::size_t j = s; j < orbits.size() && !in_suffix; ++j)
            in_suffix = orbits[j].cone == c;
          EXPECT_TRUE(in_suffix) << name << " suffix " << s;
        }
    }
  }
}

TEST(Orbits, Codim2Examples) {
  auto p2 = codim2_orbits(projective_plane());
  ASSERT_EQ(p2.size(), 3u);
  for (const auto &o : p2)
    EXPECT_EQ(o.orbit_dim, 0u);
  EXPECT_TRUE(codim2_orbits(projective_line()).empty());

  Fan cube = cube_fan();
  auto c2 = codim2_orbits(cube);
  std::size_t expected = 0;
  for (const auto &c : all_cones(cube))
    if (cone_dimension(cube.cone(c)) >= 2)
      ++expected;
  EXPECT_EQ(c2.size(), expected);
  EXPECT_EQ(expected, 12u + 6u);
}

TEST(Orbits, SingularOrbitsLieInCodim2) {
  for (const auto &[name, fan] : complete_corpus()) {
    auto c2 = codim2_orbits(fan);
    for (const auto &o : list_orbits(fan))
      if (o.is_singular)
        EXPECT_NE(std::find(c2.begin(), c2.end(), o), c2.end()) << name;
  }
}

TEST(PrimitiveCollections, Examples) {
  EXPECT_EQ(primitive_collections(projective_plane()), (std::vector<RaySet>{{0, 1, 2}}));
  EXPECT_EQ(primitive_collections(p1_times_p1()), (std::vector<RaySet>{{0, 1}, {2, 3}}));
  EXPECT_EQ(primitive_collections(projective_line()), (std::vector<RaySet>{{0, 1}}));
  try {
    primitive_collections(cube_fan());
    FAIL();
  } catch (const ToricError &e) {
    EXPECT_EQ(e.code(), "NotSimplicial");
  }
}

TEST(Support, Membership) {
  Fan f = make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}});
  EXPECT_TRUE(in_support(f, to_integers({3, 4})));
  EXPECT_FALSE(in_support(f, to_integers({-1, 4})));
  EXPECT_TRUE(in_support(projective_plane(), to_integers({-5, 7})));
}

TEST(Faces, SquareCone) {
  Fan cube = cube_fan();
  auto faces = cone_faces(cube, cube.max_cones.front());
  // the cone, 4 edges, 4 rays and the zero cone
  EXPECT_EQ(faces.size(), 10u);
  EXPECT_EQ(cone_facets(cube, cube.max_cones.front()).size(), 4u);
}
