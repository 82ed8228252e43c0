#include "torickit/fan.hpp"

#include "torickit/errors.hpp"
#include "torickit/lattice.hpp"
#include "torickit/linalg.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace torickit {

Cone Fan::cone(const RaySet &indices) const {
  Cone c;
  c.rank = rank;
  c.rays.reserve(indices.size());
  for (auto i : indices) {
    if (i >= rays.size())
      throw ToricError("BadConeIndex", "ray index " + std::to_string(i) + " out of range");
    c.rays.push_back(rays[i]);
  }
  return c;
}

std::string format_ray_set(const RaySet &s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

namespace {

RatVector negated(const IntVector &v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = -v[i];
  return out;
}

bool is_zero(const IntVector &v) {
  return std::all_of(v.begin(), v.end(), [](const Integer &x) { return x == 0; });
}

IntegerMatrix ray_matrix(const Cone &c) { return IntegerMatrix::from_rows(c.rays, c.rank); }

std::vector<std::size_t> positions_of(const RaySet &sub, const RaySet &super) {
  std::vector<std::size_t> pos;
  for (auto i : sub)
    pos.push_back(static_cast<std::size_t>(std::find(super.begin(), super.end(), i) - super.begin()));
  return pos;
}

} // namespace

bool is_face(const Cone &cone, const std::vector<std::size_t> &positions) {
  std::vector<bool> in(cone.rays.size(), false);
  for (auto p : positions)
    in[p] = true;
  std::vector<RatVector> zero, positive;
  for (std::size_t i = 0; i < cone.rays.size(); ++i)
    (in[i] ? zero : positive).push_back(to_rationals(cone.rays[i]));
  return linalg::strictly_feasible(zero, positive, cone.rank);
}

std::size_t cone_dimension(const Cone &cone) {
  if (cone.rays.empty())
    return 0;
  return linalg::rank(cone.rays);
}

bool is_simplicial_cone(const Cone &cone) { return cone_dimension(cone) == cone.rays.size(); }

bool is_smooth_cone(const Cone &cone) {
  if (!is_simplicial_cone(cone))
    return false;
  if (cone.rays.empty())
    return true;
  SnfResult s = smith_normal_form(ray_matrix(cone));
  return std::all_of(s.diagonal.begin(), s.diagonal.end(), [](const Integer &d) { return d == 1; });
}

Integer cone_multiplicity(const Cone &cone) {
  if (!is_simplicial_cone(cone))
    throw ToricError("NotSimplicial", "cone with " + std::to_string(cone.rays.size()) + " rays has dimension " +
                                          std::to_string(cone_dimension(cone)));
  if (cone.rays.empty())
    return 1;
  SnfResult s = smith_normal_form(ray_matrix(cone));
  Integer m = 1;
  for (const auto &d : s.diagonal)
    m *= d;
  return m;
}

ValidationReport validate_fan(const Fan &fan) {
  ValidationReport report;
  auto add = [&](std::string kind, std::string detail) {
    report.violations.push_back({std::move(kind), std::move(detail)});
  };

  bool rays_ok = true;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const IntVector &r = fan.rays[i];
    if (r.size() != fan.rank) {
      add("RankMismatch", "ray at index " + std::to_string(i) + " has length " + std::to_string(r.size()));
      rays_ok = false;
      continue;
    }
    if (is_zero(r)) {
      add("ZeroRay", "at index " + std::to_string(i));
      rays_ok = false;
      continue;
    }
    if (primitive_vector(r) != r) {
      add("NonPrimitiveRay", "at index " + std::to_string(i));
      rays_ok = false;
    }
    for (std::size_t j = 0; j < i; ++j)
      if (fan.rays[j] == r)
        add("DuplicateRay", "index " + std::to_string(i) + " repeats index " + std::to_string(j));
  }

  std::vector<bool> used(fan.rays.size(), false);
  bool cones_ok = true;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const RaySet &s = fan.max_cones[c];
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] >= fan.rays.size()) {
        add("BadConeIndex", "cone " + std::to_string(c) + " references ray " + std::to_string(s[k]));
        cones_ok = false;
      } else {
        used[s[k]] = true;
      }
      if (k > 0 && s[k] <= s[k - 1]) {
        add("BadConeIndex", "cone " + std::to_string(c) + " is not a strictly increasing index list");
        cones_ok = false;
      }
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i])
      add("UnusedRay", "at index " + std::to_string(i));
  if (!rays_ok || !cones_ok)
    return report;

  std::vector<bool> convex(fan.max_cones.size(), true);
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    Cone cone = fan.cone(fan.max_cones[c]);
    if (!is_face(cone, {})) {
      add("NotStronglyConvex", "cone " + std::to_string(c) + " " + format_ray_set(fan.max_cones[c]));
      convex[c] = false;
      continue;
    }
    for (std::size_t k = 0; k < cone.rays.size(); ++k)
      if (!is_face(cone, {k}))
        add("RedundantRay", "ray " + std::to_string(fan.max_cones[c][k]) + " of cone " + std::to_string(c) +
                                " is not extreme");
  }

  for (std::size_t a = 0; a < fan.max_cones.size(); ++a)
    for (std::size_t b = a + 1; b < fan.max_cones.size(); ++b) {
      if (!convex[a] || !convex[b])
        continue;
      const RaySet &sa = fan.max_cones[a];
      const RaySet &sb = fan.max_cones[b];
      RaySet common;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
      std::vector<RatVector> zero, positive;
      for (auto i : common)
        zero.push_back(to_rationals(fan.rays[i]));
      for (auto i : sa)
        if (!std::binary_search(common.begin(), common.end(), i))
          positive.push_back(to_rationals(fan.rays[i]));
      for (auto i : sb)
        if (!std::binary_search(common.begin(), common.end(), i))
          positive.push_back(negated(fan.rays[i]));
      if (!linalg::strictly_feasible(zero, positive, fan.rank))
        add("NotFaceIntersection", "cones " + std::to_string(a) + " " + format_ray_set(sa) + " and " +
                                       std::to_string(b) + " " + format_ray_set(sb));
    }
  return report;
}

void require_valid_fan(const Fan &fan) {
  ValidationReport r = validate_fan(fan);
  if (!r.valid())
    throw ToricError("InvalidFan", r.violations.front().kind + " " + r.violations.front().detail);
}

std::vector<RaySet> cone_faces(const Fan &fan, const RaySet &cone_set) {
  Cone cone = fan.cone(cone_set);
  const std::size_t k = cone.rays.size();
  std::vector<RaySet> faces;
  if (is_simplicial_cone(cone)) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      RaySet f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i))
          f.push_back(cone_set[i]);
      faces.push_back(std::move(f));
    }
  } else {
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<std::size_t> pos;
      RaySet f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i)) {
          pos.push_back(i);
          f.push_back(cone_set[i]);
        }
      if (mask + 1 == (std::size_t{1} << k) || is_face(cone, pos))
        faces.push_back(std::move(f));
    }
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

std::vector<RaySet> cone_facets(const Fan &fan, const RaySet &cone_set) {
  std::size_t d = cone_dimension(fan.cone(cone_set));
  std::vector<RaySet> out;
  if (d == 0)
    return out;
  for (auto &f : cone_faces(fan, cone_set))
    if (cone_dimension(fan.cone(f)) + 1 == d)
      out.push_back(std::move(f));
  return out;
}

std::vector<RaySet> all_cones(const Fan &fan) {
  std::set<RaySet> cones;
  cones.insert(RaySet{});
  for (const auto &m : fan.max_cones)
    for (auto &f : cone_faces(fan, m))
      cones.insert(std::move(f));
  return {cones.begin(), cones.end()};
}

bool fan_has_cone(const Fan &fan, const RaySet &cone) {
  for (const auto &m : fan.max_cones) {
    if (!std::includes(m.begin(), m.end(), cone.begin(), cone.end()))
      continue;
    Cone c = fan.cone(m);
    if (is_simplicial_cone(c) || is_face(c, positions_of(cone, m)))
      return true;
  }
  return false;
}

bool is_simplicial(const Fan &fan) {
  return std::all_of(fan.max_cones.begin(), fan.max_cones.end(),
                     [&](const RaySet &m) { return is_simplicial_cone(fan.cone(m)); });
}

bool is_smooth(const Fan &fan) {
  return std::all_of(fan.max_cones.begin(), fan.max_cones.end(),
                     [&](const RaySet &m) { return is_smooth_cone(fan.cone(m)); });
}

bool in_support(const Fan &fan, const IntVector &v) {
  if (v.size() != fan.rank)
    throw ToricError("DimensionMismatch", "vector length differs from fan rank");
  for (const auto &m : fan.max_cones)
    if (linalg::in_cone(v, fan.cone(m).rays))
      return true;
  return is_zero(v);
}

std::vector<Wall> walls(const Fan &fan) {
  std::map<RaySet, std::vector<std::size_t>> owners;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    if (cone_dimension(fan.cone(fan.max_cones[c])) != fan.rank)
      continue;
    for (auto &f : cone_facets(fan, fan.max_cones[c]))
      owners[f].push_back(c);
  }
  std::vector<Wall> out;
  for (const auto &[face, cs] : owners)
    if (cs.size() == 2)
      out.push_back({cs[0], cs[1], face});
  return out;
}

bool is_complete(const Fan &fan) {
  require_valid_fan(fan);
  if (fan.rank == 0)
    return true;
  if (fan.max_cones.empty())
    return false;
  for (const auto &m : fan.max_cones)
    if (cone_dimension(fan.cone(m)) != fan.rank)
      return false;

  std::map<RaySet, std::vector<std::size_t>> owners;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c)
    for (auto &f : cone_facets(fan, fan.max_cones[c]))
      owners[f].push_back(c);

  std::vector<std::vector<std::size_t>> adjacent(fan.max_cones.size());
  for (const auto &[face, cs] : owners) {
    if (cs.size() != 2)
      return false;
    adjacent[cs[0]].push_back(cs[1]);
    adjacent[cs[1]].push_back(cs[0]);
  }
  std::vector<bool> seen(fan.max_cones.size(), false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    std::size_t c = q.front();
    q.pop();
    for (auto d : adjacent[c])
      if (!seen[d]) {
        seen[d] = true;
        ++count;
        q.push(d);
      }
  }
  return count == fan.max_cones.size();
}

std::vector<OrbitDescriptor> list_orbits(const Fan &fan) {
  std::vector<OrbitDescriptor> out;
  for (auto &c : all_cones(fan)) {
    Cone cone = fan.cone(c);
    std::size_t d = cone_dimension(cone);
    out.push_back({c, fan.rank - d, !is_smooth_cone(cone)});
  }
  std::stable_sort(out.begin(), out.end(), [](const OrbitDescriptor &a, const OrbitDescriptor &b) {
    if (a.orbit_dim != b.orbit_dim)
      return a.orbit_dim > b.orbit_dim;
    return a.cone < b.cone;
  });
  return out;
}

std::vector<OrbitDescriptor> codim2_orbits(const Fan &fan) {
  std::vector<OrbitDescriptor> out;
  for (auto &o : list_orbits(fan))
    if (o.orbit_dim + 2 <= fan.rank)
      out.push_back(std::move(o));
  return out;
}

std::vector<RaySet> primitive_collections(const Fan &fan) {
  if (!is_simplicial(fan))
    throw ToricError("NotSimplicial", "primitive collections need a simplicial fan");
  std::vector<RaySet> cones = all_cones(fan);
  std::set<RaySet> cone_set(cones.begin(), cones.end());
  std::set<RaySet> found;
  for (const auto &c : cones)
    for (std::size_t j = 0; j < fan.rays.size(); ++j) {
      if (std::binary_search(c.begin(), c.end(), j))
        continue;
      RaySet p = c;
      p.insert(std::upper_bound(p.begin(), p.end(), j), j);
      if (cone_set.count(p) || found.count(p))
        continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop < p.size() && minimal; ++drop) {
        RaySet sub = p;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        minimal = cone_set.count(sub) > 0;
      }
      if (minimal)
        found.insert(std::move(p));
    }
  return {found.begin(), found.end()};
}

} // namespace torickit
