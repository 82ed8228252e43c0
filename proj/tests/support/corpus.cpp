#include "support/corpus.hpp"

#include "torickit/errors.hpp"

#include <algorithm>
#include <set>

namespace torickit::testing {

Fan make_fan(std::size_t rank, const std::vector<std::vector<long>> &rays, const std::vector<RaySet> &cones) {
  Fan f;
  f.rank = rank;
  for (const auto &r : rays) {
    IntVector v;
    for (long x : r)
      v.emplace_back(x);
    f.rays.push_back(std::move(v));
  }
  f.max_cones = cones;
  return f;
}

Fan projective_line() { return make_fan(1, {{1}, {-1}}, {{0}, {1}}); }

Fan projective_plane() { return make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}); }

Fan p1_times_p1() {
  return make_fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {1, 2}, {1, 3}, {0, 3}});
}

Fan weighted_p121() { return make_fan(2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}}); }

Fan weighted_plane(long a, long b) { return make_fan(2, {{1, 0}, {0, 1}, {-a, -b}}, {{0, 1}, {1, 2}, {0, 2}}); }

Fan hirzebruch(long a) {
  return make_fan(2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

Fan hexagon() {
  return make_fan(2, {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}},
                  {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

Fan projective_space(std::size_t n) {
  std::vector<std::vector<long>> rays;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    rays.push_back(e);
  }
  rays.push_back(std::vector<long>(n, -1));
  std::vector<RaySet> cones;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    RaySet c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip)
        c.push_back(i);
    cones.push_back(c);
  }
  return make_fan(n, rays, cones);
}

Fan p1_cubed() {
  std::vector<std::vector<long>> rays = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  std::vector<RaySet> cones;
  for (std::size_t a : {0, 1})
    for (std::size_t b : {2, 3})
      for (std::size_t c : {4, 5})
        cones.push_back({a, b, c});
  return make_fan(3, rays, cones);
}

Fan cube_fan() {
  std::vector<std::vector<long>> rays;
  for (long x : {1, -1})
    for (long y : {1, -1})
      for (long z : {1, -1})
        rays.push_back({x, y, z});
  std::vector<RaySet> cones;
  for (std::size_t axis = 0; axis < 3; ++axis)
    for (long sign : {1, -1}) {
      RaySet c;
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (rays[i][axis] == sign)
          c.push_back(i);
      cones.push_back(c);
    }
  return make_fan(3, rays, cones);
}

Fan fan_with_cone(long a, long k) {
  return make_fan(2, {{1, 0}, {a, k}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}});
}

namespace {

long det3(const std::vector<long> &a, const std::vector<long> &b, const std::vector<long> &c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

std::vector<long> sub(const std::vector<long> &a, const std::vector<long> &b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

} // namespace

Fan face_fan_3d(const std::vector<std::vector<long>> &points) {
  const std::size_t n = points.size();
  std::set<RaySet> facets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto u = sub(points[j], points[i]);
        auto v = sub(points[k], points[i]);
        int pos = 0, neg = 0;
        RaySet on;
        for (std::size_t m = 0; m < n; ++m) {
          long s = det3(u, v, sub(points[m], points[i]));
          if (s > 0)
            ++pos;
          else if (s < 0)
            ++neg;
          else
            on.push_back(m);
        }
        if (on.size() == n)
          continue;
        if (pos == 0 || neg == 0)
          facets.insert(on);
      }
  return make_fan(3, points, {facets.begin(), facets.end()});
}

Fan weighted_space_1121() {
  return make_fan(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -2}},
                  {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

std::vector<NamedFan> complete_corpus() {
  return {
      {"P1", projective_line()},
      {"P2", projective_plane()},
      {"P1xP1", p1_times_p1()},
      {"P(1,2,1)", weighted_p121()},
      {"P(2,3,1)", weighted_plane(2, 3)},
      {"F1", hirzebruch(1)},
      {"F2", hirzebruch(2)},
      {"F3", hirzebruch(3)},
      {"hexagon", hexagon()},
      {"P3", projective_space(3)},
      {"P1xP1xP1", p1_cubed()},
      {"cube", cube_fan()},
      {"P(1,1,2,1)", weighted_space_1121()},
  };
}

} // namespace torickit::testing
