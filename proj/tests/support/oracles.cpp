#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace torickit::testing {

long long small_det(const SmallMat &m) {
  const std::size_t n = m.size();
  if (n == 0)
    return 1;
  if (n == 1)
    return m[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    SmallMat minor;
    for (std::size_t r = 1; r < n; ++r) {
      SmallVec row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c)
          row.push_back(m[r][j]);
      minor.push_back(row);
    }
    long long term = m[0][c] * small_det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

namespace {

// Coordinates (columns) on which the k x k minor of the ray matrix is nonzero.
std::vector<std::size_t> independent_columns(const SmallMat &rays) {
  const std::size_t k = rays.size();
  const std::size_t n = rays.front().size();
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    SmallMat sq(k, SmallVec(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        sq[i][j] = rays[i][pick[j]];
    if (small_det(sq) != 0)
      return pick;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      throw std::invalid_argument("rays are linearly dependent");
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j)
      pick[j] = pick[j - 1] + 1;
  }
}

} // namespace

long long parallelepiped_point_count(const SmallMat &rays) {
  const std::size_t k = rays.size();
  if (k == 0)
    return 1;
  const std::size_t n = rays.front().size();
  std::vector<std::size_t> cols = independent_columns(rays);
  SmallMat sq(k, SmallVec(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      sq[i][j] = rays[i][cols[j]];
  const long long det = small_det(sq);

  SmallVec lo(n, 0), hi(n, 0);
  for (const auto &r : rays)
    for (std::size_t j = 0; j < n; ++j) {
      lo[j] += std::min(0LL, r[j]);
      hi[j] += std::max(0LL, r[j]);
    }

  long long count = 0;
  SmallVec v(lo);
  for (;;) {
    // lambda_i * det via Cramer on the chosen columns: replace row i with v
    SmallVec scaled(k);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      SmallMat m = sq;
      for (std::size_t j = 0; j < k; ++j)
        m[i][j] = v[cols[j]];
      scaled[i] = small_det(m);
      // 0 <= lambda_i < 1
      if (det > 0)
        ok = scaled[i] >= 0 && scaled[i] < det;
      else
        ok = scaled[i] <= 0 && scaled[i] > det;
    }
    if (ok) {
      // check v * det == sum scaled_i r_i on every coordinate (v in the span)
      for (std::size_t j = 0; j < n && ok; ++j) {
        long long s = 0;
        for (std::size_t i = 0; i < k; ++i)
          s += scaled[i] * rays[i][j];
        ok = s == v[j] * det;
      }
      if (ok)
        ++count;
    }
    std::size_t j = 0;
    while (j < n && v[j] == hi[j]) {
      v[j] = lo[j];
      ++j;
    }
    if (j == n)
      break;
    ++v[j];
  }
  return count;
}

bool in_row_lattice(const SmallVec &v, const SmallMat &basis) {
  const long long det = small_det(basis);
  if (det == 0)
    throw std::invalid_argument("singular basis");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    SmallMat m = basis;
    m[i] = v;
    if (small_det(m) % det != 0)
      return false;
  }
  return true;
}

long long min_exponent_by_search(const SmallMat &basis) {
  const std::size_t n = basis.size();
  for (long long r = 1;; ++r) {
    bool all = true;
    for (std::size_t i = 0; i < n && all; ++i) {
      SmallVec e(n, 0);
      e[i] = r;
      all = in_row_lattice(e, basis);
    }
    if (all)
      return r;
  }
}

std::vector<SmallVec> hirzebruch_jung_rays(long long a, long long k) {
  // unimodular T with T(1,0) = (0,1), T(a,k) = (k, a-k); the cone becomes
  // <e2, k e1 - q e2> with q = k - a, whose resolution rays follow
  // v_{i+1} = b_i v_i - v_{i-1}, k/q = [b_1, b_2, ...].
  const long long q = k - a;
  std::vector<long long> b;
  long long num = k, den = q;
  while (den != 0) {
    long long bi = (num + den - 1) / den; // ceil
    b.push_back(bi);
    long long rem = bi * den - num;
    num = den;
    den = rem;
  }
  std::vector<SmallVec> std_rays;
  SmallVec prev = {0, 1}, cur = {1, 0};
  for (std::size_t i = 0; i + 1 < b.size() + 1; ++i) {
    std_rays.push_back(cur);
    if (i + 1 == b.size())
      break;
    SmallVec next = {b[i] * cur[0] - prev[0], b[i] * cur[1] - prev[1]};
    prev = cur;
    cur = next;
  }
  // back to the original coordinates: T^{-1} = [[1,1],[1,0]]
  std::vector<SmallVec> out;
  for (const auto &v : std_rays)
    out.push_back({v[0] + v[1], v[0]});
  return out;
}

std::vector<SmallVec> compact_boundary_points(long long a, long long k) {
  // lattice points of the cone in a box, then the lower-left convex chain from
  // (1,0) to (a,k) (points with no lattice point of the cone "below" them)
  std::vector<SmallVec> pts;
  for (long long x = 0; x <= a + 1; ++x)
    for (long long y = 0; y <= k; ++y) {
      if (x == 0 && y == 0)
        continue;
      // inside <(1,0),(a,k)>: y >= 0 and k*x - a*y >= 0
      if (y >= 0 && k * x - a * y >= 0)
        pts.push_back({x, y});
    }
  // Andrew's monotone chain restricted to the hull side facing the origin
  std::sort(pts.begin(), pts.end(), [](const SmallVec &p, const SmallVec &q) {
    return p[1] != q[1] ? p[1] < q[1] : p[0] < q[0];
  });
  // the boundary facing the origin is where, for the ordered chain from (1,0)
  // to (a,k), the origin stays on the outer side; brute force: a point p lies
  // on the compact boundary iff no segment between two other cone points
  // passes strictly between p and the origin.
  std::vector<SmallVec> out;
  for (const auto &p : pts) {
    if ((p[0] == 1 && p[1] == 0) || (p[0] == a && p[1] == k))
      continue;
    bool boundary = true;
    for (const auto &u : pts) {
      for (const auto &w : pts) {
        if (u == w || u == p || w == p)
          continue;
        // p strictly beyond segment uw as seen from the origin: p = s*(t u + (1-t) w), s > 1
        // test: origin and p on opposite strict sides of line uw, and p inside cone(u, w)
        long long side_p = (w[0] - u[0]) * (p[1] - u[1]) - (w[1] - u[1]) * (p[0] - u[0]);
        long long side_o = (w[0] - u[0]) * (0 - u[1]) - (w[1] - u[1]) * (0 - u[0]);
        if (side_p == 0 || side_o == 0 || (side_p > 0) == (side_o > 0))
          continue;
        long long cu = u[0] * p[1] - u[1] * p[0];
        long long cw = w[0] * p[1] - w[1] * p[0];
        if ((cu >= 0 && cw <= 0) || (cu <= 0 && cw >= 0)) {
          boundary = false;
          break;
        }
      }
      if (!boundary)
        break;
    }
    if (boundary)
      out.push_back(p);
  }
  return out;
}

std::vector<long long> surface_intersections(const SmallMat &rays, const std::vector<long long> &d) {
  const std::size_t n = rays.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::atan2(double(rays[i][1]), double(rays[i][0])) < std::atan2(double(rays[j][1]), double(rays[j][0]));
  });
  // self-intersection -b with v_{prev} + v_{next} = b v
  std::vector<long long> self(n);
  std::vector<std::size_t> prev(n), next(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t i = order[p];
    prev[i] = order[(p + n - 1) % n];
    next[i] = order[(p + 1) % n];
    long long sx = rays[prev[i]][0] + rays[next[i]][0];
    long long sy = rays[prev[i]][1] + rays[next[i]][1];
    long long b = rays[i][0] != 0 ? sx / rays[i][0] : sy / rays[i][1];
    self[i] = -b;
  }
  std::vector<long long> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    long long s = d[i] * self[i];
    if (prev[i] != i)
      s += d[prev[i]];
    if (next[i] != i && next[i] != prev[i])
      s += d[next[i]];
    out[i] = s;
  }
  return out;
}

} // namespace torickit::testing
