#include "torickit/divisor.hpp"

#include "torickit/errors.hpp"
#include "torickit/linalg.hpp"

#include <algorithm>

namespace torickit {

namespace {

void require_length(const Fan &fan, const InvariantDivisor &d) {
  if (d.coefficients.size() != fan.rays.size())
    throw ToricError("DimensionMismatch", "divisor has " + std::to_string(d.coefficients.size()) +
                                              " coefficients for " + std::to_string(fan.rays.size()) + " rays");
}

std::optional<RatVector> solve_dual(const std::vector<IntVector> &rays, const RatVector &rhs, std::size_t n) {
  // <m, e_i> = rhs_i: combination of the columns of the ray matrix
  std::vector<RatVector> cols(n, RatVector(rays.size()));
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      cols[j][i] = rays[i][j];
  return linalg::solve_combination(cols, rhs);
}

Integer floor_of(const Rational &q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational &q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

} // namespace

InvariantDivisor operator+(const InvariantDivisor &a, const InvariantDivisor &b) {
  if (a.coefficients.size() != b.coefficients.size())
    throw ToricError("DimensionMismatch", "divisor lengths differ");
  InvariantDivisor out = a;
  for (std::size_t i = 0; i < out.coefficients.size(); ++i)
    out.coefficients[i] += b.coefficients[i];
  return out;
}

InvariantDivisor operator-(const InvariantDivisor &a, const InvariantDivisor &b) { return a + Rational(-1) * b; }

InvariantDivisor operator*(const Rational &s, const InvariantDivisor &d) {
  InvariantDivisor out = d;
  for (auto &c : out.coefficients)
    c *= s;
  return out;
}

InvariantDivisor canonical_divisor(const Fan &fan) { return {RatVector(fan.rays.size(), Rational(-1))}; }

InvariantDivisor boundary_sum(const Fan &fan) { return {RatVector(fan.rays.size(), Rational(1))}; }

InvariantDivisor div_chi(const Fan &fan, const IntVector &u) { return div_chi(fan, to_rationals(u)); }

InvariantDivisor div_chi(const Fan &fan, const RatVector &u) {
  InvariantDivisor out;
  for (const auto &r : fan.rays)
    out.coefficients.push_back(dot(u, r));
  return out;
}

std::optional<CartierData> try_cartier_data(const Fan &fan, const InvariantDivisor &d) {
  require_length(fan, d);
  CartierData out;
  out.integral = true;
  for (const auto &c : fan.max_cones) {
    std::vector<IntVector> rays;
    RatVector rhs;
    for (std::size_t i : c) {
      rays.push_back(fan.rays[i]);
      rhs.push_back(-d.coefficients[i]);
    }
    auto m = solve_dual(rays, rhs, fan.rank);
    if (!m)
      return std::nullopt;
    for (const auto &x : *m)
      out.integral = out.integral && x.get_den() == 1;
    out.cones.push_back(c);
    out.m.push_back(*m);
  }
  return out;
}

CartierData cartier_data(const Fan &fan, const InvariantDivisor &d) {
  require_length(fan, d);
  for (const auto &c : fan.max_cones) {
    InvariantDivisor local{RatVector(fan.rays.size(), Rational(0))};
    Fan single{fan.rank, fan.rays, {c}};
    for (std::size_t i : c)
      local.coefficients[i] = d.coefficients[i];
    if (!try_cartier_data(single, local))
      throw ToricError("NotQCartier", "no linear function on cone " + format_ray_set(c));
  }
  return *try_cartier_data(fan, d);
}

bool is_q_cartier(const Fan &fan, const InvariantDivisor &d) { return try_cartier_data(fan, d).has_value(); }

bool is_ample(const Fan &fan, const InvariantDivisor &d) {
  if (!is_complete(fan))
    throw ToricError("NotComplete", "ampleness is tested on complete fans");
  CartierData data = cartier_data(fan, d);
  for (const auto &w : walls(fan)) {
    for (int side = 0; side < 2; ++side) {
      std::size_t own = side == 0 ? w.first : w.second;
      std::size_t other = side == 0 ? w.second : w.first;
      for (std::size_t i : fan.max_cones[other]) {
        if (std::binary_search(fan.max_cones[own].begin(), fan.max_cones[own].end(), i))
          continue;
        if (dot(data.m[own], fan.rays[i]) + d.coefficients[i] <= 0)
          return false;
      }
    }
  }
  return true;
}

DivisorPolytope divisor_polytope(const Fan &fan, const InvariantDivisor &d) {
  require_length(fan, d);
  return {fan.rays, d.coefficients};
}

std::vector<RatVector> polytope_vertices(const DivisorPolytope &p) {
  std::vector<RatVector> out;
  if (p.normals.empty())
    return out;
  const std::size_t n = p.normals.front().size();
  const std::size_t m = p.normals.size();
  if (m < n)
    return out;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i)
    pick[i] = i;
  for (;;) {
    std::vector<IntVector> rows;
    RatVector rhs;
    for (std::size_t i : pick) {
      rows.push_back(p.normals[i]);
      rhs.push_back(-p.offsets[i]);
    }
    if (linalg::rank(rows) == n) {
      auto v = solve_dual(rows, rhs, n);
      bool inside = v.has_value();
      for (std::size_t i = 0; i < m && inside; ++i)
        inside = dot(*v, p.normals[i]) + p.offsets[i] >= 0;
      if (inside && std::find(out.begin(), out.end(), *v) == out.end())
        out.push_back(*v);
    }
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == m - n + i - 1)
      --i;
    if (i == 0)
      break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j)
      pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t interior_search_bound(std::size_t rank) { return 2 * (rank + 1); }

namespace {

// Lexicographically smallest integer y with <a_i, y> + b_i > 0 for all i,
// found coordinate by coordinate using the vertex range of each slice.
std::optional<IntVector> lex_min_strict_point(const std::vector<IntVector> &normals, const RatVector &offsets) {
  const std::size_t n = normals.front().size();
  if (n == 0) {
    for (const auto &b : offsets)
      if (b <= 0)
        return std::nullopt;
    return IntVector{};
  }
  std::vector<RatVector> vertices = polytope_vertices({normals, offsets});
  if (vertices.empty())
    return std::nullopt;
  Rational lo = vertices.front()[0], hi = lo;
  for (const auto &v : vertices) {
    lo = std::min(lo, v[0]);
    hi = std::max(hi, v[0]);
  }
  std::vector<IntVector> rest;
  for (const auto &a : normals)
    rest.emplace_back(a.begin() + 1, a.end());
  for (Integer x = floor_of(lo); x <= ceil_of(hi); ++x) {
    RatVector shifted(offsets.size());
    for (std::size_t i = 0; i < offsets.size(); ++i)
      shifted[i] = offsets[i] + Rational(normals[i][0] * x);
    auto tail = lex_min_strict_point(rest, shifted);
    if (tail) {
      IntVector out{x};
      out.insert(out.end(), tail->begin(), tail->end());
      return out;
    }
  }
  return std::nullopt;
}

} // namespace

ScaledInteriorPoint interior_point_with_scaling(const DivisorPolytope &p) {
  if (polytope_vertices(p).empty())
    throw ToricError("NoInteriorPoint", "polytope has no vertices");
  const std::size_t n = p.normals.front().size();
  for (std::size_t k = 1; k <= interior_search_bound(n); ++k) {
    Integer kk = static_cast<unsigned long>(k);
    RatVector scaled = p.offsets;
    for (auto &b : scaled)
      b *= kk;
    if (auto u = lex_min_strict_point(p.normals, scaled))
      return {kk, *u};
  }
  throw ToricError("NoInteriorPoint", "no interior lattice point up to k = " + std::to_string(interior_search_bound(n)));
}

FTCertificate ft_certificate(const Fan &fan, const InvariantDivisor &l) {
  if (!is_ample(fan, l))
    throw ToricError("NotAmple", "the given divisor is not ample");
  ScaledInteriorPoint ip = interior_point_with_scaling(divisor_polytope(fan, l));
  FTCertificate cert;
  cert.k = ip.k;
  cert.u = ip.u;
  cert.ample = Rational(ip.k) * l;
  cert.d_prime = div_chi(fan, ip.u) + cert.ample;
  Rational top = *std::max_element(cert.d_prime.coefficients.begin(), cert.d_prime.coefficients.end());
  cert.epsilon = Rational(1) / (1 + top);
  cert.boundary = boundary_sum(fan) - cert.epsilon * cert.d_prime;
  return cert;
}

FTVerification verify_ft_certificate(const Fan &fan, const FTCertificate &cert) {
  FTVerification v;
  bool positive = std::all_of(cert.d_prime.coefficients.begin(), cert.d_prime.coefficients.end(),
                              [](const Rational &x) { return x > 0; });
  bool epsilon_ok = cert.epsilon > 0 && cert.epsilon < 1;
  InvariantDivisor expected = div_chi(fan, cert.u) + cert.ample;
  InvariantDivisor expected_boundary = boundary_sum(fan) - cert.epsilon * cert.d_prime;
  if (!positive || !epsilon_ok || !(expected == cert.d_prime) || !(expected_boundary == cert.boundary))
    return v;
  try {
    v.klt = klt_check(fan, cert.boundary).klt;
  } catch (const ToricError &) {
    v.klt = false;
  }
  InvariantDivisor anti = Rational(-1) * (canonical_divisor(fan) + cert.boundary);
  InvariantDivisor scaled = cert.epsilon * cert.d_prime;
  try {
    v.anti_log_canonical_ample = is_ample(fan, anti);
  } catch (const ToricError &) {
    v.anti_log_canonical_ample = false;
  }
  v.linearly_equivalent = linear_equivalence(fan, anti, scaled) &&
                          linear_equivalence(fan, cert.d_prime, cert.ample);
  return v;
}

KltReport klt_check(const Fan &fan, const InvariantDivisor &boundary) {
  require_length(fan, boundary);
  for (std::size_t i = 0; i < boundary.coefficients.size(); ++i)
    if (boundary.coefficients[i] < 0)
      throw ToricError("NotEffective", "negative coefficient at ray " + std::to_string(i));
  cartier_data(fan, canonical_divisor(fan) + boundary);
  KltReport r;
  for (std::size_t i = 0; i < boundary.coefficients.size(); ++i)
    if (boundary.coefficients[i] >= 1) {
      r.offending_ray = i;
      return r;
    }
  r.klt = true;
  return r;
}

bool linear_equivalence(const Fan &fan, const InvariantDivisor &d1, const InvariantDivisor &d2) {
  require_length(fan, d1);
  require_length(fan, d2);
  InvariantDivisor diff = d1 - d2;
  return solve_dual(fan.rays, diff.coefficients, fan.rank).has_value();
}

InvariantDivisor pullback_divisor(const Fan &coarse, const Fan &fine, const InvariantDivisor &d) {
  CartierData data = cartier_data(coarse, d);
  InvariantDivisor out;
  for (const auto &v : fine.rays) {
    auto it = std::find(coarse.rays.begin(), coarse.rays.end(), v);
    if (it != coarse.rays.end()) {
      out.coefficients.push_back(d.coefficients[static_cast<std::size_t>(it - coarse.rays.begin())]);
      continue;
    }
    bool found = false;
    for (std::size_t c = 0; c < coarse.max_cones.size() && !found; ++c) {
      if (!linalg::in_cone(v, coarse.cone(coarse.max_cones[c]).rays))
        continue;
      out.coefficients.push_back(-dot(data.m[c], v));
      found = true;
    }
    if (!found)
      throw ToricError("RayOutsideSupport", format_vector(v) + " is outside the coarse fan");
  }
  return out;
}

} // namespace torickit
