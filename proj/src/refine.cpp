#include "torickit/refine.hpp"

#include "torickit/errors.hpp"
#include "torickit/lattice.hpp"
#include "torickit/linalg.hpp"

#include <algorithm>
#include <map>

namespace torickit {

namespace {

std::vector<IntVector> rays_of(const Fan &fan, const RaySet &s) {
  std::vector<IntVector> out;
  for (std::size_t i : s)
    out.push_back(fan.rays[i]);
  return out;
}

RaySet with(RaySet s, std::size_t i) {
  s.insert(std::upper_bound(s.begin(), s.end(), i), i);
  return s;
}

RaySet without(const RaySet &s, std::size_t i) {
  RaySet out;
  for (std::size_t j : s)
    if (j != i)
      out.push_back(j);
  return out;
}

void replace_cones(Fan &fan, const std::vector<RaySet> &before, const std::vector<RaySet> &after,
                   const RaySet &anchor) {
  std::vector<RaySet> next;
  bool placed = false;
  for (const auto &c : fan.max_cones) {
    if (std::find(before.begin(), before.end(), c) != before.end()) {
      if (!placed && c == anchor) {
        next.insert(next.end(), after.begin(), after.end());
        placed = true;
      }
      continue;
    }
    next.push_back(c);
  }
  if (!placed)
    next.insert(next.end(), after.begin(), after.end());
  fan.max_cones = std::move(next);
}

// Placing triangulation of the cone spanned by the given global rays.
std::vector<RaySet> placing_triangulation(const Fan &fan, const RaySet &cone) {
  std::vector<RaySet> simplices;
  RaySet placed;
  for (std::size_t w : cone) {
    if (placed.empty()) {
      simplices.push_back({w});
      placed.push_back(w);
      continue;
    }
    std::vector<IntVector> span = rays_of(fan, placed);
    std::size_t before_rank = linalg::rank(span);
    span.push_back(fan.rays[w]);
    if (linalg::rank(span) > before_rank) {
      for (auto &s : simplices)
        s = with(s, w);
    } else {
      std::map<RaySet, int> facet_count;
      for (const auto &s : simplices)
        for (std::size_t i : s)
          ++facet_count[without(s, i)];
      std::vector<RaySet> added;
      for (const auto &s : simplices) {
        auto lambda = linalg::solve_combination(rays_of(fan, s), fan.rays[w]);
        if (!lambda)
          throw ToricError("Internal", "placing triangulation lost the span");
        for (std::size_t j = 0; j < s.size(); ++j) {
          if ((*lambda)[j] >= 0)
            continue;
          RaySet facet = without(s, s[j]);
          if (facet_count[facet] == 1)
            added.push_back(with(facet, w));
        }
      }
      simplices.insert(simplices.end(), added.begin(), added.end());
    }
    placed.push_back(w);
  }
  std::sort(simplices.begin(), simplices.end());
  return simplices;
}

Integer multiplicity_in(const Fan &fan, const RaySet &c) {
  if (c.empty())
    return 1;
  return cone_multiplicity(fan.cone(c));
}

} // namespace

std::pair<Fan, SubdivisionStep> stellar_subdivision(const Fan &fan, const IntVector &v) {
  if (v.size() != fan.rank)
    throw ToricError("DimensionMismatch", "ray length differs from fan rank");
  IntVector p = primitive_vector(v);
  if (p != v)
    throw ToricError("NotPrimitive", format_vector(v) + " is not primitive");
  SubdivisionStep step;
  step.kind = StepKind::Stellar;
  step.new_ray = v;
  if (std::find(fan.rays.begin(), fan.rays.end(), v) != fan.rays.end())
    return {fan, step};
  if (!in_support(fan, v))
    throw ToricError("RayOutsideSupport", format_vector(v) + " is outside the support");

  Fan out = fan;
  const std::size_t idx = out.rays.size();
  out.rays.push_back(v);
  std::vector<RaySet> next;
  for (const auto &c : fan.max_cones) {
    if (!linalg::in_cone(v, rays_of(fan, c))) {
      next.push_back(c);
      continue;
    }
    step.before.push_back(c);
    for (const auto &facet : cone_facets(fan, c)) {
      if (linalg::in_cone(v, rays_of(fan, facet)))
        continue;
      RaySet joined = with(facet, idx);
      next.push_back(joined);
      step.after.push_back(joined);
    }
  }
  out.max_cones = std::move(next);
  return {out, step};
}

Fan apply_step(const Fan &fan, const SubdivisionStep &step) {
  if (step.kind == StepKind::Stellar) {
    if (!step.new_ray)
      throw ToricError("InvalidStep", "stellar step without a ray");
    return stellar_subdivision(fan, *step.new_ray).first;
  }
  for (const auto &c : step.before)
    if (std::find(fan.max_cones.begin(), fan.max_cones.end(), c) == fan.max_cones.end())
      throw ToricError("InvalidStep", "cone " + format_ray_set(c) + " is not maximal");
  Fan out = fan;
  replace_cones(out, step.before, step.after, step.before.empty() ? RaySet{} : step.before.front());
  return out;
}

Refinement qfactorialize(const Fan &fan) {
  require_valid_fan(fan);
  Refinement r{fan, {}};
  for (const auto &c : fan.max_cones) {
    if (is_simplicial_cone(fan.cone(c)))
      continue;
    SubdivisionStep step;
    step.kind = StepKind::Triangulation;
    step.before = {c};
    step.after = placing_triangulation(fan, c);
    r.fan = apply_step(r.fan, step);
    r.steps.push_back(std::move(step));
  }
  return r;
}

std::vector<std::pair<RatVector, IntVector>> parallelepiped_points(const std::vector<IntVector> &rays) {
  std::vector<std::pair<RatVector, IntVector>> out;
  if (rays.empty())
    return out;
  const std::size_t n = rays.front().size();
  const std::size_t k = rays.size();
  IntegerMatrix r = IntegerMatrix::from_rows(rays, n);
  SublatticeBasis sat(n, saturation_with_complement(r).saturation);
  std::vector<IntVector> coords;
  for (const auto &ray : rays)
    coords.push_back(sublattice_coordinates(ray, sat));
  IntegerMatrix c = IntegerMatrix::from_rows(coords, k);
  SnfResult snf = smith_normal_form(c);
  IntegerMatrix right_inv = unimodular_inverse(snf.right);

  IntVector z(k, 0);
  for (;;) {
    IntVector y = z * right_inv;
    auto lambda = linalg::solve_combination(coords, y);
    if (!lambda)
      throw ToricError("Internal", "parallelepiped coordinates");
    RatVector frac(k);
    bool zero = true;
    for (std::size_t i = 0; i < k; ++i) {
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), (*lambda)[i].get_num_mpz_t(), (*lambda)[i].get_den_mpz_t());
      frac[i] = (*lambda)[i] - Rational(fl);
      zero = zero && frac[i] == 0;
    }
    if (!zero) {
      RatVector point(n, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
          point[j] += frac[i] * rays[i][j];
      IntVector ip(n);
      for (std::size_t j = 0; j < n; ++j)
        ip[j] = point[j].get_num();
      out.emplace_back(frac, ip);
    }
    std::size_t i = 0;
    while (i < k) {
      ++z[i];
      if (z[i] < snf.diagonal[i])
        break;
      z[i] = 0;
      ++i;
    }
    if (i == k)
      break;
  }
  return out;
}

Refinement resolve_to_smooth(const Fan &fan) {
  require_valid_fan(fan);
  if (!is_simplicial(fan))
    throw ToricError("NotSimplicial", "resolve a Q-factorialization instead");
  Refinement r{fan, {}};
  for (;;) {
    const RaySet *worst = nullptr;
    Integer worst_mult = 1;
    for (const auto &c : r.fan.max_cones) {
      Integer m = multiplicity_in(r.fan, c);
      if (m > 1 && (!worst || m > worst_mult || (m == worst_mult && c < *worst))) {
        worst = &c;
        worst_mult = m;
      }
    }
    if (!worst)
      break;
    auto points = parallelepiped_points(rays_of(r.fan, *worst));
    const std::pair<RatVector, IntVector> *best = nullptr;
    Rational best_sum;
    for (const auto &p : points) {
      Rational s = 0;
      for (const auto &l : p.first)
        s += l;
      if (!best || s < best_sum || (s == best_sum && p.second < best->second)) {
        best = &p;
        best_sum = s;
      }
    }
    auto [next, step] = stellar_subdivision(r.fan, primitive_vector(best->second));
    r.fan = std::move(next);
    r.steps.push_back(std::move(step));
  }
  return r;
}

MarkedResolution resolve_marked(const Fan &fan, const std::vector<RaySet> &marked) {
  require_valid_fan(fan);
  for (const auto &m : marked) {
    bool maximal = std::find(fan.max_cones.begin(), fan.max_cones.end(), m) != fan.max_cones.end();
    if (!maximal || cone_dimension(fan.cone(m)) != fan.rank)
      throw ToricError("NotFixedPoint", format_ray_set(m) + " is not a full-dimensional maximal cone");
  }
  MarkedResolution out{fan, {}, {}, {}};
  for (const auto &m : marked) {
    if (std::any_of(out.exceptional.begin(), out.exceptional.end(), [&](const auto &e) { return e.first == m; }))
      continue;
    IntVector sum(fan.rank, 0);
    for (std::size_t i : m)
      for (std::size_t j = 0; j < fan.rank; ++j)
        sum[j] += fan.rays[i][j];
    IntVector v = primitive_vector(sum);
    auto [next, step] = stellar_subdivision(out.fan, v);
    out.fan = std::move(next);
    out.steps.push_back(std::move(step));
    auto pos = std::find(out.fan.rays.begin(), out.fan.rays.end(), v);
    out.exceptional.emplace_back(m, static_cast<std::size_t>(pos - out.fan.rays.begin()));
  }
  Refinement q = qfactorialize(out.fan);
  out.steps.insert(out.steps.end(), q.steps.begin(), q.steps.end());
  Refinement res = resolve_to_smooth(q.fan);
  out.steps.insert(out.steps.end(), res.steps.begin(), res.steps.end());
  out.fan = std::move(res.fan);
  if (!marked.empty())
    out.citations.push_back(cite("divisorial-points-condition"));
  return out;
}

} // namespace torickit
