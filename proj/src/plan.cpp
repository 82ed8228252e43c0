#include "torickit/plan.hpp"

#include "torickit/errors.hpp"

#include <algorithm>
#include <set>

namespace torickit {

namespace {

PlanStep verified(std::string id, std::string summary) { return {std::move(id), "verified", std::move(summary), {}}; }

PlanStep cited(const std::string &id, std::string summary) { return {id, "cited", std::move(summary), cite(id).id}; }

void require_complete(const Fan &fan) {
  require_valid_fan(fan);
  if (!is_complete(fan))
    throw ToricError("NotComplete", "the plan needs a complete fan");
}

std::vector<Citation> citations_of(const std::vector<PlanStep> &steps) {
  std::vector<Citation> out;
  for (const auto &s : steps)
    if (s.citation)
      out.push_back(cite(*s.citation));
  return out;
}

} // namespace

bool is_invariant(const std::vector<Locus> &s) {
  return std::all_of(s.begin(), s.end(), [](const Locus &l) {
    return std::all_of(l.generators.begin(), l.generators.end(), [](const CoxPolynomial &p) { return p.size() <= 1; });
  });
}

AvoidancePlan main_lemma_plan(const Fan &fan, const PointSpec &p, const PointSpec &q, const std::vector<Locus> &s) {
  require_complete(fan);
  if (points_equal(fan, p, q))
    throw ToricError("PointsNotDistinct", "P and Q coincide");
  AvoidancePlan plan;
  plan.input = fan;
  plan.p = make_point(fan, p.cox_coords);
  plan.q = make_point(fan, q.cox_coords);
  plan.s_invariant = is_invariant(s);
  plan.qfactorialization = qfactorialize(fan);
  const Fan &y = plan.qfactorialization.fan;

  plan.steps.push_back(verified("qfactorialize", std::to_string(plan.qfactorialization.steps.size()) +
                                                     " triangulation steps without new rays"));
  if (!plan.qfactorialization.steps.empty())
    plan.steps.push_back(cited("qfactorial-transfer", "curves on the Q-factorialization descend to the input"));
  if (!plan.s_invariant)
    plan.steps.push_back(cited("move-off-small-subvariety", "S is replaced by the union of codimension-2 orbits"));

  plan.orbits = codim2_orbits(y);
  plan.steps.push_back(verified("orbit-order", std::to_string(plan.orbits.size()) +
                                                   " orbits of codimension at least two, by decreasing dimension"));

  std::vector<Isogeny> chain;
  SublatticeBasis current = SublatticeBasis::standard(y.rank);
  for (std::size_t i = 0; i < plan.orbits.size(); ++i) {
    OrbitStage stage;
    stage.orbit = plan.orbits[i];
    Isogeny iso = smoothing_isogeny(y, stage.orbit.cone, current);
    if (iso.degree > 1) {
      stage.isogeny = chain.size();
      chain.push_back(iso);
      current = iso.source;
    }
    for (std::size_t j = i + 1; j < plan.orbits.size(); ++j)
      stage.z.push_back(plan.orbits[j].cone);
    plan.stages.push_back(std::move(stage));
  }
  plan.chain = make_chain(chain);
  plan.steps.push_back(verified("smoothing-isogenies", std::to_string(chain.size()) + " smoothing isogenies, index " +
                                                           to_string(plan.chain.composite_index)));
  plan.steps.push_back(cited("general-deformation-meets-properly", "each orbit is avoided by a general deformation"));
  plan.steps.push_back(cited("image-of-weakly-free-curve", "curves on the isogeny sources push forward to X"));
  plan.citations = citations_of(plan.steps);
  return plan;
}

PlanReplay replay(const AvoidancePlan &plan) {
  PlanReplay r;
  Fan f = plan.input;
  for (const auto &step : plan.qfactorialization.steps)
    f = apply_step(f, step);
  r.qfactorialization_reproduced = f == plan.qfactorialization.fan && f == qfactorialize(plan.input).fan;
  r.simplicial = is_simplicial(f);

  r.chain_smooths_cones = true;
  for (const auto &stage : plan.stages) {
    if (!stage.isogeny)
      continue;
    const Isogeny &iso = plan.chain.steps.at(*stage.isogeny);
    Fan pulled = pullback_fan(iso);
    r.chain_smooths_cones = r.chain_smooths_cones && is_smooth_cone(pulled.cone(stage.orbit.cone));
  }
  if (!plan.chain.steps.empty()) {
    try {
      compose(plan.chain);
    } catch (const ToricError &) {
      r.chain_smooths_cones = false;
    }
  }

  r.orbit_order = plan.orbits == codim2_orbits(f);
  for (std::size_t i = 0; i < plan.orbits.size(); ++i) {
    // every orbit in the closure of O_i comes after it
    std::set<RaySet> later;
    for (std::size_t j = i; j < plan.orbits.size(); ++j)
      later.insert(plan.orbits[j].cone);
    for (const auto &c : all_cones(f)) {
      const RaySet &a = plan.orbits[i].cone;
      if (std::includes(c.begin(), c.end(), a.begin(), a.end()) && !later.count(c))
        r.orbit_order = false;
    }
  }

  std::multiset<std::string> ids;
  for (const auto &c : plan.citations)
    ids.insert(c.id);
  std::vector<std::string> expected = {"general-deformation-meets-properly", "image-of-weakly-free-curve"};
  if (!plan.qfactorialization.steps.empty())
    expected.push_back("qfactorial-transfer");
  if (!plan.s_invariant)
    expected.push_back("move-off-small-subvariety");
  r.citations_complete = ids.size() == expected.size();
  for (const auto &e : expected)
    r.citations_complete = r.citations_complete && ids.count(e) == 1 && cite(e) == *std::find_if(
        plan.citations.begin(), plan.citations.end(), [&](const Citation &c) { return c.id == e; });
  return r;
}

std::vector<ParamPoint> standard_parameters(std::size_t r) {
  std::vector<ParamPoint> out = {ParamPoint(1, 0), ParamPoint(0, 1)};
  for (long k = 1; out.size() < r; ++k)
    out.emplace_back(1, k);
  out.resize(r);
  return out;
}

MainTheoremPlan main_theorem_plan(const Fan &fan, const std::vector<PointSpec> &points, const std::vector<Locus> &s,
                                  std::uint64_t seed) {
  require_complete(fan);
  MainTheoremPlan plan;
  plan.input = fan;
  plan.s = s;
  plan.seed = seed;
  for (const auto &p : points)
    plan.points.push_back(make_point(fan, p.cox_coords));
  for (std::size_t i = 0; i < plan.points.size(); ++i)
    for (std::size_t j = i + 1; j < plan.points.size(); ++j)
      if (points_equal(fan, plan.points[i], plan.points[j]))
        throw ToricError("PointsNotDistinct", "points " + std::to_string(i) + " and " + std::to_string(j) +
                                                  " coincide");

  std::vector<RaySet> marked;
  for (std::size_t i = 0; i < plan.points.size(); ++i) {
    PointClass c;
    c.point = i;
    c.cone = plan.points[i].vanishing_pattern;
    if (!fan_has_cone(fan, c.cone))
      throw ToricError("InvalidPoint", "point " + std::to_string(i) + " vanishes on " + format_ray_set(c.cone) +
                                           ", which is not a cone");
    c.smooth = c.cone.empty() || is_smooth_cone(fan.cone(c.cone));
    if (!c.smooth) {
      if (std::find(fan.max_cones.begin(), fan.max_cones.end(), c.cone) == fan.max_cones.end() ||
          cone_dimension(fan.cone(c.cone)) != fan.rank)
        throw ToricError("ToroidalizationOutOfScope", "point " + std::to_string(i) + " is singular but not torus fixed");
      c.marked = true;
      if (std::find(marked.begin(), marked.end(), c.cone) == marked.end())
        marked.push_back(c.cone);
    }
    plan.classes.push_back(c);
  }
  plan.steps.push_back(verified("classify-points", std::to_string(marked.size()) + " torus-fixed singular points"));

  if (!marked.empty()) {
    plan.resolution = resolve_marked(fan, marked);
    plan.steps.push_back(verified("resolve-marked", std::to_string(plan.resolution->steps.size()) +
                                                        " subdivision steps over the marked points"));
    plan.steps.push_back(cited("divisorial-points-condition", "exceptional loci are met only in divisorial points"));
  }
  for (std::size_t i = 0; i < plan.points.size(); ++i)
    plan.branches.push_back({i, "t_" + std::to_string(i + 1), plan.classes[i].marked});
  plan.steps.push_back(cited("comb-smoothing", "the comb through the lifted points smooths"));
  plan.steps.push_back(cited("freeness-criterion", "the smoothed curve is free over the prescribed points"));

  bool rank_one = fan.rays.size() == fan.rank + 1;
  if (rank_one) {
    unsigned d = static_cast<unsigned>(std::max<std::size_t>(1, plan.points.size()));
    plan.params = standard_parameters(plan.points.size());
    plan.curve = interpolate_avoiding(fan, plan.points, plan.params, s, d, seed);
    std::vector<AllowedPoint> allowed;
    for (std::size_t i = 0; i < plan.points.size(); ++i)
      allowed.push_back({plan.params[i], plan.points[i]});
    plan.curve_report = avoidance_verify(*plan.curve, s, allowed);
    plan.steps.push_back(verified("interpolate-avoiding", "degree " + std::to_string(d) +
                                                              " curve through the points, disjoint from S elsewhere"));
  }
  plan.citations = citations_of(plan.steps);
  return plan;
}

} // namespace torickit
