#include "torickit/document.hpp"

#include "torickit/errors.hpp"

#include <limits>

namespace torickit {

namespace {

// Read access with a JSON-pointer-like path for error messages.
struct Node {
  const Json &j;
  std::string path;

  [[noreturn]] void fail(const std::string &what) const {
    throw ToricError("MalformedDocument", (path.empty() ? std::string("/") : path) + ": " + what);
  }
  bool has(const std::string &key) const { return j.is_object() && j.contains(key); }
  Node at(const std::string &key) const {
    if (!j.is_object())
      fail("expected an object");
    auto it = j.find(key);
    if (it == j.end())
      fail("missing key \"" + key + "\"");
    return {*it, path + "/" + key};
  }
  Node at(std::size_t i) const { return {j.at(i), path + "/" + std::to_string(i)}; }
  std::size_t size() const {
    if (!j.is_array())
      fail("expected an array");
    return j.size();
  }
  template <class F> auto list(F f) const {
    std::vector<decltype(f(std::declval<Node>()))> out;
    for (std::size_t i = 0; i < size(); ++i)
      out.push_back(f(at(i)));
    return out;
  }
  std::string str() const {
    if (!j.is_string())
      fail("expected a string");
    return j.get<std::string>();
  }
  bool boolean() const {
    if (!j.is_boolean())
      fail("expected a boolean");
    return j.get<bool>();
  }
  Integer integer() const {
    try {
      if (j.is_number_integer())
        return Integer(static_cast<long>(j.get<long long>()));
      if (j.is_number_unsigned())
        return Integer(static_cast<unsigned long>(j.get<unsigned long long>()));
      if (j.is_string())
        return parse_integer(j.get<std::string>());
    } catch (const ToricError &) {
    }
    fail("expected an integer");
  }
  std::size_t index() const {
    Integer v = integer();
    if (v < 0 || !v.fits_ulong_p())
      fail("expected a non-negative index");
    return v.get_ui();
  }
  unsigned count() const { return static_cast<unsigned>(index()); }
  Rational rational() const {
    try {
      if (j.is_string())
        return parse_rational(j.get<std::string>());
      if (j.is_number_integer())
        return Rational(Integer(static_cast<long>(j.get<long long>())));
    } catch (const ToricError &) {
    }
    fail("expected a rational \"p/q\"");
  }
  IntVector ints() const { return list([](Node n) { return n.integer(); }); }
  RatVector rats() const { return list([](Node n) { return n.rational(); }); }
  RaySet rayset() const { return list([](Node n) { return n.index(); }); }
};

} // namespace

static Fan fan_at(const Node &n);
static InvariantDivisor divisor_at(const Node &n);
static Isogeny isogeny_at(const Node &n);
static PointSpec point_at(const Node &n);
static BinaryForm form_at(const Node &n);
static CoxCurve curve_at(const Node &n);
static std::vector<Locus> ideal_at(const Node &n);
static CertificateRecord certificate_at(const Node &n);
static ValidationReport validation_report_at(const Node &n);
static std::vector<OrbitDescriptor> orbits_at(const Node &n);
static Refinement refinement_at(const Node &n);
static MarkedResolution marked_resolution_at(const Node &n);
static AvoidanceReport avoidance_report_at(const Node &n);
static CurveValidation curve_validation_at(const Node &n);
static AvoidancePlan main_lemma_plan_at(const Node &n);
static MainTheoremPlan main_theorem_plan_at(const Node &n);

namespace {

Json enc(const Integer &v) {
  if (v.fits_slong_p())
    return static_cast<long long>(v.get_si());
  return to_string(v);
}
Json enc(const Rational &v) { return to_string(v); }
Json enc(const IntVector &v) {
  Json a = Json::array();
  for (const auto &x : v)
    a.push_back(enc(x));
  return a;
}
Json enc(const RatVector &v) {
  Json a = Json::array();
  for (const auto &x : v)
    a.push_back(enc(x));
  return a;
}
Json enc(const RaySet &s) {
  Json a = Json::array();
  for (auto i : s)
    a.push_back(i);
  return a;
}
Json enc_sets(const std::vector<RaySet> &v) {
  Json a = Json::array();
  for (const auto &s : v)
    a.push_back(enc(s));
  return a;
}
Json enc_rows(const IntegerMatrix &m) {
  Json a = Json::array();
  for (const auto &r : m.row_vectors())
    a.push_back(enc(r));
  return a;
}

std::vector<RaySet> sets(const Node &n) { return n.list([](Node x) { return x.rayset(); }); }

SublatticeBasis lattice(const Node &n, std::size_t rank) {
  auto rows = n.list([](Node x) { return x.ints(); });
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != rank)
      n.at(i).fail("expected " + std::to_string(rank) + " entries");
  return SublatticeBasis(rank, rows);
}

Json enc(const ParamPoint &p) { return Json::array({enc(p.s), enc(p.t)}); }
ParamPoint param(const Node &n) {
  if (n.size() != 2)
    n.fail("expected [s, t]");
  try {
    return ParamPoint(n.at(0).rational(), n.at(1).rational());
  } catch (const ToricError &e) {
    n.fail(e.what());
  }
}

Json enc(const Citation &c) { return {{"id", c.id}, {"statement", c.statement}}; }
Citation citation(const Node &n) { return {n.at("id").str(), n.at("statement").str()}; }
Json enc_citations(const std::vector<Citation> &cs) {
  Json a = Json::array();
  for (const auto &c : cs)
    a.push_back(enc(c));
  return a;
}

Json enc(const OrbitDescriptor &o) { return {{"cone", enc(o.cone)}, {"dim", o.orbit_dim}, {"singular", o.is_singular}}; }
OrbitDescriptor orbit(const Node &n) { return {n.at("cone").rayset(), n.at("dim").index(), n.at("singular").boolean()}; }

Json enc(const SubdivisionStep &s) {
  Json j = {{"kind", s.kind == StepKind::Stellar ? "stellar" : "triangulation"},
            {"before", enc_sets(s.before)},
            {"after", enc_sets(s.after)}};
  if (s.new_ray)
    j["new_ray"] = enc(*s.new_ray);
  return j;
}
SubdivisionStep step(const Node &n) {
  SubdivisionStep s;
  std::string kind = n.at("kind").str();
  if (kind == "stellar")
    s.kind = StepKind::Stellar;
  else if (kind == "triangulation")
    s.kind = StepKind::Triangulation;
  else
    n.at("kind").fail("unknown step kind \"" + kind + "\"");
  if (n.has("new_ray"))
    s.new_ray = n.at("new_ray").ints();
  s.before = sets(n.at("before"));
  s.after = sets(n.at("after"));
  return s;
}
Json enc_steps(const std::vector<SubdivisionStep> &steps) {
  Json a = Json::array();
  for (const auto &s : steps)
    a.push_back(enc(s));
  return a;
}

Json enc(const PlanStep &s) {
  Json j = {{"id", s.id}, {"kind", s.kind}, {"summary", s.summary}};
  if (s.citation)
    j["citation"] = *s.citation;
  return j;
}
PlanStep plan_step(const Node &n) {
  PlanStep s{n.at("id").str(), n.at("kind").str(), n.at("summary").str(), {}};
  if (s.kind != "verified" && s.kind != "cited")
    n.at("kind").fail("expected \"verified\" or \"cited\"");
  if (n.has("citation"))
    s.citation = n.at("citation").str();
  return s;
}

Json enc_lattices(const Isogeny &iso) {
  return {{"ambient", enc_rows(iso.ambient.basis())}, {"source", enc_rows(iso.source.basis())}, {"degree", enc(iso.degree)}};
}
Isogeny isogeny_on(const Fan &fan, const Node &n) {
  SublatticeBasis ambient = lattice(n.at("ambient"), fan.rank), source = lattice(n.at("source"), fan.rank);
  Isogeny iso;
  try {
    iso = make_isogeny(fan, ambient, source);
  } catch (const ToricError &e) {
    n.fail(e.what());
  }
  if (iso.degree != n.at("degree").integer())
    n.at("degree").fail("degree does not match the lattices");
  return iso;
}

CoxPolynomial cox_polynomial(const Node &n, std::size_t variables) {
  return n.list([&](Node t) {
    CoxTerm term;
    term.coefficient = t.at("coefficient").rational();
    term.exponents.assign(variables, 0);
    Node mono = t.at("monomial");
    if (!mono.j.is_object())
      mono.fail("expected an object");
    for (auto it = mono.j.begin(); it != mono.j.end(); ++it) {
      const std::string &var = it.key();
      std::size_t idx = 0;
      bool ok = var.size() > 1 && var[0] == 'x' && var.find_first_not_of("0123456789", 1) == std::string::npos;
      if (ok)
        idx = std::stoul(var.substr(1));
      if (!ok || idx >= variables)
        mono.fail("unknown variable \"" + var + "\"");
      term.exponents[idx] = Node{it.value(), mono.path + "/" + var}.count();
    }
    return term;
  });
}

Json enc(const Locus &l) {
  Json gens = Json::array();
  for (const auto &g : l.generators) {
    Json terms = Json::array();
    for (const auto &t : g) {
      Json mono = Json::object();
      for (std::size_t i = 0; i < t.exponents.size(); ++i)
        if (t.exponents[i] > 0)
          mono["x" + std::to_string(i)] = t.exponents[i];
      terms.push_back({{"coefficient", enc(t.coefficient)}, {"monomial", mono}});
    }
    gens.push_back(terms);
  }
  return {{"id", l.id}, {"generators", gens}};
}

Json enc(const Witness &w) {
  Json j = {{"locus", w.locus},
            {"multiplicity", w.multiplicity},
            {"whole_curve", w.whole_curve},
            {"allowed", w.allowed},
            {"factor", encode(w.factor)}};
  if (w.param)
    j["param"] = enc(*w.param);
  return j;
}
Witness witness(const Node &n) {
  Witness w;
  w.locus = n.at("locus").str();
  w.multiplicity = n.at("multiplicity").count();
  w.whole_curve = n.at("whole_curve").boolean();
  w.allowed = n.at("allowed").boolean();
  w.factor = form_at(n.at("factor"));
  if (n.has("param"))
    w.param = param(n.at("param"));
  return w;
}

void expect_type(const Node &n, const std::string &type) {
  std::string t = n.at("type").str();
  if (t != type)
    n.at("type").fail("expected type \"" + type + "\", found \"" + t + "\"");
}

Node root(const Json &j) { return {j, ""}; }

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

} // namespace

const std::vector<std::string> &document_kinds() {
  static const std::vector<std::string> kinds = {"fan",   "divisor",     "isogeny", "curve",
                                                 "ideal", "certificate", "plan",    "report"};
  return kinds;
}

std::string emit(const Document &doc) {
  Json j = {{"kind", doc.kind}, {"version", kToolkitVersion}, {"payload", doc.payload}};
  return j.dump();
}

Document parse_document(std::string_view text, const std::optional<std::string> &expected_kind) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error &e) {
    auto [line, col] = line_column(text, e.byte);
    std::string what = e.what();
    auto pos = what.find("syntax error");
    throw ToricError("ParseError", "line " + std::to_string(line) + " column " + std::to_string(col) + ": " +
                                       (pos == std::string::npos ? what : what.substr(pos)));
  }
  bool envelope = j.is_object() && j.contains("kind") && j.contains("payload");
  if (!envelope) {
    if (!expected_kind)
      throw ToricError("MalformedDocument", "/: expected an object with \"kind\", \"version\" and \"payload\"");
    return {*expected_kind, j};
  }
  Node n = root(j);
  Document doc{n.at("kind").str(), j.at("payload")};
  if (std::find(document_kinds().begin(), document_kinds().end(), doc.kind) == document_kinds().end())
    n.at("kind").fail("unknown kind \"" + doc.kind + "\"");
  if (n.has("version") && n.at("version").str() != kToolkitVersion)
    throw ToricError("UnsupportedVersion", n.at("version").str());
  if (expected_kind && doc.kind != *expected_kind)
    throw ToricError("WrongKind", "expected a " + *expected_kind + " document, found " + doc.kind);
  return doc;
}

// ---------------------------------------------------------------- fan, divisor, isogeny

Json encode(const Fan &fan) {
  Json rays = Json::array();
  for (const auto &r : fan.rays)
    rays.push_back(enc(r));
  return {{"rank", fan.rank}, {"rays", rays}, {"max_cones", enc_sets(fan.max_cones)}};
}

static Fan fan_at(const Node &n) {
  Fan f;
  f.rank = n.at("rank").index();
  f.rays = n.at("rays").list([&](Node r) {
    IntVector v = r.ints();
    if (v.size() != f.rank)
      r.fail("expected " + std::to_string(f.rank) + " coordinates");
    return v;
  });
  f.max_cones = n.at("max_cones").list([&](Node c) {
    RaySet s = c.rayset();
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] >= f.rays.size())
        c.at(i).fail("ray index out of range");
    std::sort(s.begin(), s.end());
    return s;
  });
  return f;
}

Json encode(const InvariantDivisor &d) { return enc(d.coefficients); }
static InvariantDivisor divisor_at(const Node &n) {
  if (n.j.is_object())
    return {n.at("coefficients").rats()};
  return {n.rats()};
}

Json encode(const Isogeny &iso) {
  Json j = enc_lattices(iso);
  j["fan"] = encode(iso.fan);
  return j;
}
static Isogeny isogeny_at(const Node &n) {
  return isogeny_on(fan_at(n.at("fan")), n);
}

// ---------------------------------------------------------------- curves and ideals

Json encode(const PointSpec &p) { return {{"coords", enc(p.cox_coords)}, {"vanishing", enc(p.vanishing_pattern)}}; }
static PointSpec point_at(const Node &n) {
  RatVector coords = n.at("coords").rats();
  PointSpec p{coords, {}};
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] == 0)
      p.vanishing_pattern.push_back(i);
  if (n.has("vanishing") && n.at("vanishing").rayset() != p.vanishing_pattern)
    n.at("vanishing").fail("does not match the zero coordinates");
  return p;
}

Json encode(const BinaryForm &f) {
  if (f.is_zero())
    return {{"degree", "zero"}, {"coefficients", Json::array()}};
  return {{"degree", *f.degree()}, {"coefficients", enc(f.coefficients())}};
}
static BinaryForm form_at(const Node &n) {
  Node d = n.at("degree");
  RatVector c = n.at("coefficients").rats();
  if (d.j.is_string() && d.str() == "zero") {
    if (!c.empty())
      n.at("coefficients").fail("the zero form has no coefficients");
    return {};
  }
  unsigned deg = d.count();
  if (c.size() != deg + 1)
    n.at("coefficients").fail("expected " + std::to_string(deg + 1) + " coefficients");
  BinaryForm f(deg, c);
  if (f.is_zero())
    n.at("coefficients").fail("all coefficients vanish; use degree \"zero\"");
  return f;
}

Json encode(const CoxCurve &c) {
  Json forms = Json::array();
  for (const auto &f : c.forms)
    forms.push_back(encode(f));
  return {{"fan", encode(c.target)}, {"forms", forms}, {"degree_class", enc(c.degree_class)}};
}
static CoxCurve curve_at(const Node &n) {
  CoxCurve c;
  c.target = fan_at(n.at("fan"));
  Node forms = n.at("forms");
  for (std::size_t i = 0; i < forms.size(); ++i) {
    c.forms.push_back(form_at(forms.at(i)));
  }
  c.degree_class = n.at("degree_class").ints();
  return c;
}

Json encode_ideal(const std::vector<Locus> &loci, std::size_t variables) {
  Json a = Json::array();
  for (const auto &l : loci)
    a.push_back(enc(l));
  return {{"variables", variables}, {"loci", a}};
}
static std::vector<Locus> ideal_at(const Node &n) {
  std::size_t vars = n.at("variables").index();
  return n.at("loci").list([&](Node l) {
    Locus locus;
    locus.id = l.at("id").str();
    locus.generators = l.at("generators").list([&](Node g) { return cox_polynomial(g, vars); });
    return locus;
  });
}

// ---------------------------------------------------------------- certificates

Json encode(const CertificateRecord &c) {
  return {{"fan", encode(c.fan)},
          {"L", encode(c.l)},
          {"k", enc(c.certificate.k)},
          {"ample", encode(c.certificate.ample)},
          {"u", enc(c.certificate.u)},
          {"d_prime", encode(c.certificate.d_prime)},
          {"epsilon", enc(c.certificate.epsilon)},
          {"boundary", encode(c.certificate.boundary)},
          {"checks",
           {{"klt", c.checks.klt},
            {"anti_log_canonical_ample", c.checks.anti_log_canonical_ample},
            {"linearly_equivalent", c.checks.linearly_equivalent}}}};
}
static CertificateRecord certificate_at(const Node &n) {
  CertificateRecord c;
  c.fan = fan_at(n.at("fan"));
  c.l = divisor_at(n.at("L"));
  c.certificate.k = n.at("k").integer();
  c.certificate.ample = divisor_at(n.at("ample"));
  c.certificate.u = n.at("u").ints();
  c.certificate.d_prime = divisor_at(n.at("d_prime"));
  c.certificate.epsilon = n.at("epsilon").rational();
  c.certificate.boundary = divisor_at(n.at("boundary"));
  Node checks = n.at("checks");
  c.checks.klt = checks.at("klt").boolean();
  c.checks.anti_log_canonical_ample = checks.at("anti_log_canonical_ample").boolean();
  c.checks.linearly_equivalent = checks.at("linearly_equivalent").boolean();
  return c;
}

// ---------------------------------------------------------------- reports

Json encode(const ValidationReport &r) {
  Json v = Json::array();
  for (const auto &x : r.violations)
    v.push_back({{"kind", x.kind}, {"detail", x.detail}});
  return {{"type", "validation"}, {"valid", r.valid()}, {"violations", v}};
}
static ValidationReport validation_report_at(const Node &n) {
  expect_type(n, "validation");
  ValidationReport r;
  r.violations = n.at("violations").list([](Node v) { return FanViolation{v.at("kind").str(), v.at("detail").str()}; });
  if (n.at("valid").boolean() != r.valid())
    n.at("valid").fail("inconsistent with the violations");
  return r;
}

Json encode_orbits(const std::vector<OrbitDescriptor> &orbits) {
  Json a = Json::array();
  for (const auto &o : orbits)
    a.push_back(enc(o));
  return {{"type", "orbits"}, {"orbits", a}};
}
static std::vector<OrbitDescriptor> orbits_at(const Node &n) {
  expect_type(n, "orbits");
  return n.at("orbits").list(orbit);
}

Json encode(const Refinement &r) { return {{"type", "refinement"}, {"fan", encode(r.fan)}, {"steps", enc_steps(r.steps)}}; }
static Refinement refinement_at(const Node &n) {
  expect_type(n, "refinement");
  return {fan_at(n.at("fan")), n.at("steps").list(step)};
}

Json encode(const MarkedResolution &r) {
  Json ex = Json::array();
  for (const auto &[cone, ray] : r.exceptional)
    ex.push_back({{"cone", enc(cone)}, {"ray", ray}});
  return {{"type", "marked-resolution"},
          {"fan", encode(r.fan)},
          {"steps", enc_steps(r.steps)},
          {"exceptional", ex},
          {"citations", enc_citations(r.citations)}};
}
static MarkedResolution marked_resolution_at(const Node &n) {
  expect_type(n, "marked-resolution");
  MarkedResolution r;
  r.fan = fan_at(n.at("fan"));
  r.steps = n.at("steps").list(step);
  r.exceptional = n.at("exceptional").list([](Node e) { return std::make_pair(e.at("cone").rayset(), e.at("ray").index()); });
  r.citations = n.at("citations").list(citation);
  return r;
}

Json encode(const AvoidanceReport &r) {
  Json w = Json::array(), hits = Json::array();
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    w.push_back(enc(r.witnesses[i]));
    if (r.witnesses[i].allowed)
      hits.push_back(i);
  }
  return {{"type", "avoidance"}, {"verdict", r.disjoint ? "disjoint" : "meets"}, {"witnesses", w}, {"allowed_hits", hits}};
}
static AvoidanceReport avoidance_report_at(const Node &n) {
  expect_type(n, "avoidance");
  AvoidanceReport r;
  r.witnesses = n.at("witnesses").list(witness);
  std::string verdict = n.at("verdict").str();
  if (verdict != "disjoint" && verdict != "meets")
    n.at("verdict").fail("expected \"disjoint\" or \"meets\"");
  r.disjoint = verdict == "disjoint";
  RaySet hits;
  for (std::size_t i = 0; i < r.witnesses.size(); ++i)
    if (r.witnesses[i].allowed)
      hits.push_back(i);
  if (n.at("allowed_hits").rayset() != hits)
    n.at("allowed_hits").fail("inconsistent with the witnesses");
  bool all_allowed = std::all_of(r.witnesses.begin(), r.witnesses.end(), [](const Witness &w) { return w.allowed; });
  if (all_allowed != r.disjoint)
    n.at("verdict").fail("inconsistent with the witnesses");
  return r;
}

Json encode(const CurveValidation &r) {
  return {{"type", "curve-validation"}, {"valid", r.valid}, {"diagnostics", r.diagnostics}};
}
static CurveValidation curve_validation_at(const Node &n) {
  expect_type(n, "curve-validation");
  CurveValidation r;
  r.valid = n.at("valid").boolean();
  r.diagnostics = n.at("diagnostics").list([](Node d) { return d.str(); });
  return r;
}

// ---------------------------------------------------------------- plans

Json encode(const AvoidancePlan &plan) {
  Json chain = Json::array();
  for (const auto &iso : plan.chain.steps)
    chain.push_back(enc_lattices(iso));
  Json stages = Json::array();
  for (const auto &s : plan.stages) {
    Json st = {{"orbit", enc(s.orbit)}, {"z", enc_sets(s.z)}};
    if (s.isogeny)
      st["isogeny"] = *s.isogeny;
    stages.push_back(st);
  }
  Json orbits = Json::array(), steps = Json::array();
  for (const auto &o : plan.orbits)
    orbits.push_back(enc(o));
  for (const auto &s : plan.steps)
    steps.push_back(enc(s));
  return {{"type", "main-lemma"},
          {"fan", encode(plan.input)},
          {"p", encode(plan.p)},
          {"q", encode(plan.q)},
          {"s_invariant", plan.s_invariant},
          {"qfactorialization", {{"fan", encode(plan.qfactorialization.fan)}, {"steps", enc_steps(plan.qfactorialization.steps)}}},
          {"orbits", orbits},
          {"chain", {{"steps", chain}, {"composite_index", enc(plan.chain.composite_index)}}},
          {"stages", stages},
          {"steps", steps},
          {"citations", enc_citations(plan.citations)}};
}

static AvoidancePlan main_lemma_plan_at(const Node &n) {
  expect_type(n, "main-lemma");
  AvoidancePlan plan;
  plan.input = fan_at(n.at("fan"));
  plan.p = point_at(n.at("p"));
  plan.q = point_at(n.at("q"));
  plan.s_invariant = n.at("s_invariant").boolean();
  Node qf = n.at("qfactorialization");
  plan.qfactorialization.fan = fan_at(qf.at("fan"));
  plan.qfactorialization.steps = qf.at("steps").list(step);
  plan.orbits = n.at("orbits").list(orbit);
  Node chain = n.at("chain");
  plan.chain.steps = chain.at("steps").list([&](Node s) { return isogeny_on(plan.qfactorialization.fan, s); });
  plan.chain.composite_index = chain.at("composite_index").integer();
  plan.stages = n.at("stages").list([](Node s) {
    OrbitStage st{orbit(s.at("orbit")), std::nullopt, sets(s.at("z"))};
    if (s.has("isogeny"))
      st.isogeny = s.at("isogeny").index();
    return st;
  });
  plan.steps = n.at("steps").list(plan_step);
  plan.citations = n.at("citations").list(citation);
  return plan;
}

Json encode(const MainTheoremPlan &plan) {
  Json points = Json::array(), classes = Json::array(), branches = Json::array(), params = Json::array(),
       steps = Json::array();
  for (const auto &p : plan.points)
    points.push_back(encode(p));
  for (const auto &c : plan.classes)
    classes.push_back({{"point", c.point}, {"cone", enc(c.cone)}, {"smooth", c.smooth}, {"marked", c.marked}});
  for (const auto &b : plan.branches)
    branches.push_back({{"point", b.point}, {"parameter", b.parameter}, {"on_resolution", b.on_resolution}});
  for (const auto &p : plan.params)
    params.push_back(enc(p));
  for (const auto &s : plan.steps)
    steps.push_back(enc(s));
  Json j = {{"type", "main-theorem"},
            {"fan", encode(plan.input)},
            {"points", points},
            {"ideal", encode_ideal(plan.s, plan.input.rays.size())},
            {"seed", std::to_string(plan.seed)},
            {"classes", classes},
            {"branches", branches},
            {"params", params},
            {"steps", steps},
            {"citations", enc_citations(plan.citations)}};
  if (plan.resolution)
    j["resolution"] = encode(*plan.resolution);
  if (plan.curve)
    j["curve"] = encode(*plan.curve);
  if (plan.curve_report)
    j["curve_report"] = encode(*plan.curve_report);
  return j;
}

static MainTheoremPlan main_theorem_plan_at(const Node &n) {
  expect_type(n, "main-theorem");
  MainTheoremPlan plan;
  plan.input = fan_at(n.at("fan"));
  plan.points = n.at("points").list([](Node p) { return point_at(p); });
  plan.s = ideal_at(n.at("ideal"));
  try {
    plan.seed = std::stoull(n.at("seed").str());
  } catch (const std::exception &) {
    n.at("seed").fail("expected a decimal seed");
  }
  plan.classes = n.at("classes").list([](Node c) {
    return PointClass{c.at("point").index(), c.at("cone").rayset(), c.at("smooth").boolean(), c.at("marked").boolean()};
  });
  plan.branches = n.at("branches").list([](Node b) {
    return BranchSlot{b.at("point").index(), b.at("parameter").str(), b.at("on_resolution").boolean()};
  });
  plan.params = n.at("params").list(param);
  plan.steps = n.at("steps").list(plan_step);
  plan.citations = n.at("citations").list(citation);
  if (n.has("resolution"))
    plan.resolution = marked_resolution_at(n.at("resolution"));
  if (n.has("curve"))
    plan.curve = curve_at(n.at("curve"));
  if (n.has("curve_report"))
    plan.curve_report = avoidance_report_at(n.at("curve_report"));
  return plan;
}

Fan decode_fan(const Json &j) { return fan_at(Node{j, ""}); }
InvariantDivisor decode_divisor(const Json &j) { return divisor_at(Node{j, ""}); }
Isogeny decode_isogeny(const Json &j) { return isogeny_at(Node{j, ""}); }
PointSpec decode_point(const Json &j) { return point_at(Node{j, ""}); }
BinaryForm decode_form(const Json &j) { return form_at(Node{j, ""}); }
CoxCurve decode_curve(const Json &j) { return curve_at(Node{j, ""}); }
std::vector<Locus> decode_ideal(const Json &j) { return ideal_at(Node{j, ""}); }
CertificateRecord decode_certificate(const Json &j) { return certificate_at(Node{j, ""}); }
ValidationReport decode_validation_report(const Json &j) { return validation_report_at(Node{j, ""}); }
std::vector<OrbitDescriptor> decode_orbits(const Json &j) { return orbits_at(Node{j, ""}); }
Refinement decode_refinement(const Json &j) { return refinement_at(Node{j, ""}); }
MarkedResolution decode_marked_resolution(const Json &j) { return marked_resolution_at(Node{j, ""}); }
AvoidanceReport decode_avoidance_report(const Json &j) { return avoidance_report_at(Node{j, ""}); }
CurveValidation decode_curve_validation(const Json &j) { return curve_validation_at(Node{j, ""}); }
AvoidancePlan decode_main_lemma_plan(const Json &j) { return main_lemma_plan_at(Node{j, ""}); }
MainTheoremPlan decode_main_theorem_plan(const Json &j) { return main_theorem_plan_at(Node{j, ""}); }

} // namespace torickit
