#include "torickit/document.hpp"
#include "torickit/errors.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace torickit;

namespace {

// 1 = mathematical verdict "false", 2 = bad input
struct Verdict {
  int code = 0;
  std::string message;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ToricError("FileNotFound", path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load(const std::string &path, const std::string &kind) {
  try {
    return parse_document(read_file(path), kind).payload;
  } catch (const ToricError &e) {
    throw ToricError(e.code(), path + ": " + std::string(e.what()).substr(e.code().size() + 2));
  }
}

Fan load_fan(const std::string &path) {
  Fan f = decode_fan(load(path, "fan"));
  ValidationReport r = validate_fan(f);
  if (!r.valid())
    throw ToricError(r.violations.front().kind, r.violations.front().detail);
  return f;
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    out.push_back(item);
  return out;
}

RatVector parse_coords(const std::string &s) {
  RatVector out;
  for (const auto &x : split(s, ','))
    out.push_back(parse_rational(x));
  return out;
}

RaySet parse_cone(const std::string &s) {
  RaySet out;
  for (const auto &x : split(s, ','))
    out.push_back(parse_integer(x).get_ui());
  std::sort(out.begin(), out.end());
  return out;
}

ParamPoint parse_param(const std::string &s) {
  auto parts = split(s, ':');
  if (parts.size() != 2)
    throw ToricError("InvalidParameter", "expected s:t, got \"" + s + "\"");
  return ParamPoint(parse_rational(parts[0]), parse_rational(parts[1]));
}

std::vector<PointSpec> parse_points(const Fan &fan, const std::vector<std::string> &specs) {
  std::vector<PointSpec> out;
  for (const auto &s : specs)
    out.push_back(make_point(fan, parse_coords(s)));
  return out;
}

std::vector<ParamPoint> params_for(const std::vector<std::string> &specs, std::size_t r) {
  if (specs.empty())
    return standard_parameters(r);
  std::vector<ParamPoint> out;
  for (const auto &s : specs)
    out.push_back(parse_param(s));
  return out;
}

std::vector<Locus> load_ideal(const std::string &path) { return path.empty() ? std::vector<Locus>{} : decode_ideal(load(path, "ideal")); }

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact toolkit for complete toric varieties and rational curves in Cox coordinates"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Document emission: json (canonical) or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));

  std::uint64_t seed = 0;
  bool seed_given = false;
  auto add_seed = [&](CLI::App *cmd) {
    cmd->add_option_function<std::uint64_t>("--seed", [&](const std::uint64_t &v) { seed = v; seed_given = true; },
                                            "Random seed (falls back to TORICKIT_SEED)");
  };

  std::string fan_path, second_path, cone_text, ideal_path, p_text, q_text;
  std::vector<std::string> marked, points, params, allowed;
  unsigned degree = 0;

  auto *validate = app.add_subcommand("validate", "Check a fan document");
  validate->add_option("fan", fan_path)->required();
  auto *orbits = app.add_subcommand("orbits", "List torus orbits");
  orbits->add_option("fan", fan_path)->required();
  auto *qfact = app.add_subcommand("qfactorialize", "Triangulate without new rays");
  qfact->add_option("fan", fan_path)->required();
  auto *resolve = app.add_subcommand("resolve", "Resolve to a smooth fan, or over marked fixed points");
  resolve->add_option("fan", fan_path)->required();
  resolve->add_option("--marked", marked, "Maximal cone as comma-separated ray indices (repeatable)");

  auto *iso = app.add_subcommand("isogeny", "Isogeny constructions");
  iso->require_subcommand(1);
  auto *iso_smooth = iso->add_subcommand("smooth", "Smoothing isogeny of a simplicial cone");
  iso_smooth->add_option("fan", fan_path)->required();
  iso_smooth->add_option("cone", cone_text, "Comma-separated ray indices")->required();
  auto *iso_reverse = iso->add_subcommand("reverse", "Reverse isogeny r*N inside N'");
  iso_reverse->add_option("isogeny", second_path)->required();

  auto *ft = app.add_subcommand("ft-cert", "Fano-type certificate from an ample divisor");
  ft->add_option("fan", fan_path)->required();
  ft->add_option("divisor", second_path)->required();

  auto *curve = app.add_subcommand("curve", "Rational curves in Cox coordinates");
  curve->require_subcommand(1);
  auto *interp = curve->add_subcommand("interpolate", "Curve through points");
  interp->add_option("fan", fan_path)->required();
  auto *verify = curve->add_subcommand("verify", "Check a curve against loci");
  verify->add_option("curve", second_path)->required();
  verify->add_option("ideal", ideal_path)->required();
  verify->add_option("--allow", allowed, "Allowed hit s:t=x0,x1,... (repeatable)");
  auto *avoid = curve->add_subcommand("avoid", "Curve through points avoiding loci");
  avoid->add_option("fan", fan_path)->required();
  avoid->add_option("ideal", ideal_path)->required();
  for (auto *cmd : {interp, avoid}) {
    cmd->add_option("--point", points, "Cox coordinates x0,x1,... (repeatable)");
    cmd->add_option("--param", params, "Parameter s:t per point (default (1:0),(0:1),(1:1),...)");
    cmd->add_option("--degree", degree, "Curve degree (default max(1, #points))");
    add_seed(cmd);
  }

  auto *plan = app.add_subcommand("plan", "Proof-pipeline certificates");
  plan->require_subcommand(1);
  auto *lemma = plan->add_subcommand("main-lemma", "Avoidance plan for two points");
  lemma->add_option("fan", fan_path)->required();
  lemma->add_option("--p", p_text, "Cox coordinates of P")->required();
  lemma->add_option("--q", q_text, "Cox coordinates of Q")->required();
  lemma->add_option("--ideal", ideal_path, "Ideal document for S (default: I(X))");
  auto *theorem = plan->add_subcommand("main-theorem", "Plan for a curve through points avoiding S");
  theorem->add_option("fan", fan_path)->required();
  theorem->add_option("--point", points, "Cox coordinates (repeatable)");
  theorem->add_option("--ideal", ideal_path, "Ideal document for S");
  add_seed(theorem);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (!seed_given) {
    if (const char *env = std::getenv("TORICKIT_SEED")) {
      try {
        seed = std::stoull(env);
      } catch (const std::exception &) {
        std::cerr << "InvalidSeed: TORICKIT_SEED=" << env << "\n";
        return 2;
      }
    }
  }

  auto out = [&](const std::string &kind, const Json &payload) {
    if (format == "pretty")
      std::cout << Json{{"kind", kind}, {"version", kToolkitVersion}, {"payload", payload}}.dump(2) << "\n";
    else
      std::cout << emit({kind, payload}) << "\n";
  };

  Verdict verdict;
  try {
    if (*validate) {
      Fan f = decode_fan(load(fan_path, "fan"));
      ValidationReport r = validate_fan(f);
      if (!r.valid()) {
        out("report", encode(r));
        throw ToricError(r.violations.front().kind, r.violations.front().detail);
      }
      out("report", encode(r));
    } else if (*orbits) {
      out("report", encode_orbits(list_orbits(load_fan(fan_path))));
    } else if (*qfact) {
      out("report", encode(qfactorialize(load_fan(fan_path))));
    } else if (*resolve) {
      Fan f = load_fan(fan_path);
      if (marked.empty()) {
        out("report", encode(resolve_to_smooth(f)));
      } else {
        std::vector<RaySet> cones;
        for (const auto &m : marked)
          cones.push_back(parse_cone(m));
        out("report", encode(resolve_marked(f, cones)));
      }
    } else if (*iso_smooth) {
      out("isogeny", encode(smoothing_isogeny(load_fan(fan_path), parse_cone(cone_text))));
    } else if (*iso_reverse) {
      out("isogeny", encode(reverse_isogeny(decode_isogeny(load(second_path, "isogeny")))));
    } else if (*ft) {
      Fan f = load_fan(fan_path);
      InvariantDivisor l = decode_divisor(load(second_path, "divisor"));
      if (l.coefficients.size() != f.rays.size())
        throw ToricError("DimensionMismatch", "divisor has " + std::to_string(l.coefficients.size()) +
                                                  " coefficients for " + std::to_string(f.rays.size()) + " rays");
      try {
        FTCertificate cert = ft_certificate(f, l);
        CertificateRecord rec{f, l, cert, verify_ft_certificate(f, cert)};
        out("certificate", encode(rec));
        if (!rec.checks.ok())
          verdict = {1, "certificate checks failed"};
      } catch (const ToricError &e) {
        if (e.code() != "NotAmple")
          throw;
        verdict = {1, e.what()};
      }
    } else if (*interp) {
      Fan f = load_fan(fan_path);
      auto pts = parse_points(f, points);
      unsigned d = degree ? degree : static_cast<unsigned>(std::max<std::size_t>(1, pts.size()));
      out("curve", encode(interpolate_through_points(f, pts, params_for(params, pts.size()), d, seed)));
    } else if (*verify) {
      CoxCurve c = decode_curve(load(second_path, "curve"));
      require_valid_fan(c.target);
      CurveValidation v = validate_curve(c);
      if (!v.valid) {
        out("report", encode(v));
        throw ToricError("InvalidCurve", v.diagnostics.front());
      }
      std::vector<AllowedPoint> allow;
      for (const auto &a : allowed) {
        auto parts = split(a, '=');
        if (parts.size() != 2)
          throw ToricError("InvalidAllowed", "expected s:t=x0,x1,..., got \"" + a + "\"");
        allow.push_back({parse_param(parts[0]), make_point(c.target, parse_coords(parts[1]))});
      }
      AvoidanceReport r = avoidance_verify(c, load_ideal(ideal_path), allow);
      out("report", encode(r));
      if (!r.disjoint)
        verdict = {1, "meets S"};
    } else if (*avoid) {
      Fan f = load_fan(fan_path);
      auto pts = parse_points(f, points);
      unsigned d = degree ? degree : static_cast<unsigned>(std::max<std::size_t>(1, pts.size()));
      try {
        out("curve", encode(interpolate_avoiding(f, pts, params_for(params, pts.size()), load_ideal(ideal_path), d, seed)));
      } catch (const ToricError &e) {
        if (e.code() != "AvoidanceRetryExceeded")
          throw;
        verdict = {1, e.what()};
      }
    } else if (*lemma) {
      Fan f = load_fan(fan_path);
      out("plan", encode(main_lemma_plan(f, make_point(f, parse_coords(p_text)), make_point(f, parse_coords(q_text)),
                                         load_ideal(ideal_path))));
    } else if (*theorem) {
      Fan f = load_fan(fan_path);
      out("plan", encode(main_theorem_plan(f, parse_points(f, points), load_ideal(ideal_path), seed)));
    }
  } catch (const ToricError &e) {
    std::cerr << e.code() << " " << std::string(e.what()).substr(std::min(e.code().size() + 2, std::string(e.what()).size()))
              << "\n";
    return 2;
  }
  if (verdict.code != 0)
    std::cerr << verdict.message << "\n";
  return verdict.code;
}
