#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gft/catalog.hpp"
#include "gft/classify.hpp"
#include "gft/error.hpp"
#include "gft/factor.hpp"
#include "gft/palpha.hpp"
#include "gft/radius.hpp"
#include "gft/schwarz.hpp"
#include "gft/theorems.hpp"

namespace gft::cli {

using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string expr;
  std::string catalog;
  std::optional<double> param;
  std::string family = "bc";
  double alpha = 0.0;
  double rmax = 0.999;
  int rings = 64;
  int points = 512;
  double exclude = kDefaultExclusionRadius;
  std::optional<double> tol;
  bool json = false;
  std::uint64_t seed = 1;
  int rays = 64;
  double eps_end = kDefaultEpsEnd;
  bool no_timing = false;

  std::string z = "0";
  int refine = 60;
  std::string q;
  std::optional<double> target;
  int n = 200;
  double beta = 0.4;
  bool injectivity = false;
  bool verify = false;
  std::string which = "sufficiency";
  std::vector<double> alphas;
  double omega = 0.5;
};

/// The pieces every report shares; commands fill in the rest.
struct Report {
  std::string command;
  json inputs = json::object();
  bool holds = true;
  double margin = 0.0;
  cplx witness{};
  double witness_value = 0.0;
  std::optional<double> order_estimate;
  json result = json::object();
  json tolerances = json::object();
  int exit_code = 0;
};

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Resolved {
  FunctionExpr f;
  std::string label;
};

Resolved resolve_function(const Options& o) {
  if (!o.expr.empty() && !o.catalog.empty()) throw Error(ErrorKind::InvalidArgument, "give --expr or --catalog, not both");
  if (!o.catalog.empty()) {
    if (o.param) {
      if (o.catalog == "scaled_cot") return {scaled_cot_entry(*o.param).expr, o.catalog};
      if (o.catalog == "power_reciprocal") return {power_reciprocal_entry(*o.param).expr, o.catalog};
      throw Error(ErrorKind::InvalidArgument, "--param only applies to scaled_cot and power_reciprocal");
    }
    const CatalogEntry* e = find_catalog_entry(o.catalog);
    if (!e) throw Error(ErrorKind::InvalidArgument, "no catalog entry named " + o.catalog);
    return {e->expr, o.catalog};
  }
  if (o.expr.empty()) throw Error(ErrorKind::InvalidArgument, "one of --expr or --catalog is required");
  FunctionExpr f = parse(o.expr);
  JetStatus status = JetStatus::Ok;
  f.try_eval_jet(0.0, status);
  if (status != JetStatus::Ok) f = f.with_singular_points({0.0});
  return {f, o.expr};
}

Family resolve_family(const std::string& name) {
  const auto fam = parse_family(name);
  if (!fam) throw Error(ErrorKind::InvalidArgument, "unknown family '" + name + "'");
  return *fam;
}

DiskSampler sampler(const Options& o) {
  DiskSampler s;
  s.r_max = o.rmax;
  s.rings = o.rings;
  s.points_per_ring = o.points;
  s.exclusion_radius = o.exclude;
  s.validate();
  return s;
}

QFunction resolve_q(const Options& o) {
  if (o.q.empty()) throw Error(ErrorKind::InvalidArgument, "--q is required");
  const FunctionExpr e = parse(o.q, 'x');
  if (e.root()->kind == NodeKind::Const && e.root()->value.imag() == 0.0) {
    return QFunction::constant(e.root()->value.real());
  }
  return QFunction::expression(e);
}

cplx parse_point(const std::string& text) {
  const FunctionExpr e = parse(text);
  for (const Instr& ins : e.program()) {
    if (ins.kind == NodeKind::Var) throw Error(ErrorKind::InvalidArgument, "--z must not depend on z");
  }
  return e.eval(0.0);
}

void sampler_inputs(Report& r, const Options& o) {
  r.inputs["rmax"] = o.rmax;
  r.inputs["rings"] = o.rings;
  r.inputs["points"] = o.points;
  r.inputs["exclude"] = o.exclude;
}

void set_verdict(Report& r, const FamilyVerdict& v) {
  r.holds = v.holds_on_samples;
  r.margin = v.margin;
  r.witness = v.witness;
  r.witness_value = v.witness_value;
  r.order_estimate = v.order_estimate;
  r.exit_code = v.holds_on_samples ? 0 : 1;
}

json verdict_json(const FamilyVerdict& v) {
  json j;
  j["family"] = std::string(to_string(v.family));
  j["alpha"] = v.alpha;
  j["holds"] = v.holds_on_samples;
  j["margin"] = num(v.margin);
  j["order_estimate"] = v.order_estimate;
  j["witness"] = {{"re", v.witness.real()}, {"im", v.witness.imag()}, {"value", num(v.witness_value)}};
  return j;
}

json report_json(const TheoremReport& t) {
  auto check = [](const Check& c) { return json{{"name", c.name}, {"pass", c.pass}, {"margin", num(c.margin)}}; };
  json j;
  j["theorem"] = std::string(to_string(t.id));
  j["inputs"] = t.inputs;
  j["hypotheses"] = json::array();
  for (const auto& c : t.hypothesis_checks) j["hypotheses"].push_back(check(c));
  j["conclusion"] = check(t.conclusion);
  if (!t.observations.empty()) {
    j["observations"] = json::array();
    for (const auto& c : t.observations) j["observations"].push_back(check(c));
  }
  j["consistent"] = t.consistent;
  return j;
}

// ---- commands ----

void cmd_classify(const Options& o, Report& r) {
  const Resolved fn = resolve_function(o);
  const Family fam = resolve_family(o.family);
  const DiskSampler s = sampler(o);
  const double tol = o.tol.value_or(kSampledTolerance);
  r.inputs["expr"] = fn.label;
  r.inputs["family"] = std::string(to_string(fam));
  r.inputs["alpha"] = o.alpha;
  sampler_inputs(r, o);
  r.tolerances["verdict"] = tol;
  r.tolerances["tiny_derivative"] = kTinyDerivative;
  const FamilyVerdict v = membership(fn.f, fam, o.alpha, s, tol);
  set_verdict(r, v);
  r.result["evaluated"] = v.evaluated;
  r.result["failed"] = v.failed;
  r.result["tiny_derivative_count"] = v.tiny_derivative_count;
  r.result["univalence_not_checked"] = v.univalence_not_checked;
  if (o.injectivity) {
    r.inputs["seed"] = o.seed;
    const InjectivityCheck ic = injectivity_spot_check(fn.f, s, 10000, o.seed);
    json j{{"pairs", ic.pairs}, {"collisions", ic.collisions}};
    if (ic.witness) {
      j["witness"] = {{"z1", {ic.witness->first.real(), ic.witness->first.imag()}},
                      {"z2", {ic.witness->second.real(), ic.witness->second.imag()}}};
    }
    r.result["injectivity"] = j;
  }
}

void cmd_order(const Options& o, Report& r) {
  const Resolved fn = resolve_function(o);
  const Family fam = resolve_family(o.family);
  const DiskSampler s = sampler(o);
  r.inputs["expr"] = fn.label;
  r.inputs["family"] = std::string(to_string(fam));
  sampler_inputs(r, o);
  const SampledMinimum m = sampled_minimum(fn.f, fam, s);
  r.order_estimate = m.value;
  r.margin = m.value;
  r.witness = m.where;
  r.witness_value = m.value;
  r.result["evaluated"] = m.evaluated;
  r.result["failed"] = m.failed;
}

void cmd_schwarzian(const Options& o, Report& r) {
  const Resolved fn = resolve_function(o);
  const cplx z = parse_point(o.z);
  r.inputs["expr"] = fn.label;
  r.inputs["z"] = {{"re", z.real()}, {"im", z.imag()}};
  const SchwarzianSample s = schwarzian_sample(fn.f, z);
  const cplx pre = pre_schwarzian(fn.f, z);
  r.witness = z;
  r.witness_value = s.weighted;
  r.result["schwarzian"] = {{"re", s.s.real()}, {"im", s.s.imag()}};
  r.result["pre_schwarzian"] = {{"re", pre.real()}, {"im", pre.imag()}};
  r.result["weighted"] = s.weighted;
}

void cmd_norm(const Options& o, Report& r) {
  const Resolved fn = resolve_function(o);
  r.inputs["expr"] = fn.label;
  r.inputs["rings"] = o.rings;
  r.inputs["points"] = o.points;
  r.inputs["refine"] = o.refine;
  const NormEstimate n = schwarzian_norm(fn.f, o.rings, o.points, o.refine);
  r.witness = n.argmax;
  r.witness_value = n.lower_bound;
  r.result["lower_bound"] = n.lower_bound;
  r.result["argmax"] = {{"re", n.argmax.real()}, {"im", n.argmax.imag()}};
  r.result["evaluated"] = n.evaluated;
  r.result["failed"] = n.failed;
}

void cmd_palpha(const Options& o, Report& r) {
  const QFunction q = resolve_q(o);
  const double tol = o.tol.value_or(1e-6);
  r.inputs["q"] = q.describe();
  r.inputs["alpha"] = o.alpha;
  r.inputs["eps_end"] = o.eps_end;
  r.tolerances["limit"] = tol;
  r.tolerances["extrapolation_agreement"] = kExtrapolationAgreement;
  const PalphaVerdict v = check_palpha(q, o.alpha, tol, o.eps_end);
  r.holds = v.member;
  r.margin = v.positive_on_01 ? v.limit_estimate - o.alpha : -INFINITY;
  r.witness = v.first_zero ? cplx(*v.first_zero) : cplx(v.tail_x.empty() ? 0.0 : v.tail_x.back());
  r.witness_value = v.positive_on_01 ? v.limit_estimate : 0.0;
  r.exit_code = v.member ? 0 : 1;
  r.result["positive_on_01"] = v.positive_on_01;
  r.result["first_zero"] = v.first_zero ? json(*v.first_zero) : json(nullptr);
  r.result["limit_estimate"] = num(v.limit_estimate);
  r.result["member"] = v.member;
  try {
    r.result["integral"] = integral_criterion(q, 1.0).integral;
  } catch (const Error&) {
    r.result["integral"] = nullptr;
  }
}

void cmd_const_q(const Options& o, Report& r) {
  const double target = o.target.value_or(0.5 * (1.0 + o.alpha));
  r.inputs["target"] = target;
  r.tolerances["bisection"] = "adjacent doubles";
  const ConstantSolution c = constant_solver(target);
  r.witness = c.t;
  r.witness_value = c.residual;
  r.result["c"] = c.c;
  r.result["sqrt_c"] = c.t;
  r.result["residual"] = c.residual;
}

void cmd_radius(const Options& o, Report& r) {
  r.inputs["alpha"] = o.alpha;
  r.tolerances["bisection"] = 1e-14;
  const RadiusResult rr = radius_inverse_convexity(o.alpha);
  r.witness = rr.r_alpha;
  r.witness_value = rr.residual;
  r.result["r_alpha"] = rr.r_alpha;
  r.result["closed_form"] = rr.closed_form;
  r.result["residual"] = rr.residual;
  if (!o.expr.empty() || !o.catalog.empty()) {
    const Resolved fn = resolve_function(o);
    const DiskSampler s = sampler(o);
    r.inputs["expr"] = fn.label;
    sampler_inputs(r, o);
    const RadiusCheck inside = verify_radius(fn.f, o.alpha, s);
    const RotationWitness outside = rotated_witness(fn.f, o.alpha, rr.r_alpha + 0.01);
    r.holds = inside.holds_inside;
    r.margin = inside.margin;
    r.witness = inside.witness;
    r.witness_value = inside.margin + o.alpha;
    r.exit_code = inside.holds_inside ? 0 : 1;
    r.result["holds_inside"] = inside.holds_inside;
    r.result["outside"] = {{"radius", rr.r_alpha + 0.01},
                           {"violates", outside.violates},
                           {"value", outside.value},
                           {"tau", outside.tau},
                           {"z", {{"re", outside.z.real()}, {"im", outside.z.imag()}}}};
  }
}

void cmd_factor_check(const Options& o, Report& r) {
  const Resolved fn = resolve_function(o);
  const DiskSampler s = sampler(o);
  r.inputs["expr"] = fn.label;
  r.inputs["alpha"] = o.alpha;
  r.inputs["rays"] = o.rays;
  sampler_inputs(r, o);
  r.tolerances["verdict"] = kSampledTolerance;
  r.tolerances["v_starlike"] = kVStarlikeTolerance;
  const LemmaEquivalence eq = lemma_equivalence_check(fn.f, o.alpha, o.rays, s);
  r.holds = eq.agree;
  r.margin = eq.v_starlike_margin;
  r.witness = eq.v_witness;
  r.witness_value = eq.v_starlike_min;
  r.order_estimate = eq.bc_verdict.order_estimate;
  r.exit_code = eq.agree ? 0 : 1;
  r.result["bc_verdict"] = verdict_json(eq.bc_verdict);
  r.result["v_starlike_min"] = eq.v_starlike_min;
  r.result["v_starlike_margin"] = eq.v_starlike_margin;
  r.result["v_side_holds"] = eq.v_side_holds;
  r.result["max_wronskian_drift"] = eq.max_wronskian_drift;
  r.result["agree"] = eq.agree;
}

void cmd_theorem(const Options& o, Report& r) {
  r.inputs["which"] = o.which;
  std::vector<TheoremReport> reports;
  if (o.which == "sharpness") {
    r.inputs["n"] = o.n;
    r.inputs["beta"] = o.beta;
    reports.push_back(sharpness_report(o.n, o.beta, o.eps_end));
  } else {
    const Resolved fn = resolve_function(o);
    const DiskSampler s = sampler(o);
    r.inputs["expr"] = fn.label;
    r.inputs["alpha"] = o.alpha;
    sampler_inputs(r, o);
    if (o.which == "sufficiency") {
      const QFunction q = resolve_q(o);
      r.inputs["q"] = q.describe();
      reports.push_back(verify_sufficiency(fn.f, q, o.alpha, s));
    } else if (o.which == "duality") {
      reports.push_back(verify_duality(fn.f, o.alpha, s));
    } else if (o.which == "characterization") {
      reports.push_back(verify_characterization(fn.f, o.alpha, s));
    } else if (o.which == "factorization") {
      r.inputs["rays"] = o.rays;
      reports.push_back(verify_factorization(fn.f, o.alpha, o.rays, s));
    } else if (o.which == "inclusions") {
      const std::vector<double> alphas = o.alphas.empty() ? std::vector<double>{0.0, o.alpha} : o.alphas;
      r.inputs["alphas"] = alphas;
      reports = verify_inclusions(fn.f, alphas, s);
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown theorem '" + o.which + "'");
    }
  }
  bool consistent = true, concluded = true;
  r.result["reports"] = json::array();
  for (const auto& t : reports) {
    consistent = consistent && t.consistent;
    concluded = concluded && t.conclusion.pass;
    r.result["reports"].push_back(report_json(t));
  }
  r.holds = consistent && concluded;
  r.margin = reports.front().conclusion.margin;
  r.witness_value = reports.front().conclusion.margin;
  r.result["consistent"] = consistent;
  r.exit_code = r.holds ? 0 : 1;
}

void cmd_sharpness(const Options& o, Report& r) {
  r.inputs["n"] = o.n;
  r.inputs["beta"] = o.beta;
  r.inputs["eps_end"] = o.eps_end;
  r.inputs["omega"] = o.omega;
  const SharpnessResult sr = sharpness_construct(o.n, o.beta, o.eps_end);
  r.holds = sr.x0.has_value();
  r.margin = o.beta - sr.min_ratio;
  r.witness = sr.x0.value_or(sr.min_ratio_at);
  r.witness_value = sr.ratio_at_x0.value_or(sr.min_ratio);
  r.exit_code = r.holds ? 0 : 1;
  r.result["x0"] = sr.x0 ? json(*sr.x0) : json(nullptr);
  r.result["ratio_at_x0"] = sr.ratio_at_x0 ? json(*sr.ratio_at_x0) : json(nullptr);
  r.result["convexity_value"] = sr.convexity_value ? json(*sr.convexity_value) : json(nullptr);
  r.result["min_ratio"] = sr.min_ratio;
  r.result["min_ratio_at"] = sr.min_ratio_at;

  const RealAxisReconstruction rec = reconstruct_f_from_y(sharpness_weight(o.n, o.beta), o.omega, o.eps_end);
  double worst = 0.0;
  for (int i = 1; i <= 99; ++i) {
    const double x = 0.01 * i;
    worst = std::max(worst, std::abs(rec.schwarzian(x) - 2.0 * rec.q(x)));
  }
  r.result["schwarzian_residual"] = worst;
  r.tolerances["schwarzian_residual"] = 1e-6;
}

void cmd_catalog(const Options& o, Report& r) {
  r.inputs["verify"] = o.verify;
  json entries = catalog_json();
  if (o.verify) {
    const DiskSampler s = sampler(o);
    sampler_inputs(r, o);
    r.tolerances["verdict"] = kSampledTolerance;
    double worst = INFINITY;
    std::size_t i = 0;
    for (const CatalogEntry& e : catalog()) {
      json checks = json::array();
      for (const MembershipClaim& c : e.expected) {
        const FamilyVerdict v = membership(e.expr, c.family, c.order, s);
        checks.push_back(verdict_json(v));
        if (v.margin < worst) {
          worst = v.margin;
          r.witness = v.witness;
          r.witness_value = v.witness_value;
        }
        r.holds = r.holds && v.holds_on_samples;
      }
      entries[i++]["verified"] = checks;
    }
    r.margin = worst;
    r.exit_code = r.holds ? 0 : 1;
  }
  r.result["entries"] = entries;
}

void print_text(std::ostream& out, const Report& r) {
  out << r.command << ": " << (r.holds ? "holds" : "violated") << "\n";
  out << "  margin: " << fmt(r.margin) << "\n";
  out << "  witness: " << fmt(r.witness.real()) << (r.witness.imag() < 0 ? " - " : " + ")
      << fmt(std::abs(r.witness.imag())) << "i (value " << fmt(r.witness_value) << ")\n";
  if (r.order_estimate) out << "  order_estimate: " << fmt(*r.order_estimate) << "\n";
  for (const auto& [k, v] : r.result.items()) out << "  " << k << ": " << v.dump() << "\n";
}

json to_json(const Report& r, double wall_ms) {
  json j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["verdict"] = {{"holds", r.holds},
                  {"margin", num(r.margin)},
                  {"witness", {{"re", r.witness.real()}, {"im", r.witness.imag()}, {"value", num(r.witness_value)}}}};
  if (r.order_estimate) j["order_estimate"] = num(*r.order_estimate);
  j["result"] = r.result;
  j["tolerances"] = r.tolerances;
  j["wall_time_ms"] = wall_ms;
  j["version"] = kVersion;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Numerical checks for meromorphic convexity, Schwarzian bounds and the P(alpha) weight class"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Write a JSON report");
    sub->add_flag("--no-timing", o.no_timing, "Report wall_time_ms as 0 so output is reproducible byte for byte");
  };
  auto function_opts = [&](CLI::App* sub) {
    sub->add_option("--expr", o.expr, "Function of z, e.g. \"z/4 + 1/z\"");
    sub->add_option("--catalog", o.catalog, "Catalog entry name");
    sub->add_option("--param", o.param, "Order parameter for scaled_cot / power_reciprocal");
  };
  auto sampler_opts = [&](CLI::App* sub) {
    sub->add_option("--rmax", o.rmax, "Outermost sampled radius")->capture_default_str();
    sub->add_option("--rings", o.rings, "Number of rings")->capture_default_str();
    sub->add_option("--points", o.points, "Points per ring")->capture_default_str();
    sub->add_option("--exclude", o.exclude, "Excluded radius around z = 0")->capture_default_str();
  };

  std::string command;
  std::map<std::string, std::function<void(const Options&, Report&)>> handlers;
  auto add = [&](const std::string& name, const std::string& help, auto handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&command, name] { command = name; });
    common(sub);
    handlers[name] = handler;
    return sub;
  };

  auto* classify = add("classify", "Sampled membership test for a family", cmd_classify);
  function_opts(classify);
  sampler_opts(classify);
  classify->add_option("--family", o.family, "c, sstar, bc, bsstar or bci")->capture_default_str();
  classify->add_option("--alpha", o.alpha, "Order")->capture_default_str();
  classify->add_option("--tol", o.tol, "Verdict tolerance (default 1e-6)");
  classify->add_option("--seed", o.seed, "Seed for the injectivity spot check")->capture_default_str();
  classify->add_flag("--injectivity", o.injectivity, "Search for second preimages of sampled values");

  auto* order = add("order", "Minimum of the family functional over the samples", cmd_order);
  function_opts(order);
  sampler_opts(order);
  order->add_option("--family", o.family, "c, sstar, bc, bsstar or bci")->capture_default_str();

  auto* schw = add("schwarzian", "Schwarzian and pre-Schwarzian at a point", cmd_schwarzian);
  function_opts(schw);
  schw->add_option("--z", o.z, "Point, e.g. 0.4 or 0.3+0.2*i")->capture_default_str();

  auto* norm = add("norm", "Lower bound for the Schwarzian norm", cmd_norm);
  function_opts(norm);
  norm->add_option("--rings", o.rings, "Number of rings")->capture_default_str();
  norm->add_option("--points", o.points, "Points per ring")->capture_default_str();
  norm->add_option("--refine", o.refine, "Golden-section iterations")->capture_default_str();

  auto* palpha = add("palpha", "Test a weight q(x) for membership in P(alpha)", cmd_palpha);
  palpha->add_option("--q", o.q, "Weight in x, e.g. \"1/(pi*(1+x^2))\"")->required();
  palpha->add_option("--alpha", o.alpha, "Order")->capture_default_str();
  palpha->add_option("--eps-end", o.eps_end, "Integrate up to 1 - eps_end")->capture_default_str();
  palpha->add_option("--tol", o.tol, "Limit tolerance (default 1e-6)");

  auto* constq = add("const-q", "Constant weight c with sqrt(c) cot(sqrt(c)) = target", cmd_const_q);
  constq->add_option("--target", o.target, "Target limit in (0, 1)");
  constq->add_option("--alpha", o.alpha, "Use target (1 + alpha)/2")->capture_default_str();

  auto* radius = add("radius", "Radius of inverse convexity, optionally checked on a function", cmd_radius);
  radius->add_option("--alpha", o.alpha, "Order")->capture_default_str();
  function_opts(radius);
  sampler_opts(radius);

  auto* factor = add("factor-check", "Compare BC(alpha) with starlikeness of the ray solution v", cmd_factor_check);
  function_opts(factor);
  sampler_opts(factor);
  factor->add_option("--alpha", o.alpha, "Order")->capture_default_str();
  factor->add_option("--rays", o.rays, "Number of rays")->capture_default_str();

  auto* theorem = add("theorem", "Run a theorem cross-check", cmd_theorem);
  function_opts(theorem);
  sampler_opts(theorem);
  theorem->add_option("--which", o.which,
                      "sufficiency, duality, inclusions, characterization, factorization or sharpness")
      ->capture_default_str();
  theorem->add_option("--alpha", o.alpha, "Order")->capture_default_str();
  theorem->add_option("--alphas", o.alphas, "Orders for the inclusion checks");
  theorem->add_option("--q", o.q, "Weight in x for the sufficiency check");
  theorem->add_option("--rays", o.rays, "Number of rays")->capture_default_str();
  theorem->add_option("--n", o.n, "Exponent of q_beta")->capture_default_str();
  theorem->add_option("--beta", o.beta, "beta of q_beta")->capture_default_str();
  theorem->add_option("--eps-end", o.eps_end, "Integrate up to 1 - eps_end")->capture_default_str();

  auto* sharp = add("sharpness", "The q_beta = (1-beta)(n+1)x^n construction", cmd_sharpness);
  sharp->add_option("--n", o.n, "Exponent")->capture_default_str();
  sharp->add_option("--beta", o.beta, "beta in [0, 1)")->capture_default_str();
  sharp->add_option("--eps-end", o.eps_end, "Integrate up to 1 - eps_end")->capture_default_str();
  sharp->add_option("--omega", o.omega, "Base point of f = -integral y^-2")->capture_default_str();

  auto* cat = add("catalog", "List catalog entries, optionally verifying their claims", cmd_catalog);
  sampler_opts(cat);
  cat->add_flag("--verify", o.verify, "Check every expected membership on samples");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Report report;
  report.command = command;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    handlers.at(command)(o, report);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const double wall_ms =
      o.no_timing ? 0.0 : std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  if (o.json) {
    out << to_json(report, wall_ms).dump(2) << "\n";
  } else {
    print_text(out, report);
  }
  return report.exit_code;
}

}  // namespace gft::cli
