#include "gft/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "gft/batch.hpp"
#include "gft/error.hpp"
#include "gft/factor.hpp"

namespace gft {

std::string_view to_string(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::Sufficiency: return "sufficiency";
    case TheoremId::Sharpness: return "sharpness";
    case TheoremId::Duality: return "duality";
    case TheoremId::Nesting: return "nesting";
    case TheoremId::ScaleInvariance: return "scale_invariance";
    case TheoremId::ProperContainment: return "proper_containment";
    case TheoremId::Characterization: return "characterization";
    case TheoremId::Factorization: return "factorization";
  }
  return "?";
}

bool TheoremReport::hypotheses_pass() const noexcept {
  return std::all_of(hypothesis_checks.begin(), hypothesis_checks.end(), [](const Check& c) { return c.pass; });
}

void TheoremReport::finalize() noexcept { consistent = !(hypotheses_pass() && !conclusion.pass); }

namespace {

std::string describe(const FunctionExpr& f, double alpha) {
  char buf[64];
  std::snprintf(buf, sizeof buf, ", alpha = %.17g", alpha);
  return "f = " + f.print() + buf;
}

Check verdict_check(std::string name, const FamilyVerdict& v) {
  return {std::move(name), v.holds_on_samples, v.margin};
}

}  // namespace

TheoremReport verify_sufficiency(const FunctionExpr& f, const QFunction& q, double alpha, const DiskSampler& s,
                                 double tol) {
  TheoremReport r;
  r.id = TheoremId::Sufficiency;
  r.inputs = describe(f, alpha) + ", q = " + q.describe();

  // Near a pole the two terms of S_f are large and cancel, so each sample is
  // allowed the rounding error of that cancellation on top of tol.
  double worst = -INFINITY;
  bool ok = true;
  for (const cplx z : s.points()) {
    JetStatus status = JetStatus::Ok;
    const Jet3 j = f.try_eval_jet(z, status);
    if (status != JetStatus::Ok || std::abs(j.v1) < kSingularityThreshold) continue;
    const cplx a = j.v3 / j.v1, b = j.v2 / j.v1;
    const cplx sf = a - 1.5 * b * b;
    if (!std::isfinite(sf.real()) || !std::isfinite(sf.imag())) continue;
    const double excess = std::abs(sf) - 2.0 * q(std::abs(z));
    const double rounding = 64 * std::numeric_limits<double>::epsilon() * (std::abs(a) + 1.5 * std::norm(b));
    worst = std::max(worst, excess);
    ok = ok && excess <= tol + rounding;
  }
  r.hypothesis_checks.push_back({"|S_f(z)| <= 2 q(|z|)", ok, -worst});

  const double target = 0.5 * (1.0 + alpha);
  try {
    const PalphaVerdict pv = check_palpha(q, target);
    r.hypothesis_checks.push_back({"q in P((1+alpha)/2)", pv.member,
                                   pv.positive_on_01 ? pv.limit_estimate - target : -INFINITY});
  } catch (const ExtrapolationError&) {
    r.hypothesis_checks.push_back({"q in P((1+alpha)/2)", false, NAN});
  }

  r.conclusion = verdict_check("f in BC(alpha)", membership(f, Family::BC, alpha, s));
  r.finalize();
  return r;
}

FunctionExpr duality_transform(const FunctionExpr& g) {
  const FunctionExpr h = reciprocal(FunctionExpr::var() * derivative(reciprocal(g)));
  return h.with_singular_points({0.0});
}

TheoremReport verify_duality(const FunctionExpr& g, double alpha, const DiskSampler& s) {
  TheoremReport r;
  r.id = TheoremId::Duality;
  r.inputs = describe(g, alpha);
  const FamilyVerdict left = membership(g, Family::BCI, alpha, s);
  const FamilyVerdict right = membership(duality_transform(g), Family::BSstar, alpha, s);
  r.hypothesis_checks.push_back(verdict_check("g in BCI(alpha)", left));
  r.conclusion = verdict_check("1/(z (1/g)') in BS*(alpha)", right);
  r.consistent = left.holds_on_samples == right.holds_on_samples;
  return r;
}

std::vector<TheoremReport> verify_inclusions(const FunctionExpr& g, const std::vector<double>& alphas,
                                             const DiskSampler& s) {
  std::vector<TheoremReport> out;
  const double order = order_estimate(g, Family::BCI, s);

  {
    TheoremReport r;
    r.id = TheoremId::Nesting;
    r.inputs = "g = " + g.print();
    std::vector<double> sorted = alphas;
    std::sort(sorted.begin(), sorted.end());
    std::vector<bool> holds;
    for (double a : sorted) {
      holds.push_back(membership(g, Family::BCI, a, s).holds_on_samples);
      r.observations.push_back({"BCI at alpha = " + std::to_string(a), holds.back(), order - a});
    }
    // The hypothesis is membership at the largest listed order that holds;
    // the conclusion is membership at every smaller listed order.
    std::size_t top = sorted.size();
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (holds[i]) top = i;
    }
    const bool any = top < sorted.size();
    r.hypothesis_checks.push_back({"g in BCI at the largest holding order", any, any ? order - sorted[top] : NAN});
    const bool nested = any && std::all_of(holds.begin(), holds.begin() + static_cast<long>(top) + 1,
                                           [](bool b) { return b; });
    r.conclusion = {"g in BCI at every smaller order", nested, 0.0};
    r.finalize();
    out.push_back(r);
  }

  {
    TheoremReport r;
    r.id = TheoremId::ScaleInvariance;
    r.inputs = "g = " + g.print() + ", lambda in {2, i}";
    double drift = 0.0;
    for (cplx lambda : {cplx(2.0, 0.0), cplx(0.0, 1.0)}) {
      const FunctionExpr scaled = (lambda * g).with_singular_points(g.singular_points());
      drift = std::max(drift, std::abs(order_estimate(scaled, Family::BCI, s) - order));
    }
    r.hypothesis_checks.push_back({"lambda != 0", true, 0.0});
    r.conclusion = {"order estimate unchanged", drift <= 1e-12, -drift};
    r.finalize();
    out.push_back(r);
  }

  {
    TheoremReport r;
    r.id = TheoremId::ProperContainment;
    r.inputs = "g = " + g.print();
    r.hypothesis_checks.push_back({"g in BCI(0)", order >= -kSampledTolerance, order});
    r.conclusion = verdict_check("g in BS*(0)", membership(g, Family::BSstar, 0.0, s));
    const FunctionExpr h = parse("z + 1/z - 2").with_singular_points({0.0});
    r.observations.push_back(verdict_check("z + 1/z - 2 in BS*(0)", membership(h, Family::BSstar, 0.0, s)));
    const FamilyVerdict hb = membership(h, Family::BCI, 0.0, s);
    r.observations.push_back({"z + 1/z - 2 outside BCI(0)", !hb.holds_on_samples, -hb.margin});
    r.finalize();
    out.push_back(r);
  }
  return out;
}

TheoremReport verify_characterization(const FunctionExpr& g, double alpha, const DiskSampler& s) {
  TheoremReport r;
  r.id = TheoremId::Characterization;
  r.inputs = describe(g, alpha);
  const FamilyVerdict left = membership(g, Family::BCI, alpha, s);
  const FamilyVerdict right = membership(reciprocal(g), Family::C, alpha, s);
  r.hypothesis_checks.push_back(verdict_check("g in BCI(alpha)", left));
  r.conclusion = verdict_check("1/g in C(alpha)", right);
  r.consistent = left.holds_on_samples == right.holds_on_samples;
  return r;
}

TheoremReport verify_factorization(const FunctionExpr& f, double alpha, int n_rays, const DiskSampler& s) {
  TheoremReport r;
  r.id = TheoremId::Factorization;
  r.inputs = describe(f, alpha);
  const LemmaEquivalence eq = lemma_equivalence_check(f, alpha, n_rays, s);
  r.hypothesis_checks.push_back(verdict_check("f in BC(alpha)", eq.bc_verdict));
  r.conclusion = {"v in S*((1+alpha)/2)", eq.v_side_holds, eq.v_starlike_margin};
  r.observations.push_back({"Wronskian drift <= 1e-8", eq.max_wronskian_drift <= 1e-8, -eq.max_wronskian_drift});
  r.consistent = eq.agree;
  return r;
}

TheoremReport sharpness_report(int n, double beta, double eps_end) {
  TheoremReport r;
  r.id = TheoremId::Sharpness;
  char buf[64];
  std::snprintf(buf, sizeof buf, "n = %d, beta = %.17g", n, beta);
  r.inputs = buf;
  const QFunction q = sharpness_weight(n, beta);
  const IntegralCriterion ic = integral_criterion(q, 1.0 - beta);
  r.hypothesis_checks.push_back({"integral of q_beta <= 1 - beta", ic.holds, 1.0 - beta - ic.integral});
  const SharpnessResult sr = sharpness_construct(n, beta, eps_end);
  r.conclusion = {"x0 with x0 y'/y <= beta exists", sr.x0.has_value(), beta - sr.min_ratio};
  r.finalize();
  return r;
}

}  // namespace gft
