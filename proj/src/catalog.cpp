#include "gft/catalog.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "gft/error.hpp"

namespace gft {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::C: return "C";
    case Family::Sstar: return "Sstar";
    case Family::BC: return "BC";
    case Family::BSstar: return "BSstar";
    case Family::BCI: return "BCI";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) noexcept {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "c") return Family::C;
  if (lower == "sstar" || lower == "s*") return Family::Sstar;
  if (lower == "bc") return Family::BC;
  if (lower == "bsstar" || lower == "bs*") return Family::BSstar;
  if (lower == "bci") return Family::BCI;
  return std::nullopt;
}

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CatalogEntry make(std::string name, const std::string& text, bool b_form, bool univalent,
                  std::vector<MembershipClaim> expected, std::vector<std::pair<std::string, double>> params = {}) {
  FunctionExpr e = parse(text);
  if (b_form) e = e.with_singular_points({0.0});
  return CatalogEntry{std::move(name), std::move(e), std::move(params), std::move(expected), b_form, univalent};
}

}  // namespace

CatalogEntry scaled_cot_entry(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(ErrorKind::InvalidArgument, "alpha must lie in [0,1)");
  const double b = std::sqrt((1.0 - alpha) / std::numbers::pi);
  const std::string bs = num(b);
  return make("scaled_cot", bs + "*cot(" + bs + "*z)", true, true,
              {{Family::BC, alpha, "S_f = 2(1-alpha)/pi is dominated by 2q with q(x) = (2-2alpha)/(pi(1+x^2)), "
                                   "whose integral (1-alpha)/2 places q in P((1+alpha)/2)"}},
              {{"alpha", alpha}, {"b_alpha", b}});
}

CatalogEntry power_reciprocal_entry(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0) || alpha == 0.5) {
    throw Error(ErrorKind::InvalidArgument, "alpha must lie in [0,1) and differ from 1/2");
  }
  const double eta = 2.0 * alpha - 1.0;
  const std::string es = num(eta);
  return make("power_reciprocal", es + "/(1 - (1 - z)^" + es + ")", true, true,
              {{Family::BCI, alpha, "reciprocal f has 1 + z f''/f' = 1 + 2(1-alpha) z/(1-z), real part > alpha"}},
              {{"alpha", alpha}, {"eta", eta}});
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back(make("quarter_plus_reciprocal", "z/4 + 1/z", true, true,
                     {{Family::BC, 0.5, "1 + z f''/f' = (z^2+4)/(z^2-4), real part <= -3/5 on the disk"}}));
    v.push_back(scaled_cot_entry(0.25));
    v.push_back(make("reciprocal_half_plane", "(1-z)/z", true, true,
                     {{Family::BC, 0.5, "1 + z g''/g' = -1 identically"},
                      {Family::BCI, 0.0, "reciprocal z/(1-z) is convex: Re((1+z)/(1-z)) > 0"}}));
    v.push_back(make("log_reciprocal", "-(1)/log(1-z)", true, true,
                     {{Family::BCI, 0.5, "reciprocal -log(1-z) has 1 + z f''/f' = 1/(1-z), real part > 1/2"}}));
    v.push_back(power_reciprocal_entry(0.25));
    v.push_back(make("koebe_reciprocal", "z + 1/z - 2", true, true,
                     {{Family::BSstar, 0.0, "-z h'/h = (1+z)/(1-z) has positive real part"}}));
    v.push_back(make("neg_log", "-log(1-z)", false, true,
                     {{Family::C, 0.5, "1 + z f''/f' = 1/(1-z), real part > 1/2"}}));
    v.push_back(make("koebe", "z/(1-z)^2", false, true,
                     {{Family::Sstar, 0.0, "z k'/k = (1+z)/(1-z) has positive real part"}}));
    v.push_back(make("half_plane", "z/(1-z)", false, true,
                     {{Family::C, 0.0, "1 + z l''/l' = (1+z)/(1-z) has positive real part"},
                      {Family::Sstar, 0.5, "z l'/l = 1/(1-z), real part > 1/2"}}));
    v.push_back(make("mobius", "(2z+1)/(z+3)", false, true, {}));
    return v;
  }();
  return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

nlohmann::ordered_json to_json(const CatalogEntry& e) {
  nlohmann::ordered_json j;
  j["name"] = e.name;
  j["expr"] = e.expr.print();
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : e.params) params[k] = v;
  j["params"] = params;
  nlohmann::ordered_json expected = nlohmann::ordered_json::array();
  for (const auto& c : e.expected) {
    expected.push_back({{"family", std::string(to_string(c.family))}, {"order", c.order}, {"cite", c.cite}});
  }
  j["expected"] = expected;
  return j;
}

nlohmann::ordered_json catalog_json() {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : catalog()) arr.push_back(to_json(e));
  return arr;
}

}  // namespace gft
