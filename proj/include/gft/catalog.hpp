#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gft/expr.hpp"
#include "gft/family.hpp"

namespace gft {

struct MembershipClaim {
  Family family;
  double order;
  std::string cite;  // why the claim holds
};

struct CatalogEntry {
  std::string name;
  FunctionExpr expr;
  std::vector<std::pair<std::string, double>> params;
  std::vector<MembershipClaim> expected;
  bool b_form = false;     // Laurent form 1/z + a0 + a1 z + ...
  bool univalent = false;  // known univalent on the disk (metadata, not checked)
};

/// b cot(b z) with b = sqrt((1 - alpha)/pi); S_f = 2 b^2 is constant.
CatalogEntry scaled_cot_entry(double alpha);
/// eta / (1 - (1 - z)^eta) with eta = 2 alpha - 1 (alpha != 1/2); its
/// reciprocal is convex of order alpha.
CatalogEntry power_reciprocal_entry(double alpha);

/// The compiled-in catalog, with default parameters bound.
const std::vector<CatalogEntry>& catalog();
/// nullptr when no entry has that name.
const CatalogEntry* find_catalog_entry(std::string_view name);

/// Array of {name, expr, params: {...}, expected: [{family, order, cite}]}.
nlohmann::ordered_json catalog_json();
nlohmann::ordered_json to_json(const CatalogEntry& e);

}  // namespace gft
