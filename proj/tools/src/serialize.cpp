/*
   Copyright 2026 The circlezero Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include "circlezero/cli/serialize.hpp"

#include <sstream>

namespace circlezero::cli {

std::string rational_string(const exact::BigRational& q) {
  exact::BigRational c = q;
  c.canonicalize();
  return c.get_str();
}

Json to_json(const precision::RealEnclosure& x) {
  return Json{{"mid", x.mid_string()}, {"rad", x.rad_string()}, {"bits", x.precision()}};
}

Json to_json(const precision::ComplexEnclosure& z) { return Json{{"re", to_json(z.re())}, {"im", to_json(z.im())}}; }

Json to_json(const families::ZetaCoefficient& c) {
  return Json{{"a", rational_string(c.a())}, {"b", rational_string(c.b())}, {"c", rational_string(c.c())}};
}

Json to_json(const families::FamilyPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(to_json(c));
  return Json{{"family", families::family_name(p.family)},
              {"k", p.k},
              {"pi_power", p.pi_power},
              {"epsilon", p.epsilon},
              {"combination_scale", rational_string(p.combination_scale)},
              {"degree", p.degree()},
              {"origin_multiplicity", p.origin_multiplicity()},
              {"coefficients", coeffs}};
}

namespace {

Json optional_json(const std::optional<precision::RealEnclosure>& x) { return x ? to_json(*x) : Json(nullptr); }

}  // namespace

Json to_json(const verify::VerificationReport& r) {
  return Json{{"family", families::family_name(r.family)},
              {"k", r.k},
              {"method", verify::to_string(r.method)},
              {"zeros_on_circle", r.zeros_on_circle},
              {"degree", r.degree},
              {"max_modulus_deviation", optional_json(r.max_modulus_deviation)},
              {"min_root_distance", optional_json(r.min_root_distance)},
              {"certified", r.certified()},
              {"status", verify::to_string(r.status)},
              {"requested", verify::to_string(r.requested)},
              {"zeros_at_origin", r.zeros_at_origin},
              {"zeros_off_circle", r.zeros_off_circle},
              {"margin", optional_json(r.margin)},
              {"bound", optional_json(r.bound)},
              {"order_achieved", r.order_achieved},
              {"sign_changes", r.sign_changes},
              {"target", r.target},
              {"simple", r.simple},
              {"bits", r.bits},
              {"note", r.note}};
}

Json to_json(const verify::CriteriaReport& r) {
  return Json{{"family", families::family_name(r.family)},
              {"k", r.k},
              {"criterion", verify::to_string(r.criterion)},
              {"c", to_json(r.c)},
              {"margin", to_json(r.margin)},
              {"holds", verify::to_string(r.holds)},
              {"exact", r.exact},
              {"bits", r.bits}};
}

Json to_json(const approx::ApproxResult& r) {
  return Json{{"scheme", approx::to_string(r.scheme)},
              {"root", to_json(r.root)},
              {"zeta3_estimate", to_json(r.estimate)},
              {"matched_decimals", r.matched_decimals},
              {"estimate_imag", to_json(r.estimate_imag)},
              {"zeta3", to_json(r.zeta3)},
              {"error", to_json(r.error)},
              {"seed", to_json(r.seed)},
              {"residual", to_json(r.residual)},
              {"newton_steps", r.newton_steps},
              {"bits", r.bits}};
}

Json to_json(const approx::SeriesEvaluation& e) {
  return Json{{"identity", e.identity},
              {"k", e.k},
              {"z", to_json(e.z)},
              {"N", e.N},
              {"lhs", to_json(e.lhs)},
              {"rhs", to_json(e.rhs)},
              {"tail_bound", to_json(e.tail_bound)},
              {"residual", to_json(e.residual)},
              {"holds", e.holds()},
              {"bits", e.bits}};
}

Json to_json(const identities::ObservationReport& r) {
  return Json{{"identity", "observation"},
              {"k", r.k},
              {"residual", to_json(r.residual)},
              {"holds", r.exact_holds && r.residual.contains_zero()},
              {"exact_holds", r.exact_holds},
              {"signs", r.signs},
              {"bits", r.bits}};
}

Json to_json(const identities::ExactIdentity& r) {
  return Json{{"identity", r.name},
              {"k", r.k},
              {"lhs", to_json(r.lhs)},
              {"rhs", to_json(r.rhs)},
              {"holds", r.holds()}};
}

namespace {

bool is_enclosure(const Json& v) { return v.is_object() && v.contains("mid") && v.contains("rad"); }

std::string scalar_string(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + scalar_string(v[i]);
    return s;
  }
  return v.dump();
}

void flatten(const std::string& prefix, const Json& v, std::vector<std::pair<std::string, std::string>>& out) {
  if (is_enclosure(v)) {
    out.emplace_back(prefix + "_mid", v["mid"].get<std::string>());
    out.emplace_back(prefix + "_rad", v["rad"].get<std::string>());
  } else if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(prefix.empty() ? it.key() : prefix + "_" + it.key(), it.value(), out);
  } else if (v.is_array() && !v.empty() && v[0].is_object()) {
    // arrays of objects (coefficients) collapse to ';'-joined fields per key
    std::vector<std::pair<std::string, std::string>> merged;
    for (size_t i = 0; i < v.size(); ++i) {
      std::vector<std::pair<std::string, std::string>> one;
      flatten(prefix, v[i], one);
      if (merged.empty()) {
        merged = one;
      } else {
        for (size_t j = 0; j < one.size() && j < merged.size(); ++j) merged[j].second += ";" + one[j].second;
      }
    }
    out.insert(out.end(), merged.begin(), merged.end());
  } else {
    out.emplace_back(prefix, scalar_string(v));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string to_csv(const Json& rows) {
  std::ostringstream os;
  bool header = false;
  for (const auto& row : rows) {
    std::vector<std::pair<std::string, std::string>> cols;
    flatten("", row, cols);
    if (!header) {
      for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_field(cols[i].first);
      os << "\n";
      header = true;
    }
    for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_field(cols[i].second);
    os << "\n";
  }
  return os.str();
}

std::string to_text(const Json& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    std::vector<std::pair<std::string, std::string>> cols;
    flatten("", row, cols);
    for (size_t i = 0; i < cols.size(); ++i) {
      if (cols[i].second.empty()) continue;
      os << (i ? " " : "") << cols[i].first << "=" << cols[i].second;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace circlezero::cli
