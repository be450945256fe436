// Copyright 2026 The properscore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "properscore/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace properscore::io {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed ") + what + ": " +
                                e.what());
  }
}

double number_field(const json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw std::invalid_argument(std::string(what) + " needs numeric field '" +
                                key + "'");
  }
  return j[key].get<double>();
}

std::string kind_field(const json& j, const char* what) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw std::invalid_argument(std::string(what) +
                                " needs a string field 'kind'");
  }
  return j["kind"].get<std::string>();
}

std::vector<double> number_array(const json& j, const char* key,
                                 const char* what) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw std::invalid_argument(std::string(what) + " needs array field '" +
                                key + "'");
  }
  std::vector<double> out;
  for (const auto& v : j[key]) {
    if (!v.is_number()) {
      throw std::invalid_argument(std::string(what) + " field '" + key +
                                  "' must contain numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

Distribution distribution_from(const json& j);

Distribution mixture_from(const json& j) {
  if (!j.contains("components") || !j["components"].is_array()) {
    throw std::invalid_argument("mixture needs array field 'components'");
  }
  std::vector<Distribution::Component> comps;
  for (const auto& c : j["components"]) {
    if (!c.is_object() || !c.contains("dist")) {
      throw std::invalid_argument(
          "mixture component needs fields 'weight' and 'dist'");
    }
    comps.push_back(Distribution::Component{
        number_field(c, "weight", "mixture component"),
        distribution_from(c["dist"])});
  }
  return Distribution::mixture(std::move(comps));
}

Distribution distribution_from(const json& j) {
  const std::string kind = kind_field(j, "distribution");
  try {
    if (kind == "gumbel") {
      return Distribution::gumbel(number_field(j, "loc", "gumbel"),
                                  number_field(j, "scale", "gumbel"));
    }
    if (kind == "laplace") {
      return Distribution::laplace(number_field(j, "loc", "laplace"),
                                   number_field(j, "scale", "laplace"));
    }
    if (kind == "logistic") {
      return Distribution::logistic(number_field(j, "loc", "logistic"),
                                    number_field(j, "scale", "logistic"));
    }
    if (kind == "normal") {
      return Distribution::normal(number_field(j, "mean", "normal"),
                                  number_field(j, "sd", "normal"));
    }
    if (kind == "dirac") {
      return Distribution::dirac(number_field(j, "point", "dirac"));
    }
    if (kind == "empirical") {
      return Distribution::empirical(number_array(j, "points", "empirical"));
    }
    if (kind == "mixture") {
      return mixture_from(j);
    }
  } catch (const std::invalid_argument&) {
    throw;
  }
  throw std::invalid_argument("unknown distribution kind: " + kind);
}

json distribution_to(const Distribution& d) {
  json j;
  switch (d.kind()) {
    case DistKind::gumbel:
    case DistKind::laplace:
    case DistKind::logistic: {
      const auto p = d.parameters();
      j["kind"] = d.kind() == DistKind::gumbel    ? "gumbel"
                  : d.kind() == DistKind::laplace ? "laplace"
                                                  : "logistic";
      j["loc"] = p[0];
      j["scale"] = p[1];
      return j;
    }
    case DistKind::normal: {
      const auto p = d.parameters();
      j["kind"] = "normal";
      j["mean"] = p[0];
      j["sd"] = p[1];
      return j;
    }
    case DistKind::dirac:
      j["kind"] = "dirac";
      j["point"] = d.parameters()[0];
      return j;
    case DistKind::empirical:
      j["kind"] = "empirical";
      j["points"] = d.empirical_points();
      return j;
    case DistKind::mixture: {
      j["kind"] = "mixture";
      json comps = json::array();
      for (const auto& c : d.mixture_components()) {
        comps.push_back(
            {{"weight", c.weight}, {"dist", distribution_to(c.dist)}});
      }
      j["components"] = comps;
      return j;
    }
    default:
      throw std::invalid_argument(
          "transformed and custom distributions are not serializable");
  }
}

Weight weight_from(const json& j) {
  const std::string kind = kind_field(j, "weight");
  if (kind == "constant") {
    return Weight::constant(number_field(j, "c", "constant weight"));
  }
  if (kind == "indicator") {
    const double floor =
        j.contains("floor") ? number_field(j, "floor", "indicator") : 0.0;
    return Weight::indicator(number_field(j, "a", "indicator"),
                             number_field(j, "b", "indicator"), floor);
  }
  if (kind == "gaussian_cdf") {
    return Weight::gaussian_cdf(number_field(j, "mu", "gaussian weight"),
                                number_field(j, "sigma", "gaussian weight"));
  }
  if (kind == "gaussian_sf") {
    return Weight::gaussian_sf(number_field(j, "mu", "gaussian weight"),
                               number_field(j, "sigma", "gaussian weight"));
  }
  if (kind == "gaussian_pdf") {
    return Weight::gaussian_pdf(number_field(j, "mu", "gaussian weight"),
                                number_field(j, "sigma", "gaussian weight"));
  }
  throw std::invalid_argument("unknown weight kind: " + kind);
}

json weight_to(const Weight& w) {
  json j;
  const auto& p = w.parameters();
  switch (w.kind()) {
    case WeightKind::constant:
      j["kind"] = "constant";
      j["c"] = p[0];
      break;
    case WeightKind::indicator:
      j["kind"] = "indicator";
      j["a"] = p[0];
      j["b"] = p[1];
      j["floor"] = p[2];
      break;
    case WeightKind::gaussian_cdf:
    case WeightKind::gaussian_sf:
    case WeightKind::gaussian_pdf:
      j["kind"] = w.kind() == WeightKind::gaussian_cdf  ? "gaussian_cdf"
                  : w.kind() == WeightKind::gaussian_sf ? "gaussian_sf"
                                                        : "gaussian_pdf";
      j["mu"] = p[0];
      j["sigma"] = p[1];
      break;
  }
  return j;
}

RuleKind rule_kind_from(const std::string& name) {
  if (name == "crps") return RuleKind::crps;
  if (name == "wcrps") return RuleKind::wcrps;
  if (name == "s_alpha") return RuleKind::s_alpha;
  if (name == "s_alpha_star") return RuleKind::s_alpha_star;
  if (name == "s_tilde") return RuleKind::s_tilde;
  if (name == "s_tilde_star") return RuleKind::s_tilde_star;
  if (name == "log_score") return RuleKind::log_score;
  if (name == "remark_first") return RuleKind::remark_first;
  if (name == "remark_second") return RuleKind::remark_second;
  throw std::invalid_argument("unknown rule: " + name);
}

}  // namespace

Distribution distribution_from_json(const std::string& text) {
  return distribution_from(parse(text, "distribution"));
}

std::string distribution_to_json(const Distribution& d) {
  return distribution_to(d).dump();
}

DiscreteDistribution discrete_from_json(const std::string& text) {
  const json j = parse(text, "discrete distribution");
  if (kind_field(j, "discrete distribution") != "discrete") {
    throw std::invalid_argument("expected kind 'discrete'");
  }
  return DiscreteDistribution(number_array(j, "points", "discrete"),
                              number_array(j, "masses", "discrete"));
}

std::string discrete_to_json(const DiscreteDistribution& d) {
  json j;
  j["kind"] = "discrete";
  j["points"] = d.points();
  j["masses"] = d.masses();
  return j.dump();
}

bool is_discrete_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    return j.is_object() && j.contains("kind") && j["kind"] == "discrete";
  } catch (const json::exception&) {
    return false;
  }
}

Weight weight_from_json(const std::string& text) {
  return weight_from(parse(text, "weight"));
}

std::string weight_to_json(const Weight& w) { return weight_to(w).dump(); }

RuleSpec rule_from_json(const std::string& text) {
  const json j = parse(text, "rule");
  if (!j.is_object() || !j.contains("rule") || !j["rule"].is_string()) {
    throw std::invalid_argument("rule needs a string field 'rule'");
  }
  const RuleKind kind = rule_kind_from(j["rule"].get<std::string>());
  std::optional<double> alpha;
  if (j.contains("alpha")) alpha = number_field(j, "alpha", "rule");
  std::optional<Weight> weight;
  if (j.contains("weight")) weight = weight_from(j["weight"]);
  return RuleSpec::make(kind, alpha, weight);
}

std::string rule_to_json(const RuleSpec& r) {
  json j;
  j["rule"] = r.name();
  if (r.uses_alpha()) j["alpha"] = r.alpha;
  if (r.uses_weight()) j["weight"] = weight_to(r.weight);
  return j.dump();
}

ParsedGrid grid_from_json(const std::string& text) {
  const json j = parse(text, "grid");
  ParsedGrid g;
  if (!j.is_object()) throw std::invalid_argument("grid must be an object");
  g.description = j.value("description", std::string("grid"));
  if (j.contains("lattice")) {
    const json& l = j["lattice"];
    if (!l.contains("families") || !l["families"].is_array()) {
      throw std::invalid_argument("lattice needs array field 'families'");
    }
    std::vector<std::string> families;
    for (const auto& f : l["families"]) {
      families.push_back(f.get<std::string>());
    }
    const auto locs = number_array(l, "locs", "lattice");
    const auto scales = number_array(l, "scales", "lattice");
    g.continuous = DistGrid::lattice(families, locs, scales).members;
    return g;
  }
  if (!j.contains("members") || !j["members"].is_array() ||
      j["members"].empty()) {
    throw std::invalid_argument("grid needs nonempty array field 'members'");
  }
  for (const auto& m : j["members"]) {
    if (m.is_object() && m.contains("kind") && m["kind"] == "discrete") {
      g.discrete.emplace_back(number_array(m, "points", "discrete"),
                              number_array(m, "masses", "discrete"));
    } else {
      g.continuous.push_back(distribution_from(m));
    }
  }
  if (!g.continuous.empty() && !g.discrete.empty()) {
    throw std::invalid_argument(
        "grid members must be all continuous or all discrete");
  }
  return g;
}

std::string prop_report_to_json(const PropReport& rep) {
  json j;
  j["rule"] = json::parse(rule_to_json(rep.rule));
  j["grid"] = rep.grid_description;
  j["members"] = rep.member_names;
  j["tolerance"] = rep.tolerance;
  j["proper"] = rep.proper;
  if (std::isfinite(rep.worst_margin)) {
    j["worst_margin"] = rep.worst_margin;
  } else {
    j["worst_margin"] = rep.worst_margin > 0 ? "inf" : "-inf";
  }
  if (rep.violating_pair) {
    j["violating_pair"] = {rep.violating_pair->first,
                           rep.violating_pair->second};
  }
  j["inconclusive_columns"] = rep.inconclusive_columns;
  json matrix = json::array();
  for (const auto& row : rep.matrix) {
    json r = json::array();
    for (const auto& s : row) {
      json cell;
      if (std::isinf(s.value)) {
        cell["value"] = "inf";
      } else {
        cell["value"] = s.value;
      }
      cell["converged"] = s.diagnostics.converged;
      cell["divergent"] = s.diagnostics.divergent;
      r.push_back(cell);
    }
    matrix.push_back(r);
  }
  j["matrix"] = matrix;
  return j.dump(2);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string prop_report_matrix_csv(const PropReport& rep) {
  std::ostringstream out;
  out << "forecast\\truth";
  for (const auto& name : rep.member_names) out << "," << csv_field(name);
  out << "\n";
  char buf[40];
  for (std::size_t i = 0; i < rep.matrix.size(); ++i) {
    out << csv_field(rep.member_names[i]);
    for (const auto& s : rep.matrix[i]) {
      if (std::isinf(s.value)) {
        out << ",inf";
      } else {
        std::snprintf(buf, sizeof(buf), "%.17g", s.value);
        out << "," << buf;
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace properscore::io
