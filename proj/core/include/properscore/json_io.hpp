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

#ifndef PROPERSCORE_JSON_IO_HPP
#define PROPERSCORE_JSON_IO_HPP

#include <string>
#include <vector>

#include "properscore/propriety.hpp"
#include "properscore/rules.hpp"

namespace properscore::io {

// Distribution objects, e.g.
//   {"kind":"gumbel","loc":0.0,"scale":1.0}
//   {"kind":"normal","mean":0.0,"sd":1.0}
//   {"kind":"dirac","point":2.0}
//   {"kind":"empirical","points":[1,2,2,5]}
//   {"kind":"mixture","components":[{"weight":0.5,"dist":{...}},...]}
// Discrete distributions use {"kind":"discrete","points":[...],"masses":[...]}.
Distribution distribution_from_json(const std::string& text);
std::string distribution_to_json(const Distribution& d);

DiscreteDistribution discrete_from_json(const std::string& text);
std::string discrete_to_json(const DiscreteDistribution& d);

/// True when the JSON object carries {"kind":"discrete",...}.
bool is_discrete_json(const std::string& text);

// Weights, e.g. {"kind":"constant","c":1.0},
// {"kind":"indicator","a":0,"b":2,"floor":1e-6},
// {"kind":"gaussian_pdf","mu":0,"sigma":1}.
Weight weight_from_json(const std::string& text);
std::string weight_to_json(const Weight& w);

// Rules, e.g. {"rule":"s_tilde_star","alpha":1.0,"weight":{...}}; alpha
// may be omitted for s_tilde_star (the closed form does not use it) and
// the weight defaults to constant 1.
RuleSpec rule_from_json(const std::string& text);
std::string rule_to_json(const RuleSpec& r);

// Grids: {"description":"...","members":[{...},...]} with either all
// continuous or all discrete members, or a parametric lattice
// {"lattice":{"families":["logistic"],"locs":[-2,0,2],"scales":[0.5,1]}}.
struct ParsedGrid {
  std::string description;
  std::vector<Distribution> continuous;
  std::vector<DiscreteDistribution> discrete;
};
ParsedGrid grid_from_json(const std::string& text);

std::string prop_report_to_json(const PropReport& rep);
/// The score matrix as CSV: header row of truth names, one row per
/// forecast member.
std::string prop_report_matrix_csv(const PropReport& rep);

}  // namespace properscore::io

#endif  // PROPERSCORE_JSON_IO_HPP
