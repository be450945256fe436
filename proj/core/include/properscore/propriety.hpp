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

#ifndef PROPERSCORE_PROPRIETY_HPP
#define PROPERSCORE_PROPRIETY_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "properscore/rules.hpp"

namespace properscore {

/// A finite family of forecast distributions used as evidence grid for the
/// numerical propriety experiments.
struct DistGrid {
  std::string description;
  std::vector<Distribution> members;

  /// Cartesian lattice family x loc x scale over the parametric families
  /// ("gumbel", "laplace", "logistic", "normal").
  static DistGrid lattice(std::span<const std::string> families,
                          std::span<const double> locs,
                          std::span<const double> scales);
};

/// Outcome of a propriety experiment over a grid: the full expected-score
/// matrix M[i][j] = E_{G_j}[rule(F_i, .)], the worst diagonal margin
/// min_{i != j} (M[i][j] - M[j][j]) and the first violating pair if the
/// margin dips below -tolerance.  Columns with a +inf diagonal are
/// inconclusive (the inequality holds vacuously in the extended reals).
struct PropReport {
  RuleSpec rule;
  std::string grid_description;
  std::vector<std::string> member_names;
  std::vector<std::vector<ScoreValue>> matrix;
  double tolerance = 1e-6;
  double worst_margin = 0.0;
  bool proper = true;
  std::optional<std::pair<int, int>> violating_pair;
  std::vector<int> inconclusive_columns;
};

/// M[i][j] = expected_score(rule, members[i], members[j]); entries may be
/// +inf.  Entries are independent and computed on `threads` threads.
std::vector<std::vector<ScoreValue>> score_matrix(const RuleSpec& rule,
                                                  const DistGrid& grid,
                                                  const QuadConfig& cfg = {},
                                                  int threads = 1);

/// Checks S(Q,Q) <= S(P,Q) + tolerance over the grid.
PropReport check_proper(const RuleSpec& rule, const DistGrid& grid,
                        const QuadConfig& cfg = {}, double tolerance = 1e-6,
                        int threads = 1);

/// Impropriety certificate for the unproperized ratio-weighted rule: the
/// properization image of the truth is the analytically known challenger,
/// and a strictly positive margin
///   E_G[s_tilde(G, .)] - E_G[s_tilde(challenger, .)]
/// certifies that truth-telling is not optimal.  The margin vanishes at
/// alpha = 1/2, the fixed point of the map.  Divergent expectations make
/// the experiment inconclusive (nullopt).
struct Violation {
  Distribution challenger;
  double margin;
};
std::optional<Violation> find_violation(const Distribution& truth, Alpha alpha,
                                        const Weight& w,
                                        const QuadConfig& cfg = {});

/// Strict-propriety probe for the properized rule on the continuous
/// finite-entropy subclass: if the expected-score gap
/// E_G[rule(F,.)] - E_G[rule(G,.)] sits inside the tolerance, the cdfs
/// must coincide on a dense grid; otherwise the gap must be positive.
struct StrictnessVerdict {
  double gap = 0.0;
  double max_cdf_deviation = 0.0;
  bool scores_equal = false;
  bool identical = false;
  /// equality of expected scores occurred only for identical inputs
  bool consistent = true;
};
StrictnessVerdict strictness_check(const Distribution& forecast,
                                   const Distribution& truth,
                                   const QuadConfig& cfg = {},
                                   double tolerance = 1e-6,
                                   const Weight& w = Weight::constant(1.0));

/// Brute-force certificate for the pointwise minimizer condition: for each
/// x in x_grid, minimizes g(., G(x), alpha) over a uniform q-grid and
/// returns the largest distance to the closed-form argmin.
double verify_bayes_act(const Distribution& truth, Alpha alpha,
                        std::span<const double> x_grid,
                        std::size_t q_grid_points);

/// One-point arithmetic-geometric mean gap
///   1/2 [ sqrt((1-p)/p) q + sqrt(p/(1-p)) (1-q) ] - sqrt(q(1-q)),
/// nonnegative everywhere and zero exactly at p == q; the pointwise engine
/// of the strictness argument.
double amgm_gap(double p, double q);

/// Cross-entropy matrix for the discrete logarithmic score,
/// M[i][j] = E_{truth j}[log_score(forecast i, .)].
std::vector<std::vector<double>> log_score_matrix(
    const std::vector<DiscreteDistribution>& grid);

}  // namespace properscore

#endif  // PROPERSCORE_PROPRIETY_HPP
