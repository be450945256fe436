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

#ifndef PROPERSCORE_RULES_HPP
#define PROPERSCORE_RULES_HPP

#include <optional>
#include <string>

#include "properscore/distribution.hpp"
#include "properscore/quadrature.hpp"
#include "properscore/weight.hpp"

namespace properscore {

/// Exponent of the power-family scores; strictly positive and finite.
class Alpha {
 public:
  Alpha(double value);  // NOLINT: implicit by design, it is just a checked double
  double value() const { return value_; }
  /// The exponent regime in which the power-score properization collapses
  /// to a median point mass.
  bool median_regime() const { return value_ <= 1.0; }

 private:
  double value_;
};

/// A nonnegative score with the quadrature diagnostics it came from.
/// value is +infinity exactly when the divergent flag is set.
struct ScoreValue {
  double value = 0.0;
  IntegralResult diagnostics;

  bool finite() const { return !diagnostics.divergent; }
};

// --- CRPS family -----------------------------------------------------------

/// Weighted CRPS: integral of (P(x) - 1{y<x})^2 w(x) dx.  Any nonnegative
/// weight is accepted here.
ScoreValue wcrps(const Distribution& forecast, double observation,
                 const Weight& w, const QuadConfig& cfg = {});

/// CRPS == wcrps with unit weight.
ScoreValue crps(const Distribution& forecast, double observation,
                const QuadConfig& cfg = {});

/// Power score: integral of |P(x) - 1{y<x}|^alpha dx.
ScoreValue s_alpha(const Distribution& forecast, double observation,
                   Alpha alpha, const QuadConfig& cfg = {});

/// Properization map of the power score: the pointwise odds-power
/// transform with exponent 1/(alpha-1) for alpha > 1, and the point mass
/// at the (lower) median for alpha <= 1.
Distribution properize_bg(const Distribution& forecast, Alpha alpha);

/// s_alpha evaluated at the properized forecast.
ScoreValue s_alpha_star(const Distribution& forecast, double observation,
                        Alpha alpha, const QuadConfig& cfg = {});

// --- ratio-weighted (Anderson-Darling style) family ------------------------

/// Properization map of s_tilde: pointwise odds-power transform with
/// exponent 1/(2 alpha).  Requires a forecast cdf strictly inside (0,1);
/// the returned view is again strictly inside (0,1).  alpha = 1/2 is the
/// fixed point.
Distribution properize_tilde(const Distribution& forecast, Alpha alpha);

/// The ratio-weighted score
///   integral of |P - 1{y<x}|^(2a) / (P^a (1-P)^a) * w dx.
/// Requires forecast in P_(0,1) and a strictly positive weight.
ScoreValue s_tilde(const Distribution& forecast, double observation,
                   Alpha alpha, const Weight& w, const QuadConfig& cfg = {});

/// The properized rule in closed form,
///   integral of |1{x>y} - P|^(1/2) / |1 - 1{x>y} - P|^(1/2) * w dx,
/// which is free of alpha.  Identical to
/// s_tilde(properize_tilde(P, alpha), y, alpha, w) for every alpha.
ScoreValue s_tilde_star(const Distribution& forecast, double observation,
                        const Weight& w, const QuadConfig& cfg = {});

/// Expected s_tilde score E_{y~G}[s_tilde(F, y)] reduced to a single
/// x-integral (the Tonelli route):
///   integral of [ ((1-F)/F)^a G + (F/(1-F))^a (1-G) ] w dx.
/// The independent cross-check for expected_score on s_tilde rules.
ScoreValue expected_s_tilde_closed(const Distribution& forecast,
                                   const Distribution& truth, Alpha alpha,
                                   const Weight& w, const QuadConfig& cfg = {});

/// Entropy of the properized rule at G (its expected score under
/// truth-telling): 2 * integral of sqrt(G(1-G)) w dx.
ScoreValue entropy_s_tilde(const Distribution& truth, const Weight& w,
                           const QuadConfig& cfg = {});

// --- pointwise minimization machinery ---------------------------------------

/// g(q) = [((1-q)/q)^a p + (q/(1-q))^a (1-p)] * wx, the per-point expected
/// score of quoting cdf value q when the truth's cdf value is p, together
/// with its first two derivatives.
double g_eval(double q, double p, Alpha alpha, double wx);
double g_prime(double q, double p, Alpha alpha, double wx);
double g_double_prime(double q, double p, Alpha alpha, double wx);

/// The unique minimizer of g over (0,1):
/// q* = (1 + ((1-p)/p)^(1/(2a)))^(-1).
double argmin_g(double p, Alpha alpha);

// --- discrete logarithmic score ---------------------------------------------

/// -log2(p_i) when the outcome equals a support point x_i, else 0.
double log_score(const DiscreteDistribution& d, double outcome);

/// Expected log score under the distribution itself, -sum p log2 p.
double shannon_entropy(const DiscreteDistribution& d);

/// E_{w~truth}[log_score(forecast, w)].
double expected_log_score(const DiscreteDistribution& forecast,
                          const DiscreteDistribution& truth);

// --- the two probe rules (P(dx)-averaged variants) --------------------------

/// integral of |F - 1{y<x}|^(2a) F(dx); requires a density.
ScoreValue remark_first(const Distribution& forecast, double observation,
                        Alpha alpha, const QuadConfig& cfg = {});

/// integral of |F - 1{y<x}|^(2a) / (F^a (1-F)^a) F(dx); the alpha = 1 case
/// is the Anderson-Darling distance between F and the observation's step
/// function.  Requires a density and F in P_(0,1).
ScoreValue remark_second(const Distribution& forecast, double observation,
                         Alpha alpha, const QuadConfig& cfg = {});

// --- rule descriptor ---------------------------------------------------------

enum class RuleKind {
  crps,
  wcrps,
  s_alpha,
  s_alpha_star,
  s_tilde,
  s_tilde_star,
  log_score,
  remark_first,
  remark_second,
};

/// A closed description of a scoring rule and its parameters; the unit of
/// configuration for the CLI and the propriety harness.
struct RuleSpec {
  RuleKind kind = RuleKind::crps;
  double alpha = 1.0;
  Weight weight = Weight::constant(1.0);

  static RuleSpec make(RuleKind kind, std::optional<double> alpha,
                       std::optional<Weight> weight);

  bool uses_alpha() const;
  bool uses_weight() const;
  /// True for the rules defined only on P_(0,1).
  bool requires_p01() const;
  std::string name() const;
  std::string describe() const;
};

/// Evaluates the rule on one (forecast, observation) pair.
ScoreValue score(const RuleSpec& rule, const Distribution& forecast,
                 double observation, const QuadConfig& cfg = {});

/// E_{y~truth}[score(rule, forecast, y)], computed by integrating the
/// score over y (score-then-average).  Cross-validated against
/// expected_s_tilde_closed and mc_expect elsewhere.
ScoreValue expected_score(const RuleSpec& rule, const Distribution& forecast,
                          const Distribution& truth,
                          const QuadConfig& cfg = {});

}  // namespace properscore

#endif  // PROPERSCORE_RULES_HPP
