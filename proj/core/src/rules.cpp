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

#include "properscore/rules.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace properscore {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// (num/den)^a through logs so that deep-tail cdf/survival pairs neither
// overflow prematurely nor lose precision; an exhausted denominator is a
// genuine pointwise blow-up and surfaces as +inf.
double pow_ratio(double num, double den, double a) {
  if (num <= 0.0) return 0.0;
  if (den <= 0.0) return kInf;
  return std::exp(a * (std::log(num) - std::log(den)));
}

// (num/den)^a * factor with the whole product taken in log space, so a
// huge ratio against a vanishing factor resolves instead of giving inf*0.
double pow_ratio_times(double num, double den, double a, double factor) {
  if (factor <= 0.0 || num <= 0.0) return 0.0;
  if (den <= 0.0) return kInf;
  return std::exp(a * (std::log(num) - std::log(den)) + std::log(factor));
}

void require_p01(const Distribution& d) {
  if (!d.in_p01()) {
    throw std::domain_error("distribution not in P_(0,1)");
  }
}

void require_observation(double y) {
  if (!std::isfinite(y)) {
    throw std::domain_error("observation must be finite");
  }
}

struct Frame {
  std::vector<double> breakpoints;
  double center;
  double scale;
};

Frame frame_for(const Distribution& d, double y, const Weight* w,
                const Distribution* second = nullptr) {
  Frame fr;
  fr.breakpoints = d.breakpoints();
  fr.breakpoints.push_back(y);
  if (w) {
    auto wb = w->breakpoints();
    fr.breakpoints.insert(fr.breakpoints.end(), wb.begin(), wb.end());
  }
  fr.center = d.location_hint();
  fr.scale = d.scale_hint();
  if (second) {
    auto sb = second->breakpoints();
    fr.breakpoints.insert(fr.breakpoints.end(), sb.begin(), sb.end());
    const double c2 = second->location_hint();
    fr.scale = std::max(fr.scale, second->scale_hint()) +
               0.5 * std::abs(fr.center - c2);
    fr.center = 0.5 * (fr.center + c2);
  }
  fr.scale += 0.5 * std::abs(y - fr.center);
  return fr;
}

ScoreValue as_score(IntegralResult res) {
  ScoreValue s;
  if (res.divergent) {
    res.value = kInf;
    s.value = kInf;
  } else {
    s.value = std::max(0.0, res.value);
  }
  s.diagnostics = res;
  return s;
}

ScoreValue score_integral(const RealFn& integrand, const Frame& fr,
                          const QuadConfig& cfg) {
  return as_score(
      integrate_real_line(integrand, cfg, fr.breakpoints, fr.center,
                          fr.scale));
}

// shared integrand of the ratio-weighted family:
//   x > y:  (S/F)^a w,   x <= y:  (F/S)^a w
ScoreValue ratio_branch_score(const Distribution& forecast, double y, double a,
                              const Weight& w, const QuadConfig& cfg) {
  auto integrand = [&](double x) {
    const double wx = w(x);
    if (wx <= 0.0) return 0.0;
    const double F = forecast.cdf(x);
    const double S = forecast.survival(x);
    return x > y ? pow_ratio_times(S, F, a, wx)
                 : pow_ratio_times(F, S, a, wx);
  };
  return score_integral(integrand, frame_for(forecast, y, &w), cfg);
}

}  // namespace

Alpha::Alpha(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument("alpha must be positive and finite");
  }
}

ScoreValue wcrps(const Distribution& forecast, double observation,
                 const Weight& w, const QuadConfig& cfg) {
  require_observation(observation);
  auto integrand = [&](double x) {
    const double wx = w(x);
    if (wx <= 0.0) return 0.0;
    const double d =
        x > observation ? forecast.survival(x) : forecast.cdf(x);
    return d * d * wx;
  };
  return score_integral(integrand, frame_for(forecast, observation, &w), cfg);
}

ScoreValue crps(const Distribution& forecast, double observation,
                const QuadConfig& cfg) {
  return wcrps(forecast, observation, Weight::constant(1.0), cfg);
}

ScoreValue s_alpha(const Distribution& forecast, double observation,
                   Alpha alpha, const QuadConfig& cfg) {
  require_observation(observation);
  const double a = alpha.value();
  auto integrand = [&](double x) {
    const double d =
        x > observation ? forecast.survival(x) : forecast.cdf(x);
    return std::pow(d, a);
  };
  return score_integral(integrand, frame_for(forecast, observation, nullptr),
                        cfg);
}

Distribution properize_bg(const Distribution& forecast, Alpha alpha) {
  if (alpha.median_regime()) {
    return Distribution::dirac(forecast.median());
  }
  return Distribution::odds_power(forecast, 1.0 / (alpha.value() - 1.0));
}

ScoreValue s_alpha_star(const Distribution& forecast, double observation,
                        Alpha alpha, const QuadConfig& cfg) {
  return s_alpha(properize_bg(forecast, alpha), observation, alpha, cfg);
}

Distribution properize_tilde(const Distribution& forecast, Alpha alpha) {
  require_p01(forecast);
  return Distribution::odds_power(forecast, 1.0 / (2.0 * alpha.value()));
}

ScoreValue s_tilde(const Distribution& forecast, double observation,
                   Alpha alpha, const Weight& w, const QuadConfig& cfg) {
  require_observation(observation);
  require_p01(forecast);
  require_strictly_positive(w);
  return ratio_branch_score(forecast, observation, alpha.value(), w, cfg);
}

ScoreValue s_tilde_star(const Distribution& forecast, double observation,
                        const Weight& w, const QuadConfig& cfg) {
  require_observation(observation);
  require_p01(forecast);
  require_strictly_positive(w);
  // the properized rule collapses to the alpha-free exponent 1/2
  return ratio_branch_score(forecast, observation, 0.5, w, cfg);
}

ScoreValue expected_s_tilde_closed(const Distribution& forecast,
                                   const Distribution& truth, Alpha alpha,
                                   const Weight& w, const QuadConfig& cfg) {
  require_p01(forecast);
  require_strictly_positive(w);
  const double a = alpha.value();
  auto integrand = [&](double x) {
    const double wx = w(x);
    if (wx <= 0.0) return 0.0;
    const double F = forecast.cdf(x);
    const double SF = forecast.survival(x);
    const double G = truth.cdf(x);
    const double SG = truth.survival(x);
    const double up = pow_ratio_times(SF, F, a, G);
    const double dn = pow_ratio_times(F, SF, a, SG);
    return (up + dn) * wx;
  };
  Frame fr = frame_for(forecast, truth.location_hint(), &w, &truth);
  return score_integral(integrand, fr, cfg);
}

ScoreValue entropy_s_tilde(const Distribution& truth, const Weight& w,
                           const QuadConfig& cfg) {
  require_p01(truth);
  auto integrand = [&](double x) {
    const double wx = w(x);
    if (wx <= 0.0) return 0.0;
    return 2.0 * std::sqrt(truth.cdf(x) * truth.survival(x)) * wx;
  };
  return score_integral(integrand,
                        frame_for(truth, truth.location_hint(), &w), cfg);
}

namespace {

void require_unit_interval(double v, const char* what) {
  if (!(v > 0.0 && v < 1.0)) {
    throw std::domain_error(std::string(what) + " must lie in (0,1)");
  }
}

}  // namespace

double g_eval(double q, double p, Alpha alpha, double wx) {
  require_unit_interval(q, "q");
  require_unit_interval(p, "p");
  const double a = alpha.value();
  const double r = (1.0 - q) / q;
  return (std::pow(r, a) * p + std::pow(r, -a) * (1.0 - p)) * wx;
}

double g_prime(double q, double p, Alpha alpha, double wx) {
  require_unit_interval(q, "q");
  require_unit_interval(p, "p");
  const double a = alpha.value();
  const double r = (1.0 - q) / q;
  return a * std::pow(r, a - 1.0) * (-1.0 / (q * q)) * p * wx +
         a * std::pow(r, 1.0 - a) / ((1.0 - q) * (1.0 - q)) * (1.0 - p) * wx;
}

double g_double_prime(double q, double p, Alpha alpha, double wx) {
  require_unit_interval(q, "q");
  require_unit_interval(p, "p");
  const double a = alpha.value();
  const double r = (1.0 - q) / q;
  const double q4 = q * q * q * q;
  const double s4 = (1.0 - q) * (1.0 - q) * (1.0 - q) * (1.0 - q);
  return a * std::pow(r, a - 2.0) * (a + 1.0 - 2.0 * q) / q4 * p * wx +
         a * std::pow(r, 2.0 - a) * (a - 1.0 + 2.0 * q) / s4 * (1.0 - p) * wx;
}

double argmin_g(double p, Alpha alpha) {
  require_unit_interval(p, "p");
  const double r = std::pow((1.0 - p) / p, 1.0 / (2.0 * alpha.value()));
  return 1.0 / (1.0 + r);
}

double log_score(const DiscreteDistribution& d, double outcome) {
  const double m = d.mass_at(outcome);
  return m > 0.0 ? -std::log2(m) : 0.0;
}

double shannon_entropy(const DiscreteDistribution& d) {
  double h = 0.0;
  for (double m : d.masses()) h -= m * std::log2(m);
  return h;
}

double expected_log_score(const DiscreteDistribution& forecast,
                          const DiscreteDistribution& truth) {
  double acc = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    acc += truth.masses()[i] * log_score(forecast, truth.points()[i]);
  }
  return acc;
}

namespace {

void require_density(const Distribution& d) {
  if (!d.density(d.location_hint()).has_value()) {
    throw std::domain_error("rule requires an absolutely continuous forecast");
  }
}

}  // namespace

ScoreValue remark_first(const Distribution& forecast, double observation,
                        Alpha alpha, const QuadConfig& cfg) {
  require_observation(observation);
  require_density(forecast);
  const double two_a = 2.0 * alpha.value();
  auto f = [&](double x) {
    const double d =
        x > observation ? forecast.survival(x) : forecast.cdf(x);
    return std::pow(d, two_a);
  };
  const double kink[] = {observation};
  return as_score(expect_under(forecast, f, cfg, kink));
}

ScoreValue remark_second(const Distribution& forecast, double observation,
                         Alpha alpha, const QuadConfig& cfg) {
  require_observation(observation);
  require_density(forecast);
  require_p01(forecast);
  const double a = alpha.value();
  auto f = [&](double x) {
    const double F = forecast.cdf(x);
    const double S = forecast.survival(x);
    return x > observation ? pow_ratio(S, F, a) : pow_ratio(F, S, a);
  };
  const double kink[] = {observation};
  return as_score(expect_under(forecast, f, cfg, kink));
}

RuleSpec RuleSpec::make(RuleKind kind, std::optional<double> alpha,
                        std::optional<Weight> weight) {
  RuleSpec r;
  r.kind = kind;
  if (alpha) {
    r.alpha = Alpha(*alpha).value();
  } else if (r.uses_alpha()) {
    throw std::invalid_argument("rule " + r.name() + " requires alpha");
  }
  if (weight) {
    r.weight = std::move(*weight);
  }
  if (kind == RuleKind::s_tilde || kind == RuleKind::s_tilde_star) {
    require_strictly_positive(r.weight);
  }
  return r;
}

bool RuleSpec::uses_alpha() const {
  switch (kind) {
    case RuleKind::s_alpha:
    case RuleKind::s_alpha_star:
    case RuleKind::s_tilde:
    case RuleKind::remark_first:
    case RuleKind::remark_second:
      return true;
    default:
      return false;
  }
}

bool RuleSpec::uses_weight() const {
  switch (kind) {
    case RuleKind::wcrps:
    case RuleKind::s_tilde:
    case RuleKind::s_tilde_star:
      return true;
    default:
      return false;
  }
}

bool RuleSpec::requires_p01() const {
  switch (kind) {
    case RuleKind::s_tilde:
    case RuleKind::s_tilde_star:
    case RuleKind::remark_second:
      return true;
    default:
      return false;
  }
}

std::string RuleSpec::name() const {
  switch (kind) {
    case RuleKind::crps:
      return "crps";
    case RuleKind::wcrps:
      return "wcrps";
    case RuleKind::s_alpha:
      return "s_alpha";
    case RuleKind::s_alpha_star:
      return "s_alpha_star";
    case RuleKind::s_tilde:
      return "s_tilde";
    case RuleKind::s_tilde_star:
      return "s_tilde_star";
    case RuleKind::log_score:
      return "log_score";
    case RuleKind::remark_first:
      return "remark_first";
    case RuleKind::remark_second:
      return "remark_second";
  }
  return "?";
}

std::string RuleSpec::describe() const {
  std::string s = name();
  if (uses_alpha()) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "(alpha=%.17g)", alpha);
    s += buf;
  }
  if (uses_weight()) {
    s += "[" + weight.describe() + "]";
  }
  return s;
}

ScoreValue score(const RuleSpec& rule, const Distribution& forecast,
                 double observation, const QuadConfig& cfg) {
  switch (rule.kind) {
    case RuleKind::crps:
      return crps(forecast, observation, cfg);
    case RuleKind::wcrps:
      return wcrps(forecast, observation, rule.weight, cfg);
    case RuleKind::s_alpha:
      return s_alpha(forecast, observation, rule.alpha, cfg);
    case RuleKind::s_alpha_star:
      return s_alpha_star(forecast, observation, rule.alpha, cfg);
    case RuleKind::s_tilde:
      return s_tilde(forecast, observation, rule.alpha, rule.weight, cfg);
    case RuleKind::s_tilde_star:
      return s_tilde_star(forecast, observation, rule.weight, cfg);
    case RuleKind::remark_first:
      return remark_first(forecast, observation, rule.alpha, cfg);
    case RuleKind::remark_second:
      return remark_second(forecast, observation, rule.alpha, cfg);
    case RuleKind::log_score:
      throw std::domain_error(
          "log_score applies to discrete distributions; see "
          "expected_log_score");
  }
  throw std::logic_error("unknown rule");
}

ScoreValue expected_score(const RuleSpec& rule, const Distribution& forecast,
                          const Distribution& truth, const QuadConfig& cfg) {
  // scores evaluated inside the outer integral are intermediates: they may
  // be astronomically large yet finite in deep tails, so only the outer
  // result is subjected to the user's divergence threshold.  Their noise
  // must also sit well below the outer tolerance or the outer error
  // estimate stalls on it.
  QuadConfig inner = cfg;
  inner.divergence_threshold = 1e290;
  inner.rel_tol = std::max(1e-3 * cfg.rel_tol, 1e-14);
  inner.abs_tol = std::max(1e-3 * cfg.abs_tol, 1e-15);
  auto fn = [&](double y) { return score(rule, forecast, y, inner).value; };
  return as_score(expect_under(truth, fn, cfg));
}

}  // namespace properscore
