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

#include "properscore/propriety.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace properscore {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Distribution make_member(const std::string& family, double loc, double scale) {
  if (family == "gumbel") return Distribution::gumbel(loc, scale);
  if (family == "laplace") return Distribution::laplace(loc, scale);
  if (family == "logistic") return Distribution::logistic(loc, scale);
  if (family == "normal") return Distribution::normal(loc, scale);
  throw std::invalid_argument("unknown grid family: " + family);
}

void run_indexed(int n, int threads, const std::function<void(int)>& body) {
  threads = std::max(1, threads);
  if (threads == 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int workers = std::min<int>(threads, n);
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

DistGrid DistGrid::lattice(std::span<const std::string> families,
                           std::span<const double> locs,
                           std::span<const double> scales) {
  DistGrid g;
  g.description = "lattice";
  for (const auto& fam : families) {
    for (double loc : locs) {
      for (double scale : scales) {
        g.members.push_back(make_member(fam, loc, scale));
      }
    }
  }
  if (g.members.empty()) {
    throw std::invalid_argument("empty distribution grid");
  }
  return g;
}

std::vector<std::vector<ScoreValue>> score_matrix(const RuleSpec& rule,
                                                  const DistGrid& grid,
                                                  const QuadConfig& cfg,
                                                  int threads) {
  const int n = static_cast<int>(grid.members.size());
  if (n == 0) throw std::invalid_argument("empty distribution grid");
  std::vector<std::vector<ScoreValue>> m(n, std::vector<ScoreValue>(n));
  run_indexed(n * n, threads, [&](int idx) {
    const int i = idx / n;
    const int j = idx % n;
    m[i][j] = expected_score(rule, grid.members[i], grid.members[j], cfg);
  });
  return m;
}

PropReport check_proper(const RuleSpec& rule, const DistGrid& grid,
                        const QuadConfig& cfg, double tolerance, int threads) {
  if (!(tolerance > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  PropReport rep;
  rep.rule = rule;
  rep.grid_description = grid.description;
  for (const auto& d : grid.members) rep.member_names.push_back(d.describe());
  rep.tolerance = tolerance;
  rep.matrix = score_matrix(rule, grid, cfg, threads);

  const int n = static_cast<int>(grid.members.size());
  rep.worst_margin = kInf;
  for (int j = 0; j < n; ++j) {
    const double diag = rep.matrix[j][j].value;
    if (std::isinf(diag)) {
      // S(Q,Q) = inf <= S(P,Q) holds vacuously; nothing to learn here
      rep.inconclusive_columns.push_back(j);
      continue;
    }
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      const double margin = rep.matrix[i][j].value - diag;
      if (margin < rep.worst_margin) rep.worst_margin = margin;
      if (margin < -tolerance && !rep.violating_pair) {
        rep.violating_pair = std::make_pair(i, j);
      }
    }
  }
  if (n == 1) rep.worst_margin = 0.0;
  rep.proper = !rep.violating_pair.has_value();
  return rep;
}

std::optional<Violation> find_violation(const Distribution& truth, Alpha alpha,
                                        const Weight& w,
                                        const QuadConfig& cfg) {
  Distribution challenger = properize_tilde(truth, alpha);
  const ScoreValue honest =
      expected_s_tilde_closed(truth, truth, alpha, w, cfg);
  const ScoreValue challenged =
      expected_s_tilde_closed(challenger, truth, alpha, w, cfg);
  // without a finite challenger score no positive margin can be certified;
  // a divergent honest score against a finite challenger is the strongest
  // possible certificate (margin +inf)
  if (!challenged.finite()) {
    return std::nullopt;
  }
  return Violation{std::move(challenger), honest.value - challenged.value};
}

StrictnessVerdict strictness_check(const Distribution& forecast,
                                   const Distribution& truth,
                                   const QuadConfig& cfg, double tolerance,
                                   const Weight& w) {
  if (!forecast.in_p01() || !truth.in_p01() ||
      !forecast.density(forecast.location_hint()).has_value() ||
      !truth.density(truth.location_hint()).has_value()) {
    throw std::domain_error(
        "strictness_check needs continuous distributions in P_(0,1)");
  }
  // subclass membership: both cdfs must have finite self-scores
  const ScoreValue self = entropy_s_tilde(truth, w, cfg);
  const ScoreValue forecast_entropy = entropy_s_tilde(forecast, w, cfg);
  if (!self.finite() || !forecast_entropy.finite()) {
    throw std::domain_error(
        "strictness_check needs finite self-scores (subclass condition)");
  }
  // expected properized score via the Tonelli reduction; at exponent 1/2
  // the closed integrand is exactly the properized rule's average.  A
  // divergent cross-expectation separates the pair with an infinite gap.
  const ScoreValue cross =
      expected_s_tilde_closed(forecast, truth, 0.5, w, cfg);

  StrictnessVerdict v;
  v.gap = cross.value - self.value;
  v.scores_equal = std::abs(v.gap) <= tolerance;

  const double lo = std::min(forecast.quantile(1e-6), truth.quantile(1e-6));
  const double hi =
      std::max(forecast.quantile(1.0 - 1e-6), truth.quantile(1.0 - 1e-6));
  const int kGridPoints = 2001;
  for (int i = 0; i < kGridPoints; ++i) {
    const double x = lo + (hi - lo) * i / (kGridPoints - 1);
    v.max_cdf_deviation = std::max(
        v.max_cdf_deviation, std::abs(forecast.cdf(x) - truth.cdf(x)));
  }
  // a zero expected-score gap may only happen for identical cdfs; the cdf
  // tolerance follows from the score tolerance through the quadratic
  // behaviour of the amgm gap near p == q
  const double cdf_tolerance = 1e-2;
  v.identical = v.max_cdf_deviation <= cdf_tolerance;
  v.consistent = !v.scores_equal || v.identical;
  return v;
}

double verify_bayes_act(const Distribution& truth, Alpha alpha,
                        std::span<const double> x_grid,
                        std::size_t q_grid_points) {
  if (!truth.in_p01()) {
    throw std::domain_error("distribution not in P_(0,1)");
  }
  if (x_grid.empty() || q_grid_points < 3) {
    throw std::invalid_argument("verify_bayes_act needs nonempty grids");
  }
  double worst = 0.0;
  for (double x : x_grid) {
    const double p = truth.cdf(x);
    double best_q = 0.0, best_val = kInf;
    for (std::size_t k = 1; k + 1 <= q_grid_points; ++k) {
      const double q = static_cast<double>(k) /
                       static_cast<double>(q_grid_points);
      const double val = g_eval(q, p, alpha, 1.0);
      if (val < best_val) {
        best_val = val;
        best_q = q;
      }
    }
    worst = std::max(worst, std::abs(best_q - argmin_g(p, alpha)));
  }
  return worst;
}

double amgm_gap(double p, double q) {
  if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0)) {
    throw std::domain_error("amgm_gap needs p, q in (0,1)");
  }
  // 1/2 (rq + (1-q)/r) - sqrt(q(1-q)) with r = sqrt((1-p)/p); the two
  // terms share the geometric mean sqrt(q(1-q)), so the gap is exactly
  // half the squared difference of their roots, which keeps it
  // nonnegative in floating point as well
  const double r = std::sqrt((1.0 - p) / p);
  const double d = std::sqrt(r * q) - std::sqrt((1.0 - q) / r);
  return 0.5 * d * d;
}

std::vector<std::vector<double>> log_score_matrix(
    const std::vector<DiscreteDistribution>& grid) {
  const std::size_t n = grid.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = expected_log_score(grid[i], grid[j]);
    }
  }
  return m;
}

}  // namespace properscore
