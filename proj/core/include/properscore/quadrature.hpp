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

#ifndef PROPERSCORE_QUADRATURE_HPP
#define PROPERSCORE_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>

#include "properscore/distribution.hpp"

namespace properscore {

struct QuadConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  /// Expectations integrate the density over
  /// [quantile(tc), quantile(1-tc)] and treat the rest via transformed
  /// half-line tails.
  double tail_cutoff_probability = 1e-14;
  /// Magnitude above which an integral is reported as +infinity.  Scores
  /// past this point are indistinguishable from divergent for every use
  /// the library has for them.
  double divergence_threshold = 1e12;

  void validate() const;
};

/// Outcome of one quadrature run.  Divergent results carry value +inf;
/// converged results satisfy
/// error_estimate <= max(rel_tol*|value|, abs_tol).
struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  bool divergent = false;
  int evaluations = 0;
  int subdivisions = 0;

  IntegralResult& operator+=(const IntegralResult& other);
};

/// Thrown when the integrand produces NaN at an evaluation node.
class evaluation_error : public std::runtime_error {
 public:
  evaluation_error(const std::string& what, double location)
      : std::runtime_error(what), location_(location) {}
  double location() const { return location_; }

 private:
  double location_;
};

using RealFn = std::function<double(double)>;
struct McEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
};

/// Integral of f over the whole real line.  The line is compactified by
/// x = center + scale*t/(1-t^2) over t in (-1,1) and refined adaptively
/// with a 15-point Gauss-Kronrod rule, so tails of any decay rate are
/// resolved without a truncation choice.  `breakpoints` pre-split the
/// domain at known kinks or jumps of f.
///
/// Divergence is data, not an error: integrands that blow up at an
/// evaluation node, totals past cfg.divergence_threshold, and tails whose
/// dyadic contributions refuse to decay all yield value = +inf with the
/// divergent flag set.  NaN integrand values throw evaluation_error.
IntegralResult integrate_real_line(const RealFn& f, const QuadConfig& cfg = {},
                                   std::span<const double> breakpoints = {},
                                   double center = 0.0, double scale = 1.0);

/// Integral of f over (a, b); either endpoint may be infinite, in which
/// case the corresponding tail is folded to (0,1] by x = a + s(1-t)/t.
IntegralResult integrate_interval(const RealFn& f, double a, double b,
                                  const QuadConfig& cfg = {},
                                  std::span<const double> breakpoints = {},
                                  double scale = 1.0);

/// Expectation of f under d.  Atomic measures are summed exactly;
/// absolutely continuous ones integrate f times the density over the
/// probability core plus transformed tails; mixtures combine linearly.
/// `breakpoints` mark known kinks of f.
IntegralResult expect_under(const Distribution& d, const RealFn& f,
                            const QuadConfig& cfg = {},
                            std::span<const double> breakpoints = {});

/// Monte Carlo estimate of E[f] from n inverse-cdf samples; deterministic
/// per seed.  Serves as the statistically independent check on
/// expect_under.
McEstimate mc_expect(const Distribution& d, const RealFn& f, std::size_t n,
                     std::uint64_t seed);

}  // namespace properscore

#endif  // PROPERSCORE_QUADRATURE_HPP
