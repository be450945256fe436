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

#ifndef PROPERSCORE_DISTRIBUTION_HPP
#define PROPERSCORE_DISTRIBUTION_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace properscore {

enum class DistKind {
  gumbel,
  laplace,
  logistic,
  normal,
  dirac,
  empirical,
  mixture,
  odds_power,
  custom,
};

/// A probability measure on the real line, represented through its
/// distribution function with the left-continuous convention
/// P(x) = P((-inf, x)).  The convention only matters at atoms: a point
/// mass at m has cdf(m) == 0 and cdf(m + eps) == 1.
///
/// Values are immutable after construction and cheap to copy; all
/// operations are pure and safe to call concurrently.
class Distribution {
 public:
  struct Component;

  static Distribution gumbel(double loc, double scale);
  static Distribution laplace(double loc, double scale);
  static Distribution logistic(double loc, double scale);
  static Distribution normal(double mean, double sd);
  static Distribution dirac(double point);
  /// Empirical step function with jumps 1/n per sample; duplicate points
  /// merge their masses.
  static Distribution empirical(std::vector<double> points);
  /// Convex combination of the parametric/atomic variants above.
  /// Nesting is limited to depth one: components may not themselves be
  /// mixtures or transformed views.
  static Distribution mixture(std::vector<Component> components);

  /// Lazy view applying the odds-power map q/(1-q) = (p/(1-p))^exponent
  /// pointwise to the base cdf, with the boundary convention 0 -> 0 and
  /// 1 -> 1.  This is the shape of both properization maps; see rules.hpp.
  static Distribution odds_power(Distribution base, double exponent);

  /// Wraps an externally supplied distribution function.  Used to feed
  /// hand-built cdfs (e.g. heavy-tailed shapes outside the catalogue)
  /// into the scoring and quadrature machinery.  No density, quantile or
  /// sampler is available; not serializable.
  static Distribution custom(std::function<double(double)> cdf,
                             std::function<double(double)> survival,
                             bool values_in_01);

  /// P((-inf, x)); left-continuous, nondecreasing, limits 0 and 1.
  double cdf(double x) const;
  /// 1 - cdf(x) computed at full relative precision in the right tail.
  double survival(double x) const;
  /// P((-inf, x]); differs from cdf(x) only at atoms.
  double cdf_right(double x) const;

  /// Lebesgue density where the variant has one; nullopt for atomic
  /// variants and for mixtures containing an atomic component.
  std::optional<double> density(double x) const;

  /// Generalized inverse inf{x : P((-inf, x]) >= p}.  Requires 0 < p < 1.
  double quantile(double p) const;

  /// Lower median: the smallest m with P(m-) <= 1/2 <= P(m+).
  double median() const;

  /// n inverse-cdf samples, deterministic for a fixed seed.
  std::vector<double> sample(std::uint64_t seed, std::size_t n) const;

  /// True when the cdf takes values strictly inside (0,1) at every finite
  /// x (the domain of the ratio-weighted scores).
  bool in_p01() const;

  DistKind kind() const;
  /// Human-readable tag, e.g. "logistic(loc=0, scale=1)".
  std::string describe() const;

  // Hints for the quadrature engine.
  double location_hint() const;  // median
  double scale_hint() const;     // positive spread estimate
  /// Points where the cdf jumps or kinks (atoms, support edges).
  std::vector<double> breakpoints() const;

  /// True when the measure is a finite combination of point masses.
  bool purely_atomic() const;
  /// The (point, mass) list for purely atomic measures, merged and sorted.
  std::vector<std::pair<double, double>> atom_list() const;

  // Access for serialization and the odds-power composition rules.
  const Distribution* odds_power_base() const;
  double odds_power_exponent() const;
  const std::vector<Component>& mixture_components() const;
  /// Parameter list in declaration order (loc/scale, mean/sd, point, ...).
  std::vector<double> parameters() const;
  const std::vector<double>& empirical_points() const;

 private:
  struct Gumbel {
    double loc, scale;
  };
  struct Laplace {
    double loc, scale;
  };
  struct Logistic {
    double loc, scale;
  };
  struct Normal {
    double mean, sd;
  };
  struct Dirac {
    double point;
  };
  struct Empirical {
    std::vector<double> raw;     // sorted sample, duplicates kept
    std::vector<double> points;  // strictly increasing
    std::vector<double> masses;  // positive, sums to 1
    std::vector<double> cum;     // inclusive prefix sums
  };
  struct Mixture {
    std::vector<Component> components;
  };
  struct OddsPower {
    std::shared_ptr<const Distribution> base;
    double exponent;
  };
  struct Custom {
    std::function<double(double)> cdf;
    std::function<double(double)> survival;
    bool in01;
  };

  using Variant = std::variant<Gumbel, Laplace, Logistic, Normal, Dirac,
                               Empirical, Mixture, OddsPower, Custom>;

  explicit Distribution(Variant v) : v_(std::move(v)) {}

  Variant v_;
};

struct Distribution::Component {
  double weight;
  Distribution dist;
};

/// A finitely supported distribution given by (point, mass) pairs with
/// distinct points, strictly positive masses summing to one.
class DiscreteDistribution {
 public:
  DiscreteDistribution(std::vector<double> points, std::vector<double> masses);

  const std::vector<double>& points() const { return points_; }
  const std::vector<double>& masses() const { return masses_; }
  std::size_t size() const { return points_.size(); }

  /// Mass at x, or 0 when x is not a support point.
  double mass_at(double x) const;

 private:
  std::vector<double> points_;
  std::vector<double> masses_;
};

}  // namespace properscore

#endif  // PROPERSCORE_DISTRIBUTION_HPP
