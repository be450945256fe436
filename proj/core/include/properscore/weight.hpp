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

#ifndef PROPERSCORE_WEIGHT_HPP
#define PROPERSCORE_WEIGHT_HPP

#include <string>
#include <vector>

namespace properscore {

enum class WeightKind {
  constant,
  indicator,
  gaussian_cdf,
  gaussian_sf,
  gaussian_pdf,
};

/// Nonnegative weight function for emphasis on regions of the real line.
/// The indicator variant is 1 on [a,b] and `floor` outside; every other
/// variant is strictly positive everywhere.
class Weight {
 public:
  static Weight constant(double c = 1.0);
  static Weight indicator(double a, double b, double floor = 0.0);
  static Weight gaussian_cdf(double mu, double sigma);
  static Weight gaussian_sf(double mu, double sigma);
  static Weight gaussian_pdf(double mu, double sigma);

  double operator()(double x) const;
  bool strictly_positive() const;

  WeightKind kind() const { return kind_; }
  /// Parameters in declaration order: {c}, {a,b,floor} or {mu,sigma}.
  const std::vector<double>& parameters() const { return params_; }
  std::string describe() const;

  /// Kink locations for the quadrature engine (indicator edges).
  std::vector<double> breakpoints() const;

 private:
  Weight(WeightKind kind, std::vector<double> params);

  WeightKind kind_;
  std::vector<double> params_;
};

/// Passes `w` through unchanged when it is strictly positive everywhere,
/// the precondition of the ratio-weighted scores; throws std::domain_error
/// otherwise (e.g. an indicator with floor 0).
const Weight& require_strictly_positive(const Weight& w);

}  // namespace properscore

#endif  // PROPERSCORE_WEIGHT_HPP
