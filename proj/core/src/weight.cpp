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

#include "properscore/weight.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "normal_detail.hpp"

namespace properscore {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

}  // namespace

Weight::Weight(WeightKind kind, std::vector<double> params)
    : kind_(kind), params_(std::move(params)) {}

Weight Weight::constant(double c) {
  require_finite(c, "constant weight");
  if (!(c > 0.0)) {
    throw std::invalid_argument("constant weight must be positive");
  }
  return Weight(WeightKind::constant, {c});
}

Weight Weight::indicator(double a, double b, double floor) {
  require_finite(a, "indicator a");
  require_finite(b, "indicator b");
  require_finite(floor, "indicator floor");
  if (!(a < b)) throw std::invalid_argument("indicator requires a < b");
  if (floor < 0.0) {
    throw std::invalid_argument("indicator floor must be nonnegative");
  }
  return Weight(WeightKind::indicator, {a, b, floor});
}

Weight Weight::gaussian_cdf(double mu, double sigma) {
  require_finite(mu, "gaussian mu");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("gaussian sigma must be positive");
  }
  return Weight(WeightKind::gaussian_cdf, {mu, sigma});
}

Weight Weight::gaussian_sf(double mu, double sigma) {
  Weight w = gaussian_cdf(mu, sigma);
  return Weight(WeightKind::gaussian_sf, w.params_);
}

Weight Weight::gaussian_pdf(double mu, double sigma) {
  Weight w = gaussian_cdf(mu, sigma);
  return Weight(WeightKind::gaussian_pdf, w.params_);
}

double Weight::operator()(double x) const {
  switch (kind_) {
    case WeightKind::constant:
      return params_[0];
    case WeightKind::indicator:
      return (x >= params_[0] && x <= params_[1]) ? 1.0 : params_[2];
    case WeightKind::gaussian_cdf:
      return detail::norm_cdf((x - params_[0]) / params_[1]);
    case WeightKind::gaussian_sf:
      return detail::norm_sf((x - params_[0]) / params_[1]);
    case WeightKind::gaussian_pdf:
      return detail::norm_pdf((x - params_[0]) / params_[1]) / params_[1];
  }
  return 0.0;
}

bool Weight::strictly_positive() const {
  if (kind_ == WeightKind::indicator) return params_[2] > 0.0;
  return true;
}

std::string Weight::describe() const {
  char buf[160];
  switch (kind_) {
    case WeightKind::constant:
      std::snprintf(buf, sizeof(buf), "constant(%.17g)", params_[0]);
      break;
    case WeightKind::indicator:
      std::snprintf(buf, sizeof(buf), "indicator(%.17g, %.17g, floor=%.17g)",
                    params_[0], params_[1], params_[2]);
      break;
    case WeightKind::gaussian_cdf:
      std::snprintf(buf, sizeof(buf), "gaussian_cdf(mu=%.17g, sigma=%.17g)",
                    params_[0], params_[1]);
      break;
    case WeightKind::gaussian_sf:
      std::snprintf(buf, sizeof(buf), "gaussian_sf(mu=%.17g, sigma=%.17g)",
                    params_[0], params_[1]);
      break;
    case WeightKind::gaussian_pdf:
      std::snprintf(buf, sizeof(buf), "gaussian_pdf(mu=%.17g, sigma=%.17g)",
                    params_[0], params_[1]);
      break;
  }
  return buf;
}

std::vector<double> Weight::breakpoints() const {
  if (kind_ == WeightKind::indicator) return {params_[0], params_[1]};
  return {};
}

const Weight& require_strictly_positive(const Weight& w) {
  if (!w.strictly_positive()) {
    throw std::domain_error("weight not strictly positive");
  }
  return w;
}

}  // namespace properscore
