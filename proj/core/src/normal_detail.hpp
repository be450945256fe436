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

#ifndef PROPERSCORE_NORMAL_DETAIL_HPP
#define PROPERSCORE_NORMAL_DETAIL_HPP

#include <cmath>

namespace properscore::detail {

inline constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;
inline constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343819;

inline double norm_pdf(double z) {
  return kInvSqrt2Pi * std::exp(-0.5 * z * z);
}

// Phi(z); erfc keeps full relative precision in the left tail.
inline double norm_cdf(double z) { return 0.5 * std::erfc(-z * kInvSqrt2); }

// 1 - Phi(z) at full relative precision in the right tail.
inline double norm_sf(double z) { return 0.5 * std::erfc(z * kInvSqrt2); }

// Inverse of Phi.  Acklam's rational approximation (|rel err| < 1.2e-9)
// polished by two Newton steps against erfc, which brings the result to
// machine precision for p away from the extreme denormal range.
inline double norm_quantile(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};

  const double plow = 0.02425;
  double x;
  if (p < plow) {
    double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    double q = p - 0.5;
    double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  for (int i = 0; i < 2; ++i) {
    double e = norm_cdf(x) - p;
    double g = norm_pdf(x);
    if (g <= 0.0) break;
    x -= e / g;
  }
  return x;
}

}  // namespace properscore::detail

#endif  // PROPERSCORE_NORMAL_DETAIL_HPP
