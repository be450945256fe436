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

#include "properscore/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>

#include "normal_detail.hpp"

namespace properscore {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

void require_positive(double v, const char* what) {
  require_finite(v, what);
  if (!(v > 0.0)) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
}

// q with odds(q) = odds(p)^beta, extended by 0 -> 0 and 1 -> 1.  The pair
// (cdf, survival) is carried through so both ends keep full relative
// precision.
struct CdfPair {
  double cdf;
  double survival;
};

CdfPair odds_power_map(double p, double s, double beta) {
  if (p <= 0.0) return {0.0, 1.0};
  if (s <= 0.0) return {1.0, 0.0};
  const double log_ratio = beta * (std::log(s) - std::log(p));
  if (log_ratio > 700.0) return {std::exp(-log_ratio), 1.0};
  if (log_ratio < -700.0) return {1.0, std::exp(log_ratio)};
  const double r = std::exp(log_ratio);
  return {1.0 / (1.0 + r), r / (1.0 + r)};
}

std::string param_str(const char* name, double a, double b,
                      const char* na = "loc", const char* nb = "scale") {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s(%s=%.17g, %s=%.17g)", name, na, a, nb,
                b);
  return buf;
}

}  // namespace

Distribution Distribution::gumbel(double loc, double scale) {
  require_finite(loc, "gumbel loc");
  require_positive(scale, "gumbel scale");
  return Distribution(Gumbel{loc, scale});
}

Distribution Distribution::laplace(double loc, double scale) {
  require_finite(loc, "laplace loc");
  require_positive(scale, "laplace scale");
  return Distribution(Laplace{loc, scale});
}

Distribution Distribution::logistic(double loc, double scale) {
  require_finite(loc, "logistic loc");
  require_positive(scale, "logistic scale");
  return Distribution(Logistic{loc, scale});
}

Distribution Distribution::normal(double mean, double sd) {
  require_finite(mean, "normal mean");
  require_positive(sd, "normal sd");
  return Distribution(Normal{mean, sd});
}

Distribution Distribution::dirac(double point) {
  require_finite(point, "dirac point");
  return Distribution(Dirac{point});
}

Distribution Distribution::empirical(std::vector<double> points) {
  if (points.empty()) {
    throw std::invalid_argument("empirical distribution needs points");
  }
  for (double x : points) require_finite(x, "empirical point");
  std::sort(points.begin(), points.end());
  Empirical e;
  e.raw = points;
  const double unit = 1.0 / static_cast<double>(points.size());
  for (std::size_t i = 0; i < points.size();) {
    std::size_t j = i;
    while (j < points.size() && points[j] == points[i]) ++j;
    e.points.push_back(points[i]);
    e.masses.push_back(unit * static_cast<double>(j - i));
    i = j;
  }
  double cum = 0.0;
  for (double m : e.masses) {
    cum += m;
    e.cum.push_back(cum);
  }
  e.cum.back() = 1.0;
  return Distribution(std::move(e));
}

Distribution Distribution::mixture(std::vector<Component> components) {
  if (components.empty()) {
    throw std::invalid_argument("mixture needs components");
  }
  double total = 0.0;
  std::vector<Component> kept;
  for (auto& c : components) {
    require_finite(c.weight, "mixture weight");
    if (c.weight < 0.0) {
      throw std::invalid_argument("mixture weight must be nonnegative");
    }
    switch (c.dist.kind()) {
      case DistKind::mixture:
      case DistKind::odds_power:
      case DistKind::custom:
        throw std::invalid_argument(
            "mixture components must be parametric, dirac or empirical");
      default:
        break;
    }
    total += c.weight;
    if (c.weight > 0.0) kept.push_back(std::move(c));
  }
  if (kept.empty() || std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("mixture weights must sum to 1");
  }
  for (auto& c : kept) c.weight /= total;
  return Distribution(Mixture{std::move(kept)});
}

Distribution Distribution::odds_power(Distribution base, double exponent) {
  require_positive(exponent, "odds-power exponent");
  return Distribution(
      OddsPower{std::make_shared<Distribution>(std::move(base)), exponent});
}

Distribution Distribution::custom(std::function<double(double)> cdf,
                                  std::function<double(double)> survival,
                                  bool values_in_01) {
  if (!cdf || !survival) {
    throw std::invalid_argument("custom distribution needs cdf and survival");
  }
  return Distribution(Custom{std::move(cdf), std::move(survival), values_in_01});
}

double Distribution::cdf(double x) const {
  return std::visit(
      [&](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Gumbel>) {
          return std::exp(-std::exp(-(x - d.loc) / d.scale));
        } else if constexpr (std::is_same_v<T, Laplace>) {
          const double z = (x - d.loc) / d.scale;
          return z <= 0.0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
        } else if constexpr (std::is_same_v<T, Logistic>) {
          const double z = (x - d.loc) / d.scale;
          return 1.0 / (1.0 + std::exp(-z));
        } else if constexpr (std::is_same_v<T, Normal>) {
          return detail::norm_cdf((x - d.mean) / d.sd);
        } else if constexpr (std::is_same_v<T, Dirac>) {
          return x > d.point ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, Empirical>) {
          auto it =
              std::lower_bound(d.points.begin(), d.points.end(), x);
          const std::size_t idx = it - d.points.begin();
          return idx == 0 ? 0.0 : d.cum[idx - 1];
        } else if constexpr (std::is_same_v<T, Mixture>) {
          double acc = 0.0;
          for (const auto& c : d.components) acc += c.weight * c.dist.cdf(x);
          return acc;
        } else if constexpr (std::is_same_v<T, OddsPower>) {
          return odds_power_map(d.base->cdf(x), d.base->survival(x),
                                d.exponent)
              .cdf;
        } else {
          return d.cdf(x);
        }
      },
      v_);
}

double Distribution::survival(double x) const {
  return std::visit(
      [&](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Gumbel>) {
          return -std::expm1(-std::exp(-(x - d.loc) / d.scale));
        } else if constexpr (std::is_same_v<T, Laplace>) {
          const double z = (x - d.loc) / d.scale;
          return z <= 0.0 ? 1.0 - 0.5 * std::exp(z) : 0.5 * std::exp(-z);
        } else if constexpr (std::is_same_v<T, Logistic>) {
          const double z = (x - d.loc) / d.scale;
          return 1.0 / (1.0 + std::exp(z));
        } else if constexpr (std::is_same_v<T, Normal>) {
          return detail::norm_sf((x - d.mean) / d.sd);
        } else if constexpr (std::is_same_v<T, Dirac>) {
          return x > d.point ? 0.0 : 1.0;
        } else if constexpr (std::is_same_v<T, Empirical>) {
          auto it =
              std::lower_bound(d.points.begin(), d.points.end(), x);
          const std::size_t idx = it - d.points.begin();
          return idx == 0 ? 1.0 : 1.0 - d.cum[idx - 1];
        } else if constexpr (std::is_same_v<T, Mixture>) {
          double acc = 0.0;
          for (const auto& c : d.components) {
            acc += c.weight * c.dist.survival(x);
          }
          return acc;
        } else if constexpr (std::is_same_v<T, OddsPower>) {
          return odds_power_map(d.base->cdf(x), d.base->survival(x),
                                d.exponent)
              .survival;
        } else {
          return d.survival(x);
        }
      },
      v_);
}

double Distribution::cdf_right(double x) const {
  return std::visit(
      [&](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Dirac>) {
          return x >= d.point ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, Empirical>) {
          auto it = std::upper_bound(d.points.begin(), d.points.end(), x);
          const std::size_t idx = it - d.points.begin();
          return idx == 0 ? 0.0 : d.cum[idx - 1];
        } else if constexpr (std::is_same_v<T, Mixture>) {
          double acc = 0.0;
          for (const auto& c : d.components) {
            acc += c.weight * c.dist.cdf_right(x);
          }
          return acc;
        } else if constexpr (std::is_same_v<T, OddsPower>) {
          const double p = d.base->cdf_right(x);
          return odds_power_map(p, 1.0 - p, d.exponent).cdf;
        } else {
          return cdf(x);
        }
      },
      v_);
}

std::optional<double> Distribution::density(double x) const {
  return std::visit(
      [&](const auto& d) -> std::optional<double> {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Gumbel>) {
          const double z = (x - d.loc) / d.scale;
          return std::exp(-z - std::exp(-z)) / d.scale;
        } else if constexpr (std::is_same_v<T, Laplace>) {
          const double z = (x - d.loc) / d.scale;
          return 0.5 * std::exp(-std::abs(z)) / d.scale;
        } else if constexpr (std::is_same_v<T, Logistic>) {
          const double z = std::abs((x - d.loc) / d.scale);
          const double e = std::exp(-z);
          return e / ((1.0 + e) * (1.0 + e) * d.scale);
        } else if constexpr (std::is_same_v<T, Normal>) {
          return detail::norm_pdf((x - d.mean) / d.sd) / d.sd;
        } else if constexpr (std::is_same_v<T, Mixture>) {
          double acc = 0.0;
          for (const auto& c : d.components) {
            auto f = c.dist.density(x);
            if (!f) return std::nullopt;
            acc += c.weight * *f;
          }
          return acc;
        } else if constexpr (std::is_same_v<T, OddsPower>) {
          auto f = d.base->density(x);
          if (!f) return std::nullopt;
          const double p = d.base->cdf(x);
          const double s = d.base->survival(x);
          if (p <= 0.0 || s <= 0.0) return 0.0;
          const auto q = odds_power_map(p, s, d.exponent);
          // chain rule: dq/dp = beta q (1-q) / (p (1-p))
          return d.exponent * q.cdf * q.survival / (p * s) * (*f);
        } else {
          return std::nullopt;
        }
      },
      v_);
}

namespace {

// Bisection on cdf_right for variants without a closed-form inverse.
double bisect_quantile(const Distribution& d, double p) {
  double lo = -1.0, hi = 1.0;
  while (std::isfinite(lo) && d.cdf_right(lo) >= p) lo *= 2.0;
  while (std::isfinite(hi) && d.cdf_right(hi) < p) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (d.cdf_right(mid) >= p) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (hi - lo <= 1e-14 * std::max(1.0, std::abs(hi))) break;
  }
  return hi;
}

}  // namespace

double Distribution::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("quantile requires p in (0,1)");
  }
  return std::visit(
      [&](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Gumbel>) {
          return d.loc - d.scale * std::log(-std::log(p));
        } else if constexpr (std::is_same_v<T, Laplace>) {
          return p < 0.5 ? d.loc + d.scale * std::log(2.0 * p)
                         : d.loc - d.scale * std::log(2.0 * (1.0 - p));
        } else if constexpr (std::is_same_v<T, Logistic>) {
          return d.loc + d.scale * (std::log(p) - std::log1p(-p));
        } else if constexpr (std::is_same_v<T, Normal>) {
          return d.mean + d.sd * detail::norm_quantile(p);
        } else if constexpr (std::is_same_v<T, Dirac>) {
          return d.point;
        } else if constexpr (std::is_same_v<T, Empirical>) {
          auto it = std::lower_bound(d.cum.begin(), d.cum.end(),
                                     p - 1e-15);
          return d.points[std::min<std::size_t>(it - d.cum.begin(),
                                                d.points.size() - 1)];
        } else if constexpr (std::is_same_v<T, OddsPower>) {
          // invert the pointwise map first; its inverse is the same map
          // with the reciprocal exponent
          const double u =
              odds_power_map(p, 1.0 - p, 1.0 / d.exponent).cdf;
          return d.base->quantile(std::clamp(u, 1e-300, 1.0 - 1e-16));
        } else {
          return bisect_quantile(*this, p);
        }
      },
      v_);
}

double Distribution::median() const { return quantile(0.5); }

std::vector<double> Distribution::sample(std::uint64_t seed,
                                         std::size_t n) const {
  if (n < 1) throw std::invalid_argument("sample size must be >= 1");
  std::mt19937_64 eng(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // uniform in (0,1), bit-reproducible for a fixed seed
    const double u =
        (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
    out.push_back(quantile(u));
  }
  return out;
}

bool Distribution::in_p01() const {
  return std::visit(
      [&](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Gumbel> ||
                      std::is_same_v<T, Laplace> ||
                      std::is_same_v<T, Logistic> ||
                      std::is_same_v<T, Normal>) {
          return true;
        } else if constexpr (std::is_same_v<T, Dirac> ||
                             std::is_same_v<T, Empirical>) {
          return false;
        } else if constexpr (std::is_same_v<T, Mixture>) {
          // one full-support component keeps the whole cdf inside (0,1)
          for (const auto& c : d.components) {
            if (c.dist.in_p01()) return true;
          }
          return false;
        } else if constexpr (std::is_same_v<T, OddsPower>) {
          return d.base->in_p01();
        } else {
          return d.in01;
        }
      },
      v_);
}

DistKind Distribution::kind() const {
  return std::visit(
      [](const auto& d) -> DistKind {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Gumbel>) return DistKind::gumbel;
        if constexpr (std::is_same_v<T, Laplace>) return DistKind::laplace;
        if constexpr (std::is_same_v<T, Logistic>) return DistKind::logistic;
        if constexpr (std::is_same_v<T, Normal>) return DistKind::normal;
        if constexpr (std::is_same_v<T, Dirac>) return DistKind::dirac;
        if constexpr (std::is_same_v<T, Empirical>) return DistKind::empirical;
        if constexpr (std::is_same_v<T, Mixture>) return DistKind::mixture;
        if constexpr (std::is_same_v<T, OddsPower>)
          return DistKind::odds_power;
        return DistKind::custom;
      },
      v_);
}

std::string Distribution::describe() const {
  return std::visit(
      [&](const auto& d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Gumbel>) {
          return param_str("gumbel", d.loc, d.scale);
        } else if constexpr (std::is_same_v<T, Laplace>) {
          return param_str("laplace", d.loc, d.scale);
        } else if constexpr (std::is_same_v<T, Logistic>) {
          return param_str("logistic", d.loc, d.scale);
        } else if constexpr (std::is_same_v<T, Normal>) {
          return param_str("normal", d.mean, d.sd, "mean", "sd");
        } else if constexpr (std::is_same_v<T, Dirac>) {
          char buf[64];
          std::snprintf(buf, sizeof(buf), "dirac(%.17g)", d.point);
          return buf;
        } else if constexpr (std::is_same_v<T, Empirical>) {
          char buf[64];
          std::snprintf(buf, sizeof(buf), "empirical(n=%zu)",
                        d.points.size());
          return buf;
        } else if constexpr (std::is_same_v<T, Mixture>) {
          std::string s = "mixture(";
          for (std::size_t i = 0; i < d.components.size(); ++i) {
            if (i) s += ", ";
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6g*", d.components[i].weight);
            s += buf;
            s += d.components[i].dist.describe();
          }
          return s + ")";
        } else if constexpr (std::is_same_v<T, OddsPower>) {
          char buf[48];
          std::snprintf(buf, sizeof(buf), "odds_power(%.17g, ", d.exponent);
          return std::string(buf) + d.base->describe() + ")";
        } else {
          return "custom";
        }
      },
      v_);
}

double Distribution::location_hint() const {
  if (kind() == DistKind::custom) {
    return bisect_quantile(*this, 0.5);
  }
  return median();
}

double Distribution::scale_hint() const {
  return std::visit(
      [&](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Gumbel> ||
                      std::is_same_v<T, Laplace> ||
                      std::is_same_v<T, Logistic>) {
          return d.scale;
        } else if constexpr (std::is_same_v<T, Normal>) {
          return d.sd;
        } else if constexpr (std::is_same_v<T, Dirac>) {
          return 1.0;
        } else if constexpr (std::is_same_v<T, Empirical>) {
          return std::max(0.5 * (d.points.back() - d.points.front()), 1e-3);
        } else if constexpr (std::is_same_v<T, OddsPower>) {
          return d.base->scale_hint();
        } else if constexpr (std::is_same_v<T, Mixture>) {
          const double center = location_hint();
          double span = 0.0;
          for (const auto& c : d.components) {
            span = std::max(span, c.dist.scale_hint() +
                                      std::abs(c.dist.location_hint() -
                                               center));
          }
          return std::max(span, 1e-3);
        } else {
          const double lo = bisect_quantile(*this, 0.1);
          const double hi = bisect_quantile(*this, 0.9);
          return std::max(0.5 * (hi - lo), 1e-3);
        }
      },
      v_);
}

std::vector<double> Distribution::breakpoints() const {
  return std::visit(
      [&](const auto& d) -> std::vector<double> {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Gumbel> ||
                      std::is_same_v<T, Laplace> ||
                      std::is_same_v<T, Logistic>) {
          return {d.loc};
        } else if constexpr (std::is_same_v<T, Normal>) {
          return {d.mean};
        } else if constexpr (std::is_same_v<T, Dirac>) {
          return {d.point};
        } else if constexpr (std::is_same_v<T, Empirical>) {
          return d.points;
        } else if constexpr (std::is_same_v<T, Mixture>) {
          std::vector<double> all;
          for (const auto& c : d.components) {
            auto b = c.dist.breakpoints();
            all.insert(all.end(), b.begin(), b.end());
          }
          std::sort(all.begin(), all.end());
          all.erase(std::unique(all.begin(), all.end()), all.end());
          return all;
        } else if constexpr (std::is_same_v<T, OddsPower>) {
          return d.base->breakpoints();
        } else {
          return {};
        }
      },
      v_);
}

bool Distribution::purely_atomic() const {
  return std::visit(
      [](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Dirac> ||
                      std::is_same_v<T, Empirical>) {
          return true;
        } else if constexpr (std::is_same_v<T, Mixture>) {
          for (const auto& c : d.components) {
            if (!c.dist.purely_atomic()) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, OddsPower>) {
          return d.base->purely_atomic();
        } else {
          return false;
        }
      },
      v_);
}

std::vector<std::pair<double, double>> Distribution::atom_list() const {
  if (!purely_atomic()) {
    throw std::domain_error("atom_list: distribution is not purely atomic");
  }
  return std::visit(
      [&](const auto& d) -> std::vector<std::pair<double, double>> {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Dirac>) {
          return {{d.point, 1.0}};
        } else if constexpr (std::is_same_v<T, Empirical>) {
          std::vector<std::pair<double, double>> out;
          for (std::size_t i = 0; i < d.points.size(); ++i) {
            out.emplace_back(d.points[i], d.masses[i]);
          }
          return out;
        } else if constexpr (std::is_same_v<T, Mixture>) {
          std::vector<std::pair<double, double>> all;
          for (const auto& c : d.components) {
            for (auto [x, m] : c.dist.atom_list()) {
              all.emplace_back(x, c.weight * m);
            }
          }
          std::sort(all.begin(), all.end());
          std::vector<std::pair<double, double>> merged;
          for (auto [x, m] : all) {
            if (!merged.empty() && merged.back().first == x) {
              merged.back().second += m;
            } else {
              merged.emplace_back(x, m);
            }
          }
          return merged;
        } else if constexpr (std::is_same_v<T, OddsPower>) {
          // the view jumps exactly where the base jumps; jump heights map
          // through the pointwise transform
          std::vector<std::pair<double, double>> out;
          for (auto [x, m] : d.base->atom_list()) {
            const double lo = d.base->cdf(x);
            const double hi = d.base->cdf_right(x);
            const double a =
                odds_power_map(lo, 1.0 - lo, d.exponent).cdf;
            const double b =
                odds_power_map(hi, 1.0 - hi, d.exponent).cdf;
            out.emplace_back(x, b - a);
            (void)m;
          }
          return out;
        } else {
          return {};
        }
      },
      v_);
}

const Distribution* Distribution::odds_power_base() const {
  if (const auto* p = std::get_if<OddsPower>(&v_)) return p->base.get();
  return nullptr;
}

double Distribution::odds_power_exponent() const {
  return std::get<OddsPower>(v_).exponent;
}

const std::vector<Distribution::Component>& Distribution::mixture_components()
    const {
  return std::get<Mixture>(v_).components;
}

std::vector<double> Distribution::parameters() const {
  return std::visit(
      [](const auto& d) -> std::vector<double> {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Gumbel> ||
                      std::is_same_v<T, Laplace> ||
                      std::is_same_v<T, Logistic>) {
          return {d.loc, d.scale};
        } else if constexpr (std::is_same_v<T, Normal>) {
          return {d.mean, d.sd};
        } else if constexpr (std::is_same_v<T, Dirac>) {
          return {d.point};
        } else {
          return {};
        }
      },
      v_);
}

const std::vector<double>& Distribution::empirical_points() const {
  return std::get<Empirical>(v_).raw;
}

DiscreteDistribution::DiscreteDistribution(std::vector<double> points,
                                           std::vector<double> masses) {
  if (points.empty() || points.size() != masses.size()) {
    throw std::invalid_argument(
        "discrete distribution needs matching nonempty points and masses");
  }
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  double total = 0.0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const double x = points[order[i]];
    const double m = masses[order[i]];
    require_finite(x, "discrete point");
    if (!(m > 0.0) || !std::isfinite(m)) {
      throw std::invalid_argument("discrete masses must be strictly positive");
    }
    if (!points_.empty() && points_.back() == x) {
      throw std::invalid_argument("discrete points must be distinct");
    }
    points_.push_back(x);
    masses_.push_back(m);
    total += m;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("discrete masses must sum to 1");
  }
}

double DiscreteDistribution::mass_at(double x) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), x);
  if (it != points_.end() && *it == x) {
    return masses_[it - points_.begin()];
  }
  return 0.0;
}

}  // namespace properscore
