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

#include "properscore/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <vector>

namespace properscore {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkOutcome {
  double integral = 0.0;
  double error = 0.0;
  double resabs = 0.0;
  int inf_sign = 0;  // +-1 when an evaluation returned +-infinity
};

template <typename F>
GkOutcome gk15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double fv1[7], fv2[7];
  const double fc = f(center);
  GkOutcome out;
  auto note = [&](double v) {
    if (std::isinf(v)) out.inf_sign = v > 0 ? 1 : -1;
  };
  note(fc);

  double resg = kWg[3] * fc;
  double resk = kWgk[7] * fc;
  out.resabs = std::abs(resk);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    note(fv1[j]);
    note(fv2[j]);
    const double sum = fv1[j] + fv2[j];
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
    resk += kWgk[j] * sum;
    out.resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }
  out.integral = resk * half;
  out.resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (out.resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * out.resabs, err);
  }
  out.error = err;
  return out;
}

struct Segment {
  double a, b;
  double value, error, resabs;
  std::uint64_t id;
};

struct SegmentWorse {
  bool operator()(const Segment& x, const Segment& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.id > y.id;  // ties: older segment first
  }
};

// Dyadic probe for non-integrable behaviour at a point: nested Kronrod
// estimates over intervals shrinking geometrically into the anchor.
// Integrable integrands decay across the levels; a plateau (or growth)
// means the refinement can never converge there.  The probe window starts
// at a healthy width (the anchor's segment may already be microscopic)
// and never leaves [lo, hi].
template <typename F>
bool endpoint_plateau(const F& f, double anchor, bool shrink_from_right,
                      double seg_width, double lo, double hi,
                      double significance) {
  const double room = shrink_from_right ? hi - anchor : anchor - lo;
  const double width =
      std::min(std::max(seg_width, 1e-6 * (hi - lo)), room);
  const double resolution = 1e3 * kEps * std::max(std::abs(anchor), 1.0);
  double v0 = -1.0, vlast = -1.0;
  int levels = 0;
  for (int j = 0; j <= 12; ++j) {
    const double w = std::ldexp(width, -j);
    if (w < resolution) break;
    const auto gk = shrink_from_right ? gk15(f, anchor, anchor + w)
                                      : gk15(f, anchor - w, anchor);
    if (gk.inf_sign != 0) return true;
    const double v = std::abs(gk.integral);
    if (j == 0) v0 = v;
    vlast = v;
    ++levels;
  }
  if (levels < 6 || v0 < significance) return false;
  return vlast >= 0.3 * v0;
}

// Adaptive refinement over an initial partition of [cuts.front(),
// cuts.back()] in the (possibly transformed) integration variable.
template <typename F>
IntegralResult run_adaptive(const F& f, const std::vector<double>& cuts,
                            const QuadConfig& cfg) {
  IntegralResult res;
  std::priority_queue<Segment, std::vector<Segment>, SegmentWorse> active;
  std::vector<Segment> frozen;
  std::uint64_t next_id = 0;

  const double domain = cuts.back() - cuts.front();
  const double min_width = std::ldexp(domain, -40);

  double total = 0.0, toterr = 0.0;
  int inf_sign = 0;

  auto push = [&](double a, double b) {
    const auto gk = gk15(f, a, b);
    res.evaluations += 15;
    if (gk.inf_sign != 0) {
      inf_sign = gk.inf_sign;
      return;
    }
    total += gk.integral;
    toterr += gk.error;
    active.push(Segment{a, b, gk.integral, gk.error, gk.resabs, next_id++});
  };

  for (std::size_t i = 0; i + 1 < cuts.size() && inf_sign == 0; ++i) {
    push(cuts[i], cuts[i + 1]);
  }

  auto tolerance = [&] {
    return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
  };

  bool overflow = false;
  // noisy integrands (e.g. inner quadratures) put a floor under every
  // segment's error estimate; once refinement stops paying, more splits
  // only accumulate floor, so bail out on stagnation
  double best_toterr = toterr;
  int stagnant = 0;
  while (inf_sign == 0 && !active.empty()) {
    if (toterr <= tolerance()) break;
    if (std::isnan(total)) {
      throw evaluation_error("integral accumulated NaN", 0.0);
    }
    if (std::abs(total) >= cfg.divergence_threshold &&
        toterr > tolerance()) {
      overflow = true;
      break;
    }
    if (res.subdivisions >= cfg.max_subdivisions) break;
    if (toterr < 0.995 * best_toterr) {
      best_toterr = toterr;
      stagnant = 0;
    } else if (++stagnant >= 64) {
      break;
    }
    Segment s = active.top();
    active.pop();
    const double mid = 0.5 * (s.a + s.b);
    if (s.b - s.a < min_width || mid <= s.a || mid >= s.b) {
      frozen.push_back(s);
      continue;
    }
    total -= s.value;
    toterr -= s.error;
    push(s.a, mid);
    push(mid, s.b);
    ++res.subdivisions;
  }

  if (inf_sign != 0) {
    res.value = inf_sign > 0 ? kInf : -kInf;
    res.error_estimate = kInf;
    res.divergent = true;
    return res;
  }

  // restore contributions of frozen segments for the final error picture
  const bool tol_ok = toterr <= tolerance();
  bool divergent = overflow || std::abs(total) >= cfg.divergence_threshold;

  if (!tol_ok && !divergent) {
    // examine the dominant segments for non-integrable endpoints
    std::vector<Segment> suspects = frozen;
    for (int k = 0; k < 4 && !active.empty(); ++k) {
      suspects.push_back(active.top());
      active.pop();
    }
    std::sort(suspects.begin(), suspects.end(),
              [](const Segment& x, const Segment& y) {
                return x.error > y.error;
              });
    const double significance = std::max(cfg.abs_tol, 0.01 * tolerance());
    const double lo = cuts.front(), hi = cuts.back();
    for (std::size_t k = 0; k < suspects.size() && k < 4 && !divergent; ++k) {
      const Segment& s = suspects[k];
      if (s.error < significance) break;
      const double w = s.b - s.a;
      divergent =
          endpoint_plateau(f, s.a, true, w, lo, hi, significance) ||
          endpoint_plateau(f, s.b, false, w, lo, hi, significance);
      res.evaluations += 2 * 13 * 15;
    }
  }

  if (divergent) {
    res.value = total >= 0.0 ? kInf : -kInf;
    res.error_estimate = kInf;
    res.divergent = true;
    res.converged = false;
    return res;
  }
  res.value = total;
  res.error_estimate = toterr;
  res.converged = tol_ok;
  return res;
}

void check_nan(double v, double x) {
  if (std::isnan(v)) {
    throw evaluation_error("integrand evaluated to NaN at x = " +
                               std::to_string(x),
                           x);
  }
}

// breakpoints mapped into the transformed variable, deduplicated and
// clipped to the open domain
std::vector<double> build_cuts(double lo, double hi,
                               std::vector<double> inner) {
  std::sort(inner.begin(), inner.end());
  std::vector<double> cuts{lo};
  const double sep = 1e-13 * (hi - lo);
  for (double t : inner) {
    if (t > cuts.back() + sep && t < hi - sep) cuts.push_back(t);
  }
  cuts.push_back(hi);
  return cuts;
}

}  // namespace

void QuadConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw std::invalid_argument("rel_tol must be in (0,1)");
  }
  if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be positive");
  if (max_subdivisions < 1) {
    throw std::invalid_argument("max_subdivisions must be >= 1");
  }
  if (!(tail_cutoff_probability > 0.0 && tail_cutoff_probability < 0.5)) {
    throw std::invalid_argument("tail_cutoff_probability must be in (0,0.5)");
  }
  if (!(divergence_threshold > 0.0)) {
    throw std::invalid_argument("divergence_threshold must be positive");
  }
}

IntegralResult& IntegralResult::operator+=(const IntegralResult& other) {
  value += other.value;
  error_estimate += other.error_estimate;
  converged = converged && other.converged;
  divergent = divergent || other.divergent;
  evaluations += other.evaluations;
  subdivisions += other.subdivisions;
  if (divergent && !(value == -kInf)) value = kInf;
  return *this;
}

IntegralResult integrate_real_line(const RealFn& f, const QuadConfig& cfg,
                                   std::span<const double> breakpoints,
                                   double center, double scale) {
  cfg.validate();
  if (!(scale > 0.0) || !std::isfinite(scale) || !std::isfinite(center)) {
    throw std::invalid_argument("invalid center/scale for real-line integral");
  }
  // x = center + scale * t/(1-t^2), a smooth bijection of (-1,1) onto R
  auto to_x = [=](double t) {
    return center + scale * t / ((1.0 - t) * (1.0 + t));
  };
  auto to_t = [=](double x) {
    const double u = (x - center) / scale;
    if (u == 0.0) return 0.0;
    if (std::abs(u) > 1e150) return u > 0.0 ? 1.0 : -1.0;  // 4u^2 overflows
    return 2.0 * u / (1.0 + std::sqrt(1.0 + 4.0 * u * u));
  };
  auto g = [&](double t) {
    const double x = to_x(t);
    const double jac =
        scale * (1.0 + t * t) /
        (((1.0 - t) * (1.0 + t)) * ((1.0 - t) * (1.0 + t)));
    const double v = f(x);
    check_nan(v, x);
    return v * jac;
  };
  std::vector<double> inner{0.0};
  for (double x : breakpoints) {
    if (std::isfinite(x)) inner.push_back(to_t(x));
  }
  return run_adaptive(g, build_cuts(-1.0, 1.0, std::move(inner)), cfg);
}

IntegralResult integrate_interval(const RealFn& f, double a, double b,
                                  const QuadConfig& cfg,
                                  std::span<const double> breakpoints,
                                  double scale) {
  cfg.validate();
  if (!(a < b)) throw std::invalid_argument("integrate_interval requires a < b");
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("scale must be positive");
  }
  const bool lo_inf = std::isinf(a);
  const bool hi_inf = std::isinf(b);
  if (lo_inf && hi_inf) {
    return integrate_real_line(f, cfg, breakpoints, 0.0, scale);
  }
  if (!lo_inf && !hi_inf) {
    auto g = [&](double x) {
      const double v = f(x);
      check_nan(v, x);
      return v;
    };
    std::vector<double> inner;
    for (double x : breakpoints) {
      if (x > a && x < b) inner.push_back(x);
    }
    return run_adaptive(g, build_cuts(a, b, std::move(inner)), cfg);
  }
  // fold the infinite tail onto (0,1]: x = edge +- scale*(1-t)/t
  const double edge = lo_inf ? b : a;
  const double sign = lo_inf ? -1.0 : 1.0;
  auto g = [&](double t) {
    const double x = edge + sign * scale * (1.0 - t) / t;
    const double v = f(x);
    check_nan(v, x);
    return v * scale / (t * t);
  };
  std::vector<double> inner;
  for (double x : breakpoints) {
    const double u = sign * (x - edge);
    if (u > 0.0 && std::isfinite(x)) inner.push_back(scale / (scale + u));
  }
  return run_adaptive(g, build_cuts(0.0, 1.0, std::move(inner)), cfg);
}

IntegralResult expect_under(const Distribution& d, const RealFn& f,
                            const QuadConfig& cfg,
                            std::span<const double> breakpoints) {
  cfg.validate();
  if (d.kind() == DistKind::mixture) {
    IntegralResult res;
    res.converged = true;
    for (const auto& c : d.mixture_components()) {
      IntegralResult part = expect_under(c.dist, f, cfg, breakpoints);
      part.value *= c.weight;
      part.error_estimate *= c.weight;
      res += part;
    }
    return res;
  }
  if (d.purely_atomic()) {
    IntegralResult res;
    res.converged = true;
    double absacc = 0.0;
    for (auto [x, m] : d.atom_list()) {
      const double v = f(x);
      check_nan(v, x);
      if (std::isinf(v)) {
        res.value = v;
        res.error_estimate = kInf;
        res.divergent = true;
        res.converged = false;
        return res;
      }
      res.value += m * v;
      absacc += m * std::abs(v);
      ++res.evaluations;
    }
    res.error_estimate = 8.0 * kEps * absacc;
    return res;
  }
  if (!d.density(d.location_hint()).has_value()) {
    throw std::domain_error(
        "expect_under: distribution has neither atoms nor a density");
  }

  // probability core plus transformed tails; the density is evaluated
  // first so that regions it cannot reach never query f
  auto h = [&](double x) {
    const double g = d.density(x).value_or(0.0);
    if (g == 0.0) return 0.0;
    const double v = f(x);
    return v * g;
  };
  const double tc = cfg.tail_cutoff_probability;
  const double qlo = d.quantile(tc);
  const double qhi = d.quantile(1.0 - tc);
  const double s = d.scale_hint();
  std::vector<double> cuts = d.breakpoints();
  cuts.insert(cuts.end(), breakpoints.begin(), breakpoints.end());
  IntegralResult res;
  res.converged = true;
  if (qlo < qhi) {
    res += integrate_interval(h, qlo, qhi, cfg, cuts);
    res += integrate_interval(h, -kInf, qlo, cfg, {}, s);
    res += integrate_interval(h, qhi, kInf, cfg, {}, s);
  } else {
    res += integrate_real_line(h, cfg, cuts, d.location_hint(), s);
  }
  if (res.divergent) {
    res.value = kInf;
    res.error_estimate = kInf;
    res.converged = false;
  }
  return res;
}

McEstimate mc_expect(const Distribution& d, const RealFn& f, std::size_t n,
                     std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("mc_expect requires n >= 2");
  std::mt19937_64 eng(seed);
  double mean = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
    const double v = f(d.quantile(u));
    const double delta = v - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (v - mean);
  }
  const double nd = static_cast<double>(n);
  return {mean, std::sqrt(std::max(m2, 0.0) / (nd * (nd - 1.0)))};
}

}  // namespace properscore
