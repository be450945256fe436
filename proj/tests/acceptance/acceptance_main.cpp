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

// End-to-end verification suite.  Each numbered criterion prints exactly
// one PASS/FAIL line; the process exits with the number of failures.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "properscore/json_io.hpp"
#include "properscore/propriety.hpp"
#include "properscore/rules.hpp"

namespace ps = properscore;
namespace fs = std::filesystem;

namespace {

int hardware_threads() {
  const unsigned n = std::thread::hardware_concurrency();
  return static_cast<int>(std::min(8u, std::max(1u, n)));
}

bool rel_close(double a, double b, double rel) {
  if (std::isinf(a) || std::isinf(b)) return std::isinf(a) && std::isinf(b);
  return std::abs(a - b) <=
         std::max(rel * std::max(std::abs(a), std::abs(b)), 1e-12);
}

std::vector<ps::Distribution> base_families() {
  return {ps::Distribution::gumbel(0, 1), ps::Distribution::laplace(0, 1),
          ps::Distribution::logistic(0, 1), ps::Distribution::normal(0, 1)};
}

// cdf with survival ~ 1/(2x)
ps::Distribution heavy_tail_cdf() {
  return ps::Distribution::custom(
      [](double x) { return 0.5 + 0.5 * x / (1.0 + std::abs(x)); },
      [](double x) { return 0.5 - 0.5 * x / (1.0 + std::abs(x)); }, true);
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& msg) {
    pass = false;
    if (detail.empty()) detail = msg;
  }
};

// --- 1 & 2: closed form of the properized rule and its alpha-independence ---

void criteria_closed_form(Outcome& c1, Outcome& c2) {
  const std::vector<double> alphas = {0.5, 1.0, 2.0, 3.0};
  const std::vector<ps::Weight> weights = {ps::Weight::constant(1.0),
                                           ps::Weight::gaussian_pdf(0, 1)};
  for (const auto& F : base_families()) {
    for (const auto& w : weights) {
      for (int yi = -3; yi <= 3; ++yi) {
        const double y = yi;
        const double star = ps::s_tilde_star(F, y, w).value;
        std::vector<double> composed;
        for (double a : alphas) {
          composed.push_back(
              ps::s_tilde(ps::properize_tilde(F, a), y, a, w).value);
          if (!rel_close(star, composed.back(), 1e-8)) {
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "%s y=%d alpha=%g: star=%.12g composed=%.12g",
                          F.describe().c_str(), yi, a, star, composed.back());
            c1.fail(buf);
          }
        }
        for (std::size_t i = 0; i < composed.size(); ++i) {
          for (std::size_t j = i + 1; j < composed.size(); ++j) {
            if (!rel_close(composed[i], composed[j], 1e-8)) {
              c2.fail(F.describe() + ": alpha pair disagrees");
            }
          }
        }
      }
    }
  }
}

// --- 3: expected score under truth equals the entropy -----------------------

Outcome criterion_entropy_identity() {
  Outcome c;
  const ps::Weight unit = ps::Weight::constant(1.0);
  const auto rule =
      ps::RuleSpec::make(ps::RuleKind::s_tilde_star, std::nullopt, std::nullopt);
  for (const auto& G : base_families()) {
    const double direct = ps::expected_score(rule, G, G).value;
    const double ent = ps::entropy_s_tilde(G, unit).value;
    if (std::abs(direct - ent) > 1e-6) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%s: direct=%.10g entropy=%.10g",
                    G.describe().c_str(), direct, ent);
      c.fail(buf);
    }
  }
  const auto L = ps::Distribution::logistic(0, 1);
  const double two_pi = 2.0 * M_PI;
  if (std::abs(ps::expected_score(rule, L, L).value - two_pi) > 1e-6 ||
      std::abs(ps::entropy_s_tilde(L, unit).value - two_pi) > 1e-6) {
    c.fail("logistic self-score does not equal 2*pi");
  }
  return c;
}

// --- 4: Tonelli reduction vs direct double integral -------------------------

Outcome criterion_tonelli() {
  Outcome c;
  std::mt19937_64 eng(20260808);
  std::uniform_real_distribution<double> loc(-1.0, 1.0);
  std::uniform_real_distribution<double> sc(0.95, 1.05);
  const ps::Weight unit = ps::Weight::constant(1.0);
  const double alphas[] = {0.6, 0.75, 0.85};
  for (int rep = 0; rep < 10; ++rep) {
    const double a = alphas[rep % 3];
    auto make = [&](double l, double s) -> ps::Distribution {
      switch (rep % 3) {
        case 0:
          return ps::Distribution::logistic(l, s);
        case 1:
          return ps::Distribution::laplace(l, s);
        default:
          return ps::Distribution::normal(l, s);
      }
    };
    const auto F = make(loc(eng), sc(eng));
    const auto G = make(loc(eng), sc(eng));
    const double closed =
        ps::expected_s_tilde_closed(F, G, a, unit).value;
    const auto rule = ps::RuleSpec::make(ps::RuleKind::s_tilde, a, unit);
    const double direct = ps::expected_score(rule, F, G).value;
    if (std::abs(closed - direct) > 1e-6) {
      char buf[200];
      std::snprintf(buf, sizeof(buf),
                    "pair %d (%s | %s, alpha=%g): closed=%.10g direct=%.10g",
                    rep, F.describe().c_str(), G.describe().c_str(), a, closed,
                    direct);
      c.fail(buf);
    }
  }
  return c;
}

// --- 5: minimizer formula against brute force --------------------------------

Outcome criterion_minimizer() {
  Outcome c;
  for (double a : {0.25, 0.5, 1.0, 2.0, 5.0}) {
    for (int pi = 1; pi <= 19; ++pi) {
      const double p = 0.05 * pi;
      const double q_formula = ps::argmin_g(p, a);
      double best_q = 0.5, best = 1e308;
      const std::size_t grid = 200000;
      for (std::size_t k = 1; k < grid; ++k) {
        const double q = static_cast<double>(k) / grid;
        const double v = ps::g_eval(q, p, a, 1.0);
        if (v < best) {
          best = v;
          best_q = q;
        }
      }
      if (std::abs(q_formula - best_q) > 1e-5) {
        c.fail("grid minimizer disagrees at p=" + std::to_string(p));
      }
      if (std::abs(ps::g_prime(q_formula, p, a, 1.0)) > 1e-10) {
        c.fail("g' not zero at the closed-form minimizer");
      }
      if (!(ps::g_double_prime(q_formula, p, a, 1.0) > 0.0)) {
        c.fail("g'' not positive at the closed-form minimizer");
      }
    }
  }
  return c;
}

// --- 6: propriety of the properized rule on a mixed grid ---------------------

Outcome criterion_propriety(std::string& extra) {
  Outcome c;
  ps::DistGrid grid;
  grid.description = "mixed logistic/gumbel/laplace";
  const std::pair<double, double> params[] = {
      {0.0, 1.0}, {1.0, 0.7}, {-1.0, 1.5}, {0.5, 2.0}};
  for (auto [l, s] : params) grid.members.push_back(ps::Distribution::logistic(l, s));
  for (auto [l, s] : params) grid.members.push_back(ps::Distribution::gumbel(l, s));
  for (auto [l, s] : params) grid.members.push_back(ps::Distribution::laplace(l, s));

  const auto rule =
      ps::RuleSpec::make(ps::RuleKind::s_tilde_star, std::nullopt, std::nullopt);
  const auto rep =
      ps::check_proper(rule, grid, {}, 1e-6, hardware_threads());
  if (!rep.proper) c.fail("violation found");
  if (!(rep.worst_margin >= -1e-6)) c.fail("worst margin below tolerance");
  if (!rep.inconclusive_columns.empty()) c.fail("inconclusive diagonal");
  // the diagonal identity: self-scores equal the entropies
  for (std::size_t j = 0; j < grid.members.size(); ++j) {
    const double ent =
        ps::entropy_s_tilde(grid.members[j], ps::Weight::constant(1.0)).value;
    if (std::abs(rep.matrix[j][j].value - ent) > 1e-7 * std::max(1.0, ent)) {
      c.fail("diagonal differs from the entropy at member " +
             std::to_string(j));
    }
  }
  char buf[80];
  std::snprintf(buf, sizeof(buf), "worst finite margin %.3g",
                rep.worst_margin);
  extra = buf;
  return c;
}

// --- 7: strict propriety on a continuous finite-entropy grid -----------------

Outcome criterion_strictness() {
  Outcome c;
  const std::vector<ps::Distribution> grid = {
      ps::Distribution::logistic(0, 1),  ps::Distribution::logistic(0.5, 1),
      ps::Distribution::logistic(0, 2),  ps::Distribution::gumbel(0, 1),
      ps::Distribution::gumbel(1, 2),    ps::Distribution::laplace(0, 1)};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const auto v = ps::strictness_check(grid[i], grid[j]);
      if (i == j) {
        if (!(std::abs(v.gap) <= 1e-6) || !v.identical || !v.consistent) {
          c.fail("self pair " + std::to_string(i) + " not recognized");
        }
      } else if (!(v.gap > 1e-4)) {
        c.fail("pair (" + std::to_string(i) + "," + std::to_string(j) +
               ") gap too small");
      } else if (!v.consistent) {
        c.fail("inconsistent verdict");
      }
    }
  }
  return c;
}

// --- 8: impropriety of the raw rule -------------------------------------------

Outcome criterion_impropriety() {
  Outcome c;
  const ps::Weight unit = ps::Weight::constant(1.0);
  for (const auto& G :
       {ps::Distribution::logistic(0, 1), ps::Distribution::gumbel(0, 1)}) {
    for (double a : {1.0, 2.0}) {
      const auto v = ps::find_violation(G, a, unit);
      if (!v || !(v->margin > 1e-4)) {
        c.fail(G.describe() + " alpha=" + std::to_string(a) +
               ": no positive margin");
      }
    }
    const auto fixed = ps::find_violation(G, 0.5, unit);
    if (!fixed || std::abs(fixed->margin) > 1e-7) {
      c.fail(G.describe() + ": nonzero margin at the fixed point");
    }
  }
  return c;
}

// --- 9: power-score properization regressions --------------------------------

Outcome criterion_power_score() {
  Outcome c;
  std::mt19937_64 eng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  auto pick = [&](int i) -> ps::Distribution {
    const double l = u(eng), s = 0.5 + std::abs(u(eng));
    switch (i % 4) {
      case 0:
        return ps::Distribution::logistic(l, s);
      case 1:
        return ps::Distribution::gumbel(l, s);
      case 2:
        return ps::Distribution::laplace(l, s);
      default:
        return ps::Distribution::normal(l, s);
    }
  };
  for (int i = 0; i < 12; ++i) {
    const auto P = pick(i);
    const double y = u(eng);
    if (!rel_close(ps::s_alpha_star(P, y, 2.0).value, ps::crps(P, y).value,
                   1e-8)) {
      c.fail("alpha=2 does not reproduce crps at " + P.describe());
    }
    for (double a : {0.5, 1.0}) {
      const double expect = std::abs(P.median() - y);
      if (std::abs(ps::s_alpha_star(P, y, a).value - expect) >
          1e-8 * std::max(1.0, expect)) {
        c.fail("median regime wrong at " + P.describe());
      }
    }
    const auto view = ps::properize_bg(P, 2.0);
    for (int k = -20; k <= 20; ++k) {
      const double x = 0.35 * k;
      if (std::abs(view.cdf(x) - P.cdf(x)) > 1e-14) {
        c.fail("alpha=2 map is not the identity at " + P.describe());
      }
    }
  }
  return c;
}

// --- 10: finiteness on the named families, divergence on heavy tails ---------

Outcome criterion_finiteness() {
  Outcome c;
  const ps::Weight unit = ps::Weight::constant(1.0);
  for (const auto& G :
       {ps::Distribution::gumbel(0, 1), ps::Distribution::laplace(0, 1)}) {
    const auto e = ps::entropy_s_tilde(G, unit);
    if (!e.diagnostics.converged || e.diagnostics.divergent ||
        !std::isfinite(e.value)) {
      c.fail(G.describe() + ": entropy did not converge");
    }
  }
  const auto heavy = ps::entropy_s_tilde(heavy_tail_cdf(), unit);
  if (!heavy.diagnostics.divergent ||
      heavy.value != std::numeric_limits<double>::infinity()) {
    c.fail("heavy-tailed cdf not flagged divergent");
  }
  return c;
}

// --- 11: the probe rules against their substitution oracles ------------------

Outcome criterion_probe_rules() {
  Outcome c;
  const auto L = ps::Distribution::logistic(0, 1);
  const auto N = ps::Distribution::normal(0.5, 1.3);
  int n = 0;
  for (const auto& F : {L, N}) {
    for (int k = 0; k < 10; ++k) {
      const double y = -2.5 + 0.5 * k;
      const double v = F.cdf(y);
      const double expect =
          (std::pow(v, 3.0) + std::pow(1.0 - v, 3.0)) / 3.0;
      if (std::abs(ps::remark_first(F, y, 1.0).value - expect) > 1e-7) {
        c.fail("first probe rule misses the oracle at y=" + std::to_string(y));
      }
      ++n;
    }
  }
  if (n != 20) c.fail("wrong point count");
  const double ad = 2.0 * std::log(2.0) - 1.0;
  if (std::abs(ps::remark_second(L, 0.0, 1.0).value - ad) > 1e-7) {
    c.fail("second probe rule misses 2 ln 2 - 1 at the median");
  }
  if (std::abs(ps::remark_second(ps::Distribution::laplace(0, 1), 0.0, 1.0)
                   .value -
               ad) > 1e-7) {
    c.fail("second probe rule misses 2 ln 2 - 1 for the laplace");
  }
  return c;
}

// --- 12: arithmetic-geometric mean gap ----------------------------------------

Outcome criterion_amgm() {
  Outcome c;
  for (int i = 1; i < 200; ++i) {
    for (int j = 1; j < 200; ++j) {
      const double p = i / 200.0, q = j / 200.0;
      const double gap = ps::amgm_gap(p, q);
      if (!(gap >= 0.0)) c.fail("negative gap");
      if (i == j && !(gap < 1e-12)) c.fail("diagonal gap too large");
      if (i != j && !(gap > 0.0)) c.fail("off-diagonal gap vanished");
    }
  }
  return c;
}

// --- 13: Shannon entropy and log-score propriety ------------------------------

Outcome criterion_log_score() {
  Outcome c;
  const ps::DiscreteDistribution fair({0.0, 1.0}, {0.5, 0.5});
  if (ps::shannon_entropy(fair) != 1.0) c.fail("fair coin is not 1 bit");
  std::vector<ps::DiscreteDistribution> grid;
  for (int k = 1; k <= 9; ++k) {
    grid.emplace_back(std::vector<double>{0.0, 1.0},
                      std::vector<double>{0.1 * k, 1.0 - 0.1 * k});
  }
  const auto m = ps::log_score_matrix(grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (std::abs(m[j][j] - ps::shannon_entropy(grid[j])) > 1e-12) {
      c.fail("diagonal is not the entropy");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (m[i][j] < m[j][j] - 1e-12) c.fail("log score violates propriety");
    }
  }
  return c;
}

// --- 14: engine cross-checks and CLI determinism ------------------------------

Outcome criterion_engine(const std::string& cli_path) {
  Outcome c;
  std::mt19937_64 eng(99991);
  std::uniform_real_distribution<double> loc(-2.0, 2.0);
  std::uniform_real_distribution<double> sc(0.6, 2.0);
  for (int rep = 0; rep < 20; ++rep) {
    ps::Distribution d = [&]() -> ps::Distribution {
      switch (rep % 4) {
        case 0:
          return ps::Distribution::logistic(loc(eng), sc(eng));
        case 1:
          return ps::Distribution::gumbel(loc(eng), sc(eng));
        case 2:
          return ps::Distribution::laplace(loc(eng), sc(eng));
        default:
          return ps::Distribution::normal(loc(eng), sc(eng));
      }
    }();
    const double shift = loc(eng);
    const int pick = rep % 3;
    auto f = [shift, pick](double x) {
      switch (pick) {
        case 0:
          return std::cos(x) + 0.05 * (x - shift) * (x - shift);
        case 1:
          return std::abs(x - shift);
        default:
          return std::exp(-0.25 * (x - shift) * (x - shift));
      }
    };
    const auto q = ps::expect_under(d, f);
    const auto mc = ps::mc_expect(d, f, 1000000, 5000 + rep);
    if (!q.converged) {
      c.fail("quadrature did not converge on case " + std::to_string(rep));
    } else if (std::abs(q.value - mc.mean) >
               4.0 * std::max(mc.standard_error, 1e-12)) {
      c.fail("quadrature and MC disagree on case " + std::to_string(rep));
    }
  }

  // byte-level CLI determinism for a fixed seed
  const fs::path dir =
      fs::temp_directory_path() / ("properscore-acceptance-" +
                                   std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path fpath = dir / "f.jsonl";
  const fs::path opath = dir / "obs.csv";
  {
    std::ofstream f1(fpath);
    f1 << "{\"kind\":\"gumbel\",\"loc\":0,\"scale\":1}\n"
       << "{\"kind\":\"logistic\",\"loc\":0.5,\"scale\":2}\n";
    std::ofstream o1(opath);
    o1 << "0.3\n-1.2\n";
  }
  auto run_once = [&](const fs::path& out) {
    const std::string cmd = cli_path + " score --forecasts " +
                            fpath.string() + " --observations " +
                            opath.string() +
                            " --rule s_tilde_star --seed 123 --output " +
                            out.string();
    return std::system(cmd.c_str());
  };
  const fs::path out1 = dir / "r1.json", out2 = dir / "r2.json";
  if (run_once(out1) != 0 || run_once(out2) != 0) {
    c.fail("CLI run failed");
    return c;
  }
  std::ifstream a(out1, std::ios::binary), b(out2, std::ios::binary);
  std::string sa((std::istreambuf_iterator<char>(a)),
                 std::istreambuf_iterator<char>());
  std::string sb((std::istreambuf_iterator<char>(b)),
                 std::istreambuf_iterator<char>());
  if (sa.empty() || sa != sb) c.fail("CLI output is not byte-identical");
  return c;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    std::string title;
    Outcome outcome;
    std::string extra;
  };
  std::vector<Entry> entries;

  Outcome c1, c2;
  criteria_closed_form(c1, c2);
  entries.push_back({1, "closed form of the properized rule", c1, ""});
  entries.push_back({2, "alpha-independence of the properized rule", c2, ""});
  entries.push_back({3, "expected self-score equals the entropy (2*pi)",
                     criterion_entropy_identity(), ""});
  entries.push_back({4, "Tonelli reduction matches the direct route",
                     criterion_tonelli(), ""});
  entries.push_back({5, "pointwise minimizer formula", criterion_minimizer(),
                     ""});
  std::string margin_note;
  entries.push_back({6, "propriety on a 12-member mixed grid",
                     criterion_propriety(margin_note), margin_note});
  entries.push_back({7, "strict propriety on the continuous subclass",
                     criterion_strictness(), ""});
  entries.push_back({8, "impropriety of the unproperized rule",
                     criterion_impropriety(), ""});
  entries.push_back({9, "power-score properization regressions",
                     criterion_power_score(), ""});
  entries.push_back({10, "finite entropies and heavy-tail divergence",
                     criterion_finiteness(), ""});
  entries.push_back({11, "probe rules match their substitution oracles",
                     criterion_probe_rules(), ""});
  entries.push_back({12, "arithmetic-geometric mean gap", criterion_amgm(),
                     ""});
  entries.push_back({13, "Shannon entropy and log-score propriety",
                     criterion_log_score(), ""});
#ifdef PROPERSCORE_CLI_PATH
  entries.push_back({14, "quadrature vs Monte Carlo and CLI determinism",
                     criterion_engine(PROPERSCORE_CLI_PATH), ""});
#else
  entries.push_back({14, "quadrature vs Monte Carlo and CLI determinism",
                     Outcome{false, "CLI path not configured"}, ""});
#endif

  int failures = 0;
  for (const auto& e : entries) {
    std::printf("[%s] criterion %2d: %s", e.outcome.pass ? "PASS" : "FAIL",
                e.id, e.title.c_str());
    if (!e.extra.empty()) std::printf(" (%s)", e.extra.c_str());
    if (!e.outcome.pass) {
      std::printf(" -- %s", e.outcome.detail.c_str());
      ++failures;
    }
    std::printf("\n");
  }
  return failures;
}
