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

// Batch front end for the scoring library: score forecast/observation
// files, compute expected scores and entropies, tabulate the
// properization transforms, and run propriety experiments.
//
// Exit codes: 0 success, 1 input or domain error, 2 divergence under
// --strict-finite.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "properscore/json_io.hpp"
#include "properscore/propriety.hpp"
#include "properscore/rules.hpp"

namespace ps = properscore;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitDivergent = 2;

std::string fmt17(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json number_or_inf(double v) {
  if (std::isinf(v)) return json(v > 0 ? "inf" : "-inf");
  return json(v);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument(std::string("cannot open ") + what +
                                " file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// inline JSON or a path to a JSON file
std::string inline_or_file(const std::string& arg, const char* what) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  return read_file(arg, what);
}

int default_threads() {
  if (const char* env = std::getenv("PROPERSCORE_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

struct CommonOpts {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  std::size_t mc_n = 0;
  std::uint64_t seed = 1;
  int threads = default_threads();
  std::string format = "json";
  std::string output;
  bool strict_finite = false;

  ps::QuadConfig quad() const {
    ps::QuadConfig cfg;
    cfg.rel_tol = rel_tol;
    cfg.abs_tol = abs_tol;
    cfg.validate();
    return cfg;
  }

  json echo() const {
    return json{{"rel_tol", rel_tol},
                {"abs_tol", abs_tol},
                {"mc_n", mc_n},
                {"seed", seed},
                {"threads", threads}};
  }
};

void add_common(CLI::App* cmd, CommonOpts* opts, bool with_format = true) {
  cmd->add_option("--rel-tol", opts->rel_tol, "relative quadrature tolerance");
  cmd->add_option("--abs-tol", opts->abs_tol, "absolute quadrature tolerance");
  cmd->add_option("--mc-n", opts->mc_n, "Monte Carlo cross-check sample size");
  cmd->add_option("--seed", opts->seed, "random seed");
  cmd->add_option("--threads", opts->threads, "worker thread count")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--output,-o", opts->output, "output path (default stdout)");
  if (with_format) {
    cmd->add_option("--format", opts->format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  }
  cmd->add_flag("--strict-finite", opts->strict_finite,
                "exit 2 when any score diverges");
}

struct RuleOpts {
  std::string rule;
  std::optional<double> alpha;
  std::string weight_json;

  ps::RuleSpec build() const {
    json spec;
    spec["rule"] = rule;
    if (alpha) spec["alpha"] = *alpha;
    if (!weight_json.empty()) {
      spec["weight"] = json::parse(weight_json);
    }
    return ps::io::rule_from_json(spec.dump());
  }
};

void add_rule(CLI::App* cmd, RuleOpts* opts) {
  cmd->add_option("--rule", opts->rule,
                  "crps|wcrps|s_alpha|s_alpha_star|s_tilde|s_tilde_star|"
                  "log_score|remark_first|remark_second")
      ->required();
  cmd->add_option_function<double>(
      "--alpha", [opts](double v) { opts->alpha = v; }, "score exponent");
  cmd->add_option("--weight", opts->weight_json, "weight JSON object");
}

struct ScoredRow {
  double observation = 0.0;
  double score = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
  bool divergent = false;
};

// ---------------------------------------------------------------------------
// score: forecasts (JSONL) x observations (CSV) -> report
// ---------------------------------------------------------------------------

std::vector<std::string> read_forecast_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open forecasts file: " + path);
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw std::invalid_argument("no forecasts in " + path);
  return lines;
}

std::vector<double> read_observations(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open observations file: " + path);
  }
  std::vector<double> ys;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    const std::string tok = line.substr(start, end - start + 1);
    char* parsed_end = nullptr;
    const double v = std::strtod(tok.c_str(), &parsed_end);
    if (parsed_end == tok.c_str() || *parsed_end != '\0') {
      if (row == 1) continue;  // header line
      throw std::invalid_argument("observations row " + std::to_string(row) +
                                  ": not a number: " + tok);
    }
    ys.push_back(v);
  }
  if (ys.empty()) throw std::invalid_argument("no observations");
  return ys;
}

int cmd_score(const CommonOpts& opts, const RuleOpts& rule_opts,
              const std::string& forecasts_path,
              const std::string& observations_path,
              const std::string& pairing) {
  const ps::RuleSpec rule = rule_opts.build();
  const auto lines = read_forecast_lines(forecasts_path);
  const auto ys = read_observations(observations_path);
  const ps::QuadConfig cfg = opts.quad();

  const bool discrete_rule = rule.kind == ps::RuleKind::log_score;
  std::vector<ps::Distribution> forecasts;
  std::vector<ps::DiscreteDistribution> discrete_forecasts;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      if (discrete_rule) {
        discrete_forecasts.push_back(ps::io::discrete_from_json(lines[i]));
      } else {
        forecasts.push_back(ps::io::distribution_from_json(lines[i]));
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("forecasts line " + std::to_string(i + 1) +
                                  ": " + e.what());
    }
  }
  const std::size_t n_forecasts =
      discrete_rule ? discrete_forecasts.size() : forecasts.size();

  if (pairing == "zip" && n_forecasts != ys.size()) {
    throw std::invalid_argument(
        "zip pairing needs matching counts (" + std::to_string(n_forecasts) +
        " forecasts vs " + std::to_string(ys.size()) + " observations)");
  }
  if (pairing == "broadcast" && n_forecasts != 1) {
    throw std::invalid_argument(
        "broadcast pairing needs exactly one forecast");
  }

  std::vector<ScoredRow> rows(ys.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < ys.size();
         i = next.fetch_add(1)) {
      if (failed.load()) return;
      const std::size_t fi = pairing == "broadcast" ? 0 : i;
      ScoredRow r;
      r.observation = ys[i];
      try {
        if (discrete_rule) {
          r.score = ps::log_score(discrete_forecasts[fi], ys[i]);
        } else {
          const ps::ScoreValue s = ps::score(rule, forecasts[fi], ys[i], cfg);
          r.score = s.value;
          r.error_estimate = s.diagnostics.error_estimate;
          r.converged = s.diagnostics.converged;
          r.divergent = s.diagnostics.divergent;
        }
      } catch (const std::exception& e) {
        std::scoped_lock lock(failure_mutex);
        failed = true;
        failure = "observation row " + std::to_string(i + 1) + ": " + e.what();
        return;
      }
      rows[i] = r;
    }
  };
  const int workers =
      std::max(1, std::min<int>(opts.threads, static_cast<int>(ys.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw std::invalid_argument(failure);

  std::size_t divergent_count = 0;
  double finite_sum = 0.0;
  std::size_t finite_count = 0;
  for (const auto& r : rows) {
    if (r.divergent) {
      ++divergent_count;
    } else {
      finite_sum += r.score;
      ++finite_count;
    }
  }
  const double mean =
      finite_count > 0 ? finite_sum / static_cast<double>(finite_count) : 0.0;

  if (opts.format == "csv") {
    std::ostringstream out;
    out << "index,observation,score,error_estimate,converged,divergent\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      out << i << "," << fmt17(r.observation) << "," << fmt17(r.score) << ","
          << fmt17(r.error_estimate) << "," << (r.converged ? 1 : 0) << ","
          << (r.divergent ? 1 : 0) << "\n";
    }
    out << "# rule=" << rule.describe() << "\n";
    out << "# count=" << rows.size() << " finite_count=" << finite_count
        << " divergent_count=" << divergent_count << "\n";
    out << "# mean_score=" << fmt17(mean) << "\n";
    write_text(opts.output, out.str());
  } else {
    json rep;
    rep["rule"] = json::parse(ps::io::rule_to_json(rule));
    rep["pairing"] = pairing;
    rep["config"] = opts.echo();
    json jrows = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      jrows.push_back({{"index", i},
                       {"observation", r.observation},
                       {"score", number_or_inf(r.score)},
                       {"error_estimate", number_or_inf(r.error_estimate)},
                       {"converged", r.converged},
                       {"divergent", r.divergent}});
    }
    rep["rows"] = jrows;
    rep["summary"] = {{"count", rows.size()},
                      {"finite_count", finite_count},
                      {"divergent_count", divergent_count},
                      {"mean_score", mean}};
    write_text(opts.output, rep.dump(2) + "\n");
  }

  if (opts.strict_finite && divergent_count > 0) return kExitDivergent;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// expected: E_{y~verifier}[rule(forecast, y)]
// ---------------------------------------------------------------------------

int cmd_expected(const CommonOpts& opts, const RuleOpts& rule_opts,
                 const std::string& forecast_arg,
                 const std::string& verifier_arg) {
  const ps::RuleSpec rule = rule_opts.build();
  const std::string ftext = inline_or_file(forecast_arg, "forecast");
  const std::string vtext = inline_or_file(verifier_arg, "verifier");

  json rep;
  rep["rule"] = json::parse(ps::io::rule_to_json(rule));
  rep["config"] = opts.echo();
  double value = 0.0;
  bool divergent = false;

  if (rule.kind == ps::RuleKind::log_score) {
    const auto F = ps::io::discrete_from_json(ftext);
    const auto G = ps::io::discrete_from_json(vtext);
    value = ps::expected_log_score(F, G);
    rep["value"] = value;
    rep["error_estimate"] = 0.0;
    rep["converged"] = true;
    rep["divergent"] = false;
  } else {
    const auto F = ps::io::distribution_from_json(ftext);
    const auto G = ps::io::distribution_from_json(vtext);
    const ps::QuadConfig cfg = opts.quad();
    const ps::ScoreValue s = ps::expected_score(rule, F, G, cfg);
    value = s.value;
    divergent = s.diagnostics.divergent;
    rep["value"] = number_or_inf(s.value);
    rep["error_estimate"] = number_or_inf(s.diagnostics.error_estimate);
    rep["converged"] = s.diagnostics.converged;
    rep["divergent"] = s.diagnostics.divergent;
    if (opts.mc_n >= 2 && !divergent) {
      const auto mc = ps::mc_expect(
          G,
          [&](double y) {
            ps::QuadConfig inner = cfg;
            inner.divergence_threshold = 1e290;
            return ps::score(rule, F, y, inner).value;
          },
          opts.mc_n, opts.seed);
      rep["mc"] = {{"mean", mc.mean},
                   {"standard_error", mc.standard_error},
                   {"n", opts.mc_n},
                   {"seed", opts.seed}};
    }
  }

  if (opts.format == "csv") {
    std::ostringstream out;
    out << "value,error_estimate,converged,divergent\n";
    out << fmt17(value) << ","
        << fmt17(rep.contains("error_estimate") &&
                         rep["error_estimate"].is_number()
                     ? rep["error_estimate"].get<double>()
                     : std::numeric_limits<double>::infinity())
        << "," << (rep["converged"].get<bool>() ? 1 : 0) << ","
        << (rep["divergent"].get<bool>() ? 1 : 0) << "\n";
    write_text(opts.output, out.str());
  } else {
    write_text(opts.output, rep.dump(2) + "\n");
  }
  if (opts.strict_finite && divergent) return kExitDivergent;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// properize: tabulate both transforms over an x grid
// ---------------------------------------------------------------------------

struct GridSpec {
  double lo = -5.0, hi = 5.0;
  int n = 101;
};

GridSpec parse_grid_spec(const std::string& text) {
  GridSpec g;
  if (text.empty()) return g;
  double lo, hi;
  int n;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 ||
      !(lo < hi) || n < 2) {
    throw std::invalid_argument("grid spec must be lo:hi:n with lo < hi, n >= 2");
  }
  g.lo = lo;
  g.hi = hi;
  g.n = n;
  return g;
}

int cmd_properize(const CommonOpts& opts, const std::string& input_arg,
                  double alpha, const std::string& grid_arg,
                  const std::string& map) {
  const auto P =
      ps::io::distribution_from_json(inline_or_file(input_arg, "input"));
  const GridSpec grid = parse_grid_spec(grid_arg);
  const bool want_tilde = map == "tilde" || map == "both";
  const bool want_bg = map == "bg" || map == "both";

  std::optional<ps::Distribution> tilde;
  if (want_tilde) tilde = ps::properize_tilde(P, alpha);  // throws outside P01
  std::optional<ps::Distribution> bg;
  if (want_bg) bg = ps::properize_bg(P, alpha);

  std::ostringstream csv;
  json jrows = json::array();
  csv << "x,cdf";
  if (want_tilde) csv << ",tilde";
  if (want_bg) csv << ",bg";
  csv << "\n";
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.lo + (grid.hi - grid.lo) * i / (grid.n - 1);
    json row;
    row["x"] = x;
    row["cdf"] = P.cdf(x);
    csv << fmt17(x) << "," << fmt17(P.cdf(x));
    if (want_tilde) {
      row["tilde"] = tilde->cdf(x);
      csv << "," << fmt17(tilde->cdf(x));
    }
    if (want_bg) {
      row["bg"] = bg->cdf(x);
      csv << "," << fmt17(bg->cdf(x));
    }
    csv << "\n";
    jrows.push_back(row);
  }

  if (opts.format == "csv") {
    write_text(opts.output, csv.str());
  } else {
    json rep;
    rep["alpha"] = alpha;
    rep["map"] = map;
    rep["rows"] = jrows;
    write_text(opts.output, rep.dump(2) + "\n");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// probe: score matrix + propriety check (+ violation search)
// ---------------------------------------------------------------------------

int cmd_probe(const CommonOpts& opts, const RuleOpts& rule_opts,
              const std::string& grid_arg, double tolerance,
              const std::string& matrix_output) {
  const ps::RuleSpec rule = rule_opts.build();
  const auto parsed =
      ps::io::grid_from_json(inline_or_file(grid_arg, "grid"));

  if (rule.kind == ps::RuleKind::log_score) {
    if (parsed.discrete.empty()) {
      throw std::invalid_argument("log_score probe needs a discrete grid");
    }
    const auto m = ps::log_score_matrix(parsed.discrete);
    double worst = std::numeric_limits<double>::infinity();
    bool proper = true;
    for (std::size_t j = 0; j < m.size(); ++j) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == j) continue;
        worst = std::min(worst, m[i][j] - m[j][j]);
        proper = proper && m[i][j] >= m[j][j] - tolerance;
      }
    }
    if (m.size() == 1) worst = 0.0;
    json rep;
    rep["rule"] = json::parse(ps::io::rule_to_json(rule));
    rep["proper"] = proper;
    rep["worst_margin"] = worst;
    rep["matrix"] = m;
    write_text(opts.output, rep.dump(2) + "\n");
    return kExitOk;
  }

  if (parsed.continuous.empty()) {
    throw std::invalid_argument("probe needs a grid of distributions");
  }
  ps::DistGrid grid;
  grid.description = parsed.description;
  grid.members = parsed.continuous;
  if (rule.requires_p01()) {
    for (const auto& d : grid.members) {
      if (!d.in_p01()) {
        throw std::domain_error("grid member " + d.describe() +
                                ": distribution not in P_(0,1)");
      }
    }
  }

  const ps::QuadConfig cfg = opts.quad();
  const ps::PropReport rep =
      ps::check_proper(rule, grid, cfg, tolerance, opts.threads);

  json j = json::parse(ps::io::prop_report_to_json(rep));
  if (rule.kind == ps::RuleKind::s_tilde) {
    json violations = json::array();
    for (std::size_t i = 0; i < grid.members.size(); ++i) {
      json v;
      v["member"] = i;
      const auto found =
          ps::find_violation(grid.members[i], rule.alpha, rule.weight, cfg);
      if (found) {
        v["margin"] = number_or_inf(found->margin);
        v["improper_at_member"] = found->margin > tolerance;
      } else {
        v["inconclusive"] = true;
      }
      violations.push_back(v);
    }
    j["violations"] = violations;
  }
  write_text(opts.output, j.dump(2) + "\n");
  if (!matrix_output.empty()) {
    write_text(matrix_output, ps::io::prop_report_matrix_csv(rep));
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// entropy: self-expected score of the properized rule / Shannon entropy
// ---------------------------------------------------------------------------

int cmd_entropy(const CommonOpts& opts, const std::string& input_arg,
                const std::string& weight_json) {
  const std::string text = inline_or_file(input_arg, "input");
  json rep;
  if (ps::io::is_discrete_json(text)) {
    const auto d = ps::io::discrete_from_json(text);
    rep["shannon_entropy_bits"] = ps::shannon_entropy(d);
    write_text(opts.output, rep.dump(2) + "\n");
    return kExitOk;
  }
  const auto G = ps::io::distribution_from_json(text);
  const ps::Weight w = weight_json.empty()
                           ? ps::Weight::constant(1.0)
                           : ps::io::weight_from_json(weight_json);
  const auto s = ps::entropy_s_tilde(G, w, opts.quad());
  rep["value"] = number_or_inf(s.value);
  rep["error_estimate"] = number_or_inf(s.diagnostics.error_estimate);
  rep["converged"] = s.diagnostics.converged;
  rep["divergent"] = s.diagnostics.divergent;
  write_text(opts.output, rep.dump(2) + "\n");
  if (opts.strict_finite && s.diagnostics.divergent) return kExitDivergent;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proper scoring rules for probabilistic forecasts"};
  app.require_subcommand(1);

  CommonOpts score_opts, expected_opts, properize_opts, probe_opts,
      entropy_opts;
  RuleOpts score_rule, expected_rule, probe_rule;

  auto* score_cmd =
      app.add_subcommand("score", "score forecasts against observations");
  std::string forecasts_path, observations_path, pairing = "zip";
  score_cmd->add_option("--forecasts", forecasts_path,
                        "JSONL file, one distribution per line")
      ->required();
  score_cmd->add_option("--observations", observations_path,
                        "CSV file, one real per row")
      ->required();
  score_cmd->add_option("--pairing", pairing, "pairing mode")
      ->check(CLI::IsMember({"zip", "broadcast"}));
  add_rule(score_cmd, &score_rule);
  add_common(score_cmd, &score_opts);

  auto* expected_cmd =
      app.add_subcommand("expected", "expected score of a forecast under a "
                                     "verifying distribution");
  std::string forecast_arg, verifier_arg;
  expected_cmd->add_option("--forecast", forecast_arg,
                           "distribution JSON or file")
      ->required();
  expected_cmd->add_option("--verifier", verifier_arg,
                           "distribution JSON or file")
      ->required();
  add_rule(expected_cmd, &expected_rule);
  add_common(expected_cmd, &expected_opts);

  auto* properize_cmd = app.add_subcommand(
      "properize", "tabulate the properization transforms over a grid");
  std::string properize_input, properize_grid, properize_map = "both";
  double properize_alpha = 1.0;
  properize_cmd
      ->add_option("--input", properize_input, "distribution JSON or file")
      ->required();
  properize_cmd->add_option("--alpha", properize_alpha, "score exponent");
  properize_cmd->add_option("--grid", properize_grid, "x grid as lo:hi:n");
  properize_cmd->add_option("--map", properize_map, "which transform")
      ->check(CLI::IsMember({"tilde", "bg", "both"}));
  add_common(properize_cmd, &properize_opts);

  auto* probe_cmd = app.add_subcommand(
      "probe", "propriety experiment: expected-score matrix over a grid");
  std::string probe_grid, probe_matrix_output;
  double probe_tolerance = 1e-6;
  probe_cmd->add_option("--grid", probe_grid, "grid JSON or file")->required();
  probe_cmd->add_option("--tolerance", probe_tolerance,
                        "margin tolerance for the propriety verdict");
  probe_cmd->add_option("--matrix-output", probe_matrix_output,
                        "also write the score matrix as CSV here");
  add_rule(probe_cmd, &probe_rule);
  add_common(probe_cmd, &probe_opts);

  auto* entropy_cmd = app.add_subcommand(
      "entropy", "self-expected properized score / Shannon entropy");
  std::string entropy_input, entropy_weight;
  entropy_cmd->add_option("--input", entropy_input,
                          "distribution JSON or file")
      ->required();
  entropy_cmd->add_option("--weight", entropy_weight, "weight JSON object");
  add_common(entropy_cmd, &entropy_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (score_cmd->parsed()) {
      return cmd_score(score_opts, score_rule, forecasts_path,
                       observations_path, pairing);
    }
    if (expected_cmd->parsed()) {
      return cmd_expected(expected_opts, expected_rule, forecast_arg,
                          verifier_arg);
    }
    if (properize_cmd->parsed()) {
      return cmd_properize(properize_opts, properize_input, properize_alpha,
                           properize_grid, properize_map);
    }
    if (probe_cmd->parsed()) {
      return cmd_probe(probe_opts, probe_rule, probe_grid, probe_tolerance,
                       probe_matrix_output);
    }
    if (entropy_cmd->parsed()) {
      return cmd_entropy(entropy_opts, entropy_input, entropy_weight);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
