#include "dyckmax/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <set>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "dyckmax/bounds.hpp"
#include "dyckmax/convergence.hpp"
#include "dyckmax/cycle_lemma.hpp"
#include "dyckmax/excursion.hpp"
#include "dyckmax/heights.hpp"
#include "dyckmax/lemma3.hpp"
#include "dyckmax/report.hpp"
#include "dyckmax/sampling.hpp"

namespace dyck::cli {
namespace {

const std::set<std::string> kCommands = {"qn",           "mc",          "sample",      "limit", "bijection-check",
                                         "lemma3-check", "certificate", "theorem1"};

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

std::vector<std::int64_t> theorem1_grid() { return {64, 128, 256, 512, 1024}; }

struct Emitter {
  const RunConfig& cfg;
  std::ostream& out;

  void emit(const Table& t, const nlohmann::json& meta = nlohmann::json::object()) const {
    write(render(t, cfg.format == "json" ? Format::kJson : Format::kCsv, meta));
  }

  void write(const std::string& bytes) const {
    if (cfg.output.empty()) {
      out << bytes;
      return;
    }
    std::filesystem::path path(cfg.output);
    if (path.is_relative()) {
      if (const char* dir = std::getenv("DYCKMAX_OUT_DIR"); dir != nullptr && *dir != '\0') path = dir / path;
    }
    write_atomic(path, bytes);
  }
};

int cmd_qn(const RunConfig& cfg, const Emitter& em) {
  Table t{"qn", {"n", "lambda", "qn", "err_budget"}, {}, 12};
  for (const double lambda : cfg.lambda) {
    const auto qs = cfg.mode == "log" ? qn_log_space_many(cfg.n, lambda) : qn_exact_many(cfg.n, lambda);
    for (std::size_t i = 0; i < cfg.n.size(); ++i) t.add_row({cfg.n[i], lambda, qs[i].value, qs[i].rel_err});
  }
  t.sort_rows(2);
  em.emit(t, {{"mode", cfg.mode}});
  return kExitOk;
}

int cmd_mc(const RunConfig& cfg, const Emitter& em) {
  Table t{"mc", {"n", "lambda", "estimate", "half_width", "level", "n_samples", "seed"}, {}, 12};
  for (const auto n : cfg.n) {
    for (const double lambda : cfg.lambda) {
      const auto est = mc_qn(n, lambda, cfg.n_samples, RngStream(cfg.seed, static_cast<std::uint64_t>(n)),
                             McOptions{cfg.level, cfg.threads});
      t.add_row({n, lambda, est.estimate, est.half_width, est.level, est.n_samples, static_cast<std::int64_t>(cfg.seed)});
    }
  }
  t.sort_rows(2);
  em.emit(t);
  return kExitOk;
}

int cmd_sample(const RunConfig& cfg, const Emitter& em) {
  RngStream rng(cfg.seed, 0);
  std::string lines;
  for (std::int64_t i = 0; i < cfg.count; ++i) {
    lines += cfg.kind == "bridge" ? sample_bridge(cfg.n[0], rng).walk().to_string()
                                  : sample_dyck(cfg.n[0], rng).walk().to_string();
    lines += '\n';
  }
  em.write(lines);
  return kExitOk;
}

int cmd_limit(const RunConfig& cfg, const Emitter& em) {
  if (!cfg.x.empty()) {
    Table t{"chung_cdf", {"x", "cdf", "survival", "truncation_bound"}, {}, 12};
    for (const double x : cfg.x) {
      const auto c = chung_cdf(x, cfg.tol);
      const auto s = chung_survival(x, cfg.tol);
      t.add_row({x, c.value, s.value, std::max(c.truncation_bound, s.truncation_bound)});
    }
    t.sort_rows(1);
    em.emit(t, {{"tol", cfg.tol}});
    return kExitOk;
  }
  Table t{"limit_moment", {"lambda", "limit", "error_bound"}, {}, 12};
  for (const double lambda : cfg.lambda) {
    const auto m = limit_moment(lambda, cfg.tol);
    t.add_row({lambda, m.value, m.error_bound});
  }
  t.sort_rows(1);
  em.emit(t, {{"tol", cfg.tol}});
  return kExitOk;
}

int cmd_bijection(const RunConfig& cfg, const Emitter& em, std::ostream& err) {
  Table t{"bijection", {"n", "pairs", "bridges", "distinct_images", "ok"}, {}, 12};
  std::string failure;
  for (std::int64_t n = 0; n <= cfg.n_max; ++n) {
    const auto r = bijection_check_exhaustive(n);
    t.add_row({n, r.pairs, r.bridges, r.distinct_images, std::int64_t{r.ok() ? 1 : 0}});
    if (!r.ok() && failure.empty()) failure = "n = " + std::to_string(n) + ": " + r.failure;
  }
  for (std::int64_t n = 0; n <= cfg.cardinality_max && failure.empty(); ++n) {
    if (!cardinality_identity(n)) failure = "cardinality identity fails at n = " + std::to_string(n);
  }
  em.emit(t, {{"cardinality_max", cfg.cardinality_max}});
  if (!failure.empty()) {
    err << "bijection-check failed: " << failure << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_lemma3(const RunConfig& cfg, const Emitter& em, std::ostream& err) {
  Table t{"lemma3",
          {"n", "event", "horizon", "p_bridge", "p_walk", "c0", "decomposition_exact", "holds"},
          {},
          12};
  std::string failure;
  for (std::int64_t n = 1; n <= cfg.n_max; ++n) {
    const auto r = lemma3_exhaustive(n);
    for (const auto& row : r.rows) {
      t.add_row({n, row.event, row.horizon, row.bridge.to_string(), row.walk.to_string(), row.c0,
                 std::int64_t{row.decomposition_exact ? 1 : 0}, std::int64_t{row.inequality ? 1 : 0}});
    }
    if (!r.ok() && failure.empty()) failure = "n = " + std::to_string(n) + ": " + r.failure;
  }
  em.emit(t);
  if (!failure.empty()) {
    err << "lemma3-check failed: " << failure << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_certificate(const RunConfig& cfg, const Emitter& em, std::ostream& err) {
  const auto inputs = precompute_certificate_inputs(cfg.n);
  Table t{"certificate", {"lambda", "n", "link", "left", "right", "margin"}, {}, 12};
  nlohmann::json summary = nlohmann::json::array();
  std::string failure;
  err << fmt::format("{:>8} {:>14} {:>14} {:>12} {:>6}\n", "lambda", "B", "B(l+eps)", "max Q/B", "pass");
  for (const double lambda : cfg.lambda) {
    const auto c = uniform_bound_certificate(lambda, inputs, cfg.epsilon);
    for (const auto& l : c.links) t.add_row({lambda, l.n, l.name, l.left, l.right, l.margin()});
    err << fmt::format("{:>8g} {:>14.6g} {:>14.6g} {:>12.4g} {:>6}\n", lambda, c.bound, c.bound_epsilon,
                       c.worst_ratio, c.passed() ? "yes" : "no");
    summary.push_back({{"lambda", lambda},
                       {"bound", c.bound},
                       {"bound_epsilon", c.bound_epsilon},
                       {"epsilon", c.epsilon},
                       {"majorant_sup", c.majorant_sup},
                       {"c0_horizon_n", c.c0[0]},
                       {"c0_horizon_n_plus_1", c.c0[1]},
                       {"c0_variant", c.c0_variant},
                       {"c0_scan_n_max", c.c0_scan_n_max},
                       {"worst_ratio", c.worst_ratio},
                       {"passed", c.passed()}});
    if (!c.passed() && failure.empty()) failure = fmt::format("lambda = {}: {}", lambda, c.failure);
  }
  t.sort_rows(2);
  em.emit(t, {{"certificates", summary}});
  if (!failure.empty()) {
    err << "certificate failed: " << failure << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_theorem1(const RunConfig& cfg, const Emitter& em, std::ostream& err) {
  Table t{"theorem1", {"n", "lambda", "qn", "limit", "gap"}, {}, 12};
  std::string failure;
  for (const double lambda : cfg.lambda) {
    const auto r = theorem1_convergence(lambda, cfg.n, cfg.tol,
                                        cfg.mode == "log" ? QnMode::kLogSpace : QnMode::kExactRational);
    for (const auto& row : r.rows) t.add_row({row.n, lambda, row.qn.value, r.limit.value, row.gap});
    err << fmt::format("lambda {}: L = {:.10f}, gap ~ {:.4f} + {:.4f} n^-1/2 (R^2 = {:.4f}), inversions {}\n",
                       lambda, r.limit.value, r.fit.intercept, r.fit.slope, r.fit.r_squared, r.inversions);
    if (!r.gaps_monotone && failure.empty()) {
      failure = fmt::format("gap column is not nonincreasing at lambda = {}", lambda);
    }
  }
  t.sort_rows(2);
  em.emit(t, {{"tol", cfg.tol}});
  if (!failure.empty()) {
    err << "theorem1 failed: " << failure << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

void fill_defaults(RunConfig& c) {
  const auto& cmd = c.command;
  if (c.lambda.empty()) {
    if (cmd == "certificate") {
      c.lambda = {0.25, 0.5, 1.0, 2.0, 4.0};
    } else {
      c.lambda = {1.0};
    }
  }
  if (c.n.empty()) {
    if (cmd == "certificate") c.n = default_certificate_grid();
    if (cmd == "theorem1") c.n = theorem1_grid();
  }
  if (c.n_max == 0) {
    if (cmd == "bijection-check") c.n_max = 6;
    if (cmd == "lemma3-check") c.n_max = 10;
  }
  std::sort(c.n.begin(), c.n.end());
  c.n.erase(std::unique(c.n.begin(), c.n.end()), c.n.end());
}

}  // namespace

void RunConfig::validate() const {
  require(kCommands.contains(command), "unknown command '" + command + "'");
  require(format == "csv" || format == "json", "--format must be csv or json");
  require(mode == "exact" || mode == "log", "--mode must be exact or log");
  require(kind == "dyck" || kind == "bridge", "--kind must be dyck or bridge");
  require(tol > 0.0 && std::isfinite(tol), "--tol must be > 0");
  require(level > 0.0 && level < 1.0, "--level must lie in (0, 1)");
  require(epsilon >= 0.0 && std::isfinite(epsilon), "--epsilon must be >= 0");
  require(threads >= 1, "--threads must be >= 1");
  for (const auto v : n) require(v >= 1, "--n values must be >= 1");
  for (const auto l : lambda) require(l >= 0.0 && std::isfinite(l), "--lambda values must be finite and >= 0");
  for (const auto v : x) require(v > 0.0 && std::isfinite(v), "--x values must be > 0");
  if (command == "qn" || command == "mc") require(!n.empty(), "--n is required for " + command);
  if (command == "mc") require(n_samples >= 100, "--samples must be >= 100");
  if (command == "sample") {
    require(n.size() == 1, "sample takes exactly one --n");
    require(count >= 0, "--count must be >= 0");
  }
  if (command == "limit") require(x.empty() || lambda.size() <= 1, "limit takes either --x or --lambda, not both");
  if (command == "certificate") {
    for (const auto l : lambda) require(l > 0.0, "certificate needs --lambda > 0");
    require(!n.empty(), "certificate needs a nonempty --n grid");
  }
  if (command == "theorem1") require(n.size() >= 2, "theorem1 needs at least two --n values");
  if (command == "bijection-check") {
    require(n_max >= 0 && n_max <= 12, "--n-max must lie in [0, 12]");
    require(cardinality_max >= 0, "--cardinality-max must be >= 0");
  }
  if (command == "lemma3-check") require(n_max >= 1 && n_max <= 12, "--n-max must lie in [1, 12]");
}

nlohmann::json RunConfig::to_json() const {
  return {{"command", command}, {"n", n},         {"n_max", n_max},       {"cardinality_max", cardinality_max},
          {"lambda", lambda},   {"x", x},         {"seed", seed},         {"n_samples", n_samples},
          {"count", count},     {"tol", tol},     {"level", level},       {"epsilon", epsilon},
          {"threads", threads}, {"mode", mode},   {"kind", kind},         {"output", output},
          {"format", format}};
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig c;
  try {
    j.at("command").get_to(c.command);
    j.at("n").get_to(c.n);
    j.at("n_max").get_to(c.n_max);
    j.at("cardinality_max").get_to(c.cardinality_max);
    j.at("lambda").get_to(c.lambda);
    j.at("x").get_to(c.x);
    j.at("seed").get_to(c.seed);
    j.at("n_samples").get_to(c.n_samples);
    j.at("count").get_to(c.count);
    j.at("tol").get_to(c.tol);
    j.at("level").get_to(c.level);
    j.at("epsilon").get_to(c.epsilon);
    j.at("threads").get_to(c.threads);
    j.at("mode").get_to(c.mode);
    j.at("kind").get_to(c.kind);
    j.at("output").get_to(c.output);
    j.at("format").get_to(c.format);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed configuration: ") + e.what());
  }
  return c;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app{"Exact and Monte Carlo checks for the maximum of random Dyck paths", "dyckmax"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* s) {
    s->add_option("--format", c.format, "csv or json")->capture_default_str();
    s->add_option("-o,--output", c.output, "output file (default: standard output)");
  };
  auto n_list = [&](CLI::App* s, const char* help) { s->add_option("--n", c.n, help)->delimiter(','); };
  auto lambda_list = [&](CLI::App* s) { s->add_option("--lambda", c.lambda, "λ values")->delimiter(','); };
  auto seed = [&](CLI::App* s) { s->add_option("--seed", c.seed, "random seed")->capture_default_str(); };
  auto tol = [&](CLI::App* s) { s->add_option("--tol", c.tol, "tolerance")->capture_default_str(); };

  auto* qn = app.add_subcommand("qn", "exact Q_n(λ) over a grid");
  n_list(qn, "n values");
  lambda_list(qn);
  qn->add_option("--mode", c.mode, "exact or log")->capture_default_str();
  common(qn);

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of Q_n(λ)");
  n_list(mc, "n values");
  lambda_list(mc);
  mc->add_option("--samples", c.n_samples, "samples per point")->capture_default_str();
  mc->add_option("--level", c.level, "confidence level")->capture_default_str();
  mc->add_option("--threads", c.threads, "worker threads")->capture_default_str();
  seed(mc);
  common(mc);

  auto* sample = app.add_subcommand("sample", "uniform paths as U/D strings");
  n_list(sample, "semilength");
  sample->add_option("--count", c.count, "number of paths")->capture_default_str();
  sample->add_option("--kind", c.kind, "dyck or bridge")->capture_default_str();
  seed(sample);
  sample->add_option("-o,--output", c.output, "output file (default: standard output)");

  auto* limit = app.add_subcommand("limit", "Chung CDF table (--x) or limit moments (--lambda)");
  limit->add_option("--x", c.x, "x values")->delimiter(',');
  lambda_list(limit);
  tol(limit);
  common(limit);

  auto* bij = app.add_subcommand("bijection-check", "exhaustive check of the rotation bijection");
  bij->add_option("--n-max", c.n_max, "largest n enumerated (default 6)");
  bij->add_option("--cardinality-max", c.cardinality_max, "largest n for the counting identity")
      ->capture_default_str();
  common(bij);

  auto* l3 = app.add_subcommand("lemma3-check", "bridge vs free-walk prefix events, exhaustively");
  l3->add_option("--n-max", c.n_max, "largest n enumerated (default 10)");
  common(l3);

  auto* cert = app.add_subcommand("certificate", "uniform bound certificate");
  lambda_list(cert);
  n_list(cert, "n grid (default 1..50,64,128,256,512,1024)");
  cert->add_option("--epsilon", c.epsilon, "moment margin ε")->capture_default_str();
  common(cert);

  auto* th = app.add_subcommand("theorem1", "Q_n(λ) against the limit moment");
  lambda_list(th);
  n_list(th, "n grid (default 64,128,256,512,1024)");
  th->add_option("--mode", c.mode, "exact or log")->capture_default_str();
  tol(th);
  common(th);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  for (auto* s : app.get_subcommands()) c.command = s->get_name();
  require(c.command != "limit" || c.x.empty() || c.lambda.empty(), "limit takes either --x or --lambda, not both");
  fill_defaults(c);
  c.validate();
  return c;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const Emitter em{cfg, out};
  const auto& cmd = cfg.command;
  if (cmd == "qn") return cmd_qn(cfg, em);
  if (cmd == "mc") return cmd_mc(cfg, em);
  if (cmd == "sample") return cmd_sample(cfg, em);
  if (cmd == "limit") return cmd_limit(cfg, em);
  if (cmd == "bijection-check") return cmd_bijection(cfg, em, err);
  if (cmd == "lemma3-check") return cmd_lemma3(cfg, em, err);
  if (cmd == "certificate") return cmd_certificate(cfg, em, err);
  return cmd_theorem1(cfg, em, err);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  }
  try {
    return run(cfg, out, err);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace dyck::cli
