// Copyright 2026 The hypermc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypermc/io/cli.hpp"

#include <cmath>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hypermc/error.hpp"
#include "hypermc/experiments/harness.hpp"
#include "hypermc/io/formats.hpp"
#include "hypermc/io/run_config.hpp"
#include "hypermc/mch/mch.hpp"
#include "hypermc/oracle.hpp"
#include "hypermc/synthgen.hpp"
#include "hypermc/theory.hpp"

namespace hypermc::io {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Globals {
  std::optional<std::uint64_t> seed;
  std::string config;
  std::string out;
  std::optional<int> threads;
  std::string format;
};

struct Context {
  RunConfig cfg;
  fs::path out_dir;
  bool json_output = false;
  std::ostream& out;
};

Context make_context(const Globals& g, std::ostream& out) {
  Context ctx{RunConfig{}, "out", false, out};
  if (!g.config.empty()) {
    const fs::path path(g.config);
    ctx.cfg = parse_run_config(load_config_file(path), path.parent_path());
  }
  if (g.seed) ctx.cfg.seed = *g.seed;
  if (g.threads) ctx.cfg.threads = *g.threads;
  if (!g.format.empty()) ctx.cfg.format = g.format;
  ctx.out_dir = g.out.empty() ? ctx.cfg.out_dir : fs::path(g.out);
  ctx.json_output = ctx.cfg.format == "json";
  return ctx;
}

const ModelParams& need_model(const Context& ctx, std::string_view command) {
  if (!ctx.cfg.model) {
    fail_validation(std::string(command) + " needs --config with a [model] table");
  }
  return *ctx.cfg.model;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_rows(const Context& ctx, const std::vector<exp::SweepRow>& rows,
                std::string_view axis, std::string_view command) {
  if (ctx.json_output) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"axis", std::string(axis)},
                     {"value", r.axis_value},
                     {"variant", std::string(exp::to_string(r.variant))},
                     {"n_trials", r.n_trials},
                     {"failures", r.failures},
                     {"err_prob", r.err_prob},
                     {"err_ci", r.err_ci},
                     {"mean_mae", r.mean_mae},
                     {"mae_sd", r.mae_sd},
                     {"mean_cluster_error", r.mean_cluster_error},
                     {"solver_errors", r.solver_errors}});
    }
    write_file(ctx.out_dir / "sweep.json", dump(arr));
  } else {
    write_file(ctx.out_dir / "sweep.csv", exp::format_sweep_csv(rows));
  }
  write_file(ctx.out_dir / "manifest.json", dump(run_manifest(ctx.cfg, command)));
  ctx.out << exp::format_sweep_csv(rows);
  ctx.out << "wrote " << (ctx.out_dir / (ctx.json_output ? "sweep.json" : "sweep.csv")).string()
          << " and " << (ctx.out_dir / "manifest.json").string() << "\n";
}

int cmd_generate(const Context& ctx) {
  const ModelParams& params = need_model(ctx, "generate");
  const GenSeed seed{ctx.cfg.seed, 0};
  const auto inst = synth::gen_instance(params, seed);
  write_file(ctx.out_dir / "observed.txt", format_observed(inst.observed));
  write_file(ctx.out_dir / "truth.txt", format_completed(inst.ratings.dense()));
  write_file(ctx.out_dir / "network.txt", format_hyperedge_list(inst.bundle, inst.clusters));
  write_file(ctx.out_dir / "clusters.txt", format_clusters(inst.clusters));
  write_file(ctx.out_dir / "manifest.json", dump(run_manifest(ctx.cfg, "generate")));
  ctx.out << "generated n=" << params.n << " m=" << params.m << " observed="
          << inst.observed.observed_count() << " hyperedges=" << inst.bundle.total_edges()
          << " into " << ctx.out_dir.string() << "\n";
  return 0;
}

struct SolveArgs {
  std::string observed;
  std::string network;
  int K = 0;
  std::string weights;
  std::optional<double> c;
  std::optional<int> iterations;
};

int cmd_solve(const Context& ctx, const SolveArgs& a) {
  const auto u = parse_observed(read_file(a.observed));
  const auto net = parse_hyperedge_list(read_file(a.network));
  const int K = a.K > 0 ? a.K : (ctx.cfg.model ? ctx.cfg.model->K : 0);
  require(K >= 2, "solve needs --K (or a [model] table giving K)");
  if (net.bundle.n() != u.n()) {
    fail_validation("network has n = " + std::to_string(net.bundle.n()) +
                    " but the matrix has n = " + std::to_string(u.n()));
  }
  exp::SolverSettings solver = ctx.cfg.solver;
  const bool configured = ctx.cfg.model.has_value();
  if (!configured && solver.weights == exp::WeightSource::kTrue) {
    solver.weights = exp::WeightSource::kEstimated;
  }
  if (!a.weights.empty()) solver.weights = exp::parse_weight_source(a.weights);
  if (a.c) {
    solver.fixed_c = *a.c;
    if (a.weights.empty()) solver.weights = exp::WeightSource::kFixed;
  }
  if (a.iterations) solver.iterations = *a.iterations;

  mch::MchOptions opt;
  opt.iterations = solver.iterations;
  opt.spectral = solver.spectral;
  opt.spectral.seed = GenSeed{ctx.cfg.seed, 0}.derive(Stream::kSolver);
  if (solver.weights == exp::WeightSource::kTrue) {
    require(configured, "true weights need a [model] table");
    opt.true_params = ctx.cfg.model;
  } else if (solver.weights == exp::WeightSource::kFixed) {
    std::map<int, double> c;
    for (const auto& [d, layer] : net.bundle.layers()) c[d] = solver.fixed_c;
    opt.fixed_c = c;
  }
  const auto result = mch::run_mch(net.bundle, u, K, opt);

  json report;
  report["n"] = u.n();
  report["m"] = u.m();
  report["K"] = K;
  report["weights"] = std::string(exp::to_string(solver.weights));
  report["iterations"] = result.config.T;
  report["iterations_run"] = result.refinement.iterations;
  report["converged"] = result.refinement.converged;
  report["halted_on_empty"] = result.refinement.halted_on_empty;
  json c = json::object();
  for (const auto& [d, v] : result.config.c) c[std::to_string(d)] = v;
  report["c"] = c;
  if (result.estimates) {
    const auto& e = *result.estimates;
    json alpha = json::object(), beta = json::object();
    for (const auto& [d, v] : e.alpha_raw) alpha[std::to_string(d)] = v;
    for (const auto& [d, v] : e.beta_raw) beta[std::to_string(d)] = v;
    report["estimates"] = {{"theta", e.theta_raw}, {"alpha", alpha}, {"beta", beta}};
  }
  report["cluster_sizes"] = result.clusters.sizes();
  report["network_duplicates"] = net.duplicates;

  write_file(ctx.out_dir / "completed.txt", format_completed(result.completed));
  write_file(ctx.out_dir / "clusters.txt", format_clusters(result.clusters));
  write_file(ctx.out_dir / "solve.json", dump(report));
  if (ctx.json_output) {
    ctx.out << dump(report);
  } else {
    ctx.out << "solved n=" << u.n() << " m=" << u.m() << " K=" << K << " in "
            << result.refinement.iterations << " refinement passes; wrote "
            << (ctx.out_dir / "completed.txt").string() << "\n";
  }
  return 0;
}

int cmd_sweep(const Context& ctx) {
  if (ctx.cfg.semi_real) {
    const auto& s = *ctx.cfg.semi_real;
    const auto net = parse_hyperedge_list(read_file(s.network));
    if (!net.labels) fail_validation("semi_real.network: file has no '#labels' section");
    exp::SemiRealSpec spec;
    spec.network = net.bundle;
    spec.classes = *net.labels;
    spec.m = s.m;
    spec.gamma = s.gamma;
    spec.theta = s.theta;
    spec.p = s.p;
    spec.q_values = s.q;
    spec.trials = s.trials;
    spec.master_seed = ctx.cfg.seed;
    spec.variants = s.variants;
    spec.solver = ctx.cfg.solver;
    spec.threads = ctx.cfg.threads;
    write_rows(ctx, exp::semi_real_pipeline(spec), "q", "sweep");
    return 0;
  }
  if (!ctx.cfg.sweep) fail_validation("sweep needs --config with a [sweep] or [semi_real] table");
  const auto spec = make_sweep_spec(ctx.cfg);
  write_rows(ctx, exp::run_sweep(spec), exp::to_string(spec.axis), "sweep");
  return 0;
}

int cmd_threshold(const Context& ctx) {
  const ModelParams& params = need_model(ctx, "threshold");
  const auto q = theory::info_quantities(params);
  json j;
  j["p_star"] = q.threshold.p_star;
  j["g_star"] = q.g_star;
  j["regime"] = std::string(theory::to_string(q.threshold.regime));
  j["cluster_term"] = q.threshold.cluster_term;
  j["vector_term"] = q.threshold.vector_term;
  j["clamped"] = q.threshold.clamped;
  j["i_theta"] = q.i_theta;
  j["i_h"] = q.i_h;
  json layers = json::object();
  for (const auto& [d, v] : q.i_d) layers[std::to_string(d)] = v;
  j["i_d"] = layers;
  j["sample_complexity"] = q.sample_complexity;
  j["gain_kink"] = theory::gain_kink(params.n, params.m, params.K, params.gamma);
  if (ctx.json_output) {
    ctx.out << dump(j);
    return 0;
  }
  std::ostringstream s;
  s.precision(12);
  s << "quantity,value\n";
  for (const char* key : {"p_star", "g_star", "cluster_term", "vector_term", "i_theta", "i_h",
                          "sample_complexity", "gain_kink"}) {
    s << key << ',' << j[key].get<double>() << '\n';
  }
  for (const auto& [d, v] : q.i_d) s << "i_" << d << ',' << v << '\n';
  s << "regime," << j["regime"].get<std::string>() << '\n';
  s << "clamped," << (q.threshold.clamped ? "true" : "false") << '\n';
  ctx.out << s.str();
  return 0;
}

int cmd_oracle_check(const Context& ctx, int trials) {
  ModelParams params;
  if (ctx.cfg.model) {
    params = *ctx.cfg.model;
  } else {
    params.n = 6;
    params.m = 4;
    params.K = 2;
    params.gamma = 0.5;
    params.theta = 0.05;
    params.p = 0.9;
    params.W = 2;
    params.alpha[2] = 0.9;
    params.beta[2] = 0.1;
  }
  params.validate();
  const auto w = oracle::LikelihoodWeights::from_params(params);
  int attained = 0;
  std::ostringstream rows;
  rows.precision(12);
  rows << "trial,mch_value,ml_value,attained,ml_ties\n";
  for (int t = 0; t < trials; ++t) {
    const GenSeed seed{ctx.cfg.seed, static_cast<std::uint64_t>(t)};
    const auto inst = synth::gen_instance(params, seed);
    mch::MchOptions opt;
    opt.true_params = params;
    opt.spectral.seed = seed.derive(Stream::kSolver);
    const auto result = mch::run_mch(inst.bundle, inst.observed, params.K, opt);
    const double mch_value = oracle::log_likelihood_rel({result.clusters, result.vectors},
                                                        inst.bundle, inst.observed, w);
    const auto ml = oracle::ml_brute_force(inst.bundle, inst.observed, params.K, params.m,
                                           params.gamma, w);
    const bool ok = mch_value >= ml.value - 1e-9 * std::max(1.0, std::abs(ml.value));
    attained += ok;
    rows << t << ',' << mch_value << ',' << ml.value << ',' << (ok ? 1 : 0) << ',' << ml.ties
         << '\n';
  }
  write_file(ctx.out_dir / "oracle_check.csv", rows.str());
  ctx.out << "oracle-check: MCH attained the brute-force optimum in " << attained << "/" << trials
          << " instances (n=" << params.n << ", m=" << params.m << ", K=" << params.K
          << "); details in " << (ctx.out_dir / "oracle_check.csv").string() << "\n";
  return 0;
}

int cmd_expand(const Context& ctx, const std::string& network) {
  const auto net = parse_hyperedge_list(read_file(network));
  const auto expanded = clique_expand(net.bundle);
  write_file(ctx.out_dir / "expanded.txt", format_hyperedge_list(expanded, net.labels));
  ctx.out << "expanded " << net.bundle.total_edges() << " hyperedges into "
          << expanded.layer(2).size() << " edges; wrote "
          << (ctx.out_dir / "expanded.txt").string() << "\n";
  return 0;
}

int cmd_degrade(const Context& ctx, const std::string& network, double q) {
  const auto net = parse_hyperedge_list(read_file(network));
  const auto kept =
      exp::degrade_network(net.bundle, q, GenSeed{ctx.cfg.seed, 0}.derive(Stream::kDegrade));
  write_file(ctx.out_dir / "degraded.txt", format_hyperedge_list(kept, net.labels));
  ctx.out << "kept " << kept.total_edges() << " of " << net.bundle.total_edges()
          << " hyperedges; wrote " << (ctx.out_dir / "degraded.txt").string() << "\n";
  return 0;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix completion with graph and hypergraph side information", "hypermc"};
  app.set_version_flag("--version", std::string(build_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "master seed");
  app.add_option("--config", g.config, "run configuration (TOML subset or .json)");
  app.add_option("--out", g.out, "output directory");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1, 1024));
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));

  auto* generate = app.add_subcommand("generate", "write a synthetic instance from [model]");
  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "run MCH on a matrix file and a network file");
  solve->add_option("--observed", solve_args.observed, "observed matrix file")->required();
  solve->add_option("--network", solve_args.network, "hyperedge list file")->required();
  solve->add_option("--K", solve_args.K, "number of clusters");
  solve->add_option("--weights", solve_args.weights, "true, estimated or fixed");
  solve->add_option("--c", solve_args.c, "fixed weight for every layer");
  solve->add_option("--iterations", solve_args.iterations, "refinement passes");
  auto* sweep = app.add_subcommand("sweep", "run a Monte Carlo sweep from [sweep] or [semi_real]");
  auto* threshold = app.add_subcommand("threshold", "print p*, g* and the quality terms");
  int oracle_trials = 100;
  auto* oracle_check =
      app.add_subcommand("oracle-check", "compare MCH with brute-force ML on tiny instances");
  oracle_check->add_option("--trials", oracle_trials, "instances")->check(CLI::Range(1, 100000));
  std::string expand_network;
  auto* expand = app.add_subcommand("expand", "clique-expand a network file");
  expand->add_option("--network", expand_network, "hyperedge list file")->required();
  std::string degrade_network_file;
  double q = 1.0;
  auto* degrade = app.add_subcommand("degrade", "keep each hyperedge with probability q");
  degrade->add_option("--network", degrade_network_file, "hyperedge list file")->required();
  degrade->add_option("--q", q, "retention probability")->required()->check(CLI::Range(0.0, 1.0));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << build_version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    const Context ctx = make_context(g, out);
    if (generate->parsed()) return cmd_generate(ctx);
    if (solve->parsed()) return cmd_solve(ctx, solve_args);
    if (sweep->parsed()) return cmd_sweep(ctx);
    if (threshold->parsed()) return cmd_threshold(ctx);
    if (oracle_check->parsed()) return cmd_oracle_check(ctx, oracle_trials);
    if (expand->parsed()) return cmd_expand(ctx, expand_network);
    if (degrade->parsed()) return cmd_degrade(ctx, degrade_network_file, q);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << app.help();
  return 1;
}

}  // namespace hypermc::io
