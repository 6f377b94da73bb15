#include "rrts/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rrts/bench.hpp"
#include "rrts/svg_render.hpp"

namespace rrts {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

struct PlannerFlags {
  std::uint64_t max_iters = 50'000;
  std::uint64_t max_nodes = 5'000'000;
  double gamma = 0.0;
  double eta = 0.0;
  double cc_step = 0.0;

  PlannerConfig config() const {
    PlannerConfig c;
    c.max_iterations = max_iters;
    c.max_nodes = max_nodes;
    c.gamma = gamma;
    c.eta = eta;
    return c;
  }
};

void add_planner_flags(CLI::App& cmd, PlannerFlags& flags) {
  cmd.add_option("--max-iters", flags.max_iters, "Iteration budget per run");
  cmd.add_option("--max-nodes", flags.max_nodes, "Node cap per run");
  cmd.add_option("--gamma", flags.gamma, "Near-radius constant (default derived from bounds)");
  cmd.add_option("--eta", flags.eta, "Steering step (default 5% of bounds diagonal)");
  cmd.add_option("--cc-step", flags.cc_step, "Collision-check resolution override");
}

Environment resolve_environment(const std::string& scenario, const std::string& env_path,
                                double cc_step, std::string& name_out) {
  Environment env;
  if (!env_path.empty()) {
    env = load_environment(read_file(env_path));
    name_out = env_path;
  } else if (!scenario.empty()) {
    env = builtin_scenario(scenario);
    name_out = scenario;
  } else {
    throw CLI::ValidationError("either --scenario or --env is required");
  }
  if (cc_step > 0.0) env.cc_step = cc_step;
  return env;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

ordered_json env_to_json(const Environment& env) {
  ordered_json j;
  j["dim"] = env.dim;
  j["bounds"] = {{"lo", env.bounds.lo}, {"hi", env.bounds.hi}};
  j["start"] = env.start;
  j["goal"] = {{"center", env.goal.center}, {"radius", env.goal.radius}};
  j["obstacles"] = ordered_json::array();
  for (const Obstacle& obstacle : env.obstacles) {
    if (const Box* box = std::get_if<Box>(&obstacle)) {
      j["obstacles"].push_back({{"type", "aabb"}, {"min", box->lo}, {"max", box->hi}});
    } else {
      const Ball& ball = std::get<Ball>(obstacle);
      j["obstacles"].push_back(
          {{"type", "sphere"}, {"center", ball.center}, {"radius", ball.radius}});
    }
  }
  if (env.cc_step > 0.0) j["cc_step"] = env.cc_step;
  return j;
}

ordered_json snapshot_to_json(const std::vector<Tree::SnapshotRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const Tree::SnapshotRow& row : rows) {
    arr.push_back(
        {{"id", row.id}, {"coords", row.coords}, {"parent", row.parent}, {"cost", row.cost}});
  }
  return arr;
}

std::string render_state_svg(const Environment& env,
                             const std::vector<std::vector<Tree::SnapshotRow>>& snapshots,
                             const PathSolution* sigma_f, std::uint64_t iteration,
                             std::optional<double> cost) {
  return render_2d(env, snapshots, sigma_f, iteration, cost);
}

int cmd_run(const std::string& scenario, const std::string& env_path, const PlannerFlags& flags,
            const std::string& algo, std::uint64_t seed, double ref_cost, double eps_opt,
            const std::string& out_path, const std::string& svg_path) {
  std::string name;
  const Environment env = resolve_environment(scenario, env_path, flags.cc_step, name);
  const PlannerKind kind = planner_kind_from_string(algo);

  TrialOptions options;
  options.planner = flags.config();
  options.planner.seed = seed;
  std::optional<ConvergencePolicy> policy;
  if (ref_cost > 0.0) policy = ConvergencePolicy{ref_cost, eps_opt};

  PlannerState state;
  const TrialRecord record = run_trial(env, name, kind, seed, options, policy, &state);
  std::cout << trial_record_json(record) << "\n";

  std::vector<std::vector<Tree::SnapshotRow>> snapshots;
  for (const Tree& tree : state.trees) snapshots.push_back(tree.snapshot());

  if (!out_path.empty()) {
    ordered_json doc;
    doc["record"] = nlohmann::json::parse(trial_record_json(record));
    doc["environment"] = env_to_json(env);
    doc["iteration"] = state.iteration;
    doc["trees"] = ordered_json::array();
    for (const auto& snapshot : snapshots) doc["trees"].push_back(snapshot_to_json(snapshot));
    if (state.sigma_f) {
      doc["sigma_f"] = {{"cost", state.sigma_f->cost}, {"states", state.sigma_f->states}};
    } else {
      doc["sigma_f"] = nullptr;
    }
    write_file(out_path, doc.dump(2) + "\n");
  }

  if (!svg_path.empty()) {
    const PathSolution* path = state.sigma_f ? &*state.sigma_f : nullptr;
    std::optional<double> cost;
    if (state.sigma_f) cost = state.sigma_f->cost;
    write_file(svg_path, render_state_svg(env, snapshots, path, state.iteration, cost));
  }
  return 0;
}

int cmd_bench(const std::string& scenarios_csv, const std::string& env_path,
              const PlannerFlags& flags, const std::string& algos_csv, std::uint64_t trials,
              std::uint64_t seed_base, double eps_opt, const std::string& out_path,
              unsigned workers) {
  if (trials == 0) throw CLI::ValidationError("--trials must be at least 1");
  std::vector<std::pair<std::string, Environment>> scenarios;
  if (!env_path.empty()) {
    std::string name;
    scenarios.emplace_back("", resolve_environment("", env_path, flags.cc_step, name));
    scenarios.back().first = name;
  } else {
    for (const std::string& name : split_list(scenarios_csv)) {
      std::string resolved;
      scenarios.emplace_back(name, resolve_environment(name, "", flags.cc_step, resolved));
    }
  }
  if (scenarios.empty()) throw CLI::ValidationError("no scenarios given");

  std::vector<PlannerKind> kinds;
  for (const std::string& algo : split_list(algos_csv)) {
    kinds.push_back(planner_kind_from_string(algo));
  }
  if (kinds.empty()) throw CLI::ValidationError("no algorithms given");

  TrialOptions options;
  options.planner = flags.config();

  // Reference costs come from a long deterministic run per scenario.
  std::map<std::string, double> refs;
  for (const auto& [name, env] : scenarios) {
    std::cerr << "computing reference cost for " << name << "...\n";
    refs[name] = reference_cost(env, options.planner);
    std::cerr << "  C_ref(" << name << ") = " << refs[name] << "\n";
  }

  struct Task {
    std::size_t scenario_idx;
    PlannerKind kind;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (std::size_t s = 0; s < scenarios.size(); ++s) {
    for (const PlannerKind kind : kinds) {
      for (std::uint64_t t = 0; t < trials; ++t) {
        tasks.push_back({s, kind, seed_base + t});
      }
    }
  }

  std::vector<TrialRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& task = tasks[i];
      const auto& [name, env] = scenarios[task.scenario_idx];
      records[i] = run_trial(env, name, task.kind, task.seed, options,
                             ConvergencePolicy{refs.at(name), eps_opt});
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<SummaryRow> rows;
  for (std::size_t s = 0; s < scenarios.size(); ++s) {
    for (const PlannerKind kind : kinds) {
      std::vector<TrialRecord> group;
      for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (tasks[i].scenario_idx == s && tasks[i].kind == kind) group.push_back(records[i]);
      }
      SummaryRow row = aggregate(group);
      row.reference_cost = refs.at(scenarios[s].first);
      rows.push_back(std::move(row));
    }
  }

  const std::string csv = summary_csv(rows);
  RunMetadata metadata;
  metadata.gamma = flags.gamma;
  metadata.eta = flags.eta;
  metadata.cc_step = flags.cc_step;
  metadata.eps_opt = eps_opt;
  metadata.max_iterations = flags.max_iters;
  metadata.max_nodes = flags.max_nodes;
  metadata.stop_on_converge = options.stop_on_converge;

  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_file(out_path, csv);
    std::string json_path = out_path;
    const auto dot = json_path.find_last_of('.');
    json_path = (dot == std::string::npos ? json_path : json_path.substr(0, dot)) + ".json";
    write_file(json_path, trial_log_json(records, metadata, scenarios.front().second.dim));
    std::cout << summary_table(rows);
  }
  return 0;
}

int cmd_render(const std::string& in_path, const std::string& svg_path) {
  const auto doc = nlohmann::json::parse(read_file(in_path));
  if (!doc.contains("environment") || !doc.contains("trees")) {
    throw std::runtime_error("render: '" + in_path + "' is not a saved run document");
  }
  const Environment env = load_environment(doc["environment"].dump());
  if (env.dim != 2) throw CLI::ValidationError("render: only 2-D runs can be rendered");

  std::vector<std::vector<Tree::SnapshotRow>> snapshots;
  for (const auto& tree : doc["trees"]) {
    std::vector<Tree::SnapshotRow> rows;
    for (const auto& row : tree) {
      rows.push_back({row.at("id").get<VertexId>(), row.at("coords").get<Config>(),
                      row.at("parent").get<VertexId>(), row.at("cost").get<double>()});
    }
    snapshots.push_back(std::move(rows));
  }

  PathSolution path;
  const PathSolution* path_ptr = nullptr;
  std::optional<double> cost;
  if (doc.contains("sigma_f") && !doc["sigma_f"].is_null()) {
    path.cost = doc["sigma_f"].at("cost").get<double>();
    for (const auto& s : doc["sigma_f"].at("states")) path.states.push_back(s.get<Config>());
    path_ptr = &path;
    cost = path.cost;
  }
  const std::uint64_t iteration = doc.value("iteration", std::uint64_t{0});
  write_file(svg_path, render_state_svg(env, snapshots, path_ptr, iteration, cost));
  return 0;
}

int cmd_compare(const std::vector<std::string>& in_paths, const std::string& out_path) {
  std::vector<TrialRecord> all;
  for (const std::string& path : in_paths) {
    auto records = trial_log_from_json(read_file(path));
    all.insert(all.end(), records.begin(), records.end());
  }
  if (all.empty()) throw std::runtime_error("compare: no trial records found");

  std::map<std::pair<std::string, std::string>, std::vector<TrialRecord>> groups;
  for (TrialRecord& record : all) {
    groups[{record.scenario, record.planner}].push_back(std::move(record));
  }
  std::vector<SummaryRow> rows;
  for (const auto& [key, group] : groups) rows.push_back(aggregate(group));

  std::cout << summary_table(rows);
  if (!out_path.empty()) write_file(out_path, summary_csv(rows));
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  CLI::App app{"Sampling-based optimal motion planners and benchmark harness"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "Execute a single trial and print its record");
  std::string run_scenario, run_env, run_algo = "ib-rrt-star", run_out, run_svg;
  PlannerFlags run_flags;
  std::uint64_t run_seed = 0;
  double run_ref_cost = 0.0, run_eps = 0.05;
  run_cmd->add_option("--scenario", run_scenario, "Builtin scenario name");
  run_cmd->add_option("--env", run_env, "Environment JSON file");
  run_cmd->add_option("--algo", run_algo, "Planner: rrt-star|b-rrt-star|ib-rrt-star|birrt");
  run_cmd->add_option("--seed", run_seed, "Random seed");
  run_cmd->add_option("--ref-cost", run_ref_cost, "Reference cost enabling convergence detection");
  run_cmd->add_option("--eps-opt", run_eps, "Convergence tolerance");
  run_cmd->add_option("--out", run_out, "Write the full run document (JSON)");
  run_cmd->add_option("--svg", run_svg, "Render the final trees (2-D only)");
  add_planner_flags(*run_cmd, run_flags);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Multi-seed, multi-planner benchmark matrix");
  std::string bench_scenarios, bench_env, bench_algos = "ib-rrt-star,b-rrt-star,rrt-star";
  std::string bench_out;
  PlannerFlags bench_flags;
  std::uint64_t bench_trials = 10, bench_seed_base = 1;
  double bench_eps = 0.05;
  unsigned bench_workers = 1;
  bench_cmd->add_option("--scenario", bench_scenarios, "Comma-separated builtin scenarios");
  bench_cmd->add_option("--env", bench_env, "Environment JSON file");
  bench_cmd->add_option("--algos", bench_algos, "Comma-separated planner list");
  bench_cmd->add_option("--trials", bench_trials, "Seeds per (scenario, planner)");
  bench_cmd->add_option("--seed-base", bench_seed_base, "First seed value");
  bench_cmd->add_option("--eps-opt", bench_eps, "Convergence tolerance");
  bench_cmd->add_option("--out", bench_out, "CSV output path (JSON log written alongside)");
  bench_cmd->add_option("--workers", bench_workers, "Parallel trial workers");
  add_planner_flags(*bench_cmd, bench_flags);

  // render
  auto* render_cmd = app.add_subcommand("render", "Render a saved run document to SVG");
  std::string render_in, render_svg = "run.svg";
  render_cmd->add_option("--in", render_in, "Saved run document from `run --out`")->required();
  render_cmd->add_option("--svg", render_svg, "Output SVG path");

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "Summarize saved trial logs side by side");
  std::vector<std::string> compare_in;
  std::string compare_out;
  compare_cmd->add_option("--in", compare_in, "Trial log JSON (repeatable)")->required();
  compare_cmd->add_option("--out", compare_out, "Optional CSV output path");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (run_cmd->parsed()) {
      return cmd_run(run_scenario, run_env, run_flags, run_algo, run_seed, run_ref_cost, run_eps,
                     run_out, run_svg);
    }
    if (bench_cmd->parsed()) {
      return cmd_bench(bench_scenarios, bench_env, bench_flags, bench_algos, bench_trials,
                       bench_seed_base, bench_eps, bench_out, bench_workers);
    }
    if (render_cmd->parsed()) return cmd_render(render_in, render_svg);
    if (compare_cmd->parsed()) return cmd_compare(compare_in, compare_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace rrts
