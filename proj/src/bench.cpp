#include "rrts/bench.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace rrts {

namespace {

// Nominal per-primitive costs in nanoseconds; the absolute scale is arbitrary,
// only ratios and reproducibility matter.
constexpr double kSampleNs = 150.0;
constexpr double kNearestNs = 400.0;
constexpr double kNearNs = 600.0;
constexpr double kCollisionNs = 250.0;
constexpr double kSteerNs = 50.0;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

double estimated_seconds(const OpCounters& ops) {
  const double ns = static_cast<double>(ops.sample) * kSampleNs +
                    static_cast<double>(ops.nearest) * kNearestNs +
                    static_cast<double>(ops.near) * kNearNs +
                    static_cast<double>(ops.collision) * kCollisionNs +
                    static_cast<double>(ops.steer) * kSteerNs;
  return ns * 1e-9;
}

std::uint64_t node_bytes(int dim) {
  // coordinates + parent link + cached cost + index slot + child bookkeeping
  return 8ull * dim + 40ull;
}

double reference_cost(const Environment& env, const PlannerConfig& base_config,
                      PlannerKind kind, std::uint64_t seed) {
  PlannerConfig config = base_config;
  config.seed = seed;
  config.max_iterations = base_config.max_iterations * 10;
  const PlannerState state = run(kind, config, env);
  if (!state.sigma_f) {
    throw std::runtime_error("reference_cost: reference run found no solution");
  }
  return state.sigma_f->cost;
}

TrialRecord run_trial(const Environment& env, const std::string& scenario_name,
                      PlannerKind kind, std::uint64_t seed, const TrialOptions& options,
                      const std::optional<ConvergencePolicy>& policy,
                      PlannerState* keep_state) {
  if (policy && !(policy->reference_cost > 0.0)) {
    throw std::invalid_argument("run_trial: reference cost must be positive");
  }
  PlannerConfig config = options.planner;
  config.seed = seed;

  std::optional<TrialEvent> converged;
  StepObserver watch;
  if (policy) {
    const double threshold = (1.0 + policy->eps_opt) * policy->reference_cost;
    watch = [&converged, threshold, &options](const Planner& planner, const IterationOutcome&) {
      const PlannerState& s = planner.state();
      if (!converged && s.best_cost() <= threshold) {
        converged = TrialEvent{s.iteration, estimated_seconds(s.ops), s.best_cost()};
        return options.stop_on_converge;
      }
      return false;
    };
  }

  PlannerState state = run(kind, config, env, watch);

  TrialRecord record;
  record.scenario = scenario_name;
  record.planner = std::string(to_string(kind));
  record.seed = seed;
  if (state.first_solution) {
    record.first_solution = TrialEvent{state.first_solution->iteration,
                                       estimated_seconds(state.first_solution->ops),
                                       state.first_solution->cost};
  }
  record.converged = converged;
  if (state.sigma_f) record.final_cost = state.sigma_f->cost;
  record.node_count = state.node_count();
  record.memory_bytes_estimate = record.node_count * node_bytes(env.dim);
  record.op_counters = state.ops;
  record.capped = state.capped;
  if (keep_state) *keep_state = std::move(state);
  return record;
}

SummaryRow aggregate(std::span<const TrialRecord> trials) {
  if (trials.empty()) throw std::invalid_argument("aggregate: no trials");
  SummaryRow row;
  row.scenario = trials.front().scenario;
  row.planner = trials.front().planner;
  row.trials = trials.size();

  double i_sum = 0.0;
  double t_sum = 0.0;
  std::uint64_t converged_count = 0;
  for (const TrialRecord& trial : trials) {
    if (trial.scenario != row.scenario || trial.planner != row.planner) {
      throw std::invalid_argument("aggregate: trials mix scenarios or planners");
    }
    if (!trial.converged) {
      ++row.fail;
      continue;
    }
    const TrialEvent& e = *trial.converged;
    ++converged_count;
    i_sum += static_cast<double>(e.iteration);
    t_sum += e.seconds;
    row.i_min = row.i_min ? std::min(*row.i_min, e.iteration) : e.iteration;
    row.i_max = row.i_max ? std::max(*row.i_max, e.iteration) : e.iteration;
    row.t_min = row.t_min ? std::min(*row.t_min, e.seconds) : e.seconds;
    row.t_max = row.t_max ? std::max(*row.t_max, e.seconds) : e.seconds;
  }
  if (converged_count > 0) {
    row.i_avg = i_sum / static_cast<double>(converged_count);
    row.t_avg = t_sum / static_cast<double>(converged_count);
  }
  return row;
}

double convergence_rate(double c_init, double c_star) {
  if (!(c_star > 0.0)) throw std::invalid_argument("convergence_rate: c_star must be positive");
  if (c_init < c_star) {
    throw std::invalid_argument("convergence_rate: initial cost below final cost");
  }
  return (c_init - c_star) / c_star;
}

std::vector<double> op_count_ratio(std::span<const std::uint32_t> a,
                                   std::span<const std::uint32_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("op_count_ratio: length mismatch");
  std::vector<double> out;
  out.reserve(a.size());
  double sum_a = 0.0;
  double sum_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum_a += a[i];
    sum_b += b[i];
    if (sum_b > 0.0) out.push_back(sum_a / sum_b);
  }
  return out;
}

std::string summary_csv(std::span<const SummaryRow> rows) {
  std::string out = "scenario,planner,i_min,i_max,i_avg,t_min,t_max,t_avg,C,fail\n";
  char buf[256];
  for (const SummaryRow& row : rows) {
    out += row.scenario + "," + row.planner + ",";
    if (row.i_min) {
      std::snprintf(buf, sizeof(buf), "%" PRIu64 ",%" PRIu64 ",%.1f,", *row.i_min, *row.i_max,
                    *row.i_avg);
      out += buf;
      std::snprintf(buf, sizeof(buf), "%.6g,%.6g,%.6g,", *row.t_min, *row.t_max, *row.t_avg);
      out += buf;
    } else {
      out += ",,,,,,";
    }
    std::snprintf(buf, sizeof(buf), "%.6g,%" PRIu64 "\n", row.reference_cost, row.fail);
    out += buf;
  }
  return out;
}

std::string summary_table(std::span<const SummaryRow> rows) {
  char buf[512];
  std::string out;
  std::snprintf(buf, sizeof(buf), "%-16s %-12s %10s %10s %12s %10s %10s %10s %10s %5s\n",
                "scenario", "planner", "i_min", "i_max", "i_avg", "t_min", "t_max", "t_avg",
                "C", "fail");
  out += buf;
  for (const SummaryRow& row : rows) {
    if (row.i_min) {
      std::snprintf(buf, sizeof(buf),
                    "%-16s %-12s %10" PRIu64 " %10" PRIu64 " %12.1f %10.4g %10.4g %10.4g %10.4g %5" PRIu64 "\n",
                    row.scenario.c_str(), row.planner.c_str(), *row.i_min, *row.i_max, *row.i_avg,
                    *row.t_min, *row.t_max, *row.t_avg, row.reference_cost, row.fail);
    } else {
      std::snprintf(buf, sizeof(buf),
                    "%-16s %-12s %10s %10s %12s %10s %10s %10s %10.4g %5" PRIu64 "\n",
                    row.scenario.c_str(), row.planner.c_str(), "-", "-", "-", "-", "-", "-",
                    row.reference_cost, row.fail);
    }
    out += buf;
  }
  return out;
}

namespace {

nlohmann::ordered_json event_json(const std::optional<TrialEvent>& event, bool with_cost) {
  if (!event) return nullptr;
  nlohmann::ordered_json j;
  j["iteration"] = event->iteration;
  j["seconds"] = event->seconds;
  if (with_cost) j["cost"] = event->cost;
  return j;
}

nlohmann::ordered_json record_json(const TrialRecord& r) {
  nlohmann::ordered_json j;
  j["scenario"] = r.scenario;
  j["planner"] = r.planner;
  j["seed"] = r.seed;
  j["first_solution"] = event_json(r.first_solution, true);
  j["converged"] = event_json(r.converged, false);
  j["final_cost"] = r.final_cost ? nlohmann::ordered_json(*r.final_cost)
                                 : nlohmann::ordered_json(nullptr);
  j["node_count"] = r.node_count;
  j["memory_bytes_estimate"] = r.memory_bytes_estimate;
  j["op_counters"] = {{"sample", r.op_counters.sample},
                      {"nearest", r.op_counters.nearest},
                      {"near", r.op_counters.near},
                      {"collision", r.op_counters.collision},
                      {"steer", r.op_counters.steer}};
  j["capped"] = r.capped;
  return j;
}

}  // namespace

std::string trial_record_json(const TrialRecord& record) { return record_json(record).dump(); }

std::vector<TrialRecord> trial_log_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.contains("trials") || !doc["trials"].is_array()) {
    throw std::invalid_argument("trial log: missing trials array");
  }
  std::vector<TrialRecord> out;
  for (const auto& j : doc["trials"]) {
    TrialRecord r;
    r.scenario = j.at("scenario").get<std::string>();
    r.planner = j.at("planner").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    if (!j.at("first_solution").is_null()) {
      const auto& e = j["first_solution"];
      r.first_solution = TrialEvent{e.at("iteration").get<std::uint64_t>(),
                                    e.at("seconds").get<double>(), e.at("cost").get<double>()};
    }
    if (!j.at("converged").is_null()) {
      const auto& e = j["converged"];
      r.converged =
          TrialEvent{e.at("iteration").get<std::uint64_t>(), e.at("seconds").get<double>(), 0.0};
    }
    if (!j.at("final_cost").is_null()) r.final_cost = j["final_cost"].get<double>();
    r.node_count = j.at("node_count").get<std::uint64_t>();
    r.memory_bytes_estimate = j.at("memory_bytes_estimate").get<std::uint64_t>();
    const auto& ops = j.at("op_counters");
    r.op_counters = OpCounters{ops.at("sample").get<std::uint64_t>(),
                               ops.at("nearest").get<std::uint64_t>(),
                               ops.at("near").get<std::uint64_t>(),
                               ops.at("collision").get<std::uint64_t>(),
                               ops.at("steer").get<std::uint64_t>()};
    r.capped = j.at("capped").get<bool>();
    out.push_back(std::move(r));
  }
  return out;
}

std::string trial_log_json(std::span<const TrialRecord> trials, const RunMetadata& metadata,
                           int dim) {
  nlohmann::ordered_json doc;
  doc["metadata"] = {
      {"rng", SeededRng::kAlgorithm},
      {"gamma", metadata.gamma},
      {"eta", metadata.eta},
      {"cc_step", metadata.cc_step},
      {"eps_opt", metadata.eps_opt},
      {"max_iterations", metadata.max_iterations},
      {"max_nodes", metadata.max_nodes},
      {"stop_on_converge", metadata.stop_on_converge},
      {"node_bytes", node_bytes(dim)},
      {"time_model",
       {{"kind", "op-count-estimate"},
        {"sample_ns", kSampleNs},
        {"nearest_ns", kNearestNs},
        {"near_ns", kNearNs},
        {"collision_ns", kCollisionNs},
        {"steer_ns", kSteerNs}}},
      {"timing_note", "seconds fields are deterministic op-count estimates; "
                      "planner-loop wall time is excluded from records"},
  };
  doc["trials"] = nlohmann::ordered_json::array();
  for (const TrialRecord& record : trials) {
    doc["trials"].push_back(record_json(record));
  }
  return doc.dump(2) + "\n";
}

}  // namespace rrts
