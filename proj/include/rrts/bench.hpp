#pragma once

#include <optional>
#include <string>

#include "rrts/planners.hpp"

namespace rrts {

// When a run counts as converged: best cost within (1 + eps_opt) of the
// scenario's reference cost.
struct ConvergencePolicy {
  double reference_cost = 0.0;
  double eps_opt = 0.05;
};

// Reported seconds are a deterministic estimate from the op counters (fixed
// per-primitive costs, declared in output metadata), so records replicate
// byte-for-byte across runs and machines. Measured wall time stays in
// PlannerState and is never part of a record.
double estimated_seconds(const OpCounters& ops);

// The declared per-node constant behind memory_bytes_estimate.
std::uint64_t node_bytes(int dim);

struct TrialEvent {
  std::uint64_t iteration = 0;
  double seconds = 0.0;  // estimated_seconds at the event
  double cost = 0.0;
};

struct TrialRecord {
  std::string scenario;
  std::string planner;
  std::uint64_t seed = 0;
  std::optional<TrialEvent> first_solution;
  std::optional<TrialEvent> converged;
  std::optional<double> final_cost;
  std::uint64_t node_count = 0;
  std::uint64_t memory_bytes_estimate = 0;
  OpCounters op_counters;
  bool capped = false;
};

struct SummaryRow {
  std::string scenario;
  std::string planner;
  // Absent when no trial converged (rendered as dashes / empty CSV fields).
  std::optional<std::uint64_t> i_min, i_max;
  std::optional<double> i_avg;
  std::optional<double> t_min, t_max, t_avg;
  double reference_cost = 0.0;
  std::uint64_t fail = 0;
  std::uint64_t trials = 0;
};

struct TrialOptions {
  PlannerConfig planner;
  bool stop_on_converge = true;  // end the trial once the policy is met
};

// Best cost of a long deterministic reference run: ten times the iteration
// budget, fixed seed, using the strongest planner. Throws when even that run
// finds no solution.
double reference_cost(const Environment& env, const PlannerConfig& base_config,
                      PlannerKind kind = PlannerKind::kIbRrtStar, std::uint64_t seed = 0);

// Without a policy the trial never counts as converged and always runs to its
// budget. `keep_state` (optional) receives the terminal planner state.
TrialRecord run_trial(const Environment& env, const std::string& scenario_name,
                      PlannerKind kind, std::uint64_t seed, const TrialOptions& options,
                      const std::optional<ConvergencePolicy>& policy,
                      PlannerState* keep_state = nullptr);

// Min/max/avg over converged trials (all trials must share scenario+planner;
// empty input is a usage error).
SummaryRow aggregate(std::span<const TrialRecord> trials);

// Relative improvement from the first to the best solution.
double convergence_rate(double c_init, double c_star);

// Ratio of cumulative per-iteration op counts, a[0..i] over b[0..i]; entries
// with a zero denominator are skipped.
std::vector<double> op_count_ratio(std::span<const std::uint32_t> a,
                                   std::span<const std::uint32_t> b);

// Exact CSV surface: scenario,planner,i_min,i_max,i_avg,t_min,t_max,t_avg,C,fail
std::string summary_csv(std::span<const SummaryRow> rows);

// Human-readable aligned table of the same rows (dashes for failed-only).
std::string summary_table(std::span<const SummaryRow> rows);

struct RunMetadata {
  double gamma = 0.0;
  double eta = 0.0;
  double cc_step = 0.0;
  double eps_opt = 0.0;
  std::uint64_t max_iterations = 0;
  std::uint64_t max_nodes = 0;
  bool stop_on_converge = true;
};

// One JSON document holding metadata plus every trial record, serialized
// deterministically.
std::string trial_log_json(std::span<const TrialRecord> trials, const RunMetadata& metadata,
                           int dim);

std::string trial_record_json(const TrialRecord& record);

// Re-reads the records of a trial-log document produced by trial_log_json.
std::vector<TrialRecord> trial_log_from_json(const std::string& text);

}  // namespace rrts
