#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nncompose/dynamics.hpp"
#include "nncompose/partition.hpp"
#include "nncompose/policy_store.hpp"
#include "nncompose/selection.hpp"

namespace nncompose {

enum class DisturbanceMode {
  Truth,               // the configured g
  RandomInD,           // uniform over D, seeded
  AdversarialCorners,  // per step, the corner of D that pushes the state closest to an obstacle
};

DisturbanceMode parse_disturbance_mode(const std::string& s);
std::string to_string(DisturbanceMode m);

enum class Termination { Goal, SafetyViolation, DomainExit, NoPolicy, Horizon };
std::string to_string(Termination t);

struct RolloutReport {
  Trajectory trajectory;
  std::vector<LocalPolicyKey> keys;  // key applied at each step
  Termination termination = Termination::Horizon;
  std::size_t terminal_step = 0;
  std::vector<LocalPolicyKey> online_trained;

  bool reached_goal() const { return termination == Termination::Goal; }
  bool safety_violation() const { return termination == Termination::SafetyViolation; }
};

/// Called for an activation key absent from the store; may train and insert a
/// policy. Returning nullopt ends the rollout with NoPolicy.
using MissingPolicyHandler = std::function<std::optional<StoredPolicy>(const LocalPolicyKey&)>;

struct ExecutionContext {
  const StatePartition* states = nullptr;
  const DynamicsModel* model = nullptr;
  const ModelErrorTruth* truth = nullptr;
  DisturbanceBound disturbance;
  const ActivationMap* activation = nullptr;
  const PolicyStore* store = nullptr;
};

/// Steps the true system under the composed controller until the goal is
/// reached, an obstacle is entered, the controller domain is left, or the
/// activation horizon runs out. The obstacle monitor uses the continuous state.
RolloutReport execute(const ExecutionContext& ctx, const Task& task, const State& x0, DisturbanceMode mode,
                      std::uint64_t seed, const MissingPolicyHandler& on_missing = {});

/// Uniform samples of X_init: a uniformly chosen safe cell, then a uniform point in it.
std::vector<State> sample_initial_states(const StatePartition& part, const std::vector<CellId>& x_init, std::size_t count,
                                         std::uint64_t seed);

struct BatchSummary {
  std::string task;
  std::string mode;
  std::size_t rollouts = 0;
  std::size_t successes = 0;
  std::size_t violations = 0;
  std::size_t domain_exits = 0;
  std::size_t no_policy = 0;
  std::size_t horizon_outs = 0;
  double success_rate = 0.0;
  double mean_length = 0.0;  // steps of successful rollouts
};

BatchSummary batch_stats(const std::string& task, const std::string& mode, const std::vector<RolloutReport>& reports);

/// Runs one rollout per initial state in parallel with seeds derived from `root_seed`.
std::vector<RolloutReport> execute_batch(const ExecutionContext& ctx, const Task& task, const std::vector<State>& x0s,
                                         DisturbanceMode mode, std::uint64_t root_seed, std::size_t threads = 0);

nlohmann::json to_json(const BatchSummary& s);
nlohmann::json to_json(const RolloutReport& r);
void write_trajectory_csv(std::ostream& os, const RolloutReport& r);
/// x-y plane: obstacles blue, goal green, trajectories black.
std::string render_svg(const Box& domain, const Task& task, const std::vector<RolloutReport>& reports);

}  // namespace nncompose
