#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nncompose/abstraction.hpp"
#include "nncompose/partition.hpp"
#include "nncompose/policy_store.hpp"

namespace nncompose {

/// Reach-avoid task: reach `goal` within `horizon` steps, never entering an obstacle.
struct Task {
  std::string name;
  Box goal;
  std::vector<Box> obstacles;
  std::size_t horizon = 1;

  void validate(std::size_t state_dim) const;
};

/// Boxes given with fewer coordinates than the state are extended by the domain on the remaining axes.
Task task_from_json(const nlohmann::json& j, const Box& domain);
nlohmann::json to_json(const Task& task);

struct Marks {
  std::vector<bool> obstacle;  // cell meets some obstacle (closed)
  std::vector<bool> goal;      // cell contained in the goal
  std::size_t goal_count() const;
};

Marks mark_states(const StatePartition& part, const Task& task);

struct SafeSets {
  std::vector<bool> safe;
  std::vector<std::vector<CellId>> partitions;  // P_safe(q), ascending
  std::vector<std::size_t> unsafe_sizes;        // |X_unsafe^k| per iteration
  std::size_t iterations = 0;                   // growth steps before the fixed point

  bool empty() const;
  std::vector<CellId> safe_states() const;
};

/// Fixed point of unsafe-state backtracking seeded with the obstacle cells. A
/// partition is usable at q when its Next set is nonempty and avoids every unsafe
/// cell; q becomes unsafe once no usable partition is left.
SafeSets backtrack_safety(const AbstractMdp& mdp, const std::vector<bool>& obstacle);

/// Time-varying assignment (k, q) -> (q, P*, q'*); goal cells are left unassigned.
class ActivationMap {
 public:
  ActivationMap() = default;
  ActivationMap(std::size_t horizon, std::size_t num_states)
      : horizon_(horizon), num_states_(num_states), table_(horizon * num_states) {}

  std::size_t horizon() const { return horizon_; }
  std::size_t num_states() const { return num_states_; }
  const std::optional<LocalPolicyKey>& at(std::size_t k, CellId q) const { return table_.at(k * num_states_ + q); }
  void set(std::size_t k, CellId q, LocalPolicyKey key) { table_.at(k * num_states_ + q) = key; }
  /// Distinct assigned keys, ascending.
  std::vector<LocalPolicyKey> keys() const;

 private:
  std::size_t horizon_ = 0;
  std::size_t num_states_ = 0;
  std::vector<std::optional<LocalPolicyKey>> table_;
};

/// values[k][q] for k = 0..H.
struct ValueTable {
  std::vector<std::vector<double>> values;
  double at(std::size_t k, CellId q) const { return values.at(k).at(q); }
};

struct DpResult {
  ActivationMap activation;
  ValueTable values;
};

/// Finite-horizon maximal reach probability over safe partitions; ties go to the lowest id.
DpResult dp_liveness(const AbstractMdp& mdp, const SafeSets& safe, const std::vector<bool>& goal, std::size_t horizon);

struct Selection {
  Marks marks;
  SafeSets safe;
  DpResult dp;
  std::vector<CellId> x_init;
  std::vector<LocalPolicyKey> missing;  // referenced by the map but absent from the store
  bool no_safe_set() const { return x_init.empty(); }
};

Selection select(const Task& task, const StatePartition& part, const AbstractMdp& mdp, const PolicyStore* store = nullptr);

nlohmann::json to_json(const Selection& sel, const StatePartition& part);

}  // namespace nncompose
