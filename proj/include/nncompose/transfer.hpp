#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "nncompose/policy_store.hpp"
#include "nncompose/runtime.hpp"
#include "nncompose/selection.hpp"

namespace nncompose {

struct TransferWeights {
  double alpha1 = 1.0;
  double alpha2 = 1.0;
  double alpha3 = 1.0;

  void validate() const;
};

/// Weighted center distance between two transitions: source cells and target
/// cells in the Euclidean norm, partitions in the max norm.
double distance(const LocalPolicyKey& a, const LocalPolicyKey& b, const StatePartition& states,
                const ControllerGrid& controllers, const TransferWeights& w);

/// Keys trained offline for one task: the first activation step at each safe non-goal state.
std::vector<LocalPolicyKey> transfer_keys(const Selection& selection);

/// Offline training restricted to one task: one net per safe state, at the
/// transition the first activation step assigns to it.
PolicyStore train_transfer(const Selection& selection, const TrainingContext& ctx, TrainReport* report = nullptr);

struct TransferConfig {
  TransferWeights weights;
  std::size_t episodes = 80;
};

/// Nearest stored key by `distance`; ties go to the smallest key. Throws when the store is empty.
LocalPolicyKey nearest_donor(const PolicyStore& store, const LocalPolicyKey& key, const StatePartition& states,
                             const ControllerGrid& controllers, const TransferWeights& w);

/// Runs the composed controller, filling gaps online: a missing key is trained
/// from the nearest donor's weights for a short fine-tune, projected and inserted.
RolloutReport run_with_transfer(const State& x0, const Task& task, const ActivationMap& activation, PolicyStore& store,
                                const TrainingContext& training, const TransferConfig& transfer, const DynamicsModel& model,
                                const ModelErrorTruth& truth, const DisturbanceBound& d, DisturbanceMode mode,
                                std::uint64_t seed);

}  // namespace nncompose
