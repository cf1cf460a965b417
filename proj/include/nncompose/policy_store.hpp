#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "nncompose/abstraction.hpp"
#include "nncompose/partition.hpp"
#include "nncompose/ppo.hpp"
#include "nncompose/relu_net.hpp"

namespace nncompose {

/// Transition (q, P, q') a local policy is trained for.
struct LocalPolicyKey {
  CellId q = 0;
  CellId p = 0;
  CellId next = 0;

  auto operator<=>(const LocalPolicyKey&) const = default;
  std::string str() const;
};

struct StoredPolicy {
  ShallowReluNet net;
  ProjectionCertificate certificate;
  bool online = false;
  std::size_t episodes = 0;
  double train_seconds = 0.0;
};

/// Thread-safe map from transition to projected network.
class PolicyStore {
 public:
  PolicyStore() = default;
  PolicyStore(const PolicyStore& other);
  PolicyStore& operator=(const PolicyStore& other);

  bool contains(const LocalPolicyKey& key) const;
  std::optional<StoredPolicy> get(const LocalPolicyKey& key) const;
  /// Inserts or replaces. Refuses nets without a passing certificate.
  void insert(const LocalPolicyKey& key, StoredPolicy policy);
  std::size_t size() const;
  std::vector<LocalPolicyKey> keys() const;
  std::vector<std::pair<LocalPolicyKey, StoredPolicy>> entries() const;

  bool complete() const { return complete_; }
  void set_complete(bool c) { complete_ = c; }
  const std::string& config_hash() const { return config_hash_; }
  void set_config_hash(std::string h) { config_hash_ = std::move(h); }

  /// One JSON file per key under dir/policies plus dir/manifest.json.
  void save(const std::filesystem::path& dir) const;
  /// Loads a saved store; throws if its hash differs from `expected_hash` (when non-empty).
  static PolicyStore load(const std::filesystem::path& dir, const std::string& expected_hash = "");

 private:
  mutable std::shared_mutex mutex_;
  std::map<LocalPolicyKey, StoredPolicy> policies_;
  bool complete_ = false;
  std::string config_hash_;
};

/// Everything local training needs besides the key.
struct TrainingContext {
  const StatePartition* states = nullptr;
  const ControllerGrid* controllers = nullptr;
  LearnedDynamics dynamics;
  PpoConfig ppo;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
};

PpoProblem make_problem(const TrainingContext& ctx, const LocalPolicyKey& key);

/// PPO training followed by projection and certification for one key.
/// `episodes` overrides the configured count; `init` seeds fine-tuning.
StoredPolicy train_local(const TrainingContext& ctx, const LocalPolicyKey& key, std::size_t episodes,
                         const ShallowReluNet* init = nullptr);

struct TrainReport {
  std::vector<LocalPolicyKey> trained;
  std::vector<std::pair<LocalPolicyKey, std::string>> failures;
};

/// All transitions of the MDP with positive probability.
std::vector<LocalPolicyKey> transition_keys(const AbstractMdp& mdp);

/// Trains the listed keys in parallel into `store`; failures are collected, not thrown.
TrainReport train_keys(const TrainingContext& ctx, const std::vector<LocalPolicyKey>& keys, PolicyStore& store);

/// One projected net per positive-probability transition.
PolicyStore train_all(const AbstractMdp& mdp, const TrainingContext& ctx, TrainReport* report = nullptr);

}  // namespace nncompose
