#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nncompose/abstraction.hpp"
#include "nncompose/dynamics.hpp"
#include "nncompose/gp.hpp"
#include "nncompose/partition.hpp"
#include "nncompose/policy_store.hpp"
#include "nncompose/transfer.hpp"

namespace nncompose {

/// Malformed or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A required artifact has not been produced yet (exit code 3).
class MissingPrerequisite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kCacheEnvVar = "NNCOMPOSE_CACHE_DIR";
inline constexpr int kConfigVersion = 1;

struct RunConfig {
  nlohmann::json raw;
  std::string hash;              // stamps every artifact
  std::string abstraction_hash;  // keys the abstraction cache
  std::uint64_t seed = 0;
  std::size_t threads = 0;

  std::filesystem::path cache_dir;
  std::filesystem::path store_dir;
  std::filesystem::path output_dir;

  PpoConfig ppo;
  std::size_t online_episodes = 80;
  TransferWeights transfer;
  std::size_t gp_samples = 0;
  GpHyperparameters gp;
};

/// Validates and normalizes a configuration. Relative paths resolve against base_dir;
/// the cache root can be overridden through the NNCOMPOSE_CACHE_DIR environment variable.
RunConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = ".");
RunConfig load_config(const std::filesystem::path& path);

/// Hash of the canonical dump of the sections that influence results.
std::string config_hash(const nlohmann::json& j);

std::unique_ptr<DynamicsModel> make_model(const nlohmann::json& dynamics);
ModelErrorTruth make_truth(const nlohmann::json& truth, std::size_t state_dim);

/// The abstraction and everything it is built from.
struct Abstraction {
  std::unique_ptr<DynamicsModel> model;
  ModelErrorTruth truth;
  DisturbanceBound disturbance;
  Box input_range;
  StatePartition states;
  ControllerGrid controllers;
  ResidualDataset data;
  GpModel gp;
  AbstractMdp mdp;

  LearnedDynamics dynamics() const { return {model.get(), &gp}; }
};

/// Components that do not need the MDP (model, grids, GP).
Abstraction prepare(const RunConfig& cfg);
std::filesystem::path abstraction_dir(const RunConfig& cfg);

/// Builds or reuses the cached abstraction. `cache_hit` reports reuse.
Abstraction build_abstraction(const RunConfig& cfg, bool force = false, bool* cache_hit = nullptr);
/// Loads the cached abstraction; throws MissingPrerequisite if it was never built.
Abstraction load_abstraction(const RunConfig& cfg);

TrainingContext training_context(const RunConfig& cfg, const Abstraction& abs);

/// Loads the policy store for this config; MissingPrerequisite when absent,
/// ConfigError when it belongs to another config.
PolicyStore load_store(const RunConfig& cfg);
void save_store(const RunConfig& cfg, PolicyStore& store);

}  // namespace nncompose
