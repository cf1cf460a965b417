#pragma once

#include <cstdint>
#include <optional>

#include "nncompose/box.hpp"
#include "nncompose/dynamics.hpp"
#include "nncompose/gp.hpp"
#include "nncompose/relu_net.hpp"

namespace nncompose {

/// f + mu_g, the model used for training rollouts.
struct LearnedDynamics {
  const DynamicsModel* model = nullptr;
  const GpModel* gp = nullptr;

  /// Unwrapped prediction f(x, u) + mu_g(x, u).
  Vector predict(const Vector& x, const Vector& u) const;
  /// Displacement from a to b with periodic axes taken the short way round.
  Vector difference(const Vector& a, const Vector& b) const;
};

struct RewardWeights {
  double w1 = 1.0;
  double w2 = 0.1;
};

/// Reward for steering into `target` while staying close to the partition's center law.
double reward(const Vector& x, const Vector& u, const Box& target, const Vector& center_law, const LearnedDynamics& dyn,
              const RewardWeights& weights);

/// One local training problem: drive states of q into target using laws near center_law.
struct PpoProblem {
  Box q;
  Box target;
  Vector center_law;  // flattened [K | b] at the partition center
};

struct PpoConfig {
  std::size_t episodes = 800;
  std::size_t episode_length = 10;
  std::size_t batch_episodes = 10;
  std::size_t epochs = 8;
  std::size_t hidden = 6;
  double clip = 0.2;
  double learning_rate = 3e-3;
  double gamma = 0.99;
  double initial_std = 0.5;
  double max_grad_norm = 1.0;
  RewardWeights weights;
};

struct PpoStats {
  std::size_t episodes = 0;
  std::size_t updates = 0;
  double first_batch_return = 0.0;
  double last_batch_return = 0.0;
};

/// Trains the policy mean network. Deterministic for a given seed. When `init`
/// is given training starts from it (fine-tuning). Throws std::runtime_error
/// when the objective or the weights stop being finite.
ShallowReluNet ppo_train(const PpoProblem& problem, const LearnedDynamics& dyn, const PpoConfig& config,
                         std::uint64_t seed, const ShallowReluNet* init = nullptr, PpoStats* stats = nullptr);

/// Net with small random hidden weights whose output at the center of q equals the center law.
ShallowReluNet initial_policy(const PpoProblem& problem, std::size_t state_dim, std::size_t input_dim, std::size_t hidden,
                              std::mt19937_64& rng);

/// Fraction of uniformly sampled x in q whose one-step prediction lands in the target.
double success_rate(const ShallowReluNet& net, const PpoProblem& problem, const LearnedDynamics& dyn, std::size_t samples,
                    std::uint64_t seed);

}  // namespace nncompose
