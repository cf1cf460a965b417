#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nncompose/box.hpp"
#include "nncompose/dynamics.hpp"
#include "nncompose/gp.hpp"
#include "nncompose/partition.hpp"

namespace nncompose {

/// Sound box enclosure of {f(x, K(x)) : x in q, K in P} (+) D, in unwrapped coordinates.
Box post_overapprox(const Box& q, const Box& params, const DynamicsModel& model, const DisturbanceBound& d);

struct NextStates {
  std::vector<CellId> cells;
  /// The post box reaches outside X; that part of the mass is lost.
  bool leaves_domain = false;
};

NextStates next_states(const StatePartition& part, const Box& post);

/// Probability that N(mean, diag(variance)) lands in the box. Coordinates with zero
/// variance contribute an indicator of the closed interval.
double gaussian_box_prob(const Vector& mean, const Vector& variance, const Box& box);
/// Same, with periodic coordinates integrated as a wrapped Gaussian (three images).
double gaussian_box_prob(const Vector& mean, const Vector& variance, const Box& box, const std::vector<double>& periods);

/// One (q, P) row of the abstract MDP.
struct MdpRow {
  std::vector<CellId> next;  // Next(q, P), ascending
  std::vector<double> prob;  // T(q' | q, P) for each entry of `next`
  bool leaves_domain = false;

  double total() const;
  double probability(CellId target) const;
};

/// Finite MDP over abstract states and controller partitions. Rows not
/// reaching mass 1 keep the deficit as implicit failure mass.
class AbstractMdp {
 public:
  AbstractMdp() = default;
  AbstractMdp(std::size_t num_states, std::size_t num_actions);

  std::size_t num_states() const { return num_states_; }
  std::size_t num_actions() const { return num_actions_; }

  const MdpRow& row(CellId q, CellId p) const { return rows_.at(static_cast<std::size_t>(q) * num_actions_ + p); }
  MdpRow& row(CellId q, CellId p) { return rows_.at(static_cast<std::size_t>(q) * num_actions_ + p); }
  /// Adds or replaces the transition q -P-> target. Kept sorted by target.
  void set_transition(CellId q, CellId p, CellId target, double prob);

  std::size_t transition_count(double min_prob = 0.0) const;

 private:
  std::size_t num_states_ = 0;
  std::size_t num_actions_ = 0;
  std::vector<MdpRow> rows_;
};

struct BuildOptions {
  std::size_t threads = 0;  // 0 = hardware concurrency
};

/// Abstract model: Next from the interval over-approximation; transition
/// probabilities from the GP-corrected Gaussian kernel at the cell and
/// partition centers.
AbstractMdp build_mdp(const StatePartition& part, const ControllerGrid& controllers, const DynamicsModel& model,
                      const GpModel& gp, const DisturbanceBound& d, const BuildOptions& options = {});

/// Kernel mean and variance used for row (q, P).
PosteriorStats row_kernel(const StatePartition& part, const ControllerGrid& controllers, const DynamicsModel& model,
                          const GpModel& gp, CellId q, CellId p);

nlohmann::json to_json(const AbstractMdp& mdp);
AbstractMdp mdp_from_json(const nlohmann::json& j);

}  // namespace nncompose
