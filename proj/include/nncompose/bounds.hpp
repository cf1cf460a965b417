#pragma once

#include <vector>

#include <json.hpp>

#include "nncompose/abstraction.hpp"
#include "nncompose/policy_store.hpp"
#include "nncompose/ppo.hpp"
#include "nncompose/selection.hpp"

namespace nncompose {

/// Variance used wherever the GP variance would vanish in the kernel Lipschitz bounds.
inline constexpr double kBoundVarianceFloor = 1e-6;

struct KernelLipschitz {
  double lambda = 0.0;         // state Lipschitz constant integrated over the domain (fine quadrature)
  double gamma = 0.0;          // input Lipschitz constant, likewise
  double lambda_coarse = 0.0;  // same at half the quadrature resolution
  double gamma_coarse = 0.0;
  bool floor_applied = false;
};

/// Upper sums of sup_{x in q, u in controls} |grad_x t(y | x, u)| and |grad_u t(y | x, u)|
/// over the integration cells, each split into `subdivisions` (and twice that) parts
/// per axis. t is the Gaussian kernel with mean f + mu_g and variance sigma_g^2;
/// periodic axes add the two neighbouring images.
KernelLipschitz kernel_lipschitz(const Box& q, const Box& controls, const std::vector<Box>& integration_cells,
                                 const LearnedDynamics& dyn, std::size_t subdivisions = 2);

struct CellConstants {
  CellId cell = 0;
  double l = 0.0;  // local network Lipschitz constant
  KernelLipschitz kernel;
};

struct BoundConstants {
  std::size_t state_dim = 0;
  std::size_t input_dim = 0;
  std::size_t n_safe = 0;
  double delta_q = 0.0;
  double delta_p = 0.0;
  double l_x = 0.0;
  double l_p = 0.0;
  bool variance_floor_applied = false;
  std::vector<CellConstants> cells;
};

struct OptimalityGap {
  double delta_nn = 0.0;
  double delta_star = 0.0;
  std::size_t horizon = 0;
  std::size_t k = 0;
  double bound = 0.0;
};

/// Evaluates the gap formula; the constants are used as given.
OptimalityGap gap_bound(const BoundConstants& c, std::size_t horizon, std::size_t k);

/// Everything the bound and the oracles look at.
struct BoundInstance {
  const StatePartition* states = nullptr;
  const ControllerGrid* controllers = nullptr;
  LearnedDynamics dynamics;
  const Selection* selection = nullptr;
  const PolicyStore* store = nullptr;  // may be null: L_i then falls back to the partition gains
};

/// Range of controls available at q: K(x) for x in q and K in any safe partition.
Box control_range(const BoundInstance& inst, CellId q);

BoundConstants compute_constants(const BoundInstance& inst, std::size_t subdivisions = 2, std::size_t threads = 0);

struct OracleOptions {
  std::size_t refine = 8;          // fine cells per abstract cell and axis
  std::size_t control_levels = 10;  // per partition and input axis
  double window_sigmas = 6.0;
  std::size_t max_cells = 10000;
  std::size_t threads = 0;
};

struct OracleValues {
  std::vector<Vector> points;  // fine cell centers inside the safe set
  std::vector<double> v_star;  // V*_0 at the points
  std::vector<double> v_nn;    // V^NN_0 at the points
  std::size_t fine_cells = 0;
  double max_gap = 0.0;

  /// Value of the fine-grid cell containing x, or -1 outside the safe set.
  double v_star_at(const Vector& x) const;

  // grid bookkeeping for lookups
  Box domain;
  std::vector<std::size_t> counts;
  std::vector<long> index;  // fine cell -> position in points, -1 if unsafe
};

/// Brute-force backward recursions on a fine grid for the continuous optimal
/// value and the value of the composed network controller. The optimal control
/// set is discretized per safe partition and also contains the network's
/// control. Requires a state dimension of at most 2 and no periodic axes.
OracleValues oracle_values(const BoundInstance& inst, std::size_t horizon, const OracleOptions& options = {});

nlohmann::json to_json(const BoundConstants& c, std::size_t horizon);

}  // namespace nncompose
