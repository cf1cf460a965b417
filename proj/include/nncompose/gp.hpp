#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nncompose/box.hpp"
#include "nncompose/dynamics.hpp"

namespace nncompose {

/// Rows of (z = (x, u), r = x_next - f(x, u)).
struct ResidualDataset {
  std::size_t state_dim = 0;
  std::size_t input_dim = 0;
  Matrix inputs;     // N x (n + m)
  Matrix residuals;  // N x n

  std::size_t size() const { return static_cast<std::size_t>(inputs.rows()); }
};

/// Uniform sampling plan over X x U.
struct SamplingPlan {
  Box states;
  Box inputs;
  std::uint64_t seed = 0;
};

ResidualDataset collect_residuals(const DynamicsModel& model, const ModelErrorTruth& truth, const SamplingPlan& plan,
                                  std::size_t count);

void write_csv(std::ostream& os, const ResidualDataset& data);
ResidualDataset read_csv(std::istream& is, std::size_t state_dim, std::size_t input_dim);

/// Squared-exponential kernel hyperparameters shared by all output dimensions.
struct GpHyperparameters {
  double signal_variance = 1.0;
  Vector lengthscales;  // one per input coordinate of z
  double noise_variance = 1e-4;
};

/// Variance floor added to the Gram diagonal on top of the configured noise.
inline constexpr double kGramNoiseFloor = 1e-6;

/// Exact scalar GP regression with a fixed squared-exponential kernel.
class ScalarGp {
 public:
  ScalarGp() = default;
  ScalarGp(const Matrix& inputs, const Vector& targets, const GpHyperparameters& hyper);

  double mean(const Vector& z) const;
  /// Latent posterior variance, clamped at zero.
  double variance(const Vector& z) const;
  void predict(const Vector& z, double& mean, double& variance) const;

  double kernel(const Vector& a, const Vector& b) const;
  /// sup_z |d mean / d z_d| for each input coordinate d.
  Vector mean_gradient_bound() const;
  /// sup_z |d variance / d z_d| for each input coordinate d (loose global bound).
  Vector variance_gradient_bound() const;

  std::size_t size() const { return static_cast<std::size_t>(inputs_.rows()); }

 private:
  Matrix inputs_;
  GpHyperparameters hyper_;
  Eigen::LLT<Matrix> llt_;
  Vector alpha_;
  double noise_total_ = 0.0;
};

struct PosteriorStats {
  Vector mean;
  Vector variance;
};

/// Independent scalar GP per output dimension of g.
class GpModel {
 public:
  GpModel() = default;
  GpModel(std::size_t state_dim, std::size_t input_dim, std::vector<ScalarGp> outputs, GpHyperparameters hyper);

  PosteriorStats posterior(const State& x, const ControlInput& u) const;
  Vector mean(const State& x, const ControlInput& u) const;

  std::size_t state_dim() const { return state_dim_; }
  std::size_t input_dim() const { return input_dim_; }
  const ScalarGp& output(std::size_t i) const { return outputs_.at(i); }
  const GpHyperparameters& hyperparameters() const { return hyper_; }

 private:
  Vector concat(const State& x, const ControlInput& u) const;

  std::size_t state_dim_ = 0;
  std::size_t input_dim_ = 0;
  std::vector<ScalarGp> outputs_;
  GpHyperparameters hyper_;
};

/// Fits one GP per residual column. Throws std::runtime_error when the Gram
/// matrix cannot be factorized, naming a noise level that would.
GpModel fit(const ResidualDataset& data, const GpHyperparameters& hyper);

}  // namespace nncompose
