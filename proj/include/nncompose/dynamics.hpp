#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nncompose/box.hpp"
#include "nncompose/interval.hpp"

namespace nncompose {

using State = Vector;
using ControlInput = Vector;

/// Interval enclosure of a Jacobian, row-major n x k.
struct IntervalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Interval> data;

  IntervalMatrix() = default;
  IntervalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Interval(0.0)) {}
  Interval& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Interval& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  /// Elementwise magnitude bound of the enclosure.
  Matrix magnitude() const;
};

/// Known nominal model f of x+ = f(x, u) + g(x, u).
class DynamicsModel {
 public:
  virtual ~DynamicsModel() = default;

  virtual std::string name() const = 0;
  virtual std::size_t state_dim() const = 0;
  virtual std::size_t input_dim() const = 0;

  /// f(x, u) without any wrapping of periodic coordinates.
  virtual State evaluate(const State& x, const ControlInput& u) const = 0;
  /// Natural interval extension of f.
  virtual IntervalVector evaluate(const IntervalVector& x, const IntervalVector& u) const = 0;
  /// Enclosures of df/dx (n x n) and df/du (n x m) over the given boxes.
  virtual void jacobian(const IntervalVector& x, const IntervalVector& u, IntervalMatrix& dx,
                        IntervalMatrix& du) const = 0;
  /// Period of each state coordinate, 0 for non-periodic axes.
  virtual std::vector<double> periods() const { return std::vector<double>(state_dim(), 0.0); }

  /// Maps periodic coordinates into their canonical range [0, period).
  State wrap(const State& x) const;
};

/// Unicycle with constant speed: x+ = x + dt v cos(theta), y+ = y + dt v sin(theta),
/// theta+ = theta + dt u. Heading is periodic with period 2 pi.
class DubinsModel final : public DynamicsModel {
 public:
  DubinsModel(double speed, double dt);

  std::string name() const override { return "dubins"; }
  std::size_t state_dim() const override { return 3; }
  std::size_t input_dim() const override { return 1; }
  State evaluate(const State& x, const ControlInput& u) const override;
  IntervalVector evaluate(const IntervalVector& x, const IntervalVector& u) const override;
  void jacobian(const IntervalVector& x, const IntervalVector& u, IntervalMatrix& dx,
                IntervalMatrix& du) const override;
  std::vector<double> periods() const override;

  double speed() const { return speed_; }
  double dt() const { return dt_; }

 private:
  double speed_;
  double dt_;
};

/// Affine model x+ = A x + B u + c.
class LinearModel final : public DynamicsModel {
 public:
  LinearModel(Matrix a, Matrix b, Vector c);

  std::string name() const override { return "linear"; }
  std::size_t state_dim() const override { return static_cast<std::size_t>(a_.rows()); }
  std::size_t input_dim() const override { return static_cast<std::size_t>(b_.cols()); }
  State evaluate(const State& x, const ControlInput& u) const override;
  IntervalVector evaluate(const IntervalVector& x, const IntervalVector& u) const override;
  void jacobian(const IntervalVector& x, const IntervalVector& u, IntervalMatrix& dx,
                IntervalMatrix& du) const override;

  const Matrix& a() const { return a_; }
  const Matrix& b() const { return b_; }
  const Vector& c() const { return c_; }

 private:
  Matrix a_;
  Matrix b_;
  Vector c_;
};

/// Ground-truth model error g. Simulation only; never visible to synthesis.
struct ModelErrorTruth {
  std::function<Vector(const State&, const ControlInput&)> fn;

  Vector operator()(const State& x, const ControlInput& u) const { return fn(x, u); }

  static ModelErrorTruth zero(std::size_t state_dim);
  static ModelErrorTruth constant(Vector value);
  /// Smooth field amplitude * ((1 + sin x) / 2, (1 + cos y) / 2, 0, ...), inside [0, amplitude]^2.
  static ModelErrorTruth trigonometric(std::size_t state_dim, double amplitude);
};

/// A-priori bound D on the model error.
using DisturbanceBound = Box;

struct Trajectory {
  std::vector<State> states;
  std::vector<ControlInput> inputs;

  std::size_t steps() const { return inputs.size(); }
};

/// Wrapped nominal step f(x, u).
State step_nominal(const DynamicsModel& model, const State& x, const ControlInput& u);
/// Wrapped true step f(x, u) + g(x, u).
State step_true(const DynamicsModel& model, const ModelErrorTruth& truth, const State& x,
                const ControlInput& u);

using Controller = std::function<ControlInput(const State&, std::size_t)>;
using StopPredicate = std::function<bool(const State&, std::size_t)>;

/// Closed-loop rollout of the true system for at most `horizon` steps. The stop
/// predicate is evaluated on every visited state, including x0.
Trajectory simulate(const Controller& controller, const State& x0, std::size_t horizon,
                    const DynamicsModel& model, const ModelErrorTruth& truth,
                    const StopPredicate& stop = {});

/// Per-box Lipschitz bounds of f in x and u (induced 2-norm, via Frobenius norm of the
/// Jacobian magnitude enclosure).
struct LipschitzBounds {
  double state = 0.0;
  double input = 0.0;
};
LipschitzBounds lipschitz_bounds(const DynamicsModel& model, const Box& x, const Box& u);

}  // namespace nncompose
