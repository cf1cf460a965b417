#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "nncompose/box.hpp"

namespace nncompose {

/// u = W2 max(W1 x + b1, 0) + b2.
struct ShallowReluNet {
  Matrix w1;  // h x n
  Vector b1;  // h
  Matrix w2;  // m x h
  Vector b2;  // m

  static ShallowReluNet zeros(std::size_t n, std::size_t h, std::size_t m);
  /// Glorot-style uniform initialization.
  static ShallowReluNet random(std::size_t n, std::size_t h, std::size_t m, std::mt19937_64& rng, double out_scale = 1.0);

  std::size_t state_dim() const { return static_cast<std::size_t>(w1.cols()); }
  std::size_t hidden() const { return static_cast<std::size_t>(w1.rows()); }
  std::size_t input_dim() const { return static_cast<std::size_t>(w2.rows()); }

  Vector forward(const Vector& x) const;
  Vector preactivation(const Vector& x) const { return w1 * x + b1; }
  bool finite() const;
  void validate() const;

  /// Flattened weights [w1 row-major, b1, w2 row-major, b2].
  Vector flatten() const;
  void unflatten(const Vector& theta);
  std::size_t parameter_count() const;
};

struct CpwaRegion {
  std::vector<bool> active;  // hidden activation pattern
  Matrix gain;               // m x n
  Vector offset;             // m
  Vector witness;            // a point of the region (Chebyshev-like center)
  double margin = 0.0;       // largest normalized slack of the pattern inequalities
};

/// Exact piecewise-affine form of a net restricted to a box.
struct CpwaFunction {
  Box domain;
  std::vector<CpwaRegion> regions;

  /// Evaluates through the region selected by the activation pattern of x.
  Vector evaluate(const ShallowReluNet& net, const Vector& x) const;
  /// Index of the region whose pattern matches x, or -1.
  long find(const ShallowReluNet& net, const Vector& x) const;
};

enum class RegionMode {
  /// Full-dimensional regions only.
  Strict,
  /// Also keeps patterns realized only on lower-dimensional sets; a superset used for certification.
  Conservative,
};

struct EnumerationOptions {
  RegionMode mode = RegionMode::Strict;
  std::size_t max_hidden = 20;
  std::size_t max_regions = 1u << 14;
};

CpwaFunction nn_to_cpwa_over(const ShallowReluNet& net, const Box& q, const EnumerationOptions& options = {});

/// Per-region affine law (K, b) flattened row-major over [K | b].
Vector region_parameters(const CpwaRegion& region);

struct ProjectionCertificate {
  bool ok = false;
  std::size_t regions = 0;
  double max_violation = 0.0;  // largest componentwise distance of any (K_i, b_i) outside P
};

/// Exhaustive containment check of every region law over q in the parameter box.
ProjectionCertificate certify(const ShallowReluNet& net, const Box& params, const Box& q, double tolerance = 1e-6);

struct ProjectionOptions {
  std::size_t max_iterations = 6;
  double tolerance = 1e-9;
};

/// Returns a net whose every affine piece over q lies in the parameter box.
/// Compliant nets are returned unchanged; otherwise the output layer is rescaled
/// and an always-active neuron carries a uniform gain shift. Falls back to the
/// exact center law of the box when that fails. Throws std::runtime_error if the
/// hidden layer is too narrow for the fallback.
ShallowReluNet project(const ShallowReluNet& net, const Box& params, const Box& q,
                       const ProjectionOptions& options = {});

/// Net realizing exactly x -> K x + b on q (needs h >= m).
ShallowReluNet affine_net(const Matrix& gain, const Vector& offset, const Box& q, std::size_t hidden);

/// Largest induced 2-norm of the region gains over q.
double nn_lipschitz(const ShallowReluNet& net, const Box& q);

nlohmann::json to_json(const ShallowReluNet& net);
ShallowReluNet net_from_json(const nlohmann::json& j);

}  // namespace nncompose
