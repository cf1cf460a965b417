#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <string>

#include "nncompose/interval.hpp"

namespace nncompose {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Axis-aligned box [lo, hi] in R^d. Bounds may be infinite.
struct Box {
  Vector lo;
  Vector hi;

  Box() = default;
  Box(Vector l, Vector h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo.size() != hi.size()) throw std::invalid_argument("Box: bound dimensions differ");
    for (Eigen::Index i = 0; i < lo.size(); ++i) {
      if (!(lo[i] <= hi[i])) throw std::invalid_argument("Box: lo > hi on axis " + std::to_string(i));
    }
  }

  static Box point(const Vector& p) { return Box(p, p); }
  static Box whole(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(lo.size()); }
  Vector center() const { return 0.5 * (lo + hi); }
  Vector widths() const { return hi - lo; }

  /// Closed containment.
  bool contains(const Vector& x) const;
  /// Closed containment of another box.
  bool contains(const Box& other) const;
  /// Closed intersection test (shared faces count).
  bool intersects(const Box& other) const;
  /// Euclidean diameter.
  double diameter() const { return widths().norm(); }
  /// Max-norm diameter.
  double max_width() const { return dim() == 0 ? 0.0 : widths().maxCoeff(); }
  /// Euclidean distance from x to the box (0 inside).
  double distance(const Vector& x) const;
  /// Largest Euclidean norm attained over the box.
  double max_norm() const;

  IntervalVector intervals() const;
  static Box from_intervals(const IntervalVector& iv);
  /// Minkowski sum.
  Box inflate(const Box& other) const;
};

std::string to_string(const Box& b);

}  // namespace nncompose
