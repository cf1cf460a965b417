#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "nncompose/box.hpp"

namespace nncompose {

using CellId = std::uint32_t;

struct GridAxis {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t count = 1;
  bool periodic = false;

  double width() const { return (hi - lo) / static_cast<double>(count); }
  double breakpoint(std::size_t i) const {
    return i >= count ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count);
  }
};

/// Uniform product grid. Cell ids are row-major with axis 0 varying fastest.
///
/// Cells are closed boxes for intersection queries. Point location uses the
/// convention (lo, hi] with the first cell of every axis closed, so a point on
/// a shared face resolves to the lower-id cell. Periodic axes cover [lo, hi).
class UniformGrid {
 public:
  UniformGrid() = default;
  explicit UniformGrid(std::vector<GridAxis> axes);

  std::size_t dim() const { return axes_.size(); }
  std::size_t size() const { return size_; }
  const std::vector<GridAxis>& axes() const { return axes_; }
  Box domain() const;

  std::vector<std::size_t> multi_index(CellId id) const;
  CellId flat_index(const std::vector<std::size_t>& idx) const;
  Box cell(CellId id) const;
  Vector center(CellId id) const;

  /// Containing cell, or nullopt outside the domain. Periodic coordinates are wrapped.
  std::optional<CellId> locate(const Vector& x) const;
  /// All cells whose closed box meets the closed query box. Periodic axes are
  /// matched modulo their period. Sorted ascending.
  std::vector<CellId> intersecting(const Box& query) const;
  /// Whether the query box reaches outside the (non-periodic) domain.
  bool exceeds_domain(const Box& query) const;

  /// Largest Euclidean cell diameter.
  double diameter() const;
  /// Largest max-norm cell diameter.
  double max_width() const;

 private:
  std::size_t axis_index(std::size_t axis, double v) const;
  void axis_range(std::size_t axis, double lo, double hi, std::vector<std::size_t>& out) const;

  std::vector<GridAxis> axes_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

/// Abstract states: the grid over X.
class StatePartition {
 public:
  StatePartition() = default;
  explicit StatePartition(UniformGrid grid) : grid_(std::move(grid)) {}

  /// Product grid over `domain` with per-axis counts; `periods[i] > 0` marks axis i periodic.
  static StatePartition build(const Box& domain, const std::vector<std::size_t>& counts,
                              const std::vector<double>& periods = {});

  const UniformGrid& grid() const { return grid_; }
  std::size_t size() const { return grid_.size(); }
  std::size_t dim() const { return grid_.dim(); }
  Box cell(CellId q) const { return grid_.cell(q); }
  Vector center(CellId q) const { return grid_.center(q); }
  Box domain() const { return grid_.domain(); }

 private:
  UniformGrid grid_;
};

/// Controller partitions over the parameter box of affine laws u = K' x + b'.
/// Parameters are flattened row-major over the m x (n + 1) matrix [K' | b'].
class ControllerGrid {
 public:
  ControllerGrid() = default;
  ControllerGrid(UniformGrid grid, std::size_t state_dim, std::size_t input_dim);

  static ControllerGrid build(const Box& global, const std::vector<std::size_t>& counts, std::size_t state_dim,
                              std::size_t input_dim);

  const UniformGrid& grid() const { return grid_; }
  std::size_t size() const { return grid_.size(); }
  std::size_t state_dim() const { return state_dim_; }
  std::size_t input_dim() const { return input_dim_; }
  Box cell(CellId p) const { return grid_.cell(p); }
  Vector center(CellId p) const { return grid_.center(p); }
  Box global() const { return grid_.domain(); }

 private:
  UniformGrid grid_;
  std::size_t state_dim_ = 0;
  std::size_t input_dim_ = 0;
};

/// Splits flattened parameters into gain K' (m x n) and offset b' (m).
void unpack_affine(const Vector& params, std::size_t state_dim, std::size_t input_dim, Matrix& gain, Vector& offset);
Vector pack_affine(const Matrix& gain, const Vector& offset);
/// Evaluates the affine law with flattened parameters at x.
Vector apply_affine(const Vector& params, const Vector& x, std::size_t input_dim);

std::optional<CellId> abs_x(const StatePartition& part, const Vector& x);
std::optional<CellId> abs_p(const ControllerGrid& grid, const Vector& params);

nlohmann::json to_json(const UniformGrid& grid);

}  // namespace nncompose
