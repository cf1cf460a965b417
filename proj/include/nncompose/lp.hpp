#pragma once

#include "nncompose/box.hpp"

namespace nncompose {

struct LpResult {
  bool bounded = true;
  double value = 0.0;
  Vector x;
};

/// Dense primal simplex for max c'x s.t. A x <= b, x >= 0, with b >= 0 so the
/// slack basis is feasible. Bland's rule; meant for the tiny programs of region
/// enumeration.
LpResult lp_maximize(const Matrix& a, const Vector& b, const Vector& c);

struct MarginResult {
  double margin = 0.0;
  Vector point;
};

/// Largest margin t (capped at 1) such that some x in the box satisfies
/// rows(a) x + offset >= t for every row, rows normalized to unit 2-norm.
/// A negative margin means the system has no solution in the box.
MarginResult max_margin(const Matrix& a, const Vector& offset, const Box& box);

}  // namespace nncompose
