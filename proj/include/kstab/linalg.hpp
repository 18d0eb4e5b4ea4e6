#pragma once

#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

using QMatrix = std::vector<QVec>;  // row major; rows may be empty only if cols known

struct LinearSolveResult {
  enum class Kind { Unique, Underdetermined, Inconsistent };
  Kind kind = Kind::Inconsistent;
  QVec solution;                 // valid for Unique and (a particular one) for Underdetermined
  std::vector<QVec> nullspace;   // basis of the homogeneous solution space (Underdetermined)
};

// Exact Gaussian elimination over Q.  Distinguishes a unique solution, an
// inconsistent system, and an underdetermined one (particular solution plus a
// nullspace basis).
LinearSolveResult solve_linear_system(const QMatrix& a, const QVec& b);

// Basis of {x : a x = 0}, computed by reduced row echelon form.  The basis is
// the standard free-variable one, deterministic for a given row order.
std::vector<QVec> nullspace(const QMatrix& a, std::size_t cols);

std::size_t rank(QMatrix a);

// Dimension of the affine span of a point set (-1 for empty input).
long affine_dim(const std::vector<QVec>& points);

}  // namespace kstab
