#include "kstab/linalg.hpp"

#include <cstddef>

namespace kstab {

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(QMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rat inv = 1 / m[row][col];
    for (std::size_t j = col; j < m[row].size(); ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j < m[i].size(); ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

LinearSolveResult solve_linear_system(const QMatrix& a, const QVec& b) {
  LinearSolveResult res;
  std::size_t cols = a.empty() ? 0 : a[0].size();
  QMatrix aug(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  auto pivots = rref(aug, cols);
  for (std::size_t i = pivots.size(); i < aug.size(); ++i)
    if (aug[i][cols] != 0) {
      res.kind = LinearSolveResult::Kind::Inconsistent;
      return res;
    }

  QVec x(cols, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  res.solution = x;

  if (pivots.size() == cols) {
    res.kind = LinearSolveResult::Kind::Unique;
    return res;
  }
  res.kind = LinearSolveResult::Kind::Underdetermined;
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVec v(cols, Rat(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug[i][free_col];
    res.nullspace.push_back(std::move(v));
  }
  return res;
}

std::vector<QVec> nullspace(const QMatrix& a, std::size_t cols) {
  QMatrix m = a;
  for (auto& r : m) r.resize(cols, Rat(0));
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVec v(cols, Rat(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(QMatrix a) {
  if (a.empty()) return 0;
  return rref(a, a[0].size()).size();
}

long affine_dim(const std::vector<QVec>& points) {
  if (points.empty()) return -1;
  QMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(vec_sub(points[i], points[0]));
  if (diffs.empty()) return 0;
  return static_cast<long>(rank(std::move(diffs)));
}

}  // namespace kstab
