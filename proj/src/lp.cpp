#include "kstab/lp.hpp"

#include <cstddef>

#include "kstab/errors.hpp"

namespace kstab {

namespace {

// Dense phase-1 tableau.  Columns 0..n-1 are the original variables, columns
// n..n+m-1 the artificials, column n+m the rhs.  Row m is the (negated)
// phase-1 objective row.
struct Tableau {
  std::size_t m, n;
  QMatrix t;
  std::vector<std::size_t> basis;  // basis[i] = column basic in row i

  Tableau(const QMatrix& a, const QVec& b) : m(a.size()), n(a.empty() ? 0 : a[0].size()) {
    t.assign(m + 1, QVec(n + m + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
      int sign = (b[i] < 0) ? -1 : 1;
      for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * a[i][j];
      t[i][n + i] = 1;
      t[i][n + m] = sign * b[i];
    }
    basis.resize(m);
    // objective: minimize sum of artificials; cost row holds reduced costs,
    // start from c_j - sum over rows (artificial basis)
    for (std::size_t i = 0; i < m; ++i) {
      basis[i] = n + i;
      for (std::size_t j = 0; j <= n + m; ++j) t[m][j] -= t[i][j];
    }
    // artificials carry unit cost, so their reduced cost starts at 1 - 1 = 0
    for (std::size_t i = 0; i < m; ++i) t[m][n + i] += 1;
  }

  void pivot(std::size_t pr, std::size_t pc) {
    Rat inv = 1 / t[pr][pc];
    for (auto& x : t[pr]) x *= inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == pr || t[i][pc] == 0) continue;
      Rat f = t[i][pc];
      for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[pr][j];
    }
    basis[pr] = pc;
  }

  // Bland: entering = lowest-index column with negative reduced cost,
  // leaving = lowest-index basic row among the ratio-test minimizers.
  void run() {
    for (;;) {
      std::size_t pc = n + m;
      for (std::size_t j = 0; j < n + m; ++j)
        if (t[m][j] < 0) {
          pc = j;
          break;
        }
      if (pc == n + m) return;
      std::size_t pr = m;
      Rat best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][pc] <= 0) continue;
        Rat ratio = t[i][n + m] / t[i][pc];
        if (pr == m || ratio < best || (ratio == best && basis[i] < basis[pr])) {
          pr = i;
          best = ratio;
        }
      }
      if (pr == m)
        throw ConsistencyError("phase-1 objective unbounded");  // cannot happen: bounded below by 0
      pivot(pr, pc);
    }
  }
};

}  // namespace

LPFeasibility lp_feasible_eq(const QMatrix& a, const QVec& b) {
  LPFeasibility res;
  std::size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
  if (m == 0) {
    res.feasible = true;
    res.point.assign(n, Rat(0));
    return res;
  }
  Tableau tab(a, b);
  tab.run();
  Rat opt = -tab.t[m][n + m];  // objective value = sum of artificials
  if (opt == 0) {
    res.feasible = true;
    res.point.assign(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
      if (tab.basis[i] < n) res.point[tab.basis[i]] = tab.t[i][n + m];
    // exact re-check
    for (std::size_t i = 0; i < m; ++i) {
      Rat s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a[i][j] * res.point[j];
      if (s != b[i]) throw ConsistencyError("simplex produced an infeasible point");
    }
    return res;
  }
  // Infeasible.  Simplex multipliers y_i = 1 - (reduced cost of artificial i),
  // valid for the sign-flipped rows; undo the flips.
  res.feasible = false;
  res.farkas.assign(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    Rat y = Rat(1) - tab.t[m][n + i];
    res.farkas[i] = (b[i] < 0) ? -y : y;
  }
  Rat yb = 0;
  for (std::size_t i = 0; i < m; ++i) yb += res.farkas[i] * b[i];
  if (yb <= 0) throw ConsistencyError("Farkas certificate failed: yb <= 0");
  for (std::size_t j = 0; j < n; ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) s += res.farkas[i] * a[i][j];
    if (s > 0) throw ConsistencyError("Farkas certificate failed: yA has a positive entry");
  }
  return res;
}

LPPoint lp_feasible_system(const QMatrix& ineq_a, const QVec& ineq_b, const QMatrix& eq_a,
                           const QVec& eq_b) {
  // Standard-form encoding: x = u - v with u, v >= 0 and a slack per
  // inequality:  ineq_a (u - v) - s = ineq_b,  eq_a (u - v) = eq_b.
  std::size_t n = 0;
  if (!ineq_a.empty())
    n = ineq_a[0].size();
  else if (!eq_a.empty())
    n = eq_a[0].size();
  std::size_t mi = ineq_a.size(), me = eq_a.size();
  std::size_t cols = 2 * n + mi;
  QMatrix a;
  QVec b;
  for (std::size_t i = 0; i < mi; ++i) {
    QVec row(cols, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = ineq_a[i][j];
      row[n + j] = -ineq_a[i][j];
    }
    row[2 * n + i] = -1;
    a.push_back(std::move(row));
    b.push_back(ineq_b[i]);
  }
  for (std::size_t i = 0; i < me; ++i) {
    QVec row(cols, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = eq_a[i][j];
      row[n + j] = -eq_a[i][j];
    }
    a.push_back(std::move(row));
    b.push_back(eq_b[i]);
  }
  auto fe = lp_feasible_eq(a, b);
  LPPoint out;
  out.feasible = fe.feasible;
  if (fe.feasible) {
    out.x.assign(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) out.x[j] = fe.point[j] - fe.point[n + j];
  }
  return out;
}

}  // namespace kstab
