#pragma once

#include "kstab/linalg.hpp"
#include "kstab/rational.hpp"

namespace kstab {

// Feasibility of {z >= 0, A z = b} by exact phase-1 simplex (Bland's rule, so
// termination is unconditional).  Infeasible systems come with a Farkas
// certificate y satisfying yᵀA <= 0 componentwise and yᵀb > 0, re-verified
// exactly before returning.
struct LPFeasibility {
  bool feasible = false;
  QVec point;   // a basic feasible z when feasible
  QVec farkas;  // y as above when infeasible
};

LPFeasibility lp_feasible_eq(const QMatrix& a, const QVec& b);

// Feasibility of {x free : ineq_a x >= ineq_b, eq_a x = eq_b}.
// Returns a feasible point if one exists.
struct LPPoint {
  bool feasible = false;
  QVec x;
};

LPPoint lp_feasible_system(const QMatrix& ineq_a, const QVec& ineq_b, const QMatrix& eq_a,
                           const QVec& eq_b);

}  // namespace kstab
