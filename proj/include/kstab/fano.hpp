#pragma once

#include <vector>

#include "kstab/polytope.hpp"
#include "kstab/rational.hpp"

namespace kstab::fano {

// A pair (P^n, sum_j x_j S_j) with S_j a degree-d_j hypersurface.  Boundary
// coefficients live in [0,1); the pair is log Fano iff
// r = n + 1 - sum_j x_j d_j > 0, which consumers check on use.
struct PairConfig {
  int n = 0;
  std::vector<int> degrees;
  QVec coefficients;

  PairConfig(int n_, std::vector<int> degrees_, QVec coefficients_);
  Rat log_fano_index() const;  // r above
};

// Expected-vanishing-order average of the i-th boundary divisor (1-based i),
// computed by exact term-wise integration of (1/r^n) * \int_0^{r/d_i}
// (r - d_i t)^n dt.  The closed form r / ((n+1) d_i) is a test oracle, not the
// computation path.
Rat s_invariant(const PairConfig& cfg, int i);

// Stability threshold beta = (1 - x_i) - S_i for the i-th boundary divisor.
Rat beta(const PairConfig& cfg, int i);

struct AVector {
  QVec values;
  bool extremal = false;        // vertex of the K-semistable domain
  bool all_ones_degenerate = false;
};

// The coefficient vector with beta identically zero, computed from the closed
// formula and cross-checked against the solution of the linear system
// beta_i(x) = 0; a disagreement is an internal error.  All-ones degrees are
// the excluded degenerate case: zero vector plus a warning flag.
AVector a_vector(int n, const std::vector<int>& degrees);

// Linear expansion of beta_i(x) >= 0 as a halfspace in coefficient space.
HalfSpace beta_halfspace(int n, const std::vector<int>& degrees, int i);

// K-semistable domain {x : 0 <= x_i <= 1, beta_i(x) >= 0, sum x_j d_j <= n+1}.
// The H-form lists exactly those constraint families; vertices are computed.
// The domain is formal: the underlying semistability hypothesis for the
// relevant complete intersections is assumed, not verified (flagged in
// serialized output).
QPolytope kss_polytope(int n, const std::vector<int>& degrees);

struct ConeChainStep {
  Rat radius;        // r_i
  Rat coefficient;   // a_i = 1 - r_i/(n-i+1)
  bool r_positive = false;
  bool r_within_bound = false;  // r_i <= n-i+1
  bool a_consistent = false;    // matches a_vector entry
};

struct ConeChain {
  std::vector<ConeChainStep> steps;
  bool passed = false;
};

// Iterated-cone bookkeeping: r_i = (n+1 - sum_{j<=i} d_j - sum_{j>i} a_j d_j)/d_i
// with a_i = 1 - r_i/(n-i+1), checked per step against the a-vector.
ConeChain cone_chain(int n, const std::vector<int>& degrees);

}  // namespace kstab::fano
