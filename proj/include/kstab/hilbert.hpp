#pragma once

#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

// Hilbert function of a complete intersection of the given degrees in P^n,
// by inclusion-exclusion over the Koszul resolution. m < 0 gives 0; an empty
// degree list gives the ambient value C(m+n, n).
Int ci_hilbert(int n, const std::vector<int>& degrees, long m);

struct ConeQuotientReport {
  int n = 0;
  int d = 0;
  long m_max = 0;
  bool checks_passed = false;
  std::vector<Int> cone_hilbert;  // graded dimensions for m = 0..m_max
};

// Verifies the graded-quotient identity behind the projective-cone
// degeneration: for all 0 <= i <= m <= m_max,
//   C((m-i)d+n, n) - C((m-i-1)d+n, n) = ci_hilbert(n, (d), (m-i)d),
// and reports the cone's graded dimensions sum_i ci_hilbert(n,(d),(m-i)d).
ConeQuotientReport cone_quotient_check(int n, int d, long m_max);

}  // namespace kstab
