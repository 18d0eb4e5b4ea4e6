#pragma once

#include <vector>

#include "kstab/arrangement.hpp"
#include "kstab/oneps.hpp"
#include "kstab/stability.hpp"

namespace kstab {

// A wall of the linearization simplex: the hyperplane sum_j gamma_j m_j = 0
// together with a realizing witness (a candidate w and one monomial per form
// whose Hilbert-Mumford weights are exactly the m_j).
struct Wall {
  HalfSpace hyperplane;  // canonical equality through the origin
  std::vector<long> witness_w;
  std::vector<long> m_values;
  std::vector<std::vector<int>> witness_exponents;
};

struct VGITChambers {
  int n = 0;
  std::vector<int> degrees;
  QPolytope ambient;  // {gamma_j >= 0, sum gamma_j = 1}
  std::vector<Wall> walls;
  Arrangement arrangement;
};

// Wall-and-chamber decomposition of the linearization simplex for tuples of
// hypersurfaces of the given degrees. Requires k >= 2.
VGITChambers vgit_chambers(int n, const std::vector<int>& degrees, long cap = kDefaultCap);

}  // namespace kstab
