#pragma once

#include <vector>

#include "kstab/forms.hpp"
#include "kstab/rational.hpp"

namespace kstab {

// Diagonal one-parameter subgroup of SL(n+1): integer weights summing to zero.
struct OnePS {
  std::vector<long> weights;

  explicit OnePS(std::vector<long> w);

  bool is_zero() const;
};

// Raw cores, usable on arbitrary integer weight vectors.
long min_pairing(const std::vector<std::vector<int>>& support, const std::vector<long>& w);
long mu_core(const Form& f, const std::vector<long>& w);

// mu(f, w) = -min over the support of f of <alpha, w>.
long mu(const Form& f, const OnePS& w);

// Weyl canonical representative: sort descending, then the lex-larger of the
// pair {v, -v}. Collapses the S_{n+1} x {+-1} orbit to one vector.
std::vector<long> weyl_canonical(const std::vector<long>& w);

}  // namespace kstab
