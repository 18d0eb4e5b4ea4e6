#pragma once

#include "kstab/rational.hpp"

namespace kstab {

// Binomial coefficient with the truncating convention used throughout:
// C(a, b) = 0 whenever a < 0, b < 0 or a < b.  No generalized extension to
// negative upper index.
Int binomial(long a, long b);

Int factorial(long n);

}  // namespace kstab
