#pragma once

#include <random>
#include <vector>

namespace kstab {

// Seeded sampling helpers. mt19937_64 has a standardized output sequence and
// the reductions below avoid distribution objects, so samples are portable.
inline long rand_range(std::mt19937_64& gen, long lo, long hi) {
  unsigned long span = static_cast<unsigned long>(hi - lo) + 1;
  return lo + static_cast<long>(gen() % span);
}

// Nonzero integer vector with entries in [-amplitude, amplitude] summing to 0.
inline std::vector<long> random_sum_zero(std::mt19937_64& gen, int len, long amplitude) {
  std::vector<long> w(len);
  while (true) {
    long sum = 0;
    bool zero = true;
    for (int i = 0; i < len; ++i) {
      w[i] = rand_range(gen, -amplitude, amplitude);
      sum += w[i];
      zero = zero && w[i] == 0;
    }
    if (sum == 0 && !zero) return w;
  }
}

}  // namespace kstab
