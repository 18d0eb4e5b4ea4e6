#include "kstab/binomial.hpp"

namespace kstab {

Int binomial(long a, long b) {
  if (a < 0 || b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  Int r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= (a - b + i);
    r /= i;  // exact at every step: r is C(a-b+i, i)
  }
  return r;
}

Int factorial(long n) {
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace kstab
