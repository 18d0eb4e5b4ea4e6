#include "kstab/hilbert.hpp"

#include "kstab/binomial.hpp"
#include "kstab/errors.hpp"

namespace kstab {

Int ci_hilbert(int n, const std::vector<int>& degrees, long m) {
  if (n < 1) throw InputError("n must be at least 1");
  for (int d : degrees)
    if (d < 1) throw InputError("degrees must be positive");
  if (degrees.size() > 20) throw ResourceError("too many degrees for inclusion-exclusion");
  if (m < 0) return 0;

  Int total = 0;
  std::size_t k = degrees.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    long shift = 0;
    int bits = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (mask & (std::size_t{1} << j)) {
        shift += degrees[j];
        ++bits;
      }
    Int term = binomial(m - shift + n, n);
    total += (bits % 2 == 0) ? term : -term;
  }
  return total;
}

ConeQuotientReport cone_quotient_check(int n, int d, long m_max) {
  if (d < 1 || d > n + 1) throw InputError("degree must satisfy 1 <= d <= n+1");
  if (m_max < 1) throw InputError("m_max must be at least 1");

  ConeQuotientReport report;
  report.n = n;
  report.d = d;
  report.m_max = m_max;
  for (long m = 0; m <= m_max; ++m) {
    Int graded = 0;
    for (long i = 0; i <= m; ++i) {
      long t = m - i;
      Int quotient = binomial(t * d + n, n) - binomial((t - 1) * d + n, n);
      Int hypersurface = ci_hilbert(n, {d}, t * d);
      if (quotient != hypersurface)
        throw ConsistencyError("graded quotient identity fails at m=" + std::to_string(m) +
                               " i=" + std::to_string(i));
      graded += hypersurface;
    }
    report.cone_hilbert.push_back(graded);
  }
  report.checks_passed = true;
  return report;
}

}  // namespace kstab
