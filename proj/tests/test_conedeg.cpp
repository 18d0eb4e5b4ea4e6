#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "kstab/binomial.hpp"
#include "kstab/errors.hpp"
#include "kstab/hilbert.hpp"

using namespace kstab;

namespace {

// Independent oracle: coefficient of t^m in prod_j (1 - t^{d_j}) / (1-t)^{n+1},
// computed by expanding the numerator and then taking n+1 running prefix sums
// (each prefix sum is one division by 1 - t).  No binomial coefficients.
Int series_oracle(int n, const std::vector<int>& degrees, long m) {
  if (m < 0) return 0;
  std::vector<Int> series(static_cast<std::size_t>(m) + 1, Int(0));
  series[0] = 1;
  for (int d : degrees) {
    // Multiply by (1 - t^d).
    for (long j = m; j >= d; --j) series[j] -= series[j - d];
  }
  for (int pass = 0; pass <= n; ++pass)
    for (long j = 1; j <= m; ++j) series[j] += series[j - 1];
  return series[m];
}

}  // namespace

TEST_CASE("graded dimension worked values") {
  CHECK(ci_hilbert(2, {3}, 3) == 9);
  CHECK(ci_hilbert(3, {}, 2) == 10);  // ambient polynomial ring
  for (long m = 0; m <= 10; ++m) CHECK(ci_hilbert(1, {}, m) == m + 1);
  // One hypersurface: ambient minus the shifted ambient.
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d)
      for (long m = 0; m <= 8; ++m)
        CHECK(ci_hilbert(n, {d}, m) == binomial(m + n, n) - binomial(m - d + n, n));
  CHECK(ci_hilbert(2, {2}, -1) == 0);
}

TEST_CASE("graded dimension matches the power series oracle") {
  std::vector<std::vector<int>> degree_sets = {{},    {1},    {2},    {4},      {2, 2},
                                               {2, 3}, {3, 4}, {1, 2}, {2, 2, 2}, {2, 3, 4}};
  for (int n = 1; n <= 5; ++n)
    for (const auto& ds : degree_sets) {
      if (static_cast<int>(ds.size()) > n) continue;
      for (long m = 0; m <= 30; ++m) CHECK(ci_hilbert(n, ds, m) == series_oracle(n, ds, m));
    }
}

TEST_CASE("degrees above the section degree leave the ambient dimension") {
  for (long m = 0; m <= 5; ++m) CHECK(ci_hilbert(3, {static_cast<int>(m) + 1}, m) == binomial(m + 3, 3));
}

TEST_CASE("graded dimension input validation") {
  CHECK_THROWS_AS(ci_hilbert(0, {2}, 3), InputError);
  CHECK_THROWS_AS(ci_hilbert(2, {0}, 3), InputError);
  CHECK_THROWS_AS(ci_hilbert(2, std::vector<int>(21, 1), 3), ResourceError);
}

TEST_CASE("cone quotient identities on the worked configurations") {
  auto r = cone_quotient_check(2, 2, 6);
  CHECK(r.checks_passed);
  REQUIRE(r.cone_hilbert.size() == 7);
  // m = 0 is the constant; m = 1 adds the quadric generators.
  CHECK(r.cone_hilbert[0] == 1);
  CHECK(r.cone_hilbert[1] == 1 + ci_hilbert(2, {2}, 2));

  auto r2 = cone_quotient_check(4, 2, 10);
  CHECK(r2.checks_passed);

  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= n + 1; ++d) CHECK(cone_quotient_check(n, d, 12).checks_passed);
}

TEST_CASE("cone graded dimensions grow strictly") {
  auto r = cone_quotient_check(3, 2, 10);
  for (std::size_t m = 1; m < r.cone_hilbert.size(); ++m)
    CHECK(r.cone_hilbert[m] > r.cone_hilbert[m - 1]);
}

TEST_CASE("cone graded dimension is the diagonal sum") {
  int n = 3, d = 2;
  auto r = cone_quotient_check(n, d, 8);
  for (long m = 0; m <= 8; ++m) {
    Int expected = 0;
    for (long i = 0; i <= m; ++i) expected += ci_hilbert(n, {d}, (m - i) * d);
    CHECK(r.cone_hilbert[static_cast<std::size_t>(m)] == expected);
  }
}

TEST_CASE("cone quotient validation") {
  CHECK_THROWS_AS(cone_quotient_check(2, 0, 5), InputError);
  CHECK_THROWS_AS(cone_quotient_check(2, 4, 5), InputError);  // d > n+1
  CHECK_THROWS_AS(cone_quotient_check(2, 2, 0), InputError);
}
