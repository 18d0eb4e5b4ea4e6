#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <vector>

#include "doctest.h"
#include "kstab/errors.hpp"
#include "kstab/fano.hpp"
#include "kstab/rational.hpp"

using namespace kstab;
using namespace kstab::fano;

namespace {

// Independent oracle: the integral evaluates in closed form to r/((n+1)d_i).
Rat s_closed_form(const PairConfig& cfg, int i) {
  Rat r = cfg.log_fano_index();
  return r / (Rat(cfg.n + 1) * Rat(cfg.degrees[static_cast<std::size_t>(i - 1)]));
}

}  // namespace

TEST_CASE("pair validation") {
  CHECK_THROWS_AS(PairConfig(0, {2}, {Rat(0)}), InputError);
  CHECK_THROWS_AS(PairConfig(2, {0}, {Rat(0)}), InputError);
  CHECK_THROWS_AS(PairConfig(2, {2}, {Rat(1)}), InputError);    // x = 1 excluded
  CHECK_THROWS_AS(PairConfig(2, {2}, {Rat(-1, 2)}), InputError);
  CHECK_THROWS_AS(PairConfig(2, {2, 3}, {Rat(0)}), InputError);  // size mismatch
}

TEST_CASE("log Fano index") {
  PairConfig cfg(2, {2}, {Rat(1, 2)});
  CHECK(cfg.log_fano_index() == 2);  // 3 - 1/2*2
  PairConfig cfg2(4, {2, 2}, {Rat(5, 6), Rat(5, 6)});
  CHECK(cfg2.log_fano_index() == Rat(5) - Rat(10, 3));
}

TEST_CASE("expected vanishing order: worked value") {
  PairConfig cfg(2, {2}, {Rat(0)});
  CHECK(s_invariant(cfg, 1) == Rat(1, 2));
  CHECK(beta(cfg, 1) == Rat(1, 2));
}

TEST_CASE("term-wise integration agrees with the closed form on a grid") {
  std::vector<QVec> coeff_choices = {
      {Rat(0)}, {Rat(1, 2)}, {Rat(3, 4)}, {Rat(1, 3)}, {Rat(9, 10)}};
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= n + 2; ++d) {
      for (const auto& c : coeff_choices) {
        PairConfig cfg(n, {d}, c);
        if (cfg.log_fano_index() <= 0) {
          CHECK_THROWS_AS(s_invariant(cfg, 1), InputError);
          continue;
        }
        CHECK(s_invariant(cfg, 1) == s_closed_form(cfg, 1));
      }
    }
  }
  // Two-divisor configurations.
  for (int n = 2; n <= 5; ++n)
    for (int d1 = 1; d1 <= 3; ++d1)
      for (int d2 = 1; d2 <= 3; ++d2) {
        PairConfig cfg(n, {d1, d2}, {Rat(1, 3), Rat(1, 5)});
        if (cfg.log_fano_index() <= 0) continue;
        CHECK(s_invariant(cfg, 1) == s_closed_form(cfg, 1));
        CHECK(s_invariant(cfg, 2) == s_closed_form(cfg, 2));
      }
}

TEST_CASE("beta is decreasing in its own coefficient, increasing in the others") {
  // The off-diagonal direction: raising x_j for j != i shrinks r, which
  // shrinks S_i, which raises beta_i.
  auto b = [](int n, std::vector<int> d, QVec x, int i) {
    return beta(PairConfig(n, std::move(d), std::move(x)), i);
  };
  for (const auto& step : {Rat(1, 7), Rat(1, 3)}) {
    Rat base1 = b(3, {2, 2}, {Rat(1, 4), Rat(1, 4)}, 1);
    Rat bumped_own = b(3, {2, 2}, {Rat(1, 4) + step, Rat(1, 4)}, 1);
    Rat bumped_other = b(3, {2, 2}, {Rat(1, 4), Rat(1, 4) + step}, 1);
    CHECK(bumped_own < base1);
    CHECK(bumped_other > base1);
  }
  // Single divisor: strictly decreasing in the coefficient.
  Rat prev = b(4, {3}, {Rat(0)}, 1);
  for (int k = 1; k <= 6; ++k) {
    Rat cur = b(4, {3}, {Rat(k) / 8}, 1);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("beta halfspace matches the invariant sign for sample points") {
  auto h = beta_halfspace(3, {2, 2}, 1);
  for (const auto& x : std::vector<QVec>{{Rat(0), Rat(0)},
                                         {Rat(1, 2), Rat(1, 4)},
                                         {Rat(3, 4), Rat(3, 4)},
                                         {Rat(9, 10), Rat(1, 10)}}) {
    PairConfig cfg(3, {2, 2}, x);
    if (cfg.log_fano_index() <= 0) continue;
    Rat bv = beta(cfg, 1);
    CHECK((bv >= 0) == h.satisfied_by(x));
    CHECK((bv == 0) == (h.slack(x) == 0));
  }
}

TEST_CASE("a-vector worked value and closed form") {
  auto av = a_vector(4, {2, 2});
  REQUIRE(av.values.size() == 2);
  CHECK(av.values[0] == Rat(5, 6));
  CHECK(av.values[1] == Rat(5, 6));
  CHECK(av.extremal);
  CHECK(!av.all_ones_degenerate);

  // Single divisor closed form a = 1 - (n+1-d)/(n d).
  for (int n = 2; n <= 8; ++n)
    for (int d = 2; d <= n; ++d) {
      auto one = a_vector(n, {d});
      REQUIRE(one.values.size() == 1);
      Rat expected = Rat(1) - Rat(n + 1 - d) / Rat(n * d);
      CHECK(one.values[0] == expected);
    }
}

TEST_CASE("a-vector zeroes beta exactly") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<std::vector<int>> degree_sets;
    for (int d = 1; d <= n; ++d) degree_sets.push_back({d});
    for (int d1 = 1; d1 <= 3; ++d1)
      for (int d2 = d1; d2 <= 3; ++d2)
        if (d1 + d2 < n + 1) degree_sets.push_back({d1, d2});
    for (const auto& ds : degree_sets) {
      long sum = 0;
      for (int d : ds) sum += d;
      if (sum >= n + 1 || static_cast<int>(ds.size()) > n) continue;
      auto av = a_vector(n, ds);
      if (av.all_ones_degenerate) continue;
      PairConfig cfg(n, ds, av.values);
      for (std::size_t i = 1; i <= ds.size(); ++i)
        CHECK(beta(cfg, static_cast<int>(i)) == 0);
    }
  }
}

TEST_CASE("a-vector input validation and degenerate case") {
  CHECK_THROWS_AS(a_vector(2, {1, 1, 1}), InputError);  // k > n
  CHECK_THROWS_AS(a_vector(2, {2, 2}), InputError);     // sum d >= n+1
  CHECK_THROWS_AS(a_vector(3, {4}), InputError);

  auto deg = a_vector(3, {1, 1});
  CHECK(deg.all_ones_degenerate);
  CHECK(deg.values == QVec{Rat(0), Rat(0)});
  CHECK(deg.extremal);

  auto line = a_vector(1, {1});
  CHECK(line.all_ones_degenerate);
  CHECK(line.extremal);
}

TEST_CASE("K-semistable domain for a conic in the plane") {
  auto p = kss_polytope(2, {2});
  CHECK(p.dim == 1);
  REQUIRE(p.vertices.size() == 2);
  CHECK(p.vertices[0] == QVec{Rat(0)});
  CHECK(p.vertices[1] == QVec{Rat(3, 4)});
  // H-form: the three stated families (for k = 1: x >= 0, x <= 1, beta >= 0,
  // degree bound), as given.
  CHECK(p.hrep.size() == 4);
}

TEST_CASE("K-semistable domain for two quadrics in P^4") {
  auto p = kss_polytope(4, {2, 2});
  CHECK(p.dim == 2);
  REQUIRE(p.vertices.size() == 4);
  std::vector<QVec> expected = {
      {Rat(0), Rat(0)}, {Rat(0), Rat(5, 8)}, {Rat(5, 8), Rat(0)}, {Rat(5, 6), Rat(5, 6)}};
  std::sort(expected.begin(), expected.end(), lex_less);
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(p.vertices[i] == expected[i]);

  // The a-vector is one of the vertices.
  auto av = a_vector(4, {2, 2});
  bool found = false;
  for (const auto& v : p.vertices) found = found || v == av.values;
  CHECK(found);
}

TEST_CASE("kss polytope validation") {
  CHECK_THROWS_AS(kss_polytope(1, {2}), InputError);   // needs n >= 2
  CHECK_THROWS_AS(kss_polytope(2, {4}), InputError);   // degree above n+1
}

TEST_CASE("iterated cone radii for two quadrics in P^4") {
  auto chain = cone_chain(4, {2, 2});
  REQUIRE(chain.steps.size() == 2);
  CHECK(chain.steps[0].radius == Rat(2, 3));
  CHECK(chain.steps[1].radius == Rat(1, 2));
  CHECK(chain.steps[0].coefficient == Rat(5, 6));
  CHECK(chain.steps[1].coefficient == Rat(5, 6));
  CHECK(chain.passed);
}

TEST_CASE("cone chain holds across the admissible grid") {
  for (int n = 2; n <= 6; ++n)
    for (int d1 = 1; d1 <= 3; ++d1)
      for (int d2 = 1; d2 <= 3; ++d2) {
        if (d1 + d2 >= n + 1) continue;
        if (d1 == 1 && d2 == 1) continue;  // degenerate all-ones
        auto chain = cone_chain(n, {d1, d2});
        CHECK(chain.passed);
        for (const auto& s : chain.steps) {
          CHECK(s.r_positive);
          CHECK(s.r_within_bound);
          CHECK(s.a_consistent);
        }
      }
}
