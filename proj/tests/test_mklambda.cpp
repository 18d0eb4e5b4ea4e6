#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <vector>

#include "doctest.h"
#include "kstab/binomial.hpp"
#include "kstab/cm.hpp"
#include "kstab/errors.hpp"
#include "kstab/forms.hpp"
#include "kstab/oneps.hpp"

using namespace kstab;

namespace {

Form monomial(int nvars, std::vector<int> exps, Rat c = Rat(1)) {
  int deg = std::accumulate(exps.begin(), exps.end(), 0);
  return Form(nvars, deg, {FormTerm{c, std::move(exps)}});
}

// Enumeration oracle for the ambient determinant weight, valid for arbitrary
// integer weight vectors (no sum-zero requirement).
Int weight_sum_oracle(int nvars, const std::vector<long>& w, int m) {
  Int total = 0;
  for (const auto& a : enumerate_exponents(nvars, m)) {
    Int t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += Int(w[i]) * a[i];
    total += t;
  }
  return total;
}

}  // namespace

TEST_CASE("degree-m exponent enumeration") {
  auto e = enumerate_exponents(2, 2);
  REQUIRE(e.size() == 3);
  for (const auto& a : e) CHECK(a[0] + a[1] == 2);
  for (int nvars = 1; nvars <= 4; ++nvars)
    for (int m = 0; m <= 5; ++m)
      CHECK(Int(enumerate_exponents(nvars, m).size()) == binomial(m + nvars - 1, nvars - 1));
  CHECK(enumerate_exponents(3, -1).empty());
}

TEST_CASE("one-parameter subgroup validation and normalization") {
  CHECK_THROWS_AS(OnePS({1, 0}), InputError);   // sum nonzero
  CHECK_THROWS_AS(OnePS({5}), InputError);      // too short
  CHECK(OnePS({2, -2}).weights == std::vector<long>{1, -1});
  CHECK(OnePS({4, -2, -2}).weights == std::vector<long>{2, -1, -1});
  CHECK(OnePS({0, 0}).is_zero());
  CHECK(!OnePS({1, -1}).is_zero());
}

TEST_CASE("Weyl canonical representative") {
  CHECK(weyl_canonical({-1, 0, 1}) == std::vector<long>{1, 0, -1});
  CHECK(weyl_canonical({-2, 1, 1}) == std::vector<long>{2, -1, -1});
  CHECK(weyl_canonical({1, 1, -2}) == std::vector<long>{2, -1, -1});
}

TEST_CASE("ambient determinant weight vanishes for traceless actions") {
  OnePS w({1, -1});
  for (long m = 0; m <= 6; ++m) CHECK(equivariant_det_weight(1, w, m) == 0);
  OnePS w3({3, -1, -2});
  for (long m = 0; m <= 5; ++m) CHECK(equivariant_det_weight(2, w3, m) == 0);
}

TEST_CASE("closed form matches enumeration for arbitrary weights") {
  std::vector<std::pair<int, std::vector<long>>> cases = {
      {1, {2, 0}}, {1, {3, 5}}, {2, {1, 2, 3}}, {2, {-1, 4, 0}}, {3, {1, 1, 1, 1}}};
  for (const auto& [n, w] : cases) {
    long sum = std::accumulate(w.begin(), w.end(), 0L);
    for (int m = 0; m <= 8; ++m)
      CHECK(weight_sum_oracle(n + 1, w, m) == det_weight_closed_form(n, sum, m));
  }
  CHECK(det_weight_closed_form(2, 5, -1) == 0);
}

TEST_CASE("quotient determinant weight: worked conic example") {
  OnePS w({1, -1});
  Form f = monomial(2, {2, 0});
  CHECK(mu(f, w) == -2);
  for (long m = 2; m <= 8; ++m)
    CHECK(equivariant_det_weight(1, w, m, f) == Int(-2 * m + 2));
  // Fit in the binomial basis: value(m) = 2 C(m,0) - 2 C(m,1).
  std::vector<std::pair<long, Rat>> samples;
  for (long m = 2; m <= 6; ++m)
    samples.push_back({m, Rat(equivariant_det_weight(1, w, m, f))});
  auto b = binomial_interpolate(samples, 1);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == 2);
  CHECK(b[1] == -2);
}

TEST_CASE("quotient weight input validation") {
  OnePS w({1, -1});
  Form f = monomial(2, {2, 0});
  CHECK_THROWS_AS(equivariant_det_weight(1, w, -1), InputError);
  CHECK_THROWS_AS(equivariant_det_weight(1, w, 1, f), InputError);  // e > m
  CHECK_THROWS_AS(equivariant_det_weight(2, w, 3), InputError);     // length mismatch
}

TEST_CASE("binomial interpolation with holdout verification") {
  // Planted polynomial 1 - 2 C(m,1) + 3 C(m,2).
  auto value = [](long m) -> Rat { return Rat(1) - Rat(2) * Rat(binomial(m, 1)) + Rat(3) * Rat(binomial(m, 2)); };
  std::vector<std::pair<long, Rat>> samples;
  for (long m = 4; m <= 9; ++m) samples.push_back({m, value(m)});
  auto b = binomial_interpolate(samples, 2);
  CHECK(b == QVec{Rat(1), Rat(-2), Rat(3)});

  // A corrupted holdout sample must be caught.
  auto bad = samples;
  bad.back().second += 1;
  CHECK_THROWS_AS(binomial_interpolate(bad, 2), ConsistencyError);

  // Exactly deg+1 samples leave no holdout.
  std::vector<std::pair<long, Rat>> tight(samples.begin(), samples.begin() + 3);
  CHECK_THROWS_AS(binomial_interpolate(tight, 2), ConsistencyError);

  auto dup = samples;
  dup[1].first = dup[0].first;
  CHECK_THROWS_AS(binomial_interpolate(dup, 2), InputError);
}

TEST_CASE("top expansion coefficients from planted samples") {
  int n = 2;
  auto total = [&](long m) -> Rat {
    return Rat(7) * Rat(binomial(m, 3)) + Rat(5) * Rat(binomial(m, 2)) - Rat(binomial(m, 1)) +
           Rat(4);
  };
  auto divisor = [&](long m) -> Rat {
    return Rat(11) * Rat(binomial(m, 2)) + Rat(2) * Rat(binomial(m, 1));
  };
  std::vector<std::pair<long, Rat>> ts, ds;
  for (long m = 3; m <= 8; ++m) {
    ts.push_back({m, total(m)});
    ds.push_back({m, divisor(m)});
  }
  auto mk = mk_top_coefficients(n, ts, ds);
  CHECK(mk.lambda_top == 7);
  CHECK(mk.lambda_sub == 5);
  CHECK(mk.lambda_divisor == 11);
}

TEST_CASE("binomial-basis expansion of the ambient sample shape") {
  // Samples of the form c * C(m+n, n+1) expand with a nonzero subleading
  // term: (lambda_top, lambda_sub) = (c, n c).  The pair (c, 0) belongs to
  // the pure basis vector c * C(m, n+1).
  int n = 3;
  Rat c(6);
  std::vector<std::pair<long, Rat>> shifted, pure, divisor;
  for (long m = n + 1; m <= n + 7; ++m) {
    shifted.push_back({m, c * Rat(binomial(m + n, n + 1))});
    pure.push_back({m, c * Rat(binomial(m, n + 1))});
    divisor.push_back({m, Rat(0)});
  }
  auto a = mk_top_coefficients(n, shifted, divisor);
  CHECK(a.lambda_top == c);
  CHECK(a.lambda_sub == Rat(n) * c);
  auto b = mk_top_coefficients(n, pure, divisor);
  CHECK(b.lambda_top == c);
  CHECK(b.lambda_sub == 0);
}

TEST_CASE("expansion sampling window starts at n+1") {
  std::vector<std::pair<long, Rat>> ts, ds;
  for (long m = 1; m <= 8; ++m) {
    ts.push_back({m, Rat(0)});
    ds.push_back({m, Rat(0)});
  }
  CHECK_THROWS_AS(mk_top_coefficients(2, ts, ds), InputError);
}

TEST_CASE("CM weight of the conic family: all three routes") {
  EquivariantFamily fam(1, {monomial(2, {2, 0})}, {Rat(1)});
  OnePS w({1, -1});
  auto r = cm_weight(fam, w, CMRoute::all);
  REQUIRE(r.def31.has_value());
  REQUIRE(r.lem32.has_value());
  REQUIRE(r.lem41.has_value());
  LinBeta expected{Rat(0), Rat(-8)};
  CHECK(*r.def31 == expected);
  CHECK(*r.lem32 == expected);
  CHECK(*r.lem41 == expected);
  CHECK(r.agree);
  CHECK(r.scalar == 1);
  CHECK(r.hm_weights == std::vector<long>{-2});
  CHECK(r.gamma == QVec{Rat(1)});
  CHECK(r.gamma_raw == QVec{Rat(4)});

  // Scaling the multiplier scales the weight linearly.
  EquivariantFamily fam3(1, {monomial(2, {2, 0})}, {Rat(3)});
  auto r3 = cm_weight(fam3, w, CMRoute::all);
  CHECK(r3.def31->c1 == Rat(-24));
}

TEST_CASE("CM weight vanishes for a balanced form") {
  EquivariantFamily fam(2, {monomial(3, {1, 1, 1})}, {Rat(1)});
  auto r = cm_weight(fam, OnePS({1, 0, -1}), CMRoute::all);
  CHECK(*r.def31 == LinBeta{Rat(0), Rat(0)});
  CHECK(r.agree);
  CHECK(r.hm_weights == std::vector<long>{0});
}

TEST_CASE("CM weight with fixed beta evaluates the line") {
  EquivariantFamily fam(1, {monomial(2, {2, 0})}, {Rat(1)}, Rat(1, 2));
  auto r = cm_weight(fam, OnePS({1, -1}), CMRoute::all);
  REQUIRE(r.beta_value.has_value());
  CHECK(*r.beta_value == Rat(1, 2));
  CHECK(r.def31->eval(*r.beta_value) == Rat(-4));
  CHECK_THROWS_AS(EquivariantFamily(1, {monomial(2, {2, 0})}, {Rat(1)}, Rat(2)), InputError);
  CHECK_THROWS_AS(EquivariantFamily(1, {monomial(2, {2, 0})}, {Rat(0)}), InputError);
}

TEST_CASE("single-route requests fill only that route") {
  EquivariantFamily fam(1, {monomial(2, {2, 0})}, {Rat(1)});
  auto r = cm_weight(fam, OnePS({1, -1}), CMRoute::lem32);
  CHECK(!r.def31.has_value());
  CHECK(r.lem32.has_value());
  CHECK(!r.lem41.has_value());
  CHECK(*r.lem32 == LinBeta{Rat(0), Rat(-8)});
}

TEST_CASE("two-divisor family weight") {
  EquivariantFamily fam(1, {monomial(2, {2, 0}), monomial(2, {0, 2})}, {Rat(1), Rat(2)});
  auto r = cm_weight(fam, OnePS({1, -1}), CMRoute::all);
  // mu = (-2, 2), so the total is 4 (1*(-2) + 2*2) beta = 8 beta.
  CHECK(*r.lem41 == LinBeta{Rat(0), Rat(8)});
  CHECK(r.agree);
  CHECK(r.gamma == QVec{Rat(1), Rat(2)});
}

TEST_CASE("route agreement sweep over small families") {
  std::vector<Form> pool1 = {
      monomial(2, {2, 0}), monomial(2, {1, 1}), monomial(2, {0, 3}),
      Form(2, 2, {FormTerm{Rat(1), {2, 0}}, FormTerm{Rat(-1), {0, 2}}}),
      Form(2, 3, {FormTerm{Rat(2), {3, 0}}, FormTerm{Rat(1), {1, 2}}})};
  std::vector<std::vector<long>> ws1 = {{1, -1}, {2, -2}, {3, -3}};
  for (const auto& f : pool1)
    for (const auto& wv : ws1) {
      EquivariantFamily fam(1, {f}, {Rat(2, 3)});
      auto r = cm_weight(fam, OnePS(wv), CMRoute::all);
      CHECK(r.agree);
      CHECK(r.def31->c0 == 0);  // the weight is a pure multiple of beta
    }
  std::vector<Form> pool2 = {
      monomial(3, {2, 0, 0}), monomial(3, {0, 1, 1}),
      Form(3, 2, {FormTerm{Rat(1), {2, 0, 0}}, FormTerm{Rat(1), {0, 2, 0}},
                  FormTerm{Rat(1), {0, 0, 2}}}),
      Form(3, 3, {FormTerm{Rat(1), {1, 1, 1}}, FormTerm{Rat(5), {3, 0, 0}}})};
  std::vector<std::vector<long>> ws2 = {{1, -1, 0}, {2, -1, -1}, {1, 1, -2}, {5, -2, -3}};
  for (const auto& f : pool2)
    for (const auto& wv : ws2) {
      EquivariantFamily fam(2, {f}, {Rat(1)});
      auto r = cm_weight(fam, OnePS(wv), CMRoute::all);
      CHECK(r.agree);
      CHECK(r.def31->c0 == 0);
    }
}

TEST_CASE("product family dictionary") {
  auto p = product_family_parameters(4, {2, 2}, {Rat(1), Rat(1)});
  CHECK(p.volume == 625);
  CHECK(p.l == QVec{Rat(2, 5), Rat(2, 5)});
  CHECK(p.c == QVec{Rat(2, 5), Rat(2, 5)});
}

TEST_CASE("effective linearization recovers the multipliers") {
  auto single = effective_linearization(1, {2}, {Rat(1)});
  CHECK(single.gamma == QVec{Rat(1)});
  CHECK(single.gamma_raw == QVec{Rat(4)});
  CHECK(single.samples >= 20);

  auto pair = effective_linearization(1, {2, 4}, {Rat(1), Rat(2)});
  CHECK(pair.gamma == QVec{Rat(1), Rat(2)});

  // Proportional multipliers give the same normalized linearization.
  auto scaled = effective_linearization(1, {2, 4}, {Rat(3), Rat(6)});
  CHECK(scaled.gamma == pair.gamma);

  auto planar = effective_linearization(2, {2, 3}, {Rat(1, 2), Rat(1, 3)});
  REQUIRE(planar.gamma.size() == 2);
  CHECK(planar.gamma[0] / planar.gamma[1] == Rat(3, 2));
}
