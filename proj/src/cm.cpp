#include "kstab/cm.hpp"

#include <algorithm>

#include "kstab/binomial.hpp"
#include "kstab/errors.hpp"
#include "kstab/linalg.hpp"
#include "kstab/rng.hpp"

namespace kstab {

namespace {

Rat rat_pow(const Rat& x, int e) {
  Rat r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

void check_weight_length(int n, const OnePS& w) {
  if (static_cast<int>(w.weights.size()) != n + 1)
    throw InputError("one-parameter subgroup length must be n+1");
}

void exponents_rec(int nvars, int total, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == nvars - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = total; e >= 0; --e) {
    cur.push_back(e);
    exponents_rec(nvars, total - e, cur, out);
    cur.pop_back();
  }
}

// Walks exponent vectors in place instead of materializing them; partial
// pairings stay in a long batch that is flushed to the Int well before the
// batch could overflow.
constexpr long kPairingBatchCap = 1L << 52;

void pairing_walk(int i, int n, const std::vector<long>& w, long rem, long partial, long& batch,
                  Int& total) {
  if (i == n) {
    if (batch > kPairingBatchCap || batch < -kPairingBatchCap) {
      total += batch;
      batch = 0;
    }
    batch += partial + rem * w[static_cast<std::size_t>(n)];
    return;
  }
  for (long e = rem; e >= 0; --e)
    pairing_walk(i + 1, n, w, rem - e, partial + e * w[static_cast<std::size_t>(i)], batch,
                 total);
}

// sum over |alpha| = m of <alpha, w>, by enumeration; per-monomial pairings
// fit in long for the sample sizes used here.
Int pairing_sum(int n, const std::vector<long>& w, long m) {
  if (m < 0) return 0;
  Int total = 0;
  long batch = 0;
  pairing_walk(0, n, w, m, 0, batch, total);
  total += batch;
  return total;
}

struct SampleGrid {
  long start;
  int count;
};

SampleGrid def31_grid(int n, const std::vector<Form>& forms) {
  long e_max = 1;
  for (const auto& f : forms) e_max = std::max(e_max, static_cast<long>(f.degree));
  long start = std::max<long>(n + 1, (e_max + n) / (n + 1));
  return {start, n + 4};
}

// Interpolation route: sample determinant weights of powers of -K = O(n+1),
// extract the top expansion coefficients, assemble the exponent formula.
Rat def31_weight(const EquivariantFamily& fam, const OnePS& w, const Rat& beta) {
  int n = fam.n;
  auto grid = def31_grid(n, fam.forms);
  std::vector<std::pair<long, Rat>> total, divisor;
  for (int i = 0; i < grid.count; ++i) {
    long mh = grid.start + i;
    long m = mh * (n + 1);
    total.emplace_back(mh, Rat(equivariant_det_weight(n, w, m)));
    Rat dval = 0;
    for (std::size_t j = 0; j < fam.forms.size(); ++j)
      dval += fam.multipliers[j] * Rat(equivariant_det_weight(n, w, m, fam.forms[j]));
    divisor.emplace_back(mh, dval);
  }
  MKTopWeights tops = mk_top_coefficients(n, total, divisor);

  Rat sum_ye = 0;
  for (std::size_t j = 0; j < fam.forms.size(); ++j)
    sum_ye += fam.multipliers[j] * fam.forms[j].degree;
  Rat np1 = rat_pow(Rat(n + 1), n);
  Rat a0 = np1 / Rat(factorial(n));
  Rat a1 = np1 / (2 * Rat(factorial(n - 1)));
  Rat a0t = rat_pow(Rat(n + 1), n - 1) * sum_ye / Rat(factorial(n - 1));

  Rat e1 = (2 * a1 - beta * a0t) / a0 + Rat(n * (n + 1));
  Rat e2 = Rat(-2 * (n + 1));
  Rat e3 = beta * (n + 1);
  return e1 * tops.lambda_top + e2 * tops.lambda_sub + e3 * tops.lambda_divisor;
}

// Closed-form route: the same expansion coefficients obtained from the exact
// section-sum formula via finite differences, no enumeration involved.
Rat lem32_weight(const EquivariantFamily& fam, const OnePS& w, const Rat& beta) {
  int n = fam.n;
  long w_sum = 0;
  for (long x : w.weights) w_sum += x;
  auto grid = def31_grid(n, fam.forms);

  auto ambient = [&](long mh) { return det_weight_closed_form(n, w_sum, mh * (n + 1)); };
  Rat lambda_top = 0;
  for (int i = 0; i <= n + 1; ++i) {
    Rat c = Rat(binomial(n + 1, i)) * Rat(ambient(grid.start + i));
    lambda_top += ((n + 1 - i) % 2 == 0) ? c : -c;
  }

  Rat divisor_total = 0;
  Int np1_pow_n = 1;
  for (int i = 0; i < n; ++i) np1_pow_n *= n + 1;
  for (std::size_t j = 0; j < fam.forms.size(); ++j) {
    long e = fam.forms[j].degree;
    long mu_j = mu(fam.forms[j], w);
    auto quotient = [&](long mh) -> Rat {
      long m = mh * (n + 1);
      return Rat(det_weight_closed_form(n, w_sum, m)) -
             Rat(det_weight_closed_form(n, w_sum, m - e)) +
             Rat(binomial(m - e + n, n)) * mu_j;
    };
    Rat lambda_j = 0;
    for (int i = 0; i <= n; ++i) {
      Rat c = Rat(binomial(n, i)) * quotient(grid.start + i);
      lambda_j += ((n - i) % 2 == 0) ? c : -c;
    }
    if (lambda_j != Rat(np1_pow_n) * mu_j)
      throw ConsistencyError("divisor expansion coefficient disagrees with (n+1)^n mu");
    divisor_total += fam.multipliers[j] * lambda_j;
  }

  Rat mu_bar = 0;
  for (std::size_t j = 0; j < fam.forms.size(); ++j)
    mu_bar += fam.multipliers[j] * fam.forms[j].degree;
  mu_bar /= n + 1;
  return -(1 + beta * mu_bar * n) * lambda_top + beta * (n + 1) * divisor_total;
}

// Product-family route: the weight is a linear functional of the per-form
// Hilbert-Mumford weights with coefficients beta(n+1) v c_j / l_j.
Rat lem41_weight(const EquivariantFamily& fam, const OnePS& w, const Rat& beta) {
  std::vector<int> degrees;
  for (const auto& f : fam.forms) degrees.push_back(f.degree);
  auto params = product_family_parameters(fam.n, degrees, fam.multipliers);
  Rat total = 0;
  for (std::size_t j = 0; j < fam.forms.size(); ++j)
    total += beta * (fam.n + 1) * params.volume * params.c[j] / params.l[j] *
             mu(fam.forms[j], w);
  return total;
}

LinBeta route_poly(const EquivariantFamily& fam, const OnePS& w,
                   Rat (*route)(const EquivariantFamily&, const OnePS&, const Rat&)) {
  Rat w0 = route(fam, w, Rat(0));
  Rat w1 = route(fam, w, Rat(1));
  return {w0, w1 - w0};
}

// Scalar s > 0 with a == s * b, componentwise consistent.
Rat consistent_ratio(const LinBeta& a, const LinBeta& b) {
  if (b.c0 == 0 && b.c1 == 0) {
    if (a.c0 != 0 || a.c1 != 0)
      throw ConsistencyError("route weight is nonzero where the reference route vanishes");
    return 1;
  }
  Rat s = (b.c1 != 0) ? a.c1 / b.c1 : a.c0 / b.c0;
  if (a.c0 != s * b.c0 || a.c1 != s * b.c1)
    throw ConsistencyError("route weights are not proportional");
  return s;
}

}  // namespace

std::vector<std::vector<int>> enumerate_exponents(int nvars, int total) {
  if (nvars < 1) throw InputError("need at least one variable");
  if (total < 0) return {};
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  exponents_rec(nvars, total, cur, out);
  return out;
}

Int equivariant_det_weight(int n, const OnePS& w, long m) {
  check_weight_length(n, w);
  if (m < 0) throw InputError("section degree must be nonnegative");
  return pairing_sum(n, w.weights, m);
}

Int equivariant_det_weight(int n, const OnePS& w, long m, const Form& f) {
  check_weight_length(n, w);
  if (m < 0) throw InputError("section degree must be nonnegative");
  if (f.nvars != n + 1) throw InputError("form variable count must be n+1");
  long e = f.degree;
  if (e > m) throw InputError("quotient degree exceeds section degree");
  Int quot_dim = binomial(m - e + n, n);
  long min_w = min_pairing(f.support(), w.weights);
  return pairing_sum(n, w.weights, m) - pairing_sum(n, w.weights, m - e) - quot_dim * min_w;
}

Int det_weight_closed_form(int n, long w_sum, long m) {
  if (m < 0) return 0;
  return Int(w_sum) * binomial(m + n, n + 1);
}

QVec binomial_interpolate(const std::vector<std::pair<long, Rat>>& samples, int deg) {
  if (deg < 0) throw InputError("interpolation degree must be nonnegative");
  if (static_cast<int>(samples.size()) < deg + 2)
    throw ConsistencyError("insufficient samples: need a holdout beyond the fit window");
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].first == samples[j].first)
        throw InputError("interpolation samples must have distinct arguments");

  QMatrix a(deg + 1, QVec(deg + 1, Rat(0)));
  QVec rhs(deg + 1, Rat(0));
  for (int r = 0; r <= deg; ++r) {
    for (int c = 0; c <= deg; ++c) a[r][c] = Rat(binomial(samples[r].first, c));
    rhs[r] = samples[r].second;
  }
  auto sol = solve_linear_system(a, rhs);
  if (sol.kind != LinearSolveResult::Kind::Unique)
    throw ConsistencyError("binomial basis matrix is singular on the sample grid");

  for (const auto& [m, value] : samples) {
    Rat fitted = 0;
    for (int c = 0; c <= deg; ++c) fitted += sol.solution[c] * Rat(binomial(m, c));
    if (fitted != value)
      throw ConsistencyError("interpolation residual nonzero on a holdout sample");
  }
  return sol.solution;
}

MKTopWeights mk_top_coefficients(int n, const std::vector<std::pair<long, Rat>>& total_samples,
                                 const std::vector<std::pair<long, Rat>>& divisor_samples) {
  if (n < 1) throw InputError("n must be at least 1");
  for (const auto& s : total_samples)
    if (s.first < n + 1) throw InputError("expansion samples require m >= n+1");
  for (const auto& s : divisor_samples)
    if (s.first < n + 1) throw InputError("expansion samples require m >= n+1");
  QVec total = binomial_interpolate(total_samples, n + 1);
  QVec divisor = binomial_interpolate(divisor_samples, n);
  return {total[n + 1], total[n], divisor[n]};
}

EquivariantFamily::EquivariantFamily(int n_, std::vector<Form> forms_, QVec multipliers_,
                                     std::optional<Rat> beta_)
    : n(n_), forms(std::move(forms_)), multipliers(std::move(multipliers_)),
      beta(std::move(beta_)) {
  if (n < 1) throw InputError("n must be at least 1");
  if (forms.empty()) throw InputError("family needs at least one form");
  if (multipliers.size() != forms.size())
    throw InputError("multiplier count must match form count");
  for (const auto& f : forms)
    if (f.nvars != n + 1) throw InputError("form variable count must be n+1");
  for (const auto& y : multipliers)
    if (y <= 0) throw InputError("boundary multipliers must be positive");
  if (beta && (*beta <= 0 || *beta > 1)) throw InputError("beta must lie in (0,1]");
}

ProductFamilyParams product_family_parameters(int n, const std::vector<int>& degrees,
                                              const QVec& multipliers) {
  if (degrees.size() != multipliers.size())
    throw InputError("degree and multiplier counts must match");
  ProductFamilyParams p;
  p.volume = rat_pow(Rat(n + 1), n);
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    p.l.push_back(Rat(degrees[j], n + 1));
    p.c.push_back(multipliers[j] * degrees[j] / (n + 1));
    p.l.back().canonicalize();
  }
  return p;
}

CMWeightReport cm_weight(const EquivariantFamily& fam, const OnePS& w, CMRoute route) {
  check_weight_length(fam.n, w);
  CMWeightReport report;
  report.beta_value = fam.beta;
  for (const auto& f : fam.forms) report.hm_weights.push_back(mu(f, w));

  if (route == CMRoute::def31 || route == CMRoute::all)
    report.def31 = route_poly(fam, w, def31_weight);
  if (route == CMRoute::lem32 || route == CMRoute::all)
    report.lem32 = route_poly(fam, w, lem32_weight);
  if (route == CMRoute::lem41 || route == CMRoute::all)
    report.lem41 = route_poly(fam, w, lem41_weight);

  report.scalar = 1;
  if (route == CMRoute::all) {
    Rat s_def, s_lem32;
    try {
      s_def = consistent_ratio(*report.def31, *report.lem41);
      s_lem32 = consistent_ratio(*report.lem32, *report.lem41);
    } catch (const ConsistencyError&) {
      throw ConsistencyError(
          "CM routes disagree: def31=(" + rat_str(report.def31->c0) + "," +
          rat_str(report.def31->c1) + ") lem32=(" + rat_str(report.lem32->c0) + "," +
          rat_str(report.lem32->c1) + ") lem41=(" + rat_str(report.lem41->c0) + "," +
          rat_str(report.lem41->c1) + ")");
    }
    if (s_def != s_lem32 || s_def <= 0)
      throw ConsistencyError("CM routes disagree: scalars " + rat_str(s_def) + " vs " +
                             rat_str(s_lem32));
    report.scalar = s_def;
  }
  report.agree = true;

  Rat coeff = rat_pow(Rat(fam.n + 1), fam.n + 1);
  for (const auto& y : fam.multipliers) report.gamma_raw.push_back(coeff * y);
  Rat min_g = *std::min_element(report.gamma_raw.begin(), report.gamma_raw.end());
  for (const auto& g : report.gamma_raw) report.gamma.push_back(g / min_g);
  return report;
}

EffectiveLinearization effective_linearization(int n, const std::vector<int>& degrees,
                                               const QVec& multipliers, unsigned long seed) {
  if (degrees.empty()) throw InputError("at least one degree required");
  if (degrees.size() != multipliers.size())
    throw InputError("degree and multiplier counts must match");
  for (int d : degrees)
    if (d < 1) throw InputError("degrees must be positive");
  std::size_t k = degrees.size();
  std::mt19937_64 gen(seed);

  auto random_monomial = [&](int degree) {
    std::vector<int> exps(n + 1, 0);
    int remaining = degree;
    for (int i = 0; i < n && remaining > 0; ++i) {
      exps[i] = static_cast<int>(rand_range(gen, 0, remaining));
      remaining -= exps[i];
    }
    exps[n] = remaining;
    return exps;
  };

  QMatrix rows;
  QVec rhs;
  const int kBatch = 20, kMaxBatches = 5;
  for (int batch = 0; batch < kMaxBatches; ++batch) {
    for (int s = 0; s < kBatch; ++s) {
      std::vector<Form> forms;
      for (std::size_t j = 0; j < k; ++j)
        forms.emplace_back(n + 1, degrees[j],
                           std::vector<FormTerm>{{Rat(1), random_monomial(degrees[j])}});
      OnePS w(random_sum_zero(gen, n + 1, 5));
      EquivariantFamily fam(n, forms, multipliers);
      // beta-coefficient of the interpolation route (constant term is zero)
      Rat w0 = def31_weight(fam, w, Rat(0));
      Rat w1 = def31_weight(fam, w, Rat(1));
      QVec row;
      for (std::size_t j = 0; j < k; ++j) row.push_back(Rat(mu(forms[j], w)));
      rows.push_back(std::move(row));
      rhs.push_back(w1 - w0);
    }
    if (rank(rows) == k) break;
  }
  if (rank(rows) < k)
    throw ConsistencyError("sampling did not produce a full-rank linearization fit");

  auto sol = solve_linear_system(rows, rhs);
  if (sol.kind != LinearSolveResult::Kind::Unique)
    throw ConsistencyError("linearization fit is not unique or is contradictory");
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (dot(rows[r], sol.solution) != rhs[r])
      throw ConsistencyError("linearization fit fails on a sample");

  EffectiveLinearization out;
  out.gamma_raw = sol.solution;
  out.samples = static_cast<int>(rows.size());
  for (const auto& g : out.gamma_raw)
    if (g <= 0) throw ConsistencyError("fitted linearization has a nonpositive coefficient");
  Rat min_g = *std::min_element(out.gamma_raw.begin(), out.gamma_raw.end());
  for (const auto& g : out.gamma_raw) out.gamma.push_back(g / min_g);
  return out;
}

}  // namespace kstab
