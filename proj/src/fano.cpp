#include "kstab/fano.hpp"

#include <algorithm>

#include "kstab/binomial.hpp"
#include "kstab/errors.hpp"
#include "kstab/linalg.hpp"

namespace kstab::fano {

namespace {

void validate_degrees(int n, const std::vector<int>& degrees) {
  if (n < 1) throw InputError("n must be at least 1");
  if (degrees.empty()) throw InputError("at least one boundary degree required");
  for (int d : degrees)
    if (d < 1) throw InputError("degrees must be positive");
}

Rat power(const Rat& x, int e) {
  Rat r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

bool all_ones(const std::vector<int>& degrees) {
  return std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 1; });
}

}  // namespace

PairConfig::PairConfig(int n_, std::vector<int> degrees_, QVec coefficients_)
    : n(n_), degrees(std::move(degrees_)), coefficients(std::move(coefficients_)) {
  validate_degrees(n, degrees);
  if (coefficients.size() != degrees.size())
    throw InputError("coefficient count must match degree count");
  for (const auto& x : coefficients)
    if (x < 0 || x >= 1) throw InputError("boundary coefficients must lie in [0,1)");
}

Rat PairConfig::log_fano_index() const {
  Rat r = n + 1;
  for (std::size_t j = 0; j < degrees.size(); ++j) r -= coefficients[j] * degrees[j];
  return r;
}

Rat s_invariant(const PairConfig& cfg, int i) {
  if (i < 1 || i > static_cast<int>(cfg.degrees.size()))
    throw InputError("divisor index out of range");
  Rat r = cfg.log_fano_index();
  if (r <= 0) throw InputError("pair is not log Fano (r <= 0)");
  int n = cfg.n, d = cfg.degrees[i - 1];
  // (1/r^n) * \int_0^{r/d} (r - d t)^n dt, integrated term by term:
  // (r - d t)^n = sum_j C(n,j) r^(n-j) (-d)^j t^j.
  Rat upper = r / d;
  Rat integral = 0;
  for (int j = 0; j <= n; ++j) {
    Rat term = Rat(binomial(n, j)) * power(r, n - j) * power(Rat(-d), j) *
               power(upper, j + 1) / (j + 1);
    integral += term;
  }
  return integral / power(r, n);
}

Rat beta(const PairConfig& cfg, int i) {
  // log discrepancy of the boundary hypersurface minus its expected order
  return (1 - cfg.coefficients[i - 1]) - s_invariant(cfg, i);
}

HalfSpace beta_halfspace(int n, const std::vector<int>& degrees, int i) {
  // beta_i(x) >= 0  <=>  (n+1) d_i (1 - x_i) - (n+1) + sum_j d_j x_j >= 0
  validate_degrees(n, degrees);
  std::size_t k = degrees.size();
  QVec normal(k, Rat(0));
  for (std::size_t j = 0; j < k; ++j) normal[j] = degrees[j];
  normal[i - 1] -= Rat((n + 1) * degrees[i - 1]);
  Rat offset = Rat(n + 1) - Rat(n + 1) * degrees[i - 1];
  return HalfSpace(normal, offset, false).canonical();
}

AVector a_vector(int n, const std::vector<int>& degrees) {
  validate_degrees(n, degrees);
  int k = static_cast<int>(degrees.size());
  if (k > n) throw InputError("more boundary divisors than the dimension allows");
  long sum_d = 0;
  for (int d : degrees) sum_d += d;
  if (sum_d >= n + 1) throw InputError("degrees must satisfy sum d_j < n+1");

  AVector out;
  if (all_ones(degrees)) {
    // Excluded degenerate family: the closed formula collapses to zero.
    out.values.assign(k, Rat(0));
    out.all_ones_degenerate = true;
    out.extremal = true;  // the domain degenerates to the origin
    if (n >= 2) {
      auto poly = kss_polytope(n, degrees);
      out.extremal =
          std::find(poly.vertices.begin(), poly.vertices.end(), out.values) != poly.vertices.end();
    }
    return out;
  }

  out.values.assign(k, Rat(0));
  for (int j = 0; j < k; ++j) {
    long dj = degrees[j];
    out.values[j] = Rat(sum_d + (n - k + 1) * dj - (n + 1), (n - k + 1) * dj);
    out.values[j].canonicalize();
  }

  // Independent route: solve the linear system beta_i(x) = 0,
  // sum_j d_j x_j - (n+1) d_i x_i = (n+1)(1 - d_i).
  QMatrix m(k, QVec(k, Rat(0)));
  QVec rhs(k, Rat(0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m[i][j] = degrees[j];
    m[i][i] -= Rat((n + 1) * degrees[i]);
    rhs[i] = Rat(n + 1) * (1 - degrees[i]);
  }
  auto sol = solve_linear_system(m, rhs);
  if (sol.kind != LinearSolveResult::Kind::Unique || sol.solution != out.values)
    throw ConsistencyError("a-vector closed form disagrees with the beta=0 linear system");

  auto poly = kss_polytope(n, degrees);
  out.extremal =
      std::find(poly.vertices.begin(), poly.vertices.end(), out.values) != poly.vertices.end();
  return out;
}

QPolytope kss_polytope(int n, const std::vector<int>& degrees) {
  validate_degrees(n, degrees);
  if (n < 2) throw InputError("K-semistable domain requires n >= 2");
  std::size_t k = degrees.size();
  for (int d : degrees)
    if (d > n + 1) throw InputError("degrees must be at most n+1");

  std::vector<HalfSpace> hrep;
  for (std::size_t i = 0; i < k; ++i) {
    QVec lo(k, Rat(0)), hi(k, Rat(0));
    lo[i] = 1;
    hi[i] = -1;
    hrep.push_back(HalfSpace(lo, Rat(0), false).canonical());   // x_i >= 0
    hrep.push_back(HalfSpace(hi, Rat(-1), false).canonical());  // x_i <= 1
  }
  for (std::size_t i = 1; i <= k; ++i) hrep.push_back(beta_halfspace(n, degrees, static_cast<int>(i)));
  QVec deg_row(k, Rat(0));
  for (std::size_t j = 0; j < k; ++j) deg_row[j] = -degrees[j];
  hrep.push_back(HalfSpace(deg_row, Rat(-(n + 1)), false).canonical());  // sum x_j d_j <= n+1

  QPolytope computed = polytope_from_hrep(hrep, k);
  // Keep the three constraint families as the published H-form.
  computed.hrep = hrep;
  return computed;
}

ConeChain cone_chain(int n, const std::vector<int>& degrees) {
  validate_degrees(n, degrees);
  auto av = a_vector(n, degrees);
  int k = static_cast<int>(degrees.size());
  ConeChain chain;
  chain.passed = true;
  for (int i = 1; i <= k; ++i) {
    Rat num = n + 1;
    for (int j = 1; j <= i; ++j) num -= degrees[j - 1];
    for (int j = i + 1; j <= k; ++j) num -= av.values[j - 1] * degrees[j - 1];
    ConeChainStep step;
    step.radius = num / degrees[i - 1];
    step.coefficient = 1 - step.radius / (n - i + 1);
    step.r_positive = step.radius > 0;
    step.r_within_bound = step.radius <= n - i + 1;
    step.a_consistent = step.coefficient == av.values[i - 1];
    chain.passed = chain.passed && step.r_positive && step.r_within_bound && step.a_consistent;
    chain.steps.push_back(std::move(step));
  }
  if (!chain.passed) throw ConsistencyError("cone chain failed its per-step checks");
  return chain;
}

}  // namespace kstab::fano
