#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kstab/forms.hpp"
#include "kstab/oneps.hpp"
#include "kstab/rational.hpp"

namespace kstab {

// All degree-m exponent vectors in nvars variables, lex order.
std::vector<std::vector<int>> enumerate_exponents(int nvars, int total);

// Weight of det H^0(P^n, O(m)) under the diagonal action with weights w,
// by direct monomial enumeration: sum over |alpha| = m of <alpha, w>.
Int equivariant_det_weight(int n, const OnePS& w, long m);

// Weight of det of H^0(O(m)) / f.H^0(O(m - deg f)) where f degenerates to its
// minimal-weight part under w (the flat limit of the induced family).
Int equivariant_det_weight(int n, const OnePS& w, long m, const Form& f);

// Closed form for the ambient sum: sum over |alpha|=m of <alpha,w> equals
// (sum of w) * C(m+n, n+1). Independent of the enumeration path.
Int det_weight_closed_form(int n, long w_sum, long m);

// Fit value(m) = sum_{i<=deg} b_i C(m,i) on the first deg+1 samples and verify
// the fit exactly on every remaining sample. Returns b_0..b_deg.
QVec binomial_interpolate(const std::vector<std::pair<long, Rat>>& samples, int deg);

struct MKTopWeights {
  Rat lambda_top;     // coefficient of C(m, n+1) in the total expansion
  Rat lambda_sub;     // coefficient of C(m, n) in the total expansion
  Rat lambda_divisor; // coefficient of C(m, n) in the divisor-side expansion
};

// Extract the top Mumford-Knudsen coefficients from weight samples taken at
// m >= n+1. The divisor-side samples form an independent parallel set.
MKTopWeights mk_top_coefficients(int n, const std::vector<std::pair<long, Rat>>& total_samples,
                                 const std::vector<std::pair<long, Rat>>& divisor_samples);

// Product-type equivariant family: (P^n, sum_j y_j {f_j = 0}) degenerated
// along a diagonal one-parameter subgroup. beta is symbolic unless fixed.
struct EquivariantFamily {
  int n = 0;
  std::vector<Form> forms;
  QVec multipliers;
  std::optional<Rat> beta;

  EquivariantFamily(int n, std::vector<Form> forms, QVec multipliers,
                    std::optional<Rat> beta = std::nullopt);
};

// Linear polynomial c0 + c1 * beta.
struct LinBeta {
  Rat c0, c1;
  Rat eval(const Rat& beta) const { return c0 + c1 * beta; }
  bool operator==(const LinBeta&) const = default;
};

enum class CMRoute { def31, lem32, lem41, all };

struct CMWeightReport {
  std::optional<LinBeta> def31, lem32, lem41;
  std::vector<long> hm_weights;
  QVec gamma;      // effective linearization, normalized so min = 1
  QVec gamma_raw;  // unnormalized product-family coefficients
  Rat scalar;      // measured positive factor between the routes
  bool agree = false;
  std::optional<Rat> beta_value;
};

CMWeightReport cm_weight(const EquivariantFamily& fam, const OnePS& w, CMRoute route);

// Dictionary between the family parameters (n, degrees, multipliers) and the
// product-family normalization (volume v, bundle fractions l_j, weights c_j).
struct ProductFamilyParams {
  Rat volume;  // v = (n+1)^n
  QVec l;      // l_j = e_j / (n+1)
  QVec c;      // c_j = y_j e_j / (n+1)
};
ProductFamilyParams product_family_parameters(int n, const std::vector<int>& degrees,
                                              const QVec& multipliers);

struct EffectiveLinearization {
  QVec gamma;      // normalized so min gamma_j = 1
  QVec gamma_raw;  // exact fit coefficients before normalization
  int samples = 0;
};

// Sample random monomial tuples and sum-zero w, fit the beta-coefficient of
// the interpolation-route weight as sum_j gamma_j mu(f_j, w), verify the fit
// on every sample, and return gamma normalized to min 1.
EffectiveLinearization effective_linearization(int n, const std::vector<int>& degrees,
                                               const QVec& multipliers,
                                               unsigned long seed = 20260819ULL);

}  // namespace kstab
