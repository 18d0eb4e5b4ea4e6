#include "kstab/oneps.hpp"

#include <algorithm>
#include <numeric>

#include "kstab/errors.hpp"

namespace kstab {

namespace {

std::vector<long> make_primitive(std::vector<long> w) {
  long g = 0;
  for (long x : w) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (long& x : w) x /= g;
  return w;
}

}  // namespace

OnePS::OnePS(std::vector<long> w) : weights(std::move(w)) {
  if (weights.size() < 2) throw InputError("one-parameter subgroup needs at least two weights");
  long sum = std::accumulate(weights.begin(), weights.end(), 0L);
  if (sum != 0) throw InputError("one-parameter subgroup weights must sum to zero");
  weights = make_primitive(std::move(weights));
}

bool OnePS::is_zero() const {
  return std::all_of(weights.begin(), weights.end(), [](long x) { return x == 0; });
}

long min_pairing(const std::vector<std::vector<int>>& support, const std::vector<long>& w) {
  if (support.empty()) throw InputError("empty support has no minimal weight");
  bool first = true;
  long best = 0;
  for (const auto& alpha : support) {
    if (alpha.size() != w.size()) throw InputError("support and weight dimensions differ");
    long v = 0;
    for (std::size_t i = 0; i < w.size(); ++i) v += static_cast<long>(alpha[i]) * w[i];
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

long mu_core(const Form& f, const std::vector<long>& w) {
  return -min_pairing(f.support(), w);
}

long mu(const Form& f, const OnePS& w) { return mu_core(f, w.weights); }

std::vector<long> weyl_canonical(const std::vector<long>& w) {
  std::vector<long> a = w;
  std::sort(a.begin(), a.end(), std::greater<long>());
  std::vector<long> b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[i] = -a[a.size() - 1 - i];
  return std::max(a, b);
}

}  // namespace kstab
