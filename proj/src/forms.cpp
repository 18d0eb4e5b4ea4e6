#include "kstab/forms.hpp"

#include <numeric>

#include "kstab/errors.hpp"

namespace kstab {

Form::Form(int nvars_, int degree_, std::vector<FormTerm> raw_terms)
    : nvars(nvars_), degree(degree_) {
  if (nvars < 2) throw InputError("forms need at least two variables");
  if (degree < 1) throw InputError("form degree must be positive");
  Poly merged;
  for (auto& t : raw_terms) {
    if (static_cast<int>(t.exps.size()) != nvars)
      throw InputError("term exponent length must equal the variable count");
    int total = 0;
    for (int e : t.exps) {
      if (e < 0) throw InputError("exponents must be nonnegative");
      total += e;
    }
    if (total != degree) throw InputError("every term must have the stated degree");
    poly_add_term(merged, t.exps, t.coeff);
  }
  if (merged.empty()) throw InputError("form must be nonzero");
  for (auto& [exps, c] : merged) terms.push_back({c, exps});
}

std::vector<std::vector<int>> Form::support() const {
  std::vector<std::vector<int>> s;
  s.reserve(terms.size());
  for (const auto& t : terms) s.push_back(t.exps);
  return s;
}

Poly poly_from_form(const Form& f) {
  Poly p;
  for (const auto& t : f.terms) p[t.exps] = t.coeff;
  return p;
}

Form form_from_poly(int nvars, int degree, const Poly& p) {
  std::vector<FormTerm> terms;
  for (const auto& [exps, c] : p) terms.push_back({c, exps});
  return Form(nvars, degree, std::move(terms));
}

void poly_add_term(Poly& p, const std::vector<int>& exps, const Rat& c) {
  auto it = p.find(exps);
  if (it == p.end()) {
    if (c != 0) p.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second == 0) p.erase(it);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  std::vector<int> exps;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      exps = ea;
      for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += eb[i];
      poly_add_term(out, exps, ca * cb);
    }
  return out;
}

Form substitute(const Form& f, const QMatrix& m) {
  std::size_t nv = static_cast<std::size_t>(f.nvars);
  if (m.size() != nv) throw InputError("frame matrix must be square of the variable count");
  for (const auto& row : m)
    if (row.size() != nv) throw InputError("frame matrix must be square of the variable count");
  if (rank(m) != nv) throw InputError("frame matrix must be invertible");

  // x_i -> (M x)_i = sum_j m[i][j] x_j, as a sparse linear polynomial.
  std::vector<Poly> images(nv);
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j) {
      if (m[i][j] == 0) continue;
      std::vector<int> e(nv, 0);
      e[j] = 1;
      images[i][e] = m[i][j];
    }

  Poly one;
  one[std::vector<int>(nv, 0)] = 1;
  Poly result;
  for (const auto& t : f.terms) {
    Poly acc = one;
    for (std::size_t i = 0; i < nv; ++i)
      for (int rep = 0; rep < t.exps[i]; ++rep) acc = poly_mul(acc, images[i]);
    for (const auto& [exps, c] : acc) poly_add_term(result, exps, t.coeff * c);
  }
  if (result.empty())
    throw ConsistencyError("substitution by an invertible frame annihilated a nonzero form");
  return form_from_poly(f.nvars, f.degree, result);
}

}  // namespace kstab
