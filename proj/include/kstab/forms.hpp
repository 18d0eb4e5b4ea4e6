#pragma once

#include <map>
#include <vector>

#include "kstab/linalg.hpp"
#include "kstab/rational.hpp"

namespace kstab {

// Sparse polynomial keyed by exponent vectors. Coefficients are kept nonzero.
using Poly = std::map<std::vector<int>, Rat>;

struct FormTerm {
  Rat coeff;
  std::vector<int> exps;
};

// Homogeneous form in nvars variables. Terms are merged, nonzero and sorted by
// exponent vector; every exponent vector sums to degree.
struct Form {
  int nvars = 0;
  int degree = 0;
  std::vector<FormTerm> terms;

  Form() = default;
  Form(int nvars, int degree, std::vector<FormTerm> raw_terms);

  std::vector<std::vector<int>> support() const;
};

Poly poly_from_form(const Form& f);
Form form_from_poly(int nvars, int degree, const Poly& p);

void poly_add_term(Poly& p, const std::vector<int>& exps, const Rat& c);
Poly poly_mul(const Poly& a, const Poly& b);

// f(M x) for a square change of coordinates. Singular matrices are rejected.
Form substitute(const Form& f, const QMatrix& m);

}  // namespace kstab
