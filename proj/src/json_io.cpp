#include "kstab/json_io.hpp"

#include "kstab/errors.hpp"

namespace kstab {

Json rat_to_json(const Rat& x) { return rat_str(x); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  throw InputError("expected a rational as \"p/q\" string or integer");
}

Json qvec_to_json(const QVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_to_json(x));
  return a;
}

Json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json halfspace_to_json(const HalfSpace& h) {
  Json j;
  j["normal"] = qvec_to_json(h.normal);
  j["offset"] = rat_to_json(h.offset);
  j["rel"] = h.equality ? "=" : ">=";
  return j;
}

Json polytope_to_json(const QPolytope& p) {
  Json j;
  j["hrep"] = Json::array();
  for (const auto& h : p.hrep) j["hrep"].push_back(halfspace_to_json(h));
  j["vrep"] = Json::array();
  for (const auto& v : p.vertices) j["vrep"].push_back(qvec_to_json(v));
  if (!p.rays.empty()) {
    j["rays"] = Json::array();
    for (const auto& r : p.rays) j["rays"].push_back(qvec_to_json(r));
  }
  j["dim"] = p.dim;
  j["empty"] = p.empty();
  return j;
}

Json form_to_json(const Form& f) {
  Json j;
  j["degree"] = f.degree;
  j["terms"] = Json::array();
  for (const auto& t : f.terms) {
    Json term;
    term["coeff"] = rat_to_json(t.coeff);
    term["exps"] = t.exps;
    j["terms"].push_back(std::move(term));
  }
  return j;
}

Form form_from_json(const Json& j, int nvars) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("terms"))
    throw InputError("form JSON needs \"degree\" and \"terms\"");
  if (!j["degree"].is_number_integer()) throw InputError("form degree must be an integer");
  int degree = j["degree"].get<int>();
  std::vector<FormTerm> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exps"))
      throw InputError("form term needs \"coeff\" and \"exps\"");
    FormTerm term;
    term.coeff = rat_from_json(t["coeff"]);
    for (const auto& e : t["exps"]) {
      if (!e.is_number_integer()) throw InputError("exponents must be integers");
      term.exps.push_back(e.get<int>());
    }
    terms.push_back(std::move(term));
  }
  return Form(nvars, degree, std::move(terms));
}

std::vector<Form> forms_from_json(const Json& j, int nvars) {
  const Json* list = &j;
  if (j.is_object() && j.contains("forms")) list = &j["forms"];
  if (!list->is_array() || list->empty())
    throw InputError("expected a nonempty array of forms");
  std::vector<Form> forms;
  for (const auto& f : *list) forms.push_back(form_from_json(f, nvars));
  return forms;
}

Json verdict_to_json(const StabilityVerdict& v) {
  Json j;
  j["status"] = status_string(v.status);
  if (v.certificate) {
    j["certificate"] = v.certificate->weights;
    j["certificate_frame"] = v.certificate_frame;
  } else {
    j["certificate"] = nullptr;
  }
  j["frames_tested"] = v.frames_tested;
  return j;
}

namespace {

Json linbeta_to_json(const LinBeta& w, const std::optional<Rat>& beta) {
  if (beta) return rat_to_json(w.eval(*beta));
  // Symbolic output: the weight is c1 * beta; a nonzero constant term would
  // be an internal invariant violation, surfaced rather than hidden.
  if (w.c0 != 0) {
    Json j;
    j["c0"] = rat_to_json(w.c0);
    j["c1"] = rat_to_json(w.c1);
    return j;
  }
  return rat_to_json(w.c1);
}

}  // namespace

Json cm_report_to_json(const CMWeightReport& r) {
  Json j;
  j["weights"] = Json::object();
  if (r.def31) j["weights"]["def31"] = linbeta_to_json(*r.def31, r.beta_value);
  if (r.lem32) j["weights"]["lem32"] = linbeta_to_json(*r.lem32, r.beta_value);
  if (r.lem41) j["weights"]["lem41"] = linbeta_to_json(*r.lem41, r.beta_value);
  j["scalar"] = rat_to_json(r.scalar);
  j["gamma"] = qvec_to_json(r.gamma);
  j["gamma_raw"] = qvec_to_json(r.gamma_raw);
  j["beta"] = r.beta_value ? rat_to_json(*r.beta_value) : Json("symbolic");
  j["hm_weights"] = r.hm_weights;
  j["agree"] = r.agree;
  return j;
}

Json effective_linearization_to_json(const EffectiveLinearization& e) {
  Json j;
  j["gamma"] = qvec_to_json(e.gamma);
  j["gamma_raw"] = qvec_to_json(e.gamma_raw);
  j["samples"] = e.samples;
  return j;
}

Json avector_to_json(const fano::AVector& a) {
  Json j;
  j["values"] = qvec_to_json(a.values);
  j["extremal"] = a.extremal;
  j["all_ones_degenerate"] = a.all_ones_degenerate;
  return j;
}

Json cone_chain_to_json(const fano::ConeChain& c) {
  Json j;
  j["steps"] = Json::array();
  for (const auto& s : c.steps) {
    Json step;
    step["radius"] = rat_to_json(s.radius);
    step["coefficient"] = rat_to_json(s.coefficient);
    step["r_positive"] = s.r_positive;
    step["r_within_bound"] = s.r_within_bound;
    step["a_consistent"] = s.a_consistent;
    j["steps"].push_back(std::move(step));
  }
  j["passed"] = c.passed;
  return j;
}

Json cone_report_to_json(const ConeQuotientReport& r) {
  Json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["m_max"] = r.m_max;
  j["checks_passed"] = r.checks_passed;
  j["cone_hilbert"] = Json::array();
  for (const auto& v : r.cone_hilbert) j["cone_hilbert"].push_back(int_to_json(v));
  return j;
}

Json vgit_to_json(const VGITChambers& c) {
  Json j;
  j["n"] = c.n;
  j["degrees"] = c.degrees;
  j["ambient"] = polytope_to_json(c.ambient);
  j["walls"] = Json::array();
  for (const auto& w : c.walls) {
    Json wall;
    wall["normal"] = qvec_to_json(w.hyperplane.normal);
    wall["witness_w"] = w.witness_w;
    wall["m_values"] = w.m_values;
    wall["witness_exponents"] = w.witness_exponents;
    j["walls"].push_back(std::move(wall));
  }
  j["cells"] = Json::array();
  long chamber_count = 0;
  for (const auto& cell : c.arrangement.cells) {
    Json cj;
    cj["signs"] = cell.signs;
    cj["dim"] = cell.dim;
    cj["is_chamber"] = cell.is_chamber;
    cj["representative"] = qvec_to_json(cell.representative);
    Json verts = Json::array();
    for (const auto& v : cell.closure.vertices) verts.push_back(qvec_to_json(v));
    cj["closure_vertices"] = std::move(verts);
    j["cells"].push_back(std::move(cj));
    if (cell.is_chamber) ++chamber_count;
  }
  j["chamber_count"] = chamber_count;
  return j;
}

}  // namespace kstab
