#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "kstab/cm.hpp"
#include "kstab/errors.hpp"
#include "kstab/fano.hpp"
#include "kstab/hilbert.hpp"
#include "kstab/json_io.hpp"
#include "kstab/stability.hpp"
#include "kstab/version.hpp"
#include "kstab/vgit.hpp"

namespace py = pybind11;
using namespace kstab;

namespace {

std::vector<std::string> rat_strings(const QVec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(rat_str(x));
  return out;
}

QVec rats_from_strings(const std::vector<std::string>& v) {
  return parse_rat_vec(v);
}

std::vector<Form> forms_from_json_text(const std::string& text, int nvars) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return forms_from_json(j, nvars);
}

FrameStrategy frames_by_name(const std::string& name, unsigned long seed, int random_count) {
  FrameStrategy s;
  s.seed = seed == 0 ? 1 : seed;
  s.random_count = random_count;
  if (name == "identity") s.kind = FrameStrategyKind::Identity;
  else if (name == "permutations") s.kind = FrameStrategyKind::Permutations;
  else if (name == "random") s.kind = FrameStrategyKind::SeededRandom;
  else throw InputError("frames must be identity, permutations or random");
  return s;
}

}  // namespace

PYBIND11_MODULE(_kstab, m) {
  m.doc() = "exact K-stability and GIT computations for hypersurface tuples";
  m.attr("__version__") = kToolVersion;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  m.def("a_vector_json", [](int n, const std::vector<int>& degrees) {
    return avector_to_json(fano::a_vector(n, degrees)).dump();
  });

  m.def("s_invariant", [](int n, const std::vector<int>& degrees,
                          const std::vector<std::string>& coefficients, int i) {
    fano::PairConfig cfg(n, degrees, rats_from_strings(coefficients));
    return rat_str(fano::s_invariant(cfg, i));
  });

  m.def("beta", [](int n, const std::vector<int>& degrees,
                   const std::vector<std::string>& coefficients, int i) {
    fano::PairConfig cfg(n, degrees, rats_from_strings(coefficients));
    return rat_str(fano::beta(cfg, i));
  });

  m.def("kss_polytope_json", [](int n, const std::vector<int>& degrees) {
    return polytope_to_json(fano::kss_polytope(n, degrees)).dump();
  });

  m.def("cone_chain_json", [](int n, const std::vector<int>& degrees) {
    return cone_chain_to_json(fano::cone_chain(n, degrees)).dump();
  });

  m.def("ci_hilbert", [](int n, const std::vector<int>& degrees, long mm) {
    return ci_hilbert(n, degrees, mm).get_str();
  });

  m.def("cone_quotient_json", [](int n, int d, long m_max) {
    return cone_report_to_json(cone_quotient_check(n, d, m_max)).dump();
  });

  m.def("hm_weight", [](const std::string& form_json, int nvars,
                        const std::vector<long>& w) {
    Json j;
    try {
      j = Json::parse(form_json);
    } catch (const std::exception& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
    Form f = form_from_json(j, nvars);
    return hm_weight(f, OnePS(w));
  });

  m.def(
      "git_check_json",
      [](int n, const std::string& forms_json,
         const std::vector<std::string>& linearization, const std::string& frames,
         unsigned long seed, long cap) {
        auto forms = forms_from_json_text(forms_json, n + 1);
        QVec gamma = linearization.empty() ? QVec(forms.size(), Rat(1))
                                           : rats_from_strings(linearization);
        TupleConfig t(n, forms, gamma);
        auto verdict = git_check(t, frames_by_name(frames, seed, 8), cap);
        return verdict_to_json(verdict).dump();
      },
      py::arg("n"), py::arg("forms_json"),
      py::arg("linearization") = std::vector<std::string>{},
      py::arg("frames") = "identity", py::arg("seed") = 1UL,
      py::arg("cap") = kDefaultCap);

  m.def(
      "vgit_chambers_json",
      [](int n, const std::vector<int>& degrees, long cap) {
        return vgit_to_json(vgit_chambers(n, degrees, cap)).dump();
      },
      py::arg("n"), py::arg("degrees"), py::arg("cap") = kDefaultCap);

  m.def(
      "cm_weight_json",
      [](int n, const std::string& forms_json,
         const std::vector<std::string>& multipliers, const std::vector<long>& w,
         const std::string& beta, const std::string& route) {
        auto forms = forms_from_json_text(forms_json, n + 1);
        std::optional<Rat> beta_value;
        if (!beta.empty()) beta_value = parse_rat(beta);
        EquivariantFamily fam(n, forms, rats_from_strings(multipliers), beta_value);
        CMRoute r;
        if (route == "def31") r = CMRoute::def31;
        else if (route == "lem32") r = CMRoute::lem32;
        else if (route == "lem41") r = CMRoute::lem41;
        else if (route == "all") r = CMRoute::all;
        else throw InputError("route must be def31, lem32, lem41 or all");
        return cm_report_to_json(cm_weight(fam, OnePS(w), r)).dump();
      },
      py::arg("n"), py::arg("forms_json"), py::arg("multipliers"), py::arg("w"),
      py::arg("beta") = "", py::arg("route") = "all");

  m.def(
      "effective_linearization_json",
      [](int n, const std::vector<int>& degrees,
         const std::vector<std::string>& multipliers, unsigned long seed) {
        return effective_linearization_to_json(
                   effective_linearization(n, degrees, rats_from_strings(multipliers), seed))
            .dump();
      },
      py::arg("n"), py::arg("degrees"), py::arg("multipliers"),
      py::arg("seed") = 20260819UL);
}
