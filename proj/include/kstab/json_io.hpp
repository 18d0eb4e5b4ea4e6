#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "kstab/cm.hpp"
#include "kstab/fano.hpp"
#include "kstab/hilbert.hpp"
#include "kstab/polytope.hpp"
#include "kstab/stability.hpp"
#include "kstab/vgit.hpp"

namespace kstab {

// Key order is preserved so serialized documents are byte-deterministic.
using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& x);
Rat rat_from_json(const Json& j);
Json qvec_to_json(const QVec& v);
Json int_to_json(const Int& x);

Json halfspace_to_json(const HalfSpace& h);
Json polytope_to_json(const QPolytope& p);

Json form_to_json(const Form& f);
Form form_from_json(const Json& j, int nvars);
// Accepts either a bare array of forms or {"forms": [...]}.
std::vector<Form> forms_from_json(const Json& j, int nvars);

Json verdict_to_json(const StabilityVerdict& v);
Json cm_report_to_json(const CMWeightReport& r);
Json effective_linearization_to_json(const EffectiveLinearization& e);
Json avector_to_json(const fano::AVector& a);
Json cone_chain_to_json(const fano::ConeChain& c);
Json cone_report_to_json(const ConeQuotientReport& r);
Json vgit_to_json(const VGITChambers& c);

}  // namespace kstab
