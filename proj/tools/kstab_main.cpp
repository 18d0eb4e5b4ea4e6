#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kstab/cm.hpp"
#include "kstab/errors.hpp"
#include "kstab/fano.hpp"
#include "kstab/hilbert.hpp"
#include "kstab/json_io.hpp"
#include "kstab/stability.hpp"
#include "kstab/svg_render.hpp"
#include "kstab/version.hpp"
#include "kstab/vgit.hpp"

using namespace kstab;

namespace {

struct Options {
  int n = 0;
  std::vector<int> degrees;
  std::vector<std::string> coefficients;
  std::vector<std::string> linearization;
  std::vector<long> oneps;
  std::string forms_path;
  std::string frames = "identity";
  std::string route = "all";
  std::string beta;
  std::string json_path;
  std::string svg_path;
  unsigned long seed = 0;
  std::optional<long> cap;
  long m_max = 10;
  bool decimal = false;
};

long effective_cap(const Options& o) {
  if (o.cap) {
    if (*o.cap < 1) throw InputError("cap must be at least 1");
    return *o.cap;
  }
  if (const char* env = std::getenv("KSTAB_CAP")) {
    try {
      long v = std::stol(env);
      if (v < 1) throw InputError("KSTAB_CAP must be at least 1");
      return v;
    } catch (const InputError&) {
      throw;
    } catch (...) {
      throw InputError("KSTAB_CAP is not an integer");
    }
  }
  return kDefaultCap;
}

// Exact fixed-point decimal with six fractional digits, for the
// non-authoritative --decimal column.
std::string approx6(const Rat& x) {
  Int num = x.get_num() * 2000000 + x.get_den();
  Int den = x.get_den() * 2;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  bool neg = q < 0;
  if (neg) q = -q;
  std::string frac = Int(q % 1000000).get_str();
  while (frac.size() < 6) frac = "0" + frac;
  return (neg ? "-" : "") + Int(q / 1000000).get_str() + "." + frac;
}

std::string rat_tuple(const QVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + rat_str(v[i]);
  return s + ")";
}

std::string approx_tuple(const QVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + approx6(v[i]);
  return s + ")";
}

Json make_document(const std::string& subcommand, const Options& o, int argc, char** argv) {
  Json doc;
  doc["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
  doc["subcommand"] = subcommand;
  Json invocation = Json::array();
  invocation.push_back(kToolName);
  for (int i = 1; i < argc; ++i) invocation.push_back(std::string(argv[i]));
  doc["invocation"] = invocation;
  doc["seed"] = o.seed;
  return doc;
}

void emit(const Json& doc, const Options& o) {
  if (o.json_path.empty()) return;
  std::ofstream out(o.json_path);
  if (!out) throw InputError("cannot open " + o.json_path + " for writing");
  out << doc.dump(2) << "\n";
}

void emit_svg(const std::string& svg, const Options& o) {
  if (o.svg_path.empty()) return;
  std::ofstream out(o.svg_path);
  if (!out) throw InputError("cannot open " + o.svg_path + " for writing");
  out << svg;
}

std::vector<Form> load_forms(const Options& o) {
  if (o.forms_path.empty()) throw InputError("--forms is required for this subcommand");
  std::ifstream in(o.forms_path);
  if (!in) throw InputError("cannot open " + o.forms_path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return forms_from_json(j, o.n + 1);
}

FrameStrategy parse_frames(const Options& o) {
  FrameStrategy s;
  s.seed = o.seed == 0 ? 1 : o.seed;
  if (o.frames == "identity") {
    s.kind = FrameStrategyKind::Identity;
  } else if (o.frames == "permutations") {
    s.kind = FrameStrategyKind::Permutations;
  } else if (o.frames.rfind("random", 0) == 0) {
    s.kind = FrameStrategyKind::SeededRandom;
    auto colon = o.frames.find(':');
    if (colon != std::string::npos) {
      try {
        s.random_count = std::stoi(o.frames.substr(colon + 1));
      } catch (...) {
        throw InputError("malformed frame count in " + o.frames);
      }
      if (s.random_count < 1) throw InputError("random frame count must be at least 1");
    }
  } else {
    // Anything else names a JSON file with {"matrices": [[...rows...], ...]}.
    s.kind = FrameStrategyKind::UserMatrices;
    std::ifstream in(o.frames);
    if (!in) throw InputError("cannot open frame file " + o.frames);
    Json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("matrices") || !j["matrices"].is_array())
      throw InputError("frame file needs a \"matrices\" array");
    for (const auto& mj : j["matrices"]) {
      QMatrix m;
      for (const auto& row : mj) {
        QVec r;
        for (const auto& x : row) r.push_back(rat_from_json(x));
        m.push_back(std::move(r));
      }
      s.matrices.push_back(std::move(m));
    }
  }
  return s;
}

fano::PairConfig pair_config(const Options& o) {
  return fano::PairConfig(o.n, o.degrees, parse_rat_vec(o.coefficients));
}

int run_a_vector(const Options& o, Json& doc) {
  auto av = fano::a_vector(o.n, o.degrees);
  std::cout << rat_tuple(av.values) << "\n";
  if (o.decimal) std::cout << "~ " << approx_tuple(av.values) << " (approx, not authoritative)\n";
  if (av.all_ones_degenerate)
    std::cout << "note: all degrees are 1, the excluded degenerate case (zero vector)\n";
  std::cout << "extremal point of the K-semistable domain: " << (av.extremal ? "yes" : "no")
            << "\n";
  doc["n"] = o.n;
  doc["degrees"] = o.degrees;
  doc["a_vector"] = avector_to_json(av);
  doc["oracle_agreement"] = Json{{"closed_form_matches_linear_system", true}};
  return 0;
}

int run_beta(const Options& o, Json& doc) {
  auto cfg = pair_config(o);
  std::cout << "r = " << rat_str(cfg.log_fano_index()) << "\n";
  Json values = Json::array();
  for (std::size_t i = 1; i <= o.degrees.size(); ++i) {
    Rat b = fano::beta(cfg, static_cast<int>(i));
    std::cout << "beta_" << i << " = " << rat_str(b);
    if (o.decimal) std::cout << "  ~ " << approx6(b) << " (approx)";
    std::cout << "\n";
    values.push_back(rat_to_json(b));
  }
  doc["n"] = o.n;
  doc["degrees"] = o.degrees;
  doc["coefficients"] = qvec_to_json(parse_rat_vec(o.coefficients));
  doc["beta"] = values;
  return 0;
}

int run_s_invariant(const Options& o, Json& doc) {
  auto cfg = pair_config(o);
  std::cout << "r = " << rat_str(cfg.log_fano_index()) << "\n";
  Json values = Json::array();
  for (std::size_t i = 1; i <= o.degrees.size(); ++i) {
    Rat s = fano::s_invariant(cfg, static_cast<int>(i));
    std::cout << "S_" << i << " = " << rat_str(s);
    if (o.decimal) std::cout << "  ~ " << approx6(s) << " (approx)";
    std::cout << "\n";
    values.push_back(rat_to_json(s));
  }
  doc["n"] = o.n;
  doc["degrees"] = o.degrees;
  doc["coefficients"] = qvec_to_json(parse_rat_vec(o.coefficients));
  doc["s_invariant"] = values;
  return 0;
}

int run_kss_polytope(const Options& o, Json& doc) {
  auto poly = fano::kss_polytope(o.n, o.degrees);
  if (o.degrees.size() == 1 && poly.vertices.size() == 2) {
    std::cout << "interval [" << rat_str(poly.vertices[0][0]) << ", "
              << rat_str(poly.vertices[1][0]) << "]\n";
  }
  std::cout << "vertices:\n";
  for (const auto& v : poly.vertices) std::cout << "  " << rat_tuple(v) << "\n";
  std::cout << "halfspaces:\n";
  for (const auto& h : poly.hrep)
    std::cout << "  " << rat_tuple(h.normal) << " . x " << (h.equality ? "=" : ">=") << " "
              << rat_str(h.offset) << "\n";
  doc["n"] = o.n;
  doc["degrees"] = o.degrees;
  doc["kss_polytope"] = polytope_to_json(poly);
  doc["assumes_ci_kss"] = true;
  emit_svg(svg_polytope(poly), o);
  return 0;
}

int run_cone_chain(const Options& o, Json& doc) {
  auto chain = fano::cone_chain(o.n, o.degrees);
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const auto& s = chain.steps[i];
    std::cout << "step " << i + 1 << ": r = " << rat_str(s.radius)
              << ", a = " << rat_str(s.coefficient) << ", checks "
              << (s.r_positive && s.r_within_bound && s.a_consistent ? "pass" : "fail") << "\n";
  }
  std::cout << (chain.passed ? "all checks passed" : "checks failed") << "\n";
  doc["n"] = o.n;
  doc["degrees"] = o.degrees;
  doc["cone_chain"] = cone_chain_to_json(chain);
  doc["a_vector"] = avector_to_json(fano::a_vector(o.n, o.degrees));
  return 0;
}

int run_cm_weight(const Options& o, Json& doc) {
  auto forms = load_forms(o);
  QVec multipliers = parse_rat_vec(o.coefficients);
  std::optional<Rat> beta;
  if (!o.beta.empty()) beta = parse_rat(o.beta);
  EquivariantFamily fam(o.n, forms, multipliers, beta);
  if (o.oneps.empty()) throw InputError("--oneps is required for cm-weight");
  OnePS w(o.oneps);
  CMRoute route;
  if (o.route == "def31") route = CMRoute::def31;
  else if (o.route == "lem32") route = CMRoute::lem32;
  else if (o.route == "lem41") route = CMRoute::lem41;
  else if (o.route == "all") route = CMRoute::all;
  else throw InputError("route must be def31, lem32, lem41 or all");

  auto report = cm_weight(fam, w, route);
  Json rj = cm_report_to_json(report);
  std::cout << "weights: " << rj["weights"].dump() << "\n";
  std::cout << "beta: " << (beta ? rat_str(*beta) : std::string("symbolic")) << "\n";
  std::cout << "scalar: " << rat_str(report.scalar) << "\n";
  std::cout << "gamma: " << rat_tuple(report.gamma) << "\n";
  doc["n"] = o.n;
  doc["report"] = rj;
  doc["oracle_agreement"] = Json{{"cm_routes", report.agree}};
  return 0;
}

int run_effective_linearization(const Options& o, Json& doc) {
  QVec multipliers = parse_rat_vec(o.coefficients);
  auto el = effective_linearization(o.n, o.degrees, multipliers,
                                    o.seed == 0 ? 20260819UL : o.seed);
  std::cout << "gamma (normalized): " << rat_tuple(el.gamma) << "\n";
  std::cout << "gamma (raw fit): " << rat_tuple(el.gamma_raw) << "\n";
  std::cout << "samples: " << el.samples << "\n";
  doc["n"] = o.n;
  doc["degrees"] = o.degrees;
  doc["multipliers"] = qvec_to_json(multipliers);
  doc["effective_linearization"] = effective_linearization_to_json(el);
  doc["oracle_agreement"] = Json{{"linear_fit_exact", true}};
  return 0;
}

int run_git_check(const Options& o, Json& doc) {
  auto forms = load_forms(o);
  QVec gamma = o.linearization.empty() ? QVec(forms.size(), Rat(1))
                                       : parse_rat_vec(o.linearization);
  TupleConfig t(o.n, forms, gamma);
  auto verdict = git_check(t, parse_frames(o), effective_cap(o));
  std::cout << "status: " << status_string(verdict.status) << "\n";
  if (verdict.certificate) {
    std::cout << "certificate w = (";
    for (std::size_t i = 0; i < verdict.certificate->weights.size(); ++i)
      std::cout << (i ? ", " : "") << verdict.certificate->weights[i];
    std::cout << ") in frame " << verdict.certificate_frame << "\n";
  }
  std::cout << "frames tested: " << verdict.frames_tested.size() << "\n";
  doc["n"] = o.n;
  doc["linearization"] = qvec_to_json(gamma);
  doc["verdict"] = verdict_to_json(verdict);
  doc["oracle_agreement"] = Json{{"barycenter_matches_candidates", true}};
  return 0;
}

int run_vgit_chambers(const Options& o, Json& doc) {
  auto chambers = vgit_chambers(o.n, o.degrees, effective_cap(o));
  std::cout << "walls:\n";
  for (const auto& w : chambers.walls)
    std::cout << "  " << rat_tuple(w.hyperplane.normal) << " . gamma = 0\n";
  long count = 0;
  for (const auto& cell : chambers.arrangement.cells)
    if (cell.is_chamber) ++count;
  std::cout << "chambers: " << count << "\n";
  for (const auto& cell : chambers.arrangement.cells)
    if (cell.is_chamber)
      std::cout << "  representative " << rat_tuple(cell.representative) << "\n";
  doc["n"] = o.n;
  doc["degrees"] = o.degrees;
  doc["vgit"] = vgit_to_json(chambers);
  if (!o.svg_path.empty()) emit_svg(svg_chambers(chambers), o);
  return 0;
}

int run_cone_verify(const Options& o, Json& doc) {
  if (o.degrees.size() != 1)
    throw InputError("cone-verify takes exactly one degree");
  auto report = cone_quotient_check(o.n, o.degrees[0], o.m_max);
  std::cout << (report.checks_passed ? "all identities hold" : "identity failed") << "\n";
  std::cout << "cone graded dimensions:";
  for (const auto& v : report.cone_hilbert) std::cout << " " << v.get_str();
  std::cout << "\n";
  doc["cone_check"] = cone_report_to_json(report);
  return 0;
}

int run_report(const Options& o, Json& doc, int argc, char** argv) {
  (void)argc;
  (void)argv;
  long sum_d = 0;
  for (int d : o.degrees) sum_d += d;
  doc["n"] = o.n;
  doc["degrees"] = o.degrees;
  Json agreement;

  if (sum_d < o.n + 1 && static_cast<int>(o.degrees.size()) <= o.n) {
    doc["a_vector"] = avector_to_json(fano::a_vector(o.n, o.degrees));
    doc["cone_chain"] = cone_chain_to_json(fano::cone_chain(o.n, o.degrees));
    agreement["a_vector_dual_route"] = true;
    agreement["cone_chain_consistent"] = true;
  } else {
    doc["a_vector"] = Json{{"skipped", "degrees do not satisfy sum d_j < n+1, k <= n"}};
  }

  bool kss_ok = o.n >= 2;
  for (int d : o.degrees) kss_ok = kss_ok && d <= o.n + 1;
  if (kss_ok) {
    doc["kss_polytope"] = polytope_to_json(fano::kss_polytope(o.n, o.degrees));
    doc["assumes_ci_kss"] = true;
  } else {
    doc["kss_polytope"] = Json{{"skipped", "requires n >= 2 and degrees <= n+1"}};
  }

  if (o.degrees.size() >= 2) {
    doc["vgit"] = vgit_to_json(vgit_chambers(o.n, o.degrees, effective_cap(o)));
  } else {
    doc["vgit"] = Json{{"skipped", "chamber decomposition needs k >= 2"}};
  }

  Json cone_checks = Json::array();
  std::vector<int> seen;
  for (int d : o.degrees) {
    if (d > o.n + 1) continue;
    if (std::find(seen.begin(), seen.end(), d) != seen.end()) continue;
    seen.push_back(d);
    cone_checks.push_back(cone_report_to_json(cone_quotient_check(o.n, d, o.m_max)));
  }
  doc["cone_checks"] = cone_checks;
  agreement["cone_identities"] = true;
  doc["oracle_agreement"] = agreement;

  std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact K-stability, CM-weight and GIT computations for hypersurface tuples"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* sub, bool needs_n) {
    auto* n_opt = sub->add_option("--n", o.n, "ambient projective dimension n");
    if (needs_n) n_opt->required();
    sub->add_option("--seed", o.seed, "seed recorded in the output and used for sampling");
    sub->add_option("--cap", o.cap, "resource cap (overrides KSTAB_CAP)");
    sub->add_option("--json", o.json_path, "write the full JSON document here");
    sub->add_option("--svg", o.svg_path, "write a deterministic SVG here (where supported)");
    sub->add_flag("--decimal", o.decimal,
                  "add approximate decimal values (marked, not authoritative)");
  };
  auto add_degrees = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--degrees", o.degrees, "comma-separated degrees")
                    ->delimiter(',');
    if (required) opt->required();
  };
  auto add_coefficients = [&](CLI::App* sub, const char* help, bool required) {
    auto* opt = sub->add_option("--coefficients", o.coefficients, help)->delimiter(',');
    if (required) opt->required();
  };

  auto* sc_avec = app.add_subcommand("a-vector", "coefficient vector with all beta = 0");
  add_common(sc_avec, true);
  add_degrees(sc_avec, true);

  auto* sc_beta = app.add_subcommand("beta", "beta invariants of the boundary divisors");
  add_common(sc_beta, true);
  add_degrees(sc_beta, true);
  add_coefficients(sc_beta, "comma-separated boundary coefficients (rationals)", true);

  auto* sc_sinv = app.add_subcommand("s-invariant", "expected vanishing orders");
  add_common(sc_sinv, true);
  add_degrees(sc_sinv, true);
  add_coefficients(sc_sinv, "comma-separated boundary coefficients (rationals)", true);

  auto* sc_kss = app.add_subcommand("kss-polytope", "K-semistable coefficient domain");
  add_common(sc_kss, true);
  add_degrees(sc_kss, true);

  auto* sc_cone = app.add_subcommand("cone-chain", "iterated projective-cone radii");
  add_common(sc_cone, true);
  add_degrees(sc_cone, true);

  auto* sc_cm = app.add_subcommand("cm-weight", "CM line bundle weight by three routes");
  add_common(sc_cm, true);
  sc_cm->add_option("--forms", o.forms_path, "JSON file with the forms")->required();
  add_coefficients(sc_cm, "comma-separated boundary multipliers y_j", true);
  sc_cm->add_option("--oneps", o.oneps, "comma-separated 1-PS weights (sum zero)")
      ->delimiter(',')
      ->required();
  sc_cm->add_option("--route", o.route, "def31 | lem32 | lem41 | all");
  sc_cm->add_option("--beta", o.beta, "fix beta to this rational in (0,1]");

  auto* sc_el = app.add_subcommand("effective-linearization",
                                   "fit the induced linearization coefficients");
  add_common(sc_el, true);
  add_degrees(sc_el, true);
  add_coefficients(sc_el, "comma-separated boundary multipliers y_j", true);

  auto* sc_git = app.add_subcommand("git-check", "Hilbert-Mumford verdict with frame search");
  add_common(sc_git, true);
  sc_git->add_option("--forms", o.forms_path, "JSON file with the forms")->required();
  sc_git->add_option("--linearization", o.linearization,
                     "comma-separated positive weights (default all 1)")
      ->delimiter(',');
  sc_git->add_option("--frames", o.frames,
                     "identity | permutations | random[:count] | <matrices.json>");

  auto* sc_vgit = app.add_subcommand("vgit-chambers", "wall-and-chamber decomposition");
  add_common(sc_vgit, true);
  add_degrees(sc_vgit, true);

  auto* sc_cv = app.add_subcommand("cone-verify", "graded quotient identities of the cone");
  add_common(sc_cv, true);
  add_degrees(sc_cv, true);
  sc_cv->add_option("--m-max", o.m_max, "verify all 0 <= i <= m <= m_max");

  auto* sc_report = app.add_subcommand("report", "bundled document for one configuration");
  add_common(sc_report, true);
  add_degrees(sc_report, true);
  sc_report->add_option("--m-max", o.m_max, "m_max for the cone identity section");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string name;
    for (auto* sub : {sc_avec, sc_beta, sc_sinv, sc_kss, sc_cone, sc_cm, sc_el, sc_git,
                      sc_vgit, sc_cv, sc_report})
      if (sub->parsed()) name = sub->get_name();
    Json doc = make_document(name, o, argc, argv);

    int rc = 1;
    if (name == "a-vector") rc = run_a_vector(o, doc);
    else if (name == "beta") rc = run_beta(o, doc);
    else if (name == "s-invariant") rc = run_s_invariant(o, doc);
    else if (name == "kss-polytope") rc = run_kss_polytope(o, doc);
    else if (name == "cone-chain") rc = run_cone_chain(o, doc);
    else if (name == "cm-weight") rc = run_cm_weight(o, doc);
    else if (name == "effective-linearization") rc = run_effective_linearization(o, doc);
    else if (name == "git-check") rc = run_git_check(o, doc);
    else if (name == "vgit-chambers") rc = run_vgit_chambers(o, doc);
    else if (name == "cone-verify") rc = run_cone_verify(o, doc);
    else if (name == "report") rc = run_report(o, doc, argc, argv);

    emit(doc, o);
    return rc;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return 4;
  }
}
