// elastica: classify, compare and generate anisotropic elasticity tensors.
//
// Exit codes: 0 ok / same orbit, 1 different orbit, 2 parse or I/O error,
// 3 stratum mismatch, 4 out of scope (below the tetragonal/trigonal union).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "elastica/bases.hpp"
#include "elastica/classification.hpp"
#include "elastica/covariants.hpp"
#include "elastica/json_io.hpp"
#include "elastica/normal_forms.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDifferent = 1;
constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitOutOfScope = 4;

using nlohmann::json;

struct CommonOptions {
  bool exact = false;
  double tol = 1e-9;
  std::optional<std::string> format_override;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw elastica::DocumentError("cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw elastica::DocumentError("invalid JSON in " + path);
  return j;
}

template <class T>
elastica::TensorDocument<T> load_document(const std::string& path, const CommonOptions& opt) {
  json j = load_json(path);
  if (opt.format_override) j["format"] = *opt.format_override;
  return elastica::parse_document<T>(j);
}

template <class T>
elastica::Tolerance<T> make_tolerance(const CommonOptions& opt) {
  if constexpr (elastica::ScalarTraits<T>::is_exact)
    return elastica::Tolerance<T>::exact();
  else
    return elastica::Tolerance<T>{opt.tol};
}

template <class T>
json diag_json(const elastica::ClassificationDiag<T>& diag, const CommonOptions& opt) {
  json tests = json::array();
  for (const auto& [name, value2, threshold2] : diag.tests)
    tests.push_back({{"covariant", name}, {"value2", value2}, {"threshold2", threshold2}});
  return {{"stratum", elastica::to_string(diag.label)},
          {"rel_tolerance", opt.exact ? 0.0 : opt.tol},
          {"tests", tests}};
}

template <class T>
int cmd_classify(const std::string& path, const CommonOptions& opt) {
  elastica::TensorDocument<T> doc = load_document<T>(path, opt);
  elastica::Tolerance<T> tol = make_tolerance<T>(opt);
  if (doc.format == elastica::DocFormat::Sym2) {
    elastica::StratumLabel label = elastica::classify_sym2(*doc.sym2, tol);
    std::cout << json{{"stratum", elastica::to_string(label)},
                      {"rel_tolerance", opt.exact ? 0.0 : opt.tol}}
                     .dump(2)
              << "\n";
    return kExitOk;
  }
  auto diag = elastica::classify_ela_report(doc.as_elasticity(), tol);
  std::cout << diag_json(diag, opt).dump(2) << "\n";
  return kExitOk;
}

template <class T>
json invariants_json(const elastica::TensorDocument<T>& doc) {
  json out;
  if (doc.format == elastica::DocFormat::Sym2) {
    elastica::Sym2Invariants<T> inv = elastica::invariants_sym2(*doc.sym2);
    out["sym2"] = {{"i1", elastica::scalar_json(inv.i1)},
                   {"j2", elastica::scalar_json(inv.j2)},
                   {"j3", elastica::scalar_json(inv.j3)}};
    return out;
  }
  elastica::ElasticityTensor<T> e = doc.as_elasticity();
  elastica::HarmonicParts<T> parts = elastica::decompose(e);
  elastica::ElaInvariants<T> ei =
      elastica::invariants_ela(parts, elastica::to_double(e.norm2()));
  json ela;
  auto eivals = ei.values();
  for (int k = 0; k < elastica::ElaInvariants<T>::size; ++k) {
    std::string key = elastica::ElaInvariants<T>::names[static_cast<std::size_t>(k)];
    for (auto& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    ela[key] = elastica::scalar_json(eivals[static_cast<std::size_t>(k)]);
  }
  out["ela"] = ela;
  elastica::H4Invariants<T> hi = elastica::invariants_h4(parts.h);
  json h4;
  auto hivals = hi.values();
  for (int k = 0; k < elastica::H4Invariants<T>::size; ++k) {
    std::string key = elastica::H4Invariants<T>::names[static_cast<std::size_t>(k)];
    for (auto& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    h4[key] = elastica::scalar_json(hivals[static_cast<std::size_t>(k)]);
  }
  out["h4"] = h4;
  return out;
}

template <class T>
int cmd_invariants(const std::string& path, const CommonOptions& opt) {
  elastica::TensorDocument<T> doc = load_document<T>(path, opt);
  std::cout << invariants_json(doc).dump(2) << "\n";
  return kExitOk;
}

template <class T>
int cmd_basis(const std::string& path, const std::string& stratum, bool kappa6_i3,
              const CommonOptions& opt) {
  elastica::TensorDocument<T> doc = load_document<T>(path, opt);
  elastica::Tolerance<T> tol = make_tolerance<T>(opt);

  elastica::StratumLabel actual = doc.format == elastica::DocFormat::Sym2
                                      ? elastica::classify_sym2(*doc.sym2, tol)
                                      : elastica::classify_ela(doc.as_elasticity(), tol);
  elastica::StratumLabel target = actual;
  if (stratum != "auto") {
    auto parsed = elastica::stratum_from_string(stratum);
    if (!parsed) throw elastica::DocumentError("unknown stratum: " + stratum);
    target = *parsed;
    if (target != actual) {
      std::cerr << "stratum mismatch: document classifies as "
                << elastica::to_string(actual) << "\n";
      return kExitMismatch;
    }
  }

  elastica::BasisValues<T> basis;
  try {
    basis = doc.format == elastica::DocFormat::Sym2
                ? elastica::functional_basis_sym2(*doc.sym2, target, tol)
                : elastica::functional_basis_ela(doc.as_elasticity(), target, tol, kappa6_i3);
  } catch (const std::invalid_argument& e) {
    // No minimal basis is implemented for this stratum.
    std::cerr << "out of scope: " << elastica::to_string(target) << " (" << e.what() << ")\n";
    return kExitOutOfScope;
  }

  json values;
  json names = json::array();
  for (std::size_t k = 0; k < basis.names.size(); ++k) {
    names.push_back(basis.names[k]);
    values[basis.names[k]] = elastica::scalar_json(basis.values[k]);
  }
  std::cout << json{{"stratum", elastica::to_string(basis.stratum)},
                    {"names", names},
                    {"values", values}}
                   .dump(2)
            << "\n";
  return kExitOk;
}

template <class T>
int cmd_separate(const std::string& path_a, const std::string& path_b,
                 const CommonOptions& opt, double verdict_tol) {
  elastica::TensorDocument<T> da = load_document<T>(path_a, opt);
  elastica::TensorDocument<T> db = load_document<T>(path_b, opt);
  if (!da.is_fourth_order() || !db.is_fourth_order())
    throw elastica::DocumentError("separate expects fourth-order documents");
  elastica::Tolerance<T> tol = make_tolerance<T>(opt);
  elastica::VerdictTolerance<T> vtol;
  if constexpr (!elastica::ScalarTraits<T>::is_exact) vtol.rel = verdict_tol;

  elastica::SeparationVerdict v =
      elastica::separate_ela(da.as_elasticity(), db.as_elasticity(), tol, vtol);
  json out = {{"verdict", elastica::to_string(v.verdict)},
              {"labels", {elastica::to_string(v.label_a), elastica::to_string(v.label_b)}}};
  if (v.witness) out["witness"] = *v.witness;
  std::cout << out.dump(2) << "\n";
  switch (v.verdict) {
    case elastica::Verdict::SameOrbit: return kExitOk;
    case elastica::Verdict::DifferentOrbit: return kExitDifferent;
    case elastica::Verdict::OutOfScope: return kExitOutOfScope;
  }
  return kExitParse;
}

template <class T>
int cmd_normal_form(const std::string& cls_name, const std::vector<double>& params_dbl,
                    const std::vector<std::string>& params_str,
                    std::optional<std::uint64_t> rotate_seed, const std::string& out_format,
                    const std::string& name) {
  elastica::NormalFormClass cls;
  if (cls_name == "sym2-ti") cls = elastica::NormalFormClass::Sym2TI;
  else if (cls_name == "h4-cubic") cls = elastica::NormalFormClass::H4Cubic;
  else if (cls_name == "h4-ti") cls = elastica::NormalFormClass::H4TI;
  else if (cls_name == "h4-tetragonal") cls = elastica::NormalFormClass::H4Tetragonal;
  else if (cls_name == "h4-trigonal") cls = elastica::NormalFormClass::H4Trigonal;
  else if (cls_name == "h4-orthotropic") cls = elastica::NormalFormClass::H4Orthotropic;
  else throw elastica::DocumentError("unknown normal-form class: " + cls_name);

  const int want = elastica::normal_form_param_count(cls);
  elastica::NormalFormParams<T> np;
  np.cls = cls;
  if constexpr (elastica::ScalarTraits<T>::is_exact) {
    if (static_cast<int>(params_str.size()) != want)
      throw elastica::DocumentError("expected " + std::to_string(want) +
                                    " exact parameters (--params-exact)");
    for (int k = 0; k < want; ++k)
      np.p[static_cast<std::size_t>(k)] =
          elastica::Exact::parse(params_str[static_cast<std::size_t>(k)]);
  } else {
    if (static_cast<int>(params_dbl.size()) != want)
      throw elastica::DocumentError("expected " + std::to_string(want) + " parameters");
    for (int k = 0; k < want; ++k)
      np.p[static_cast<std::size_t>(k)] = params_dbl[static_cast<std::size_t>(k)];
  }

  elastica::NormalForm<T> built = elastica::build(np);
  elastica::TensorDocument<T> doc;
  if (std::holds_alternative<elastica::Mat3<T>>(built)) {
    elastica::Mat3<T> a = std::get<elastica::Mat3<T>>(built);
    if (rotate_seed) a = elastica::sample_orbit(a, *rotate_seed);
    doc = elastica::document_from_sym2(a);
  } else {
    elastica::Harm4<T> h = std::get<elastica::Harm4<T>>(built);
    if (rotate_seed) h = elastica::sample_orbit(h, *rotate_seed);
    elastica::DocFormat f = out_format == "voigt6" ? elastica::DocFormat::Voigt6
                                                   : elastica::DocFormat::Kelvin6;
    doc = elastica::document_from_elasticity(elastica::ElasticityTensor<T>::embed(h), f);
  }
  doc.name = name;
  std::cout << elastica::document_to_json(doc).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant-based classification and comparison of elasticity tensors"};
  app.require_subcommand(1);

  CommonOptions common;
  if (const char* env = std::getenv("ELASTICA_TOL")) common.tol = std::atof(env);
  app.add_flag("--exact", common.exact,
               "exact arithmetic over Q(sqrt2); document scalars are strings");
  app.add_option("--tol", common.tol, "relative tolerance for zero tests (float mode)");

  std::string file_a, file_b, stratum = "auto", nf_class, out_format = "kelvin6", doc_name;
  std::vector<double> params_dbl;
  std::vector<std::string> params_str;
  std::uint64_t seed = 0;
  bool kappa6_i3 = false;
  double verdict_tol = 1e-6;

  CLI::App* c_classify = app.add_subcommand("classify", "symmetry class of a tensor document");
  c_classify->add_option("file", file_a, "tensor document (JSON)")->required();
  c_classify->add_option("--format", common.format_override,
                         "override the document's format tag");

  CLI::App* c_inv = app.add_subcommand("invariants", "invariant families of a document");
  c_inv->add_option("file", file_a)->required();
  c_inv->add_option("--format", common.format_override);

  CLI::App* c_basis = app.add_subcommand("basis", "minimal functional basis values");
  c_basis->add_option("file", file_a)->required();
  c_basis->add_option("--stratum", stratum, "auto (default) or an explicit label");
  c_basis->add_flag("--kappa6-i3", kappa6_i3, "use I3 instead of I2 as the sixth invariant");
  c_basis->add_option("--format", common.format_override);

  CLI::App* c_sep = app.add_subcommand("separate", "orbit comparison of two documents");
  c_sep->add_option("a", file_a)->required();
  c_sep->add_option("b", file_b)->required();
  c_sep->add_option("--verdict-tol", verdict_tol, "relative tolerance for invariant equality");
  c_sep->add_option("--format", common.format_override);

  CLI::App* c_nf = app.add_subcommand("normal-form", "emit a normal-form document");
  c_nf->add_option("--class", nf_class,
                   "sym2-ti | h4-cubic | h4-ti | h4-tetragonal | h4-trigonal | h4-orthotropic")
      ->required();
  c_nf->add_option("--params", params_dbl, "parameters (float mode)")->delimiter(',');
  c_nf->add_option("--params-exact", params_str, "parameters (exact mode, e.g. 1/2 or sqrt2)")
      ->delimiter(',');
  CLI::Option* seed_opt =
      c_nf->add_option("--rotate", seed, "rotate by a seeded random rotation");
  c_nf->add_option("--format", out_format, "kelvin6 (default) or voigt6");
  c_nf->add_option("--name", doc_name, "metadata name for the document");

  CLI11_PARSE(app, argc, argv);
  const bool have_seed = seed_opt->count() > 0;
  const auto rotate_seed =
      have_seed ? std::optional<std::uint64_t>(seed) : std::nullopt;

  try {
    if (common.exact) {
      using T = elastica::Exact;
      if (*c_classify) return cmd_classify<T>(file_a, common);
      if (*c_inv) return cmd_invariants<T>(file_a, common);
      if (*c_basis) return cmd_basis<T>(file_a, stratum, kappa6_i3, common);
      if (*c_sep) return cmd_separate<T>(file_a, file_b, common, verdict_tol);
      if (*c_nf)
        return cmd_normal_form<T>(nf_class, params_dbl, params_str, rotate_seed, out_format,
                                  doc_name);
    } else {
      using T = double;
      if (*c_classify) return cmd_classify<T>(file_a, common);
      if (*c_inv) return cmd_invariants<T>(file_a, common);
      if (*c_basis) return cmd_basis<T>(file_a, stratum, kappa6_i3, common);
      if (*c_sep) return cmd_separate<T>(file_a, file_b, common, verdict_tol);
      if (*c_nf)
        return cmd_normal_form<T>(nf_class, params_dbl, params_str, rotate_seed, out_format,
                                  doc_name);
    }
  } catch (const elastica::DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
