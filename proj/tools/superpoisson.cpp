// Command-line front end: structural checks, cohomology, Kaehler
// differentials, enveloping algebras, deformations and pre-Poisson structures.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "superpoisson/checks.hpp"
#include "superpoisson/cohomology.hpp"
#include "superpoisson/deformations.hpp"
#include "superpoisson/divided_powers.hpp"
#include "superpoisson/enveloping.hpp"
#include "superpoisson/io.hpp"
#include "superpoisson/library.hpp"
#include "superpoisson/lie_rinehart.hpp"
#include "superpoisson/pre_poisson.hpp"

namespace {

using spo::AlgebraBundle;
using spo::Report;
using spo::Vec;
using ojson = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
  bool json = false;
  bool timing = false;
  std::uint64_t seed = 1;
};

std::string combination(const std::vector<std::string>& names, const spo::Field& f, const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    if (!out.empty()) out += " + ";
    if (v[i] != 1) out += f.to_hex(v[i]) + "*";
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

std::string matrix_rows(const spo::Matrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + std::to_string(m(i, j));
  }
  return s;
}

void merge_report(ojson& out, const Report& r) {
  ojson j = spo::report_to_json(r);
  for (auto& [k, v] : j.items()) out[k] = v;
}

void print_text(const ojson& j, const std::string& prefix, std::ostream& os) {
  for (const auto& [k, v] : j.items()) {
    std::string key = prefix.empty() ? k : prefix + "." + k;
    if (v.is_object()) {
      print_text(v, key, os);
    } else if (v.is_array()) {
      bool scalars = std::all_of(v.begin(), v.end(), [](const ojson& e) { return !e.is_structured(); });
      if (scalars) {
        os << key << ":";
        for (const auto& e : v) os << " " << (e.is_string() ? e.get<std::string>() : e.dump());
        os << "\n";
      } else {
        std::size_t i = 0;
        for (const auto& e : v) print_text(e, key + "[" + std::to_string(i++) + "]", os);
      }
    } else {
      os << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

int emit(const Globals& g, ojson out, std::chrono::steady_clock::time_point start) {
  if (g.timing)
    out["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  if (g.json) std::cout << out.dump(2) << "\n";
  else print_text(out, "", std::cout);
  std::string status = out.value("status", "pass");
  return status == "pass" ? kExitPass : kExitFail;
}

ojson base(const std::string& command) {
  ojson j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

std::optional<int> parse_parity(const std::string& s) {
  if (s == "even") return 0;
  if (s == "odd") return 1;
  return std::nullopt;
}

// ---- subcommands ----

struct CheckArgs {
  std::string file, structure;
};

ojson run_check(const Globals& g, const CheckArgs& a) {
  AlgebraBundle p = spo::load_algebra(a.file);
  std::string structure = a.structure;
  if (structure.empty()) structure = p.is_poisson() ? "poisson" : p.is_lie() ? "lie" : "assoc";
  Report r;
  if (structure == "lie") r = spo::check_lie(p, g.seed);
  else if (structure == "assoc") r = spo::check_associative_supercommutative(p);
  else r = spo::check_poisson(p, g.seed);
  ojson out = base("check");
  out["algebra"] = p.name;
  out["structure"] = structure;
  merge_report(out, r);
  return out;
}

struct CohomologyArgs {
  std::string file, parity = "both", complex, module = "adjoint";
  std::size_t degree = 0;
  bool emit_basis = false;
};

ojson run_cohomology(const Globals&, const CohomologyArgs& a) {
  AlgebraBundle p = spo::load_algebra(a.file);
  std::string complex = a.complex.empty() ? (p.is_poisson() ? "poisson" : "lie") : a.complex;
  spo::Module m = spo::adjoint_module(p);
  spo::CochainSpace space(p, m, a.degree);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < space.dim(); ++i) names.push_back(space.coord_name(i));
  ojson out = base("cohomology");
  out["algebra"] = p.name;
  out["complex"] = complex;
  out["degree"] = a.degree;
  if (a.emit_basis) {
    out["basis"] = ojson::array();
    for (std::size_t i = 0; i < space.dim(); ++i)
      out["basis"].push_back({{"index", i}, {"name", names[i]}, {"parity", space.coord_parity(i)}});
  }
  auto compute = [&](std::optional<int> parity) {
    return complex == "lie" ? spo::lie_cohomology(p, m, a.degree, parity) : spo::poisson_cohomology(p, a.degree, parity);
  };
  ojson dims;
  std::vector<spo::CohomologyResult> parts;
  if (a.parity == "both") {
    parts.push_back(compute(0));
    parts.push_back(compute(1));
    dims["total"] = parts[0].dim + parts[1].dim;
    dims["even"] = parts[0].dim;
    dims["odd"] = parts[1].dim;
  } else {
    parts.push_back(compute(parse_parity(a.parity)));
    dims["total"] = parts[0].dim;
  }
  out["dimensions"] = dims;
  out["representatives"] = ojson::array();
  for (const auto& part : parts)
    for (const Vec& v : part.representatives) out["representatives"].push_back(combination(names, p.field, v));
  out["status"] = "pass";
  return out;
}

struct KaehlerArgs {
  std::string file;
  bool check_lr = false;
};

ojson run_kaehler(const Globals& g, const KaehlerArgs& a) {
  AlgebraBundle p = spo::load_algebra(a.file);
  spo::Kaehler k = spo::kaehler(p);
  ojson out = base("kaehler");
  out["algebra"] = p.name;
  out["dimensions"] = {{"total", k.triple.lie.dim()},
                       {"even", k.triple.lie.space.indices(0).size()},
                       {"odd", k.triple.lie.space.indices(1).size()}};
  out["basis"] = ojson::array();
  for (const auto& b : k.triple.lie.space.basis()) out["basis"].push_back(b.name);
  Report r = k.well_defined;
  if (a.check_lr) r.merge(spo::check_lie_rinehart(k.triple, g.seed));
  merge_report(out, r);
  return out;
}

struct UeaArgs {
  std::string file;
  std::size_t max_degree = 0, slack = 2;
  bool poisson = false;
};

ojson run_uea(const Globals& g, const UeaArgs& a) {
  AlgebraBundle p = spo::load_algebra(a.file);
  ojson out = base("uea");
  out["algebra"] = p.name;
  out["triple"] = a.poisson ? "kaehler" : "derivations";
  auto describe = [&](const spo::UEAResult& res, const Report& r) {
    std::size_t total = 0;
    for (auto d : res.certificate.dims) total += d;
    out["dimensions"] = {{"total", total}, {"by_degree", res.certificate.dims}};
    out["certificate"] = {{"slack", res.certificate.slack},
                          {"dims", res.certificate.dims},
                          {"dims_next", res.certificate.dims_next},
                          {"stable", res.certificate.stable}};
    out["representatives"] = ojson::array();
    for (std::size_t i : res.uea.representatives()) out["representatives"].push_back(res.uea.monomial_name(i));
    merge_report(out, r);
  };
  if (a.poisson) {
    spo::PoissonUEA u = spo::poisson_uea(p, a.max_degree, a.slack, g.seed);
    describe(u.result, u.relations);
  } else {
    spo::UEAResult res = spo::truncated_uea(spo::der_triple(p), a.max_degree, a.slack);
    describe(res, spo::check_uea_relations(res.uea, g.seed));
  }
  return out;
}

struct DeformArgs {
  std::string file, layers;
  bool extend = false;
};

ojson run_deform(const Globals& g, const DeformArgs& a) {
  AlgebraBundle p = spo::load_algebra(a.file);
  spo::CochainSpace s2 = spo::layer_space(p);
  std::vector<std::string> names2;
  for (std::size_t i = 0; i < s2.dim(); ++i) names2.push_back(s2.coord_name(i));
  spo::TruncatedDeformation d{p, spo::parse_layers(spo::read_file(a.layers), names2, p.field, a.layers)};
  if (d.layers.empty()) throw spo::Error(spo::ErrorKind::ValidationError, a.layers + ": no layers");
  ojson out = base("deform");
  out["algebra"] = p.name;
  out["order"] = d.order();
  Report inf = spo::check_infinitesimal(d);
  out["infinitesimal"] = spo::report_to_json(inf);
  if (!inf.ok()) {
    out["status"] = "fail";
    return out;
  }
  if (d.order() == 1) {
    auto psi = spo::equivalent_order1(p, d.layers[0], Vec(s2.dim(), 0));
    out["equivalent_to_trivial"] = psi.has_value();
  }
  Report bundle = spo::check_poisson(spo::deformed_bundle(d), g.seed);
  out["deformed_poisson"] = spo::report_to_json(bundle);
  if (!bundle.ok()) {
    out["status"] = "fail";
    return out;
  }
  spo::CochainSpace s3(p, spo::adjoint_module(p), 3);
  std::vector<std::string> names3;
  for (std::size_t i = 0; i < s3.dim(); ++i) names3.push_back(s3.coord_name(i));
  Vec ob = spo::obstruction(d);
  out["obstruction"] = combination(names3, p.field, ob);
  out["obstruction_zero"] = spo::is_zero(ob);
  std::string status = "pass";
  if (a.extend) {
    auto next = spo::find_extension(d);
    if (next) out["extension"] = combination(names2, p.field, *next);
    else status = "fail";
    out["extendable"] = next.has_value();
  }
  out["status"] = status;
  return out;
}

struct PrePoissonArgs {
  std::string file, search_rb;
};

ojson derived_report(const spo::TwoProductBundle& b, std::uint64_t seed) {
  Report r = spo::check_pre_poisson(b, seed);
  ojson j = spo::report_to_json(r);
  if (r.ok()) {
    Report pr = spo::check_poisson(spo::pre_poisson_to_poisson(b), seed);
    j["poisson"] = spo::report_to_json(pr);
    if (!pr.ok()) j["status"] = "fail";
  }
  return j;
}

ojson run_prepoisson(const Globals& g, const PrePoissonArgs& a) {
  ojson out = base("prepoisson");
  if (!a.search_rb.empty()) {
    AlgebraBundle p = spo::load_algebra(a.search_rb);
    out["algebra"] = p.name;
    auto found = spo::rota_baxter_search(p);
    out["operators"] = ojson::array();
    bool ok = true;
    for (const auto& r : found) {
      ojson j = derived_report(spo::rota_baxter_to_pre_poisson(p, r), g.seed);
      ok = ok && j["status"] == "pass";
      out["operators"].push_back({{"matrix", matrix_rows(r)}, {"derived", j}});
    }
    out["count"] = found.size();
    out["status"] = ok ? "pass" : "fail";
    return out;
  }
  spo::TwoProductBundle b = spo::load_two_product(a.file);
  out["algebra"] = b.name;
  ojson j = derived_report(b, g.seed);
  for (auto& [k, v] : j.items()) out[k] = v;
  return out;
}

struct ExampleArgs {
  bool list = false;
  std::string name, type;
  std::size_t even_pairs = 1, odd = 0;
  std::vector<unsigned> heights{1};
};

int run_example(const ExampleArgs& a) {
  if (a.list) {
    for (const auto& n : spo::library_names()) std::cout << n << "\n";
    std::cout << "divided powers: --type pi-i|pi-pi --even-pairs K --odd N --heights H,...\n";
    return kExitPass;
  }
  AlgebraBundle p;
  if (!a.type.empty()) {
    spo::DPType t = a.type == "pi-i" ? spo::DPType::PiI : spo::DPType::PiPi;
    p = spo::build_divided_power(spo::Field(), t, spo::make_dp_spec(t, a.even_pairs, a.odd, a.heights));
    p.name = (t == spo::DPType::PiI ? "pi_i_" : "pi_pi_") + std::to_string(a.even_pairs) + "_" + std::to_string(a.odd);
  } else if (!a.name.empty()) {
    p = spo::library_algebra(a.name);
  } else {
    std::cerr << "example: give --list, --name or --type\n";
    return kExitUsage;
  }
  std::cout << spo::serialize_algebra(p);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poisson superalgebras over fields of characteristic 2"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Print a JSON report");
  app.add_flag("--timing", g.timing, "Include wall-clock time in the report");
  app.add_option("--seed", g.seed, "Seed for randomized property sampling");
  app.fallthrough();

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Verify the axioms of an algebra file");
  c_check->add_option("file", check.file, "Algebra file")->required()->check(CLI::ExistingFile);
  c_check->add_option("--structure", check.structure, "lie, assoc or poisson")->check(CLI::IsMember({"lie", "assoc", "poisson"}));

  CohomologyArgs coh;
  auto* c_coh = app.add_subcommand("cohomology", "Cohomology with adjoint coefficients");
  c_coh->add_option("file", coh.file, "Algebra file")->required()->check(CLI::ExistingFile);
  c_coh->add_option("--degree", coh.degree, "Cochain degree")->required();
  c_coh->add_option("--parity", coh.parity, "even, odd or both")->check(CLI::IsMember({"even", "odd", "both"}));
  c_coh->add_option("--complex", coh.complex, "lie or poisson")->check(CLI::IsMember({"lie", "poisson"}));
  c_coh->add_option("--module", coh.module, "Coefficient module")->check(CLI::IsMember({"adjoint"}));
  c_coh->add_flag("--emit-basis", coh.emit_basis, "List the cochain coordinates");

  KaehlerArgs kae;
  auto* c_kae = app.add_subcommand("kaehler", "Module of Kaehler differentials");
  c_kae->add_option("file", kae.file, "Poisson algebra file")->required()->check(CLI::ExistingFile);
  c_kae->add_flag("--check-lr", kae.check_lr, "Verify the Lie-Rinehart axioms");

  UeaArgs uea;
  auto* c_uea = app.add_subcommand("uea", "Truncated universal enveloping algebra");
  c_uea->add_option("file", uea.file, "Algebra file")->required()->check(CLI::ExistingFile);
  c_uea->add_option("--max-degree", uea.max_degree, "Largest reported degree")->required();
  c_uea->add_option("--slack", uea.slack, "Extra elimination degrees");
  c_uea->add_flag("--poisson", uea.poisson, "Use the Kaehler triple of a Poisson algebra");

  DeformArgs def;
  auto* c_def = app.add_subcommand("deform", "Check a truncated formal deformation");
  c_def->add_option("file", def.file, "Poisson algebra file")->required()->check(CLI::ExistingFile);
  c_def->add_option("--layers", def.layers, "Layer file")->required()->check(CLI::ExistingFile);
  c_def->add_flag("--extend", def.extend, "Search for the next layer");

  PrePoissonArgs pre;
  auto* c_pre = app.add_subcommand("prepoisson", "Pre-Poisson structures");
  auto* pre_file = c_pre->add_option("file", pre.file, "Two-product file")->check(CLI::ExistingFile);
  auto* pre_rb = c_pre->add_option("--search-rb", pre.search_rb, "Search Rota-Baxter operators on a Poisson algebra file")
                     ->check(CLI::ExistingFile);
  pre_file->excludes(pre_rb);
  c_pre->require_option(1);

  ExampleArgs ex;
  auto* c_ex = app.add_subcommand("example", "Print a built-in algebra file");
  c_ex->add_flag("--list", ex.list, "List the built-in algebras");
  c_ex->add_option("--name", ex.name, "Built-in algebra name");
  c_ex->add_option("--type", ex.type, "Divided-power type")->check(CLI::IsMember({"pi-i", "pi-pi"}));
  c_ex->add_option("--even-pairs", ex.even_pairs, "Number of (p, q) pairs");
  c_ex->add_option("--odd", ex.odd, "Number of odd variables");
  c_ex->add_option("--heights", ex.heights, "Heights of the even variables")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  auto start = std::chrono::steady_clock::now();
  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "example") return run_example(ex);
    ojson out;
    if (command == "check") out = run_check(g, check);
    else if (command == "cohomology") out = run_cohomology(g, coh);
    else if (command == "kaehler") out = run_kaehler(g, kae);
    else if (command == "uea") out = run_uea(g, uea);
    else if (command == "deform") out = run_deform(g, def);
    else out = run_prepoisson(g, pre);
    return emit(g, std::move(out), start);
  } catch (const spo::Error& e) {
    bool usage = e.kind() == spo::ErrorKind::ParseError || e.kind() == spo::ErrorKind::ValidationError ||
                 e.kind() == spo::ErrorKind::RoleMismatch;
    ojson out = base(command);
    out["status"] = "error";
    out["error"] = {{"kind", spo::to_string(e.kind())}, {"message", e.what()}};
    if (g.json) std::cout << out.dump(2) << "\n";
    else std::cerr << "error: " << e.what() << "\n";
    return usage ? kExitUsage : kExitFail;
  }
}
