#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "nlie/json_io.hpp"

using namespace nlie;

namespace {

// exit codes: 0 ok, 1 input/shape error, 2 mathematical violation (witness
// on stdout as JSON)

Representation resolve_rep(const std::string& spec, const NLieAlgebra& a) {
  if (spec == "adjoint") return adjoint_representation(a);
  if (spec.rfind("trivial:", 0) == 0) {
    int dv = std::stoi(spec.substr(8));
    if (dv < 0) throw std::invalid_argument("trivial:<dim> needs dim >= 0");
    return trivial_representation(a, dv);
  }
  return parse_rep(load_json_file(spec), a);
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << dump_canonical(j);
  else
    write_json_file(out_path, j);
}

int fail_with(const Violation& v) {
  std::cout << dump_canonical(emit_violation(v));
  return 2;
}

int cmd_validate(const std::string& algebra_path, const std::string& rep_spec) {
  NLieAlgebra a = parse_algebra(load_json_file(algebra_path));
  if (auto bad = validate_fundamental_identity(a)) return fail_with(*bad);
  if (!rep_spec.empty()) {
    Representation r = resolve_rep(rep_spec, a);
    if (auto bad = validate_representation(a, r)) return fail_with(*bad);
    if (auto bad = check_rep_identity(a, r)) return fail_with(*bad);
  }
  json ok;
  ok["ok"] = true;
  std::cout << dump_canonical(ok);
  return 0;
}

int cmd_cohomology(const std::string& algebra_path, const std::string& rep_spec,
                   const std::string& complex_name, int degree, const std::string& out) {
  NLieAlgebra a = parse_algebra(load_json_file(algebra_path));
  ComplexKind kind = kind_from_name(complex_name);
  if (kind == ComplexKind::lie && a.n != 2)
    throw std::invalid_argument("the lie complex needs an n = 2 algebra");
  Representation r = resolve_rep(rep_spec, a);
  CohomologyReport rep = cohomology(a, r, kind, degree);
  int dim_v = (kind == ComplexKind::leibniz) ? a.dim : r.dim_v;
  emit(emit_cohomology_report(a, dim_v, rep), out);
  std::ostream& info = out.empty() ? std::cerr : std::cout;
  info << "H^" << degree << " (" << complex_name << "): dim C = " << rep.dim_cochains
       << ", dim Z = " << rep.dim_cocycles << ", dim B = " << rep.dim_coboundaries
       << ", dim H = " << rep.dim_h << "\n";
  return 0;
}

int cmd_check_derivation(const std::string& algebra_path, const std::string& mat_path) {
  NLieAlgebra a = parse_algebra(load_json_file(algebra_path));
  Mat d = parse_matrix(load_json_file(mat_path), a.dim, a.dim);
  if (auto bad = is_derivation(a, d)) return fail_with(*bad);
  json ok;
  ok["ok"] = true;
  ok["dim_derivation_space"] = std::int64_t(derivation_space(a).size());
  std::cout << dump_canonical(ok);
  return 0;
}

int cmd_check_gen_derivation(const std::string& algebra_path, const std::string& d_path) {
  NLieAlgebra a = parse_algebra(load_json_file(algebra_path));
  GenDer g = parse_gen_der(load_json_file(d_path), a);
  GenDerReport rep = is_generalized_derivation(a, g);
  json j;
  j["axiom_I"] = rep.axiom1 ? emit_violation(*rep.axiom1) : json{{"ok", true}};
  j["axiom_II"] = rep.axiom2 ? emit_violation(*rep.axiom2) : json{{"ok", true}};
  j["axiom_III"] = rep.axiom3 ? emit_violation(*rep.axiom3) : json{{"ok", true}};
  if (!rep.axiom2) {
    auto cocycle = gen_der_cocycle_check(a, g);
    j["d_sharp_cocycle"] = cocycle ? emit_violation(*cocycle) : json{{"ok", true}};
    if (cocycle) {
      std::cout << dump_canonical(j);
      return 2;
    }
  }
  std::cout << dump_canonical(j);
  return rep.all_ok() ? 0 : 2;
}

int cmd_extend_abelian(const std::string& algebra_path, const std::string& rep_spec,
                       const std::string& f_path, const std::string& out) {
  NLieAlgebra a = parse_algebra(load_json_file(algebra_path));
  Representation r = resolve_rep(rep_spec, a);
  Cochain f = parse_cochain(load_json_file(f_path), a, r.dim_v);
  if (f.kind != ComplexKind::standard || f.degree != 2)
    throw std::invalid_argument("extend abelian needs a degree-2 standard cochain");
  NLieAlgebra ext = abelian_extension(a, r, f.coeffs);
  emit(emit_algebra(ext), out);
  Vec delta_f = delta_standard(a, r, 2).apply(f.coeffs);
  auto fi = validate_fundamental_identity(ext);
  if (fi || !is_zero(delta_f)) {
    json j;
    j["fundamental_identity"] = fi ? emit_violation(*fi) : json{{"ok", true}};
    j["delta_f_zero"] = is_zero(delta_f);
    std::cout << dump_canonical(j);
    return 2;
  }
  return 0;
}

int cmd_extend_gen_der(const std::string& algebra_path, const std::string& d_path,
                       const std::string& out) {
  NLieAlgebra a = parse_algebra(load_json_file(algebra_path));
  GenDer g = parse_gen_der(load_json_file(d_path), a);
  NLieAlgebra ext = gen_der_extension(a, g);
  emit(emit_algebra(ext), out);
  if (auto fi = validate_fundamental_identity(ext)) return fail_with(*fi);
  return 0;
}

int cmd_equivalent(const std::string& algebra_path, const std::string& rep_spec,
                   const std::string& f_path, const std::string& g_path) {
  NLieAlgebra a = parse_algebra(load_json_file(algebra_path));
  Representation r = resolve_rep(rep_spec, a);
  Cochain f = parse_cochain(load_json_file(f_path), a, r.dim_v);
  Cochain g = parse_cochain(load_json_file(g_path), a, r.dim_v);
  SparseMatrix d2 = delta_standard(a, r, 2);
  if (!is_zero(d2.apply(f.coeffs)))
    return fail_with(Violation{"equivalent", {}, "f is not a 2-cocycle"});
  if (!is_zero(d2.apply(g.coeffs)))
    return fail_with(Violation{"equivalent", {}, "g is not a 2-cocycle"});
  auto h = extensions_equivalent(a, r, f.coeffs, g.coeffs);
  json j;
  j["equivalent"] = bool(h);
  if (h) {
    Cochain hc;
    hc.kind = ComplexKind::standard;
    hc.degree = 1;
    hc.desc = standard_cochain_desc(a.n, a.dim, r.dim_v, 1);
    hc.coeffs = *h;
    j["h"] = emit_cochain(a, r.dim_v, hc);
  }
  std::cout << dump_canonical(j);
  return 0;
}

int cmd_deform_check(const std::string& algebra_path, const std::string& eta_path,
                     const std::string& eta2_path) {
  NLieAlgebra a = parse_algebra(load_json_file(algebra_path));
  Cochain eta = parse_cochain(load_json_file(eta_path), a, a.dim);
  if (auto bad = infinitesimal_deformation_check(a, eta.coeffs)) return fail_with(*bad);
  json j;
  j["cocycle"] = true;
  if (!eta2_path.empty()) {
    Cochain eta2 = parse_cochain(load_json_file(eta2_path), a, a.dim);
    if (auto bad = infinitesimal_deformation_check(a, eta2.coeffs)) return fail_with(*bad);
    auto g = deformations_equivalent(a, eta.coeffs, eta2.coeffs);
    j["equivalent"] = bool(g);
    if (g) {
      Cochain gc;
      gc.kind = ComplexKind::standard;
      gc.degree = 1;
      gc.desc = standard_cochain_desc(a.n, a.dim, a.dim, 1);
      gc.coeffs = *g;
      j["g"] = emit_cochain(a, a.dim, gc);
    }
  }
  std::cout << dump_canonical(j);
  return 0;
}

json page_to_json(const SpectralPage& page) {
  json cells = json::array();
  for (const auto& [ji, dim] : page.dims) {
    json cell;
    cell["j"] = ji.first;
    cell["i"] = ji.second;
    cell["dim"] = dim;
    cells.push_back(cell);
  }
  json j;
  j["r"] = page.r;
  j["cells"] = cells;
  if (!page.notes.empty()) j["notes"] = page.notes;
  return j;
}

int cmd_spectral(const std::string& algebra_path, const std::string& rep_spec,
                 const std::string& sub_path, const std::string& ideal_path, int bound,
                 const std::string& out) {
  NLieAlgebra a = parse_algebra(load_json_file(algebra_path));
  Representation r = resolve_rep(rep_spec, a);
  if (!sub_path.empty()) {
    SubalgebraSpec k = parse_subalgebra(load_json_file(sub_path), a);
    if (auto bad = validate_subalgebra(a, k)) return fail_with(*bad);
    E1Result e1 = e1_page(a, r, k, bound);
    json j = page_to_json(e1.page);
    json routes = json::array();
    for (const auto& [ji, pair] : e1.routes) {
      json c;
      c["j"] = ji.first;
      c["i"] = ji.second;
      c["graded"] = pair.first;
      c["leibniz"] = pair.second;
      routes.push_back(c);
    }
    j["routes"] = routes;
    j["agree"] = e1.agree;
    emit(j, out);
    return e1.agree ? 0 : 2;
  }
  SubalgebraSpec k = parse_subalgebra(load_json_file(ideal_path), a);
  k.ideal = true;
  E2Result e2 = e2_page(a, r, k, bound);
  if (e2.hypothesis) return fail_with(*e2.hypothesis);
  json j = page_to_json(e2.page);
  j["annihilation_ok"] = e2.annihilation_ok;
  j["action_is_representation"] = !e2.action_representation;
  emit(j, out);
  return (e2.annihilation_ok && !e2.action_representation) ? 0 : 2;
}

int cmd_compare_complexes(const std::string& algebra_path, const std::string& rep_spec,
                          int max_degree) {
  NLieAlgebra a = parse_algebra(load_json_file(algebra_path));
  Representation r = resolve_rep(rep_spec, a);
  CoincidenceReport rep = complexes_coincide_check(a, r, max_degree);
  json j;
  j["n"] = a.n;
  j["coincide"] = rep.coincide;
  j["witness"] = rep.witness;
  std::cout << dump_canonical(j);
  return 0;
}

int cmd_compare_ext_cohomology(const std::string& algebra_path, const std::string& d_path,
                               const std::string& rep_spec, int max_degree) {
  NLieAlgebra a = parse_algebra(load_json_file(algebra_path));
  GenDer g = parse_gen_der(load_json_file(d_path), a);
  GenDerReport gr = is_generalized_derivation(a, g);
  if (!gr.all_ok()) {
    if (gr.axiom1) return fail_with(*gr.axiom1);
    if (gr.axiom2) return fail_with(*gr.axiom2);
    return fail_with(*gr.axiom3);
  }
  NLieAlgebra ext = gen_der_extension(a, g);
  Representation r_ext = resolve_rep(rep_spec, ext);
  ExtCohomologyCompare cmp = gen_der_ext_cohomology_compare(a, g, r_ext, max_degree);
  json j;
  j["dims_extension"] = cmp.dims_ext;
  j["dims_base"] = cmp.dims_base;
  j["all_equal"] = cmp.all_equal;
  std::cout << dump_canonical(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for n-ary algebra cohomology and extensions"};
  app.require_subcommand(1);

  std::string algebra_path, rep_spec, out_path;

  auto* validate = app.add_subcommand("validate", "check the fundamental identity (and a representation)");
  validate->add_option("algebra", algebra_path)->required();
  std::string validate_rep;
  validate->add_option("--rep", validate_rep, "representation file");

  auto* coh = app.add_subcommand("cohomology", "cohomology dimensions and representatives");
  std::string coh_complex = "standard";
  int coh_degree = 1;
  coh->add_option("algebra", algebra_path)->required();
  coh->add_option("--rep", rep_spec, "rep file, 'adjoint', or 'trivial:<dim>'")->required();
  coh->add_option("--complex", coh_complex, "standard|alternate|leibniz|lie");
  coh->add_option("--degree", coh_degree)->required();
  coh->add_option("--out", out_path, "write the JSON report here");

  auto* chk_der = app.add_subcommand("check-derivation", "test a matrix for the derivation identity");
  std::string mat_path;
  chk_der->add_option("algebra", algebra_path)->required();
  chk_der->add_option("matrix", mat_path)->required();

  auto* chk_gd = app.add_subcommand("check-gen-derivation", "test the three generalized-derivation axioms");
  std::string d_path;
  chk_gd->add_option("algebra", algebra_path)->required();
  chk_gd->add_option("D", d_path)->required();

  auto* extend = app.add_subcommand("extend", "build an abelian or generalized-derivation extension");
  extend->require_subcommand(1);
  auto* ext_ab = extend->add_subcommand("abelian");
  std::string f_path;
  ext_ab->add_option("algebra", algebra_path)->required();
  ext_ab->add_option("rep", rep_spec)->required();
  ext_ab->add_option("cocycle", f_path)->required();
  ext_ab->add_option("--out", out_path);
  auto* ext_gd = extend->add_subcommand("gen-der");
  ext_gd->add_option("algebra", algebra_path)->required();
  ext_gd->add_option("D", d_path)->required();
  ext_gd->add_option("--out", out_path);

  auto* equiv = app.add_subcommand("equivalent", "decide equivalence of two abelian extensions");
  std::string g_path;
  equiv->add_option("algebra", algebra_path)->required();
  equiv->add_option("rep", rep_spec)->required();
  equiv->add_option("f", f_path)->required();
  equiv->add_option("g", g_path)->required();

  auto* deform = app.add_subcommand("deform-check", "infinitesimal deformation cocycle check");
  std::string eta2_path;
  deform->add_option("algebra", algebra_path)->required();
  deform->add_option("eta", f_path)->required();
  deform->add_option("--compare", eta2_path, "second deformation for equivalence");

  auto* spectral = app.add_subcommand("spectral", "E1 (subalgebra) or E2 (commuting ideal) page");
  std::string sub_path, ideal_path;
  int bound = 3;
  spectral->add_option("algebra", algebra_path)->required();
  spectral->add_option("--rep", rep_spec)->required();
  auto* so = spectral->add_option("--subalgebra", sub_path);
  auto* io = spectral->add_option("--ideal", ideal_path);
  so->excludes(io);
  spectral->add_option("--degree-bound", bound);
  spectral->add_option("--out", out_path);

  auto* cmp_cx = app.add_subcommand("compare-complexes", "standard vs alternate differentials");
  int max_degree = 2;
  cmp_cx->add_option("algebra", algebra_path)->required();
  cmp_cx->add_option("--rep", rep_spec)->required();
  cmp_cx->add_option("--max-degree", max_degree);

  auto* cmp_ext = app.add_subcommand("compare-extension-cohomology",
                                     "dim H^m of L (+)_D k against dim H^m of L");
  cmp_ext->add_option("algebra", algebra_path)->required();
  cmp_ext->add_option("D", d_path)->required();
  cmp_ext->add_option("--rep", rep_spec)->required();
  cmp_ext->add_option("--max-degree", max_degree);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(algebra_path, validate_rep);
    if (coh->parsed()) return cmd_cohomology(algebra_path, rep_spec, coh_complex, coh_degree, out_path);
    if (chk_der->parsed()) return cmd_check_derivation(algebra_path, mat_path);
    if (chk_gd->parsed()) return cmd_check_gen_derivation(algebra_path, d_path);
    if (extend->parsed()) {
      if (ext_ab->parsed()) return cmd_extend_abelian(algebra_path, rep_spec, f_path, out_path);
      return cmd_extend_gen_der(algebra_path, d_path, out_path);
    }
    if (equiv->parsed()) return cmd_equivalent(algebra_path, rep_spec, f_path, g_path);
    if (deform->parsed()) return cmd_deform_check(algebra_path, f_path, eta2_path);
    if (spectral->parsed()) {
      if (sub_path.empty() && ideal_path.empty())
        throw std::invalid_argument("spectral needs --subalgebra or --ideal");
      return cmd_spectral(algebra_path, rep_spec, sub_path, ideal_path, bound, out_path);
    }
    if (cmp_cx->parsed()) return cmd_compare_complexes(algebra_path, rep_spec, max_degree);
    if (cmp_ext->parsed())
      return cmd_compare_ext_cohomology(algebra_path, d_path, rep_spec, max_degree);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
