#include "tcurv/driver.hpp"

#include "tcurv/errors.hpp"

#include <algorithm>
#include <sstream>

namespace tcurv {

namespace {

const std::vector<std::string>& known_groups() {
  static const std::vector<std::string> groups = {
      "frame", "curvature", "paracontact", "sasakian", "identities",
      "dim3",  "symmetry",  "eta-parallel", "theorems"};
  return groups;
}

std::string render_vector(const std::vector<Rational>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i].str();
  out << ")";
  return out.str();
}

}  // namespace

bool VerificationResult::all_pass() const {
  for (const CheckReport* rep :
       {&frame_checks, &structure_checks, &paracontact_checks, &sasakian_checks,
        &identity_checks, &dim3_checks, &eta_parallel_checks}) {
    if (!rep->all_pass()) return false;
  }
  for (const auto& v : verdicts) {
    if (v.local && !v.local->pass()) return false;
    if (v.global && !v.global->pass()) return false;
    if (!v.cross.all_pass()) return false;
  }
  return true;
}

bool matches_bundled_example(const Manifest& manifest) {
  if (manifest.frame.dim != 3 || !manifest.pc) return false;
  const Rational& eps = manifest.pc->eps;
  if (eps * eps != Rational(1)) return false;

  FrameSpec expect = FrameSpec::make(3);
  expect.g(0, 0) = Rational(1);
  expect.g(1, 1) = Rational(1);
  expect.g(2, 2) = eps;
  expect.set_bracket(0, 2, 0, Rational(1));  // [e1,e3] = e1
  expect.set_bracket(1, 2, 1, Rational(1));  // [e2,e3] = e2
  if (!(manifest.frame.g == expect.g) || !(manifest.frame.c == expect.c)) return false;

  ParacontactSpec pc = ParacontactSpec::make(3, eps);
  pc.phi(0, 0) = eps;
  pc.phi(1, 1) = eps;
  pc.xi(2) = Rational(1);
  pc.eta(2) = Rational(1);
  return manifest.pc->phi == pc.phi && manifest.pc->xi == pc.xi && manifest.pc->eta == pc.eta;
}

std::vector<Discrepancy> source_table_comparison(const Manifest& manifest,
                                                 const GeometryCache& geom) {
  std::vector<Discrepancy> out;
  if (!matches_bundled_example(manifest)) return out;
  const Rational eps = manifest.pc->eps;
  const Connection& conn = geom.conn;
  const Tensor& rm = geom.riemann;

  auto add_vec = [&](std::string id, std::vector<Rational> paper, std::vector<Rational> engine) {
    bool agree = paper == engine;
    out.push_back(Discrepancy{std::move(id), render_vector(paper), render_vector(engine), agree});
  };
  auto add_scalar = [&](std::string id, const Rational& paper, const Rational& engine) {
    out.push_back(Discrepancy{std::move(id), paper.str(), engine.str(), paper == engine});
  };

  out.push_back(Discrepancy{
      "bracket-table-misprint",
      "bracket list names the pair (e1,e2) twice: [e1,e2] = 0 and [e1,e2] = e2",
      "[e2,e3] = e2 (only reading consistent with the connection table)", false});

  auto conn_column = [&](int i, int j) {
    std::vector<Rational> v;
    for (int k = 0; k < 3; ++k) v.push_back(conn.gamma(k, i, j));
    return v;
  };
  auto riem_column = [&](int i, int j, int k) {
    std::vector<Rational> v;
    for (int l = 0; l < 3; ++l) v.push_back(rm(l, i, j, k));
    return v;
  };

  add_vec("connection-nabla-e3-e1", {Rational(-1), Rational(0), Rational(0)}, conn_column(2, 0));
  add_vec("connection-nabla-e3-e2", {Rational(0), Rational(-1), Rational(0)}, conn_column(2, 1));
  add_vec("riemann-r-e1-e3-e1", {Rational(0), Rational(0), Rational(2) * eps},
          riem_column(0, 2, 0));
  add_vec("riemann-r-e2-e3-e2", {Rational(0), Rational(0), Rational(2) * eps},
          riem_column(1, 2, 1));
  add_vec("riemann-r-e1-e3-e3", {Rational(0), Rational(0), Rational(0)}, riem_column(0, 2, 2));
  add_vec("riemann-r-e2-e3-e3", {Rational(0), Rational(0), Rational(0)}, riem_column(1, 2, 2));
  add_scalar("ricci-s-e1-e1", -(eps + Rational(2)), geom.ricci(0, 0));
  add_scalar("ricci-s-e2-e2", -(eps + Rational(2)), geom.ricci(1, 1));
  add_scalar("ricci-s-e3-e3", Rational(0), geom.ricci(2, 2));
  add_scalar("scalar-r", Rational(-2) * (eps + Rational(2)), geom.scalar);
  return out;
}

VerificationResult run_verification(const Manifest& manifest, const VerifyOptions& options) {
  if (options.preset_name && options.explicit_params)
    throw std::invalid_argument("give a preset or explicit params, not both");

  std::vector<std::string> groups;
  if (options.check_groups) {
    for (const auto& g : *options.check_groups) {
      if (std::find(known_groups().begin(), known_groups().end(), g) == known_groups().end())
        throw std::invalid_argument("unknown check group '" + g + "'");
      groups.push_back(g);
    }
  } else {
    groups = known_groups();
  }
  auto selected = [&](const std::string& g) {
    return std::find(groups.begin(), groups.end(), g) != groups.end();
  };

  const FrameSpec& frame = manifest.frame;
  VerificationResult result;
  result.manifest_label = manifest.name.value_or("manifest");
  result.dim = frame.dim;
  if (manifest.pc) result.epsilon = manifest.pc->eps;

  // frame validation gates everything that needs derived geometry
  CheckReport frame_rep = validate_frame(frame);
  if (selected("frame")) result.frame_checks = frame_rep;
  const bool frame_ok = frame_rep.all_pass();

  const bool need_geometry =
      selected("curvature") || selected("sasakian") || selected("identities") ||
      selected("dim3") || selected("symmetry") || selected("eta-parallel") ||
      selected("theorems");
  if (!frame_ok && need_geometry && !selected("frame"))
    throw precondition_error("frame validation failed; selected checks need a valid frame");

  if (frame_ok) result.geometry = GeometryCache::derive(frame);
  const GeometryCache* geom = result.geometry ? &*result.geometry : nullptr;

  if (geom && selected("curvature")) {
    CheckReport rep;
    rep.add(check_tensor_zero("torsion-free", torsion_defect(frame, geom->conn)));
    rep.add(check_tensor_zero("metric-compatible", metricity_defect(frame, geom->conn)));
    rep.append(curvature_symmetry_suite(*geom, frame));
    result.structure_checks = rep;
  }

  // paracontact chain
  bool axioms_ok = false;
  bool sasakian_ok = false;
  if (manifest.pc && frame_ok) {
    const ParacontactSpec& pc = *manifest.pc;
    CheckReport axioms = validate_paracontact(frame, pc);
    axioms_ok = axioms.all_pass();
    if (selected("paracontact")) result.paracontact_checks = axioms;

    if (geom && axioms_ok) {
      CheckReport sas = validate_eps_ps(frame, pc, *geom);
      sasakian_ok = sas.all_pass();
      if (selected("sasakian")) result.sasakian_checks = sas;
      if (!sasakian_ok && !selected("sasakian") &&
          (selected("identities") || selected("dim3") || selected("symmetry") ||
           selected("eta-parallel") || selected("theorems")))
        throw precondition_error("structure is not para-Sasakian; selected checks refused");
    } else if (!axioms_ok) {
      if (!selected("paracontact") &&
          (selected("sasakian") || selected("identities") || selected("dim3") ||
           selected("symmetry") || selected("eta-parallel") || selected("theorems")))
        throw precondition_error("structure axioms fail; selected checks refused");
    }

    if (sasakian_ok) {
      if (selected("identities")) result.identity_checks = identity_suite(frame, pc, *geom);
      if (selected("dim3") && frame.dim == 3)
        result.dim3_checks = dim3_formula_suite(frame, pc, *geom);
      if (selected("eta-parallel"))
        result.eta_parallel_checks = eta_parallel_ricci_check(frame, pc, *geom);
    }
  }

  // parameter vectors for the symmetry/theorem blocks
  std::vector<std::pair<std::string, TParams>> param_sets;
  if (options.preset_name) {
    param_sets.emplace_back(*options.preset_name, preset(*options.preset_name, frame.dim));
  } else if (options.explicit_params) {
    TParams p;
    p.a = *options.explicit_params;
    param_sets.emplace_back("custom", std::move(p));
  } else if (manifest.tparams) {
    if (manifest.tparams->preset) {
      param_sets.emplace_back(*manifest.tparams->preset,
                              preset(*manifest.tparams->preset, frame.dim));
    } else {
      TParams p;
      p.a = *manifest.tparams->explicit_params;
      param_sets.emplace_back("custom", std::move(p));
    }
  } else if (frame.dim >= 3) {
    for (const auto& name : preset_names()) param_sets.emplace_back(name, preset(name, frame.dim));
  }

  const bool want_symmetry = selected("symmetry");
  const bool want_theorems = selected("theorems");
  if (want_symmetry || want_theorems) {
    for (auto& [label, params] : param_sets) {
      PresetVerdict verdict;
      verdict.label = label;
      verdict.params = params;
      if (want_theorems && frame.dim >= 3)
        verdict.conditions = theorem_conditions(params, frame.dim);

      if (!manifest.pc) {
        verdict.skipped_reason = "no paracontact structure in manifest";
      } else if (!frame_ok) {
        verdict.skipped_reason = "frame validation failed";
      } else if (!sasakian_ok) {
        verdict.skipped_reason = "structure is not para-Sasakian";
      } else if (want_symmetry) {
        const ParacontactSpec& pc = *manifest.pc;
        if (options.mode != ModeSelection::Global)
          verdict.local = phi_t_symmetry_check(frame, pc, *geom, params, SymmetryMode::Local);
        if (options.mode != ModeSelection::Local)
          verdict.global = phi_t_symmetry_check(frame, pc, *geom, params, SymmetryMode::Global);
      }
      if (want_theorems && verdict.skipped_reason.empty() && manifest.pc && frame.dim == 3)
        verdict.cross = cross_validate_theorems(frame, *manifest.pc, *geom, params);
      result.verdicts.push_back(std::move(verdict));
    }
  }

  if (geom) result.discrepancies = source_table_comparison(manifest, *geom);

  return result;
}

}  // namespace tcurv
