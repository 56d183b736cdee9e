#include "tcurv/report.hpp"

#include <json.hpp>

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace tcurv {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::string witness_text(const Witness& w) {
  std::ostringstream out;
  out << "witness index=(";
  for (std::size_t i = 0; i < w.index.size(); ++i) out << (i ? "," : "") << w.index[i];
  out << ") expected=" << w.expected << " actual=" << w.actual;
  return out.str();
}

void print_report(std::ostringstream& out, const std::string& title, const CheckReport& rep) {
  if (rep.checks.empty()) return;
  out << title << "\n";
  for (const auto& c : rep.checks) {
    out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.id;
    if (c.witness) out << "  " << witness_text(*c.witness);
    out << "\n";
  }
  out << "\n";
}

std::string verdict_text(const SymmetryVerdict& v) {
  if (v.pass()) return "PASS";
  std::ostringstream out;
  out << "FAIL max=" << v.defect_max_entry.str() << " at (w,i,j,k,l)=(";
  for (std::size_t i = 0; i < v.witness->size(); ++i) out << (i ? "," : "") << (*v.witness)[i];
  out << ")";
  return out.str();
}

ordered_json witness_json(const Witness& w) {
  ordered_json j = ordered_json::object();
  j["index"] = w.index;
  j["expected"] = w.expected;
  j["actual"] = w.actual;
  return j;
}

void append_checks(ordered_json& arr, const CheckReport& rep) {
  for (const auto& c : rep.checks) {
    ordered_json j = ordered_json::object();
    j["id"] = c.id;
    j["status"] = c.pass ? "PASS" : "FAIL";
    if (c.witness) j["witness"] = witness_json(*c.witness);
    arr.push_back(std::move(j));
  }
}

ordered_json verdict_json(const SymmetryVerdict& v) {
  ordered_json j = ordered_json::object();
  j["status"] = v.pass() ? "PASS" : "FAIL";
  j["defect_max_entry"] = v.defect_max_entry.str();
  if (v.witness) j["witness"] = std::vector<int>(v.witness->begin(), v.witness->end());
  return j;
}

// nesting gamma[i][j][k]: nabla_{e_i} e_j = sum_k gamma[i][j][k] e_k
ordered_json connection_json(const Connection& conn) {
  const int m = conn.gamma.dim();
  ordered_json out = ordered_json::array();
  for (int i = 0; i < m; ++i) {
    ordered_json ji = ordered_json::array();
    for (int j = 0; j < m; ++j) {
      ordered_json jk = ordered_json::array();
      for (int k = 0; k < m; ++k) jk.push_back(conn.gamma(k, i, j).str());
      ji.push_back(std::move(jk));
    }
    out.push_back(std::move(ji));
  }
  return out;
}

// nesting riemann[i][j][k][l]: R(e_i,e_j)e_k = sum_l riemann[i][j][k][l] e_l
ordered_json riemann_json(const Tensor& rm) {
  const int m = rm.dim();
  ordered_json out = ordered_json::array();
  for (int i = 0; i < m; ++i) {
    ordered_json ji = ordered_json::array();
    for (int j = 0; j < m; ++j) {
      ordered_json jk = ordered_json::array();
      for (int k = 0; k < m; ++k) {
        ordered_json jl = ordered_json::array();
        for (int l = 0; l < m; ++l) jl.push_back(rm(l, i, j, k).str());
        jk.push_back(std::move(jl));
      }
      ji.push_back(std::move(jk));
    }
    out.push_back(std::move(ji));
  }
  return out;
}

ordered_json matrix_json(const Tensor& t) {
  const int m = t.dim();
  ordered_json out = ordered_json::array();
  for (int i = 0; i < m; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m; ++j) row.push_back(t(i, j).str());
    out.push_back(std::move(row));
  }
  return out;
}

std::string basis_combination(const std::vector<Rational>& comps) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t l = 0; l < comps.size(); ++l) {
    if (comps[l].is_zero()) continue;
    if (!first) out << " + ";
    if (comps[l] == Rational(-1))
      out << "-";
    else if (comps[l] != Rational(1))
      out << comps[l].str() << " ";
    out << "e" << (l + 1);
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace

std::string render_text(const VerificationResult& result, bool with_timestamp) {
  std::ostringstream out;
  out << "manifest: " << result.manifest_label << "\n";
  out << "dim: " << result.dim << "\n";
  out << "epsilon: " << (result.epsilon ? result.epsilon->str() : "none") << "\n";
  if (with_timestamp) out << "generated-at: " << utc_now() << "\n";
  out << "\n";

  print_report(out, "frame checks", result.frame_checks);

  if (result.geometry) {
    const GeometryCache& geom = *result.geometry;
    out << "geometry\n";
    out << "  scalar curvature r = " << geom.scalar.str() << "\n";
    const auto cc = constant_curvature_test(geom.riemann_low, geom.frame.g);
    out << "  constant curvature: " << (cc ? ("c = " + cc->str()) : "no") << "\n";
    const auto lambda = einstein_test(geom.ricci, geom.frame.g);
    out << "  einstein: " << (lambda ? ("lambda = " + lambda->str()) : "no") << "\n";
    out << "\n";
  }

  print_report(out, "structure checks", result.structure_checks);
  print_report(out, "paracontact axioms", result.paracontact_checks);
  print_report(out, "para-sasakian checks", result.sasakian_checks);
  print_report(out, "identity suite", result.identity_checks);
  print_report(out, "dim-3 formula suite", result.dim3_checks);
  print_report(out, "eta-parallel ricci", result.eta_parallel_checks);

  if (!result.verdicts.empty()) {
    out << "phi-T-symmetry verdicts\n";
    for (const auto& v : result.verdicts) {
      out << "  " << std::left << std::setw(18) << v.label << std::right;
      if (!v.skipped_reason.empty()) {
        out << " SKIPPED (" << v.skipped_reason << ")";
      } else {
        if (v.local) out << " local: " << verdict_text(*v.local);
        if (v.global) out << "  global: " << verdict_text(*v.global);
      }
      if (v.conditions) {
        out << "  [" << to_string(v.conditions->verdict);
        if (!v.conditions->thm41_applicable) out << ", thm41 not applicable";
        out << "]";
      }
      out << "\n";
      for (const auto& c : v.cross.checks) {
        out << "    " << (c.pass ? "PASS" : "FAIL") << "  " << c.id;
        if (c.witness) out << "  " << witness_text(*c.witness);
        out << "\n";
      }
    }
    out << "\n";
  }

  if (!result.discrepancies.empty()) {
    out << "source-table comparison (bundled example)\n";
    for (const auto& d : result.discrepancies) {
      out << "  " << (d.agree ? "AGREE " : "DIFFER") << "  " << d.id << ": table prints "
          << d.paper << "; engine derives " << d.engine << "\n";
    }
    out << "\n";
  }

  out << "result: " << (result.all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_json(const VerificationResult& result, bool with_timestamp) {
  ordered_json j = ordered_json::object();
  j["manifest"] = result.manifest_label;
  j["dim"] = result.dim;
  j["epsilon"] = result.epsilon ? ordered_json(result.epsilon->str()) : ordered_json(nullptr);
  if (with_timestamp) j["generated_at"] = utc_now();

  if (result.geometry) {
    const GeometryCache& geom = *result.geometry;
    ordered_json g = ordered_json::object();
    g["connection"] = connection_json(geom.conn);
    g["riemann"] = riemann_json(geom.riemann);
    g["ricci"] = matrix_json(geom.ricci);
    g["scalar"] = geom.scalar.str();
    j["geometry"] = std::move(g);
  } else {
    j["geometry"] = nullptr;
  }

  ordered_json checks = ordered_json::array();
  for (const CheckReport* rep :
       {&result.frame_checks, &result.structure_checks, &result.paracontact_checks,
        &result.sasakian_checks, &result.identity_checks, &result.dim3_checks,
        &result.eta_parallel_checks})
    append_checks(checks, *rep);
  j["checks"] = std::move(checks);

  ordered_json verdicts = ordered_json::array();
  for (const auto& v : result.verdicts) {
    ordered_json jv = ordered_json::object();
    jv["preset"] = v.label;
    ordered_json params = ordered_json::object();
    for (std::size_t q = 0; q < 8; ++q) params["a" + std::to_string(q)] = v.params.a[q].str();
    jv["params"] = std::move(params);
    if (v.conditions) {
      ordered_json c = ordered_json::object();
      c["c1"] = v.conditions->c1.str();
      c["c2"] = v.conditions->c2.str();
      c["c3"] = v.conditions->c3.str();
      c["c4"] = v.conditions->c4.str();
      c["c5"] = v.conditions->c5.str();
      c["verdict"] = to_string(v.conditions->verdict);
      c["thm41_applicable"] = v.conditions->thm41_applicable;
      jv["theorem_conditions"] = std::move(c);
    }
    if (!v.skipped_reason.empty()) {
      jv["local"] = ordered_json{{"status", "SKIPPED"}, {"reason", v.skipped_reason}};
      jv["global"] = ordered_json{{"status", "SKIPPED"}, {"reason", v.skipped_reason}};
    } else {
      if (v.local) jv["local"] = verdict_json(*v.local);
      if (v.global) jv["global"] = verdict_json(*v.global);
    }
    if (!v.cross.checks.empty()) {
      ordered_json cc = ordered_json::array();
      append_checks(cc, v.cross);
      jv["cross_checks"] = std::move(cc);
    }
    verdicts.push_back(std::move(jv));
  }
  j["verdicts"] = std::move(verdicts);

  ordered_json disc = ordered_json::array();
  for (const auto& d : result.discrepancies) {
    ordered_json jd = ordered_json::object();
    jd["id"] = d.id;
    jd["paper"] = d.paper;
    jd["engine"] = d.engine;
    jd["agree"] = d.agree;
    disc.push_back(std::move(jd));
  }
  j["paper_discrepancies"] = std::move(disc);

  return j.dump(2) + "\n";
}

std::string render_geometry_text(const GeometryCache& geom) {
  std::ostringstream out;
  const int m = geom.frame.dim;

  out << "connection (nonzero nabla_{e_i} e_j)\n";
  bool any = false;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<Rational> comps;
      bool nonzero = false;
      for (int k = 0; k < m; ++k) {
        comps.push_back(geom.conn.gamma(k, i, j));
        nonzero = nonzero || !comps.back().is_zero();
      }
      if (nonzero) {
        out << "  nabla_e" << (i + 1) << " e" << (j + 1) << " = " << basis_combination(comps)
            << "\n";
        any = true;
      }
    }
  if (!any) out << "  all zero\n";

  out << "riemann (nonzero R(e_i,e_j)e_k, i < j)\n";
  any = false;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        std::vector<Rational> comps;
        bool nonzero = false;
        for (int l = 0; l < m; ++l) {
          comps.push_back(geom.riemann(l, i, j, k));
          nonzero = nonzero || !comps.back().is_zero();
        }
        if (nonzero) {
          out << "  R(e" << (i + 1) << ",e" << (j + 1) << ")e" << (k + 1) << " = "
              << basis_combination(comps) << "\n";
          any = true;
        }
      }
  if (!any) out << "  all zero\n";

  out << "ricci S(e_i,e_j)\n";
  for (int i = 0; i < m; ++i) {
    out << " ";
    for (int j = 0; j < m; ++j) out << " " << geom.ricci(i, j).str();
    out << "\n";
  }

  out << "ricci operator Q (column j = Q e_j)\n";
  for (int l = 0; l < m; ++l) {
    out << " ";
    for (int j = 0; j < m; ++j) out << " " << geom.ricci_op(l, j).str();
    out << "\n";
  }

  out << "scalar curvature r = " << geom.scalar.str() << "\n";
  return out.str();
}

std::string render_presets_text(int m) {
  std::ostringstream out;
  out << "presets at dim " << m << " (a0..a7)\n";
  for (const auto& name : preset_names()) {
    TParams p = preset(name, m);
    out << "  " << std::left << std::setw(18) << name << std::right;
    for (std::size_t q = 0; q < 8; ++q) out << " " << p.a[q].str();
    if (preset_has_free_params(name)) {
      auto d = preset_default_free(name, m);
      out << "   (family; defaults a0=" << d[0].str() << ", a1=" << d[1].str() << ")";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace tcurv
