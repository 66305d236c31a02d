#include "sscurv/report.hpp"

#include <cctype>
#include <sstream>

#include "sscurv/error.hpp"

namespace sscurv {

namespace {

std::string basis(const std::string& label, int i) { return label + std::to_string(i + 1); }

Json optional_rat(const std::optional<Rat>& r) { return r ? rat_to_json(*r) : Json(nullptr); }

std::optional<Rat> optional_rat_from(const Json& j, const std::string& field) {
  if (j.is_null()) return std::nullopt;
  return rat_from_json(j, field);
}

Report base_report(std::string command, const GeometrySpec& spec, const std::vector<std::string>& notes,
                   const std::string& digest_extra = {}) {
  Report r;
  r.command = std::move(command);
  r.spec = spec;
  r.validation = validate(spec);
  r.validation.notes.insert(r.validation.notes.begin(), notes.begin(), notes.end());
  r.input_digest = sha256_hex(geometry_to_json(spec).dump() + digest_extra);
  return r;
}

void render_connection(std::ostringstream& os, const Tensor& gamma, const std::string& label, const char* nabla) {
  const int n = gamma.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Tensor v(1, 0, n);
      for (int k = 0; k < n; ++k) v(k) = gamma(k, i, j);
      os << "  " << nabla << "_" << basis(label, i) << " " << basis(label, j) << " = " << format_vector(v, label) << "\n";
    }
  }
}

void render_riemann(std::ostringstream& os, const Tensor& R, const std::string& label, const char* name) {
  const int n = R.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Tensor v(1, 0, n);
        for (int l = 0; l < n; ++l) v(l) = R(l, k, i, j);
        os << "  " << name << "(" << basis(label, i) << "," << basis(label, j) << ")" << basis(label, k) << " = "
           << format_vector(v, label) << "\n";
      }
    }
  }
}

void render_matrix(std::ostringstream& os, const Tensor& m, const char* name) {
  os << "  " << name << " =";
  for (int i = 0; i < m.dim(); ++i) {
    os << (i ? "; " : " [");
    for (int j = 0; j < m.dim(); ++j) os << (j ? " " : "") << m(i, j);
  }
  os << "]\n";
}

void render_probe(std::ostringstream& os, const ProbeResult& p) {
  std::string status(to_string(p.status));
  for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  os << "  " << p.id << std::string(p.id.size() < 8 ? 8 - p.id.size() : 1, ' ') << status;
  if (p.status == ProbeStatus::Fail || p.status == ProbeStatus::PaperMismatch) {
    os << "  max |lhs - rhs| = " << p.max_abs_deviation;
    if (p.lhs.rank() == 0) os << "  (lhs " << p.lhs.value() << ", rhs " << p.rhs.value() << ")";
  }
  if (!p.note.empty()) os << "  [" << p.note << "]";
  os << "\n";
}

}  // namespace

std::string format_vector(const Tensor& v, const std::string& label) {
  std::string out;
  for (int i = 0; i < v.dim(); ++i) {
    const Rat& c = v(i);
    if (c.is_zero()) continue;
    const Rat mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (mag != Rat(1)) out += mag.str() + " ";
    out += basis(label, i);
  }
  return out.empty() ? "0" : out;
}

Tables Tables::of(const GeometryAnalysis& a) {
  Tables t;
  t.gamma = a.lc.gamma;
  t.gamma_hat = a.hat.gamma;
  t.riemann = a.curv.riemann;
  t.riemann_hat = a.hat_curv.riemann;
  t.ricci = a.curv.ricci;
  t.ricci_hat = a.hat_curv.ricci;
  t.scalar = a.curv.scalar;
  t.scalar_hat = a.hat_curv.scalar;
  t.ricci_op = a.curv.ricci_op;
  t.ricci_op_hat = a.hat_curv.ricci_op;
  t.torsion_hat = torsion(a.hat, a.spec.frame);
  t.non_metricity_hat = non_metricity(a.hat, a.spec.metric);
  t.alpha_star = a.alpha;
  t.xi_parallel = a.parallel;
  t.xi_unit = a.unit;
  t.constant_sectional = sscurv::constant_sectional(a.curv, a.spec.metric);
  t.constant_sectional_hat = sscurv::constant_sectional(a.hat_curv, a.spec.metric);
  if (a.spec.dim() == 3) t.projective_equal = projective(a.hat_curv) == projective(a.curv);
  return t;
}

Report validate_report(const GeometrySpec& spec, const std::vector<std::string>& notes) {
  return base_report("validate", spec, notes);
}

Report compute_report(const GeometrySpec& spec, const std::vector<std::string>& notes) {
  Report r = base_report("compute", spec, notes);
  if (r.validation.ok()) r.tables = Tables::of(GeometryAnalysis::of(spec));
  return r;
}

Report probe_report(const GeometrySpec& spec, Suite suite, const std::vector<std::string>& ids,
                    const std::vector<std::string>& notes) {
  std::string extra = std::string(to_string(suite));
  for (const auto& id : ids) extra += "," + id;
  Report r = base_report("probe", spec, notes, extra);
  r.suite = suite;
  if (!r.validation.ok()) return r;
  for (const auto& id : ids) {
    if (!is_known_probe(id)) throw InputError("unknown probe id '" + id + "'");
  }
  r.probes = run_probes(GeometryAnalysis::of(spec), ids.empty() ? suite_probe_ids(suite) : ids);
  return r;
}

Report run_suite(const GeometrySpec& spec, Suite suite) { return probe_report(spec, suite); }

Report soliton_report(const GeometrySpec& spec, const SolitonProblem& problem, const std::vector<std::string>& notes) {
  SolitonVerdict shell;
  shell.problem = problem;
  Report r = base_report("soliton", spec, notes, soliton_to_json(shell).at("problem").dump());
  if (!r.validation.ok()) return r;
  const auto analysis = GeometryAnalysis::of(spec);
  r.tables = Tables::of(analysis);
  r.solitons.push_back(analyze_soliton(analysis, problem));
  return r;
}

Json report_to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  j["geometry"] = geometry_to_json(r.spec);
  j["validation"] = validation_to_json(r.validation);
  if (r.tables) {
    const Tables& t = *r.tables;
    j["tables"] = {{"gamma", tensor_to_json(t.gamma)},
                   {"gamma_hat", tensor_to_json(t.gamma_hat)},
                   {"riemann", tensor_to_json(t.riemann)},
                   {"riemann_hat", tensor_to_json(t.riemann_hat)},
                   {"ricci", tensor_to_json(t.ricci)},
                   {"ricci_hat", tensor_to_json(t.ricci_hat)},
                   {"scalar", rat_to_json(t.scalar)},
                   {"scalar_hat", rat_to_json(t.scalar_hat)},
                   {"ricci_op", tensor_to_json(t.ricci_op)},
                   {"ricci_op_hat", tensor_to_json(t.ricci_op_hat)},
                   {"torsion_hat", tensor_to_json(t.torsion_hat)},
                   {"non_metricity_hat", tensor_to_json(t.non_metricity_hat)},
                   {"alpha_star", tensor_to_json(t.alpha_star)},
                   {"xi_parallel", t.xi_parallel},
                   {"xi_unit", t.xi_unit},
                   {"constant_sectional", optional_rat(t.constant_sectional)},
                   {"constant_sectional_hat", optional_rat(t.constant_sectional_hat)},
                   {"projective_equal", t.projective_equal ? Json(*t.projective_equal) : Json(nullptr)}};
  } else {
    j["tables"] = nullptr;
  }
  j["suite"] = r.suite ? Json(std::string(to_string(*r.suite))) : Json(nullptr);
  Json probes = Json::array();
  for (const auto& p : r.probes) probes.push_back(probe_to_json(p));
  j["probes"] = std::move(probes);
  Json sol = Json::array();
  for (const auto& s : r.solitons) sol.push_back(soliton_to_json(s));
  j["solitons"] = std::move(sol);
  j["version"] = r.version;
  j["input_digest"] = r.input_digest;
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  auto parsed = parse_geometry(j.at("geometry").dump(), "report.geometry");
  r.spec = std::move(parsed.spec);
  r.validation = validation_from_json(j.at("validation"));
  if (!j.at("tables").is_null()) {
    const Json& t = j.at("tables");
    Tables tb;
    tb.gamma = tensor_from_json(t.at("gamma"), "gamma");
    tb.gamma_hat = tensor_from_json(t.at("gamma_hat"), "gamma_hat");
    tb.riemann = tensor_from_json(t.at("riemann"), "riemann");
    tb.riemann_hat = tensor_from_json(t.at("riemann_hat"), "riemann_hat");
    tb.ricci = tensor_from_json(t.at("ricci"), "ricci");
    tb.ricci_hat = tensor_from_json(t.at("ricci_hat"), "ricci_hat");
    tb.scalar = rat_from_json(t.at("scalar"), "scalar");
    tb.scalar_hat = rat_from_json(t.at("scalar_hat"), "scalar_hat");
    tb.ricci_op = tensor_from_json(t.at("ricci_op"), "ricci_op");
    tb.ricci_op_hat = tensor_from_json(t.at("ricci_op_hat"), "ricci_op_hat");
    tb.torsion_hat = tensor_from_json(t.at("torsion_hat"), "torsion_hat");
    tb.non_metricity_hat = tensor_from_json(t.at("non_metricity_hat"), "non_metricity_hat");
    tb.alpha_star = tensor_from_json(t.at("alpha_star"), "alpha_star");
    tb.xi_parallel = t.at("xi_parallel").get<bool>();
    tb.xi_unit = t.at("xi_unit").get<bool>();
    tb.constant_sectional = optional_rat_from(t.at("constant_sectional"), "constant_sectional");
    tb.constant_sectional_hat = optional_rat_from(t.at("constant_sectional_hat"), "constant_sectional_hat");
    if (!t.at("projective_equal").is_null()) tb.projective_equal = t.at("projective_equal").get<bool>();
    r.tables = std::move(tb);
  }
  if (!j.at("suite").is_null()) r.suite = parse_suite(j.at("suite").get<std::string>());
  for (const auto& p : j.at("probes")) r.probes.push_back(probe_from_json(p));
  for (const auto& s : j.at("solitons")) r.solitons.push_back(soliton_from_json(s));
  r.version = j.at("version").get<std::string>();
  r.input_digest = j.at("input_digest").get<std::string>();
  return r;
}

std::string render_json(const Report& report) { return report_to_json(report).dump(2) + "\n"; }

std::string render_text(const Report& r) {
  std::ostringstream os;
  const std::string& L = r.spec.label;
  os << "geometry: " << r.spec.name << " (dim " << r.spec.dim() << ", basis " << basis(L, 0) << ".."
     << basis(L, r.spec.dim() - 1) << ", xi = " << format_vector(r.spec.distinguished.xi, L) << ")\n";
  os << "validation: " << (r.validation.ok() ? "ok" : "FAILED") << "\n";
  for (const auto& c : r.validation.checks) {
    os << "  [" << (c.passed ? "pass" : (c.required ? "FAIL" : "warn")) << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  for (const auto& n : r.validation.notes) os << "  note: " << n << "\n";

  if (r.tables) {
    const Tables& t = *r.tables;
    os << "\nLevi-Civita connection\n";
    render_connection(os, t.gamma, L, "nabla");
    os << "\nsemi-symmetric non-metric connection\n";
    render_connection(os, t.gamma_hat, L, "nabla_hat");
    os << "\nLevi-Civita curvature\n";
    render_riemann(os, t.riemann, L, "R");
    render_matrix(os, t.ricci, "S");
    os << "  r = " << t.scalar << "\n";
    os << "\nsemi-symmetric non-metric curvature\n";
    render_riemann(os, t.riemann_hat, L, "R_hat");
    render_matrix(os, t.ricci_hat, "S_hat");
    os << "  r_hat = " << t.scalar_hat << "\n";
    render_matrix(os, t.ricci_op_hat, "Q_hat");
    os << "\ntorsion of nabla_hat\n";
    const int n = r.spec.dim();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        Tensor v(1, 0, n);
        for (int k = 0; k < n; ++k) v(k) = t.torsion_hat(k, i, j);
        os << "  T_hat(" << basis(L, i) << "," << basis(L, j) << ") = " << format_vector(v, L) << "\n";
      }
    }
    os << "\nnon-metricity of nabla_hat (nonzero components)\n";
    bool any = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
          const Rat& q = t.non_metricity_hat(i, j, k);
          if (q.is_zero()) continue;
          any = true;
          os << "  (nabla_hat_" << basis(L, i) << " g)(" << basis(L, j) << "," << basis(L, k) << ") = " << q << "\n";
        }
      }
    }
    if (!any) os << "  none\n";
    os << "\n";
    render_matrix(os, t.alpha_star, "alpha*");
    os << "  xi parallel: " << (t.xi_parallel ? "yes" : "no") << ", unit: " << (t.xi_unit ? "yes" : "no") << "\n";
    os << "  constant sectional curvature (Levi-Civita): "
       << (t.constant_sectional ? t.constant_sectional->str() : std::string("no")) << "\n";
    os << "  constant sectional curvature (nabla_hat): "
       << (t.constant_sectional_hat ? t.constant_sectional_hat->str() : std::string("no")) << "\n";
    if (t.projective_equal) os << "  projective P_hat = P: " << (*t.projective_equal ? "yes" : "no") << "\n";
  }

  if (r.suite || !r.probes.empty()) {
    os << "\nprobes" << (r.suite ? " (suite " + std::string(to_string(*r.suite)) + ")" : std::string()) << "\n";
    for (const auto& p : r.probes) render_probe(os, p);
  }

  for (const auto& s : r.solitons) {
    const auto& p = s.problem;
    os << "\nsoliton: " << to_string(p.kind) << ", lambda = " << p.lambda;
    if (p.kind == SolitonKind::MQuasi) os << ", m = " << p.m;
    os << "\n";
    render_matrix(os, s.hessian, "hessian_hat");
    render_matrix(os, s.residual, "residual");
    os << "  is_soliton: " << (s.is_soliton ? "yes" : "no") << "\n";
    os << "  classification: " << to_string(s.classification) << "\n";
    for (const auto& step : s.proof_steps) render_probe(os, step);
    const auto& c = s.conclusion;
    os << "  theorem: " << c.theorem << "\n";
    for (const auto& nc : c.checks) os << "    [" << (nc.holds ? "x" : " ") << "] " << nc.name << "\n";
    if (c.side_condition) os << "    side condition 2m + r_hat - 2 lambda + 2 = " << *c.side_condition << "\n";
    os << "  outcome: " << to_string(c.outcome) << ": " << c.message << "\n";
  }

  os << "\n" << r.version << "  input " << r.input_digest << "\n";
  return os.str();
}

int exit_code(const Report& report, bool strict) {
  if (!report.validation.ok()) return 2;
  auto bad = [&](const ProbeResult& p) {
    return p.status == ProbeStatus::Fail || (strict && p.status == ProbeStatus::PaperMismatch);
  };
  for (const auto& p : report.probes) {
    if (bad(p)) return 1;
  }
  for (const auto& s : report.solitons) {
    for (const auto& p : s.proof_steps) {
      if (bad(p)) return 1;
    }
  }
  return 0;
}

}  // namespace sscurv
