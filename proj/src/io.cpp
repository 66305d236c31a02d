#include "sscurv/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "sscurv/error.hpp"

namespace sscurv {

namespace {

[[noreturn]] void field_error(const std::string& source, const std::string& field, const std::string& what) {
  throw InputError(source + ": field '" + field + "': " + what);
}

Json parse_text(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into a line/column position.
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw InputError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON (" +
                     what + ")");
  }
}

const Json& require(const Json& obj, const std::string& key, const std::string& source) {
  if (!obj.is_object() || !obj.contains(key)) field_error(source, key, "missing");
  return obj.at(key);
}

Rat parse_rat(const Json& j, const std::string& field, const std::string& source) {
  try {
    return rat_from_json(j, field);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

int parse_index(const Json& j, const std::string& field, int dim, const std::string& source) {
  if (!j.is_number_integer()) field_error(source, field, "expected an integer index");
  const auto v = j.get<long long>();
  if (v < 1 || v > dim) field_error(source, field, "index " + std::to_string(v) + " outside 1.." + std::to_string(dim));
  return static_cast<int>(v - 1);
}

Tensor parse_vector(const Json& j, int upper, const std::string& field, int dim, const std::string& source) {
  if (!j.is_array()) field_error(source, field, "expected an array of " + std::to_string(dim) + " rationals");
  if (static_cast<int>(j.size()) != dim) {
    field_error(source, field, "expected " + std::to_string(dim) + " entries, got " + std::to_string(j.size()));
  }
  Tensor t(upper, 1 - upper, dim);
  for (int i = 0; i < dim; ++i) t(i) = parse_rat(j[i], field + "[" + std::to_string(i) + "]", source);
  return t;
}

Tensor parse_matrix(const Json& j, const std::string& field, int dim, const std::string& source) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    field_error(source, field, "expected a " + std::to_string(dim) + " x " + std::to_string(dim) + " array");
  }
  Tensor t(0, 2, dim);
  for (int i = 0; i < dim; ++i) {
    const std::string row = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != dim) {
      field_error(source, row, "expected " + std::to_string(dim) + " entries");
    }
    for (int k = 0; k < dim; ++k) t(i, k) = parse_rat(j[i][k], row + "[" + std::to_string(k) + "]", source);
  }
  return t;
}

ScalarJet parse_jet_object(const Json& j, int dim, const std::string& field, const std::string& source) {
  if (!j.is_object()) field_error(source, field, "expected an object with 'd' and 'dd'");
  ScalarJet jet;
  jet.d = parse_vector(require(j, "d", source), 0, field + ".d", dim, source);
  jet.dd = parse_matrix(require(j, "dd", source), field + ".dd", dim, source);
  return jet;
}

Json matrix_to_json(const Tensor& t) {
  Json rows = Json::array();
  for (int i = 0; i < t.dim(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < t.dim(); ++k) row.push_back(rat_to_json(t(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const Tensor& t) {
  Json v = Json::array();
  for (int i = 0; i < t.dim(); ++i) v.push_back(rat_to_json(t(i)));
  return v;
}

ProbeStatus status_from_string(const std::string& s) {
  for (auto st : {ProbeStatus::Pass, ProbeStatus::Fail, ProbeStatus::Skipped, ProbeStatus::PaperMismatch}) {
    if (to_string(st) == s) return st;
  }
  throw InputError("unknown probe status '" + s + "'");
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ParsedGeometry parse_geometry(std::string_view text, std::string_view source_view) {
  const std::string source(source_view);
  const Json doc = parse_text(text, source_view);
  if (!doc.is_object()) throw InputError(source + ": top-level value must be an object");

  ParsedGeometry out;
  GeometrySpec& spec = out.spec;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) field_error(source, "name", "expected a string");
    spec.name = doc["name"].get<std::string>();
  } else {
    spec.name = "unnamed";
  }
  if (doc.contains("label")) {
    if (!doc["label"].is_string() || doc["label"].get<std::string>().empty()) {
      field_error(source, "label", "expected a non-empty string");
    }
    spec.label = doc["label"].get<std::string>();
  }

  const Json& metric = require(doc, "metric", source);
  if (!metric.is_array() || metric.empty()) field_error(source, "metric", "expected a non-empty square array");
  const int dim = static_cast<int>(metric.size());
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() != dim) {
      field_error(source, "dim", "does not match the metric size " + std::to_string(dim));
    }
  }
  if (dim > 4) field_error(source, "metric", "dimension " + std::to_string(dim) + " exceeds the supported maximum 4");

  std::vector<BracketEntry> entries;
  if (doc.contains("structure_constants")) {
    const Json& sc = doc["structure_constants"];
    if (!sc.is_array()) field_error(source, "structure_constants", "expected an array of {i, j, k, value}");
    for (std::size_t n = 0; n < sc.size(); ++n) {
      const std::string f = "structure_constants[" + std::to_string(n) + "]";
      const Json& e = sc[n];
      if (!e.is_object()) field_error(source, f, "expected an object {i, j, k, value}");
      for (const char* key : {"i", "j", "k", "value"}) {
        if (!e.contains(key)) field_error(source, f + "." + key, "missing");
      }
      entries.push_back({parse_index(e["i"], f + ".i", dim, source), parse_index(e["j"], f + ".j", dim, source),
                         parse_index(e["k"], f + ".k", dim, source), parse_rat(e["value"], f + ".value", source)});
    }
  }
  try {
    spec.frame = FrameAlgebra::from_brackets(dim, entries, &out.notes);
  } catch (const InputError& e) {
    throw InputError(source + ": field 'structure_constants': " + e.what());
  }

  Tensor g = parse_matrix(metric, "metric", dim, source);
  try {
    spec.metric = MetricFrame::from(std::move(g));
  } catch (const DegenerateMetricError&) {
    field_error(source, "metric", "metric is singular");
  }
  spec.distinguished =
      DistinguishedField::from(parse_vector(require(doc, "xi", source), 1, "xi", dim, source), spec.metric);

  if (doc.contains("jet")) out.jet = parse_jet_object(doc["jet"], dim, "jet", source);
  return out;
}

ParsedGeometry parse_geometry_file(const std::filesystem::path& path) {
  return parse_geometry(read_file(path), path.string());
}

ScalarJet parse_jet(std::string_view text, int dim, std::string_view source_view) {
  const std::string source(source_view);
  const Json doc = parse_text(text, source_view);
  if (doc.is_object() && doc.contains("jet")) return parse_jet_object(doc["jet"], dim, "jet", source);
  return parse_jet_object(doc, dim, "jet", source);
}

ScalarJet parse_jet_file(const std::filesystem::path& path, int dim) {
  return parse_jet(read_file(path), dim, path.string());
}

Json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    try {
      return Rat::parse(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError("field '" + field + "': " + e.what());
    }
  }
  if (j.is_number_float()) {
    throw InputError("field '" + field + "': floating-point literal not allowed; write the value as a string \"p/q\"");
  }
  throw InputError("field '" + field + "': expected a rational string \"p/q\"");
}

Json geometry_to_json(const GeometrySpec& spec) {
  Json j;
  j["name"] = spec.name;
  j["label"] = spec.label;
  j["dim"] = spec.dim();
  Json sc = Json::array();
  for (int i = 0; i < spec.dim(); ++i) {
    for (int jj = i + 1; jj < spec.dim(); ++jj) {
      for (int k = 0; k < spec.dim(); ++k) {
        const Rat& v = spec.frame.c(k, i, jj);
        if (v.is_zero()) continue;
        sc.push_back({{"i", i + 1}, {"j", jj + 1}, {"k", k + 1}, {"value", rat_to_json(v)}});
      }
    }
  }
  j["structure_constants"] = std::move(sc);
  j["metric"] = matrix_to_json(spec.metric.g);
  j["xi"] = vector_to_json(spec.distinguished.xi);
  return j;
}

Json jet_to_json(const ScalarJet& jet) { return {{"d", vector_to_json(jet.d)}, {"dd", matrix_to_json(jet.dd)}}; }

Json tensor_to_json(const Tensor& t) {
  Json comps = Json::array();
  for (const auto& c : t.components()) comps.push_back(rat_to_json(c));
  return {{"valence", {t.upper(), t.lower()}}, {"dim", t.dim()}, {"components", std::move(comps)}};
}

Tensor tensor_from_json(const Json& j, const std::string& field) {
  if (!j.is_object() || !j.contains("valence") || !j.contains("dim") || !j.contains("components")) {
    throw InputError("field '" + field + "': expected a tensor object");
  }
  const int p = j["valence"].at(0).get<int>();
  const int q = j["valence"].at(1).get<int>();
  const int dim = j["dim"].get<int>();
  std::vector<Rat> comps;
  for (std::size_t n = 0; n < j["components"].size(); ++n) {
    comps.push_back(rat_from_json(j["components"][n], field + ".components[" + std::to_string(n) + "]"));
  }
  return Tensor::from_components(p, q, dim, std::move(comps));
}

Json probe_to_json(const ProbeResult& p) {
  Json j = {{"id", p.id},
            {"status", std::string(to_string(p.status))},
            {"note", p.note},
            {"lhs", tensor_to_json(p.lhs)},
            {"rhs", tensor_to_json(p.rhs)},
            {"max_abs_deviation", rat_to_json(p.max_abs_deviation)}};
  Json parts = Json::array();
  for (const auto& part : p.parts) {
    parts.push_back({{"label", part.label}, {"lhs", tensor_to_json(part.lhs)}, {"rhs", tensor_to_json(part.rhs)}});
  }
  j["parts"] = std::move(parts);
  return j;
}

ProbeResult probe_from_json(const Json& j) {
  ProbeResult p;
  p.id = j.at("id").get<std::string>();
  p.status = status_from_string(j.at("status").get<std::string>());
  p.note = j.at("note").get<std::string>();
  p.lhs = tensor_from_json(j.at("lhs"), p.id + ".lhs");
  p.rhs = tensor_from_json(j.at("rhs"), p.id + ".rhs");
  p.max_abs_deviation = rat_from_json(j.at("max_abs_deviation"), p.id + ".max_abs_deviation");
  for (const auto& part : j.at("parts")) {
    p.parts.push_back({part.at("label").get<std::string>(), tensor_from_json(part.at("lhs"), p.id + ".parts.lhs"),
                       tensor_from_json(part.at("rhs"), p.id + ".parts.rhs")});
  }
  return p;
}

Json validation_to_json(const ValidationReport& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"required", c.required}, {"detail", c.detail}});
  }
  return {{"ok", v.ok()}, {"checks", std::move(checks)}, {"notes", v.notes}};
}

ValidationReport validation_from_json(const Json& j) {
  ValidationReport v;
  for (const auto& c : j.at("checks")) {
    ValidationCheck check;
    check.name = c.at("name").get<std::string>();
    check.passed = c.at("passed").get<bool>();
    check.required = c.at("required").get<bool>();
    check.detail = c.at("detail").get<std::string>();
    v.checks.push_back(std::move(check));
  }
  v.notes = j.at("notes").get<std::vector<std::string>>();
  return v;
}

Json soliton_to_json(const SolitonVerdict& v) {
  const auto& p = v.problem;
  Json problem = {{"kind", std::string(to_string(p.kind))},
                  {"lambda", rat_to_json(p.lambda)},
                  {"m", p.m},
                  {"jet", jet_to_json(p.jet)}};
  Json steps = Json::array();
  for (const auto& s : v.proof_steps) steps.push_back(probe_to_json(s));
  const auto& c = v.conclusion;
  Json checks = Json::array();
  for (const auto& nc : c.checks) checks.push_back({{"name", nc.name}, {"holds", nc.holds}});
  Json conclusion = {{"theorem", c.theorem},
                     {"hypotheses_hold", c.hypotheses_hold},
                     {"hypotheses_note", c.hypotheses_note},
                     {"conjunctive", c.conjunctive},
                     {"checks", std::move(checks)},
                     {"side_condition", c.side_condition ? rat_to_json(*c.side_condition) : Json(nullptr)},
                     {"outcome", std::string(to_string(c.outcome))},
                     {"message", c.message}};
  return {{"problem", std::move(problem)},
          {"hessian", tensor_to_json(v.hessian)},
          {"residual", tensor_to_json(v.residual)},
          {"is_soliton", v.is_soliton},
          {"classification", std::string(to_string(v.classification))},
          {"proof_steps", std::move(steps)},
          {"conclusion", std::move(conclusion)}};
}

SolitonVerdict soliton_from_json(const Json& j) {
  SolitonVerdict v;
  const Json& p = j.at("problem");
  const auto kind = parse_soliton_kind(p.at("kind").get<std::string>());
  if (!kind) throw InputError("unknown soliton kind in report");
  v.problem.kind = *kind;
  v.problem.lambda = rat_from_json(p.at("lambda"), "problem.lambda");
  v.problem.m = p.at("m").get<long>();
  v.hessian = tensor_from_json(j.at("hessian"), "hessian");
  const int dim = v.hessian.dim();
  v.problem.jet = parse_jet_object(p.at("jet"), dim, "problem.jet", "report");
  v.residual = tensor_from_json(j.at("residual"), "residual");
  v.is_soliton = j.at("is_soliton").get<bool>();
  const auto cls = j.at("classification").get<std::string>();
  for (auto c : {Classification::Shrinking, Classification::Steady, Classification::Expanding}) {
    if (to_string(c) == cls) v.classification = c;
  }
  for (const auto& s : j.at("proof_steps")) v.proof_steps.push_back(probe_from_json(s));
  const Json& c = j.at("conclusion");
  auto& rep = v.conclusion;
  rep.theorem = c.at("theorem").get<std::string>();
  rep.hypotheses_hold = c.at("hypotheses_hold").get<bool>();
  rep.hypotheses_note = c.at("hypotheses_note").get<std::string>();
  rep.conjunctive = c.at("conjunctive").get<bool>();
  for (const auto& nc : c.at("checks")) rep.checks.push_back({nc.at("name").get<std::string>(), nc.at("holds").get<bool>()});
  if (!c.at("side_condition").is_null()) rep.side_condition = rat_from_json(c.at("side_condition"), "side_condition");
  const auto outcome = c.at("outcome").get<std::string>();
  for (auto o : {ConclusionOutcome::Holds, ConclusionOutcome::OutsideHypotheses, ConclusionOutcome::NotIntegrable,
                 ConclusionOutcome::NotCertified, ConclusionOutcome::NotEvaluated}) {
    if (to_string(o) == outcome) rep.outcome = o;
  }
  rep.message = c.at("message").get<std::string>();
  return v;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

}  // namespace sscurv
