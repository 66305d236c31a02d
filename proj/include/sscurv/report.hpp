#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sscurv/io.hpp"
#include "sscurv/probe.hpp"
#include "sscurv/soliton.hpp"

namespace sscurv {

inline constexpr const char* kVersion = "sscurv 1.0.0";

/// Computed tables for one geometry.
struct Tables {
  Tensor gamma;
  Tensor gamma_hat;
  Tensor riemann;
  Tensor riemann_hat;
  Tensor ricci;
  Tensor ricci_hat;
  Rat scalar;
  Rat scalar_hat;
  Tensor ricci_op;
  Tensor ricci_op_hat;
  Tensor torsion_hat;
  Tensor non_metricity_hat;
  Tensor alpha_star;
  bool xi_parallel = false;
  bool xi_unit = false;
  std::optional<Rat> constant_sectional;
  std::optional<Rat> constant_sectional_hat;
  std::optional<bool> projective_equal;  // dim 3 only

  static Tables of(const GeometryAnalysis& analysis);
};

/// Deterministic report document. Every section is optional except the
/// geometry, validation, version and digest.
struct Report {
  std::string command;
  GeometrySpec spec;
  ValidationReport validation;
  std::optional<Tables> tables;
  std::optional<Suite> suite;
  std::vector<ProbeResult> probes;
  std::vector<SolitonVerdict> solitons;
  std::string version = kVersion;
  std::string input_digest;
};

Report validate_report(const GeometrySpec& spec, const std::vector<std::string>& notes = {});
Report compute_report(const GeometrySpec& spec, const std::vector<std::string>& notes = {});
Report probe_report(const GeometrySpec& spec, Suite suite, const std::vector<std::string>& ids = {},
                    const std::vector<std::string>& notes = {});
Report soliton_report(const GeometrySpec& spec, const SolitonProblem& problem,
                      const std::vector<std::string>& notes = {});

/// Full suite run (general, parallel or all) on a validated geometry.
Report run_suite(const GeometrySpec& spec, Suite suite);

Json report_to_json(const Report& report);
Report report_from_json(const Json& j);

std::string render_text(const Report& report);
/// Pretty-printed JSON with a trailing newline.
std::string render_json(const Report& report);

/// 0: all pass/skipped (and paper-mismatch unless strict); 1: a Fail (or a
/// paper-mismatch under strict); 2: validation failure.
int exit_code(const Report& report, bool strict);

/// Renders a constant-component vector as a combination of basis vectors, e.g. "-k1 + 1/2 k3".
std::string format_vector(const Tensor& v, const std::string& label);

}  // namespace sscurv
