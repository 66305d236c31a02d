#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sscurv/connection.hpp"
#include "sscurv/curvature.hpp"
#include "sscurv/geometry.hpp"

namespace sscurv {

/// Everything the probes need, computed once per geometry.
struct GeometryAnalysis {
  GeometrySpec spec;
  Connection lc;
  Connection hat;
  CurvatureBundle curv;
  CurvatureBundle hat_curv;
  Tensor alpha;  // alpha*
  bool parallel = false;
  bool unit = false;

  /// Throws DegenerateMetricError for a singular metric. Assumes validation
  /// already passed.
  static GeometryAnalysis of(const GeometrySpec& spec);

  /// Standing hypothesis of the identity chain: xi parallel and unit.
  [[nodiscard]] bool parallel_unit() const { return parallel && unit; }
};

enum class ProbeStatus { Pass, Fail, Skipped, PaperMismatch };

std::string_view to_string(ProbeStatus status);

/// A secondary comparison inside one probe (e.g. the Q xi half of B13).
struct ProbePart {
  std::string label;
  Tensor lhs;
  Tensor rhs;
};

struct ProbeResult {
  std::string id;
  ProbeStatus status = ProbeStatus::Skipped;
  std::string note;
  Tensor lhs;
  Tensor rhs;
  std::vector<ProbePart> parts;
  Rat max_abs_deviation;
};

enum class Suite { General, Parallel, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

/// Probe ids in suite order.
const std::vector<std::string>& general_probe_ids();
const std::vector<std::string>& parallel_probe_ids();
std::vector<std::string> suite_probe_ids(Suite suite);
bool is_known_probe(std::string_view id);

/// Probes whose failure is reported as PaperMismatch rather than Fail.
bool is_discrepancy_probe(std::string_view id);

/// Evaluates one identity probe. Throws Error for an unknown id.
ProbeResult probe(const GeometryAnalysis& analysis, std::string_view id);

std::vector<ProbeResult> run_probes(const GeometryAnalysis& analysis, const std::vector<std::string>& ids);

/// Builds a result from lhs/rhs (plus optional parts), setting status and deviation.
ProbeResult compare(std::string id, Tensor lhs, Tensor rhs, std::vector<ProbePart> parts = {},
                    std::string note = {});

ProbeResult skipped(std::string id, std::string reason);

}  // namespace sscurv
