#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sscurv/probe.hpp"

namespace sscurv {

enum class SolitonKind { Ricci, Yamabe, Einstein, MQuasi };
enum class Classification { Shrinking, Steady, Expanding };

std::optional<SolitonKind> parse_soliton_kind(std::string_view name);
std::string_view to_string(SolitonKind kind);
std::string_view to_string(Classification c);

struct SolitonProblem {
  SolitonKind kind = SolitonKind::Ricci;
  Rat lambda;
  long m = 0;  // MQuasi only; must be nonzero there
  ScalarJet jet;
};

/// Sign convention mapping lambda to a classification, per soliton kind.
struct SignConvention {
  SolitonKind kind;
  Classification negative;
  Classification positive;
  std::string_view note;
};

const SignConvention& sign_convention(SolitonKind kind);
Classification classify(SolitonKind kind, const Rat& lambda);

struct NamedCheck {
  std::string name;
  bool holds = false;
};

enum class ConclusionOutcome {
  Holds,              // the theorem's conclusion is satisfied
  OutsideHypotheses,  // conclusion fails but the theorem does not apply
  NotIntegrable,      // a proof-step identity fails, so the jet is not a genuine soliton
  NotCertified,       // hypotheses and proof steps hold, conclusion fails at this 2-jet
  NotEvaluated,       // residual is nonzero
};

std::string_view to_string(ConclusionOutcome outcome);

struct ConclusionReport {
  std::string theorem;
  bool hypotheses_hold = false;
  std::string hypotheses_note;
  bool conjunctive = false;  // Ricci: every check must hold; otherwise any one
  std::vector<NamedCheck> checks;
  std::optional<Rat> side_condition;  // MQuasi: 2m + r_hat - 2 lambda + 2
  ConclusionOutcome outcome = ConclusionOutcome::NotEvaluated;
  std::string message;
};

struct SolitonVerdict {
  SolitonProblem problem;
  Tensor hessian;
  Tensor residual;
  bool is_soliton = false;
  Classification classification = Classification::Steady;
  std::vector<ProbeResult> proof_steps;
  ConclusionReport conclusion;
};

/// H_ij = g(hat nabla_{e_i} Df, e_j) = dd_ij - Gamma^k_{ij} d_k + (xi f) g_ij.
Tensor hat_hessian(const ScalarJet& jet, const Connection& lc, const DistinguishedField& dist,
                   const MetricFrame& metric);

/// Levi-Civita Hessian dd_ij - Gamma^k_{ij} d_k.
Tensor lc_hessian(const ScalarJet& jet, const Connection& lc);

/// Diagnostic: (hat nabla_{e_i} df)(e_j) = Hess_ij - psi_j d_i, the covariant
/// derivative of the one-form df rather than of the vector Df.
Tensor hat_hessian_one_form(const ScalarJet& jet, const Connection& lc, const DistinguishedField& dist);

/// Residual tensor of the soliton equation. Throws InputError for an
/// inconsistent jet or m = 0 with MQuasi.
Tensor soliton_residual(const GeometryAnalysis& analysis, const SolitonProblem& problem);

/// Residual, soliton flag and classification (proof steps and conclusion left empty).
SolitonVerdict residual(const GeometryAnalysis& analysis, const SolitonProblem& problem);

std::vector<ProbeResult> proof_step_probes(const GeometryAnalysis& analysis, const SolitonProblem& problem);

ConclusionReport conclusion_check(const GeometryAnalysis& analysis, const SolitonProblem& problem);

/// residual + proof_step_probes + conclusion_check.
SolitonVerdict analyze_soliton(const GeometryAnalysis& analysis, const SolitonProblem& problem);

}  // namespace sscurv
