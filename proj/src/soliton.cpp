#include "sscurv/soliton.hpp"

#include <array>

#include "sscurv/error.hpp"

namespace sscurv {

namespace {

constexpr std::array<SignConvention, 4> kConventions = {{
    {SolitonKind::Ricci, Classification::Shrinking, Classification::Expanding,
     "shrinking, expanding or steady as lambda is negative, positive or zero"},
    {SolitonKind::Yamabe, Classification::Shrinking, Classification::Expanding,
     "reuses the m-quasi Einstein convention"},
    {SolitonKind::Einstein, Classification::Shrinking, Classification::Expanding,
     "reuses the m-quasi Einstein convention"},
    {SolitonKind::MQuasi, Classification::Shrinking, Classification::Expanding,
     "expanding for lambda > 0, steady for lambda = 0, shrinking for lambda < 0"},
}};

void require_problem(const GeometryAnalysis& a, const SolitonProblem& p) {
  if (p.kind == SolitonKind::MQuasi && p.m == 0) throw InputError("m-quasi Einstein soliton needs m != 0");
  require_valid_jet(p.jet, a.spec.frame);
}

// S_hat(e_i, Df).
Tensor ricci_on_gradient(const GeometryAnalysis& a, const Tensor& grad) {
  const int n = a.spec.dim();
  Tensor out(0, 1, n);
  for (int i = 0; i < n; ++i) {
    Rat s;
    for (int k = 0; k < n; ++k) s += a.hat_curv.ricci(i, k) * grad(k);
    out(i) = s;
  }
  return out;
}

ProbeResult probe_m61(const GeometryAnalysis& a, const SolitonProblem& p) {
  const int n = a.spec.dim();
  const Tensor grad = gradient(p.jet, a.spec.metric);
  const Tensor& Rh = a.hat_curv.riemann;
  const Tensor& Qh = a.hat_curv.ricci_op;
  const Tensor dq = covariant_derivative_operator(a.hat, Qh);  // (l; direction, argument)
  const Rat inv_m = Rat(1) / Rat(p.m);
  const Rat lam_m = p.lambda * inv_m;

  Tensor lhs(1, 2, n);
  Tensor rhs(1, 2, n);
  for (int l = 0; l < n; ++l) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Rat s;
        for (int k = 0; k < n; ++k) s += Rh(l, k, i, j) * grad(k);
        lhs(l, i, j) = s;
        Rat r = dq(l, j, i) - dq(l, i, j);
        r += lam_m * (p.jet.d(j) * (l == i ? Rat(1) : Rat(0)) - p.jet.d(i) * (l == j ? Rat(1) : Rat(0)));
        r += inv_m * (p.jet.d(i) * Qh(l, j) - p.jet.d(j) * Qh(l, i));
        rhs(l, i, j) = r;
      }
    }
  }
  return compare("M61", lhs, rhs);
}

ProbeResult probe_m68(const GeometryAnalysis& a, const SolitonProblem& p) {
  const Rat coeff = Rat(2 * p.m) + a.hat_curv.scalar - Rat(2) * p.lambda + Rat(2);
  const Rat xi_f = directional(p.jet, a.spec.distinguished.xi);
  return compare("M68", Tensor::scalar(coeff * xi_f), Tensor::scalar(Rat(0)), {},
                 "coefficient 2m + r_hat - 2 lambda + 2 = " + coeff.str() + ", xi f = " + xi_f.str());
}

std::vector<std::string> proof_step_ids(SolitonKind kind) {
  switch (kind) {
    case SolitonKind::Ricci:
      return {"C4"};
    case SolitonKind::Yamabe:
      return {"Y44"};
    case SolitonKind::Einstein:
      return {"E54"};
    case SolitonKind::MQuasi:
      return {"M61", "M68"};
  }
  return {};
}

std::string hypotheses_note(const GeometryAnalysis& a) {
  std::string note;
  auto add = [&](const std::string& s) { note += (note.empty() ? "" : ", ") + s; };
  if (a.spec.dim() != 3) add("dim != 3");
  if (a.spec.distinguished.degenerate) add("psi = 0");
  if (!a.parallel && !a.spec.distinguished.degenerate) add("xi not parallel");
  if (!a.unit) add("xi not unit");
  return note;
}

}  // namespace

std::optional<SolitonKind> parse_soliton_kind(std::string_view name) {
  if (name == "ricci") return SolitonKind::Ricci;
  if (name == "yamabe") return SolitonKind::Yamabe;
  if (name == "einstein") return SolitonKind::Einstein;
  if (name == "mquasi") return SolitonKind::MQuasi;
  return std::nullopt;
}

std::string_view to_string(SolitonKind kind) {
  switch (kind) {
    case SolitonKind::Ricci:
      return "ricci";
    case SolitonKind::Yamabe:
      return "yamabe";
    case SolitonKind::Einstein:
      return "einstein";
    case SolitonKind::MQuasi:
      return "mquasi";
  }
  return "ricci";
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Shrinking:
      return "shrinking";
    case Classification::Steady:
      return "steady";
    case Classification::Expanding:
      return "expanding";
  }
  return "steady";
}

std::string_view to_string(ConclusionOutcome outcome) {
  switch (outcome) {
    case ConclusionOutcome::Holds:
      return "holds";
    case ConclusionOutcome::OutsideHypotheses:
      return "outside-hypotheses";
    case ConclusionOutcome::NotIntegrable:
      return "not-integrable";
    case ConclusionOutcome::NotCertified:
      return "not-certified";
    case ConclusionOutcome::NotEvaluated:
      return "not-evaluated";
  }
  return "not-evaluated";
}

const SignConvention& sign_convention(SolitonKind kind) {
  for (const auto& c : kConventions) {
    if (c.kind == kind) return c;
  }
  return kConventions.front();
}

Classification classify(SolitonKind kind, const Rat& lambda) {
  const auto& c = sign_convention(kind);
  if (lambda.sign() < 0) return c.negative;
  if (lambda.sign() > 0) return c.positive;
  return Classification::Steady;
}

Tensor lc_hessian(const ScalarJet& jet, const Connection& lc) {
  const int n = lc.dim();
  Tensor h = jet.dd;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) h(i, j) -= lc.gamma(k, i, j) * jet.d(k);
    }
  }
  return h;
}

Tensor hat_hessian(const ScalarJet& jet, const Connection& lc, const DistinguishedField& dist,
                   const MetricFrame& metric) {
  return lc_hessian(jet, lc) + metric.g * directional(jet, dist.xi);
}

Tensor hat_hessian_one_form(const ScalarJet& jet, const Connection& lc, const DistinguishedField& dist) {
  return lc_hessian(jet, lc) - outer(jet.d, dist.psi);
}

Tensor soliton_residual(const GeometryAnalysis& a, const SolitonProblem& p) {
  require_problem(a, p);
  const auto& g = a.spec.metric.g;
  const Tensor h = hat_hessian(p.jet, a.lc, a.spec.distinguished, a.spec.metric);
  const Tensor& s_hat = a.hat_curv.ricci;
  const Rat& r_hat = a.hat_curv.scalar;
  switch (p.kind) {
    case SolitonKind::Ricci:
      return h + s_hat + g * p.lambda;
    case SolitonKind::Yamabe:
      return h - g * (r_hat - p.lambda);
    case SolitonKind::Einstein:
      return s_hat - g * (r_hat * Rat(1, 2)) + h + g * p.lambda;
    case SolitonKind::MQuasi:
      return s_hat - g * p.lambda + h - outer(p.jet.d, p.jet.d) * (Rat(1) / Rat(p.m));
  }
  throw Error("unknown soliton kind");
}

SolitonVerdict residual(const GeometryAnalysis& a, const SolitonProblem& p) {
  SolitonVerdict v;
  v.residual = soliton_residual(a, p);
  v.problem = p;
  v.hessian = hat_hessian(p.jet, a.lc, a.spec.distinguished, a.spec.metric);
  v.is_soliton = v.residual.is_zero();
  v.classification = classify(p.kind, p.lambda);
  return v;
}

std::vector<ProbeResult> proof_step_probes(const GeometryAnalysis& a, const SolitonProblem& p) {
  const auto ids = proof_step_ids(p.kind);
  std::vector<ProbeResult> out;
  if (!soliton_residual(a, p).is_zero()) {
    for (const auto& id : ids) out.push_back(skipped(id, "hypothesis: soliton equation not satisfied"));
    return out;
  }
  const int n = a.spec.dim();
  const Tensor grad = gradient(p.jet, a.spec.metric);
  for (const auto& id : ids) {
    if (id == "C4" || id == "Y44" || id == "E54") {
      // The right-hand sides are multiples of U(r_hat), which vanishes for constant r_hat.
      out.push_back(compare(id, ricci_on_gradient(a, grad), Tensor(0, 1, n), {},
                            "r_hat is constant, so the right-hand side vanishes"));
    } else if (id == "M61") {
      out.push_back(probe_m61(a, p));
    } else if (id == "M68") {
      out.push_back(probe_m68(a, p));
    }
  }
  return out;
}

ConclusionReport conclusion_check(const GeometryAnalysis& a, const SolitonProblem& p) {
  ConclusionReport rep;
  const Rat& r_hat = a.hat_curv.scalar;
  const bool jet_zero = p.jet.is_zero();
  const auto kappa = constant_sectional(a.hat_curv, a.spec.metric);
  const std::string kappa_name =
      kappa ? "constant sectional curvature (kappa = " + kappa->str() + ")" : "constant sectional curvature";

  switch (p.kind) {
    case SolitonKind::Ricci:
      rep.theorem = "gradient Ricci soliton => constant sectional curvature";
      rep.conjunctive = true;
      rep.checks = {{kappa_name, kappa.has_value()}, {"jet = 0", jet_zero}};
      break;
    case SolitonKind::Yamabe:
      rep.theorem = "gradient Yamabe soliton => constant scalar curvature or trivial";
      rep.checks = {{"r_hat = 2", r_hat == Rat(2)}, {"trivial (jet = 0)", jet_zero}};
      break;
    case SolitonKind::Einstein:
      rep.theorem = "gradient Einstein soliton => constant scalar or constant sectional curvature";
      rep.checks = {{"r_hat = 0", r_hat.is_zero()}, {kappa_name, kappa.has_value()}};
      break;
    case SolitonKind::MQuasi:
      rep.theorem = "gradient m-quasi Einstein soliton => expanding or constant sectional curvature";
      rep.checks = {{"lambda = m + 2", p.lambda == Rat(p.m + 2)}, {kappa_name, kappa.has_value()}};
      rep.side_condition = Rat(2 * p.m) + r_hat - Rat(2) * p.lambda + Rat(2);
      break;
  }

  rep.hypotheses_note = hypotheses_note(a);
  rep.hypotheses_hold = rep.hypotheses_note.empty();
  if (p.kind == SolitonKind::MQuasi && rep.side_condition->is_zero()) {
    rep.hypotheses_hold = false;
    rep.hypotheses_note += std::string(rep.hypotheses_note.empty() ? "" : ", ") + "2m + r_hat - 2 lambda + 2 = 0";
  }

  bool holds = rep.conjunctive;
  for (const auto& c : rep.checks) holds = rep.conjunctive ? (holds && c.holds) : (holds || c.holds);

  auto holding = [&] {
    std::string s;
    for (const auto& c : rep.checks) {
      if (c.holds) s += (s.empty() ? "" : ", ") + c.name;
    }
    return s;
  };

  if (!soliton_residual(a, p).is_zero()) {
    rep.outcome = ConclusionOutcome::NotEvaluated;
    rep.message = "residual is nonzero; not a soliton instance";
  } else if (holds) {
    rep.outcome = ConclusionOutcome::Holds;
    rep.message = "conclusion holds: " + holding();
  } else if (!rep.hypotheses_hold) {
    rep.outcome = ConclusionOutcome::OutsideHypotheses;
    rep.message = "conclusion disjunct not satisfied; geometry outside theorem hypotheses (" + rep.hypotheses_note + ")";
  } else {
    std::string failing;
    for (const auto& step : proof_step_probes(a, p)) {
      if (step.status == ProbeStatus::Fail) failing += (failing.empty() ? "" : ", ") + step.id;
    }
    if (!failing.empty()) {
      rep.outcome = ConclusionOutcome::NotIntegrable;
      rep.message = "proof step " + failing + " fails, so this jet does not extend to a soliton; conclusion not implied";
    } else {
      rep.outcome = ConclusionOutcome::NotCertified;
      rep.message = "conclusion not satisfied at this 2-jet; a pointwise jet cannot certify the soliton equation on an open set";
    }
  }
  return rep;
}

SolitonVerdict analyze_soliton(const GeometryAnalysis& a, const SolitonProblem& p) {
  SolitonVerdict v = residual(a, p);
  v.proof_steps = proof_step_probes(a, p);
  v.conclusion = conclusion_check(a, p);
  return v;
}

}  // namespace sscurv
