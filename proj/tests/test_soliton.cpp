#include <doctest.h>

#include "sscurv/builtin.hpp"
#include "sscurv/error.hpp"
#include "sscurv/soliton.hpp"
#include "support.hpp"

using namespace sscurv;

namespace {

GeometrySpec flat_psi0() {
  auto s = builtin("flat");
  s.distinguished = DistinguishedField::from(Tensor(1, 0, 3), s.metric);
  return s;
}

SolitonProblem problem(SolitonKind kind, Rat lambda, ScalarJet jet, long m = 0) {
  SolitonProblem p;
  p.kind = kind;
  p.lambda = lambda;
  p.jet = std::move(jet);
  p.m = m;
  return p;
}

Tensor diag(Rat a, Rat b, Rat c) { return Tensor::from_components(0, 2, 3, {a, 0, 0, 0, b, 0, 0, 0, c}); }

// Random jet consistent with the brackets: pick d and a symmetric part, then
// add the antisymmetric part C^k_ij d_k / 2.
ScalarJet random_jet(std::mt19937_64& rng, const FrameAlgebra& frame) {
  ScalarJet jet = ScalarJet::zero(3);
  jet.d = testing::random_tensor(rng, 0, 1, 3);
  const auto a = testing::random_tensor(rng, 0, 2, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Rat anti;
      for (int k = 0; k < 3; ++k) anti += frame.c(k, i, j) * jet.d(k);
      jet.dd(i, j) = a(i, j) + a(j, i) + anti * Rat(1, 2);
    }
  }
  return jet;
}

}  // namespace

TEST_CASE("h2xr, zero jet, Yamabe with lambda 0 is a trivial soliton") {
  const auto v = analyze_soliton(GeometryAnalysis::of(builtin("h2xr")),
                                 problem(SolitonKind::Yamabe, Rat(0), ScalarJet::zero(3)));
  CHECK(v.is_soliton);
  CHECK(v.residual.is_zero());
  CHECK(v.classification == Classification::Steady);
  CHECK(v.conclusion.outcome == ConclusionOutcome::Holds);
  bool trivial = false;
  for (const auto& c : v.conclusion.checks) trivial = trivial || (c.name.find("trivial") != std::string::npos && c.holds);
  CHECK(trivial);
}

TEST_CASE("flat with psi = 0 and Hessian id is a shrinking Ricci soliton for lambda -1") {
  ScalarJet jet = ScalarJet::zero(3);
  jet.dd = diag(1, 1, 1);
  const auto v = analyze_soliton(GeometryAnalysis::of(flat_psi0()), problem(SolitonKind::Ricci, Rat(-1), jet));
  CHECK(v.is_soliton);
  CHECK(v.classification == Classification::Shrinking);
  CHECK(v.conclusion.outcome == ConclusionOutcome::OutsideHypotheses);
  CHECK(v.conclusion.hypotheses_note.find("psi = 0") != std::string::npos);
}

TEST_CASE("h2xr, zero jet, Ricci with lambda -2 leaves residual diag(-3,-3,0)") {
  const auto v = analyze_soliton(GeometryAnalysis::of(builtin("h2xr")),
                                 problem(SolitonKind::Ricci, Rat(-2), ScalarJet::zero(3)));
  CHECK_FALSE(v.is_soliton);
  CHECK(v.residual == diag(-3, -3, 0));
  CHECK(v.conclusion.outcome == ConclusionOutcome::NotEvaluated);
  for (const auto& p : v.proof_steps) CHECK(p.status == ProbeStatus::Skipped);
}

TEST_CASE("residual forms by hand on h2xr") {
  // S_hat = diag(-1,-1,2), r_hat = 0, zero jet.
  const auto a = GeometryAnalysis::of(builtin("h2xr"));
  const auto zero = ScalarJet::zero(3);
  CHECK(soliton_residual(a, problem(SolitonKind::Yamabe, Rat(3), zero)) == diag(3, 3, 3));
  CHECK(soliton_residual(a, problem(SolitonKind::Einstein, Rat(1), zero)) == diag(0, 0, 3));
  CHECK(soliton_residual(a, problem(SolitonKind::MQuasi, Rat(2), zero, 1)) == diag(-3, -3, 0));
}

TEST_CASE("m-quasi Einstein reports its side condition") {
  const auto a = GeometryAnalysis::of(builtin("h2xr"));
  const auto v = analyze_soliton(a, problem(SolitonKind::MQuasi, Rat(1), ScalarJet::zero(3), 3));
  REQUIRE(v.conclusion.side_condition.has_value());
  CHECK(*v.conclusion.side_condition == Rat(6));  // 2*3 + 0 - 2 + 2
}

TEST_CASE("invalid problems") {
  const auto a = GeometryAnalysis::of(builtin("h2xr"));
  CHECK_THROWS_AS(soliton_residual(a, problem(SolitonKind::MQuasi, Rat(1), ScalarJet::zero(3), 0)), InputError);
  ScalarJet bad = ScalarJet::zero(3);
  bad.d(0) = Rat(1);  // needs dd_12 - dd_21 = -1
  CHECK_THROWS_AS(soliton_residual(a, problem(SolitonKind::Ricci, Rat(0), bad)), InputError);
}

TEST_CASE("classification") {
  for (auto k : {SolitonKind::Ricci, SolitonKind::Yamabe, SolitonKind::Einstein, SolitonKind::MQuasi}) {
    CHECK(classify(k, Rat(-1, 2)) == Classification::Shrinking);
    CHECK(classify(k, Rat(0)) == Classification::Steady);
    CHECK(classify(k, Rat(3)) == Classification::Expanding);
  }
  CHECK(parse_soliton_kind("mquasi") == SolitonKind::MQuasi);
  CHECK_FALSE(parse_soliton_kind("kahler").has_value());
}

TEST_CASE("hat Hessian is symmetric and matches the vector form") {
  std::mt19937_64 rng(99);
  for (const auto& s : testing::valid_geometries(808, 40)) {
    CAPTURE(s.name);
    const auto lc = levi_civita(s.frame, s.metric);
    const auto hat = ssnmc(lc, s.distinguished);
    const auto jet = random_jet(rng, s.frame);
    REQUIRE(jet_violations(jet, s.frame).empty());
    const auto h = hat_hessian(jet, lc, s.distinguished, s.metric);
    CHECK(h == swap_lower(h, 0, 1));
    // (hat nabla_i Df)^a = e_i(Df^a) + hat Gamma^a_im Df^m, with e_i(Df^a) = g^ab dd_ib.
    const auto grad = gradient(jet, s.metric);
    for (int i = 0; i < 3; ++i) {
      Tensor w(1, 0, 3);
      for (int a = 0; a < 3; ++a) {
        Rat v;
        for (int b = 0; b < 3; ++b) v += s.metric.g_inv(a, b) * jet.dd(i, b);
        for (int m = 0; m < 3; ++m) v += hat.gamma(a, i, m) * grad(m);
        w(a) = v;
      }
      for (int j = 0; j < 3; ++j) CHECK(h(i, j) == s.metric.inner(w, basis_vector(3, j)));
    }
  }
}
