#include <doctest.h>

#include <algorithm>

#include "sscurv/builtin.hpp"
#include "sscurv/error.hpp"
#include "sscurv/geometry.hpp"

using namespace sscurv;

namespace {

GeometrySpec with_brackets(const std::vector<BracketEntry>& entries) {
  GeometrySpec s = builtin("flat");
  s.frame = FrameAlgebra::from_brackets(3, entries, nullptr);
  return s;
}

}  // namespace

TEST_CASE("antisymmetric completion writes a note") {
  std::vector<std::string> notes;
  auto f = FrameAlgebra::from_brackets(3, {{0, 2, 0, Rat(-1)}}, &notes);
  CHECK(f.c(0, 0, 2) == Rat(-1));
  CHECK(f.c(0, 2, 0) == Rat(1));
  REQUIRE(notes.size() == 1);
  CHECK(notes[0].find("C^1_{31}") != std::string::npos);
}

TEST_CASE("contradictory and diagonal brackets are input errors") {
  CHECK_THROWS_AS(FrameAlgebra::from_brackets(3, {{0, 1, 0, Rat(1)}, {1, 0, 0, Rat(1)}}, nullptr), InputError);
  CHECK_THROWS_AS(FrameAlgebra::from_brackets(3, {{1, 1, 0, Rat(1)}}, nullptr), InputError);
  // Consistent mirror entries are fine.
  CHECK_NOTHROW(FrameAlgebra::from_brackets(3, {{0, 1, 0, Rat(1)}, {1, 0, 0, Rat(-1)}}, nullptr));
}

TEST_CASE("builtins validate") {
  for (auto name : builtin_names()) {
    CAPTURE(name);
    CHECK(validate(builtin(name)).ok());
  }
  CHECK_THROWS_AS(builtin("sphere"), InputError);
}

TEST_CASE("the commonly quoted counterexample actually satisfies Jacobi") {
  // [e1,e2] = e1, [e1,e3] = e2, [e2,e3] = e3: the cyclic sum cancels.
  auto s = with_brackets({{0, 1, 0, Rat(1)}, {0, 2, 1, Rat(1)}, {1, 2, 2, Rat(1)}});
  CHECK_FALSE(find_jacobi_violation(s.frame).has_value());
}

TEST_CASE("Jacobi violation names the triple") {
  // [e1,e2] = e3, [e1,e3] = e1: [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = 0 + 0 - [e1,e2] = -e3.
  auto s = with_brackets({{0, 1, 2, Rat(1)}, {0, 2, 0, Rat(1)}});
  auto v = find_jacobi_violation(s.frame);
  REQUIRE(v.has_value());
  CHECK(v->i == 0);
  CHECK(v->j == 1);
  CHECK(v->k == 2);
  CHECK(v->l == 2);
  CHECK(v->value == Rat(-1));
  auto report = validate(s);
  CHECK_FALSE(report.ok());
  REQUIRE(report.first_failure() != nullptr);
  CHECK(report.first_failure()->name == "jacobi");
  CHECK(report.first_failure()->detail.find("(1,2,3)") != std::string::npos);
}

TEST_CASE("metric checks") {
  auto s = builtin("flat");
  SUBCASE("asymmetric") {
    const auto g = Tensor::from_components(0, 2, 3, {Rat(1), Rat(1, 2), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)});
    s.metric.g = g;
    CHECK(validate(s).find("metric-symmetric")->passed == false);
  }
  SUBCASE("indefinite") {
    s.metric = MetricFrame::from(Tensor::from_components(
        0, 2, 3, {Rat(1), Rat(2), Rat(0), Rat(2), Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)}));
    s.distinguished = DistinguishedField::from(s.distinguished.xi, s.metric);
    const auto* c = validate(s).find("metric-positive-definite");
    CHECK_FALSE(c->passed);
    CHECK(c->detail == std::string("leading principal minor of order 2 is -3"));
  }
  SUBCASE("singular") {
    CHECK_THROWS_AS(MetricFrame::from(Tensor(0, 2, 3)), DegenerateMetricError);
  }
}

TEST_CASE("psi is the metric dual of xi") {
  auto m = MetricFrame::from(
      Tensor::from_components(0, 2, 3, {Rat(4), Rat(0), Rat(0), Rat(0), Rat(1), Rat(1, 2), Rat(0), Rat(1, 2), Rat(1)}));
  auto d = DistinguishedField::from(Tensor::from_components(1, 0, 3, {Rat(1, 2), Rat(0), Rat(1)}), m);
  CHECK(d.psi(0) == Rat(2));
  CHECK(d.psi(1) == Rat(1, 2));
  CHECK(d.psi(2) == Rat(1));
  CHECK_FALSE(d.unit);  // g(xi,xi) = 1 + 1 = 2
  auto zero = DistinguishedField::from(Tensor(1, 0, 3), m);
  CHECK(zero.degenerate);
}

TEST_CASE("jet consistency follows the brackets") {
  auto s = builtin("h2xr");  // [e1,e2] = -e1
  ScalarJet jet = ScalarJet::zero(3);
  jet.d(0) = Rat(1);
  CHECK_FALSE(jet_violations(jet, s.frame).empty());
  jet.dd(0, 1) = Rat(-1);  // dd_12 - dd_21 = C^1_12 d_1 = -1
  CHECK(jet_violations(jet, s.frame).empty());
  CHECK_NOTHROW(require_valid_jet(jet, s.frame));
  jet.dd(1, 0) = Rat(5);
  CHECK_THROWS_AS(require_valid_jet(jet, s.frame), InputError);
}
