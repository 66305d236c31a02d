#include <doctest.h>

#include "sscurv/builtin.hpp"
#include "sscurv/error.hpp"
#include "sscurv/fuzz.hpp"
#include "sscurv/io.hpp"
#include "sscurv/report.hpp"
#include "support.hpp"

using namespace sscurv;

namespace {

const std::string kData = SSCURV_DATA_DIR;

bool same_geometry(const GeometrySpec& a, const GeometrySpec& b) {
  return a.name == b.name && a.label == b.label && a.frame.structure == b.frame.structure && a.metric.g == b.metric.g &&
         a.distinguished.xi == b.distinguished.xi && a.distinguished.psi == b.distinguished.psi;
}

std::string error_of(std::string_view text) {
  try {
    parse_geometry(text, "t.json");
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("shipped fixtures parse to the builtins") {
  for (auto name : builtin_names()) {
    CAPTURE(name);
    const auto parsed = parse_geometry_file(kData + "/" + std::string(name) + ".json");
    CHECK(same_geometry(parsed.spec, builtin(name)));
  }
}

TEST_CASE("a missing mirror constant is completed with a note") {
  const auto parsed = parse_geometry_file(kData + "/example1_mirror.json");
  CHECK(parsed.spec.frame.structure == builtin("example1").frame.structure);
  bool noted = false;
  for (const auto& n : parsed.notes) noted = noted || n.find("C^1_{31} = 1") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("geometry round-trips through JSON") {
  for (const auto& s : testing::valid_geometries(909, 30)) {
    const auto back = parse_geometry(geometry_to_json(s).dump(), "roundtrip");
    CHECK(same_geometry(back.spec, s));
  }
}

TEST_CASE("diagnostics name the line or the field") {
  CHECK(error_of("{\n  \"dim\": 3,\n  oops\n}").find("t.json:3:") == 0);
  const std::string base = R"({"name": "x", "dim": 3, "structure_constants": [], "xi": ["0","0","1"], "metric": )";
  CHECK(error_of(base + R"([["1","0","0"],["0","1","0"],["0","0",1.5]]})").find("metric[2][2]") != std::string::npos);
  CHECK(error_of(base + R"([["1","0","0"],["0","1","0"]]})").find("metric") != std::string::npos);
  CHECK(error_of(R"({"name": "x", "dim": 3, "structure_constants": [{"i": 1, "j": 4, "k": 1, "value": "1"}],
                     "metric": [["1","0","0"],["0","1","0"],["0","0","1"]], "xi": ["0","0","1"]})")
            .find("structure_constants[0].j") != std::string::npos);
  CHECK_THROWS_AS(parse_geometry_file(kData + "/malformed.json"), InputError);
  CHECK_THROWS_AS(parse_geometry_file(kData + "/does_not_exist.json"), InputError);
}

TEST_CASE("jets parse bare or embedded") {
  const auto g = parse_jet_file(kData + "/jets/gaussian.json", 3);
  CHECK(g.dd(0, 0) == Rat(1));
  const auto embedded = parse_geometry_file(kData + "/flat_psi0.json");
  REQUIRE(embedded.jet.has_value());
  CHECK(embedded.jet->dd == g.dd);
}

TEST_CASE("reports round-trip and render deterministically") {
  SolitonProblem p;
  p.kind = SolitonKind::MQuasi;
  p.lambda = Rat(1, 2);
  p.m = 2;
  p.jet = ScalarJet::zero(3);
  for (const auto& r : {compute_report(builtin("example1")), probe_report(builtin("h2xr"), Suite::All),
                        soliton_report(builtin("h2xr"), p), validate_report(builtin("flat"))}) {
    CAPTURE(r.command);
    const auto j = report_to_json(r);
    CHECK(report_to_json(report_from_json(j)) == j);
    CHECK(render_json(r) == render_json(report_from_json(j)));
    CHECK(render_text(r) == render_text(report_from_json(j)));
  }
  CHECK(render_json(probe_report(builtin("h2xr"), Suite::All)) == render_json(probe_report(builtin("h2xr"), Suite::All)));
}

TEST_CASE("report schema") {
  const auto j = report_to_json(probe_report(builtin("h2xr"), Suite::All));
  for (const auto* key : {"geometry", "validation", "tables", "probes", "solitons", "version", "input_digest"}) {
    CHECK(j.contains(key));
  }
  for (const auto& p : j.at("probes")) {
    CHECK(p.contains("id"));
    CHECK(p.contains("status"));
    CHECK(p.contains("lhs"));
    CHECK(p.contains("rhs"));
  }
  CHECK(j.at("input_digest").get<std::string>().size() == 64);
}

TEST_CASE("exit codes") {
  CHECK(exit_code(probe_report(builtin("h2xr"), Suite::All), false) == 0);
  CHECK(exit_code(probe_report(builtin("h2xr"), Suite::All), true) == 1);
  CHECK(exit_code(probe_report(builtin("example1"), Suite::All), true) == 0);
  auto bad = builtin("flat");
  bad.frame = FrameAlgebra::from_brackets(3, {{0, 1, 2, Rat(1)}, {0, 2, 0, Rat(1)}}, nullptr);
  CHECK(exit_code(validate_report(bad), false) == 2);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("fuzz is reproducible and counts every attempt") {
  FuzzConfig cfg;
  cfg.count = 200;
  cfg.seed = 42;
  const auto a = fuzz(cfg);
  const auto b = fuzz(cfg);
  CHECK(render_fuzz_json(a) == render_fuzz_json(b));
  CHECK(a.attempts == 200);
  CHECK(a.accepted + a.rejected_jacobi + a.rejected_not_parallel == 200);
  CHECK(a.fail_count() == 0);
  cfg.seed = 43;
  CHECK(render_fuzz_json(fuzz(cfg)) != render_fuzz_json(a));
}

TEST_CASE("fuzz with seed 42 and 100 attempts has no general-suite failures") {
  FuzzConfig cfg;
  cfg.count = 100;
  const auto r = fuzz(cfg);
  for (const auto& id : general_probe_ids()) CHECK(r.per_probe.at(id).fail == 0);
}

TEST_CASE("parallel-only fuzz accepts only parallel geometries") {
  FuzzConfig cfg;
  cfg.count = 2000;
  cfg.require_parallel_xi = true;
  const auto r = fuzz(cfg);
  CHECK(r.accepted > 0);
  CHECK(r.accepted == r.accepted_parallel);
  CHECK(r.per_probe.at("B8").pass == r.accepted);
  CHECK(r.per_probe.at("B9").pass == r.accepted);
  REQUIRE(r.mismatch_sets.size() == 1);
  CHECK(r.mismatch_sets.begin()->first == "B10,B17");
  CHECK(r.mismatch_sets.begin()->second == r.accepted);
}
