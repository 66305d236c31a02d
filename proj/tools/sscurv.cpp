// sscurv: exact curvature of frame geometries with a semi-symmetric
// non-metric connection.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sscurv/builtin.hpp"
#include "sscurv/error.hpp"
#include "sscurv/fuzz.hpp"
#include "sscurv/io.hpp"
#include "sscurv/report.hpp"

namespace {

using namespace sscurv;

constexpr int kExitInput = 2;

struct Source {
  std::string file;
  std::string builtin;
};

struct Output {
  std::string format = "text";
  std::string path;
  bool strict = false;
};

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("geometry", src.file, "Geometry JSON file");
  cmd->add_option("--builtin", src.builtin, "Built-in geometry (example1, h2xr, flat)");
}

void add_output(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("-o,--output", out.path, "Write the report to a file instead of stdout");
  cmd->add_flag("--strict", out.strict, "Treat paper-mismatch results as failures");
}

ParsedGeometry load(const Source& src) {
  if (!src.file.empty() && !src.builtin.empty()) throw InputError("give either a geometry file or --builtin, not both");
  if (!src.builtin.empty()) return {builtin(src.builtin), std::nullopt, {}};
  if (src.file.empty()) throw InputError("no geometry given (pass a file or --builtin NAME)");
  return parse_geometry_file(src.file);
}

void emit(const std::string& text, const Output& out) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + out.path + "'");
  f << text;
}

int finish(const Report& report, const Output& out) {
  emit(out.format == "json" ? render_json(report) : render_text(report), out);
  if (!report.validation.ok()) {
    if (const auto* c = report.validation.first_failure()) std::cerr << "sscurv: invalid geometry: " << c->detail << "\n";
  }
  return exit_code(report, out.strict);
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> ids;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (!cur.empty()) ids.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact curvature, identity probes and soliton checks for frame geometries"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  Source src;
  Output out;

  auto* validate_cmd = app.add_subcommand("validate", "Check structure constants, metric and xi");
  auto* compute_cmd = app.add_subcommand("compute", "Connection, curvature, torsion and non-metricity tables");
  auto* probe_cmd = app.add_subcommand("probe", "Run identity probes");
  auto* soliton_cmd = app.add_subcommand("soliton", "Evaluate a soliton equation at a 2-jet");
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Run the probe suite over random geometries");
  auto* builtin_cmd = app.add_subcommand("builtin", "Print a built-in geometry as JSON");

  for (auto* cmd : {validate_cmd, compute_cmd, probe_cmd, soliton_cmd}) {
    add_source(cmd, src);
    add_output(cmd, out);
  }
  add_output(fuzz_cmd, out);

  std::string suite_name = "all";
  std::string ids;
  probe_cmd->add_option("--suite", suite_name, "general, parallel or all")
      ->check(CLI::IsMember({"general", "parallel", "all"}));
  probe_cmd->add_option("--ids", ids, "Comma-separated probe ids (overrides --suite)");

  std::string kind_name = "ricci";
  std::string lambda = "0";
  long m = 0;
  std::string jet_path;
  soliton_cmd->add_option("--type", kind_name, "ricci, yamabe, einstein or mquasi")
      ->check(CLI::IsMember({"ricci", "yamabe", "einstein", "mquasi"}));
  soliton_cmd->add_option("--lambda", lambda, "Soliton constant p/q");
  soliton_cmd->add_option("--m", m, "m for the m-quasi Einstein equation");
  soliton_cmd->add_option("--jet", jet_path, "Jet file {d, dd}; defaults to the geometry's jet or zero");

  FuzzConfig fcfg;
  std::string pool;
  fuzz_cmd->add_option("--seed", fcfg.seed, "Generator seed");
  fuzz_cmd->add_option("--count", fcfg.count, "Number of candidate geometries")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--pool", pool, "Comma-separated coefficient pool (default -2,-1,-1/2,0,1/2,1,2)");
  fuzz_cmd->add_flag("--require-parallel", fcfg.require_parallel_xi, "Keep only geometries with xi parallel");

  std::string builtin_name;
  builtin_cmd->add_option("name", builtin_name, "example1, h2xr or flat; omit to list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*builtin_cmd) {
      if (builtin_name.empty()) {
        for (auto n : builtin_names()) std::cout << n << "\n";
        return 0;
      }
      std::cout << geometry_to_json(builtin(builtin_name)).dump(2) << "\n";
      return 0;
    }
    if (*fuzz_cmd) {
      if (!pool.empty()) {
        fcfg.pool.clear();
        for (const auto& p : split_ids(pool)) fcfg.pool.push_back(Rat::parse(p));
      }
      const auto rep = fuzz(fcfg);
      emit(out.format == "json" ? render_fuzz_json(rep) : render_fuzz_text(rep), out);
      return exit_code(rep, out.strict);
    }

    const auto parsed = load(src);
    if (*validate_cmd) return finish(validate_report(parsed.spec, parsed.notes), out);
    if (*compute_cmd) return finish(compute_report(parsed.spec, parsed.notes), out);
    if (*probe_cmd) {
      return finish(probe_report(parsed.spec, *parse_suite(suite_name), split_ids(ids), parsed.notes), out);
    }
    if (*soliton_cmd) {
      SolitonProblem problem;
      problem.kind = *parse_soliton_kind(kind_name);
      problem.lambda = Rat::parse(lambda);
      problem.m = m;
      if (!jet_path.empty()) {
        problem.jet = parse_jet_file(jet_path, parsed.spec.dim());
      } else {
        problem.jet = parsed.jet.value_or(ScalarJet::zero(parsed.spec.dim()));
      }
      return finish(soliton_report(parsed.spec, problem, parsed.notes), out);
    }
  } catch (const InputError& e) {
    std::cerr << "sscurv: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "sscurv: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
