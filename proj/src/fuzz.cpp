#include "sscurv/fuzz.hpp"

#include <algorithm>
#include <sstream>

#include "sscurv/report.hpp"

namespace sscurv {

namespace {

bool positive_definite(const Tensor& g) {
  for (int k = 1; k <= g.dim(); ++k) {
    if (leading_minor(g, k).sign() <= 0) return false;
  }
  return true;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ",") + p;
  return out;
}

}  // namespace

std::vector<Rat> FuzzConfig::default_pool() {
  return {Rat(-2), Rat(-1), Rat(-1, 2), Rat(0), Rat(1, 2), Rat(1), Rat(2)};
}

void StatusCounts::add(ProbeStatus s) {
  switch (s) {
    case ProbeStatus::Pass: ++pass; break;
    case ProbeStatus::Fail: ++fail; break;
    case ProbeStatus::Skipped: ++skipped; break;
    case ProbeStatus::PaperMismatch: ++paper_mismatch; break;
  }
}

long FuzzReport::fail_count() const {
  long n = 0;
  for (const auto& [id, c] : per_probe) n += c.fail;
  return n;
}

GeometryGenerator::GeometryGenerator(std::uint64_t seed, std::vector<Rat> pool) : rng_(seed), pool_(std::move(pool)) {}

// Raw modulo keeps the stream identical across standard libraries.
std::uint64_t GeometryGenerator::pick(std::uint64_t n) { return rng_() % n; }

GeometrySpec GeometryGenerator::next() {
  constexpr int n = 3;
  GeometrySpec spec;
  spec.name = "fuzz-" + std::to_string(index_++);

  std::vector<BracketEntry> entries;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (pick(2) == 0 || pool_.empty()) continue;
        const Rat& v = pool_[pick(pool_.size())];
        if (!v.is_zero()) entries.push_back({i, j, k, v});
      }
    }
  }
  spec.frame = FrameAlgebra::from_brackets(n, entries, nullptr);

  static const Rat diag[] = {Rat(1, 4), Rat(1), Rat(4)};
  static const Rat off[] = {Rat(-1, 2), Rat(0), Rat(1, 2)};
  Tensor g(0, 2, n);
  do {
    g = Tensor(0, 2, n);
    for (int i = 0; i < n; ++i) g(i, i) = diag[pick(3)];
    if (pick(2) == 0) {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          g(i, j) = off[pick(3)];
          g(j, i) = g(i, j);
        }
      }
    }
  } while (!positive_definite(g));
  spec.metric = MetricFrame::from(g);

  // xi = +-e_k / sqrt(g_kk); every diagonal choice is a rational square.
  const int k = static_cast<int>(pick(n));
  const Rat root = g(k, k) == Rat(1, 4) ? Rat(1, 2) : (g(k, k) == Rat(4) ? Rat(2) : Rat(1));
  Tensor xi(1, 0, n);
  xi(k) = Rat(1) / root;
  if (pick(2) == 0) xi = -xi;
  spec.distinguished = DistinguishedField::from(xi, spec.metric);
  return spec;
}

FuzzReport fuzz(const FuzzConfig& config) {
  FuzzReport rep;
  rep.config = config;
  rep.version = kVersion;
  Json cfg = {{"count", config.count}, {"seed", config.seed}, {"require_parallel_xi", config.require_parallel_xi}};
  for (const auto& r : config.pool) cfg["pool"].push_back(rat_to_json(r));
  rep.input_digest = sha256_hex(cfg.dump());
  for (const auto& id : suite_probe_ids(Suite::All)) rep.per_probe[id];

  GeometryGenerator gen(config.seed, config.pool);
  for (long a = 0; a < config.count; ++a) {
    GeometrySpec spec = gen.next();
    ++rep.attempts;
    if (find_jacobi_violation(spec.frame)) {
      ++rep.rejected_jacobi;
      continue;
    }
    const auto analysis = GeometryAnalysis::of(spec);
    if (config.require_parallel_xi && !analysis.parallel) {
      ++rep.rejected_not_parallel;
      continue;
    }
    ++rep.accepted;
    if (analysis.parallel_unit()) ++rep.accepted_parallel;
    std::vector<std::string> mismatched;
    for (auto& result : run_probes(analysis, suite_probe_ids(Suite::All))) {
      rep.per_probe[result.id].add(result.status);
      if (result.status == ProbeStatus::PaperMismatch) mismatched.push_back(result.id);
      if (result.status == ProbeStatus::Fail) rep.unexpected.push_back({a, spec, std::move(result)});
    }
    if (!mismatched.empty()) ++rep.mismatch_sets[join(mismatched)];
  }
  return rep;
}

Json fuzz_to_json(const FuzzReport& r) {
  Json j;
  Json cfg = {{"count", r.config.count}, {"seed", r.config.seed}, {"require_parallel_xi", r.config.require_parallel_xi}};
  cfg["pool"] = Json::array();
  for (const auto& v : r.config.pool) cfg["pool"].push_back(rat_to_json(v));
  j["config"] = std::move(cfg);
  j["attempts"] = r.attempts;
  j["accepted"] = r.accepted;
  j["accepted_parallel"] = r.accepted_parallel;
  j["rejected"] = {{"jacobi", r.rejected_jacobi}, {"not_parallel", r.rejected_not_parallel}};
  Json probes = Json::array();
  // Suite order rather than map order.
  for (const auto& id : suite_probe_ids(Suite::All)) {
    const auto& c = r.per_probe.at(id);
    probes.push_back({{"id", id},
                      {"pass", c.pass},
                      {"fail", c.fail},
                      {"skipped", c.skipped},
                      {"paper-mismatch", c.paper_mismatch}});
  }
  j["probes"] = std::move(probes);
  Json sets = Json::array();
  for (const auto& [set, n] : r.mismatch_sets) sets.push_back({{"ids", set}, {"geometries", n}});
  j["mismatch_sets"] = std::move(sets);
  Json certs = Json::array();
  for (const auto& c : r.unexpected) {
    certs.push_back({{"attempt", c.attempt}, {"geometry", geometry_to_json(c.spec)}, {"probe", probe_to_json(c.result)}});
  }
  j["unexpected_fails"] = std::move(certs);
  j["version"] = r.version;
  j["input_digest"] = r.input_digest;
  return j;
}

std::string render_fuzz_json(const FuzzReport& r) { return fuzz_to_json(r).dump(2) + "\n"; }

std::string render_fuzz_text(const FuzzReport& r) {
  std::ostringstream os;
  os << "fuzz: seed " << r.config.seed << ", " << r.attempts << " attempts, pool {";
  for (std::size_t i = 0; i < r.config.pool.size(); ++i) os << (i ? ", " : "") << r.config.pool[i];
  os << "}" << (r.config.require_parallel_xi ? ", parallel xi required" : "") << "\n";
  os << "  accepted " << r.accepted << " (" << r.accepted_parallel << " with xi parallel), rejected "
     << r.rejected_jacobi << " by Jacobi";
  if (r.config.require_parallel_xi) os << ", " << r.rejected_not_parallel << " with xi not parallel";
  os << "\n\n  probe      pass   fail   skip   mismatch\n";
  for (const auto& id : suite_probe_ids(Suite::All)) {
    const auto& c = r.per_probe.at(id);
    char line[96];
    std::snprintf(line, sizeof line, "  %-8s %6ld %6ld %6ld %10ld\n", id.c_str(), c.pass, c.fail, c.skipped,
                  c.paper_mismatch);
    os << line;
  }
  if (!r.mismatch_sets.empty()) {
    os << "\n  paper-mismatch sets\n";
    for (const auto& [set, n] : r.mismatch_sets) os << "    {" << set << "}: " << n << " geometries\n";
  }
  if (!r.unexpected.empty()) {
    os << "\n  unexpected failures\n";
    for (const auto& c : r.unexpected) {
      os << "    attempt " << c.attempt << ", probe " << c.result.id << ": " << geometry_to_json(c.spec).dump() << "\n";
    }
  }
  os << "\n" << r.version << "  input " << r.input_digest << "\n";
  return os.str();
}

int exit_code(const FuzzReport& r, bool strict) {
  if (r.fail_count() > 0) return 1;
  if (strict) {
    for (const auto& [id, c] : r.per_probe) {
      if (c.paper_mismatch > 0) return 1;
    }
  }
  return 0;
}

}  // namespace sscurv
