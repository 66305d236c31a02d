#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sscurv/io.hpp"
#include "sscurv/probe.hpp"

namespace sscurv {

struct FuzzConfig {
  long count = 100;  // attempts, accepted or not
  std::uint64_t seed = 42;
  std::vector<Rat> pool = default_pool();
  bool require_parallel_xi = false;

  static std::vector<Rat> default_pool();
};

/// A probe that returned Fail, with the geometry that reproduces it.
struct FuzzCertificate {
  long attempt = 0;
  GeometrySpec spec;
  ProbeResult result;
};

struct StatusCounts {
  long pass = 0;
  long fail = 0;
  long skipped = 0;
  long paper_mismatch = 0;
  void add(ProbeStatus s);
};

struct FuzzReport {
  FuzzConfig config;
  long attempts = 0;
  long accepted = 0;
  long rejected_jacobi = 0;
  long rejected_not_parallel = 0;
  long accepted_parallel = 0;  // accepted with xi parallel and unit
  std::map<std::string, StatusCounts> per_probe;
  std::vector<FuzzCertificate> unexpected;
  /// Sorted, comma-joined set of paper-mismatch ids -> number of geometries.
  std::map<std::string, long> mismatch_sets;
  std::string version;
  std::string input_digest;

  [[nodiscard]] long fail_count() const;
};

/// The i-th geometry candidate of the stream for `seed` (deterministic).
class GeometryGenerator {
 public:
  GeometryGenerator(std::uint64_t seed, std::vector<Rat> pool);
  GeometrySpec next();

 private:
  std::uint64_t pick(std::uint64_t n);
  std::mt19937_64 rng_;
  std::vector<Rat> pool_;
  long index_ = 0;
};

FuzzReport fuzz(const FuzzConfig& config);

Json fuzz_to_json(const FuzzReport& report);
std::string render_fuzz_text(const FuzzReport& report);
std::string render_fuzz_json(const FuzzReport& report);
int exit_code(const FuzzReport& report, bool strict);

}  // namespace sscurv
