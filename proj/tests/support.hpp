#pragma once

#include <random>
#include <vector>

#include "sscurv/fuzz.hpp"
#include "sscurv/geometry.hpp"
#include "sscurv/tensor.hpp"

namespace testing {

using namespace sscurv;

inline Tensor random_tensor(std::mt19937_64& rng, int upper, int lower, int dim) {
  Tensor t(upper, lower, dim);
  std::vector<Rat> c;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const long num = static_cast<long>(rng() % 9) - 4;
    const long den = static_cast<long>(rng() % 3) + 1;
    c.emplace_back(num, den);
  }
  return Tensor::from_components(upper, lower, dim, c);
}

/// Jacobi-valid geometries from the fuzz stream.
inline std::vector<GeometrySpec> valid_geometries(std::uint64_t seed, int wanted, bool parallel_only = false) {
  GeometryGenerator gen(seed, FuzzConfig::default_pool());
  std::vector<GeometrySpec> out;
  for (int attempts = 0; static_cast<int>(out.size()) < wanted && attempts < 200000; ++attempts) {
    GeometrySpec spec = gen.next();
    if (find_jacobi_violation(spec.frame)) continue;
    if (parallel_only) {
      const auto a = GeometryAnalysis::of(spec);
      if (!a.parallel_unit()) continue;
    }
    out.push_back(std::move(spec));
  }
  return out;
}

/// Solves A x = b exactly; returns false if A is singular or the system is inconsistent.
inline bool solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b, std::vector<Rat>& x) {
  const std::size_t rows = a.size();
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rat inv = Rat(1) / a[r][c];
    for (auto& v : a[r]) v *= inv;
    b[r] *= inv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || a[q][c].is_zero()) continue;
      const Rat f = a[q][c];
      for (std::size_t k = 0; k < cols; ++k) a[q][k] -= f * a[r][k];
      b[q] -= f * b[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t q = r; q < rows; ++q) {
    if (!b[q].is_zero()) return false;
  }
  if (r != cols) return false;
  x.assign(cols, Rat(0));
  for (std::size_t q = 0; q < r; ++q) x[pivot_col[q]] = b[q];
  return true;
}

}  // namespace testing
